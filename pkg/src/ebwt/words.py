"""Alphabets, words, necklaces, and the basic combinatorics on them.

Words are tuples of contiguous integer codes 0..k-1 over an ordered alphabet;
display characters exist only at the rendering boundary.  Code order is the
lexicographic letter order, so comparing code tuples compares rendered words.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotPrimitiveError

LOWERCASE = "abcdefghijklmnopqrstuvwxyz"

# Return values of omega_compare.
LESS = -1
EQUAL = 0
GREATER = 1


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet: code i renders as ``letters[i]``.

    ``letters`` must be strictly increasing so that code order, rendered
    lexicographic order, and CLI code-point order all agree.
    """

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet needs at least one letter")
        if any(a >= b for a, b in zip(self.letters, self.letters[1:])):
            raise ValueError(f"alphabet letters must be strictly increasing: {self.letters!r}")

    @property
    def size(self) -> int:
        return len(self.letters)

    def code(self, char: str) -> int:
        i = self.letters.find(char)
        if i < 0:
            raise ValueError(f"character {char!r} not in alphabet {self.letters!r}")
        return i

    def word(self, text: str) -> Word:
        """Parse a rendered string into a Word over this alphabet."""
        return Word(self, tuple(self.code(c) for c in text))

    def render(self, codes) -> str:
        return "".join(self.letters[c] for c in codes)


def default_alphabet(k: int) -> Alphabet:
    """The k-letter alphabet a < b < c < ... used for generated words."""
    if not 1 <= k <= len(LOWERCASE):
        raise ValueError(f"default alphabet supports 1..{len(LOWERCASE)} letters, got {k}")
    return Alphabet(LOWERCASE[:k])


def from_text(text: str) -> Word:
    """Build a word over the alphabet inferred from its own characters."""
    return Alphabet("".join(sorted(set(text)))).word(text)


@dataclass(frozen=True, order=False)
class Word:
    """An immutable word: integer codes over a fixed alphabet."""

    alphabet: Alphabet
    codes: tuple[int, ...]

    def __post_init__(self):
        k = self.alphabet.size
        if any(not 0 <= c < k for c in self.codes):
            raise ValueError(f"code out of range for {k}-letter alphabet: {self.codes}")

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __getitem__(self, i) -> int:
        return self.codes[i]

    def __str__(self) -> str:
        return self.alphabet.render(self.codes)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def _check_comparable(self, other: Word):
        if self.alphabet != other.alphabet:
            raise ValueError("cannot compare words over different alphabets")

    def __lt__(self, other: Word) -> bool:
        self._check_comparable(other)
        return self.codes < other.codes

    def __le__(self, other: Word) -> bool:
        self._check_comparable(other)
        return self.codes <= other.codes

    def __gt__(self, other: Word) -> bool:
        return other < self

    def __ge__(self, other: Word) -> bool:
        return other <= self

    @property
    def text(self) -> str:
        return str(self)

    def content(self) -> frozenset[int]:
        """The set of letter codes occurring in the word."""
        return frozenset(self.codes)

    def count(self, code: int) -> int:
        return self.codes.count(code)


def _require_nonempty(w: Word, what: str):
    if len(w) == 0:
        raise ValueError(f"{what} is undefined for the empty word")


def conjugate_shift(w: Word) -> Word:
    """Move the first letter to the end: au -> ua."""
    _require_nonempty(w, "conjugate shift")
    return Word(w.alphabet, w.codes[1:] + w.codes[:1])


def prefix_function(codes) -> list[int]:
    """Longest proper border length per prefix (the classic failure table)."""
    pi = [0] * len(codes)
    j = 0
    for i in range(1, len(codes)):
        while j and codes[i] != codes[j]:
            j = pi[j - 1]
        if codes[i] == codes[j]:
            j += 1
        pi[i] = j
    return pi


def root(w: Word) -> Word:
    """The shortest r with w = r^t; primitive, and |r| divides |w|."""
    _require_nonempty(w, "root")
    n = len(w)
    p = n - prefix_function(w.codes)[n - 1]
    if n % p == 0:
        return Word(w.alphabet, w.codes[:p])
    return w


def is_primitive(w: Word) -> bool:
    """True iff w is not a proper power of a shorter word."""
    return len(root(w)) == len(w)


def has_border(w: Word) -> bool:
    """True iff some proper nonempty word is both prefix and suffix of w."""
    _require_nonempty(w, "border")
    return prefix_function(w.codes)[len(w) - 1] > 0


def least_rotation_index(codes) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    s = codes + codes
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


@dataclass(frozen=True, order=False)
class Necklace:
    """A conjugacy class of a primitive word, held by its Lyndon rotation."""

    lyndon: Word

    def __post_init__(self):
        w = self.lyndon
        if not is_primitive(w):
            raise NotPrimitiveError(f"necklace word must be primitive: {w}", root(w))
        if least_rotation_index(w.codes) != 0:
            raise ValueError(f"necklace representative is not the least rotation: {w}")

    def __len__(self) -> int:
        return len(self.lyndon)

    def __str__(self) -> str:
        return str(self.lyndon)

    def __repr__(self) -> str:
        return f"Necklace({str(self)!r})"

    def __lt__(self, other: Necklace) -> bool:
        return self.lyndon < other.lyndon

    def __le__(self, other: Necklace) -> bool:
        return self.lyndon <= other.lyndon

    @property
    def alphabet(self) -> Alphabet:
        return self.lyndon.alphabet

    def rotations(self) -> list[Word]:
        """All |w| distinct rotations, starting from the Lyndon word."""
        c = self.lyndon.codes
        return [Word(self.alphabet, c[i:] + c[:i]) for i in range(len(c))]


def lyndon_representative(w: Word) -> Necklace:
    """The necklace of a primitive word, canonicalized to its least rotation.

    Raises NotPrimitiveError (carrying root(w)) on a proper power: taking the
    root is the caller's decision, never an implicit one.
    """
    _require_nonempty(w, "necklace")
    if not is_primitive(w):
        raise NotPrimitiveError(f"word is not primitive: {w}", root(w))
    i = least_rotation_index(w.codes)
    return Necklace(Word(w.alphabet, w.codes[i:] + w.codes[:i]))


def omega_compare(u: Word, v: Word) -> int:
    """Order of the infinite powers u^omega vs v^omega: LESS, EQUAL or GREATER.

    By the Fine-Wilf periodicity theorem it suffices to compare prefixes of
    length |u| + |v| - gcd(|u|, |v|); EQUAL happens iff root(u) = root(v).
    """
    _require_nonempty(u, "omega comparison")
    _require_nonempty(v, "omega comparison")
    u._check_comparable(v)
    a, b = u.codes, v.codes
    la, lb = len(a), len(b)
    for i in range(la + lb - gcd(la, lb)):
        ca, cb = a[i % la], b[i % lb]
        if ca != cb:
            return LESS if ca < cb else GREATER
    return EQUAL


def cyclic_factors(w: Word, m: int) -> list[Word]:
    """The |w| length-m factors of w^omega starting at positions 0..|w|-1.

    Returned with multiplicity, in starting-position order.
    """
    _require_nonempty(w, "cyclic factor")
    if not 1 <= m <= len(w):
        raise ValueError(f"cyclic factor length must be in 1..{len(w)}, got {m}")
    doubled = w.codes + w.codes
    return [Word(w.alphabet, doubled[i:i + m]) for i in range(len(w))]
