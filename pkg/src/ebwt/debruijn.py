"""De Bruijn sets and words via the extended transform.

A word of length k^n whose length-k blocks are alphabet permutations inverts
to a de Bruijn set of span n, and conversely; the all-identity-block word
inverts to the necklaces of Lyndon words of length dividing n, whose sorted
concatenation is the lexicographically least de Bruijn word.  An independent
Lyndon-successor enumeration provides the cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .bwt import NecklaceMultiset, inverse_transform
from .errors import ResourceLimitError
from .words import Word, default_alphabet

DEFAULT_MAX_WORD_LENGTH = 2**24


def first_bad_block(w: Word, k: int, n: int) -> int | None:
    """Index of the first length-k block that is not an alphabet permutation,
    or None when all k^{n-1} blocks are.  Assumes |w| = k^n."""
    full = frozenset(range(k))
    for j in range(k ** (n - 1)):
        if frozenset(w.codes[j * k:(j + 1) * k]) != full:
            return j
    return None


def is_gamma(w: Word, k: int, n: int) -> bool:
    """True iff |w| = k^n and every length-k block permutes the alphabet."""
    return len(w) == k**n and first_bad_block(w, k, n) is None


@dataclass(frozen=True)
class GammaWord:
    """A length-k^n word whose k^{n-1} blocks each permute the alphabet."""

    word: Word
    span: int

    def __post_init__(self):
        k = self.word.alphabet.size
        if len(self.word) != k**self.span:
            raise ValueError(
                f"word length {len(self.word)} is not {k}^{self.span}"
            )
        bad = first_bad_block(self.word, k, self.span)
        if bad is not None:
            raise ValueError(f"block {bad} is not a permutation of the alphabet")

    @property
    def k(self) -> int:
        return self.word.alphabet.size


@dataclass(frozen=True)
class DeBruijnSet:
    """A set of necklaces of total length k^n covering A^n exactly once."""

    inner: NecklaceMultiset
    span: int


def is_debruijn_set(m: NecklaceMultiset, n: int) -> bool:
    """True iff the length-n power-prefixes of all rotations of m's necklaces
    are exactly the k^n words of A^n, each once."""
    k = m.alphabet.size
    if m.total_length != k**n:
        return False
    seen = set()
    for necklace, mult in m.entries:
        if mult != 1:
            return False
        reps = (n + len(necklace) - 1) // len(necklace)
        for rotation in necklace.rotations():
            prefix = (rotation.codes * reps)[:n]
            if prefix in seen:
                return False
            seen.add(prefix)
    return True


def debruijn_set_from_gamma(v: GammaWord) -> DeBruijnSet:
    """Invert a block-permutation word into its de Bruijn set of span n."""
    m = inverse_transform(v.word)
    if not is_debruijn_set(m, v.span):
        raise AssertionError(
            f"inverse of {v.word} is not a de Bruijn set of span {v.span}"
        )
    return DeBruijnSet(m, v.span)


def enumerate_gamma(k: int, n: int, limit: int = 10**6):
    """Yield every concatenation of k^{n-1} alphabet-permutation blocks, in
    lexicographic order.  Refuses up front when the census exceeds `limit`."""
    count = factorial(k) ** (k ** (n - 1))
    if count > limit:
        raise ResourceLimitError(
            f"{count} block-permutation words of span {n} exceed the limit {limit}"
        )
    alphabet = default_alphabet(k)
    blocks = list(permutations(range(k)))
    for chosen in product(blocks, repeat=k ** (n - 1)):
        codes = tuple(c for block in chosen for c in block)
        yield Word(alphabet, codes)


def count_debruijn_words(k: int, n: int) -> int:
    """Number of de Bruijn words of span n over k letters: (k!)^(k^(n-1)) / k^n."""
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    total, rem = divmod(factorial(k) ** (k ** (n - 1)), k**n)
    if rem:
        raise AssertionError(f"count formula not divisible for k={k}, n={n}")
    return total


def _check_generation_guard(k: int, n: int, max_length: int):
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    if k**n > max_length:
        raise ResourceLimitError(
            f"span-{n} generation over {k} letters needs k^n = {k**n} "
            f"positions, over the guard {max_length}"
        )


def least_debruijn_set(k: int, n: int, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> DeBruijnSet:
    """Invert the all-identity-block word: the necklaces of all Lyndon words
    of length dividing n, each once."""
    _check_generation_guard(k, n, max_length)
    alphabet = default_alphabet(k)
    v = Word(alphabet, tuple(range(k)) * (k ** (n - 1)))
    return debruijn_set_from_gamma(GammaWord(v, n))


def least_debruijn_word(k: int, n: int, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """The lexicographically least de Bruijn word of span n over k letters,
    generated by transform inversion and sorted Lyndon concatenation."""
    m = least_debruijn_set(k, n, max_length).inner
    codes = tuple(c for necklace, _ in m.entries for c in necklace.lyndon.codes)
    return Word(m.alphabet, codes)


def _lyndon_words_up_to(n: int, k: int):
    """All Lyndon code-words of length <= n over k letters, lexicographically
    (the classic successor step: extend periodically, strip maxima, bump)."""
    w = [0]
    while True:
        yield tuple(w)
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == k - 1:
            w.pop()
        if not w:
            return
        w[-1] += 1


def lyndon_concatenation_oracle(k: int, n: int, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """Concatenate all Lyndon words of length dividing n in lexicographic
    order.  Independent of the transform machinery, for cross-validation."""
    _check_generation_guard(k, n, max_length)
    codes = []
    for u in _lyndon_words_up_to(n, k):
        if n % len(u) == 0:
            codes.extend(u)
    return Word(default_alphabet(k), tuple(codes))
