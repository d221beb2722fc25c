"""The extended Burrows-Wheeler transform and its inverse.

The forward map sends a finite multiset of necklaces to the word of last
letters of its rotations sorted by the omega-order; the inverse reads the
cycles of the standard permutation.  The full lcm-width rotation table is
materialized only on request (`build_table`) as a desk-scale oracle.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .errors import ResourceLimitError
from .words import Alphabet, Necklace, Word, lyndon_representative, omega_compare

DEFAULT_TABLE_CELLS = 2**20


@dataclass(frozen=True)
class NecklaceMultiset:
    """A finite multiset of necklaces, sorted by Lyndon representative."""

    alphabet: Alphabet
    entries: tuple[tuple[Necklace, int], ...]

    def __post_init__(self):
        for necklace, mult in self.entries:
            if necklace.alphabet != self.alphabet:
                raise ValueError(f"necklace {necklace} is over a different alphabet")
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
        lyndons = [n.lyndon.codes for n, _ in self.entries]
        if any(a >= b for a, b in zip(lyndons, lyndons[1:])):
            raise ValueError("entries must be strictly ascending by Lyndon word")

    @classmethod
    def from_necklaces(cls, alphabet: Alphabet, necklaces) -> NecklaceMultiset:
        """Collect an iterable of necklaces (repeats allowed) into a multiset."""
        counts = Counter(necklaces)
        entries = tuple(sorted(counts.items(), key=lambda e: e[0].lyndon.codes))
        return cls(alphabet, entries)

    @classmethod
    def from_texts(cls, alphabet: Alphabet, texts) -> NecklaceMultiset:
        """Parse rendered primitive words; each is canonicalized to its necklace."""
        return cls.from_necklaces(
            alphabet, (lyndon_representative(alphabet.word(t)) for t in texts)
        )

    @property
    def total_length(self) -> int:
        return sum(mult * len(n) for n, mult in self.entries)

    def necklaces(self):
        """Iterate necklaces with multiplicity."""
        for necklace, mult in self.entries:
            for _ in range(mult):
                yield necklace

    def __len__(self) -> int:
        return sum(mult for _, mult in self.entries)


@dataclass(frozen=True)
class StandardPermutation:
    """The standard permutation of a word: per-letter sorted-vs-original maps.

    For each letter a, dom(a) is the interval of positions of a in the sorted
    rearrangement of the word and ran(a) the positions of a in the word
    itself; the order-preserving pairing of the two induces the permutation
    `image` as their union.
    """

    alphabet: Alphabet
    image: tuple[int, ...]
    sorted_codes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.image)

    def letter_of(self, i: int) -> int:
        """The unique letter a with i in dom(a)."""
        return self.sorted_codes[i]

    def dom(self, letter: int) -> range:
        """Positions of `letter` in the sorted rearrangement: an interval."""
        return range(
            bisect_left(self.sorted_codes, letter),
            bisect_right(self.sorted_codes, letter),
        )

    def ran(self, letter: int) -> tuple[int, ...]:
        return tuple(self.image[i] for i in self.dom(letter))

    def apply_letter(self, i: int, letter: int) -> int | None:
        """i under the partial map of `letter`, or None when i is not in dom."""
        if self.sorted_codes[i] != letter:
            return None
        return self.image[i]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, listed by minimal element, each read from it."""
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.image[i]
            out.append(tuple(cycle))
        return out


def standard_permutation(w: Word) -> StandardPermutation:
    """Build the standard permutation of a nonempty word."""
    if len(w) == 0:
        raise ValueError("the standard permutation needs a nonempty word")
    positions: dict[int, list[int]] = {}
    for i, c in enumerate(w.codes):
        positions.setdefault(c, []).append(i)
    image: list[int] = []
    sorted_codes: list[int] = []
    for letter in sorted(positions):
        image.extend(positions[letter])
        sorted_codes.extend([letter] * len(positions[letter]))
    return StandardPermutation(w.alphabet, tuple(image), tuple(sorted_codes))


def word_action(p: StandardPermutation, i: int, u: Word) -> int | None:
    """Compose the per-letter partial maps of p along u, starting from i.

    Returns the final position, or None as soon as a step is undefined; the
    empty word acts as the identity.
    """
    if not 0 <= i < p.size:
        raise ValueError(f"position {i} outside 0..{p.size - 1}")
    pos: int | None = i
    for letter in u.codes:
        pos = p.apply_letter(pos, letter)
        if pos is None:
            return None
    return pos


def transform(m: NecklaceMultiset) -> Word:
    """The extended Burrows-Wheeler transform of a necklace multiset.

    Sorts all rotations (with multiplicity) by the omega-order and reads the
    last letters.  Equal roots compare equal and stay adjacent under the
    stable sort; their relative order cannot affect the output.
    """
    rotations: list[Word] = []
    for necklace in m.necklaces():
        rotations.extend(necklace.rotations())
    rotations.sort(key=cmp_to_key(omega_compare))
    return Word(m.alphabet, tuple(r.codes[-1] for r in rotations))


def inverse_transform(w: Word) -> NecklaceMultiset:
    """The inverse transform: read necklaces off the standard permutation.

    Each cycle of the permutation, with position i replaced by the letter
    whose domain contains i, spells a primitive word; the result is the
    multiset of their necklaces.  Cycles are read from their minimal element,
    which is immaterial after Lyndon canonicalization.
    """
    if len(w) == 0:
        return NecklaceMultiset(w.alphabet, ())
    p = standard_permutation(w)
    necklaces = []
    for cycle in p.cycles():
        cycle_word = Word(w.alphabet, tuple(p.sorted_codes[i] for i in cycle))
        necklaces.append(lyndon_representative(cycle_word))
    return NecklaceMultiset.from_necklaces(w.alphabet, necklaces)


@dataclass(frozen=True)
class RotationTable:
    """The n x l table of lcm-width rotation rows, ranked lexicographically."""

    rows: tuple[Word, ...]

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> int:
        return self.rows[i].codes[j]


def build_table(w: Word, max_cells: int = DEFAULT_TABLE_CELLS) -> RotationTable:
    """Materialize the rotation table of a word: row i is the unique width-l
    word along which position i stays defined, l the lcm of cycle lengths.

    The table exists as a test oracle; l is an lcm and can explode, so the
    total cell count is guarded.
    """
    p = standard_permutation(w)
    cycles = p.cycles()
    width = 1
    for cycle in cycles:
        width = width * len(cycle) // gcd(width, len(cycle))
    if len(w) * width > max_cells:
        raise ResourceLimitError(
            f"rotation table needs {len(w)}x{width} cells (row width lcm {width}), "
            f"over the {max_cells}-cell guard"
        )
    cycle_of = {}
    index_in = {}
    for cycle in cycles:
        for j, i in enumerate(cycle):
            cycle_of[i] = cycle
            index_in[i] = j
    rows = []
    for i in range(len(w)):
        cycle = cycle_of[i]
        r = len(cycle)
        start = index_in[i]
        root_codes = tuple(p.sorted_codes[cycle[(start + t) % r]] for t in range(r))
        rows.append(Word(w.alphabet, root_codes * (width // r)))
    return RotationTable(tuple(rows))
