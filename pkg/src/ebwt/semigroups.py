"""Semigroups attached to necklaces and their syntactic cross-oracle.

Two independent routes to the same object: the closure of the per-letter
partial injections acting on a sorted necklace, and the transition semigroup
of the minimal automaton of the positive powers of the word.  Both come out
as letter-labeled finite semigroups so the letter-induced isomorphism can be
decided by right-Cayley comparison.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

from .bwt import NecklaceMultiset, StandardPermutation, standard_permutation, transform
from .errors import ResourceLimitError
from .words import Alphabet, Necklace, Word, is_primitive, lyndon_representative

DEFAULT_CLOSURE_SIZE = 10**6


@dataclass(frozen=True)
class PartialInjection:
    """A partial one-to-one map on {0..degree-1}, as (source, target) pairs
    sorted by source."""

    degree: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        sources = [s for s, _ in self.pairs]
        targets = [t for _, t in self.pairs]
        if any(a >= b for a, b in zip(sources, sources[1:])):
            raise ValueError("pairs must be sorted by strictly increasing source")
        if len(set(targets)) != len(targets):
            raise ValueError("targets must be distinct")
        for x in sources + targets:
            if not 0 <= x < self.degree:
                raise ValueError(f"point {x} outside degree {self.degree}")

    @classmethod
    def empty(cls, degree: int) -> PartialInjection:
        return cls(degree, ())

    @classmethod
    def identity(cls, degree: int) -> PartialInjection:
        return cls(degree, tuple((i, i) for i in range(degree)))

    @cached_property
    def _map(self) -> dict[int, int]:
        return dict(self.pairs)

    def apply(self, x: int) -> int | None:
        return self._map.get(x)

    def compose(self, other: PartialInjection) -> PartialInjection:
        """Left-to-right composition: x -> other(self(x)) where both defined."""
        om = other._map
        return PartialInjection(
            self.degree, tuple((s, om[t]) for s, t in self.pairs if t in om)
        )

    @property
    def is_order_preserving(self) -> bool:
        targets = [t for _, t in self.pairs]
        return all(a < b for a, b in zip(targets, targets[1:]))

    def restrict_renumbered(self, positions: tuple[int, ...]) -> PartialInjection:
        """Restrict to an invariant subset and renumber it as 0..r-1 in order."""
        rank = {p: i for i, p in enumerate(sorted(positions))}
        pairs = tuple(
            (rank[s], rank[t]) for s, t in self.pairs if s in rank and t in rank
        )
        return PartialInjection(len(positions), pairs)


@dataclass(frozen=True)
class Transformation:
    """A full map on {0..m-1}; element of a transition semigroup."""

    targets: tuple[int, ...]

    def compose(self, other: Transformation) -> Transformation:
        return Transformation(tuple(other.targets[t] for t in self.targets))


class FiniteSemigroup:
    """Closure of letter-labeled generators under composition.

    Elements are canonical hashable values (partial injections or
    transformations); `element_words[i]` is a shortest generator word
    producing element i (shortlex, from the construction order).  The full
    multiplication table is materialized lazily.
    """

    def __init__(self, elements, generators, element_words, right_by_letter):
        self.elements = tuple(elements)
        self.generators = dict(generators)
        self.element_words = tuple(element_words)
        self._right_by_letter = tuple(right_by_letter)
        self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, element) -> int:
        return self._index[element]

    def right_by_letter(self, i: int, letter: int) -> int:
        """Index of elements[i] composed with the generator of `letter`."""
        return self._right_by_letter[i][letter]

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        idx = self._index
        return tuple(
            tuple(idx[x.compose(y)] for y in self.elements) for x in self.elements
        )

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]


def _close(gens, max_size: int) -> FiniteSemigroup:
    """Breadth-first closure of letter-labeled generators; elements appear in
    shortlex order of their shortest generator words."""
    letters = sorted(gens)
    index: dict = {}
    elements: list = []
    words: list[tuple[int, ...]] = []
    right: list[dict[int, int]] = []
    generators: dict[int, int] = {}
    for a in letters:
        g = gens[a]
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
            words.append((a,))
            right.append({})
        generators[a] = index[g]
    pos = 0
    while pos < len(elements):
        x = elements[pos]
        for a in letters:
            y = x.compose(gens[a])
            j = index.get(y)
            if j is None:
                if len(elements) >= max_size:
                    raise ResourceLimitError(
                        f"semigroup closure exceeds the {max_size}-element guard"
                    )
                j = len(elements)
                index[y] = j
                elements.append(y)
                words.append(words[pos] + (a,))
                right.append({})
            right[pos][a] = j
        pos += 1
    return FiniteSemigroup(elements, generators, words, right)


def generate_closure(gens: dict[int, PartialInjection],
                     max_size: int = DEFAULT_CLOSURE_SIZE) -> FiniteSemigroup:
    """Close letter-labeled partial injections under composition.

    The empty mapping is kept when reachable: it is the zero of the ambient
    inverse semigroup and dropping it would break the table.
    """
    degrees = {g.degree for g in gens.values()}
    if len(degrees) != 1:
        raise ValueError(f"generators must share a degree, got {sorted(degrees)}")
    return _close(gens, max_size)


def letter_actions(u: Word) -> dict[int, PartialInjection]:
    """The per-letter conjugation actions on the sorted necklace of u.

    The necklace is ordered lexicographically and identified with 0..n-1;
    letter a sends each rotation starting with a to its conjugate shift.
    Every letter of u's alphabet gets an action, the empty injection when the
    letter does not occur, so both semigroup routes share a generator set.
    """
    necklace = lyndon_representative(u)
    rotations = sorted(r.codes for r in necklace.rotations())
    index = {r: i for i, r in enumerate(rotations)}
    pairs: dict[int, list[tuple[int, int]]] = {a: [] for a in range(u.alphabet.size)}
    for i, r in enumerate(rotations):
        pairs[r[0]].append((i, index[r[1:] + r[:1]]))
    return {
        a: PartialInjection(len(u), tuple(p)) for a, p in pairs.items()
    }


def letter_injections(p: StandardPermutation) -> dict[int, PartialInjection]:
    """The per-letter partial injections whose union is the permutation."""
    return {
        a: PartialInjection(p.size, tuple((i, p.image[i]) for i in p.dom(a)))
        for a in range(p.alphabet.size)
    }


def _minimal_dfa(u: Word):
    """Minimal complete automaton of {u^m : m >= 1}, states BFS-numbered from
    the initial state.  Returns (state count, delta[state][letter], initial,
    final state set)."""
    n, k = len(u), u.alphabet.size
    init, acc, sink = 0, n, n + 1
    delta = [[sink] * k for _ in range(n + 2)]
    for i in range(n):
        src = init if i == 0 else i
        delta[src][u.codes[i]] = i + 1 if i + 1 < n else acc
    delta[acc][u.codes[0]] = 1 if n > 1 else acc

    # prune unreachable states (the sink, when every letter always matches)
    reach = [init]
    seen = {init}
    for s in reach:
        for a in range(k):
            if delta[s][a] not in seen:
                seen.add(delta[s][a])
                reach.append(delta[s][a])
    renum = {s: i for i, s in enumerate(reach)}
    m = len(reach)
    delta = [[renum[delta[s][a]] for a in range(k)] for s in reach]
    finals = {renum[acc]} if acc in renum else set()
    init = renum[init]

    # Moore refinement to the Nerode classes
    cls = [1 if s in finals else 0 for s in range(m)]
    while True:
        keys = {}
        new_cls = []
        for s in range(m):
            key = (cls[s], tuple(cls[delta[s][a]] for a in range(k)))
            if key not in keys:
                keys[key] = len(keys)
            new_cls.append(keys[key])
        if new_cls == cls:
            break
        cls = new_cls
    q = max(cls) + 1
    qdelta = [[0] * k for _ in range(q)]
    for s in range(m):
        for a in range(k):
            qdelta[cls[s]][a] = cls[delta[s][a]]
    qfinals = {cls[s] for s in finals}
    qinit = cls[init]

    # canonical numbering: BFS from the initial state in letter order
    order = [qinit]
    seen = {qinit}
    for s in order:
        for a in range(k):
            if qdelta[s][a] not in seen:
                seen.add(qdelta[s][a])
                order.append(qdelta[s][a])
    renum = {s: i for i, s in enumerate(order)}
    final_delta = [[renum[qdelta[s][a]] for a in range(k)] for s in order]
    return len(order), final_delta, renum[qinit], {renum[s] for s in qfinals}


def syntactic_semigroup(u: Word, max_size: int = DEFAULT_CLOSURE_SIZE) -> FiniteSemigroup:
    """The syntactic semigroup of the language of positive powers of u.

    Computed as the transition semigroup of the minimal complete recognizer,
    generated by the letter transition maps; this equals the quotient of the
    free semigroup by the syntactic congruence of the language.
    """
    if len(u) == 0:
        raise ValueError("the syntactic semigroup needs a nonempty word")
    if not is_primitive(u):
        warnings.warn(f"{u} is not primitive; the action comparison theorem "
                      "assumes a primitive word", stacklevel=2)
    m, delta, _, _ = _minimal_dfa(u)
    gens = {
        a: Transformation(tuple(delta[s][a] for s in range(m)))
        for a in range(u.alphabet.size)
    }
    return _close(gens, max_size)


def cayley_signature(s: FiniteSemigroup) -> tuple:
    """Canonical right-Cayley fingerprint rooted at the letter generators.

    Elements get ids in breadth-first discovery order over generator words;
    two semigroups have equal signatures iff mapping same-lettered generators
    to each other extends to an isomorphism.
    """
    letters = tuple(sorted(s.generators))
    canon: dict[int, int] = {}
    order: list[int] = []
    for a in letters:
        e = s.generators[a]
        if e not in canon:
            canon[e] = len(order)
            order.append(e)
    gen_ids = tuple(canon[s.generators[a]] for a in letters)
    rows = []
    pos = 0
    while pos < len(order):
        e = order[pos]
        pos += 1
        row = []
        for a in letters:
            t = s.right_by_letter(e, a)
            if t not in canon:
                canon[t] = len(order)
                order.append(t)
            row.append(canon[t])
        rows.append(tuple(row))
    return (letters, gen_ids, tuple(rows))


def letter_induced_isomorphic(s1: FiniteSemigroup, s2: FiniteSemigroup) -> bool:
    """Whether generator-letter matching extends to a semigroup isomorphism."""
    if set(s1.generators) != set(s2.generators):
        raise ValueError("semigroups carry different generator letter sets")
    return cayley_signature(s1) == cayley_signature(s2)


@dataclass(frozen=True)
class MultisetSemigroup:
    """The action semigroup of a necklace multiset with its cycle structure.

    `semigroup` is the closure of the per-letter injections of the standard
    permutation of the transform; `cycle_domains` are the permutation's
    cycles (read from their minimal element).  Restriction to each cycle is a
    homomorphism, and the tuple of all restrictions separates elements.
    """

    alphabet: Alphabet
    semigroup: FiniteSemigroup
    cycle_domains: tuple[tuple[int, ...], ...]
    sorted_codes: tuple[int, ...]

    def _letter_generator(self, a: int) -> PartialInjection:
        return self.semigroup.elements[self.semigroup.generators[a]]

    def restriction(self, j: int, max_size: int = DEFAULT_CLOSURE_SIZE) -> FiniteSemigroup:
        """The image of the restriction homomorphism onto cycle j, renumbered
        to degree |cycle|: the closure of the restricted letter actions."""
        domain = self.cycle_domains[j]
        gens = {
            a: self._letter_generator(a).restrict_renumbered(domain)
            for a in range(self.alphabet.size)
        }
        return generate_closure(gens, max_size)

    def restriction_tuple(self, i: int) -> tuple[PartialInjection, ...]:
        """Element i restricted to every cycle; the separating invariant."""
        element = self.semigroup.elements[i]
        return tuple(
            element.restrict_renumbered(domain) for domain in self.cycle_domains
        )

    def cycle_necklace(self, j: int) -> Necklace:
        """The necklace whose rotations occupy cycle j."""
        codes = tuple(self.sorted_codes[i] for i in self.cycle_domains[j])
        return lyndon_representative(Word(self.alphabet, codes))


def semigroup_of_multiset(m: NecklaceMultiset,
                          max_size: int = DEFAULT_CLOSURE_SIZE) -> MultisetSemigroup:
    """Close the per-letter injections of the transform of a multiset."""
    if m.total_length == 0:
        raise ValueError("the empty multiset has no letter actions")
    p = standard_permutation(transform(m))
    closure = generate_closure(letter_injections(p), max_size)
    return MultisetSemigroup(m.alphabet, closure, tuple(p.cycles()), p.sorted_codes)
