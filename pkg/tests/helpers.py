"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive and shares no code with the package:
min-over-rotations, lcm-width tables, substring sets, dict-based closures.
"""

from functools import reduce
from itertools import product
from math import gcd

from ebwt.words import Alphabet, Word

AB = Alphabet("ab")
ABC = Alphabet("abc")


def W(text: str, alphabet: Alphabet = AB) -> Word:
    return alphabet.word(text)


def rotations(text: str) -> list[str]:
    return [text[i:] + text[:i] for i in range(len(text))]


def naive_root(text: str) -> str:
    for d in range(1, len(text) + 1):
        if len(text) % d == 0 and text[:d] * (len(text) // d) == text:
            return text[:d]
    raise AssertionError


def naive_primitive(text: str) -> bool:
    return naive_root(text) == text


def naive_least_rotation(text: str) -> str:
    return min(rotations(text))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def naive_omega_compare(u: str, v: str) -> int:
    """Compare u^omega and v^omega by materializing lcm-width powers."""
    width = lcm(len(u), len(v))
    uu, vv = u * (width // len(u)), v * (width // len(v))
    return -1 if uu < vv else (1 if uu > vv else 0)


def naive_bwt(lyndons_with_mult) -> str:
    """The transform via the full lcm-width sorted table."""
    rows = []
    for text, mult in lyndons_with_mult:
        rows.extend(rotations(text) * mult)
    if not rows:
        return ""
    width = reduce(lcm, (len(r) for r in rows))
    return "".join(r[-1] for r in sorted(w * (width // len(w)) for w in rows))


def brute_distinct_factors(seq) -> int:
    """Distinct nonempty substrings, by the literal set of slices."""
    return len({seq[i:j] for i in range(len(seq)) for j in range(i + 1, len(seq) + 1)})


def all_words(k: int, length: int):
    """All k-ary code tuples of the given length, lexicographically."""
    return product(range(k), repeat=length)


def primitive_texts(alphabet: str, max_len: int):
    """All primitive words up to max_len over the given letters, as text."""
    for length in range(1, max_len + 1):
        for chars in product(alphabet, repeat=length):
            text = "".join(chars)
            if naive_primitive(text):
                yield text


def lyndon_texts(alphabet: str, length: int):
    """All Lyndon words of exactly the given length, by brute force."""
    for chars in product(alphabet, repeat=length):
        text = "".join(chars)
        if naive_primitive(text) and text == naive_least_rotation(text):
            yield text


def naive_letter_maps(u: str, alphabet: str) -> dict[str, dict[int, int]]:
    """Per-letter conjugation maps on the sorted necklace of u, as dicts."""
    necklace = sorted(rotations(u))
    index = {w: i for i, w in enumerate(necklace)}
    maps = {a: {} for a in alphabet}
    for w, i in index.items():
        maps[w[0]][i] = index[w[1:] + w[0]]
    return maps


def naive_closure_size(gens: dict[str, dict[int, int]]) -> int:
    """Size of the closure of partial maps under composition (set-based)."""

    def compose(f, g):
        return frozenset((x, g[y]) for x, y in f if y in g)

    elems = {frozenset(g.items()) for g in gens.values()}
    frontier = list(elems)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens.values():
                h = compose(f, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(elems)


def is_power_of(text: str, u: str) -> bool:
    return len(text) % len(u) == 0 and text == u * (len(text) // len(u))


def context_classes(u: str, alphabet: str, word_len: int, context_len: int):
    """Partition all words of length <= word_len by their bounded context
    profile with respect to the positive powers of u.

    A direct, finite rendering of the syntactic congruence: two words land in
    the same class iff they embed in a power of u under exactly the same
    contexts (p, q) with |p|, |q| <= context_len.  Rather than enumerating
    every context pair, scan each occurrence of the word inside each short
    enough power; the profiles are identical.
    """
    max_total = 2 * context_len + word_len
    powers = [u * m for m in range(1, max_total // len(u) + 1)]
    classes: dict[frozenset, list[str]] = {}
    for length in range(1, word_len + 1):
        for chars in product(alphabet, repeat=length):
            x = "".join(chars)
            profile = set()
            for z in powers:
                for i in range(len(z) - len(x) + 1):
                    if z[i:i + len(x)] == x and i <= context_len \
                            and len(z) - i - len(x) <= context_len:
                        profile.add((z[:i], z[i + len(x):]))
            classes.setdefault(frozenset(profile), []).append(x)
    return list(classes.values())
