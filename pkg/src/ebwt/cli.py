"""Command-line surface: transform | invert | debruijn | semigroup | factors.

Deterministic, scriptable output: text by default, the same data as JSON
under --json.  Exit codes: 0 success, 2 input error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bwt import NecklaceMultiset, inverse_transform, transform
from .debruijn import (
    DEFAULT_MAX_WORD_LENGTH,
    GammaWord,
    count_debruijn_words,
    debruijn_set_from_gamma,
    least_debruijn_word,
)
from .errors import ResourceLimitError
from .factors import (
    DEFAULT_SCAN_WORDS,
    debruijn_factor_witness,
    distinct_factors,
    max_factors_exhaustive,
    repeated_factor_lower_bound,
)
from .semigroups import (
    DEFAULT_CLOSURE_SIZE,
    generate_closure,
    letter_actions,
    letter_induced_isomorphic,
    syntactic_semigroup,
)
from .words import Alphabet, Word, is_primitive, lyndon_representative


class CLIError(Exception):
    """Input error; reported on stderr with exit code 2."""


def _read_input(args) -> str:
    if getattr(args, "text", None) is not None:
        return args.text
    if getattr(args, "file", None):
        try:
            with open(args.file, encoding="utf-8") as handle:
                return handle.read()
        except OSError as e:
            raise CLIError(f"cannot read {args.file}: {e.strerror}") from e
    return sys.stdin.read()


def _alphabet_from(chars, override: str | None) -> Alphabet:
    if override:
        if len(set(override)) != len(override):
            raise CLIError(f"--alphabet has repeated characters: {override!r}")
        return Alphabet("".join(sorted(override)))
    return Alphabet("".join(sorted(set(chars))))


def _parse_word(text: str, override: str | None) -> Word:
    if not text:
        raise CLIError("empty word")
    alphabet = _alphabet_from(text, override)
    try:
        return alphabet.word(text)
    except ValueError as e:
        raise CLIError(str(e)) from e


def _parse_multiset(text: str, override: str | None, canonicalize: bool) -> NecklaceMultiset:
    stripped = text.strip()
    if stripped.startswith("{"):
        entries = _multiset_entries_from_json(stripped)
    else:
        entries = _multiset_entries_from_lines(stripped)
    if not entries:
        return NecklaceMultiset(_alphabet_from("ab", override), ())
    alphabet = _alphabet_from("".join(w for w, _ in entries), override)
    necklaces = []
    for raw, mult in entries:
        try:
            word = alphabet.word(raw)
        except ValueError as e:
            raise CLIError(str(e)) from e
        if len(word) == 0:
            raise CLIError("empty multiset entry")
        if not is_primitive(word):
            raise CLIError(f"entry {raw!r} is not primitive")
        necklace = lyndon_representative(word)
        if str(necklace) != raw and not canonicalize:
            raise CLIError(
                f"entry {raw!r} is not a Lyndon word (canonical form "
                f"{necklace!s}); pass --canonicalize to accept rotations"
            )
        necklaces.extend([necklace] * mult)
    return NecklaceMultiset.from_necklaces(alphabet, necklaces)


def _multiset_entries_from_lines(text: str) -> list[tuple[str, int]]:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            entries.append((parts[0], 1))
        elif len(parts) == 2 and parts[1].startswith("x") and parts[1][1:].isdigit():
            mult = int(parts[1][1:])
            if mult < 1:
                raise CLIError(f"line {lineno}: multiplicity must be positive")
            entries.append((parts[0], mult))
        else:
            raise CLIError(f"line {lineno}: expected 'word' or 'word xN', got {line!r}")
    return entries


def _multiset_entries_from_json(text: str) -> list[tuple[str, int]]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise CLIError(f"line {e.lineno}: invalid JSON: {e.msg}") from e
    if not isinstance(payload, dict) or not isinstance(payload.get("necklaces"), list):
        raise CLIError('JSON multiset must be {"necklaces": [...]}')
    entries = []
    for item in payload["necklaces"]:
        if not isinstance(item, dict) or "lyndon" not in item:
            raise CLIError(f"JSON necklace entry needs a 'lyndon' field: {item!r}")
        mult = item.get("multiplicity", 1)
        if not isinstance(mult, int) or mult < 1:
            raise CLIError(f"bad multiplicity for entry {item['lyndon']!r}: {mult!r}")
        entries.append((item["lyndon"], mult))
    return entries


def _multiset_lines(m: NecklaceMultiset) -> list[str]:
    return [
        str(necklace) if mult == 1 else f"{necklace} x{mult}"
        for necklace, mult in m.entries
    ]


def _multiset_payload(m: NecklaceMultiset) -> dict:
    return {
        "necklaces": [
            {"lyndon": str(necklace), "multiplicity": mult}
            for necklace, mult in m.entries
        ]
    }


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _render_on(word: Word, override: str | None) -> str:
    if not override:
        return str(word)
    alphabet = _alphabet_from(override, override)
    if alphabet.size != word.alphabet.size:
        raise CLIError(
            f"--alphabet needs {word.alphabet.size} characters, got {alphabet.size}"
        )
    return alphabet.render(word.codes)


def cmd_transform(args) -> int:
    m = _parse_multiset(_read_input(args), args.alphabet, args.canonicalize)
    word = transform(m)
    _emit(args, {"word": str(word)}, [str(word)])
    return 0


def cmd_invert(args) -> int:
    text = _read_input(args).strip()
    if not text:
        _emit(args, {"necklaces": []}, [])
        return 0
    m = inverse_transform(_parse_word(text, args.alphabet))
    _emit(args, _multiset_payload(m), _multiset_lines(m))
    return 0


def cmd_debruijn(args) -> int:
    k, n = args.k, args.n
    if k < 2 or n < 1:
        raise CLIError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    if args.count:
        total = count_debruijn_words(k, n)
        _emit(args, {"count": total}, [str(total)])
        return 0
    if args.from_gamma is not None:
        word = _parse_word(args.from_gamma, args.alphabet)
        if word.alphabet.size != k:
            raise CLIError(
                f"word uses {word.alphabet.size} letters, expected {k}"
            )
        try:
            gamma = GammaWord(word, n)
        except ValueError as e:
            raise CLIError(str(e)) from e
        m = debruijn_set_from_gamma(gamma).inner
        _emit(args, _multiset_payload(m), _multiset_lines(m))
        return 0
    guard = args.guard_cells or DEFAULT_MAX_WORD_LENGTH
    word = least_debruijn_word(k, n, max_length=guard)
    rendered = _render_on(word, args.alphabet)
    _emit(args, {"word": rendered}, [rendered])
    return 0


def _semigroup_report(name: str, sg, alphabet: Alphabet, with_table: bool):
    labels = [alphabet.render(w) for w in sg.element_words]
    payload = {
        f"{name}_order": sg.order,
        "generators": [alphabet.letters[a] for a in sorted(sg.generators)],
    }
    lines = [
        f"{name} order {sg.order}",
        "generators " + " ".join(payload["generators"]),
    ]
    if with_table:
        payload["elements"] = labels
        payload["table"] = [[sg.table[i][j] for j in range(sg.order)] for i in range(sg.order)]
        width = max(len(label) for label in labels)
        head = " ".join(label.rjust(width) for label in labels)
        lines.append("*".rjust(width) + " " + head)
        for i, label in enumerate(labels):
            row = " ".join(labels[sg.table[i][j]].rjust(width) for j in range(sg.order))
            lines.append(label.rjust(width) + " " + row)
    return payload, lines


def cmd_semigroup(args) -> int:
    word = _parse_word(args.word, args.alphabet)
    guard = args.guard_cells or DEFAULT_CLOSURE_SIZE
    if args.check_iso:
        action = generate_closure(letter_actions(word), max_size=guard)
        syntactic = syntactic_semigroup(word, max_size=guard)
        verdict = letter_induced_isomorphic(action, syntactic)
        payload = {
            "action_order": action.order,
            "syntactic_order": syntactic.order,
            "isomorphic": verdict,
        }
        lines = [
            f"action order {action.order}",
            f"syntactic order {syntactic.order}",
            "ISOMORPHIC" if verdict else "NOT ISOMORPHIC",
        ]
        _emit(args, payload, lines)
        return 0
    if args.action:
        sg = generate_closure(letter_actions(word), max_size=guard)
        payload, lines = _semigroup_report("action", sg, word.alphabet, args.table)
    else:
        sg = syntactic_semigroup(word, max_size=guard)
        payload, lines = _semigroup_report("syntactic", sg, word.alphabet, args.table)
    _emit(args, payload, lines)
    return 0


def cmd_factors(args) -> int:
    if args.max is not None:
        n, k = args.max
        guard = args.guard_cells or DEFAULT_SCAN_WORDS
        best, witness = max_factors_exhaustive(n, k, max_words=guard)
        upper = n * (n + 1) // 2
        if n > k >= 2:
            upper -= repeated_factor_lower_bound(n, k)
        payload = {
            "n": n,
            "k": k,
            "max_distinct": best,
            "upper_bound": upper,
            "witness": str(witness),
        }
        lines = [
            f"n {n}",
            f"max_distinct {best}",
            f"upper_bound {upper}",
            f"witness {witness}",
        ]
        _emit(args, payload, lines)
        return 0
    if args.witness is not None:
        n, k = args.witness
        guard = args.guard_cells or DEFAULT_MAX_WORD_LENGTH
        if not n > k >= 2:
            raise CLIError(f"witness needs n > k >= 2, got n={n}, k={k}")
        result = debruijn_factor_witness(n, k, max_length=guard)
        payload = {
            "n": n,
            "k": k,
            "span": result.span,
            "witness": str(result.word),
            "distinct_factors": result.distinct_count,
            "lower_bound": result.lower_bound,
        }
        lines = [
            f"witness {result.word}",
            f"span {result.span}",
            f"distinct_factors {result.distinct_count}",
            f"lower_bound {result.lower_bound}",
        ]
        _emit(args, payload, lines)
        return 0
    if args.word is None:
        raise CLIError("factors needs a word, --max, or --witness")
    count = distinct_factors(_parse_word(args.word, args.alphabet))
    _emit(args, {"distinct_factors": count}, [str(count)])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit JSON instead of text")
    common.add_argument("--alphabet", metavar="CHARS",
                        help="fix the alphabet (characters in code-point order)")
    common.add_argument("--guard-cells", metavar="N", type=int, dest="guard_cells",
                        help="override the subcommand's resource guard")

    parser = argparse.ArgumentParser(
        prog="ebwt",
        description="Extended Burrows-Wheeler transform of necklace multisets, "
                    "de Bruijn word generation, necklace semigroups, and "
                    "distinct-factor bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common],
                       help="multiset of Lyndon words -> transformed word")
    p.add_argument("text", nargs="?", help="multiset: lines of 'word [xN]' or JSON")
    p.add_argument("--file", help="read the multiset from a file")
    p.add_argument("--canonicalize", action="store_true",
                   help="accept primitive non-Lyndon entries, canonicalizing them")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("invert", parents=[common],
                       help="word -> multiset of Lyndon words")
    p.add_argument("text", nargs="?", help="the word to invert")
    p.add_argument("--file", help="read the word from a file")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("debruijn", parents=[common],
                       help="de Bruijn words of span n over k letters")
    p.add_argument("k", type=int, help="alphabet size")
    p.add_argument("n", type=int, help="span")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--least", action="store_true",
                      help="the lexicographically least de Bruijn word")
    mode.add_argument("--count", action="store_true",
                      help="how many de Bruijn words of span n exist")
    mode.add_argument("--from-gamma", metavar="WORD", dest="from_gamma",
                      help="invert a word of alphabet-permutation blocks")
    p.set_defaults(func=cmd_debruijn)

    p = sub.add_parser("semigroup", parents=[common],
                       help="necklace action and syntactic semigroups")
    p.add_argument("word", help="a primitive word")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--action", action="store_true",
                      help="closure of the letter actions on the necklace")
    mode.add_argument("--syntactic", action="store_true",
                      help="syntactic semigroup of the word's positive powers")
    mode.add_argument("--check-iso", action="store_true", dest="check_iso",
                      help="compare the two routes")
    p.add_argument("--table", action="store_true",
                   help="also print the multiplication table")
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("factors", parents=[common],
                       help="distinct-factor counts and bounds")
    p.add_argument("word", nargs="?", help="count distinct factors of this word")
    p.add_argument("--max", nargs=2, type=int, metavar=("N", "K"),
                   help="exhaustive maximum over all k-ary words of length n")
    p.add_argument("--witness", nargs=2, type=int, metavar=("N", "K"),
                   help="de Bruijn prefix witness with its quadratic floor")
    p.set_defaults(func=cmd_factors)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except CLIError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
