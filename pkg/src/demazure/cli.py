"""Command-line interface.

Exit codes: 0 success, 2 usage or input error, 3 failed check.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import sl2
from .cartan import DynkinGraph, cartan_from_graph, sl2_affine
from .crystal import character, character_rows, demazure_subset, export_graph, generate, induced_graph
from .errors import DemazureError, ReducedWordRequired
from .quiver import (
    QuiverRep,
    check_sl2_demazure_membership,
    classify_sl2_word,
    extremal_dim_vector,
    is_stable,
    moment_residual,
    nakajima_dim,
    nilpotency_order,
)
from .weyl import elements_up_to_length, format_word, is_reduced, wn

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 2, 3


def _parse_wn(text: str) -> tuple[int, str]:
    text = text.strip()
    if not text or text[0] not in "+-" or not text[1:].isdigit():
        raise argparse.ArgumentTypeError("expected a signed length such as -2 or +3")
    return int(text[1:]), text[0]


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_level(p, required=True):
    p.add_argument("--s", type=int, required=required, help="coefficient of omega_0")
    p.add_argument("--t", type=int, required=required, help="coefficient of omega_1")


def _add_element(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--wn", type=_parse_wn, help="w_n^+ or w_n^-, written +n or -n")
    g.add_argument("--word", type=_parse_ints, help="reduced word in product order, e.g. 0,1")


def _resolve_word(args) -> tuple[tuple[int, ...], tuple[int, str] | None]:
    if args.wn is not None:
        n, sign = args.wn
        return wn(n, sign), (n, sign)
    word = args.word
    C = cartan_from_graph(sl2_affine())
    if any(not 0 <= i < 2 for i in word) or not is_reduced(C, word):
        raise ReducedWordRequired(f"word {list(word)} is not reduced")
    return word, None


def _demazure(args):
    word, named = _resolve_word(args)
    n, sign = classify_sl2_word(word)
    frame = sign or "-"
    return demazure_subset(sl2.ground_state(args.s, args.t, frame), word), word, named or ((n, sign) if sign else None)


def _character_lines(char) -> list[str]:
    lines = ["d | v | multiplicity"]
    for d, v, m in character_rows(char):
        lines.append(f"{' '.join(map(str, d))} | {' '.join(map(str, v))} | {m}")
    return lines


def cmd_character(args) -> int:
    dset, word, _ = _demazure(args)
    char = character(dset)
    if args.json:
        rows = [{"d": list(d), "v": list(v), "multiplicity": m} for d, v, m in character_rows(char)]
        print(json.dumps({"word": list(word), "dimension": len(dset), "character": rows}, indent=2))
    else:
        print("\n".join(_character_lines(char)))
    return EXIT_OK


def cmd_demazure(args) -> int:
    dset, word, named = _demazure(args)
    print(f"lambda = {args.s} w_0 + {args.t} w_1")
    print(f"w = {format_word(word)}")
    print(f"|B_w(lambda)| = {len(dset)}")
    status = EXIT_OK
    if named is not None and named[0] >= 1:
        n, sign = named
        predicted = sl2.demazure_dimension(args.s, args.t, n, sign)
        verdict = "PASS" if predicted == len(dset) else "FAIL"
        print(f"closed form (n={n}, sign={sign}) = {predicted}")
        print(f"agreement: {verdict}")
        if verdict == "FAIL":
            status = EXIT_CHECK
    print("\n".join(_character_lines(character(dset))))
    if args.render and named is not None:
        print()
        print(sl2.render(sl2.extremal_pyramid(args.s, args.t, named[0], named[1])))
    return status


def cmd_graph(args) -> int:
    if args.wn is not None or args.word is not None:
        dset, _, _ = _demazure(args)
        g = induced_graph(dset.elements.values())
    else:
        g = generate(sl2.ground_state(args.s, args.t), block_bound=args.depth)
    sys.stdout.write(export_graph(g, args.format))
    return EXIT_OK


def _load_graph(path):
    if path is None:
        return sl2_affine()
    with open(path) as fh:
        return DynkinGraph.from_json(json.load(fh))


def cmd_extremal(args) -> int:
    graph = _load_graph(args.graph)
    C = cartan_from_graph(graph)
    d = args.d
    if len(d) != C.rank:
        raise DemazureError(f"--d needs {C.rank} entries")
    status = EXIT_OK
    print("w | v_w | dim")
    for w in elements_up_to_length(C, args.maxlen):
        v = extremal_dim_vector(C, d, w)
        dim = nakajima_dim(C, v, d)
        print(f"{format_word(w)} | {' '.join(map(str, v))} | {dim}")
        if dim != 0:
            status = EXIT_CHECK
    return status


def cmd_quiver_check(args) -> int:
    try:
        with open(args.rep) as fh:
            rep = QuiverRep.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"malformed representation file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    psi = moment_residual(rep)
    for i in sorted(psi):
        zero = all(a == 0 for row in psi[i] for a in row)
        print(f"psi_{i} zero: {str(zero).lower()}")
    order = nilpotency_order(rep)
    print(f"nilpotency order: {'NONE' if order is None else order}")
    print(f"stable: {str(is_stable(rep)).lower()}")
    if args.wn is not None:
        if args.s is not None and args.t is not None and (args.s, args.t) != rep.d:
            raise DemazureError(f"--s/--t ({args.s}, {args.t}) disagree with d = {rep.d}")
        n, sign = args.wn
        member = check_sl2_demazure_membership(rep, wn(n, sign))
        print(f"member: {str(member).lower()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import CRITERIA, run_criterion

    results = [run_criterion(n) for n, _, _ in CRITERIA]
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="demazure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character", help="character of an affine sl2 Demazure crystal")
    _add_level(p)
    _add_element(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("demazure", help="size of B_w(lambda) against the closed form")
    _add_level(p)
    _add_element(p)
    p.add_argument("--render", action="store_true", help="draw the extremal pyramid")
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("graph", help="export a crystal graph")
    _add_level(p)
    _add_element(p, required=False)
    p.add_argument("--depth", type=int, default=3, help="BFS depth when no word is given")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("extremal", help="extremal dimension vectors and their quiver-variety dimensions")
    p.add_argument("--graph", help="graph JSON file (default: affine sl2)")
    p.add_argument("--d", type=_parse_ints, required=True)
    p.add_argument("--maxlen", type=int, required=True)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("quiver-check", help="check a framed representation")
    p.add_argument("--rep", required=True)
    _add_level(p, required=False)
    p.add_argument("--wn", type=_parse_wn)
    p.set_defaults(func=cmd_quiver_check)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DemazureError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
