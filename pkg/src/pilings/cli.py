"""Command-line front end.

Exit status is 0 when an answer was printed, 2 on bad input and 3 when a
search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .conjugacy import conjugate
from .errors import PilingError, ResourceExhausted
from .extension import ExtElement, ext_conjugate
from .graph import identity_aut, load_aut, load_graph
from .growth import ext_conj_growth, raag_conj_growth
from .oracle import oracle_conjugate, oracle_ext_conjugate, oracle_shuffle_equal, oracle_twisted_conjugate
from .piling import build_piling, extract_normal_word, piling_equal
from .twisted import DEFAULT_BUDGET, tcp
from .word import Word

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3

# --certify runs the brute-force searches only when both inputs are this short
CERTIFY_MAX_LETTERS = 8
CERTIFY_BOUND = 6


def _word_text(w: Word) -> str:
    return str(w) if len(w) else "1"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, help="defining graph JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--certify", action="store_true", help="attach a brute-force witness for short inputs")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node cap for closure searches")

    parser = argparse.ArgumentParser(prog="pilings", description="Word, conjugacy and twisted conjugacy problems in right-angled Artin groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="print the normal form of a word")
    p.add_argument("word")
    for name, text in (("wp", "word problem"), ("cp", "conjugacy problem")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("u")
        p.add_argument("v")
    p = sub.add_parser("tcp", parents=[common], help="twisted conjugacy problem for φ^k")
    p.add_argument("--aut", required=True, help="automorphism JSON file")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("u")
    p.add_argument("v")
    p = sub.add_parser("ext-cp", parents=[common], help="conjugacy in the cyclic extension")
    p.add_argument("--aut", required=True)
    p.add_argument("g")
    p.add_argument("h")
    p = sub.add_parser("growth", parents=[common], help="conjugacy growth table as CSV")
    p.add_argument("--max", type=int, required=True, dest="n_max")
    p.add_argument("--ext", action="store_true", help="count in the extension instead")
    p.add_argument("--aut")
    p.add_argument("--gnuplot", metavar="FILE", help="also write a gnuplot data file")
    return parser


def _emit(args, answer, witness=None, stats=None, text=None):
    if args.json:
        print(json.dumps({"answer": answer, "witness": witness, "stats": stats or {}}, sort_keys=True, ensure_ascii=False))
    else:
        print(text if text is not None else ("YES" if answer else "NO"))
        if witness is not None:
            print(f"witness: {witness}")


def _small(*words) -> bool:
    return all(len(w) <= CERTIFY_MAX_LETTERS for w in words)


def _run(args) -> int:
    g = load_graph(args.graph)
    stats = {}
    witness = None

    if args.command == "normalize":
        w = Word.parse(g, args.word)
        nf = extract_normal_word(build_piling(w))
        stats = {"input_length": len(w), "geodesic_length": len(nf)}
        _emit(args, _word_text(nf), None, stats, _word_text(nf))
        return EXIT_OK

    if args.command in ("wp", "cp"):
        u, v = Word.parse(g, args.u), Word.parse(g, args.v)
        if args.command == "wp":
            answer = piling_equal(build_piling(u), build_piling(v))
        else:
            answer = conjugate(u, v)
        stats = {"length_u": len(u), "length_v": len(v)}
        if args.certify:
            if not _small(u, v):
                stats["certified"] = None
            elif args.command == "wp":
                stats["certified"] = oracle_shuffle_equal(u, v) == answer
            else:
                found = oracle_conjugate(u, v, CERTIFY_BOUND)
                witness = None if found is None else _word_text(found)
                stats["certified"] = (found is not None) if answer else None
        _emit(args, answer, witness, stats)
        return EXIT_OK

    if args.command == "tcp":
        phi = load_aut(g, args.aut).power(args.power)
        u, v = Word.parse(g, args.u), Word.parse(g, args.v)
        method = "inversions" if phi.is_inversion else "general"
        answer = tcp(u, v, phi, method=method, budget=args.budget)
        stats = {"length_u": len(u), "length_v": len(v), "method": method, "order": phi.order}
        if args.certify:
            if _small(u, v):
                found = oracle_twisted_conjugate(u, v, phi, CERTIFY_BOUND)
                witness = None if found is None else _word_text(found)
                stats["certified"] = (found is not None) if answer else None
            else:
                stats["certified"] = None
        _emit(args, answer, witness, stats)
        return EXIT_OK

    if args.command == "ext-cp":
        phi = load_aut(g, args.aut)
        x, y = ExtElement.parse(phi, args.g), ExtElement.parse(phi, args.h)
        answer = ext_conjugate(x, y, budget=args.budget)
        stats = {"order": phi.order}
        if args.certify:
            if _small(x.base, y.base):
                found = oracle_ext_conjugate(x, y, 4)
                witness = None if found is None else str(found)
                stats["certified"] = (found is not None) if answer else None
            else:
                stats["certified"] = None
        _emit(args, answer, witness, stats)
        return EXIT_OK

    if args.command == "growth":
        if args.ext:
            phi = load_aut(g, args.aut) if args.aut else identity_aut(g)
            table = ext_conj_growth(g, phi, args.n_max, budget=args.budget)
        else:
            table = raag_conj_growth(g, args.n_max, budget=args.budget)
        if args.gnuplot:
            with open(args.gnuplot, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(table.to_gnuplot())
        if args.json:
            _emit(args, table.coefficients, None, {"ball_size": table.ball_size, "metric": table.metric})
        else:
            sys.stdout.write(table.to_csv())
        return EXIT_OK

    raise AssertionError(args.command)


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "growth" and args.ext is False and args.aut:
        parser.error("--aut with growth requires --ext")
    try:
        return _run(args)
    except ResourceExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PilingError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
