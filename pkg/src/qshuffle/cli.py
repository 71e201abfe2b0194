"""Command-line front end: ``qshuffle expand|catalan|profile|pbw|verify``.

Exit codes: 0 everything passed, 1 some identity failed, 2 usage error,
evaluation error or inconclusive result.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import freealg, laurent, shuffle as shuffle_mod
from .catalan import (
    cw_elevation,
    cw_profile,
    elevation,
    enumerate_catalan,
    profile,
    profile_to_word,
)
from .errors import DegenerateEvaluation, InvalidProfile, InvalidWord, NotCatalan, ZeroEvaluationPoint
from .pbw import PBWLabel, independence_evidence, pbw_image_closed, pbw_image_recursive
from .relations import VerifyConfig, catalan_suite, relations_suite, theorem_suite
from .report import SuiteReport
from .shuffle import qserre_check, shuffle

FORMATS = ("text", "json", "latex")
SUITES = ("all", "theorem", "serre", "catalan", "section3", "independence")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _word(text: str) -> str:
    try:
        return freealg.parse_word(text)
    except InvalidWord as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number like 2 or 3/2, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qshuffle",
        description="Exact computations in the two-letter q-shuffle algebra.",
    )
    parser.add_argument("--memo-cap", type=_positive, default=None,
                        help="maximum entries in the shuffle memo table before it is reset")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="q-shuffle product of two words")
    p.add_argument("left", type=_word)
    p.add_argument("right", type=_word)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("catalan", help="list the Catalan words of length 2n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--profiles", action="store_true", help="show elevation and profile")
    p.add_argument("--coeffs", action="store_true", help="show the coefficient C(w)")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("profile", help="profile of a Catalan word, or the word of a profile")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("word", nargs="?", type=_word)
    group.add_argument("--to-word", metavar="L0,H1,L1,...", help="comma-separated profile")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("pbw", help="image of a PBW element in the q-shuffle algebra")
    p.add_argument("--kind", choices=("a0", "a1", "delta"), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=("recursive", "closed"), default="recursive")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-n", type=_nonneg, default=5,
                   help="bound for the main theorem, recurrences and commutation (default 5)")
    p.add_argument("--max-ij", type=_nonneg, default=3,
                   help="bound on i, j for the relation corollaries (default 3)")
    p.add_argument("--degree", type=_nonneg, default=6,
                   help="largest total degree for the independence check (default 6)")
    p.add_argument("--q0", type=_rational, default=Fraction(2),
                   help="evaluation point for the independence check (default 2)")
    p.add_argument("--report", metavar="PATH", help="write one JSON record per identity instance")
    return parser


def _emit_element(v: freealg.Element, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(freealg.to_json(v), sort_keys=True)
    if fmt == "latex":
        return freealg.to_latex(v)
    return freealg.to_text(v)


def _cmd_expand(args) -> int:
    u, v = freealg.Element.word(args.left), freealg.Element.word(args.right)
    print(_emit_element(shuffle(u, v), args.format))
    return 0


def _catalan_row(w: str, show_profiles: bool, show_coeffs: bool) -> dict:
    row: dict = {"word": freealg.word_text(w)}
    if show_profiles:
        row["elevation"] = list(elevation(w))
        row["profile"] = list(profile(w))
    if show_coeffs:
        row["coeff"] = cw_elevation(w)
    return row


def _cmd_catalan(args) -> int:
    rows = [_catalan_row(w, args.profiles, args.coeffs) for w in enumerate_catalan(args.n)]
    if args.format == "json":
        for row in rows:
            if "coeff" in row:
                row["coeff"] = laurent.to_json(row["coeff"])
        print(json.dumps({"n": args.n, "count": len(rows), "words": rows}, sort_keys=True))
        return 0
    for row in rows:
        cells = [row["word"]]
        if args.format == "latex":
            if args.profiles:
                cells.append("(" + ",".join(map(str, row["profile"])) + ")")
            if args.coeffs:
                cells.append("$" + laurent.to_latex(row["coeff"]) + "$")
            print(" & ".join(cells) + r" \\")
            continue
        if args.profiles:
            cells.append("elevation=(" + ",".join(map(str, row["elevation"])) + ")")
            cells.append("profile=(" + ",".join(map(str, row["profile"])) + ")")
        if args.coeffs:
            cells.append(f"C(w)={row['coeff']}")
        print("  ".join(cells))
    return 0


def _cmd_profile(args) -> int:
    if args.to_word is not None:
        try:
            p = tuple(int(v) for v in args.to_word.split(","))
        except ValueError:
            raise InvalidProfile(f"could not read profile {args.to_word!r}")
        w = profile_to_word(p)
    else:
        w = args.word
        p = profile(w)
    coeff = cw_profile(p)
    if args.format == "json":
        print(json.dumps({"word": freealg.word_text(w), "elevation": list(elevation(w)),
                          "profile": list(p), "coeff": laurent.to_json(coeff)}, sort_keys=True))
    elif args.format == "latex":
        print(f"{freealg.word_text(w)} & ({','.join(map(str, p))}) & ${laurent.to_latex(coeff)}$ \\\\")
    else:
        print(f"word: {freealg.word_text(w)}")
        print(f"elevation: ({','.join(map(str, elevation(w)))})")
        print(f"profile: ({','.join(map(str, p))})")
        print(f"C(w): {coeff}")
    return 0


def _cmd_pbw(args) -> int:
    try:
        label = PBWLabel(args.kind, args.n)
    except ValueError as exc:
        print(f"qshuffle: error: {exc}", file=sys.stderr)
        return 2
    image = pbw_image_recursive(label) if args.method == "recursive" else pbw_image_closed(label)
    print(_emit_element(image.value, args.format))
    return 0


def _cmd_verify(args) -> int:
    cfg = VerifyConfig(max_n=args.max_n, max_commute=args.max_n, aver_n=args.max_n,
                       max_ij=args.max_ij)
    suite = SuiteReport()
    if args.suite in ("all", "serre"):
        suite.extend(qserre_check())
    if args.suite in ("all", "theorem"):
        suite.extend(theorem_suite(cfg))
    if args.suite in ("all", "catalan"):
        suite.extend(catalan_suite(cfg))
    if args.suite in ("all", "section3"):
        suite.extend(relations_suite(cfg))
    if args.suite == "independence":
        for d in range(args.degree + 1):
            suite.extend([independence_evidence(d, args.q0)])
    for line in suite.summary_lines():
        print(line)
    code = suite.exit_code()
    verdict = {0: "ALL PASS", 1: f"{len(suite.failures)} FAILURES", 2: "INCONCLUSIVE"}[code]
    print(f"{verdict} ({len(suite.reports)} checks)")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(suite.to_jsonl())
    return code


COMMANDS = {
    "expand": _cmd_expand,
    "catalan": _cmd_catalan,
    "profile": _cmd_profile,
    "pbw": _cmd_pbw,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.memo_cap:
        shuffle_mod.set_memo_cap(args.memo_cap)
    try:
        return COMMANDS[args.command](args)
    except (NotCatalan, InvalidProfile, InvalidWord) as exc:
        print(f"qshuffle: error: {exc}", file=sys.stderr)
        return 2
    except (ZeroEvaluationPoint, DegenerateEvaluation) as exc:
        print(f"qshuffle: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
