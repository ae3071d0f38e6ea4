"""Command-line frontend.

Every library operation is reachable through a subcommand, each with text
output (human-readable) and JSON output (one schema-valid document on
stdout, byte-stable for identical inputs).  Exit codes: 0 success (and,
for verify/degree, pair valid); 1 verification failed; 2 usage or input
error; 3 resource guard tripped (materialization cap or work budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import moments, oracle, pseq, pte
from .errors import (
    MalformedSequenceError,
    MaterializationCapError,
    PairFormatError,
    WorkBudgetError,
)
from .pseq import DEFAULT_CAP
from .pte import AffineMap, PtePair

RANDOM_INDEX_RANGE = (2, 8)
RANDOM_SCALE_BOUND = 10
RANDOM_OFFSET_BOUND = 100


def read_pair(path: str | None) -> PtePair:
    """Load a pair document from a file, or stdin when path is None."""
    text = Path(path).read_text() if path else sys.stdin.read()
    return pte.pair_from_json_dict(json.loads(text))


def write_pair(pair: PtePair, path: str | None = None) -> None:
    """Write a pair document to a file, or stdout when path is None."""
    doc = json.dumps(pair.to_json_dict())
    if path:
        Path(path).write_text(doc + "\n")
    else:
        print(doc)


def _cap(args: argparse.Namespace) -> int | None:
    return args.cap if args.cap > 0 else None


def _print_pair_text(pair: PtePair) -> None:
    print("U:", " ".join(str(x) for x in pair.u_set))
    print("V:", " ".join(str(x) for x in pair.v_set))
    print("n:", pair.claimed_n)


def _emit_pair(pair: PtePair, fmt: str) -> None:
    if fmt == "json":
        write_pair(pair)
    else:
        _print_pair_text(pair)


def _format_poly(coefficients: tuple[int, ...]) -> str:
    terms = []
    for j, c in enumerate(coefficients):
        if not c:
            continue
        if j == 0:
            terms.append(str(c))
        elif j == 1:
            terms.append(f"{c}*x")
        else:
            terms.append(f"{c}*x^{j}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def cmd_seq(args: argparse.Namespace) -> int:
    n = args.n
    if args.length:
        length = pseq.length_of(n)
        if args.format == "json":
            print(json.dumps({"n": n, "length": length}))
        else:
            print(length)
        return 0
    if args.at is not None:
        sign = pseq.element_at(n, args.at)
        if args.format == "json":
            print(json.dumps({"n": n, "i": args.at, "sign": int(sign)}))
        else:
            print(sign)
        return 0
    if args.supports:
        source: pseq.PSeq | int = (
            n if args.virtual else pseq.generate(n, cap=_cap(args))
        )
        sup = pseq.support_sets(source)
        if args.format == "json":
            print(
                json.dumps(
                    {"n": n, "x": sorted(sup.x_set), "y": sorted(sup.y_set)}
                )
            )
        else:
            print("X:", " ".join(str(i) for i in sorted(sup.x_set)))
            print("Y:", " ".join(str(i) for i in sorted(sup.y_set)))
        return 0
    if args.decode:
        text = (
            Path(args.file).read_text() if args.file else sys.stdin.read()
        ).strip()
        seq = pseq.decode_text(text, n, cap=_cap(args))
    else:
        seq = pseq.generate(n, cap=_cap(args))
    if args.format == "json":
        print(json.dumps(pseq.to_json_dict(seq)))
    else:
        print(pseq.encode_text(seq))
    return 0


def cmd_moments(args: argparse.Namespace) -> int:
    if args.virtual:
        values = tuple(
            moments.moment(args.n, t) for t in range(args.max_t + 1)
        )
        vector = moments.MomentVector(seq_index=args.n, values=values)
    else:
        vector = moments.moments_fast(args.n, args.max_t)
    if args.format == "json":
        print(json.dumps(vector.to_json_dict()))
    else:
        for t, value in enumerate(vector.values):
            print(f"{t}: {value}")
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    poly = moments.f_poly_coeffs(args.n, args.s)
    if args.eval is not None:
        x = Fraction(args.eval)
        value = moments.f_eval(args.n, args.s, x)
        if args.format == "json":
            print(
                json.dumps(
                    {"n": args.n, "s": args.s, "x": str(x), "value": str(value)}
                )
            )
        else:
            print(value)
        return 0
    if args.degree:
        degree = poly.degree
        if args.format == "json":
            doc_degree = "identically-zero" if degree is None else degree
            print(json.dumps({"n": args.n, "s": args.s, "degree": doc_degree}))
        else:
            print("identically-zero" if degree is None else degree)
        return 0
    if args.format == "json":
        print(json.dumps(poly.to_json_dict()))
    else:
        print(_format_poly(poly.coefficients))
    return 0


def cmd_pte_affine(args: argparse.Namespace) -> int:
    if args.random:
        if args.seed is None:
            raise ValueError("--random requires an explicit --seed")
        import random

        rng = random.Random(args.seed)
        n = rng.randint(*RANDOM_INDEX_RANGE)
        scale = rng.choice(
            [p for p in range(-RANDOM_SCALE_BOUND, RANDOM_SCALE_BOUND + 1) if p]
        )
        offset = rng.randint(-RANDOM_OFFSET_BOUND, RANDOM_OFFSET_BOUND)
    else:
        if args.n is None or args.p is None or args.l is None:
            raise ValueError("pte-affine requires -n, -p, and -l (or --random)")
        n, scale, offset = args.n, args.p, args.l
    pair = pte.pair_from_affine(
        n, AffineMap(scale, offset), cap=_cap(args), virtual=args.virtual
    )
    _emit_pair(pair, args.format)
    return 0


def cmd_pte_diff(args: argparse.Namespace) -> int:
    pair = pte.pair_from_difference(
        args.m, cap=_cap(args), virtual=args.virtual
    )
    _emit_pair(pair, args.format)
    return 0


def _print_report_text(report: pte.VerificationReport, claimed_n: int) -> None:
    print("valid:", "yes" if report.is_valid else "no")
    print("claimed n:", claimed_n)
    first = report.first_difference
    print("first difference:", "none" if first is None else first)
    if report.failure_reason:
        print("failure:", report.failure_reason)
    for s, su, sv in report.sums_table:
        rel = "=" if su == sv else "!="
        print(f"s={s}: {su} {rel} {sv}")


def cmd_verify(args: argparse.Namespace) -> int:
    pair = read_pair(args.file)
    check = oracle.naive_verify if args.naive else pte.verify_pair
    report = check(pair)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        _print_report_text(report, pair.claimed_n)
    return 0 if report.is_valid else 1


def cmd_degree(args: argparse.Namespace) -> int:
    pair = read_pair(args.file)
    try:
        degree = pte.pair_degree(pair.u_set, pair.v_set)
    except ValueError as exc:
        print(f"invalid pair: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({"degree": degree}))
    else:
        print(degree)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    spec = oracle.SearchSpec(
        lo=args.lo, hi=args.hi, set_size=args.size, min_degree=args.degree
    )
    result = oracle.exhaustive_search(
        spec, budget=args.budget, threads=args.threads
    )
    if args.format == "json":
        print(json.dumps(result.to_json_dict()))
    else:
        for pair in result.pairs:
            u = " ".join(str(x) for x in pair.u_set)
            v = " ".join(str(x) for x in pair.v_set)
            print(f"U: {u} | V: {v} | n: {pair.claimed_n}")
        print("examined:", result.examined)
        print("found:", result.found)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    comparison = oracle.compare_methods(
        args.m, args.p, args.l, budget=args.budget, cap=_cap(args)
    )
    if args.format == "json":
        print(json.dumps(comparison.to_json_dict()))
        return 0
    for entry in comparison.matched:
        u = " ".join(str(x) for x in entry.pair.u_set)
        v = " ".join(str(x) for x in entry.pair.v_set)
        print(
            f"m={entry.diff_index}: U: {u} | V: {v} | "
            f"affine witness: p={entry.scale} l={entry.offset}"
        )
    for entry in comparison.unmatched:
        u = " ".join(str(x) for x in entry.pair.u_set)
        v = " ".join(str(x) for x in entry.pair.v_set)
        print(
            f"m={entry.diff_index}: U: {u} | V: {v} | "
            f"no affine witness within bounds"
        )
    print("affine-only pairs within bounds:", comparison.affine_only_count)
    for n, p, l in comparison.affine_only_sample:
        print(f"  sample: seq_index={n} p={p} l={l}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pteseq",
        description=(
            "Ternary sign sequences and equal-power-sum pairs with exact "
            "arithmetic"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )
    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        metavar="N",
        help=f"materialization cap in elements, 0 for unlimited "
        f"(default: {DEFAULT_CAP})",
    )

    p = sub.add_parser(
        "seq", parents=[fmt, cap], help="generate or inspect a sequence"
    )
    p.add_argument("-n", type=int, required=True, help="sequence index (1-based)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--at", type=int, metavar="I", help="print only the element at position I"
    )
    mode.add_argument(
        "--supports", action="store_true", help="print the sign support sets"
    )
    mode.add_argument(
        "--length", action="store_true", help="print only the element count"
    )
    mode.add_argument(
        "--decode",
        action="store_true",
        help="read text form from --file/stdin and validate it against index n",
    )
    p.add_argument("--file", metavar="PATH", help="input file for --decode")
    p.add_argument(
        "--virtual",
        action="store_true",
        help="stream elements instead of materializing (with --supports)",
    )
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser(
        "moments", parents=[fmt], help="exact moments of a sequence"
    )
    p.add_argument("-n", type=int, required=True, help="sequence index")
    p.add_argument(
        "-s",
        "--max-t",
        dest="max_t",
        type=int,
        required=True,
        metavar="T",
        help="largest exponent to compute",
    )
    p.add_argument(
        "--virtual",
        action="store_true",
        help="direct streamed summation instead of the index recurrence",
    )
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser(
        "poly",
        parents=[fmt],
        help="shift polynomial coefficients, degree, or value",
    )
    p.add_argument("-n", type=int, required=True, help="sequence index")
    p.add_argument("-s", type=int, required=True, help="shift exponent")
    p.add_argument(
        "--eval",
        metavar="X",
        help="evaluate at the rational point X instead "
        "(write negatives as --eval=-3/2)",
    )
    p.add_argument(
        "--degree",
        action="store_true",
        help="print the degree (or identically-zero) instead",
    )
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser(
        "pte-affine",
        parents=[fmt, cap],
        help="pair from an affine image of one sequence's supports",
    )
    p.add_argument("-n", type=int, help="sequence index (>= 2)")
    p.add_argument("-p", type=int, help="affine scale (nonzero)")
    p.add_argument("-l", type=int, help="affine offset")
    p.add_argument(
        "--random",
        action="store_true",
        help=f"draw n, p, l at random (n in {RANDOM_INDEX_RANGE}, "
        f"|p| <= {RANDOM_SCALE_BOUND}, |l| <= {RANDOM_OFFSET_BOUND})",
    )
    p.add_argument(
        "--seed", type=int, help="RNG seed, required with --random"
    )
    p.add_argument(
        "--virtual", action="store_true", help="stream the sequence"
    )
    p.set_defaults(func=cmd_pte_affine)

    p = sub.add_parser(
        "pte-diff",
        parents=[fmt, cap],
        help="pair from support differences of consecutive sequences",
    )
    p.add_argument(
        "-m", type=int, required=True, help="difference index (>= 0)"
    )
    p.add_argument(
        "--virtual", action="store_true", help="stream the sequences"
    )
    p.set_defaults(func=cmd_pte_diff)

    p = sub.add_parser(
        "verify", parents=[fmt], help="verify a pair document"
    )
    p.add_argument(
        "--file", metavar="PATH", help="pair JSON file (default: stdin)"
    )
    p.add_argument(
        "--naive",
        action="store_true",
        help="use the independent oracle implementation",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "degree", parents=[fmt], help="measured degree of a pair document"
    )
    p.add_argument(
        "--file", metavar="PATH", help="pair JSON file (default: stdin)"
    )
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser(
        "search", parents=[fmt], help="exhaustive pair search on a range"
    )
    p.add_argument("--lo", type=int, required=True, help="range lower bound")
    p.add_argument("--hi", type=int, required=True, help="range upper bound")
    p.add_argument(
        "--size", type=int, required=True, metavar="M", help="subset size"
    )
    p.add_argument(
        "--degree",
        type=int,
        required=True,
        metavar="D",
        help="required equal-power-sum range 1..D",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=oracle.DEFAULT_BUDGET,
        help=f"work budget in pair evaluations (default: {oracle.DEFAULT_BUDGET})",
    )
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for signature groups (default: 1)",
    )
    p.set_defaults(func=cmd_search)

    p = sub.add_parser(
        "compare",
        parents=[fmt, cap],
        help="empirical comparison of the two pair methods",
    )
    p.add_argument(
        "-m", type=int, required=True, metavar="M_MAX", help="largest difference index"
    )
    p.add_argument(
        "-p", type=int, required=True, metavar="P_BOUND", help="affine scale bound"
    )
    p.add_argument(
        "-l", type=int, required=True, metavar="L_BOUND", help="affine offset bound"
    )
    p.add_argument(
        "--budget",
        type=int,
        default=oracle.DEFAULT_BUDGET,
        help="work budget in element evaluations",
    )
    p.set_defaults(func=cmd_compare)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, and map errors to the exit-code contract."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (MalformedSequenceError, PairFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MaterializationCapError, WorkBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
