"""Command-line front end: compute, verify, sequence, bench.

Exit codes: 0 success / all-match, 1 usage or input error, 2 verification
mismatch, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import decompose, families, oracle, verify
from .graph import EdgeListParseError, Graph, parse_edge_list
from .poly import DomPoly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3

THREADS_ENV = "DOMCHAIN_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for verification
    # mismatches here, so route usage errors to exit code 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}")


def _parse_range(text: str) -> range:
    """'A:B' -> inclusive range A..B."""
    try:
        a, b = text.split(":")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"expected range 'A:B', got {text!r}")
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _check_cap(cap: int | None) -> int | None:
    if cap is not None and cap > oracle.HARD_CAP:
        raise UsageError(f"--cap {cap} exceeds hard safety limit {oracle.HARD_CAP}")
    return cap


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as f:
            f.write(text)


# -- compute -----------------------------------------------------------------

def _compute_one(method, family, n, g, cap, threads):
    if method == "oracle":
        return oracle.domination_polynomial(g, cap=cap, threads=threads)
    if method == "vertex":
        return decompose.vertex_recurrence(g, cap=cap, memo={})
    if method == "edge":
        return decompose.edge_recurrence(g, cap=cap, memo={})
    if method == "product":
        return decompose.components_product(g, cap=cap, memo={})
    if method == "recurrence":
        return families.family_polynomial(family, n)
    raise UsageError(f"unknown method {method!r}")


def _record(family: str | None, n: int, p: DomPoly) -> dict:
    return {
        "n": n,
        "family": family,
        "coeffs": p.coeff_strings(),
        "gamma": p.gamma(),
        "count_at_1": str(p.eval_at(1)),
        "degree": p.degree,
    }


def cmd_compute(args) -> int:
    cap = _check_cap(args.cap)
    threads = args.threads if args.threads is not None else _default_threads()
    if args.file is not None:
        if args.family is not None:
            raise UsageError("--file and --family are mutually exclusive")
        if args.method == "recurrence":
            raise UsageError("--method recurrence requires a --family input")
        with open(args.file) as f:
            g = parse_edge_list(f.read())
        jobs = [(None, g.n, g)]
    else:
        if args.family is None:
            raise UsageError("one of --family or --file is required")
        if args.n is None and args.n_range is None:
            raise UsageError("one of --n or --n-range is required with --family")
        ns = [args.n] if args.n is not None else list(_parse_range(args.n_range))
        jobs = [(args.family, n, families.build_chain(args.family, n)) for n in ns]

    records = []
    for family, n, g in jobs:
        p = _compute_one(args.method, family, n, g, cap, threads)
        records.append(_record(family, n, p))

    if args.format == "json":
        payload = records[0] if len(records) == 1 and args.n_range is None else records
        out = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["family", "n", "degree", "gamma", "count_at_1", "polynomial"])
        for r in records:
            w.writerow([r["family"] or "", r["n"], r["degree"], r["gamma"],
                        r["count_at_1"], DomPoly.from_coeff_strings(r["coeffs"]).to_text()])
        out = buf.getvalue()
    else:
        lines = []
        for r in records:
            poly = DomPoly.from_coeff_strings(r["coeffs"]).to_text()
            if len(records) == 1 and args.n_range is None:
                lines.append(poly)
            else:
                lines.append(
                    f"n={r['n']} degree={r['degree']} gamma={r['gamma']} "
                    f"count={r['count_at_1']} {poly}"
                )
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    cap = _check_cap(args.cap)
    subset = (args.family,) if args.family else None
    report = verify.verify_families(
        max_n=args.max_n,
        family_subset=subset,
        include_literal=args.literal_paper,
        cap=cap,
    )
    if args.format == "json":
        out = json.dumps(report.to_json_dict(), indent=2) + "\n"
    else:
        out = report.to_text()
    _emit(out, args.output)
    return EXIT_OK if report.all_match else EXIT_MISMATCH


# -- sequence ------------------------------------------------------------------

def _sequence_values(family: str, max_n: int) -> tuple[int, list[int]]:
    """(start index, counts) of total dominating sets along the family."""
    if family == "T":
        return 0, families.t_count_sequence(max_n)
    if max_n < 1:
        raise UsageError(f"family {family} sequences start at n=1; --max-n must be >= 1")
    states = families.q_stream(max_n) if family == "Q" else families.o_stream(max_n)
    return 1, [states[n].chain.eval_at(1) for n in range(1, max_n + 1)]


def cmd_sequence(args) -> int:
    start, values = _sequence_values(args.family, args.max_n)
    if args.format == "json":
        out = json.dumps({
            "family": args.family,
            "start_n": start,
            "values": [str(v) for v in values],
        }, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "count"])
        for i, v in enumerate(values, start=start):
            w.writerow([i, v])
        out = buf.getvalue()
    else:
        out = ", ".join(str(v) for v in values) + "\n"
    _emit(out, args.output)
    return EXIT_OK


# -- bench ---------------------------------------------------------------------

def cmd_bench(args) -> int:
    cap = _check_cap(args.cap)
    cap_val = oracle.DEFAULT_CAP if cap is None else cap
    threads = args.threads if args.threads is not None else _default_threads()
    ns = _parse_range(args.n_range)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["family", "n", "vertices", "subsets",
                "oracle_seconds", "recurrence_seconds", "speedup", "status"])
    for n in ns:
        order = families.family_order(args.family, n)
        t0 = time.perf_counter()
        families.family_polynomial(args.family, n)
        rec_s = time.perf_counter() - t0
        if order > cap_val:
            w.writerow([args.family, n, order, 2 ** order, "", f"{rec_s:.6f}", "",
                        f"skipped: {order} vertices exceeds cap {cap_val}"])
            continue
        g = families.build_chain(args.family, n)
        t0 = time.perf_counter()
        oracle.domination_polynomial(g, cap=cap_val, threads=threads)
        orc_s = time.perf_counter() - t0
        speedup = orc_s / rec_s if rec_s > 0 else float("inf")
        w.writerow([args.family, n, order, 2 ** order,
                    f"{orc_s:.6f}", f"{rec_s:.6f}", f"{speedup:.1f}", "ok"])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


# -- argument wiring -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domchain",
                     description="Exact domination polynomials of graphs and cactus chains.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", metavar="PATH", default=None,
                       help="write to file instead of stdout")
        p.add_argument("--cap", type=int, default=None,
                       help=f"enumeration cap override (max {oracle.HARD_CAP})")

    p = sub.add_parser("compute", help="compute a domination polynomial")
    p.add_argument("--family", choices=families.FAMILY_NAMES, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-range", metavar="A:B", default=None)
    p.add_argument("--file", metavar="PATH", default=None,
                   help="edge-list input instead of a family")
    p.add_argument("--method",
                   choices=("oracle", "vertex", "edge", "product", "recurrence"),
                   default="oracle")
    p.add_argument("--threads", type=int, default=None,
                   help=f"oracle thread count (default: ${THREADS_ENV} or 1)")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-check every chain identity against the oracle")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--family", choices=("T", "Q", "O"), default=None)
    p.add_argument("--literal-paper", action="store_true",
                   help="also run the literally-published variants of disputed identities")
    common(p, formats=("text", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="total dominating-set counts along a family")
    p.add_argument("--family", choices=("T", "Q", "O"), required=True)
    p.add_argument("--max-n", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("bench", help="time oracle vs closed recurrence (CSV)")
    p.add_argument("--family", choices=families.FAMILY_NAMES, default="T")
    p.add_argument("--n-range", metavar="A:B", default="1:8")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--output", metavar="PATH", default=None)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except oracle.EnumerationCapError as e:
        print(f"domchain: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, EdgeListParseError) as e:
        print(f"domchain: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        print(f"domchain: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
