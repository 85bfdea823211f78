"""Command line front end: ``totodd build|rank|kernel|verify|table|series``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .linalg import left_kernel, rank, right_kernel
from .matrices import KINDS
from .reports import dump_records, summarize
from .series import (
    TABLE_HEADER,
    compare_rank_to_conjecture,
    conjectured_rank_series,
    recursion_B,
    recursion_T,
    residual_series,
    series_E,
    series_O,
    series_S,
)
from .store import MatrixStore, checksum_of, format_matrix
from .suites import SUITES, RunConfig, run_suites


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--cache-dir", default=None, help="matrix cache (default $TOTODD_CACHE or ./cache)")
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="text")
    p.add_argument("--seed", type=int, default=0)
    return p


def _matrix_args(p):
    p.add_argument("kind", choices=KINDS)
    p.add_argument("N", type=int)
    p.add_argument("r", type=int)
    p.add_argument("j", type=int, nargs="?")


def _range_args(p):
    p.add_argument("--Nmax", type=int, default=None)
    p.add_argument("--rmax", type=int, default=None)


def make_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="totodd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build (or load) a matrix into the cache")
    _matrix_args(p)
    p = sub.add_parser("rank", parents=[common], help="exact rank and kernel dimension")
    _matrix_args(p)
    p = sub.add_parser("kernel", parents=[common], help="primitive kernel basis")
    _matrix_args(p)
    p.add_argument("--side", choices=("right", "left"), default="right")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite_pos", nargs="?", metavar="SUITE", choices=SUITES + ("all",))
    p.add_argument("--suite", action="append", choices=SUITES + ("all",), default=None)
    _range_args(p)
    p.add_argument("--samples", type=int, default=100, help="random polynomials per commute check")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="report path (default reports/verify-<suite>.json)")
    p.add_argument("--timings", action="store_true", help="include elapsed times in the report")

    p = sub.add_parser("table", parents=[common], help="rank vs conjecture table")
    _range_args(p)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("series", parents=[common], help="print generating series coefficients")
    p.add_argument("name", choices=("O", "E", "S", "T", "B", "R", "conj"))
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--bound", type=int, default=30)
    return parser


def _store(args) -> MatrixStore:
    return MatrixStore(args.cache_dir)


def cmd_build(args, out) -> int:
    m, path, hit = _store(args).get(args.kind, args.N, args.r, args.j)
    text = format_matrix(m, args.kind, args.N, args.r, args.j)
    print("%s %dx%d sha256:%s%s" % (path, m.rows, m.cols, checksum_of(text), " (cached)" if hit else ""),
          file=out)
    return 0


def cmd_rank(args, out) -> int:
    m, _, _ = _store(args).get(args.kind, args.N, args.r, args.j)
    rk = rank(m)
    if args.fmt == "json":
        print(json.dumps({"kind": args.kind, "N": args.N, "r": args.r, "j": args.j,
                          "rank": rk, "ker": m.cols - rk}), file=out)
    else:
        print("rank %d, ker %d" % (rk, m.cols - rk), file=out)
    return 0


def cmd_kernel(args, out) -> int:
    m, _, _ = _store(args).get(args.kind, args.N, args.r, args.j)
    kern = right_kernel(m) if args.side == "right" else left_kernel(m)
    if args.fmt == "json":
        print(json.dumps({"side": args.side, "ambient": kern.ambient,
                          "vectors": [list(v) for v in kern]}), file=out)
    else:
        print("%s kernel, dimension %d" % (args.side, kern.dim), file=out)
        for v in kern:
            print(" ".join(str(x) for x in v), file=out)
    return 0


def cmd_verify(args, out) -> int:
    suites = list(args.suite or [])
    if args.suite_pos:
        suites.insert(0, args.suite_pos)
    suites = tuple(suites or ["all"])
    config = RunConfig(Nmax=args.Nmax, rmax=args.rmax, cache_dir=args.cache_dir, fmt=args.fmt,
                       suites=suites, seed=args.seed, samples=args.samples, jobs=args.jobs,
                       timings=args.timings)
    records = run_suites(config)
    path = Path(args.out) if args.out else Path("reports") / ("verify-%s.json" % "+".join(suites))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_records(records, timings=args.timings))
    counts = summarize(records)
    for rec in records:
        if rec.status != "pass":
            print("%-9s %s N=%s r=%s j=%s expected=%s observed=%s" % (
                rec.status, rec.check, rec.N, rec.r, rec.j, rec.expected, rec.observed), file=out)
    print("%d pass, %d finding, %d violation -> %s" % (
        counts["pass"], counts["finding"], counts["violation"], path), file=out)
    return 1 if counts["violation"] else 0


def format_table(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(TABLE_HEADER, row)) for row in rows], indent=1) + "\n"
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_HEADER)
        writer.writerows(["" if x is None else x for x in row] for row in rows)
        return buf.getvalue()
    buf.write("%4s %3s %6s %6s %7s %16s  %s\n" % TABLE_HEADER)
    for row in rows:
        buf.write("%4s %3s %6s %6s %7s %16s  %s\n" % tuple("-" if x is None else x for x in row))
    return buf.getvalue()


def cmd_table(args, out) -> int:
    Nmax = 25 if args.Nmax is None else args.Nmax
    rmax = 4 if args.rmax is None else args.rmax
    rows, _ = compare_rank_to_conjecture(Nmax, rmax, args.max_size)
    fmt = "csv" if args.fmt == "text" and args.out else args.fmt
    text = format_table(rows, fmt)
    if args.out:
        Path(args.out).write_text(text)
        print(args.out, file=out)
    else:
        out.write(text)
    return 0


def cmd_series(args, out) -> int:
    b, r = args.bound, args.r
    makers = {
        "O": lambda: series_O(b),
        "E": lambda: series_E(b),
        "S": lambda: series_S(b),
        "T": lambda: recursion_T(r, b),
        "B": lambda: recursion_B(r, b),
        "R": lambda: residual_series(r, b),
        "conj": lambda: conjectured_rank_series(r, b),
    }
    s = makers[args.name]()
    if args.fmt == "json":
        print(json.dumps({"name": args.name, "r": r, "bound": b, "coeffs": s.coeffs}), file=out)
    else:
        print(" ".join(str(c) for c in s.coeffs), file=out)
    return 0


COMMANDS = {
    "build": cmd_build,
    "rank": cmd_rank,
    "kernel": cmd_kernel,
    "verify": cmd_verify,
    "table": cmd_table,
    "series": cmd_series,
}


def main(argv=None, out=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except ValueError as exc:
        print("totodd: error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
