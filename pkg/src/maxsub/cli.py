"""Command line interface: count | gromov | bkm | table | selftest.

Exit codes: 0 success, 1 usage or parse error, 2 zero-dimensionality
condition violated, 3 internal consistency failure.  ``--json`` output
follows the ``maxsub/1`` schema: canonical (sorted) field order, compact
separators, and every numeric payload rendered as a decimal string so
that consumers never lose precision on big integers.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import warnings

from ._backend import backend_name
from .bkm import BQuery, b_direct, b_recursive
from .counts import CountQuery, count
from .errors import (
    ConditionViolatedError,
    GeometricRangeWarning,
    InternalConsistencyError,
    MaxsubError,
    PathMismatchError,
)
from .polynomials import Polynomial
from .selftest import run_selftest
from .twisted import GromovQuery, decompose_degree, s_invariants, twisted_invariant

SCHEMA = "maxsub/1"
CSV_COLUMNS = ["r", "d", "k", "g", "b", "s_min", "e_max", "m", "status"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for
    # zero-dimensionality violations, so remap usage errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _threads_from(args) -> int | None:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("MAXSUB_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"MAXSUB_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _fmt(x) -> str:
    return str(x)


def _emit_json(record: dict) -> None:
    print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _cmd_count(args) -> int:
    q = CountQuery(args.r, args.d, args.k, args.g)
    res = count(q, paths=args.paths, threads=_threads_from(args))
    a, b = decompose_degree(args.d, args.r)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "count",
                "query": {
                    "r": _fmt(args.r),
                    "d": _fmt(args.d),
                    "k": _fmt(args.k),
                    "g": _fmt(args.g),
                },
                "value": _fmt(res.value),
                "s_report": {
                    "s_min": _fmt(res.s_report.s_min),
                    "epsilon": _fmt(res.s_report.epsilon),
                    "e_max": _fmt(res.s_report.e_max),
                    "a": _fmt(a),
                    "b": _fmt(b),
                },
                "paths": {name: _fmt(v) for name, v in sorted(res.paths.items())},
                "warnings": list(res.warnings),
            }
        )
    else:
        print(f"m({args.r},{args.d},{args.k},{args.g}) = {res.value}")
        print(
            f"s_min = {res.s_report.s_min} (epsilon = {res.s_report.epsilon}), "
            f"e_max = {res.s_report.e_max}, b = {b}"
        )
        print("paths: " + ", ".join(f"{n} = {v}" for n, v in sorted(res.paths.items())))
        for note in res.warnings:
            print(f"warning: {note}", file=sys.stderr)
    return 0


def _cmd_gromov(args) -> int:
    p = Polynomial.parse(args.poly, args.k)
    q = GromovQuery(args.r, args.k, args.g, args.d, args.e, p)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", GeometricRangeWarning)
        value = twisted_invariant(q, threads=_threads_from(args))
    notes = [
        str(w.message) for w in caught if issubclass(w.category, GeometricRangeWarning)
    ]
    record = {
        "schema": SCHEMA,
        "command": "gromov",
        "query": {
            "r": _fmt(args.r),
            "k": _fmt(args.k),
            "g": _fmt(args.g),
            "d": _fmt(args.d),
            "e": _fmt(args.e),
            "poly": str(p),
        },
        "value": _fmt(value),
        "warnings": notes,
    }
    if args.g >= 2:
        si = s_invariants(args.r, args.k, args.d, args.g)
        record["s_report"] = {
            "s_min": _fmt(si.s_min),
            "epsilon": _fmt(si.epsilon),
            "e_max": _fmt(si.e_max),
        }
    if args.json:
        _emit_json(record)
    else:
        print(value)
        for note in notes:
            print(f"warning: {note}", file=sys.stderr)
    return 0


def _cmd_bkm(args) -> int:
    q = BQuery(args.r, args.k, args.m)
    value = b_direct(q)
    check = b_recursive(q)
    if value != check:
        raise PathMismatchError(
            f"B({args.k},{args.m}) at r={args.r}: direct {value}, recursive {check}"
        )
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "bkm",
                "query": {"r": _fmt(args.r), "k": _fmt(args.k), "m": _fmt(q.m)},
                "value": _fmt(value),
            }
        )
    else:
        print(value)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like 2..8, got {text!r}")
    return int(lo), int(hi)


def _table_rows(args) -> list[dict]:
    r_lo, r_hi = _parse_range(args.r_range)
    if r_lo < 2:
        raise ValueError(f"table needs r >= 2, got {r_lo}")
    rows = []
    for r in range(r_lo, r_hi + 1):
        ks = range(1, r) if args.k == "all" else [int(args.k)]
        for d in range(r):
            for k in ks:
                if not 1 <= k < r:
                    continue
                si = s_invariants(r, k, d, args.g)
                _, b = decompose_degree(d, r)
                row = {
                    "r": r,
                    "d": d,
                    "k": k,
                    "g": args.g,
                    "b": b,
                    "s_min": si.s_min,
                    "e_max": si.e_max,
                    "epsilon": si.epsilon,
                }
                if si.epsilon == 0:
                    res = count(
                        CountQuery(r, d, k, args.g),
                        paths=args.paths,
                        threads=None,
                    )
                    row["m"] = res.value
                    row["status"] = "ok"
                else:
                    row["m"] = None
                    row["status"] = f"skipped(epsilon={si.epsilon})"
                rows.append(row)
    rows.sort(key=lambda row: (row["r"], row["d"], row["k"], row["g"]))
    return rows


def _cmd_table(args) -> int:
    rows = _table_rows(args)
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row["r"],
                    row["d"],
                    row["k"],
                    row["g"],
                    row["b"],
                    row["s_min"],
                    row["e_max"],
                    "" if row["m"] is None else row["m"],
                    row["status"],
                ]
            )
    else:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "table",
                "rows": [
                    {
                        "r": _fmt(row["r"]),
                        "d": _fmt(row["d"]),
                        "k": _fmt(row["k"]),
                        "g": _fmt(row["g"]),
                        "b": _fmt(row["b"]),
                        "s_min": _fmt(row["s_min"]),
                        "e_max": _fmt(row["e_max"]),
                        "epsilon": _fmt(row["epsilon"]),
                        "m": None if row["m"] is None else _fmt(row["m"]),
                        "status": row["status"],
                    }
                    for row in rows
                ],
            }
        )
    return 0


def _cmd_selftest(args) -> int:
    results = run_selftest(args.level)
    failures = [res for res in results if not res.ok]
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "selftest",
                "level": args.level,
                "backend": backend_name(),
                "checks": [
                    {
                        "name": res.name,
                        "ok": res.ok,
                        "elapsed": f"{res.elapsed:.3f}",
                        "detail": res.detail,
                    }
                    for res in results
                ],
            }
        )
    else:
        for res in results:
            mark = "PASS" if res.ok else "FAIL"
            line = f"{mark} {res.name} ({res.elapsed:.2f}s)"
            if res.detail:
                line += f": {res.detail}"
            print(line)
        print(
            f"{len(results) - len(failures)}/{len(results)} suites passed "
            f"[backend: {backend_name()}]"
        )
    if not failures:
        return 0
    return 3 if any(res.internal for res in failures) else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="maxsub", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--threads", type=int, default=None, help="worker threads")

    p_count = sub.add_parser("count", help="number of maximal subbundles m(r,d,k,g)")
    for flag in ("--r", "--d", "--k", "--g"):
        p_count.add_argument(flag, type=int, required=True)
    p_count.add_argument(
        "--paths",
        choices=["both", "direct", "reduction"],
        default="both",
        help="evaluation paths to run and cross-check",
    )
    add_common(p_count)
    p_count.set_defaults(fn=_cmd_count)

    p_gromov = sub.add_parser("gromov", help="twisted Gromov invariant N_{d,e}(P)")
    for flag in ("--r", "--k", "--g", "--d", "--e"):
        p_gromov.add_argument(flag, type=int, required=True)
    p_gromov.add_argument(
        "--poly", required=True, help='class polynomial, e.g. "X2^2" or "3*X1^2*X2 + 1/2*X1^4"'
    )
    add_common(p_gromov)
    p_gromov.set_defaults(fn=_cmd_gromov)

    p_bkm = sub.add_parser("bkm", help="the auxiliary sum B(k,m) at order r")
    for flag in ("--r", "--k", "--m"):
        p_bkm.add_argument(flag, type=int, required=True)
    add_common(p_bkm)
    p_bkm.set_defaults(fn=_cmd_bkm)

    p_table = sub.add_parser("table", help="grid of counts over r and d")
    p_table.add_argument("--r-range", dest="r_range", required=True, help="e.g. 2..8")
    p_table.add_argument("--k", default="all", help='subbundle rank, or "all"')
    p_table.add_argument("--g", type=int, required=True)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument(
        "--paths",
        choices=["both", "direct", "reduction"],
        default="both",
    )
    p_table.add_argument("--threads", type=int, default=None)
    p_table.set_defaults(fn=_cmd_table)

    p_self = sub.add_parser("selftest", help="run the invariant suites")
    p_self.add_argument("--level", choices=["quick", "full"], default="quick")
    p_self.add_argument("--json", action="store_true")
    p_self.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConditionViolatedError as exc:
        print(f"maxsub: condition violated: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"maxsub: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (MaxsubError, ValueError, ZeroDivisionError) as exc:
        print(f"maxsub: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
