"""Command-line front end: crs-lab <compute|table|verify|seq> [flags].

Output discipline, shared by every command: integers are full-precision
decimal strings, rationals are lowest-terms "p/q", CSV uses commas and "\\n"
with no quoting (no field ever contains a comma), JSON is indented with a
fixed key order.  The same invocation always produces byte-identical output,
whatever --jobs says, because results are buffered and emitted in parameter
order.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import verify as verify_mod
from .crs import CrsQuery, crs_closed
from .exact import format_rational, parse_rational
from .weighted import DIRECT_SUM_GUARD, weighted_average_closed, weighted_average_value

_FULL_PERIOD_GUARD = DIRECT_SUM_GUARD


def _parse_int_list(text: str) -> list[int]:
    """Accept "7", "2,5,10" or "2..40" (inclusive range)."""
    text = text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(part) for part in text.split(",") if part != ""]


def _parse_rational_list(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part != ""]


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _rows_as_json(header: list[str], rows: list[list[str]]) -> str:
    payload = [dict(zip(header, row)) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# compute


def _cmd_compute(args: argparse.Namespace) -> int:
    if args.kind == "crs":
        value = crs_closed(CrsQuery(args.k, args.s, args.j)).value
        sys.stdout.write(f"{value}\n")
    else:
        value = weighted_average_value(args.k, args.r, args.s)
        sys.stdout.write(format_rational(value) + "\n")
    return 0


# ---------------------------------------------------------------------------
# table


def _table_crs_rows(k_values: list[int], s_values: list[int], j_values: list[int] | None):
    rows = []
    for k in sorted(k_values):
        for s in sorted(s_values):
            period = k**s
            if j_values is None and period > _FULL_PERIOD_GUARD:
                rows.append(
                    [str(k), str(s), "", "", "", "", f"full period needs k**s <= {_FULL_PERIOD_GUARD}"]
                )
                continue
            js = range(1, period + 1) if j_values is None else sorted(j_values)
            for j in js:
                ev = crs_closed(CrsQuery(k, s, j))
                rows.append([str(k), str(s), str(j), str(ev.value), str(ev.d), str(ev.gcd_s), ""])
    return ["k", "s", "j", "value", "d", "gcd_s", "error"], rows


def _table_weighted_rows(k_values: list[int], r_values: list[int], s_values: list[int]):
    rows = []
    for k in sorted(k_values):
        for r in sorted(r_values):
            for s in sorted(s_values):
                if k == 1:
                    # the closed-form split does not describe the dispatch value here
                    rows.append([str(k), str(r), str(s), "1", "", "", "", ""])
                    continue
                b = weighted_average_closed(k, r, s)
                rows.append(
                    [
                        str(k),
                        str(r),
                        str(s),
                        format_rational(b.value),
                        format_rational(b.leading),
                        format_rational(b.bernoulli_tail),
                        format_rational(b.delta_correction),
                        "",
                    ]
                )
    header = ["k", "r", "s", "value", "leading", "bernoulli_tail", "delta_correction", "error"]
    return header, rows


def _cmd_table(args: argparse.Namespace) -> int:
    if args.kind == "crs":
        k_values = args.k if args.k is not None else list(range(1, (args.k_max or 0) + 1))
        header, rows = _table_crs_rows(k_values, args.s, args.j)
    else:
        k_values = args.k if args.k is not None else list(range(1, (args.k_max or 0) + 1))
        r_values = args.r if args.r is not None else list(range(1, (args.r_max or 0) + 1))
        header, rows = _table_weighted_rows(k_values, r_values, args.s)
    text = _csv(header, rows) if args.format == "csv" else _rows_as_json(header, rows)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def _suite_overrides(args: argparse.Namespace) -> dict:
    over: dict = {}
    if args.suite == "thm31":
        if args.eps is not None:
            over["eps_values"] = tuple(args.eps)
        if args.r is not None:
            over["r_values"] = tuple(sorted(args.r))
        if args.s is not None:
            over["s_values"] = tuple(sorted(args.s))
    elif args.suite == "thm32":
        if args.lam is not None:
            over["lam"] = args.lam
        if args.n is not None:
            over["n_list"] = tuple(sorted(args.n))
        if args.r is not None:
            over["r_values"] = tuple(sorted(args.r))
        if args.s is not None:
            over["s_values"] = tuple(sorted(args.s))
    elif args.suite == "thm33":
        if args.x is not None:
            over["x_max"] = args.x
        if args.r_max is not None:
            over["r_max"] = args.r_max
        if args.s is not None:
            over["s_values"] = tuple(sorted(args.s))
    elif args.suite == "thm34":
        if args.k_max is not None:
            over["k_max"] = args.k_max
        if args.s is not None:
            over["s_values"] = tuple(sorted(args.s))
    elif args.suite == "corollary":
        if args.k_max is not None:
            over["k_max"] = args.k_max
        if args.r_max is not None:
            over["r_max"] = args.r_max
        if args.s is not None:
            over["s_values"] = tuple(sorted(args.s))
    elif args.suite == "identities":
        if args.k_max is not None:
            over["oracle_k_max_s1"] = args.k_max
            over["oracle_k_max_s2"] = min(args.k_max, 20)
            over["form_k_max"] = min(args.k_max, 12)
        if args.r_max is not None:
            over["form_r_max"] = args.r_max
    return over


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "thm31" and args.k is not None:
        # explicit-instance mode: exactly the named k values
        eps_values = args.eps if args.eps is not None else [Fraction(1, 2)]
        reports = [
            verify_mod.check_theorem_3_1(k, r, s, eps)
            for eps in eps_values
            for k in sorted(args.k)
            for r in sorted(args.r or [2])
            for s in sorted(args.s or [1])
        ]
    else:
        reports = verify_mod.run_suite(args.suite, jobs=args.jobs, **_suite_overrides(args))
    payload = [verify_mod.report_to_dict(report) for report in reports]
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    passed = sum(1 for report in reports if verify_mod.report_holds(report))
    failed = len(reports) - passed
    print(f"{args.suite}: {passed} passed, {failed} failed", file=sys.stderr)
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------
# seq


_SEQ_VARIANTS = {
    "primes": "bounded-omega",
    "window": "window",
    "window2": "window-times2",
}


def _cmd_seq(args: argparse.Namespace) -> int:
    variant = _SEQ_VARIANTS[args.variant]
    report = verify_mod.check_theorem_3_2(
        variant, args.r, args.s, tuple(sorted(args.n)), args.lam
    )
    header = ["n", "k_n", "omega", "value", "target", "gap"]
    rows = []
    for row in report.rows:
        rows.append(
            [
                str(row.n),
                str(row.k_n),
                str(row.omega),
                format_rational(row.value) if row.value is not None else "",
                format_rational(row.target),
                format_rational(row.gap) if row.gap is not None else "",
            ]
        )
    text = _csv(header, rows) if args.format == "csv" else _rows_as_json(header, rows)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser


def _int_list(text: str) -> list[int]:
    try:
        return _parse_int_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> list[Fraction]:
    try:
        return _parse_rational_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crs-lab",
        description="Exact Cohen-Ramanujan sums, weighted averages, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print one exact value")
    compute_sub = compute.add_subparsers(dest="kind", required=True)
    compute_crs = compute_sub.add_parser("crs", help="one c_k^(s)(j)")
    compute_crs.add_argument("--k", type=int, required=True)
    compute_crs.add_argument("--s", type=int, required=True)
    compute_crs.add_argument("--j", type=int, required=True)
    compute_crs.set_defaults(func=_cmd_compute)
    compute_w = compute_sub.add_parser("weighted", help="one weighted average W(k, r, s)")
    compute_w.add_argument("--k", type=int, required=True)
    compute_w.add_argument("--r", type=int, required=True)
    compute_w.add_argument("--s", type=int, required=True)
    compute_w.set_defaults(func=_cmd_compute)

    table = sub.add_parser("table", help="sweep a grid into CSV/JSON")
    table_sub = table.add_subparsers(dest="kind", required=True)
    table_crs = table_sub.add_parser("crs", help="c_k^(s)(j) over a grid")
    table_crs.add_argument("--k", type=_int_list, help="k values: '3', '1,2,3' or '1..3'")
    table_crs.add_argument("--k-max", type=int, help="shorthand for --k 1..N")
    table_crs.add_argument("--s", type=_int_list, default=[1])
    table_crs.add_argument("--j", type=_int_list, help="default: the full period 1..k**s")
    table_crs.add_argument("--format", choices=("csv", "json"), default="csv")
    table_crs.add_argument("--out")
    table_crs.set_defaults(func=_cmd_table)
    table_w = table_sub.add_parser("weighted", help="W(k, r, s) breakdowns over a grid")
    table_w.add_argument("--k", type=_int_list)
    table_w.add_argument("--k-max", type=int)
    table_w.add_argument("--r", type=_int_list)
    table_w.add_argument("--r-max", type=int)
    table_w.add_argument("--s", type=_int_list, default=[1])
    table_w.add_argument("--format", choices=("csv", "json"), default="csv")
    table_w.add_argument("--out")
    table_w.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="run a verification suite, emit JSON reports")
    verify.add_argument("suite", choices=verify_mod.SUITE_NAMES)
    verify.add_argument("--k", type=_int_list, help="thm31 only: explicit k instances")
    verify.add_argument("--k-max", type=int)
    verify.add_argument("--r", type=_int_list)
    verify.add_argument("--r-max", type=int)
    verify.add_argument("--s", type=_int_list)
    verify.add_argument("--x", type=int, help="thm33: largest averaging bound")
    verify.add_argument("--eps", type=_rational_list, help="thm31: epsilon values, e.g. '1/2,1/4'")
    verify.add_argument("--lambda", dest="lam", type=_rational, help="thm32 window ratio")
    verify.add_argument("--n", type=_int_list, help="thm32 window starts")
    verify.add_argument("--jobs", type=int, default=1, help="worker threads; output order is fixed")
    verify.add_argument("--out")
    verify.set_defaults(func=_cmd_verify)

    seq = sub.add_parser("seq", help="modulus-sequence gap table (CSV/JSON)")
    seq.add_argument("variant", choices=tuple(_SEQ_VARIANTS))
    seq.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(2))
    seq.add_argument("--n", type=_int_list, required=True)
    seq.add_argument("--r", type=int, required=True)
    seq.add_argument("--s", type=int, required=True)
    seq.add_argument("--format", choices=("csv", "json"), default="csv")
    seq.add_argument("--out")
    seq.set_defaults(func=_cmd_seq)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
