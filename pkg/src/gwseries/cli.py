"""Command line front end.

Exit codes: 0 when every check passes, 1 when an identity fails, 2 on usage
errors. All numbers are written as exact rational strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import arith, gw, yz
from .qseries import Series, rational_from_str, rational_to_str
from .surface import dimension_table, section_plus_fibers
from .verify import DEFAULT_N_MAX, DEFAULT_SEED, run_suite

DEFAULT_ORDER = 64
DEFAULT_MAX_D = 10
FORMATS = ("text", "csv", "json")

# name -> (builder(n, N), indexed by the class S+dF?)
SERIES = {
    "F": (lambda n, N: gw.F_product(n, N), True),
    "H": (lambda n, N: gw.H_from_sum(n, N), True),
    "H_trr": (lambda n, N: gw.H_from_trr(n, N), True),
    "YZ": (lambda n, N: yz.yz_series(N), True),
    "E0": (lambda n, N: gw.e0_descendent_series(N), False),
    "G": (lambda n, N: arith.G_series(N), False),
    "G2": (lambda n, N: arith.G2_series(N), False),
    "Ge": (lambda n, N: arith.Ge_series(N), False),
    "Go": (lambda n, N: arith.Go_series(N), False),
    "ODE4": (lambda n, N: yz.solve_ode4(N), False),
}
N_DEPENDENT = {"F", "H", "H_trr"}


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return rational_to_str(x)
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return rational_to_str(x)
    return x


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_rows(name: str, rows: list[dict], fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        doc = {"name": name, **(extra or {}),
               "rows": [{k: _jsonable(v) for k, v in r.items()} for r in rows]}
        return dump_json(doc)
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue()
    widths = {c: max(len(c), *(len(_cell(r[c])) for r in rows)) for c in cols}
    lines = ["  ".join(c.rjust(widths[c]) for c in cols)]
    lines += ["  ".join(_cell(r[c]).rjust(widths[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def series_document(name: str, s: Series, n: int | None = None) -> dict:
    doc = {"name": name, "order": s.order}
    if n is not None:
        doc["n"] = n
    doc["coefficients"] = [rational_to_str(c) for c in s.coeffs]
    return doc


def load_series_document(text: str) -> tuple[dict, Series]:
    """Parse a JSON series document back into its header and :class:`Series`."""
    doc = json.loads(text)
    coeffs = [rational_from_str(c) for c in doc["coefficients"]]
    s = Series(coeffs)
    if s.order != doc["order"]:
        raise ValueError("coefficient count disagrees with the declared order")
    return doc, s


def render_series(name: str, s: Series, fmt: str, n: int | None, class_labels: bool) -> str:
    if fmt == "json":
        return dump_json(series_document(name, s, n))
    rows = []
    for d, c in enumerate(s.coeffs):
        row = {"d": d}
        if class_labels:
            row["class"] = str(section_plus_fibers(d))
        row["coefficient"] = c
        rows.append(row)
    if fmt == "csv":
        return render_rows(name, rows, fmt)
    return "\n".join(
        f"t^{r['d']}" + (f" [{r['class']}]" if class_labels else "") + f": {_cell(r['coefficient'])}"
        for r in rows) + "\n"


def cmd_series(args) -> int:
    build, labelled = SERIES[args.which]
    n = args.n if args.n is not None else 1
    if args.which in N_DEPENDENT and n < 1:
        raise UsageError("--n must be >= 1 for E(n) generating functions")
    s = build(n, args.order)
    _emit(args, render_series(args.which, s, args.format,
                              n if args.which in N_DEPENDENT else None, labelled))
    return 0


def cmd_verify(args) -> int:
    n_max = args.n if args.n is not None else DEFAULT_N_MAX
    reports = run_suite(args.order, n_max, args.seed, args.g2_constant)
    ok = all(r.passed for r in reports)
    rows = []
    for r in reports:
        fail = r.first_failure()
        rows.append({"check": r.name, "order": r.order, "verdict": r.verdict,
                     "first_nonzero": fail[0] if fail else None,
                     "residual": fail[1] if fail else None})
    verdict = "pass" if ok else "fail"
    if args.format == "text":
        text = "".join(
            f"{'PASS' if r['verdict'] == 'pass' else 'FAIL'}  {r['check']}"
            + (f"  (t^{r['first_nonzero']}: {_cell(r['residual'])})" if r["first_nonzero"] is not None else "")
            + "\n" for r in rows)
        text += f"{sum(r.passed for r in reports)}/{len(reports)} checks pass at order {args.order}\n"
    else:
        text = render_rows("verify", rows, args.format,
                           {"order": args.order, "seed": args.seed, "verdict": verdict})
    _emit(args, text)
    return 0 if ok else 1


def cmd_table(args) -> int:
    which = getattr(args, "which", "yz")
    if which == "dims":
        return cmd_dims(args)
    table = yz.yz_table(args.max_d)
    if which == "yz":
        rows, name = table.primitive, "yz_primitive"
    else:
        rows, name = table.doubled, "yz_doubled"
    _emit(args, render_rows(name, rows, args.format, {"max_d": args.max_d}))
    return 0


def cmd_dims(args) -> int:
    n = args.n if args.n is not None else 1
    if n < 0:
        raise UsageError("--n must be >= 0")
    rows = dimension_table(n, args.max_d)
    _emit(args, render_rows(f"dimensions E({n})", rows, args.format,
                            {"n": n, "max_d": args.max_d}))
    return 0


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gwseries",
        description="Exact q-series for curve counts on elliptic surfaces E(n) and K3.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True, max_d=False):
        if order:
            sp.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER,
                            help=f"truncation order (default {DEFAULT_ORDER})")
        if max_d:
            sp.add_argument("--max-d", type=_nonneg, default=DEFAULT_MAX_D,
                            help=f"largest d in the table (default {DEFAULT_MAX_D})")
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("series", help="print the coefficients of one series")
    sp.add_argument("--which", choices=sorted(SERIES), default="F")
    sp.add_argument("--n", type=int, default=None, help="surface index for F, H, H_trr (default 1)")
    common(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", help="check every identity; exit 1 if one fails")
    sp.add_argument("--n", type=int, default=None,
                    help=f"check E(1)..E(n) (default {DEFAULT_N_MAX})")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    # negative-control hook: perturbs the constant term of G2
    sp.add_argument("--g2-constant", type=Fraction, default=arith.G2_CONSTANT,
                    help=argparse.SUPPRESS)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="Yau-Zaslow, doubled-class or dimension tables")
    sp.add_argument("--which", choices=("yz", "doubling", "dims"), default="yz")
    sp.add_argument("--n", type=int, default=None, help="surface index for --which dims")
    common(sp, order=False, max_d=True)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("dims", help="moduli space dimensions for the classes S+dF")
    sp.add_argument("--n", type=int, default=None, help="surface index (default 1)")
    common(sp, order=False, max_d=True)
    sp.set_defaults(func=cmd_dims)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 0:
        parser.error("--n must be >= 0")
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
