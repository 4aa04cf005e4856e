"""Command-line surface: every computation as machine-readable tables.

Data goes to stdout (or --output PATH), diagnostics to stderr.  Formats:
json (object with "meta" and "rows"), csv, tsv.  Big integers and exact
rationals serialize as decimal strings so a JSON round trip is lossless;
floats use the shortest round-trip decimal.  Exit codes: 0 success, 2 usage
error, 1 internal assertion failure.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import __version__, limits, modes, moments, triangle
from .exact import ratio_to_float

__all__ = ["main"]


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _grid(text: str) -> tuple:
    """Parse LO:HI:STEPS."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be LO:HI:STEPS, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be LO:HI:STEPS, got {text!r}")
    if not lo < hi or steps < 2:
        raise argparse.ArgumentTypeError(f"grid needs LO < HI and STEPS >= 2, got {text!r}")
    return lo, hi, steps


def _cell(value) -> str:
    """Serialize one value for csv/tsv; exact types as decimal strings."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def _emit(rows: List[Dict], meta: Dict, fmt: str, out) -> None:
    if fmt == "json":
        doc = {
            "meta": meta,
            "rows": [{k: _json_value(v) for k, v in row.items()} for row in rows],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    delim = "," if fmt == "csv" else "\t"
    writer = csv.writer(out, delimiter=delim, lineterminator="\n")
    header = list(rows[0].keys()) if rows else []
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row[k]) for k in header])


def _cmd_triangle(args) -> List[Dict]:
    if args.format == "json":
        return [
            {"n": n, "coeffs": triangle.row_closed_form(n)}
            for n in range(1, args.max_n + 1)
        ]
    rows = []
    for n in range(1, args.max_n + 1):
        for k, a in enumerate(triangle.row_closed_form(n)):
            rows.append({"n": n, "k": k, "A": a})
    return rows


def _cmd_moments(args) -> List[Dict]:
    rows = []
    for n in range(1, args.max_n + 1):
        s = moments.moment_summary(n)
        rows.append(
            {
                "n": n,
                "u": s.u,
                "v": s.v,
                "w": s.w,
                "mu": s.mu,
                "sigma2": s.sigma2,
                "mu_float": ratio_to_float(s.mu),
                "sigma2_float": ratio_to_float(s.sigma2),
            }
        )
    return rows


def _cmd_modes(args) -> List[Dict]:
    rows = []
    for n in range(1, args.max_n + 1):
        r = modes.locate_mode(n)
        rows.append(
            {
                "n": n,
                "smallest_mode": r.smallest_mode,
                "is_double": r.is_double,
                "darroch_gap": r.darroch_gap,
                "darroch_gap_float": ratio_to_float(r.darroch_gap),
            }
        )
    return rows


def _cmd_pell(args) -> List[Dict]:
    return [
        {"k": s.k, "m": s.m, "n": s.n, "j": s.j}
        for s in modes.double_mode_sequence(args.count)
    ]


def _cmd_clt(args) -> List[Dict]:
    ns = sorted(set(args.n))
    if any(n < 2 for n in ns):
        raise ValueError("clt requires every n >= 2: a single-point row has zero variance")
    lo, hi, steps = args.grid
    rows = []
    for n in ns:
        r = limits.kolmogorov_distance(n)
        local = limits.local_limit_error(n, lo, hi, steps)
        rows.append(
            {
                "n": n,
                "kolmogorov": r.kolmogorov,
                "be_bound": r.be_bound,
                "sigma": r.sigma,
                "local_sup_error": local,
            }
        )
    return rows


def _cmd_local_table(args) -> List[Dict]:
    ns = sorted(set(args.n))
    if any(n < 2 for n in ns):
        raise ValueError("local-table requires every n >= 2")
    rows = []
    for n in ns:
        r = limits.local_limit_row(n)
        rows.append({"n": n, "ratio": r.ratio, "scaled_error": r.scaled_error})
    return rows


def _cmd_singularity(args) -> List[Dict]:
    closed = limits.singularity_constants()
    rows = [
        {
            "method": "closed-form",
            "h": "",
            "r0": closed.r0,
            "r1": closed.r1,
            "r2": closed.r2,
            "a": closed.a,
            "b2": closed.b2,
        }
    ]
    for h in args.h:
        numeric = limits.singularity_constants_numeric(h)
        rows.append(
            {
                "method": "central-difference",
                "h": repr(h),
                "r0": numeric.r0,
                "r1": numeric.r1,
                "r2": numeric.r2,
                "a": numeric.a,
                "b2": numeric.b2,
            }
        )
    return rows


def _add_common(parser: argparse.ArgumentParser, top: bool) -> None:
    # accepted both before and after the subcommand; the subcommand copy uses
    # SUPPRESS so it only overrides the top-level value when actually given
    kwargs = {} if top else {"default": argparse.SUPPRESS}
    parser.add_argument(
        "--format",
        choices=("json", "csv", "tsv"),
        help="output format",
        **({"default": "json"} if top else kwargs),
    )
    parser.add_argument("--output", help="write to PATH instead of stdout", **kwargs)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morganvoyce",
        description="Exact coefficient-triangle tables and limit-theorem verification reports.",
    )
    _add_common(parser, top=True)
    parser.set_defaults(output=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="coefficient rows 1..max-n")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.set_defaults(run=_cmd_triangle)

    p = sub.add_parser("moments", help="exact u, v, w, mu, sigma^2 for rows 1..max-n")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.set_defaults(run=_cmd_moments)

    p = sub.add_parser("modes", help="mode location and mean gap for rows 1..max-n")
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.set_defaults(run=_cmd_modes)

    p = sub.add_parser("pell", help="double-mode rows from the Pell matrix recursion")
    p.add_argument("--count", type=_positive_int, required=True)
    p.set_defaults(run=_cmd_pell)

    p = sub.add_parser("clt", help="Kolmogorov distance vs Berry-Esseen bound per n")
    p.add_argument("--n", type=int, action="append", required=True, help="repeatable")
    p.add_argument("--grid", type=_grid, default=(-3.0, 3.0, 601), help="LO:HI:STEPS")
    p.set_defaults(run=_cmd_clt)

    p = sub.add_parser("local-table", help="center ratio and scaled local-limit error per n")
    p.add_argument("--n", type=int, action="append", required=True, help="repeatable")
    p.set_defaults(run=_cmd_local_table)

    p = sub.add_parser("singularity", help="growth constants, closed form and finite differences")
    p.add_argument("--h", type=float, action="append", required=True, help="repeatable step size")
    p.set_defaults(run=_cmd_singularity)

    for sp in sub.choices.values():
        _add_common(sp, top=False)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    meta = {
        "version": __version__,
        "command": args.command,
        "parameters": {
            k: _json_value(v)
            for k, v in sorted(vars(args).items())
            if k not in ("run", "command", "output") and v is not None
        },
    }
    try:
        rows = args.run(args)
    except ValueError as exc:  # bad argument values: usage error
        print(f"morganvoyce {args.command}: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:  # a violated internal invariant
        print(f"morganvoyce {args.command}: internal check failed: {exc}", file=sys.stderr)
        return 1

    if args.output is None:
        _emit(rows, meta, args.format, sys.stdout)
    else:
        with open(args.output, "w", newline="") as out:
            _emit(rows, meta, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
