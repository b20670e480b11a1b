"""Command line front end.

Subcommands:
    sta eval EXPR [--matrix]          evaluate an algebra expression
    sta identities [--seed --n --tol] run the seeded identity battery
    sta prob X1 X2 Y1 Y2 PHI_X PHI_Y  transition value of two planar states
    sta grid [...] --out FILE         emit a probability surface (csv/json)
    sta observables R1 I1 ... R4 I4   bilinears and quadratic-identity report

Exit codes: 0 ok, 1 identity failure, 2 usage or parse error,
3 evaluation error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import format_complex, format_multivector
from .errors import AlgebraError, ParseError
from .exprlang import MatrixValue, evaluate, parse
from .fierz import fierz_check, observables, regularity
from .identities import FAMILIES, run_suite
from .matrices import to_matrix
from .measurement import family_probability, family_state, is_probability_value
from .ring import RingElement
from .spinors import DiracSpinor, spinor_operator


def _format_matrix(entries) -> str:
    rows = []
    for row in entries:
        cells = [f"{z.real + 0.0:.12g}{z.imag + 0.0:+.12g}i" for z in row]
        rows.append(cells)
    widths = [max(len(rows[r][c]) for r in range(4)) for c in range(4)]
    lines = []
    for row in rows:
        lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths))
                     + " ]")
    return "\n".join(lines)


def cmd_eval(args) -> int:
    try:
        ast = parse(args.expression)
    except ParseError as err:
        expected = ", ".join(err.expected) if err.expected else "?"
        print(f"syntax error at offset {err.offset}: {err} "
              f"(expected: {expected})", file=sys.stderr)
        return 2
    try:
        value = evaluate(ast)
    except (AlgebraError, OverflowError) as err:
        print(f"evaluation error: {err}", file=sys.stderr)
        return 3
    if isinstance(value, MatrixValue):
        print(_format_matrix(value.entries))
        return 0
    print(format_multivector(value))
    if args.matrix:
        m = to_matrix(value)
        print(_format_matrix(tuple(tuple(complex(z) for z in row)
                                   for row in m)))
    return 0


def cmd_identities(args) -> int:
    if args.n < 1:
        print("usage error: --n must be at least 1", file=sys.stderr)
        return 2
    results = run_suite(args.seed, args.n)
    width = max(len(name) for name in FAMILIES)
    failed = []
    for name, residual in results:
        ok = residual < args.tol
        if not ok:
            failed.append(name)
        print(f"{name:<{width}}  max_residual={residual:.3e}  "
              f"{'pass' if ok else 'FAIL'}")
    print(f"families={len(results)} seed={args.seed} n={args.n} "
          f"tol={args.tol:.1e}")
    if failed:
        print(f"FAIL: first failing identity family: {failed[0]}",
              file=sys.stderr)
        return 1
    print("all identity families passed")
    return 0


def _prob_report(x, phi_x, y, phi_y):
    value, flag = family_probability(x, phi_x, y, phi_y)
    r = RingElement.from_multivector(value)
    # agreement between the idempotent and projective state-space paths
    sa = family_state(x, phi_x)
    sb = family_state(y, phi_y)
    from .measurement import spin_up_along

    up_a = spin_up_along(sa.a_hat)
    up_b = spin_up_along(sb.a_hat)
    path1 = RingElement.from_multivector(up_a * up_b * up_a) * 2.0
    diff = sa.m - sb.m
    path2 = RingElement(c1=1.0) - (RingElement.from_multivector(diff * diff)
                                   * (sa.m_squared * sb.m_squared).inverse())
    agreement = max(
        abs(path1.c1 - path2.c1), abs(path1.cI - path2.cI),
        abs(path1.c1 - r.c1), abs(path1.cI - r.cI))
    return r, flag, agreement


def cmd_prob(args) -> int:
    r, flag, agreement = _prob_report(
        (args.x1, args.x2), args.phi_x, (args.y1, args.y2), args.phi_y)
    print(f"value: {r.c1 + 0.0:.12f}")
    print(f"value_I: {r.cI + 0.0:.12f}")
    print(f"is_probability: {'true' if flag else 'false'}")
    print(f"paths_agreement: {agreement:.3e}")
    return 0


def _grid_rows(args):
    x1s = np.linspace(args.x1_min, args.x1_max, args.steps)
    x2s = np.linspace(args.x2_min, args.x2_max, args.steps)
    rows = []
    for x1 in x1s:
        for x2 in x2s:
            x = (float(x1), float(x2))
            y = x if args.x_equals_y else (args.y1, args.y2)
            value, flag = family_probability(x, args.phi_x, y, args.phi_y)
            r = RingElement.from_multivector(value)
            rows.append((x[0], x[1], r.c1, r.cI, flag))
    return rows


def cmd_grid(args) -> int:
    if args.steps < 2:
        print("usage error: --steps must be at least 2", file=sys.stderr)
        return 2
    rows = _grid_rows(args)
    try:
        if args.format == "csv":
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write("x1,x2,value,value_I,is_prob\n")
                for x1, x2, v, vi, flag in rows:
                    fh.write(f"{x1 + 0.0:.12g},{x2 + 0.0:.12g},{v + 0.0:.12f},{vi + 0.0:.12f},"
                             f"{'true' if flag else 'false'}\n")
        else:
            payload = [
                {"x1": round(x1 + 0.0, 12), "x2": round(x2 + 0.0, 12),
                 "value": round(v + 0.0, 12), "value_I": round(vi + 0.0, 12),
                 "is_prob": bool(flag)}
                for x1, x2, v, vi, flag in rows]
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=1)
                fh.write("\n")
    except OSError as err:
        print(f"I/O error writing {args.out}: {err}", file=sys.stderr)
        return 4
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_observables(args) -> int:
    c = args.components
    d = DiracSpinor(complex(c[0], c[1]), complex(c[2], c[3]),
                    complex(c[4], c[5]), complex(c[6], c[7]))
    op = spinor_operator(d)
    obs = observables(op)
    print(f"J: {format_multivector(obs.current)}")
    print(f"S: {format_multivector(obs.spin)}")
    print(f"K: {format_multivector(obs.axial)}")
    print(f"R: {format_complex(complex(obs.r1, 0))} + "
          f"{format_complex(complex(obs.r2, 0))} I")
    reg = regularity(op)
    vanishing = ", ".join(reg.vanishing) if reg.vanishing else "none"
    print(f"class: {reg.classification} (vanishing: {vanishing})")
    report = fierz_check(obs)
    for line in report.lines():
        print(line)
    print(f"fierz: {'pass' if report.passed else 'FAIL'} "
          f"(max residual {report.max_residual:.3e})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sta",
        description="spacetime algebra calculator and spinor toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an algebra expression")
    p.add_argument("expression")
    p.add_argument("--matrix", action="store_true",
                   help="also print the 4x4 matrix representation")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("identities", help="run the seeded identity battery")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", type=int, default=200,
                   help="samples per identity family")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("prob", help="transition value of two planar states")
    for name in ("x1", "x2", "y1", "y2", "phi_x", "phi_y"):
        p.add_argument(name, type=float)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("grid", help="emit a probability surface")
    p.add_argument("--y1", type=float, default=1.0)
    p.add_argument("--y2", type=float, default=1.0)
    p.add_argument("--x-equals-y", action="store_true",
                   help="use y = x at every grid point")
    p.add_argument("--phi-x", type=float, default=0.0)
    p.add_argument("--phi-y", type=float, default=0.0)
    p.add_argument("--x1-min", type=float, default=-3.0)
    p.add_argument("--x1-max", type=float, default=3.0)
    p.add_argument("--x2-min", type=float, default=-3.0)
    p.add_argument("--x2-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=61)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("observables",
                       help="bilinears of a spinor given as 8 reals")
    p.add_argument("components", nargs=8, type=float,
                   metavar="C", help="re/im pairs of the four components")
    p.set_defaults(func=cmd_observables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"syntax error: {err}", file=sys.stderr)
        return 2
    except (AlgebraError, OverflowError) as err:
        print(f"evaluation error: {err}", file=sys.stderr)
        return 3
    except OSError as err:
        print(f"I/O error: {err}", file=sys.stderr)
        return 4


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
