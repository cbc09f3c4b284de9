"""Command-line front end.

Exit codes: 0 success, 1 membership/validation failure, 2 parse or usage
error, 3 numeric failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cells, canonical, poincare, sympow
from .dsl import parse, to_dsl
from .errors import (CfStructureError, CfSyntaxError, DegenerateInputError, MembershipError,
                     NumericError)
from .expr import Spread, Sum, dimension
from .matrix import MatrixF, Tolerance
from .presets import CATALOG_TEXT
from .scalar import FieldTag

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, indent=None, sort_keys=True) + "\n")


def _read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _tol(args) -> Tolerance:
    return Tolerance(args.eps_zero, args.eps_orth)


def _table(rows, header, out) -> None:
    widths = [max(len(str(r[k])) for r in rows + [header]) for k in range(len(header))]
    for r in [header] + rows:
        out.write("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def cmd_dim(args, out):
    d = dimension(parse(args.expr), args.field)
    if args.json:
        _dump({"dim_F": d.dim_f, "dim_real": d.dim_real, "field": args.field.symbol}, out)
    else:
        out.write(f"dim_F = {d.dim_f}\ndim_R = {d.dim_real}  (F = {args.field.symbol})\n")


def cmd_cells(args, out):
    expr = parse(args.expr)
    rows = [(str(s), d, d * args.field.d) for s, d in cells.enumerate_cells(expr)]
    if args.json:
        _dump([{"symbol": s, "dim_F": d, "dim_real": r} for s, d, r in rows], out)
    else:
        _table([list(r) for r in rows], ["symbol", "dim_F", "dim_real"], out)


def cmd_count(args, out):
    n = cells.cell_count(parse(args.expr))
    _dump({"cells": n}, out) if args.json else out.write(f"{n}\n")


def cmd_poincare(args, out):
    p = poincare.poincare_polynomial(parse(args.expr), args.field)
    if args.json:
        _dump({"coefficients": list(p.coeffs), "polynomial": p.pretty("t")}, out)
    else:
        out.write(f"{list(p.coeffs)}\nP(t) = {p.pretty('t')}\n")


def cmd_euler(args, out):
    chi = cells.euler_characteristic(parse(args.expr), args.field)
    _dump({"euler": chi}, out) if args.json else out.write(f"{chi}\n")


def cmd_sample(args, out):
    M = canonical.sample(parse(args.expr), args.seed, args.field, _tol(args))
    text = json.dumps(M.to_json()) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_check(args, out):
    expr = parse(args.expr)
    M = MatrixF.from_json(_read_json(args.matrix))
    report = canonical.validate_membership(M, expr, _tol(args))
    _dump(report.to_json(), out) if args.json else out.write(str(report) + "\n")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_factor(args, out):
    expr = parse(args.expr)
    M = MatrixF.from_json(_read_json(args.matrix))
    tol = _tol(args)
    if isinstance(expr, Spread):
        pieces = [(M, expr)]
    elif isinstance(expr, Sum):
        pieces, start = [], 0
        for b in expr.blocks:
            pieces.append((M.submatrix(rows=range(start, start + b.rows)), b))
            start += b.rows
    else:
        raise UsageError("a basic form has nothing to factor")
    result = []
    for Mi, node in pieces:
        C, X = canonical.factor_spread(Mi, node, tol)
        result.append({"C": C.to_json(), "X": X.to_json()})
    _dump(result[0] if isinstance(expr, Spread) else result, out)


def cmd_cell_of(args, out):
    expr = parse(args.expr)
    M = MatrixF.from_json(_read_json(args.matrix))
    sym = cells.cell_of_matrix(M, expr, _tol(args))
    d = cells.cell_dimension(sym, expr)
    if args.json:
        _dump({"symbol": str(sym), "dim_F": d}, out)
    else:
        out.write(f"{sym}  dim_F = {d}\n")


def cmd_preset(args, out):
    # params use the preset argument syntax, e.g. ``example4 "2,1;3"``
    expr = parse(f"preset:{args.name}({' '.join(args.params)})")
    out.write(to_dsl(expr) + "\n")


def cmd_sympow(args, out):
    obj = _read_json(args.file)
    tol = _tol(args)
    if args.action == "coeffs":
        pts = sympow.PointMultiset.from_json(obj)
        sig = sympow.sym_to_coeffs(pts)
        _dump({"coeffs": [[z.real, z.imag] for z in sig]}, out)
    elif "vector" in obj:
        v = [complex(*p) if isinstance(p, list) else complex(p) for p in obj["vector"]]
        _dump(sympow.projective_vector_roots(v, tol).to_json(), out)
    else:
        sig = [complex(*p) if isinstance(p, list) else complex(p) for p in obj["coeffs"]]
        _dump(sympow.coeffs_to_sym(sig, tol).to_json(), out)


def cmd_catalog(args, out):
    rows = []
    for text in CATALOG_TEXT:
        expr = parse(text)
        d = dimension(expr, args.field)
        rows.append([text, d.dim_f, cells.cell_count(expr),
                     cells.euler_characteristic(expr, args.field)])
    if args.json:
        _dump([{"expr": r[0], "dim_F": r[1], "cells": r[2], "euler": r[3]} for r in rows], out)
    else:
        _table(rows, ["expression", "dim_F", "cells", "euler"], out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=FieldTag.parse, default=FieldTag.REAL,
                        help="scalar field R, C or H (default R)")
    common.add_argument("--eps-zero", type=float, default=1e-9)
    common.add_argument("--eps-orth", type=float, default=1e-8)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="cfm", description="Canonical forms of matrices over R, C, H.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, *positional):
        p = sub.add_parser(name, parents=[common])
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    add("dim", cmd_dim, "expr")
    add("cells", cmd_cells, "expr")
    add("count", cmd_count, "expr")
    add("poincare", cmd_poincare, "expr")
    add("euler", cmd_euler, "expr")
    p = add("sample", cmd_sample, "expr")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    add("check", cmd_check, "expr", "matrix")
    add("factor", cmd_factor, "expr", "matrix")
    add("cell-of", cmd_cell_of, "expr", "matrix")
    p = add("preset", cmd_preset, "name")
    p.add_argument("params", nargs="*")
    p = add("sympow", cmd_sympow)
    p.add_argument("action", choices=["roots", "coeffs"])
    p.add_argument("file")
    add("catalog", cmd_catalog)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        code = args.func(args, out)
    except (CfSyntaxError, CfStructureError, UsageError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MembershipError as exc:
        print(f"error: {exc}\n{exc.report}", file=sys.stderr)
        return EXIT_INVALID
    except (NumericError, DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
