"""Cell decomposition of the manifolds described by canonical forms.

A cell is addressed by a symbol tree mirroring the expression.  For a spread
the symbol records the pivot columns of the Grassmann factor; the free entries
of an orthonormal echelon basis with those pivots give the cell dimension.  For
an inner sum, each block's pivots are positions ``1..r`` inside its effective
ambient (the part of its support left after earlier nested blocks), because the
block lives in that ``r``-dimensional space rather than on its raw columns.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

from .canonical import _require_member, factor_spread, pivot_columns
from .errors import NumericError
from .expr import Basic, CfExpr, Spread, nesting_order, require_nonempty
from .matrix import DEFAULT_TOL, MatrixF, Tolerance, rank
from .poincare import IntPoly
from .scalar import REAL, FieldTag


@dataclass(frozen=True)
class BasicCell:
    def __str__(self) -> str:
        return "pt"


@dataclass(frozen=True)
class SpreadCell:
    pivots: tuple[int, ...]
    base: "CellSymbol"

    def __str__(self) -> str:
        inner = "" if isinstance(self.base, BasicCell) else f"({self.base})"
        return "{" + ",".join(map(str, self.pivots)) + "}" + inner


@dataclass(frozen=True)
class SumCell:
    children: tuple["CellSymbol", ...]

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.children)) + "]"


CellSymbol = Union[BasicCell, SpreadCell, SumCell]


def schubert_dim(positions, r: int) -> int:
    """Free parameters of an orthonormal echelon basis with the given pivot positions.

    Row ``i`` (1-based) with pivot at position ``j`` is free to the right of its
    pivot except at the ``n - i`` later pivot positions.
    """
    n = len(positions)
    return sum(r - j - (n - i) for i, j in enumerate(positions, start=1))


def _spread_cells(n: int, labels, base: CfExpr):
    r = len(labels)
    base_cells = list(_cells(base))
    for pos in itertools.combinations(range(1, r + 1), n):
        d = schubert_dim(pos, r)
        piv = tuple(labels[j - 1] for j in pos)
        for bc, bd in base_cells:
            yield SpreadCell(piv, bc), d + bd


def _cells(expr: CfExpr):
    if isinstance(expr, Basic):
        yield BasicCell(), 0
        return
    if isinstance(expr, Spread):
        yield from _spread_cells(expr.n, expr.support, expr.base)
        return
    per_block = [None] * len(expr.blocks)
    for i, r in nesting_order(expr):
        b = expr.blocks[i]
        per_block[i] = list(_spread_cells(b.n, tuple(range(1, r + 1)), b.base))
    for combo in itertools.product(*per_block):
        yield SumCell(tuple(c for c, _ in combo)), sum(d for _, d in combo)


def enumerate_cells(expr: CfExpr) -> Iterator[tuple[CellSymbol, int]]:
    """All cells as ``(symbol, dimension over F)``, lexicographic, depth first."""
    require_nonempty(expr)
    return _cells(expr)


def _count(expr: CfExpr) -> int:
    if isinstance(expr, Basic):
        return 1
    if isinstance(expr, Spread):
        return comb(len(expr.support), expr.n) * _count(expr.base)
    out = 1
    for i, r in nesting_order(expr):
        b = expr.blocks[i]
        out *= comb(r, b.n) * _count(b.base)
    return out


def cell_count(expr: CfExpr) -> int:
    """Number of cells, from binomial coefficients without enumerating."""
    require_nonempty(expr)
    return _count(expr)


def cell_generating_polynomial(expr: CfExpr) -> IntPoly:
    """``sum over cells of q**dim``."""
    counts: dict[int, int] = {}
    for _, d in enumerate_cells(expr):
        counts[d] = counts.get(d, 0) + 1
    return IntPoly(tuple(counts.get(k, 0) for k in range(max(counts) + 1)))


def euler_characteristic(expr: CfExpr, field: FieldTag = REAL) -> int:
    return sum((-1) ** (field.d * d) for _, d in enumerate_cells(expr))


def _pivots(X: MatrixF, tol: Tolerance) -> list[int]:
    piv = pivot_columns(X, tol)
    for i, p in enumerate(piv):
        if X.abs()[i, p] <= tol.eps_orth:
            raise NumericError(f"pivot of row {i + 1} is {X.abs()[i, p]:.3g}, too close to zero "
                               "to decide the cell")
    return piv


def _locate(M: MatrixF, expr: CfExpr, tol: Tolerance) -> CellSymbol:
    if isinstance(expr, Basic):
        return BasicCell()
    if isinstance(expr, Spread):
        C, X = factor_spread(M, expr, tol)
        piv = tuple(p + 1 for p in _pivots(X, tol))
        return SpreadCell(piv, _locate(C, expr.base, tol))
    starts = [0]
    for b in expr.blocks:
        starts.append(starts[-1] + b.rows)
    children = [None] * len(expr.blocks)
    earlier: list[int] = []
    for i, r in nesting_order(expr):
        b = expr.blocks[i]
        Mi = M.submatrix(rows=range(starts[i], starts[i + 1]))
        C, X = factor_spread(Mi, b, tol)
        sup = set(b.support)
        nested = [k for k in earlier if set(expr.blocks[k].support) <= sup]
        W_rows = [row for k in nested for row in range(starts[k], starts[k + 1])]
        pos = []
        for p in _pivots(X, tol):
            # dimension of (effective ambient) meet (columns >= p)
            tail = [c - 1 for c in b.support if c - 1 >= p]
            used = rank(M.submatrix(rows=W_rows, cols=tail), tol) if W_rows else 0
            pos.append(r - (len(tail) - used) + 1)
        children[i] = SpreadCell(tuple(pos), _locate(C, b.base, tol))
        earlier.append(i)
    return SumCell(tuple(children))


def cell_of_matrix(M: MatrixF, expr: CfExpr, tol: Tolerance = DEFAULT_TOL) -> CellSymbol:
    """Symbol of the cell containing the member ``M``."""
    _require_member(M, expr, tol)
    return _locate(M, expr, tol)


def cell_dimension(symbol: CellSymbol, expr: CfExpr) -> int:
    """Dimension over F of the cell with the given symbol."""
    for s, d in enumerate_cells(expr):
        if s == symbol:
            return d
    raise KeyError(f"{symbol} is not a cell of this form")
