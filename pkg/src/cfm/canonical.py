"""Numerical side of canonical forms: canonicalization, membership and factoring."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CfStructureError, DegenerateInputError, MembershipError, NumericError
from .expr import (Basic, CfExpr, Spread, Sum, ValidationIssue, nesting_order,
                   require_nonempty)
from .matrix import DEFAULT_TOL, MatrixF, Tolerance, is_nonsingular, leading_zero_count, row_echelon
from .scalar import REAL, FieldTag, qabs, qconj, qmul


@dataclass
class ValidationReport:
    issues: list[ValidationIssue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}

    def to_json(self) -> dict:
        return {"ok": self.ok, "issues": [i.to_json() for i in self.issues]}

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        lines = [f"{len(self.issues)} issue(s):"]
        for i in self.issues:
            loc = "/".join(map(str, i.location)) or "-"
            lines.append(f"  {i.code:<18} at {loc:<14} magnitude {i.magnitude:.3g}  {i.detail}")
        return "\n".join(lines)


def _project_out(v: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Remove from rows ``v`` their components along orthonormal rows ``basis``.

    Coefficients act on the left, two passes for reorthogonalization.
    """
    if basis.shape[0] == 0:
        return v
    for _ in range(2):
        # coef[a, b] = <v_a, basis_b>
        coef = qmul(v[:, None, :, :], qconj(basis)[None, :, :, :]).sum(axis=2)
        v = v - qmul(coef[:, :, None, :], basis[None, :, :, :]).sum(axis=1)
    return v


def _canonical_rows(data: np.ndarray, eps_zero: float) -> tuple[np.ndarray, list[int]]:
    n = data.shape[0]
    R, pivots = row_echelon(data, eps_zero)
    if len(pivots) < n:
        raise DegenerateInputError(f"rank {len(pivots)} < {n} rows")
    X = R[:n].copy()
    # later pivots first: subtracting rows with more leading zeros keeps the prefix
    for i in range(n - 1, -1, -1):
        v = _project_out(X[i:i + 1], X[i + 1:])[0]
        v /= np.sqrt(np.sum(v * v))
        p = pivots[i]
        q = qconj(v[p]) / qabs(v[p])
        v = qmul(q, v)
        v[p, 1:] = 0.0
        v[:p] = 0.0
        X[i] = v
    return X, pivots


def grassmann_canonicalize(M: MatrixF, tol: Tolerance = DEFAULT_TOL) -> MatrixF:
    """Unique orthonormal echelon basis of the row space of ``M``.

    Rows come out with strictly increasing leading-zero counts and positive real
    pivots.  Raises :class:`DegenerateInputError` when ``M`` lacks full row rank.
    """
    X, _ = _canonical_rows(M.data, tol.eps_zero)
    return MatrixF(X, M.field)


def pivot_columns(X: MatrixF, tol: Tolerance = DEFAULT_TOL) -> list[int]:
    """0-based column of the first nonzero entry of every row."""
    return [leading_zero_count(X.data[i], tol) for i in range(X.rows)]


def _outside(M: MatrixF, support) -> float:
    cols = [c for c in range(M.cols) if c + 1 not in set(support)]
    return float(M.abs()[:, cols].max()) if cols and M.rows else 0.0


def factor_spread(M: MatrixF, expr: Spread, tol: Tolerance = DEFAULT_TOL):
    """Split a member of a spread form as ``M = C @ X``.

    ``X`` is the Grassmann canonical basis of the row space (supported on the
    spread's columns) and ``C = M @ X.H`` is the square factor.
    """
    if M.shape != (expr.rows, expr.width):
        raise ValueError(f"matrix is {M.shape[0]}x{M.shape[1]}, form is {expr.rows}x{expr.width}")
    viol = _outside(M, expr.support)
    if viol > tol.eps_zero:
        raise MembershipError(ValidationReport([ValidationIssue(
            "SUPPORT_VIOLATION", (), viol, "entries outside the spread support")]))
    cols = [c - 1 for c in expr.support]
    Xs = grassmann_canonicalize(M.submatrix(cols=cols), tol)
    data = np.zeros((expr.n, expr.width, 4))
    data[:, cols] = Xs.data
    X = MatrixF(data, M.field)
    C = M @ X.H
    resid = (C @ X - M).max_abs()
    if resid > tol.eps_orth:
        raise MembershipError(ValidationReport([ValidationIssue(
            "FACTOR_RESIDUAL", (), resid, "rows are not recovered by C @ X")]))
    return C, X


def _row_checks(M: MatrixF, tol: Tolerance, issues: list) -> None:
    G = M.gram()
    gabs = G.abs()
    for i in range(M.rows):
        norm = float(np.sqrt(G.data[i, i, 0]))
        if abs(norm - 1.0) > tol.eps_orth:
            issues.append(ValidationIssue("NORM", ("row", i), abs(norm - 1.0),
                                          f"row norm {norm:.6g}"))
        t = leading_zero_count(M.data[i], tol)
        if t < M.cols:
            piv = M.data[i, t]
            off = float(np.sqrt((piv[0] - qabs(piv)) ** 2 + np.sum(piv[1:] ** 2)))
            if off > tol.eps_orth:
                issues.append(ValidationIssue("PIVOT_PHASE", ("row", i), off,
                                              f"first nonzero entry in column {t + 1} is not positive real"))
        for j in range(i + 1, M.rows):
            if gabs[i, j] > tol.eps_orth:
                issues.append(ValidationIssue("ORTHOGONALITY", ("rows", i, j), float(gabs[i, j])))


def _min_order_check(M: MatrixF, sizes, path, tol, issues) -> None:
    start, minima = 0, []
    for k in sizes:
        minima.append(min(leading_zero_count(M.data[r], tol) for r in range(start, start + k)))
        start += k
    bad = sum(1 for a, b in zip(minima, minima[1:]) if not a < b)
    if bad:
        issues.append(ValidationIssue("MIN_ORDER", path, float(bad),
                                      f"group minima {minima} are not strictly increasing"))


def _check_node(M: MatrixF, expr: CfExpr, path: tuple, tol: Tolerance, issues: list) -> None:
    if isinstance(expr, Basic):
        diff = (M - MatrixF.identity(expr.n, M.field)).max_abs()
        if diff > tol.eps_orth:
            issues.append(ValidationIssue("FACTOR_RESIDUAL", path, diff,
                                          "basic form must be the identity"))
        return
    if expr.min_order is not None:
        _min_order_check(M, expr.min_order, path, tol, issues)
    if isinstance(expr, Spread):
        viol = _outside(M, expr.support)
        if viol > tol.eps_zero:
            issues.append(ValidationIssue("SUPPORT_VIOLATION", path, viol,
                                          f"entries outside columns {list(expr.support)}"))
            return
        try:
            C, _ = factor_spread(M, expr, tol)
        except DegenerateInputError:
            issues.append(ValidationIssue("FACTOR_RESIDUAL", path, 1.0, "rows are rank deficient"))
            return
        except MembershipError as exc:
            issues.extend(ValidationIssue(i.code, path, i.magnitude, i.detail)
                          for i in exc.report.issues)
            return
        _check_node(C, expr.base, path + ("base",), tol, issues)
        return
    start = 0
    for i, b in enumerate(expr.blocks):
        _check_node(M.submatrix(rows=range(start, start + b.rows)), b, path + (i,), tol, issues)
        start += b.rows


def validate_membership(M: MatrixF, expr: CfExpr, tol: Tolerance = DEFAULT_TOL) -> ValidationReport:
    """Check ``M`` against ``expr``; every failure is reported, nothing is raised."""
    report = ValidationReport()
    if M.shape != (expr.rows, expr.width):
        report.issues.append(ValidationIssue(
            "WIDTH_MISMATCH", (), 0.0,
            f"matrix is {M.rows}x{M.cols}, form is {expr.rows}x{expr.width}"))
        return report
    try:
        require_nonempty(expr)
    except CfStructureError as exc:
        report.issues.append(exc.issue)
        return report
    _row_checks(M, tol, report.issues)
    _check_node(M, expr, (), tol, report.issues)
    return report


def _gaussian(rng, rows, cols, field: FieldTag) -> np.ndarray:
    data = np.zeros((rows, cols, 4))
    data[..., :field.d] = rng.standard_normal((rows, cols, field.d))
    return data


def _sample(expr: CfExpr, rng, field: FieldTag, tol: Tolerance) -> np.ndarray:
    if isinstance(expr, Basic):
        return MatrixF.identity(expr.n, field).data
    if isinstance(expr, Spread):
        cols = [c - 1 for c in expr.support]
        g = np.zeros((expr.n, expr.width, 4))
        g[:, cols] = _gaussian(rng, expr.n, len(cols), field)
        X, _ = _canonical_rows(g, tol.eps_zero)
        C = _sample(expr.base, rng, field, tol)
        return (MatrixF(C, field) @ MatrixF(X, field)).data
    offsets = np.cumsum((0,) + expr.block_sizes)
    out = np.zeros((expr.rows, expr.width, 4))
    done = np.zeros((0, expr.width, 4))
    for i, _ in nesting_order(expr):
        b = expr.blocks[i]
        cols = [c - 1 for c in b.support]
        g = np.zeros((b.n, expr.width, 4))
        g[:, cols] = _gaussian(rng, b.n, len(cols), field)
        g = _project_out(g, done)
        X, _ = _canonical_rows(g, tol.eps_zero)
        C = _sample(b.base, rng, field, tol)
        rows = (MatrixF(C, field) @ MatrixF(X, field)).data
        out[offsets[i]:offsets[i + 1]] = rows
        done = np.concatenate([done, rows])
    return out


def sample(expr: CfExpr, seed: int, field: FieldTag = REAL,
           tol: Tolerance = DEFAULT_TOL) -> MatrixF:
    """Deterministic pseudo-random member of the form."""
    require_nonempty(expr)
    rng = np.random.default_rng(seed)
    return MatrixF(_sample(expr, rng, field, tol), field)


def _require_member(M, expr, tol):
    report = validate_membership(M, expr, tol)
    if not report.ok:
        raise MembershipError(report)


def base_projection(M: MatrixF, expr: CfExpr, tol: Tolerance = DEFAULT_TOL) -> list[MatrixF]:
    """Row spaces of the blocks of ``M`` as canonical bases (a point of the base flag)."""
    _require_member(M, expr, tol)
    if isinstance(expr, Basic):
        return [M]
    if isinstance(expr, Spread):
        return [factor_spread(M, expr, tol)[1]]
    out, start = [], 0
    for b in expr.blocks:
        out.append(factor_spread(M.submatrix(rows=range(start, start + b.rows)), b, tol)[1])
        start += b.rows
    return out


def chart_blocks(M: MatrixF, expr: Sum, columns, tol: Tolerance = DEFAULT_TOL) -> list[tuple[int, ...]]:
    """Split the chart columns among the sum blocks.

    Returns one tuple of 1-based columns per block (original order) such that
    every block's square submatrix is nonsingular and, after deleting the rows
    and columns of blocks 1..i, the remaining square submatrix is nonsingular.
    """
    if not isinstance(expr, Sum):
        raise TypeError("chart_blocks needs a Sum node")
    _require_member(M, expr, tol)
    columns = tuple(int(c) for c in columns)
    if len(columns) != M.rows or len(set(columns)) != len(columns):
        raise ValueError(f"need {M.rows} distinct columns, got {columns}")
    if not is_nonsingular(M.submatrix(cols=[c - 1 for c in columns]), tol):
        raise DegenerateInputError(f"columns {columns} give a singular submatrix")
    offsets = np.cumsum((0,) + expr.block_sizes)
    p = len(expr.blocks)

    def minor(rows, cols):
        return M.submatrix(rows=rows, cols=[c - 1 for c in cols])

    def search(i, remaining):
        if i == p:
            return []
        rows_i = range(offsets[i], offsets[i + 1])
        rest_rows = range(offsets[i + 1], offsets[-1])
        for group in itertools.combinations(remaining, expr.blocks[i].rows):
            if not is_nonsingular(minor(rows_i, group), tol):
                continue
            rest = tuple(c for c in remaining if c not in group)
            if rest and not is_nonsingular(minor(rest_rows, rest), tol):
                continue
            tail = search(i + 1, rest)
            if tail is not None:
                return [group] + tail
        return None

    found = search(0, columns)
    if found is None:
        raise NumericError(f"no block assignment of columns {columns} is nonsingular within tolerance")
    return found


@dataclass
class TriangularBlocks:
    row_ranges: list[tuple[int, int]]
    col_ranges: list[tuple[int, int]]
    blocks: list[list[MatrixF]]


def _diagonal_groups(base: Sum) -> list[tuple[int, int]]:
    """Row ranges of the diagonal squares of a block-diagonal square sum."""
    groups = []
    start = 0
    covered = 0
    blocks = list(base.blocks)
    i = 0
    while i < len(blocks):
        span = set(blocks[i].support)
        j = i + 1
        rows = blocks[i].rows
        while rows < len(span) and j < len(blocks):
            span |= set(blocks[j].support)
            rows += blocks[j].rows
            j += 1
        if span != set(range(covered + 1, covered + rows + 1)):
            raise ValueError("spread base is not block diagonal with square blocks")
        groups.append((start, start + rows))
        start += rows
        covered += rows
        i = j
    return groups


def triangular_blocks(M: MatrixF, expr: Spread, tol: Tolerance = DEFAULT_TOL) -> TriangularBlocks:
    """Block decomposition of a spread of a block-diagonal square sum.

    The column cut for row group ``j`` sits at the pivot of its first row, so
    blocks below the diagonal vanish and diagonal blocks have full row rank.
    """
    if not (isinstance(expr, Spread) and isinstance(expr.base, Sum)):
        raise TypeError("expected a spread whose base is a sum")
    rows = _diagonal_groups(expr.base)
    _, X = factor_spread(M, expr, tol)
    piv = pivot_columns(X, tol)
    cuts = [0] + [piv[a] for a, _ in rows[1:]] + [M.cols]
    cols = list(zip(cuts[:-1], cuts[1:]))
    blocks = [[M.submatrix(rows=range(*r), cols=range(*c)) for c in cols] for r in rows]
    return TriangularBlocks(rows, cols, blocks)
