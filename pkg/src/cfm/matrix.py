"""Dense matrices over R, C or H.

A :class:`MatrixF` holds a ``(rows, cols, 4)`` float array.  Rows are treated as
elements of a left F-module: row operations multiply by scalars on the left and
the inner product ``<a, b> = sum_j a_j * conj(b_j)`` is left-linear in ``a``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatchError
from .scalar import (COMPLEX, QUATERNION, REAL, FieldTag, Scalar, check_components,
                     qabs, qconj, qinv, qmul, scalar_from_json)


@dataclass(frozen=True)
class Tolerance:
    eps_zero: float = 1e-9
    eps_orth: float = 1e-8

    def __post_init__(self):
        if not (self.eps_zero > 0 and self.eps_orth > 0):
            raise ValueError("tolerances must be positive")


DEFAULT_TOL = Tolerance()


class MatrixF:
    """Immutable dense matrix with entries in one of R, C, H."""

    __slots__ = ("data", "field")

    def __init__(self, data, field: FieldTag = REAL):
        arr = np.array(data, dtype=float)
        if arr.ndim == 2:
            arr = np.concatenate([arr[..., None], np.zeros(arr.shape + (3,))], axis=-1)
        if arr.ndim != 3 or arr.shape[-1] != 4:
            raise ValueError(f"expected a (rows, cols, 4) array, got shape {arr.shape}")
        check_components(arr, field)
        arr.setflags(write=False)
        self.data = arr
        self.field = field

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, field: FieldTag = REAL) -> "MatrixF":
        """Rows of python numbers, complex numbers, Scalars or component lists."""
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        arr = np.zeros((len(rows), ncols, 4))
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                arr[i, j] = Scalar.of(v, field).components
        return cls(arr, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldTag = REAL) -> "MatrixF":
        return cls(np.zeros((rows, cols, 4)), field)

    @classmethod
    def identity(cls, n: int, field: FieldTag = REAL) -> "MatrixF":
        arr = np.zeros((n, n, 4))
        arr[np.arange(n), np.arange(n), 0] = 1.0
        return cls(arr, field)

    @classmethod
    def from_complex(cls, z) -> "MatrixF":
        z = np.asarray(z, dtype=complex)
        arr = np.zeros(z.shape + (4,))
        arr[..., 0], arr[..., 1] = z.real, z.imag
        return cls(arr, COMPLEX)

    # basic properties ---------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[:2]

    def __getitem__(self, idx) -> Scalar:
        i, j = idx
        return Scalar.from_array(self.data[i, j], self.field)

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def abs(self) -> np.ndarray:
        """Entrywise moduli as a real (rows, cols) array."""
        return qabs(self.data)

    def max_abs(self) -> float:
        return float(self.abs().max()) if self.data.size else 0.0

    def submatrix(self, rows=None, cols=None) -> "MatrixF":
        arr = self.data
        if rows is not None:
            arr = arr[list(rows)]
        if cols is not None:
            arr = arr[:, list(cols)]
        return MatrixF(arr, self.field)

    def to_complex(self) -> np.ndarray:
        if self.field is QUATERNION:
            raise FieldMismatchError("quaternion matrix has no complex representation")
        return self.data[..., 0] + 1j * self.data[..., 1]

    # arithmetic ---------------------------------------------------------

    def _same_field(self, other: "MatrixF") -> None:
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field.symbol} vs {other.field.symbol} matrix")

    def __matmul__(self, other: "MatrixF") -> "MatrixF":
        self._same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.field is QUATERNION:
            prod = qmul(self.data[:, :, None, :], other.data[None, :, :, :]).sum(axis=1)
        else:
            # commutative fields: go through numpy complex matmul
            prod = np.zeros((self.rows, other.cols, 4))
            z = self.to_complex() @ other.to_complex()
            prod[..., 0] = z.real
            if self.field is COMPLEX:
                prod[..., 1] = z.imag
        return MatrixF(prod, self.field)

    def __add__(self, other: "MatrixF") -> "MatrixF":
        self._same_field(other)
        return MatrixF(self.data + other.data, self.field)

    def __sub__(self, other: "MatrixF") -> "MatrixF":
        self._same_field(other)
        return MatrixF(self.data - other.data, self.field)

    def scale_left(self, q: Scalar) -> "MatrixF":
        return MatrixF(qmul(q.components, self.data), self.field)

    @property
    def H(self) -> "MatrixF":
        """Conjugate transpose."""
        return MatrixF(qconj(self.data.transpose(1, 0, 2)), self.field)

    def gram(self) -> "MatrixF":
        """Matrix of row inner products ``<row_i, row_j>``."""
        return self @ self.H

    def allclose(self, other: "MatrixF", atol: float) -> bool:
        return self.shape == other.shape and (self - other).max_abs() <= atol

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixF) and other.field is self.field
                and np.array_equal(self.data, other.data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"MatrixF[{self.field.symbol}]({self.rows}x{self.cols})"

    # serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        d = self.field.d
        rows = [[[float(v) for v in self.data[i, j, :d]] for j in range(self.cols)]
                for i in range(self.rows)]
        return {"field": self.field.symbol, "rows": rows}

    @classmethod
    def from_json(cls, obj) -> "MatrixF":
        """Accept ``{"field": ..., "rows": ...}`` or a bare list of real rows."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if isinstance(obj, list):
            obj = {"field": "R", "rows": obj}
        field = FieldTag.parse(obj.get("field", "R"))
        rows = obj["rows"]
        arr = np.zeros((len(rows), len(rows[0]) if rows else 0, 4))
        for i, row in enumerate(rows):
            if len(row) != arr.shape[1]:
                raise ValueError("ragged rows in matrix file")
            for j, v in enumerate(row):
                arr[i, j] = scalar_from_json(v, field).components
        return cls(arr, field)


def inner_product(a, b, field: FieldTag | None = None) -> Scalar:
    """``<a, b> = sum_j a_j conj(b_j)`` for row vectors given as (len, 4) arrays.

    ``a`` and ``b`` may also be 1-row :class:`MatrixF` objects.
    """
    if isinstance(a, MatrixF) or isinstance(b, MatrixF):
        if not (isinstance(a, MatrixF) and isinstance(b, MatrixF)):
            raise TypeError("mix of MatrixF and raw arrays")
        if a.field is not b.field:
            raise FieldMismatchError("row vectors over different fields")
        field = a.field
        a, b = a.data.reshape(-1, 4), b.data.reshape(-1, 4)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch {a.shape[0]} vs {b.shape[0]}")
    val = qmul(a, qconj(b)).sum(axis=0)
    return Scalar.from_array(val, field or QUATERNION)


def leading_zero_count(a, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of initial coordinates with modulus at most ``tol.eps_zero``."""
    if isinstance(a, MatrixF):
        a = a.data.reshape(-1, 4)
    mags = qabs(np.asarray(a, dtype=float))
    nz = np.flatnonzero(mags > tol.eps_zero)
    return int(nz[0]) if nz.size else len(mags)


def row_echelon(data: np.ndarray, eps_zero: float):
    """Reduced row echelon form under left row operations.

    Returns ``(R, pivots)`` where the first ``len(pivots)`` rows of ``R`` carry a
    1 in their pivot column, zeros in all other pivot columns, and exact zeros
    before their pivot.  Pivot rows are chosen by largest modulus.
    """
    R = np.array(data, dtype=float)
    nrows, ncols = R.shape[:2]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        mags = qabs(R[r:, c])
        k = int(np.argmax(mags))
        if mags[k] <= eps_zero:
            R[r:, c] = 0.0
            continue
        if k:
            R[[r, r + k]] = R[[r + k, r]]
        R[r] = qmul(qinv(R[r, c]), R[r])
        R[r, c] = (1.0, 0.0, 0.0, 0.0)
        for i in range(nrows):
            if i != r:
                R[i] -= qmul(R[i, c][None, :], R[r])
                R[i, c] = 0.0
        pivots.append(c)
        r += 1
    R[r:] = 0.0
    return R, pivots


def rank(M: MatrixF, tol: Tolerance = DEFAULT_TOL) -> int:
    return len(row_echelon(M.data, tol.eps_zero)[1])


def is_nonsingular(M: MatrixF, tol: Tolerance = DEFAULT_TOL) -> bool:
    return M.rows == M.cols and rank(M, tol) == M.rows
