"""Symmetric products of the complex line and of the Riemann sphere.

An unordered m-tuple of complex numbers corresponds to the monic polynomial
with those roots, i.e. to its elementary symmetric functions.  Points at
infinity are kept as an explicit count.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DegenerateInputError, NumericError
from .matrix import DEFAULT_TOL, Tolerance

INF = complex("inf")


@dataclass(frozen=True)
class PointMultiset:
    finite: tuple[complex, ...] = ()
    infinite_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(complex(z) for z in self.finite))
        if self.infinite_count < 0:
            raise ValueError("negative count of points at infinity")

    @property
    def size(self) -> int:
        return len(self.finite) + self.infinite_count

    def to_json(self) -> dict:
        return {"points": [[z.real, z.imag] for z in self.finite], "inf": self.infinite_count}

    @classmethod
    def from_json(cls, obj) -> "PointMultiset":
        return cls(tuple(complex(*p) for p in obj.get("points", [])), int(obj.get("inf", 0)))


def sym_to_coeffs(points) -> list[complex]:
    """Elementary symmetric functions ``(sigma_1, ..., sigma_m)`` of the points."""
    if isinstance(points, PointMultiset):
        if points.infinite_count:
            raise ValueError("points at infinity have no elementary symmetric functions")
        points = points.finite
    # e[k] = sigma_k of the points seen so far
    e = [1 + 0j]
    for z in points:
        z = complex(z)
        e = [1 + 0j] + [e[k] + z * e[k - 1] for k in range(1, len(e))] + [z * e[-1]]
    return e[1:]


def coeffs_to_sym(coeffs, tol: Tolerance = DEFAULT_TOL) -> PointMultiset:
    """Roots of ``z^m - sigma_1 z^(m-1) + sigma_2 z^(m-2) - ... + (-1)^m sigma_m``."""
    sigma = np.asarray(coeffs, dtype=complex)
    m = len(sigma)
    if m == 0:
        return PointMultiset()
    poly = np.concatenate([[1.0], sigma * (-1.0) ** np.arange(1, m + 1)])
    if not np.all(np.isfinite(poly)):
        raise NumericError("non-finite coefficients")
    roots = np.roots(poly)
    resid = np.max(np.abs(np.polyval(poly, roots)) / np.maximum(1.0, np.abs(roots)) ** m)
    scale = np.max(np.abs(poly))
    if not np.isfinite(resid) or resid > 1e-6 * scale:
        raise NumericError(f"root residual {resid:.3g} too large")
    return PointMultiset(tuple(roots))


def projective_vector_roots(v, tol: Tolerance = DEFAULT_TOL) -> PointMultiset:
    """Roots on the Riemann sphere of ``v_m z^(m-1) + ... + v_2 z + v_1``.

    If the top ``s`` coefficients vanish, ``s`` roots sit at infinity.  The
    vector is normalised first, so the result depends only on its line.
    """
    v = np.asarray(v, dtype=complex).ravel()
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise DegenerateInputError("the zero vector is not a projective point")
    v = v / norm
    mags = np.abs(v)
    s = 0
    while mags[len(v) - 1 - s] <= tol.eps_zero:
        s += 1
    top = len(v) - 1 - s
    if top == 0:
        return PointMultiset((), s)
    # highest degree first for np.roots
    roots = np.roots(v[: top + 1][::-1])
    return PointMultiset(tuple(roots), s)


def cp_cell_index(points: PointMultiset, xi, tol: Tolerance = DEFAULT_TOL) -> int:
    """Multiplicity of ``xi`` in the multiset: the index of its stratum."""
    if cmath.isinf(complex(xi)):
        return points.infinite_count
    xi = complex(xi)
    return sum(1 for z in points.finite if abs(z - xi) <= tol.eps_zero)


def cp_strata(m: int) -> list[tuple[int, int]]:
    """Strata of the m-th symmetric product of the sphere as ``(i, complex dim m - i)``."""
    return [(i, m - i) for i in range(m + 1)]


def match_distance(a, b) -> float:
    """Largest distance between paired points under the min-cost matching."""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.shape != b.shape:
        raise ValueError("multisets of different sizes")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def multiset_distance(p: PointMultiset, q: PointMultiset) -> float:
    if p.infinite_count != q.infinite_count:
        return float("inf")
    return match_distance(p.finite, q.finite)
