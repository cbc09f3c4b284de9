"""Scalars over R, C and H stored as four real components.

Every scalar is ``a + b*i + c*j + e*k``.  Real and complex scalars simply keep
the unused components at zero, so the matrix code can run one code path for
all three fields.  The vectorised helpers (``qmul``, ``qconj``, ``qabs``) act on
arrays whose last axis has length 4 and are what the matrix module uses.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, FieldMismatchError


class FieldTag(enum.Enum):
    REAL = 1
    COMPLEX = 2
    QUATERNION = 4

    @property
    def d(self) -> int:
        """Real dimension of the field."""
        return self.value

    @property
    def symbol(self) -> str:
        return {1: "R", 2: "C", 4: "H"}[self.value]

    @classmethod
    def parse(cls, text) -> "FieldTag":
        if isinstance(text, FieldTag):
            return text
        key = str(text).strip().upper()
        table = {"R": cls.REAL, "REAL": cls.REAL, "C": cls.COMPLEX, "COMPLEX": cls.COMPLEX,
                 "H": cls.QUATERNION, "QUATERNION": cls.QUATERNION}
        if key not in table:
            raise ValueError(f"unknown field {text!r}; expected R, C or H")
        return table[key]


REAL, COMPLEX, QUATERNION = FieldTag.REAL, FieldTag.COMPLEX, FieldTag.QUATERNION


def qmul(x, y):
    """Hamilton product of broadcastable (..., 4) arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    a1, b1, c1, d1 = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
    a2, b2, c2, d2 = y[..., 0], y[..., 1], y[..., 2], y[..., 3]
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=-1)


def qconj(x):
    x = np.array(x, dtype=float)
    x[..., 1:] *= -1.0
    return x


def qabs(x):
    return np.sqrt(np.sum(np.square(x), axis=-1))


def qinv(x):
    x = np.asarray(x, dtype=float)
    return qconj(x) / np.sum(np.square(x), axis=-1)[..., None]


def check_components(comps, field: FieldTag) -> None:
    """Unused components must be exactly zero for R and C."""
    comps = np.asarray(comps)
    if np.any(comps[..., field.d:] != 0.0):
        raise FieldMismatchError(f"nonzero imaginary components for field {field.symbol}")


@dataclass(frozen=True)
class Scalar:
    a: float
    b: float = 0.0
    c: float = 0.0
    e: float = 0.0
    tag: FieldTag = REAL

    def __post_init__(self):
        check_components(self.components, self.tag)

    @classmethod
    def of(cls, value, tag: FieldTag = REAL) -> "Scalar":
        """Build from a python number, a component sequence or another Scalar."""
        if isinstance(value, Scalar):
            if value.tag is not tag:
                raise FieldMismatchError("scalar field differs from requested field")
            return value
        if isinstance(value, (int, float)):
            return cls(float(value), tag=tag)
        if isinstance(value, complex):
            return cls(value.real, value.imag, tag=tag)
        comps = [float(v) for v in value] + [0.0] * (4 - len(value))
        return cls(*comps, tag=tag)

    @classmethod
    def from_array(cls, arr, tag: FieldTag) -> "Scalar":
        return cls(*(float(v) for v in arr), tag=tag)

    @property
    def components(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.e])

    def conj(self) -> "Scalar":
        return Scalar(self.a, -self.b, -self.c, -self.e, self.tag) if self.tag is not REAL \
            else self

    def __abs__(self) -> float:
        return math.sqrt(self.a ** 2 + self.b ** 2 + self.c ** 2 + self.e ** 2)

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.tag is not self.tag:
            raise FieldMismatchError(f"cannot combine {self.tag.symbol} and {other.tag.symbol} scalars")

    def __mul__(self, other: "Scalar") -> "Scalar":
        return multiply(self, other)

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar.from_array(self.components + other.components, self.tag)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar.from_array(self.components - other.components, self.tag)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b, -self.c, -self.e, self.tag)

    def isclose(self, other, tol: float = 1e-12) -> bool:
        other = Scalar.of(other, self.tag)
        return abs(self - other) <= tol

    def to_json(self) -> list:
        return [float(v) for v in self.components[: self.tag.d]]

    def __repr__(self) -> str:
        parts = [f"{self.a:g}"]
        for v, unit in zip((self.b, self.c, self.e), "ijk"):
            if v:
                parts.append(f"{v:+g}{unit}")
        return f"Scalar[{self.tag.symbol}]({''.join(parts)})"


def multiply(x: Scalar, y: Scalar) -> Scalar:
    """Product in the common field of ``x`` and ``y`` (Hamilton product for H)."""
    x._check(y)
    return Scalar.from_array(qmul(x.components, y.components), x.tag)


def phase_normalizer(x: Scalar) -> Scalar:
    """Unit scalar ``q`` such that ``q * x`` is the positive real ``|x|``.

    It is applied on the left, matching the left action on row vectors.
    """
    r = abs(x)
    if r == 0.0:
        raise DegenerateInputError("phase of the zero scalar is undefined")
    return Scalar.from_array(x.conj().components / r, x.tag)


def scalar_from_json(value, tag: FieldTag) -> Scalar:
    if isinstance(value, (int, float)):
        return Scalar(float(value), tag=tag)
    if len(value) > tag.d:
        raise FieldMismatchError(f"{len(value)} components given for field {tag.symbol}")
    return Scalar.of(list(value), tag)
