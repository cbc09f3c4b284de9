"""Integer polynomials, Gaussian binomials and Poincaré polynomials of forms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .expr import Basic, CfExpr, Spread, nesting_order, require_nonempty
from .scalar import REAL, FieldTag


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients; ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, d: int) -> "IntPoly":
        """``p(x) -> p(x**d)``."""
        out = [0] * (d * self.degree + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[d * k] = c
        return IntPoly(tuple(out))

    def divexact(self, other: "IntPoly") -> "IntPoly":
        """Quotient of an exact division by a polynomial with leading coefficient +-1."""
        if not other.coeffs or abs(other.coeffs[-1]) != 1:
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + other.degree] * lead
            q[k] = c
            for i, y in enumerate(other.coeffs):
                rem[k + i] -= c * y
        if any(rem):
            raise ValueError("division is not exact")
        return IntPoly(tuple(q))

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            if k and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.pretty("q")


@lru_cache(maxsize=None)
def _qbinom(a: int, b: int) -> IntPoly:
    if b < 0 or b > a:
        return IntPoly()
    if b == 0 or b == a:
        return IntPoly.one()
    # [a, b] = [a-1, b-1] + q^b [a-1, b]
    return _qbinom(a - 1, b - 1) + IntPoly.monomial(b) * _qbinom(a - 1, b)


def gaussian_binomial(p: int, q_: int) -> IntPoly:
    """``[p + q_ choose p]_q`` as an integer polynomial in ``q``."""
    if p < 0 or q_ < 0:
        raise ValueError("arguments must be nonnegative")
    return _qbinom(p + q_, p)


def q_factorial(n: int) -> IntPoly:
    """``[n]_q! = prod_{k<=n} (1 + q + ... + q^(k-1))``."""
    out = IntPoly.one()
    for k in range(1, n + 1):
        out = out * IntPoly((1,) * k)
    return out


def _product_poly(expr: CfExpr) -> IntPoly:
    if isinstance(expr, Basic):
        return IntPoly.one()
    if isinstance(expr, Spread):
        return gaussian_binomial(expr.n, len(expr.support) - expr.n) * _product_poly(expr.base)
    out = IntPoly.one()
    for i, r in nesting_order(expr):
        b = expr.blocks[i]
        out = out * gaussian_binomial(b.n, r - b.n) * _product_poly(b.base)
    return out


def poincare_polynomial(expr: CfExpr, field: FieldTag = REAL) -> IntPoly:
    """Product of Grassmannian factors with ``q = t**d``.

    For F = R the coefficients are mod-2 Betti numbers (the cell count in each
    dimension), not real Betti numbers.
    """
    require_nonempty(expr)
    return _product_poly(expr).substitute_power(field.d)


def betti_numbers(expr: CfExpr, field: FieldTag = REAL) -> tuple[int, ...]:
    return poincare_polynomial(expr, field).coeffs
