from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from cfm.cells import cell_generating_polynomial, euler_characteristic
from cfm.dsl import parse
from cfm.poincare import (IntPoly, betti_numbers, gaussian_binomial, poincare_polynomial,
                          q_factorial)
from cfm.presets import catalog
from cfm.scalar import COMPLEX, QUATERNION, REAL

from helpers import FIELDS

small = st.integers(0, 10)


def test_intpoly_basics():
    p = IntPoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert IntPoly().degree == -1
    assert p * p == IntPoly((1, 4, 4))
    assert p - p == IntPoly()
    assert p(3) == 7
    assert IntPoly((1, 1)).substitute_power(2) == IntPoly((1, 0, 1))
    assert IntPoly((1, 0, -1)).divexact(IntPoly((1, 1))) == IntPoly((1, -1))
    with pytest.raises(ValueError):
        IntPoly((1, 0, 1)).divexact(IntPoly((1, 1)))
    assert IntPoly((1, -1, 0, 2)).pretty("t") == "1 - t + 2t^3"
    assert str(IntPoly((0, 1))) == "q"


@pytest.mark.parametrize("p, q_, expected", [
    (1, 1, (1, 1)), (2, 2, (1, 1, 2, 1, 1)), (0, 5, (1,)), (3, 0, (1,)), (1, 3, (1, 1, 1, 1)),
])
def test_gaussian_binomial_examples(p, q_, expected):
    assert gaussian_binomial(p, q_).coeffs == expected


def test_gaussian_binomial_rejects_negative():
    with pytest.raises(ValueError):
        gaussian_binomial(-1, 2)


@given(small, small)
def test_gaussian_binomial_properties(p, q_):
    g = gaussian_binomial(p, q_)
    assert g == gaussian_binomial(q_, p)
    assert g(1) == comb(p + q_, p)
    assert g.degree == p * q_
    assert g.coeffs == g.coeffs[::-1]
    assert all(c > 0 for c in g.coeffs)


@given(st.integers(0, 8), st.integers(0, 8))
def test_gaussian_binomial_product_formula(p, q_):
    # [p+q]! / ([p]! [q]!) as an exact division
    assert q_factorial(p + q_).divexact(q_factorial(p) * q_factorial(q_)) == gaussian_binomial(p, q_)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 2))
def test_flag_is_gaussian_multinomial(sizes, extra):
    m = sum(sizes) + extra
    if m > 8:
        return
    expr = parse(f"flag({','.join(map(str, sizes))};{m})")
    denom = IntPoly.one()
    for k in list(sizes) + [extra]:
        denom = denom * q_factorial(k)
    assert poincare_polynomial(expr) == q_factorial(m).divexact(denom)
    # at q = 1 this is the multinomial count
    count = factorial(m)
    for k in list(sizes) + [extra]:
        count //= factorial(k)
    assert poincare_polynomial(expr)(1) == count


@pytest.mark.parametrize("text, field, coeffs", [
    ("grassmann(1,2)", REAL, (1, 1)),
    ("grassmann(2,4)", COMPLEX, (1, 0, 1, 0, 2, 0, 1, 0, 1)),
    ("flag(1,1,1;3)", QUATERNION, (IntPoly((1, 1)) * IntPoly((1, 1, 1))).substitute_power(4).coeffs),
    ("grassmann(1,3)", REAL, (1, 1, 1)),
])
def test_poincare_examples(text, field, coeffs):
    assert poincare_polynomial(parse(text), field).coeffs == coeffs


@pytest.mark.parametrize("text, field, betti", [
    ("preset:example4(2,1;3)", REAL, (1, 2, 1)),
    ("grassmann(1,3)", COMPLEX, (1, 0, 1, 0, 1)),
    ("basic(3)", REAL, (1,)),
    ("basic(2)", QUATERNION, (1,)),
])
def test_betti_examples(text, field, betti):
    assert betti_numbers(parse(text), field) == betti


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("text, expr", catalog(), ids=[t for t, _ in catalog()])
def test_poincare_equals_cell_polynomial(text, expr, field):
    cells = cell_generating_polynomial(expr).substitute_power(field.d)
    assert poincare_polynomial(expr, field) == cells


@pytest.mark.parametrize("text, expr", catalog(), ids=[t for t, _ in catalog()])
def test_euler_from_poincare(text, expr):
    assert poincare_polynomial(expr, REAL)(-1) == euler_characteristic(expr, REAL)
    for field in (COMPLEX, QUATERNION):
        assert poincare_polynomial(expr, field)(-1) == euler_characteristic(expr, field)
