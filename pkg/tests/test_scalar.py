import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfm.errors import DegenerateInputError, FieldMismatchError
from cfm.scalar import COMPLEX, QUATERNION, REAL, FieldTag, Scalar, multiply, phase_normalizer

from helpers import cx, q

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)


def quaternions(nonzero=False):
    s = st.builds(q, finite, finite, finite, finite)
    return s.filter(lambda x: abs(x) > 1e-3) if nonzero else s


def test_field_dimensions():
    assert [f.d for f in (REAL, COMPLEX, QUATERNION)] == [1, 2, 4]
    assert FieldTag.parse("h") is QUATERNION
    with pytest.raises(ValueError):
        FieldTag.parse("O")


def test_unused_components_rejected():
    with pytest.raises(FieldMismatchError):
        Scalar(1.0, 2.0, tag=REAL)
    with pytest.raises(FieldMismatchError):
        Scalar(1.0, 0.0, 1.0, tag=COMPLEX)


@pytest.mark.parametrize("x, y, expected", [
    (q(b=1), q(c=1), q(e=1)),    # i j = k
    (q(c=1), q(b=1), q(e=-1)),   # j i = -k
    (q(c=1), q(e=1), q(b=1)),    # j k = i
    (q(e=1), q(b=1), q(c=1)),    # k i = j
    (q(b=1), q(b=1), q(a=-1)),
])
def test_hamilton_relations(x, y, expected):
    assert multiply(x, y) == expected


def test_complex_product():
    assert multiply(cx(1 + 1j), cx(1 - 1j)).isclose(cx(2))


def test_tag_mismatch():
    with pytest.raises(FieldMismatchError):
        multiply(Scalar(1.0), cx(1j))


@pytest.mark.parametrize("x, expected", [
    (Scalar(-2.0), Scalar(-1.0)),
    (cx(1j), cx(-1j)),
    (cx(1 + 1j), cx((1 - 1j) / math.sqrt(2))),
])
def test_phase_normalizer_examples(x, expected):
    assert phase_normalizer(x).isclose(expected, 1e-15)


def test_phase_normalizer_zero():
    with pytest.raises(DegenerateInputError):
        phase_normalizer(cx(0))


@settings(max_examples=200)
@given(quaternions(), quaternions())
def test_norm_multiplicative(x, y):
    assert math.isclose(abs(x * y), abs(x) * abs(y), rel_tol=1e-14, abs_tol=1e-12)


@settings(max_examples=200)
@given(quaternions(), quaternions())
def test_conjugate_reverses_products(x, y):
    lhs = (x * y).conj()
    rhs = y.conj() * x.conj()
    assert np.allclose(lhs.components, rhs.components, rtol=1e-13, atol=1e-9)


@settings(max_examples=200)
@given(quaternions(nonzero=True))
def test_phase_normalizer_left_action(x):
    p = phase_normalizer(x)
    assert math.isclose(abs(p), 1.0, rel_tol=1e-14)
    y = p * x
    assert y.a >= 0
    assert np.allclose(y.components[1:], 0.0, atol=1e-12 * abs(x))
    assert phase_normalizer(y).isclose(q(1.0), 1e-12)
