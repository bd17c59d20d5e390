from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicinf.fields import (
    NumberField, ZeroDivisorError, rational_cbrt, rational_sqrt, to_rat, ueval, umonic,
    usquarefree, ustr,
)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def test_rationals_are_reduced():
    x = to_rat("6/4")
    assert (x.numerator, x.denominator) == (3, 2)
    assert to_rat(0).denominator == 1


def test_sqrt2_field():
    K = NumberField([-2, 0, 1])
    s = K.gen
    assert s * s == K(2)
    assert (1 + s) * (1 - s) == K(-1)
    assert (1 / (1 + s)) * (1 + s) == K(1)


@given(rats, rats, rats, rats)
def test_quadratic_field_axioms(a, b, c, d):
    K = NumberField([-5, 1, 1])  # s^2 + s - 5, irreducible
    x = K(a) + K(b) * K.gen
    y = K(c) + K(d) * K.gen
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if y:
        assert (x / y) * y == x


def test_zero_divisor_reports_factor():
    K = NumberField([-1, 0, 1])  # s^2 - 1 = (s-1)(s+1), reducible on purpose
    with pytest.raises(ZeroDivisorError) as exc:
        (K.gen - 1).inverse()
    assert len(exc.value.factor) == 2


def test_roots():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_cbrt(Fraction(-27, 8)) == Fraction(-3, 2)


def test_univariate_helpers():
    p = [Fraction(x) for x in (4, -4, 1)]  # (t-2)^2
    assert usquarefree(p) == umonic([Fraction(-2), Fraction(1)])
    assert ueval(p, Fraction(2)) == 0
    assert ustr([Fraction(-4), Fraction(0), Fraction(1)]) == "t^2 - 4"
