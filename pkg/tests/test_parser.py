from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicinf.parser import ParseError, parse_poly
from cubicinf.poly import DegreeError, Poly


def test_nodal_normal_form():
    f = parse_poly("x0^3 + x1^3 + x0*x1*x2")
    assert f.terms == {(3, 0, 0): 1, (0, 3, 0): 1, (1, 1, 1): 1}


def test_zero_parses():
    assert parse_poly("0").is_zero()


def test_rational_coefficient():
    f = parse_poly("1/2*x0^2*x1 - x2 + 3")
    assert f.terms == {(2, 1, 0): Fraction(1, 2), (0, 0, 1): -1, (0, 0, 0): 3}
    assert str(f) == "1/2*x0^2*x1 - x2 + 3"


def test_implicit_products_and_spaces():
    assert parse_poly(" 2x0x1x2 -x0 ") == parse_poly("2*x0*x1*x2 - x0")
    assert parse_poly("x0x0x0") == parse_poly("x0^3")


@pytest.mark.parametrize("text", ["x0+", "(x0)", "1/0", "", "2**x0", "x0^", "x0 x1 +* 2", "x5"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_poly("x0 + y")
    assert exc.value.pos == 5


def test_degree_limit():
    with pytest.raises(DegreeError):
        parse_poly("x0^4")
    assert parse_poly("x0^4", max_degree=None).degree() == 4


def test_other_generators():
    f = parse_poly("t + a0*a7 + a5^3", ("t",) + tuple(f"a{i}" for i in range(9)), max_degree=None)
    assert f.degree() == 3


monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(lambda m: sum(m) <= 3)
coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=12).filter(lambda c: c != 0)


@given(st.dictionaries(monos, coeffs, max_size=8))
def test_print_parse_round_trip(terms):
    p = Poly(terms)
    assert parse_poly(str(p)) == p
