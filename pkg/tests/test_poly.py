import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicinf import linalg
from cubicinf.poly import (
    DOUBLE_SIMPLE, THREE_DISTINCT, TRIPLE, ZERO, AffineMap, ContextError, DegreeError,
    InvalidMapError, Poly, ShapeError, binary_cubic_root_structure, cubic_discriminant,
    dehomogenize, gradient, hessian_rank_at, homogenize, substitute_affine,
)
from cubicinf.fields import ugcd, uderiv
from cubicinf.verify import random_affine_map
from conftest import P, random_poly

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def polys(draw, max_deg=2):
    n = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n):
        m = draw(st.tuples(*[st.integers(0, max_deg)] * 3).filter(lambda m: sum(m) <= max_deg))
        terms[m] = draw(small)
    return Poly(terms)


affine_maps = st.integers(0, 10**6).map(lambda seed: random_affine_map(random.Random(seed), 2))


def test_difference_of_squares():
    assert P("x0+x1") * P("x0-x1") == P("x0^2-x1^2")


def test_additive_identity():
    p = P("3x0x1 - 1/2x2 + 7")
    assert p + Poly.zero() == p


def test_trinomial_cube_has_ten_terms():
    e = P("x0+x1+x2")
    cube = e * e * e
    assert len(cube.terms) == 10
    assert sorted(cube.terms.values()) == sorted([1] * 3 + [3] * 6 + [6])


def test_zero_coefficients_are_dropped():
    p = P("x0 - x0 + x1")
    assert p == P("x1") and (1, 0, 0) not in p.terms


def test_context_mismatch():
    with pytest.raises(ContextError):
        P("x0") + Poly.var("t", ("t",))


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p and p + q == q + p


def test_translation_example():
    # inverse of x0 -> x0 + 1 is x0 -> x0 - 1
    m = AffineMap(linalg.identity(3), (1, 0, 0))
    assert substitute_affine(P("x0"), m) == P("x0 - 1")


def test_identity_map():
    p = P("x0^3 + 2x1x2 - 5")
    assert substitute_affine(p, AffineMap.identity()) == p


def test_singular_map_rejected():
    with pytest.raises(InvalidMapError):
        AffineMap([[1, 0, 0], [1, 0, 0], [0, 0, 1]])
    with pytest.raises(InvalidMapError):
        AffineMap(linalg.identity(3), scale=0)


@given(polys(3), affine_maps, affine_maps)
def test_composition_law(p, m1, m2):
    assert substitute_affine(substitute_affine(p, m1), m2) == substitute_affine(p, m2.compose(m1))


@given(polys(), polys(), affine_maps)
def test_substitution_is_multiplicative_on_the_linear_part(p, q, m):
    # with L = identity the substitution is a ring homomorphism
    m = AffineMap(m.linear, m.translation)
    assert substitute_affine(p * q, m) == substitute_affine(p, m) * substitute_affine(q, m)
    assert substitute_affine(p + q, m) == substitute_affine(p, m) + substitute_affine(q, m)


def test_homogenize_examples():
    assert homogenize(P("x0 + x0^3"), 3) == P("x0*x3^2 + x0^3", ("x0", "x1", "x2", "x3"))
    assert homogenize(P("1"), 3) == P("x3^3", ("x0", "x1", "x2", "x3"))
    with pytest.raises(DegreeError):
        homogenize(P("x0^3"), 2)


def test_homogenize_round_trip_full_cubic(rng):
    f = random_poly(rng, max_deg=3, nterms=20)
    F = homogenize(f, 3)
    assert F.is_homogeneous()
    assert dehomogenize(F) == f


@given(polys(3))
def test_homogenize_round_trip(f):
    assert dehomogenize(homogenize(f, 3)) == f


def test_gradient():
    assert gradient(P("x0x1x2")) == [P("x1x2"), P("x0x2"), P("x0x1")]
    assert all(g.is_zero() for g in gradient(P("5")))
    assert gradient(P("x0^3+x1^3+x0x1x2")) == [P("3x0^2+x1x2"), P("3x1^2+x0x2"), P("x0x1")]


def test_hessian_rank():
    assert hessian_rank_at(P("x0^2+x1^2+x2^2"), [0, 0, 0]) == 3
    assert hessian_rank_at(P("x0^3"), [0, 0, 0]) == 0
    assert hessian_rank_at(P("x0x1^2"), [1, 0, 0]) == 1


def test_cubic_discriminant():
    s = ("s",)
    assert cubic_discriminant(P("s^3 - 3s + 2", s)) == 0
    assert cubic_discriminant(P("s^3 - s", s)) != 0
    with pytest.raises(DegreeError):
        cubic_discriminant(P("s^2 + 1", s))


def test_discriminant_of_the_cuspidal_special_cubic():
    """q3 = a0 s - s^3 - t (x3 = 1 chart) has a repeated root exactly when 27t^2 = 4a0^3."""
    for a0 in (1, 3, Fraction(-2, 5)):
        for t in (Fraction(2), Fraction(-7, 3), Fraction(0), Fraction(-2)):
            q = Poly({(1,): Fraction(a0), (3,): Fraction(-1), (0,): -t}, ("s",))
            assert (cubic_discriminant(q) == 0) == (27 * t * t == 4 * Fraction(a0) ** 3)


@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4).filter(lambda c: c[3] != 0))
def test_discriminant_vanishes_iff_repeated_root(c):
    q = Poly({(i,): Fraction(x) for i, x in enumerate(c)}, ("s",))
    coeffs = [Fraction(x) for x in c]
    repeated = len(ugcd(coeffs, uderiv(coeffs))) > 1
    assert (cubic_discriminant(q) == 0) == repeated


def test_binary_cubic_root_structure():
    uv = ("u", "v")
    assert binary_cubic_root_structure(P("u^3+v^3", uv)) == THREE_DISTINCT
    assert binary_cubic_root_structure(P("u^2v", uv)) == DOUBLE_SIMPLE
    assert binary_cubic_root_structure(P("u^3", uv)) == TRIPLE
    assert binary_cubic_root_structure(Poly.zero(uv)) == ZERO
    with pytest.raises(ShapeError):
        binary_cubic_root_structure(P("u^3+v", uv))


def test_random_linear_change_preserves_root_structure():
    rng = random.Random(3)
    uv = ("u", "v")
    cases = {"u^3+v^3": THREE_DISTINCT, "u^2v": DOUBLE_SIMPLE, "u^3": TRIPLE, "u^3 - u v^2": THREE_DISTINCT}
    for text, want in cases.items():
        q = P(text, uv)
        for _ in range(10):
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if a * d - b * c == 0:
                continue
            img = q.compose([P(f"{a}u + {b}v".replace("+ -", "- "), uv), P(f"{c}u + {d}v".replace("+ -", "- "), uv)])
            assert binary_cubic_root_structure(img) == want
