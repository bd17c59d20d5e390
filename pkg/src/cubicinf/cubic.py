"""Projective plane cubics: singular locus, type (a)-(i), normalizing maps."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import sympy

from . import linalg
from .fields import NumberField, rational_cbrt, rational_sqrt, umonic
from .germ import curve_local_milnor
from .groebner import LEX, GREVLEX, groebner, krull_dimension, mono_divides
from .poly import DEFAULT_GENS, AffineMap, Poly, hessian_matrix, linear_substitute


class CubicType(str, enum.Enum):
    GENERAL = "General"
    NODAL = "Nodal"
    CUSPIDAL = "Cuspidal"
    CONIC_TANGENT = "ConicTangent"
    CONIC_CHORD = "ConicChord"
    THREE_LINES = "ThreeLines"
    TRIANGLE = "Triangle"
    DOUBLE_LINE = "DoubleLine"
    TRIPLE_LINE = "TripleLine"

    def __str__(self):
        return self.value

    @property
    def reduced(self) -> bool:
        return self not in (CubicType.DOUBLE_LINE, CubicType.TRIPLE_LINE)


_x0, _x1, _x2 = Poly.gens_of(DEFAULT_GENS)

NORMAL_FORMS = {
    CubicType.GENERAL: _x0**3 + _x1**3 + _x2**3 + _x0 * _x1 * _x2,
    CubicType.NODAL: _x0**3 + _x1**3 + _x0 * _x1 * _x2,
    CubicType.CUSPIDAL: -_x0**3 + _x2 * _x1**2,
    CubicType.CONIC_TANGENT: (_x0**2 + _x1 * _x2) * _x1,
    CubicType.CONIC_CHORD: (_x0**2 + _x1 * _x2) * _x0,
    CubicType.THREE_LINES: _x0**3 + _x1**3,
    CubicType.TRIANGLE: _x0 * _x1 * _x2,
    CubicType.DOUBLE_LINE: _x0 * _x1**2,
    CubicType.TRIPLE_LINE: _x1**3,
}

_CHI_INFINITY = {
    CubicType.GENERAL: 0,
    CubicType.NODAL: 1,
    CubicType.CUSPIDAL: 2,
    CubicType.CONIC_TANGENT: 3,
    CubicType.CONIC_CHORD: 2,
    CubicType.THREE_LINES: 4,
    CubicType.TRIANGLE: 3,
    CubicType.DOUBLE_LINE: 3,
    CubicType.TRIPLE_LINE: 2,
}


def chi_infinity(ct: CubicType) -> int:
    """Euler characteristic of the curve {f3 = 0} in P^2."""
    return _CHI_INFINITY[CubicType(ct)]


class UnsupportedExtension(ValueError):
    """Data needed lives in a field extension of degree > 2."""

    def __init__(self, minpoly, message="needs an extension of degree > 2"):
        super().__init__(f"{message}: minimal polynomial {minpoly}")
        self.minpoly = minpoly


@dataclass(frozen=True)
class ProjPoint:
    """Projective point; coordinates are Fractions or elements of one field."""

    coords: tuple
    field: NumberField | None = None

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    @property
    def is_rational(self) -> bool:
        return self.field is None


@dataclass
class CurveSingularLocus:
    dimension: int | None  # None for an empty locus
    points: list = field(default_factory=list)
    milnor: list = field(default_factory=list)
    count: int = 0


def _check_cubic(f3: Poly):
    if not f3 or not f3.is_homogeneous() or f3.degree() != 3:
        raise ValueError("expected a nonzero homogeneous cubic")
    if f3.gens != DEFAULT_GENS:
        raise ValueError(f"cubic must be written in {DEFAULT_GENS}")


# --- univariate factoring over Q ---------------------------------------------------

def factor_rational(coeffs):
    """Irreducible monic factors over Q of a univariate (coeffs low->high)."""
    s = sympy.Symbol("s")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], s,
                      domain="QQ")
    out = []
    for fac, _mult in expr.factor_list()[1]:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append(umonic(cs))
    return out


# --- singular locus ---------------------------------------------------------------

def _affine_chart_solutions(ideal_gens):
    """Points of a zero-dimensional ideal in Q[x0, x1] as (factor, x0(s), x1(s)).

    Each entry is an irreducible factor h of the eliminant together with
    coordinates expressed through a root s of h.
    """
    gens2 = ideal_gens[0].gens

    def eliminant(polys, var_first):
        order = LEX
        ps = polys if var_first == 0 else [p.to_gens(gens2[::-1]) for p in polys]
        gb = groebner(ps, order)
        last = gb[0]
        return [last.coeff((0, k)) for k in range(last.degree() + 1)]

    from .fields import usquarefree

    h1 = usquarefree(eliminant(ideal_gens, 0))
    h0 = usquarefree(eliminant(ideal_gens, 1))
    x0, x1 = Poly.gens_of(gens2)
    rad = list(ideal_gens)
    rad.append(sum((x1**k * c for k, c in enumerate(h1)), Poly.zero(gens2)))
    rad.append(sum((x0**k * c for k, c in enumerate(h0)), Poly.zero(gens2)))
    for c in range(0, 50):
        # y1 = x1 + c*x0, i.e. substitute x1 -> y1 - c*x0
        moved = [p.subs({"x1" if gens2[1] == "x1" else gens2[1]: x1 - x0 * c}) for p in rad]
        gb = groebner(moved, LEX)
        if len(gb) == 2 and gb[1].degree_in(0) == 1 and gb[1].coeff((1, 0)) != 0 \
                and all(m[0] == 0 for m in gb[0].terms) \
                and all(m[0] == 0 or m == (1, 0) for m in gb[1].terms):
            h = [gb[0].coeff((0, k)) for k in range(gb[0].degree() + 1)]
            lin = gb[1]
            lead = lin.coeff((1, 0))
            g = [-lin.coeff((0, k)) / lead for k in range(lin.degree_in(1) + 1)]
            return h, g, Fraction(c)
        if len(gb) == 1 and gb[0].degree() == 0:
            return [Fraction(1)], [], Fraction(c)
    raise RuntimeError("could not bring the singular ideal into shape position")


def _solve_projective(polys):
    """Distinct zeros in P^2 of homogeneous polys with finitely many zeros.

    Returns (count, irreducible eliminant factors, points or None).
    """
    x0, x1, x2 = Poly.gens_of()
    for c0, c1 in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (5, 2)]:
        ell = x2 + x1 * c1 + x0 * c0
        gbh = groebner(list(polys) + [ell], GREVLEX)
        if krull_dimension(gbh, GREVLEX) <= 0:
            break
    else:  # pragma: no cover - finitely many bad charts
        raise RuntimeError("no chart found")
    g2 = ("x0", "x1")
    chart = {"x2": (Poly.const(1, g2) - Poly.var("x1", g2) * c1 - Poly.var("x0", g2) * c0)}
    aff = [p.subs({"x0": Poly.var("x0", g2), "x1": Poly.var("x1", g2), **chart}) for p in polys]
    aff = [p for p in aff if p]
    h, g, shear = _affine_chart_solutions(aff)
    return h, g, shear, (c0, c1)


def projective_points(polys, explicit: bool = True):
    """Zeros in P^2 of homogeneous polynomials (finitely many expected).

    Returns (count, points); points are rational or conjugate pairs over a
    quadratic field.  Higher-degree points raise UnsupportedExtension when
    ``explicit`` is set.
    """
    polys = [p for p in polys if p]
    gb = groebner(polys, GREVLEX) if polys else []
    dim = krull_dimension(gb, GREVLEX) if gb else 3
    if dim <= 0:
        return 0, []
    if dim >= 2:
        raise ValueError("positive-dimensional projective zero set")
    h, g, shear, (c0, c1) = _solve_projective(polys)
    count = len(h) - 1
    if not explicit:
        return count, None
    points = []
    for fac in factor_rational(h):
        deg = len(fac) - 1
        if deg == 1:
            roots = [(-fac[0], None)]
        elif deg == 2:
            K = NumberField(fac)
            s = K.gen
            roots = [(s, K), (-s - fac[1], K)]
        else:
            raise UnsupportedExtension(fac)
        for r, K in roots:
            vx0 = sum((r**k * c for k, c in enumerate(g)), Fraction(0)) if g else Fraction(0)
            vx1 = r - shear * vx0
            vx2 = 1 - c1 * vx1 - c0 * vx0
            points.append(_normalize_point((vx0, vx1, vx2), K))
    return count, points


def singular_locus(f3: Poly, explicit: bool = True) -> CurveSingularLocus:
    """Singular points of the plane cubic {f3 = 0}.

    With ``explicit`` the points are produced (rational or quadratic);
    otherwise only the number of distinct points is returned for finite loci.
    """
    _check_cubic(f3)
    grad = [f3.diff(v) for v in f3.gens]
    gb = groebner(grad, GREVLEX)
    dim = krull_dimension(gb, GREVLEX) if gb else 3
    if dim <= 0:
        return CurveSingularLocus(None)
    if dim >= 2:
        return CurveSingularLocus(1)
    count, pts = projective_points(grad, explicit)
    locus = CurveSingularLocus(0, count=count)
    if explicit:
        locus.points = pts
        locus.milnor = [point_curve_milnor(f3, p) for p in pts]
    return locus


def _normalize_point(coords, field=None) -> ProjPoint:
    coords = list(coords)
    k = max(i for i, c in enumerate(coords) if c != 0)
    inv = 1 / coords[k] if not isinstance(coords[k], int) else Fraction(1, coords[k])
    coords = [c * inv for c in coords]
    if field is not None:
        from .fields import Elem

        if all(not isinstance(c, Elem) or c.is_rational() for c in coords):
            coords = [c.rational() if isinstance(c, Elem) else c for c in coords]
            field = None
    coords = [Fraction(c) if isinstance(c, int) else c for c in coords]
    return ProjPoint(tuple(coords), field)


def affine_chart(F: Poly, pt: ProjPoint):
    """Dehomogenize F at the chart of pt's last nonzero coordinate.

    Returns (germ polynomial in the remaining variables, point in that chart).
    """
    k = max(i for i, c in enumerate(pt.coords) if c != 0)
    rest = tuple(g for i, g in enumerate(F.gens) if i != k)
    g = F.subs({F.gens[k]: 1}).to_gens(rest)
    loc = [c / pt.coords[k] for i, c in enumerate(pt.coords) if i != k]
    return g, loc


def point_curve_milnor(f3: Poly, pt: ProjPoint):
    g, loc = affine_chart(f3, pt)
    return curve_local_milnor(g, loc)


# --- classification ----------------------------------------------------------------

def _hessian_minors(f3: Poly):
    h = hessian_matrix(f3)
    out = []
    for (i, j), (k, l) in product([(0, 1), (0, 2), (1, 2)], repeat=2):
        out.append(h[i][k] * h[j][l] - h[i][l] * h[j][k])
    return out


def classify_cubic(f3: Poly) -> CubicType:
    _check_cubic(f3)
    locus = singular_locus(f3, explicit=False)
    if locus.dimension is None:
        return CubicType.GENERAL
    if locus.dimension == 1:
        if all(not m for m in _hessian_minors(f3)):
            return CubicType.TRIPLE_LINE
        return CubicType.DOUBLE_LINE
    if locus.count == 2:
        return CubicType.CONIC_CHORD
    if locus.count == 3:
        return CubicType.TRIANGLE
    pts = singular_locus(f3).points
    mu = point_curve_milnor(f3, pts[0])
    return {1: CubicType.NODAL, 2: CubicType.CUSPIDAL, 3: CubicType.CONIC_TANGENT,
            4: CubicType.THREE_LINES}[mu]


# --- normalizing maps -------------------------------------------------------------

@dataclass
class Normalization:
    cubic_type: CubicType
    map: AffineMap | None
    reason: str = ""
    general_lambda: Fraction | None = None

    @property
    def available(self) -> bool:
        return self.map is not None


def _complete_basis(cols):
    """Extend the given column vectors to an invertible 3x3 matrix."""
    cols = [list(c) for c in cols]
    for e in range(3):
        if len(cols) == 3:
            break
        cand = [Fraction(int(i == e)) for i in range(3)]
        trial = cols + [cand]
        if linalg.rank([list(r) for r in zip(*trial)]) == len(trial):
            cols.append(cand)
    return cols


def _cols_to_matrix(cols):
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def _rational_point(pt: ProjPoint):
    if not pt.is_rational:
        return None
    return [Fraction(c) for c in pt.coords]


def _binary_coeffs(g: Poly, u=0, v=1):
    """a,b,c,d of the part of g of the form a u^3 + b u^2 v + c u v^2 + d v^3."""
    def mono(i, j):
        m = [0, 0, 0]
        m[u] += i
        m[v] += j
        return tuple(m)

    return [g.coeff(mono(3 - k, k)) for k in range(4)]


def _split_quadratic(A, B, C):
    """Factor A u^2 + B u v + C v^2 into two rational linear forms, or None."""
    if A == 0 and C == 0:
        return (Fraction(1), Fraction(0)), (Fraction(0), B)
    if A == 0:
        return (Fraction(0), Fraction(1)), (B, C)
    disc = B * B - 4 * A * C
    r = rational_sqrt(disc)
    if r is None:
        return None
    # A (u - r1 v)(u - r2 v)
    r1 = (-B + r) / (2 * A)
    r2 = (-B - r) / (2 * A)
    return (A, -A * r1), (Fraction(1), -r2)


class _Frame:
    """Tracks g = f3(S X) while linear substitutions are applied."""

    def __init__(self, f3: Poly):
        self.S = linalg.identity(3)
        self.g = f3

    def apply(self, R):
        self.S = linalg.matmul(self.S, R)
        self.g = linear_substitute(self.g, R)


def normalizing_map(f3: Poly, ct: CubicType | None = None) -> Normalization:
    """An invertible linear map carrying f3 onto the normal form of its type.

    The returned AffineMap m satisfies substitute_affine(f3, m) == normal form
    (its codomain scale absorbs the overall constant).
    """
    ct = ct or classify_cubic(f3)
    try:
        S, k, lam = _NORMALIZERS[ct](f3)
    except _Unavailable as exc:
        return Normalization(ct, None, str(exc))
    target = NORMAL_FORMS[ct] if ct != CubicType.GENERAL else (
        _x0**3 + _x1**3 + _x2**3 + _x0 * _x1 * _x2 * lam)
    if linear_substitute(f3, S) != target * k:  # pragma: no cover - construction bug guard
        raise AssertionError(f"normalization failed for {ct}: {f3}")
    return Normalization(ct, AffineMap.from_inverse(S, scale=Fraction(1) / k), general_lambda=lam)


class _Unavailable(Exception):
    pass


def _to_point_frame(fr: _Frame, P):
    """Move the rational point P to (0:0:1)."""
    cols = _complete_basis([P])
    cols = cols[1:] + cols[:1]
    fr.apply(_cols_to_matrix(cols))


def _singular_points(f3):
    locus = singular_locus(f3)
    pts = [_rational_point(p) for p in locus.points]
    if any(p is None for p in pts):
        raise _Unavailable("singular points are not rational")
    return pts


def _norm_general(f3):
    allowed = {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}
    if set(f3.terms) - allowed:
        raise _Unavailable("smooth cubic is not in Hesse form")
    a, b, c = (f3.coeff(m) for m in [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    if a == 0 or b == 0 or c == 0:
        raise _Unavailable("smooth cubic is not in Hesse form")
    s1, s2 = rational_cbrt(a / b), rational_cbrt(a / c)
    if s1 is None or s2 is None:
        raise _Unavailable("Hesse scaling needs irrational cube roots")
    S = [[Fraction(1), 0, 0], [0, s1, 0], [0, 0, s2]]
    lam = f3.coeff((1, 1, 1)) * s1 * s2 / a
    return S, a, lam


def _norm_nodal(f3):
    (P,) = _singular_points(f3)
    fr = _Frame(f3)
    _to_point_frame(fr, P)
    g = fr.g
    A, B, C = g.coeff((2, 0, 1)), g.coeff((1, 1, 1)), g.coeff((0, 2, 1))
    split = _split_quadratic(A, B, C)
    if split is None:
        raise _Unavailable("node has irrational tangents")
    l1, l2 = split
    M = [[l1[0], l1[1]], [l2[0], l2[1]]]
    Mi = linalg.inverse(M)
    # z = M y on the (y0, y1) block
    fr.apply([[Mi[0][0], Mi[0][1], 0], [Mi[1][0], Mi[1][1], 0], [0, 0, 1]])
    g = fr.g
    kappa = g.coeff((1, 1, 1))
    e0, e1, e2, e3 = _binary_coeffs(g)
    # y2 -> y2 - (e1 z0 + e2 z1)/kappa
    fr.apply([[1, 0, 0], [0, 1, 0], [-e1 / kappa, -e2 / kappa, 1]])
    b = rational_cbrt(e0 / e3)
    if b is None:
        raise _Unavailable("nodal normal form needs an irrational cube root")
    fr.apply([[1, 0, 0], [0, b, 0], [0, 0, e0 / (kappa * b)]])
    return fr.S, e0, None


def _norm_cuspidal(f3):
    (P,) = _singular_points(f3)
    fr = _Frame(f3)
    _to_point_frame(fr, P)
    g = fr.g
    A, B, C = g.coeff((2, 0, 1)), g.coeff((1, 1, 1)), g.coeff((0, 2, 1))
    # q = A y0^2 + B y0 y1 + C y1^2 = kappa * l^2 ; want z1 = l, z0 = other
    if A != 0:
        kappa, l = A, (Fraction(1), B / (2 * A))
        M = [[Fraction(0), Fraction(1)], [l[0], l[1]]]
    else:
        kappa, l = C, (Fraction(0), Fraction(1))
        M = [[Fraction(1), Fraction(0)], [l[0], l[1]]]
    Mi = linalg.inverse(M)
    fr.apply([[Mi[0][0], Mi[0][1], 0], [Mi[1][0], Mi[1][1], 0], [0, 0, 1]])
    e0, e1, _, _ = _binary_coeffs(fr.g)
    fr.apply([[1, -e1 / (3 * e0), 0], [0, 1, 0], [0, 0, 1]])
    _, _, e2, e3 = _binary_coeffs(fr.g)
    kappa = fr.g.coeff((0, 2, 1))
    fr.apply([[1, 0, 0], [0, 1, 0], [-e2 / kappa, -e3 / kappa, 1]])
    # kappa y2 z1^2 + e0 z0^3 = -e0 (-X0^3 + X1^2 X2) with y2 = -e0/kappa X2
    fr.apply([[1, 0, 0], [0, 1, 0], [0, 0, -e0 / kappa]])
    return fr.S, -e0, None


def _norm_conic_tangent(f3):
    (P,) = _singular_points(f3)
    fr = _Frame(f3)
    _to_point_frame(fr, P)
    g = fr.g
    A, B, C = g.coeff((2, 0, 1)), g.coeff((1, 1, 1)), g.coeff((0, 2, 1))
    if A != 0:
        M = [[Fraction(0), Fraction(1)], [Fraction(1), B / (2 * A)]]
    else:
        M = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    Mi = linalg.inverse(M)
    fr.apply([[Mi[0][0], Mi[0][1], 0], [Mi[1][0], Mi[1][1], 0], [0, 0, 1]])
    kappa = fr.g.coeff((0, 2, 1))
    _, e1, e2, e3 = _binary_coeffs(fr.g)
    fr.apply([[1, 0, 0], [0, 1, 0], [-e2 / kappa, -e3 / kappa, 1]])
    fr.apply([[1, 0, 0], [0, 1, 0], [0, 0, e1 / kappa]])
    return fr.S, e1, None


def _norm_three_lines(f3):
    (P,) = _singular_points(f3)
    fr = _Frame(f3)
    _to_point_frame(fr, P)
    a, b, c, d = _binary_coeffs(fr.g)
    split = _split_quadratic(b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)
    if split is None:
        raise _Unavailable("triple point: Hessian covariant does not split over Q")
    l1, l2 = split
    Mi = linalg.inverse([[l1[0], l1[1]], [l2[0], l2[1]]])
    fr.apply([[Mi[0][0], Mi[0][1], 0], [Mi[1][0], Mi[1][1], 0], [0, 0, 1]])
    alpha, _, _, beta = _binary_coeffs(fr.g)
    s = rational_cbrt(alpha / beta)
    if s is None:
        raise _Unavailable("three concurrent lines: normal form needs an irrational cube root")
    fr.apply([[1, 0, 0], [0, s, 0], [0, 0, 1]])
    return fr.S, alpha, None


def _norm_conic_chord(f3):
    P1, P2 = _singular_points(f3)
    fr = _Frame(f3)
    cols = _complete_basis([P2, P1])
    fr.apply(_cols_to_matrix([cols[2], cols[0], cols[1]]))
    g = fr.g
    g300, g210, g201, g111 = (g.coeff(m) for m in [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 1, 1)])
    fr.apply([[1, 0, 0], [-g201 / g111, 1, 0], [-g210 / g111, 0, 1]])
    e = g300 - g201 * g210 / g111
    fr.apply([[1, 0, 0], [0, e / g111, 0], [0, 0, 1]])
    return fr.S, e, None


def _norm_triangle(f3):
    P1, P2, P3 = _singular_points(f3)
    fr = _Frame(f3)
    fr.apply(_cols_to_matrix([P1, P2, P3]))
    return fr.S, fr.g.coeff((1, 1, 1)), None


def _linear_form_from_square(q: Poly):
    """For q = k*L^2, return the coefficient vector of L (up to scale)."""
    h = hessian_matrix(q)
    for row in h:
        vec = [e.coeff((0, 0, 0)) for e in row]
        if any(vec):
            return vec
    raise ValueError("not a nonzero square")


def _primitive(v):
    """Integer multiple of v with coprime entries, first nonzero entry positive."""
    den = math.lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = math.gcd(*ints)
    lead = next(x for x in ints if x)
    g = g if lead > 0 else -g
    return [Fraction(x, g) for x in ints]


def _norm_double_line(f3):
    minor = next(m for m in _hessian_minors(f3) if m)
    L = _primitive(_linear_form_from_square(minor))
    Lp = sum((v * c for v, c in zip(Poly.gens_of(), L)), Poly.zero())
    from .poly import exact_div

    Mp = exact_div(f3, Lp * Lp)
    M = [Mp.coeff(m) for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    rows = [M, L]
    for e in range(3):
        cand = [Fraction(int(i == e)) for i in range(3)]
        if linalg.rank(rows + [cand]) == 3:
            rows.append(cand)
            break
    S = linalg.inverse(rows)
    return S, Fraction(1), None


def _norm_triple_line(f3):
    h = hessian_matrix(f3)
    L = None
    for row in h:
        for e in row:
            if e:
                L = [e.coeff(m) for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
                break
        if L:
            break
    L = _primitive(L)
    free = [Fraction(int(i == e)) for e in range(3) for i in range(3)]
    basis = [free[3 * e:3 * e + 3] for e in range(3)]
    others = [b for b in basis if linalg.rank([L, b]) == 2]
    rows = [others[0], L]
    for b in others[1:]:
        if linalg.rank(rows + [b]) == 3:
            rows.append(b)
            break
    S = linalg.inverse(rows)
    c = linear_substitute(f3, S).coeff((0, 3, 0))
    return S, c, None


_NORMALIZERS = {
    CubicType.GENERAL: _norm_general,
    CubicType.NODAL: _norm_nodal,
    CubicType.CUSPIDAL: _norm_cuspidal,
    CubicType.CONIC_TANGENT: _norm_conic_tangent,
    CubicType.THREE_LINES: _norm_three_lines,
    CubicType.CONIC_CHORD: _norm_conic_chord,
    CubicType.TRIANGLE: _norm_triangle,
    CubicType.DOUBLE_LINE: _norm_double_line,
    CubicType.TRIPLE_LINE: _norm_triple_line,
}
