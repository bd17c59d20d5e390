"""Sparse multivariate polynomials with exact coefficients.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
coefficients, tied to an ordered tuple of variable names.  Coefficients are
``Fraction`` (or ``int``, normalized to ``Fraction``) or extension elements
from :mod:`cubicinf.fields`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .fields import Elem, to_rat

DEFAULT_GENS = ("x0", "x1", "x2")
HOM_GENS = ("x0", "x1", "x2", "x3")


class ContextError(ValueError):
    """Operands live in different variable contexts."""


class DegreeError(ValueError):
    pass


class ShapeError(ValueError):
    pass


def _norm_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


class Poly:
    __slots__ = ("terms", "gens", "_hash")

    def __init__(self, terms=None, gens: Sequence[str] = DEFAULT_GENS):
        self.gens = tuple(gens)
        n = len(self.gens)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ContextError(f"monomial {mono} does not fit {self.gens}")
            if c != 0:
                clean[mono] = _norm_coeff(c)
        self.terms = clean
        self._hash = None

    # --- construction ------------------------------------------------------
    @classmethod
    def const(cls, c, gens=DEFAULT_GENS) -> "Poly":
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def zero(cls, gens=DEFAULT_GENS) -> "Poly":
        return cls({}, gens)

    @classmethod
    def var(cls, name: str, gens=DEFAULT_GENS) -> "Poly":
        gens = tuple(gens)
        i = gens.index(name)
        mono = [0] * len(gens)
        mono[i] = 1
        return cls({tuple(mono): 1}, gens)

    @classmethod
    def gens_of(cls, gens=DEFAULT_GENS):
        return tuple(cls.var(g, gens) for g in gens)

    # --- basic queries -----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = self._index(var)
        return max((m[i] for m in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term; -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def coeff(self, mono) -> object:
        return self.terms.get(tuple(mono), Fraction(0))

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly({m: c for m, c in self.terms.items() if sum(m) == k}, self.gens)

    def truncate(self, n: int) -> "Poly":
        """Drop all terms of total degree >= n."""
        return Poly({m: c for m, c in self.terms.items() if sum(m) < n}, self.gens)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self):
        return tuple(g for i, g in enumerate(self.gens) if any(m[i] for m in self.terms))

    def _index(self, var) -> int:
        return var if isinstance(var, int) else self.gens.index(var)

    def coefficients(self):
        return list(self.terms.values())

    # --- arithmetic --------------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.gens != self.gens:
                raise ContextError(f"{self.gens} vs {other.gens}")
            return other
        if isinstance(other, (int, Fraction, Elem)):
            return Poly.const(other, self.gens)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Elem)):
            return Poly({m: c * other for m, c in self.terms.items()}, self.gens)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out, self.gens)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Elem)):
            inv = Fraction(1, other) if isinstance(other, int) else 1 / other
            return self * inv
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.gens)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Elem)):
            other = Poly.const(other, self.gens)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    def scale_monic(self, key) -> "Poly":
        """Divide by the coefficient of the leading monomial under ``key``."""
        if not self.terms:
            return self
        lead = max(self.terms, key=key)
        return self / self.terms[lead]

    # --- calculus and substitution -----------------------------------------
    def diff(self, var) -> "Poly":
        i = self._index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Poly(out, self.gens)

    def evaluate(self, point):
        """Evaluate at a full point (sequence aligned with gens)."""
        acc = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term = term * x**e
            acc = acc + term
        return acc

    def subs(self, mapping) -> "Poly":
        """Substitute variables (by name or index) by polynomials or scalars.

        Images must share one target context; unmapped variables are kept
        and must exist in that context.
        """
        idx = {self._index(k): v for k, v in mapping.items()}
        target = None
        for v in idx.values():
            if isinstance(v, Poly):
                target = v.gens if target is None else target
                if v.gens != target:
                    raise ContextError("substitution images in different contexts")
        if target is None:
            target = self.gens
        images = []
        for i, g in enumerate(self.gens):
            if i in idx:
                v = idx[i]
                images.append(v if isinstance(v, Poly) else Poly.const(v, target))
            else:
                images.append(Poly.var(g, target))
        return self.compose(images)

    def compose(self, images: Sequence["Poly"]) -> "Poly":
        """Replace the i-th variable by images[i]; result lives in images' context."""
        target = images[0].gens
        powers = [{0: Poly.const(1, target)} for _ in images]

        def pw(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = pw(i, e - 1) * images[i]
            return cache[e]

        acc = {}
        for m, c in self.terms.items():
            term = Poly.const(c, target)
            for i, e in enumerate(m):
                if e:
                    term = term * pw(i, e)
            for mm, cc in term.terms.items():
                acc[mm] = acc.get(mm, 0) + cc
        return Poly(acc, target)

    def to_gens(self, gens: Sequence[str], rename=None) -> "Poly":
        """Re-embed into another context (variables matched by name).

        ``rename`` maps old names to new names first.
        """
        rename = rename or {}
        gens = tuple(gens)
        pos = []
        for i, g in enumerate(self.gens):
            name = rename.get(g, g)
            if name in gens:
                pos.append(gens.index(name))
            else:
                if any(m[i] for m in self.terms):
                    raise ContextError(f"variable {g} has no place in {gens}")
                pos.append(None)
        out = {}
        for m, c in self.terms.items():
            mm = [0] * len(gens)
            for i, e in enumerate(m):
                if e:
                    mm[pos[i]] += e
            out[tuple(mm)] = out.get(tuple(mm), 0) + c
        return Poly(out, gens)

    def map_coeffs(self, fn) -> "Poly":
        return Poly({m: fn(c) for m, c in self.terms.items()}, self.gens)

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) or (isinstance(c, Elem) and c.is_rational())
                   for c in self.terms.values())

    # --- display -------------------------------------------------------------
    def sorted_terms(self):
        """Terms in canonical order: descending graded reverse lexicographic."""
        return sorted(self.terms.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = "*".join(g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, m) if e)
            if isinstance(c, Fraction):
                neg = c < 0
                a = -c if neg else c
                if mono and a == 1:
                    body = mono
                elif mono:
                    body = f"{format_coeff(a)}*{mono}"
                else:
                    body = format_coeff(a)
            else:
                neg = False
                body = f"{c}*{mono}" if mono else str(c)
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self}, gens={self.gens})"


def grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


# --- affine maps ----------------------------------------------------------------

class InvalidMapError(ValueError):
    pass


@dataclass(frozen=True)
class AffineMap:
    """T(x) = A x + b on C^3 together with L(s) = scale*s + shift on C.

    ``substitute_affine(p, m)`` computes L(p(T^{-1}(x))).
    """

    linear: tuple
    translation: tuple = (Fraction(0), Fraction(0), Fraction(0))
    scale: Fraction = Fraction(1)
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        lin = tuple(tuple(to_rat(x) for x in row) for row in self.linear)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", tuple(to_rat(x) for x in self.translation))
        object.__setattr__(self, "scale", to_rat(self.scale))
        object.__setattr__(self, "shift", to_rat(self.shift))
        if len(lin) != 3 or any(len(r) != 3 for r in lin):
            raise InvalidMapError("linear part must be 3x3")
        if linalg.det(lin) == 0:
            raise InvalidMapError("linear part is singular")
        if self.scale == 0:
            raise InvalidMapError("codomain scaling must be nonzero")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(linalg.identity(3))

    @classmethod
    def from_inverse(cls, inv_linear, inv_translation=(0, 0, 0), scale=1, shift=0) -> "AffineMap":
        """Build the map whose inverse is x -> inv_linear x + inv_translation."""
        a = linalg.inverse([[to_rat(x) for x in r] for r in inv_linear])
        b = [-x for x in linalg.matvec(a, [to_rat(x) for x in inv_translation])]
        return cls(a, b, scale, shift)

    def compose(self, first: "AffineMap") -> "AffineMap":
        """self after first."""
        a = linalg.matmul(self.linear, first.linear)
        b = [x + y for x, y in zip(linalg.matvec(self.linear, first.translation), self.translation)]
        return AffineMap(a, b, self.scale * first.scale, self.scale * first.shift + self.shift)

    def inverse_linear(self):
        return linalg.inverse(self.linear)

    def apply_point(self, x):
        return [v + b for v, b in zip(linalg.matvec(self.linear, x), self.translation)]

    def t_to_reduced(self, t):
        return self.scale * t + self.shift

    def t_from_reduced(self, s):
        return (s - self.shift) / self.scale

    def to_json(self):
        return {
            "linear": [[format_coeff(x) for x in r] for r in self.linear],
            "translation": [format_coeff(x) for x in self.translation],
            "scale": format_coeff(self.scale),
            "shift": format_coeff(self.shift),
        }


def substitute_affine(p: Poly, m: AffineMap, names=DEFAULT_GENS) -> Poly:
    """Return L(p(T^{-1} x)); the map acts on the variables ``names`` of p."""
    ainv = m.inverse_linear()
    binv = [-x for x in linalg.matvec(ainv, m.translation)]
    xs = [Poly.var(n, p.gens) for n in names]
    images = {}
    for i, n in enumerate(names):
        img = Poly.const(binv[i], p.gens)
        for j in range(3):
            if ainv[i][j] != 0:
                img = img + xs[j] * ainv[i][j]
        images[n] = img
    return p.subs(images) * m.scale + m.shift


def linear_substitute(p: Poly, matrix, names=DEFAULT_GENS) -> Poly:
    """Return p(M x) for a 3x3 matrix M acting on ``names``."""
    xs = [Poly.var(n, p.gens) for n in names]
    images = {}
    for i, n in enumerate(names):
        img = Poly.zero(p.gens)
        for j in range(3):
            if matrix[i][j] != 0:
                img = img + xs[j] * matrix[i][j]
        images[n] = img
    return p.subs(images)


# --- homogenization, gradient, Hessian -----------------------------------------

def homogenize(f: Poly, d: int, hvar: str = "x3") -> Poly:
    """Pad every term with powers of ``hvar`` up to degree d."""
    if f.degree() > d:
        raise DegreeError(f"degree {f.degree()} exceeds {d}")
    if hvar in f.gens:
        if f.degree_in(hvar) > 0:
            raise ContextError(f"{hvar} already occurs in f")
        gens = f.gens
    else:
        gens = f.gens + (hvar,)
    g = f.to_gens(gens)
    h = gens.index(hvar)
    out = {}
    for m, c in g.terms.items():
        mm = list(m)
        mm[h] = d - sum(m)
        out[tuple(mm)] = c
    return Poly(out, gens)


def dehomogenize(F: Poly, hvar: str = "x3", gens=None) -> Poly:
    g = F.subs({hvar: 1})
    if gens is None:
        gens = tuple(x for x in F.gens if x != hvar)
    return g.to_gens(gens)


def gradient(p: Poly, names=None):
    names = p.gens if names is None else names
    return [p.diff(n) for n in names]


def hessian_matrix(p: Poly, names=None):
    names = p.gens if names is None else names
    first = [p.diff(n) for n in names]
    return [[d.diff(n) for n in names] for d in first]


def hessian_rank_at(p: Poly, point, names=None) -> int:
    """Rank of the matrix of second partials evaluated at ``point``."""
    names = p.gens if names is None else names
    full = list(point)
    if len(full) != p.nvars:
        raise ShapeError("point must give every variable of p")
    h = [[e.evaluate(full) for e in row] for row in hessian_matrix(p, names)]
    return linalg.rank(h)


# --- binary and univariate cubics --------------------------------------------------

def univariate_coeffs(q: Poly, var) -> list:
    """Coefficients (low to high) of q as a polynomial in one variable."""
    i = q._index(var)
    if any(e for m in q.terms for j, e in enumerate(m) if j != i):
        raise ShapeError("not univariate")
    deg = q.degree_in(i)
    out = [Fraction(0)] * (deg + 1)
    for m, c in q.terms.items():
        out[m[i]] = c
    return out


def cubic_discriminant(q: Poly, var=None):
    """Discriminant of a univariate cubic a s^3 + b s^2 + c s + d.

    Coefficients may themselves be polynomials in other variables: ``var``
    selects the main variable and the result is a Poly in the remaining ones.
    """
    if var is None:
        vs = q.variables()
        if len(vs) != 1:
            raise ShapeError("choose the main variable of a multivariate cubic")
        var = vs[0]
    i = q._index(var)
    if q.degree_in(i) != 3:
        raise DegreeError("cubic_discriminant needs degree exactly 3")
    coeffs = [Poly.zero(q.gens) for _ in range(4)]
    for m, c in q.terms.items():
        mm = list(m)
        k = mm[i]
        mm[i] = 0
        coeffs[k] = coeffs[k] + Poly({tuple(mm): c}, q.gens)
    d, c, b, a = coeffs
    disc = (b * b * c * c - a * c**3 * 4 - b**3 * d * 4 - a * a * d * d * 27 + a * b * c * d * 18)
    if disc.degree() <= 0:
        return disc.coeff((0,) * q.nvars)
    return disc


THREE_DISTINCT = "ThreeDistinct"
DOUBLE_SIMPLE = "DoubleSimple"
TRIPLE = "Triple"
ZERO = "Zero"


def binary_cubic_coeffs(q: Poly):
    """(a, b, c, d) with q = a u^3 + b u^2 v + c u v^2 + d v^3 in q's two variables."""
    if q.nvars != 2:
        raise ShapeError("binary cubic must live in exactly two variables")
    if q.terms and (not q.is_homogeneous() or q.degree() != 3):
        raise ShapeError("binary cubic must be homogeneous of degree 3")
    return tuple(q.coeff((3 - k, k)) for k in range(4))


def binary_cubic_root_structure(q: Poly) -> str:
    """Root multiplicity pattern of a binary cubic over the algebraic closure.

    Uses the discriminant and the Hessian covariant (which vanishes exactly
    for perfect cubes); no root finding.
    """
    a, b, c, d = binary_cubic_coeffs(q)
    if a == 0 and b == 0 and c == 0 and d == 0:
        return ZERO
    disc = b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d
    if disc != 0:
        return THREE_DISTINCT
    h = (b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)
    if all(x == 0 for x in h):
        return TRIPLE
    return DOUBLE_SIMPLE


def exact_div(p: Poly, q: Poly) -> Poly:
    """Exact quotient p / q; raises ValueError when q does not divide p."""
    from .groebner import GREVLEX

    quo, rem = divide(p, [q], GREVLEX)
    if rem:
        raise ValueError("division is not exact")
    return quo[0]


def divide(p: Poly, divisors, order):
    """Multivariate division with remainder; returns (quotients, remainder)."""
    from .groebner import mono_divides, leading

    quos = [dict() for _ in divisors]
    rem = {}
    work = dict(p.terms)
    leads = [leading(g, order) for g in divisors]
    while work:
        m = max(work, key=order.key)
        c = work[m]
        for k, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                f = c / lc
                quos[k][shift] = quos[k].get(shift, 0) + f
                for mm, cc in divisors[k].terms.items():
                    t = tuple(a + b for a, b in zip(mm, shift))
                    v = work.get(t, 0) - f * cc
                    if v == 0:
                        work.pop(t, None)
                    else:
                        work[t] = v
                break
        else:
            rem[m] = c
            del work[m]
    return [Poly(qd, p.gens) for qd in quos], Poly(rem, p.gens)
