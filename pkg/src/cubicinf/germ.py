"""Local analysis of hypersurface germs: Milnor number, corank, ADE type.

The Milnor number is the dimension of Q[x]/(J + m^N) once it stops growing
in N.  If dim(N) = dim(N+1) then m^N lies in J + m^(N+1), hence in J locally,
so the plateau value is exact.  All dimensions up to a bound are read off a
single echelon form of the truncated Jacobian ideal: with pivots taken at the
lowest-degree monomial, truncating to degree < N keeps exactly the rows whose
pivot has degree < N.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import linalg
from .poly import (
    DOUBLE_SIMPLE, THREE_DISTINCT, TRIPLE, ZERO,
    Poly, binary_cubic_root_structure, grevlex_key, hessian_matrix,
)

N_MAX = 16


class NonIsolatedType:
    """Sentinel for a germ whose critical locus is positive dimensional."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NonIsolated"

    def __reduce__(self):
        return (NonIsolatedType, ())


NON_ISOLATED = NonIsolatedType()


@dataclass(frozen=True, order=True)
class LocalType:
    """A_k (k >= 0), D_k (k >= 4), E_6/7/8, NonIsolated or NonSimple.

    A_0 stands for a smooth point.
    """

    family: str
    index: int | None = None

    def __post_init__(self):
        f, k = self.family, self.index
        ok = ((f == "A" and k is not None and k >= 0)
              or (f == "D" and k is not None and k >= 4)
              or (f == "E" and k in (6, 7, 8))
              or (f in ("NonIsolated", "NonSimple") and k is None))
        if not ok:
            raise ValueError(f"invalid local type {f}{k}")

    @property
    def milnor(self):
        if self.family == "NonIsolated":
            return NON_ISOLATED
        if self.family == "NonSimple":
            return None
        return self.index

    @property
    def is_isolated(self) -> bool:
        return self.family != "NonIsolated"

    def __str__(self):
        if self.index is None:
            return self.family
        return f"{self.family}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "LocalType":
        text = text.strip()
        if text in ("NonIsolated", "inf", "∞"):
            return cls("NonIsolated")
        if text == "NonSimple":
            return cls("NonSimple")
        return cls(text[0], int(text[1:]))


def A(k):
    return LocalType("A", k)


def D(k):
    return LocalType("D", k)


def E(k):
    return LocalType("E", k)


NONISO = LocalType("NonIsolated")
NONSIMPLE = LocalType("NonSimple")


@dataclass(frozen=True)
class GermAnalysis:
    milnor: object
    corank: int
    residual_cubic: str | None
    recognized: LocalType


def translate(f: Poly, point) -> Poly:
    """f(x + point), so the germ at ``point`` sits at the origin."""
    if all(c == 0 for c in point):
        return f
    gens = f.gens
    images = [Poly.var(g, gens) + c for g, c in zip(gens, point)]
    return f.compose(images)


def _inv(c):
    return Fraction(1, c) if isinstance(c, int) else 1 / c


def truncated_dims(generators, nvars: int, bound: int):
    """dims[N] = dim Q[x]/(I + m^N) for N = 0..bound."""
    key = grevlex_key
    rows = []
    for g in generators:
        if not g:
            continue
        gt = g.truncate(bound)
        if not gt:
            continue
        o = gt.order()
        for d in range(0, bound - o):
            for mono in _monomials_of_degree(nvars, d):
                row = {}
                for m, c in gt.terms.items():
                    t = tuple(a + b for a, b in zip(m, mono))
                    if sum(t) < bound:
                        row[t] = c
                if row:
                    rows.append(row)
    # integer ranks in grevlex order make the pivot search a plain min()
    monos = sorted({t for r in rows for t in r}, key=key)
    rank = {m: i for i, m in enumerate(monos)}
    rows = [{rank[t]: c for t, c in r.items()} for r in rows]
    rows.sort(key=min)
    if all(isinstance(c, (int, Fraction)) for r in rows for c in r.values()):
        pivots = _echelon_integer(rows)
    else:
        pivots = _echelon_field(rows)
    per_degree = [0] * bound
    for i in pivots:
        per_degree[sum(monos[i])] += 1
    dims = [0]
    acc_monos = 0
    acc_piv = 0
    for n in range(1, bound + 1):
        acc_monos += comb(n - 1 + nvars - 1, nvars - 1)
        acc_piv += per_degree[n - 1]
        dims.append(acc_monos - acc_piv)
    return dims


def _echelon_field(rows):
    pivots = {}
    for row in rows:
        while row:
            m = min(row)
            p = pivots.get(m)
            if p is None:
                inv = _inv(row[m])
                pivots[m] = {t: c * inv for t, c in row.items()}
                break
            c = row[m]
            for t, v in p.items():
                nv = row.get(t, 0) - c * v
                if nv == 0:
                    row.pop(t, None)
                else:
                    row[t] = nv
    return pivots


def _echelon_integer(rows):
    """Fraction-free elimination over Z; only the pivot monomials matter."""
    pivots = {}
    for row in rows:
        den = 1
        for c in row.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        row = {t: int(c * den) for t, c in row.items()}
        while row:
            m = min(row)
            p = pivots.get(m)
            if p is None:
                g = 0
                for c in row.values():
                    g = gcd(g, c)
                pivots[m] = {t: c // g for t, c in row.items()}
                break
            a, b = p[m], row[m]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {t: a * c for t, c in row.items()}
            for t, v in p.items():
                nv = new.get(t, 0) - b * v
                if nv:
                    new[t] = nv
                else:
                    new.pop(t, None)
            g = 0
            for c in new.values():
                g = gcd(g, c)
                if g == 1:
                    break
            row = {t: c // g for t, c in new.items()} if g > 1 else new
    return pivots


_MONO_CACHE: dict = {}


def _monomials_of_degree(nvars, d):
    k = (nvars, d)
    if k not in _MONO_CACHE:
        if nvars == 1:
            out = [(d,)]
        else:
            out = [(i,) + rest for i in range(d, -1, -1) for rest in _monomials_of_degree(nvars - 1, d - i)]
        _MONO_CACHE[k] = out
    return _MONO_CACHE[k]


def milnor_from_dims(dims, n_max: int = N_MAX):
    for n in range(1, min(n_max, len(dims) - 2) + 1):
        if dims[n] == dims[n + 1]:
            return dims[n]
    return NON_ISOLATED


def local_milnor(f: Poly, point=None, nvars=None, n_max: int = N_MAX):
    """Milnor number of f at ``point`` (0 at non-critical points)."""
    if point is None:
        point = [0] * f.nvars
    g = translate(f, point)
    jac = [g.diff(v) for v in g.gens]
    nv = g.nvars
    # cheap passes first; simple germs plateau early
    for bound in sorted({min(b, n_max + 1) for b in (8, 11, 14, n_max + 1)}):
        dims = truncated_dims(jac, nv, bound)
        mu = milnor_from_dims(dims, min(n_max, bound - 1))
        if mu is not NON_ISOLATED:
            return mu
    return NON_ISOLATED


def milnor_growth(f: Poly, point=None, n_max: int = N_MAX):
    """The full list dim(N), N = 0..n_max+1, for witnessing non-stabilization."""
    if point is None:
        point = [0] * f.nvars
    g = translate(f, point)
    return truncated_dims([g.diff(v) for v in g.gens], g.nvars, n_max + 1)


def curve_local_milnor(g: Poly, point=None):
    """Milnor number of a plane curve germ (2 variables)."""
    if g.nvars != 2:
        raise ValueError("curve germs live in two variables")
    return local_milnor(g, point)


def _hessian_at_origin(g: Poly):
    zero = [0] * g.nvars
    return [[e.evaluate(zero) for e in row] for row in hessian_matrix(g)]


def corank_at(f: Poly, point=None) -> int:
    g = translate(f, point or [0] * f.nvars)
    return g.nvars - linalg.rank(_hessian_at_origin(g))


class PreconditionError(ValueError):
    pass


def residual_cubic(f: Poly, point=None) -> str:
    """Root structure of the cubic part restricted to the Hessian kernel."""
    g = translate(f, point or [0] * f.nvars)
    h = _hessian_at_origin(g)
    kernel = linalg.nullspace(h, g.nvars)
    if len(kernel) != 2:
        raise PreconditionError(f"residual cubic needs corank 2, got {len(kernel)}")
    uv = ("u", "v")
    u, v = Poly.var("u", uv), Poly.var("v", uv)
    images = [u * kernel[0][i] + v * kernel[1][i] for i in range(g.nvars)]
    return binary_cubic_root_structure(g.homogeneous_part(3).compose(images))


def ade_classify(f: Poly, point=None) -> GermAnalysis:
    point = point or [0] * f.nvars
    g = translate(f, point)
    mu = local_milnor(g)
    if mu == 0:
        return GermAnalysis(0, 0, None, A(0))
    cr = g.nvars - linalg.rank(_hessian_at_origin(g))
    if mu is NON_ISOLATED:
        res = residual_cubic(g) if cr == 2 else None
        return GermAnalysis(mu, cr, res, NONISO)
    if cr == 0:
        return GermAnalysis(mu, cr, None, A(1))
    if cr == 1:
        return GermAnalysis(mu, cr, None, A(mu))
    if cr == 2:
        res = residual_cubic(g)
        if res == THREE_DISTINCT:
            return GermAnalysis(mu, cr, res, D(4))
        if res == DOUBLE_SIMPLE:
            return GermAnalysis(mu, cr, res, D(mu))
        if res == TRIPLE and mu in (6, 7, 8):
            return GermAnalysis(mu, cr, res, E(mu))
        return GermAnalysis(mu, cr, res, NONSIMPLE)
    return GermAnalysis(mu, cr, None, NONSIMPLE)


QUASIHOMOGENEOUS = "Quasihomogeneous"
SEMI_QUASIHOMOGENEOUS = "SemiQuasihomogeneous"
NEITHER = "Neither"


def quasihomogeneous_check(f: Poly, weights, d: int) -> str:
    wts = {m: sum(w * e for w, e in zip(weights, m)) for m in f.terms}
    if wts and all(w == d for w in wts.values()):
        return QUASIHOMOGENEOUS
    if any(w < d for w in wts.values()):
        return NEITHER
    principal = Poly({m: c for m, c in f.terms.items() if wts[m] == d}, f.gens)
    if not principal:
        return NEITHER
    if local_milnor(principal) is NON_ISOLATED:
        return NEITHER
    return SEMI_QUASIHOMOGENEOUS


# normal forms of the simple singularities in three variables
def normal_form(t: LocalType, gens=("x", "y", "z")) -> Poly:
    x, y, z = Poly.gens_of(gens)
    k = t.index
    if t.family == "A":
        return x ** (k + 1) + y**2 + z**2
    if t.family == "D":
        return x ** (k - 1) + x * y**2 + z**2
    if t.family == "E":
        return {6: x**3 + y**4, 7: x**3 + x * y**3, 8: x**3 + y**5}[k] + z**2
    raise ValueError(f"no normal form for {t}")


__all__ = [
    "A", "D", "E", "LocalType", "GermAnalysis", "NON_ISOLATED", "NONISO", "NONSIMPLE",
    "local_milnor", "milnor_growth", "curve_local_milnor", "corank_at", "residual_cubic",
    "ade_classify", "quasihomogeneous_check", "normal_form", "ZERO", "TRIPLE",
]
