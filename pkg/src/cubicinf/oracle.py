"""Germ analysis of the compactified fibres f = t at the hyperplane at infinity.

Nothing here consults the classification tables: points come from solving
grad f3 = 0 (and f2 = 0) directly, types from :func:`germ.ade_classify`.
"""
from __future__ import annotations

from fractions import Fraction

from .cubic import ProjPoint, classify_cubic, projective_points
from .germ import GermAnalysis, ade_classify
from .poly import DEFAULT_GENS, HOM_GENS, Poly, homogenize


def split_degrees(f: Poly):
    """(f0, f1, f2, f3) homogeneous parts."""
    return tuple(f.homogeneous_part(k) for k in range(4))


def fiber_closure(f: Poly, t) -> Poly:
    """Homogenization of f - t in x0..x3."""
    return homogenize(f - t, 3, "x3")


def boundary_points(f: Poly):
    """Points of H^inf relevant to the fibres: singular points of {f3 = 0}
    for reduced f3, or the singular points of the closures (grad f3 = f2 = 0)
    when f3 has a multiple component."""
    f3 = f.homogeneous_part(3)
    f2 = f.homogeneous_part(2)
    grad = [f3.diff(v) for v in DEFAULT_GENS]
    ct = classify_cubic(f3)
    if ct.reduced:
        _, pts = projective_points(grad)
    else:
        _, pts = projective_points(grad + [f2])
    return pts


def closure_singular_points(f: Poly):
    """Singular points of the fibre closures on H^inf (independent of t)."""
    f3 = f.homogeneous_part(3)
    f2 = f.homogeneous_part(2)
    grad = [f3.diff(v) for v in DEFAULT_GENS]
    _, pts = projective_points(grad + [f2])
    return pts


def germ_at_infinity(f: Poly, pt: ProjPoint, t) -> GermAnalysis:
    """Classify the germ of the closure of {f = t} at a point of H^inf."""
    F = fiber_closure(f, t)
    k = max(i for i, c in enumerate(pt.coords) if c != 0)
    rest = tuple(g for i, g in enumerate(HOM_GENS) if i != k)
    g = F.subs({HOM_GENS[k]: 1}).to_gens(rest)
    coords = list(pt.coords) + [Fraction(0)]
    loc = [c / coords[k] for i, c in enumerate(coords) if i != k]
    if pt.field is not None:
        g = g.map_coeffs(pt.field)
        loc = [pt.field(c) for c in loc]
    elif hasattr(t, "field"):
        loc = [t.field(c) for c in loc]
    return ade_classify(g, loc)


def types_at_infinity(f: Poly, t, points=None):
    points = boundary_points(f) if points is None else points
    return [(p, germ_at_infinity(f, p, t).recognized) for p in points]
