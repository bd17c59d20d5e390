"""Coefficient reduction per cubic type and the encoded decision tables.

Pipeline: classify the cubic part, move it onto its normal form, kill the
designated quadratic monomials by a translation (plus the root placement on
the singular line for the non-reduced types), permute symmetric coordinates
into the tabulated cone, then evaluate the rows of ``data/tables.txt``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import permutations

from . import linalg
from .cubic import (
    NORMAL_FORMS, CubicType, ProjPoint, UnsupportedExtension, chi_infinity, classify_cubic,
    factor_rational, normalizing_map, point_curve_milnor,
)
from .fields import NumberField, rational_sqrt, uadd, umonic, umul, usquarefree, utrim
from .germ import NONISO, NONSIMPLE, LocalType
from .parser import parse_poly
from .poly import DEFAULT_GENS, AffineMap, Poly, ShapeError, substitute_affine

MONOMIALS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (1, 1, 0), (1, 0, 1),
             (0, 2, 0), (0, 1, 1), (0, 0, 2))
A_NAMES = tuple(f"a{i}" for i in range(9))
COND_GENS = ("t",) + A_NAMES

TABLE_OF = {
    CubicType.NODAL: 1, CubicType.CUSPIDAL: 2, CubicType.CONIC_TANGENT: 3,
    CubicType.THREE_LINES: 4, CubicType.CONIC_CHORD: 5, CubicType.TRIANGLE: 6,
    CubicType.DOUBLE_LINE: 7, CubicType.TRIPLE_LINE: 8,
}
TYPE_OF_TABLE = {v: k for k, v in TABLE_OF.items()}

DESIGNATED = {
    CubicType.NODAL: (3, 4, 6),
    CubicType.CUSPIDAL: (3, 6, 7),
    CubicType.CONIC_TANGENT: (3, 4, 6),
    CubicType.THREE_LINES: (3, 6),
    CubicType.CONIC_CHORD: (4, 5, 7),
    CubicType.TRIANGLE: (4, 5, 7),
    CubicType.DOUBLE_LINE: (4, 6),
    CubicType.TRIPLE_LINE: (6,),
}

# tables whose printed rows leave combinations out; those go to the oracle
ORACLE_FALLBACK_TABLES = (5, 6)

_Q, _R, _S = ((Fraction(0), Fraction(0), Fraction(1)), (Fraction(0), Fraction(1), Fraction(0)),
              (Fraction(1), Fraction(0), Fraction(0)))


def _perm_matrix(p):
    return [[Fraction(int(p[i] == j)) for j in range(3)] for i in range(3)]


_SYMMETRIES = {
    CubicType.NODAL: [(0, 1, 2), (1, 0, 2)],
    CubicType.THREE_LINES: [(0, 1, 2), (1, 0, 2)],
    CubicType.CONIC_CHORD: [(0, 1, 2), (0, 2, 1)],
    CubicType.TRIANGLE: list(permutations(range(3))),
}


class NotBType(ValueError):
    """f2 vanishes on the singular line of f3: not of type B."""


class IncompleteTable(RuntimeError):
    """No table row matches; carries the reduced coefficient vector."""

    def __init__(self, table: int, coeffs):
        self.table = table
        self.coeffs = dict(coeffs)
        shown = ", ".join(f"{k}={v}" for k, v in self.coeffs.items() if v)
        super().__init__(f"no row of table {table} matches ({shown or 'all zero'})")


class TableInconsistency(RuntimeError):
    pass


# --- table data -------------------------------------------------------------------

@dataclass(frozen=True)
class PointSpec:
    name: str
    generic: LocalType
    special: LocalType | None = None

    def __str__(self):
        s = f"{self.name}={_type_text(self.generic)}"
        return s if self.special is None else s + ">" + _type_text(self.special)


def _type_text(t: LocalType) -> str:
    return "inf" if t == NONISO else str(t)


def _parse_type(text: str) -> LocalType:
    return LocalType.parse(text)


def _int_or_none(text: str):
    text = text.strip()
    return None if text == "-" else int(text)


@dataclass(frozen=True)
class TableRow:
    table: int
    label: str
    zero_text: tuple
    nonzero_text: tuple
    points: tuple
    printed_lambda: int | None
    printed_mu: int | None
    printed_b2: int | None
    t_locus_text: str | None
    representative: tuple
    status: str
    note: str
    line: str

    @property
    def key(self) -> str:
        return f"{self.table}:{self.label}"

    @property
    def cubic_type(self) -> CubicType:
        return TYPE_OF_TABLE[self.table]

    @property
    def non_isolated(self) -> bool:
        return any(p.generic in (NONISO, NONSIMPLE) or p.special == NONISO for p in self.points)

    @property
    def zero_conditions(self):
        return _conds(self.zero_text)

    @property
    def nonzero_conditions(self):
        return _conds(self.nonzero_text)

    @property
    def t_locus(self) -> Poly | None:
        return None if self.t_locus_text is None else _cond(self.t_locus_text)

    def matches(self, coeffs) -> bool:
        vals = _cond_point(coeffs)
        return (all(c.evaluate(vals) == 0 for c in self.zero_conditions)
                and all(c.evaluate(vals) != 0 for c in self.nonzero_conditions))

    def representative_coeffs(self) -> dict:
        out = {n: Fraction(0) for n in A_NAMES}
        out.update(dict(self.representative))
        return out

    @property
    def representative_text(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.representative)

    def representative_poly(self) -> Poly:
        return build_polynomial(self.cubic_type, self.representative_coeffs())


@lru_cache(maxsize=None)
def _cond(text: str) -> Poly:
    return parse_poly(text, COND_GENS, max_degree=None)


def _conds(texts):
    return [_cond(t) for t in texts]


def _cond_point(coeffs):
    return [Fraction(0)] + [Fraction(coeffs.get(n, 0)) for n in A_NAMES]


def _split_list(text: str):
    text = text.strip()
    if text == "-" or not text:
        return ()
    return tuple(s.strip() for s in text.split(";") if s.strip())


def parse_row(line: str) -> TableRow:
    fields_ = [s.strip() for s in line.split("|")]
    if len(fields_) != 12:
        raise ValueError(f"table record needs 12 fields: {line!r}")
    tid, label, zc, nzc, pts, lam, mu, b2, locus, rep, status, note = fields_
    points = []
    for item in pts.split():
        name, types = item.split("=")
        if ">" in types:
            g, s = types.split(">")
            points.append(PointSpec(name, _parse_type(g), _parse_type(s)))
        else:
            points.append(PointSpec(name, _parse_type(types)))
    reps = []
    for item in rep.split(","):
        k, v = item.split("=")
        reps.append((k.strip(), Fraction(v.strip())))
    return TableRow(
        int(tid), label, _split_list(zc), _split_list(nzc), tuple(points),
        _int_or_none(lam), _int_or_none(mu), _int_or_none(b2),
        None if locus == "-" else locus, tuple(reps), status, "" if note == "-" else note,
        line.rstrip("\n"),
    )


def table_text() -> str:
    """The embedded table data file, verbatim."""
    return resources.files("cubicinf").joinpath("data/tables.txt").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_tables():
    rows = []
    for line in table_text().splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(parse_row(line))
    return tuple(rows)


def rows_of(table: int):
    return [r for r in load_tables() if r.table == table]


# --- reduction ----------------------------------------------------------------------

@dataclass(frozen=True)
class ReducedForm:
    f_reduced: Poly
    coeffs: dict
    applied: AffineMap
    cubic_type: CubicType


def coefficient_vector(f: Poly) -> dict:
    return {n: Fraction(f.coeff(m)) for n, m in zip(A_NAMES, MONOMIALS)}


def build_polynomial(ct: CubicType, coeffs) -> Poly:
    """Normal form of ``ct`` plus the quadratic and linear part given by a0..a8."""
    f = NORMAL_FORMS[CubicType(ct)]
    terms = dict(f.terms)
    for n, m in zip(A_NAMES, MONOMIALS):
        c = Fraction(coeffs.get(n, 0))
        if c:
            terms[m] = terms.get(m, 0) + c
    return Poly(terms, DEFAULT_GENS)


def _particular_solution(a, b):
    """Some exact solution of a x = b (free variables set to 0)."""
    n = len(a[0])
    red, pivots = linalg.row_echelon([list(r) + [v] for r, v in zip(a, b)])
    if n in pivots:
        raise TableInconsistency("designated monomials cannot be eliminated")
    x = [Fraction(0)] * n
    for row, col in zip(red, pivots):
        x[col] = row[n] / row[col]
    return x


def _apply(g: Poly, applied: AffineMap, m: AffineMap):
    return substitute_affine(g, m), m.compose(applied)


def _kill_designated(g: Poly, ct: CubicType, applied: AffineMap):
    n3 = NORMAL_FORMS[ct]
    grads = [n3.diff(v) for v in DEFAULT_GENS]
    idx = DESIGNATED[ct]
    a = [[grads[j].coeff(MONOMIALS[i]) for j in range(3)] for i in idx]
    b = [-g.coeff(MONOMIALS[i]) for i in idx]
    h = _particular_solution(a, b)
    m = AffineMap.from_inverse(linalg.identity(3), h)
    c0 = substitute_affine(g, m).coeff((0, 0, 0))
    m = AffineMap.from_inverse(linalg.identity(3), h, 1, -c0)
    return _apply(g, applied, m)


def _line_roots(g: Poly):
    """(a3, a5, a8) of f2(x0, 0, x2)."""
    return g.coeff((2, 0, 0)), g.coeff((1, 0, 1)), g.coeff((0, 0, 2))


def _root_adjustment(ct: CubicType, g: Poly):
    """Linear substitution placing the roots of f2(x0,0,x2); None if not needed."""
    a3, a5, a8 = _line_roots(g)
    if a3 == 0 and a5 == 0 and a8 == 0:
        raise NotBType("f2 vanishes identically on the singular line of f3")
    gamma = a5 * a5 - 4 * a3 * a8
    one, zero = Fraction(1), Fraction(0)
    if ct == CubicType.DOUBLE_LINE:
        # only x2 -> beta*x0 + x2 is allowed; (0:0:1) lies on the simple line
        if a8 != 0:
            if gamma == 0:
                beta = -a5 / (2 * a8)
            else:
                r = rational_sqrt(gamma)
                if r is None:
                    return None
                beta = (-a5 + r) / (2 * a8)
        elif a5 != 0:
            beta = -a3 / a5
        else:
            return None
        if beta == 0:
            return None
        return [[one, zero, zero], [zero, one, zero], [beta, zero, one]]
    # triple line: any change of (x0, x2)
    if gamma == 0:
        if a3 == 0 and a5 == 0:
            return None
        if a8 == 0:
            p = (zero, one)
        else:
            p = (one, -a5 / (2 * a8))
        e = (zero, one) if p[0] != 0 else (one, zero)
        cols = (p, e)
    else:
        if a3 == 0 and a8 == 0:
            return None
        r = rational_sqrt(gamma)
        if r is None:
            return None
        if a8 != 0:
            p1 = (one, (-a5 + r) / (2 * a8))
            p2 = (one, (-a5 - r) / (2 * a8))
            if a3 == 0:
                p1, p2 = (one, zero), (zero, one)
        else:
            p1 = (one, -a3 / a5) if a5 != 0 else (one, zero)
            p2 = (zero, one)
        cols = (p1, p2)
    (u1, v1), (u2, v2) = cols
    return [[u1, zero, u2], [zero, one, zero], [v1, zero, v2]]


def reduce_coefficients(f: Poly, ct: CubicType, nm: AffineMap) -> ReducedForm:
    """Translate (and for the line types re-coordinatize) so the designated
    quadratic monomials vanish."""
    ct = CubicType(ct)
    g = substitute_affine(f, nm)
    if g.homogeneous_part(3) != NORMAL_FORMS[ct]:
        raise ValueError("normalizing map does not produce the normal form")
    applied = nm
    if not ct.reduced:
        M = _root_adjustment(ct, g)
        if M is not None:
            g, applied = _apply(g, applied, AffineMap.from_inverse(M))
    g, applied = _kill_designated(g, ct, applied)
    if ct == CubicType.DOUBLE_LINE and g.coeff((0, 0, 2)) != 0 and g.coeff((0, 1, 1)) != 0:
        # x2 -> x2 + c*x1 keeps x0*x1^2 and the line x1 = 0; it clears a7 when a8 != 0
        c = -g.coeff((0, 1, 1)) / (2 * g.coeff((0, 0, 2)))
        one, zero = Fraction(1), Fraction(0)
        M = [[one, zero, zero], [zero, one, zero], [zero, c, one]]
        g, applied = _apply(g, applied, AffineMap.from_inverse(M))
        g, applied = _kill_designated(g, ct, applied)
    if not ct.reduced:
        a3, a5, a8 = _line_roots(g)
        if a3 == 0 and a5 == 0 and a8 == 0:  # pragma: no cover - invariant under the moves
            raise NotBType("f2 vanishes identically on the singular line of f3")
    return ReducedForm(g, coefficient_vector(g), applied, ct)


def _permuted(rf: ReducedForm, perm) -> ReducedForm:
    P = _perm_matrix(perm)
    m = AffineMap.from_inverse(P)
    g = substitute_affine(rf.f_reduced, m)
    return ReducedForm(g, coefficient_vector(g), m.compose(rf.applied), rf.cubic_type)


# --- points at infinity ----------------------------------------------------------------

def _pp(coords, fld=None) -> ProjPoint:
    k = max(i for i, c in enumerate(coords) if c != 0)
    inv = 1 / (Fraction(coords[k]) if isinstance(coords[k], int) else coords[k])
    return ProjPoint(tuple(c * inv for c in coords), fld)


def infinity_points(rf: ReducedForm):
    """Named candidate points of H^inf in reduced coordinates.

    Reduced types: the singular points of the curve f3 = 0 (the closure may be
    smooth there; the tables then say A0).  Line types: the zeros of
    f2(x0, 0, x2).
    """
    ct = rf.cubic_type
    c = rf.coeffs
    one, zero = Fraction(1), Fraction(0)
    if ct in (CubicType.NODAL, CubicType.CUSPIDAL, CubicType.CONIC_TANGENT, CubicType.THREE_LINES):
        return [("Q", _pp(_Q))]
    if ct == CubicType.CONIC_CHORD:
        return [("Q", _pp(_Q)), ("R", _pp(_R))]
    if ct == CubicType.TRIANGLE:
        return [("Q", _pp(_Q)), ("R", _pp(_R)), ("S", _pp(_S))]
    if ct == CubicType.GENERAL:
        return []
    a3, a5, a8 = c["a3"], c["a5"], c["a8"]
    gamma = a5 * a5 - 4 * a3 * a8
    if a3 == 0 and a5 == 0 and a8 == 0:
        raise NotBType("f2 vanishes identically on the singular line of f3")
    if gamma == 0:
        if a8 != 0:
            return [("Q", _pp((one, zero, -a5 / (2 * a8))))]
        return [("R", _pp((zero, zero, one)))]
    if a3 == 0:
        if a8 == 0:
            return [("Q", _pp((one, zero, zero))), ("R", _pp((zero, zero, one)))]
        return [("Q", _pp((one, zero, zero))), ("R", _pp((-a8, zero, a5)))]
    r = rational_sqrt(gamma)
    if r is not None:
        if a8 == 0:
            return [("Q", _pp((a5, zero, -a3))), ("R", _pp((zero, zero, one)))]
        return [("Q", _pp((one, zero, (-a5 + r) / (2 * a8)))),
                ("R", _pp((one, zero, (-a5 - r) / (2 * a8))))]
    # conjugate pair over Q(sqrt(gamma)); a8 != 0 here
    K = NumberField([-gamma, Fraction(0), Fraction(1)])
    s = K.gen
    v1 = (s - a5) * (1 / (2 * a8))
    v2 = (-s - a5) * (1 / (2 * a8))
    return [("Q", _pp((K(1), K(0), v1), K)), ("R", _pp((K(1), K(0), v2), K))]


# --- verdicts ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JumpEvent:
    """Milnor number of ``point`` rises by ``jump`` on each of the fibres
    t = root of ``t_locus`` (``fibres`` of them).  ``jump`` is None when the
    special germ is non-isolated."""

    point_name: str
    point: ProjPoint
    t_locus: tuple
    generic_type: LocalType
    special_type: LocalType
    jump: int | None

    @property
    def fibres(self) -> int:
        return len(self.t_locus) - 1

    @property
    def total(self):
        return None if self.jump is None else self.jump * self.fibres


F_CLASS, B_CLASS, NOT_B = "F", "BminusF", "NotB"


@dataclass
class Verdict:
    cubic_type: CubicType
    class_tag: str
    points: list
    events: list
    lambda_total: int | None
    mu_table: int | None
    b2_table: int | None
    non_isolated: bool
    row: TableRow | None = None
    source: str = "table"
    reduced: ReducedForm | None = None
    findings: list = field(default_factory=list)

    @property
    def generic_types(self):
        return sorted(str(t) for _, _, t in self.points)

    @property
    def event_signature(self):
        return sorted((e.jump, str(e.special_type), e.fibres) for e in self.events)

    def signature(self):
        """Coordinate-free summary used for invariance checks."""
        return (self.class_tag, str(self.cubic_type), tuple(self.generic_types),
                tuple(self.event_signature), self.lambda_total, self.mu_table, self.b2_table)


def _t_poly(locus: Poly, coeffs) -> tuple:
    vals = _cond_point(coeffs)
    sub = locus.subs({n: vals[i + 1] for i, n in enumerate(A_NAMES)})
    ts = [Fraction(0)] * (sub.degree() + 1 if sub else 1)
    for m, c in sub.terms.items():
        ts[m[0]] += c
    if not any(ts[1:]):
        raise TableInconsistency(f"t_locus {locus} is constant at {coeffs}")
    return tuple(umonic(usquarefree(ts)))


@lru_cache(maxsize=None)
def _curve_milnor(ct: CubicType, coords) -> int:
    return point_curve_milnor(NORMAL_FORMS[ct], ProjPoint(coords))


def mu_at_infinity(ct: CubicType, pt: ProjPoint) -> int:
    """Milnor number of the curve f3 = 0 at pt (reduced types)."""
    if pt.field is not None:
        raise ValueError("reduced types have rational standard points")
    return _curve_milnor(ct, tuple(pt.coords))


def eq_b2(ct: CubicType, points) -> int:
    """b2 from the generic types: the F formula for reduced f3, the B formula otherwise."""
    mus = [t.milnor for _, _, t in points]
    if ct.reduced:
        return 8 - sum(m + mu_at_infinity(ct, p) for (_, p, _), m in zip(points, mus))
    return 8 - sum(mus) - chi_infinity(ct)


def smooth_verdict(ct: CubicType = CubicType.GENERAL) -> Verdict:
    return Verdict(ct, F_CLASS, [], [], 0, 8, 8, False, source="smooth")


def _class_tag(ct: CubicType) -> str:
    return F_CLASS if ct.reduced else B_CLASS


def _verdict_from_row(rf: ReducedForm, row: TableRow) -> Verdict:
    ct = rf.cubic_type
    named = dict(infinity_points(rf))
    if set(named) != {p.name for p in row.points}:
        raise TableInconsistency(
            f"row {row.key} names points {[p.name for p in row.points]}, found {sorted(named)}")
    points, events = [], []
    locus = None
    if row.t_locus is not None:
        locus = _t_poly(row.t_locus, rf.coeffs)
    for spec in row.points:
        pt = named[spec.name]
        points.append((spec.name, pt, spec.generic))
        if spec.special is not None:
            jump = None
            if spec.special != NONISO:
                jump = spec.special.milnor - spec.generic.milnor
                if jump < 1:
                    raise TableInconsistency(f"row {row.key}: non-positive jump")
            events.append(JumpEvent(spec.name, pt, locus, spec.generic, spec.special, jump))
    non_iso = row.non_isolated
    if non_iso:
        lam = mu = b2 = None
    else:
        lam = sum(e.total for e in events)
        mu, b2 = row.printed_mu, row.printed_b2
    v = Verdict(ct, _class_tag(ct), points, events, lam, mu, b2, non_iso, row, "table", rf)
    if row.status != "printed" and row.note:
        v.findings.append(f"table {row.table} row {row.label} ({row.status}): {row.note}")
    elif row.note:
        v.findings.append(f"table {row.table} row {row.label}: {row.note}")
    return v


def _oracle_verdict(rf: ReducedForm) -> Verdict:
    """Types straight from the germ oracle; jumps only at t = 0 for these tables."""
    from .oracle import germ_at_infinity

    ct = rf.cubic_type
    pts = infinity_points(rf)
    points, events = [], []
    for name, pt in pts:
        g1 = germ_at_infinity(rf.f_reduced, pt, Fraction(1)).recognized
        g2 = germ_at_infinity(rf.f_reduced, pt, Fraction(-7, 3)).recognized
        if g1 != g2:
            raise TableInconsistency(f"oracle types at {name} differ on two generic fibres")
        s = germ_at_infinity(rf.f_reduced, pt, Fraction(0)).recognized
        points.append((name, pt, g1))
        if s != g1:
            jump = None
            if s != NONISO and g1.is_isolated and g1 != NONSIMPLE:
                jump = s.milnor - g1.milnor
            events.append(JumpEvent(name, pt, (Fraction(0), Fraction(1)), g1, s, jump))
    non_iso = any(t in (NONISO, NONSIMPLE) for _, _, t in points) or any(
        e.jump is None for e in events)
    if non_iso:
        lam = mu = b2 = None
    else:
        lam = sum(e.total for e in events)
        b2 = eq_b2(ct, points)
        mu = b2 - lam
    v = Verdict(ct, _class_tag(ct), points, events, lam, mu, b2, non_iso, None, "oracle", rf)
    v.findings.append(f"table {TABLE_OF[ct]}: row not tabulated; types from the germ oracle")
    return v


def match_rows(table: int, coeffs):
    return [r for r in rows_of(table) if r.matches(coeffs)]


def table_classify(rf: ReducedForm) -> Verdict:
    """Evaluate the encoded rows (after symmetric canonicalization)."""
    ct = rf.cubic_type
    if ct == CubicType.GENERAL:
        return smooth_verdict(ct)
    table = TABLE_OF[ct]
    for perm in _SYMMETRIES.get(ct, [(0, 1, 2)]):
        cand = rf if perm == (0, 1, 2) else _permuted(rf, perm)
        hits = match_rows(table, cand.coeffs)
        if len(hits) > 1:
            raise TableInconsistency(
                f"rows {[h.label for h in hits]} of table {table} overlap at {cand.coeffs}")
        if hits:
            return _verdict_from_row(cand, hits[0])
    if table in ORACLE_FALLBACK_TABLES:
        return _oracle_verdict(rf)
    raise IncompleteTable(table, rf.coeffs)


# --- whole pipeline ---------------------------------------------------------------------

def check_input(f: Poly):
    if f.gens != DEFAULT_GENS:
        raise ShapeError(f"expected a polynomial in {DEFAULT_GENS}")
    if f.degree() != 3:
        raise ShapeError(f"expected total degree 3, got {f.degree()}")


@lru_cache(maxsize=512)
def _cubic_analysis(f3: Poly):
    """(type, normalization) of the cubic part; pure, so cached."""
    ct = classify_cubic(f3)
    if ct == CubicType.GENERAL:
        return ct, None
    return ct, normalizing_map(f3, ct)


def reduce_polynomial(f: Poly) -> ReducedForm:
    check_input(f)
    f3 = f.homogeneous_part(3)
    ct, nm = _cubic_analysis(f3)
    if ct == CubicType.GENERAL:
        return ReducedForm(f, coefficient_vector(f), AffineMap.identity(), ct)
    if not nm.available:
        raise UnsupportedExtension(f3, f"no rational normal form ({nm.reason})")
    return reduce_coefficients(f, ct, nm.map)


def verdict_for(f: Poly) -> Verdict:
    """Full table verdict for a degree-3 polynomial in x0, x1, x2."""
    rf = reduce_polynomial(f)
    if rf.cubic_type == CubicType.GENERAL:
        return smooth_verdict()
    return table_classify(rf)


# --- back to the input coordinates -----------------------------------------------------

def original_point(pt: ProjPoint, applied: AffineMap) -> ProjPoint:
    """Direction at infinity in the input coordinates (x = A^-1 X)."""
    ainv = applied.inverse_linear()
    coords = [sum((ainv[i][j] * pt.coords[j] for j in range(3)), Fraction(0) if pt.field is None
                  else pt.field(0)) for i in range(3)]
    k = max(i for i, c in enumerate(coords) if c != 0)
    inv = 1 / coords[k]
    coords = [c * inv for c in coords]
    fld = pt.field
    if fld is not None and all(c.is_rational() for c in coords):
        coords = [c.rational() for c in coords]
        fld = None
    return ProjPoint(tuple(coords), fld)


def original_t_locus(locus, applied: AffineMap) -> tuple:
    """p(s) with s = scale*t + shift, as a monic polynomial in t."""
    acc = [Fraction(0)]
    lin = [applied.shift, applied.scale]
    for c in reversed(locus):
        acc = uadd(umul(acc, lin), [c])
    return tuple(umonic(utrim(acc)))


def special_values(locus):
    """Roots of a t_locus: rationals and conjugate pairs as (field, element)."""
    out = []
    for fac in factor_rational(list(locus)):
        deg = len(fac) - 1
        if deg == 1:
            out.append((None, -fac[0]))
        elif deg == 2:
            K = NumberField(fac)
            s = K.gen
            out.extend([(K, s), (K, -s - fac[1])])
        else:
            raise UnsupportedExtension(fac)
    return out


def audit_tables(seed: int = 0):
    """One verified representative per row; see :mod:`cubicinf.verify`."""
    from .verify import audit_rows

    return audit_rows(seed=seed)


__all__ = [
    "MONOMIALS", "A_NAMES", "TABLE_OF", "DESIGNATED", "NotBType", "IncompleteTable",
    "TableInconsistency", "TableRow", "PointSpec", "ReducedForm", "JumpEvent", "Verdict",
    "load_tables", "rows_of", "table_text", "coefficient_vector", "build_polynomial",
    "reduce_coefficients", "infinity_points", "table_classify", "verdict_for", "reduce_polynomial",
    "original_point", "original_t_locus", "special_values", "audit_tables", "eq_b2",
    "smooth_verdict", "F_CLASS", "B_CLASS", "NOT_B",
]
