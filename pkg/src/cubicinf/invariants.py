"""Global invariants: Euler characteristics, Betti numbers, affine Milnor
number, critical values, Broughton type and global fibrations."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cubic import CubicType, chi_infinity
from .fields import umonic, usquarefree
from .germ import A
from .groebner import INFINITE, eliminate, groebner, quotient_dim
from .poly import Poly
from .tables import Verdict, original_t_locus, verdict_for


class InconsistencyError(ArithmeticError):
    pass


UNIT = "Unit"


def chi_smooth(n: int, d: int) -> int:
    """Euler characteristic of a smooth degree-d hypersurface in P^n."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    val = n + 1 - Fraction(1 + (-1) ** n * (d - 1) ** (n + 1), d)
    if val.denominator != 1:
        raise InconsistencyError(f"chi formula gave {val}")
    return int(val)


def b2_F(lam: int, mu_pairs) -> tuple:
    """(b2, mu) with b2 = 8 - sum(mu_gen + mu_inf) and mu = b2 - lam."""
    b2 = 8 - sum(g + i for g, i in mu_pairs)
    if b2 < 0:
        raise InconsistencyError(f"negative b2 ({b2})")
    return b2, b2 - lam


def b2_B(mu_gen_sum: int, chi_inf: int) -> int:
    b2 = (chi_smooth(3, 3) - 1) - mu_gen_sum - chi_inf
    if b2 < 0:
        raise InconsistencyError(f"negative b2 ({b2})")
    return b2


def betti_defect(mu_boundary_sum: int, delta_chi_inf: int, b2: int | None = None) -> int:
    """Delta_2 = sum of boundary Milnor numbers + (-1)^3 * delta chi^inf."""
    delta = mu_boundary_sum - delta_chi_inf
    if b2 is not None and delta != 8 - b2:
        raise InconsistencyError(f"Delta2 = {delta} but 8 - b2 = {8 - b2}")
    return delta


def affine_milnor_total(f: Poly):
    """dim Q[x]/(grad f); INFINITE for a positive-dimensional critical set."""
    return quotient_dim([f.diff(v) for v in f.gens])


def critical_values(f: Poly):
    """Squarefree monic polynomial in w whose roots are f(Sing f), or UNIT."""
    grad = [f.diff(v) for v in f.gens]
    if not any(grad):
        raise InconsistencyError("constant polynomial")
    jac = groebner([g for g in grad if g])
    if jac[0].degree() == 0:
        return UNIT
    gens = tuple(f.gens) + ("w",)
    lift = f.to_gens(gens)
    w = Poly.var("w", gens)
    elim = eliminate([g.to_gens(gens) for g in grad] + [w - lift], ("w",))
    if not elim:
        raise InconsistencyError("critical values fill the line")
    g = min(elim, key=lambda p: p.degree())
    coeffs = [Fraction(0)] * (g.degree() + 1)
    for m, c in g.terms.items():
        coeffs[m[0]] += c
    return tuple(umonic(usquarefree(coeffs)))


# --- Broughton / fibration case lists ---------------------------------------------------

BROUGHTON_CASES = {
    "i": (CubicType.CUSPIDAL, [Counter({"D5": 1}), Counter({"E6": 1})]),
    "ii": (CubicType.CONIC_TANGENT, [Counter({"D5": 1})]),
    "iii": (CubicType.CONIC_CHORD, [Counter({"A1": 1, "A5": 1})]),
    "iv": (CubicType.TRIANGLE, [Counter({"A1": 2, "A3": 1})]),
    "v": (CubicType.DOUBLE_LINE, [Counter({"D5": 1})]),
}

FIBRATION_CASES = {
    "i": (CubicType.CONIC_TANGENT, ("D5",)),
    "ii": (CubicType.THREE_LINES, ("D4", "A4")),
    "iii": (CubicType.DOUBLE_LINE, ("A4", "D5")),
}


def special_fibre_types(v: Verdict):
    """Multiset of types (A0 dropped) on each special fibre, one per event locus."""
    out = []
    loci = {}
    for e in v.events:
        loci.setdefault(e.t_locus, {})[e.point_name] = e.special_type
    for specials in loci.values():
        c = Counter()
        for name, _, t in v.points:
            tt = specials.get(name, t)
            if tt != A(0):
                c[str(tt)] += 1
        out.append(c)
    return out


def generic_fibre_types(v: Verdict):
    return Counter(str(t) for _, _, t in v.points if t != A(0))


@dataclass
class GlobalReport:
    verdict: Verdict
    mu_affine: object
    critical_values: object
    jump_loci: list
    b2: int | None
    broughton: bool = False
    broughton_case: str | None = None
    global_fibration: bool = False
    fibration_case: str | None = None
    findings: list = field(default_factory=list)

    @property
    def atyp(self):
        return (self.critical_values, self.jump_loci)

    @property
    def atyp_empty(self) -> bool:
        return self.critical_values == UNIT and not self.jump_loci


def broughton_check(r: GlobalReport):
    """(flag, case label) following the definition; the case is matched
    against the known list or reported as unlisted."""
    v = r.verdict
    flag = r.mu_affine == 0 and r.critical_values == UNIT and bool(r.jump_loci)
    if not flag:
        return False, None
    fibres = special_fibre_types(v)
    for label, (ct, shapes) in BROUGHTON_CASES.items():
        if v.cubic_type == ct and fibres and all(fb in shapes for fb in fibres):
            return True, label
    return True, "unlisted combination"


def global_fibration_check(r: GlobalReport):
    v = r.verdict
    flag = (not v.non_isolated and v.lambda_total == 0 and r.mu_affine == 0
            and r.critical_values == UNIT)
    if not flag:
        return False, None
    types = set(generic_fibre_types(v))
    for label, (ct, wanted) in FIBRATION_CASES.items():
        if v.cubic_type == ct and types & set(wanted):
            return True, label
    return True, "unlisted combination"


def eq_consistency(v: Verdict):
    """Problems with b2 = lambda + mu and the b2 formulas; empty when consistent."""
    from .tables import eq_b2

    problems = []
    if v.non_isolated or v.b2_table is None:
        return problems
    if v.lambda_total + v.mu_table != v.b2_table:
        problems.append(f"b2={v.b2_table} != lambda+mu={v.lambda_total}+{v.mu_table}")
    if v.points or v.source != "smooth":
        b2 = eq_b2(v.cubic_type, v.points)
        if b2 != v.b2_table:
            problems.append(f"formula b2={b2} but row says {v.b2_table}")
    if v.row is not None and v.row.printed_lambda is not None and v.row.printed_lambda != v.lambda_total:
        problems.append(f"lambda from events {v.lambda_total} != row {v.row.printed_lambda}")
    return problems


def analyze(f: Poly, verdict: Verdict | None = None) -> GlobalReport:
    v = verdict if verdict is not None else verdict_for(f)
    mu_aff = affine_milnor_total(f)
    cv = critical_values(f) if mu_aff != INFINITE else None
    applied = v.reduced.applied if v.reduced is not None else None
    loci = []
    for e in v.events:
        loc = original_t_locus(e.t_locus, applied) if applied is not None else e.t_locus
        if loc not in loci:
            loci.append(loc)
    r = GlobalReport(v, mu_aff, cv, loci, v.b2_table)
    r.findings.extend(v.findings)
    for p in eq_consistency(v):
        r.findings.append("inconsistency: " + p)
    if v.mu_table is not None and mu_aff != v.mu_table:
        r.findings.append(f"inconsistency: affine mu {mu_aff} != table mu {v.mu_table}")
    r.broughton, r.broughton_case = broughton_check(r)
    r.global_fibration, r.fibration_case = global_fibration_check(r)
    if r.broughton and r.broughton_case == "unlisted combination":
        r.findings.append("Broughton type outside the listed cases")
    if r.global_fibration and r.fibration_case == "unlisted combination":
        r.findings.append("global fibration outside the listed cases")
    return r


def delta_chi_infinity(ct: CubicType) -> int:
    """chi of a smooth plane cubic minus chi of {f3 = 0}."""
    return chi_smooth(2, 3) - chi_infinity(ct)


__all__ = [
    "chi_smooth", "b2_F", "b2_B", "betti_defect", "affine_milnor_total", "critical_values",
    "broughton_check", "global_fibration_check", "GlobalReport", "analyze", "UNIT",
    "InconsistencyError", "eq_consistency", "special_fibre_types", "delta_chi_infinity",
]
