"""Report assembly for the command line: exact data as strings, decimals
only as labeled approximations."""
from __future__ import annotations

from fractions import Fraction

import sympy

from .cubic import factor_rational
from .fields import ustr
from .invariants import UNIT, GlobalReport, analyze
from .parser import parse_poly
from .poly import format_coeff
from .tables import A_NAMES, original_point, original_t_locus
from .verify import verify_verdict

SCHEMA = "cubicinf.report/1"
APPROX_LABEL = "approximate, 6 significant digits"


def _num(z) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-12 * max(1.0, abs(z.real)):
        return f"{z.real:.6g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.6g}{sign}{abs(z.imag):.6g}i"


def approximate_roots(coeffs) -> list:
    """Numerical roots of a univariate polynomial (coefficients low to high)."""
    if len(coeffs) < 2:
        return []
    t = sympy.Symbol("t")
    p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], t)
    return [_num(r) for r in p.nroots(n=15)]


def describe_values(coeffs, var: str = "t") -> list:
    """Exact irreducible factors with decimal renderings of their roots."""
    out = []
    for fac in factor_rational(list(coeffs)):
        out.append({"minimal_polynomial": ustr(fac, var), "degree": len(fac) - 1,
                    "approx": approximate_roots(fac), "approx_note": APPROX_LABEL})
    return out


def _point_json(name, pt, ltype, applied):
    orig = original_point(pt, applied) if applied is not None else pt
    return {
        "name": name,
        "coords": [str(c) for c in orig.coords],
        "field": None if orig.field is None else ustr(list(orig.field.modulus), "s"),
        "reduced_coords": [str(c) for c in pt.coords],
        "generic_type": str(ltype),
    }


def build(rep: GlobalReport, text: str | None = None) -> dict:
    v = rep.verdict
    rf = v.reduced
    applied = rf.applied if rf is not None else None
    events = []
    for e in v.events:
        loc = original_t_locus(e.t_locus, applied) if applied is not None else e.t_locus
        events.append({
            "point": e.point_name,
            "generic_type": str(e.generic_type),
            "special_type": str(e.special_type),
            "jump_per_fibre": e.jump,
            "fibres": e.fibres,
            "t_locus": ustr(list(loc), "t"),
            "reduced_t_locus": ustr(list(e.t_locus), "s"),
            "values": describe_values(loc),
        })
    cv = rep.critical_values
    if cv is None:
        crit = {"polynomial": None, "note": "critical set is not finite"}
    elif cv == UNIT:
        crit = {"polynomial": UNIT, "values": []}
    else:
        crit = {"polynomial": ustr(list(cv), "w"), "values": describe_values(cv, "w")}
    return {
        "schema": SCHEMA,
        "input": text,
        "cubic_type": str(v.cubic_type),
        "normalizing_map": applied.to_json() if applied is not None else None,
        "reduced_coefficients": {n: format_coeff(rf.coeffs.get(n, Fraction(0))) for n in A_NAMES}
        if rf is not None else None,
        "row": v.row.key if v.row is not None else None,
        "source": v.source,
        "points": [_point_json(n, p, t, applied) for n, p, t in v.points],
        "events": events,
        "lambda": v.lambda_total,
        "mu": v.mu_table,
        "b2": v.b2_table,
        "class": v.class_tag,
        "non_isolated": v.non_isolated,
        "mu_affine": "inf" if rep.mu_affine == float("inf") else rep.mu_affine,
        "atypical": {
            "critical_values": crit,
            "jump_loci": [ustr(list(loc), "t") for loc in rep.jump_loci],
            "empty": rep.atyp_empty if cv is not None else False,
        },
        "broughton": {"flag": rep.broughton, "case": rep.broughton_case},
        "global_fibration": {"flag": rep.global_fibration, "case": rep.fibration_case},
        "findings": list(rep.findings),
    }


def classify_text(text: str, verify: bool = False, seed: int = 0) -> dict:
    """Full pipeline on polynomial text; exceptions propagate to the caller."""
    f = parse_poly(text)
    rep = analyze(f)
    out = build(rep, text)
    if verify:
        ver = verify_verdict(f, rep.verdict, seed=seed)
        out["verification"] = ver.to_json()
        if not ver.ok:
            out["findings"].append("verification FAILED")
    return out


def consistent(report: dict) -> bool:
    """No inconsistency findings and no failed verification."""
    if any(x.startswith("inconsistency") for x in report["findings"]):
        return False
    ver = report.get("verification")
    return ver is None or ver["ok"]


def render(report: dict) -> str:
    """Plain-text rendering of a report dict."""
    lines = [f"input         {report['input']}",
             f"cubic type    {report['cubic_type']}"]
    if report["reduced_coefficients"]:
        nz = {k: v for k, v in report["reduced_coefficients"].items() if v != "0"}
        lines.append("reduced       " + (", ".join(f"{k}={v}" for k, v in nz.items()) or "all zero"))
    if report["row"]:
        lines.append(f"row           {report['row']}")
    elif report["source"] != "table":
        lines.append(f"source        {report['source']}")
    if not report["points"]:
        lines.append("points        none (general at infinity)")
    for p in report["points"]:
        fld = f" over Q[s]/({p['field']})" if p["field"] else ""
        lines.append(f"point {p['name']}       ({':'.join(p['coords'])}){fld}  generic {p['generic_type']}")
    for e in report["events"]:
        lines.append(f"jump at {e['point']}     {e['generic_type']} -> {e['special_type']} on {e['t_locus']} = 0")
        for val in e["values"]:
            lines.append(f"              {val['minimal_polynomial']}: t ~ {', '.join(val['approx'])} (approximate)")

    def show(x):
        return "-" if x is None else str(x)

    lines.append(f"lambda={show(report['lambda'])}  mu={show(report['mu'])}  b2={show(report['b2'])}  "
                 f"class={report['class']}  affine mu={report['mu_affine']}")
    crit = report["atypical"]["critical_values"]
    lines.append(f"critical values  {crit['polynomial']}")
    if report["atypical"]["jump_loci"]:
        lines.append("jump loci        " + "; ".join(report["atypical"]["jump_loci"]))
    b, g = report["broughton"], report["global_fibration"]
    lines.append(f"Broughton type   {'yes, case ' + b['case'] if b['flag'] else 'no'}")
    lines.append(f"global fibration {'yes, case ' + g['case'] if g['flag'] else 'no'}")
    if "verification" in report:
        ver = report["verification"]
        lines.append(f"verification     {'ok' if ver['ok'] else 'FAILED'} "
                     f"({len(ver['checks'])} checks, seed {ver['seed']})")
        for c in ver["checks"]:
            if not c["ok"]:
                lines.append(f"  FAIL {c['kind']} {c['point']} t={c['t']}: expected {c['expected']}, got {c['got']}")
    for x in report["findings"]:
        lines.append(f"finding: {x}")
    return "\n".join(lines)
