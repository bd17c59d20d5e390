import random

from cubicinf.poly import substitute_affine
from cubicinf.tables import load_tables, verdict_for
from cubicinf.verify import audit_rows, random_affine_map, verify_verdict

from conftest import P

ROW = {(r.table, r.label): r for r in load_tables()}


def _verify(f, seed=0):
    return verify_verdict(f, verdict_for(f), seed=seed)


def test_d5_found_on_both_roots():
    f = ROW[(2, "D4->D5")].representative_poly()
    ver = _verify(f)
    assert ver.ok
    specials = [c for c in ver.checks if c.kind == "special"]
    assert {c.t for c in specials} >= {"2", "-2"}
    assert all(c.got == "D5" for c in specials)


def test_three_a1_points():
    ver = _verify(ROW[(6, "A1 A1 A1")].representative_poly(), seed=3)
    assert ver.ok
    assert sum(c.kind == "generic" for c in ver.checks) == 9


def test_general_at_infinity():
    ver = _verify(P("x0^3 + x1^3 + x2^3 + x0*x1 + x2"))
    assert ver.ok
    assert [c.kind for c in ver.checks] == ["points", "mu"]


def test_verification_after_affine_change():
    rng = random.Random(9)
    f = ROW[(1, "A2->A3")].representative_poly()
    for _ in range(3):
        g = substitute_affine(f, random_affine_map(rng))
        assert _verify(g, seed=1).ok


def test_mismatch_is_reported():
    f = ROW[(1, "A2->A3")].representative_poly()
    v = verdict_for(f)
    other = verdict_for(ROW[(1, "A1")].representative_poly())
    v.mu_table = other.mu_table
    ver = verify_verdict(f, v)
    assert not ver.ok and ver.failures[0].kind == "mu"


def test_non_isolated_row_checks():
    ver = _verify(ROW[(2, "D4->inf")].representative_poly())
    assert ver.ok
    assert any(c.expected == "NonIsolated on some root" for c in ver.checks)


def test_audit_without_oracle_is_clean():
    lines = audit_rows(verify=False)
    assert len(lines) == 60 and all(ln.passed for ln in lines)
    assert all(ln.line().startswith("PASS") for ln in lines)
