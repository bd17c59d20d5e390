import random
from fractions import Fraction

import pytest

from cubicinf import tables
from cubicinf.cubic import CubicType
from cubicinf.germ import A, D, E
from cubicinf.poly import substitute_affine
from cubicinf.tables import (
    A_NAMES, DESIGNATED, MONOMIALS, TABLE_OF, IncompleteTable, ReducedForm, build_polynomial,
    coefficient_vector, load_tables, match_rows, original_t_locus, reduce_polynomial, rows_of,
    table_classify, table_text, verdict_for,
)
from cubicinf.verify import random_affine_map

ROWS = load_tables()


def test_data_file_shape():
    lines = [ln for ln in table_text().splitlines() if ln.strip() and not ln.startswith("#")]
    assert len(lines) == len(ROWS) == 60
    assert all(ln.count("|") == 11 for ln in lines)
    assert {r.status for r in ROWS} <= {"printed", "amended", "corrected", "supplementary"}
    assert {r.table for r in ROWS} == set(range(1, 9))


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.key)
def test_representative_dispatches_to_its_row(row):
    f = row.representative_poly()
    v = verdict_for(f)
    assert v.row is row
    assert [(n, t) for n, _, t in v.points] == [(p.name, p.generic) for p in row.points]
    if not v.non_isolated:
        assert (v.lambda_total, v.mu_table, v.b2_table) == (row.printed_lambda, row.printed_mu, row.printed_b2)
        assert v.b2_table == v.lambda_total + v.mu_table
    for e in v.events:
        if e.jump is not None:
            assert e.jump >= 1 and e.special_type.milnor - e.generic_type.milnor == e.jump


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.key)
def test_representatives_are_reduced(row):
    c = row.representative_coeffs()
    assert all(c[A_NAMES[i]] == 0 for i in DESIGNATED[row.cubic_type])


def test_reduced_form_invariants():
    rng = random.Random(11)
    for row in ROWS[::3]:
        f = substitute_affine(row.representative_poly(), random_affine_map(rng))
        rf = reduce_polynomial(f)
        assert substitute_affine(f, rf.applied) == rf.f_reduced
        assert all(rf.coeffs[A_NAMES[i]] == 0 for i in DESIGNATED[rf.cubic_type])
        assert rf.f_reduced.coeff((0, 0, 0)) == 0


def _coeffs(**kw):
    out = {n: Fraction(0) for n in A_NAMES}
    out.update({k: Fraction(v) for k, v in kw.items()})
    return out


def test_nodal_worked_example():
    f = build_polynomial(CubicType.NODAL, _coeffs(a0=1, a1=1, a2=1, a5=1, a7=1))
    v = verdict_for(f)
    assert v.row.label == "A2->A3"
    (e,) = v.events
    assert (e.generic_type, e.special_type) == (A(2), A(3))
    assert e.t_locus == (Fraction(4), Fraction(1))  # t + 4
    assert (v.lambda_total, v.mu_table, v.b2_table, v.class_tag) == (1, 4, 5, "F")


def test_conic_chord_smooth_row():
    v = verdict_for(build_polynomial(CubicType.CONIC_CHORD, _coeffs(a6=2, a8=-1)))
    assert v.row.label == "A0 A0"
    assert (v.lambda_total, v.mu_table, v.b2_table) == (0, 6, 6)


def test_cuspidal_e6_row():
    v = verdict_for(build_polynomial(CubicType.CUSPIDAL, _coeffs(a1=1)))
    (e,) = v.events
    assert (e.generic_type, e.special_type, e.t_locus) == (D(4), E(6), (Fraction(0), Fraction(1)))
    assert (v.lambda_total, v.mu_table, v.b2_table) == (2, 0, 2)


def test_cuspidal_d5_pair():
    v = verdict_for(build_polynomial(CubicType.CUSPIDAL, _coeffs(a0=3, a1=2, a4=1)))
    (e,) = v.events
    assert e.t_locus == (Fraction(-4), Fraction(0), Fraction(1))  # 27t^2 - 108, monic
    assert e.fibres == 2 and e.jump == 1 and v.lambda_total == 2


def test_class_tags():
    for row in ROWS:
        want = "F" if row.table <= 6 else "BminusF"
        assert verdict_for(row.representative_poly()).class_tag == want


def test_rows_mutually_exclusive_on_random_vectors():
    rng = random.Random(5)
    for ct, table in TABLE_OF.items():
        for _ in range(300):
            c = {n: Fraction(rng.choice([0, 0, 1, -1, 2])) for n in A_NAMES}
            for i in DESIGNATED[ct]:
                c[A_NAMES[i]] = Fraction(0)
            assert len(match_rows(table, c)) <= 1


def test_incomplete_table_is_raised(monkeypatch):
    f = build_polynomial(CubicType.NODAL, _coeffs(a8=1))
    rf = reduce_polynomial(f)
    monkeypatch.setattr(tables, "match_rows", lambda table, coeffs: [])
    with pytest.raises(IncompleteTable) as exc:
        table_classify(rf)
    assert exc.value.table == 1 and exc.value.coeffs["a8"] == 1


def test_original_t_locus():
    from cubicinf.poly import AffineMap
    from cubicinf import linalg

    m = AffineMap(linalg.identity(3), scale=2, shift=3)  # s = 2t + 3
    # s + 4 = 0  <=>  t = -7/2
    assert original_t_locus((Fraction(4), Fraction(1)), m) == (Fraction(7, 2), Fraction(1))


def test_coefficient_vector_order():
    f = build_polynomial(CubicType.TRIANGLE, {n: Fraction(i + 1) for i, n in enumerate(A_NAMES)})
    c = coefficient_vector(f)
    assert [c[n] for n in A_NAMES] == list(range(1, 10))
    assert MONOMIALS[4] == (1, 1, 0)


def test_table7_special_value_uses_4a8():
    v = verdict_for(build_polynomial(CubicType.DOUBLE_LINE, _coeffs(a1=1, a2=2, a8=1)))
    (e,) = v.events
    assert e.t_locus == (Fraction(1), Fraction(1))  # 4t + 4 = 0
