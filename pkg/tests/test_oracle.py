import pytest

from quenta import constructions as cons
from quenta.code import cyclic_code, matrix, zero_matrix
from quenta.defset import defset
from quenta.gf import field_create, splitting_field
from quenta.oracle import (
    LOWER_OK,
    SKIPPED,
    entanglement_rank_euclid,
    entanglement_rank_hermitian,
    instances,
    relative_min_weight,
    sweep,
    verify_instance,
)

F2 = field_create(2, 1)
F3 = field_create(3, 1)
F4 = field_create(2, 2)


def rows_by_name(report):
    return {r.name: r for r in report.rows}


# ----------------------------------------------------------------------
# rank oracles
# ----------------------------------------------------------------------

def test_rank_euclid_full_space_is_zero():
    ext = splitting_field(2, 7)
    C = cyclic_code(defset(7, 2, set()), F2, ext)
    assert entanglement_rank_euclid(C, C) == 0


def test_rank_euclid_hamming_vs_simplex_defset():
    ext = splitting_field(2, 7)
    C1 = cyclic_code(defset(7, 2, {1, 2, 4}), F2, ext)
    C2 = cyclic_code(defset(7, 2, {3, 5, 6}), F2, ext)
    assert entanglement_rank_euclid(C1, C2) == 3


def test_rank_euclid_matches_formula_count():
    p = cons.bch_euclid(3, 1, 1)
    ext = splitting_field(3, 8)
    C1 = cyclic_code(p.defset_named("Z1"), F3, ext)
    C2 = cyclic_code(p.defset_named("Z2"), F3, ext)
    assert entanglement_rank_euclid(C1, C2) == p.c == 2


def test_rank_euclid_rejects_mismatch():
    ext = splitting_field(2, 7)
    C1 = cyclic_code(defset(7, 2, {0}), F2, ext)
    C2 = cyclic_code(defset(3, 2, {0}), F2, splitting_field(2, 3))
    with pytest.raises(ValueError):
        entanglement_rank_euclid(C1, C2)


def test_rank_hermitian_small():
    ext = splitting_field(4, 3)
    C = cyclic_code(defset(3, 4, {1}), F4, ext)
    assert entanglement_rank_hermitian(C, 2) == 1


def test_rank_hermitian_self_orthogonal_dual_is_zero():
    # Z = {1,4} at n=5: the dual is Hermitian self-orthogonal, so H H* = 0
    ext = splitting_field(4, 5)
    C = cyclic_code(defset(5, 4, {1, 4}), F4, ext)
    assert entanglement_rank_hermitian(C, 2) == 0


def test_rank_hermitian_length_80():
    F9 = field_create(3, 2)
    ext = splitting_field(9, 80)
    C = cyclic_code(defset(80, 9, {0, 10, 11, 19}), F9, ext)
    assert entanglement_rank_hermitian(C, 3) == 1


# ----------------------------------------------------------------------
# relative weight enumeration
# ----------------------------------------------------------------------

def test_relative_weight_empty_difference_is_none():
    ext = splitting_field(2, 7)
    C = cyclic_code(defset(7, 2, {1, 2, 4}), F2, ext)
    # every codeword is annihilated by its own parity check
    assert relative_min_weight(C, C.H) is None


def test_relative_weight_full_space():
    C = cyclic_code(defset(3, 2, set()), F2, splitting_field(2, 3))
    M = matrix(F2, [(1, 1, 1)])
    # words with odd overlap against 111: minimum is a single 1
    assert relative_min_weight(C, M) == 1


def test_relative_weight_capped():
    ext = splitting_field(2, 7)
    C = cyclic_code(defset(7, 2, {1, 2, 4}), F2, ext)
    assert relative_min_weight(C, zero_matrix(F2, 1, 7), cap=10) == "capped"


def test_relative_weight_zero_map_sees_whole_code():
    ext = splitting_field(2, 7)
    C = cyclic_code(defset(7, 2, {1, 2, 4}), F2, ext)
    # nothing is outside the kernel of the zero map
    assert relative_min_weight(C, zero_matrix(F2, 1, 7)) is None


# ----------------------------------------------------------------------
# instance verification
# ----------------------------------------------------------------------

def test_verify_bch_euclid_golden():
    rep = verify_instance(cons.bch_euclid(3, 1, 1))
    assert rep.passed
    rows = rows_by_name(rep)
    assert rows["k"].kind == "exact" and rows["k"].measured == 3
    assert rows["c"].measured == 2
    assert rows["intersection"].passed
    assert rows["d"].kind == LOWER_OK and rows["d"].measured >= 2


def test_verify_rs_mds_golden():
    rep = verify_instance(cons.rs_euclid_mds(7, 6, 3, 2))
    assert rep.passed
    rows = rows_by_name(rep)
    assert rows["d"].kind == "exact"
    assert rows["d"].measured == 4
    assert all(r.passed for r in rep.rows)


def test_verify_euclid_lcd_has_hull_row():
    rep = verify_instance(cons.euclid_lcd(defset(7, 2, {0}), 2))
    rows = rows_by_name(rep)
    assert rows["hull"].measured == 0
    assert rep.passed


def test_verify_rs_hermit_skips_distance():
    rep = verify_instance(cons.rs_hermit(2, 1, 0))
    assert rep.passed
    rows = rows_by_name(rep)
    assert rows["k"].passed and rows["c"].passed and rows["intersection"].passed
    assert rows["d"].kind == SKIPPED
    assert "non-cyclic length" in rows["d"].note


def test_verify_li_lcd_checks_arithmetic_only():
    rep = verify_instance(cons.lcd_cyclic_family(2, 3, 2))
    assert rep.passed
    rows = rows_by_name(rep)
    assert rows["k"].kind == SKIPPED
    assert rows["c"].kind == "exact" and rows["c"].passed
    assert rows["d"].kind == SKIPPED


def test_verify_rs_euclid_formula_mode_skips():
    rep = verify_instance(cons.rs_euclid(7, 5, 2, 1, 2, 1))
    assert rep.passed
    assert all(r.kind == SKIPPED for r in rep.rows)
    assert "formula mode" in rep.rows[0].note


def test_verify_non_prime_power_skips():
    rep = verify_instance(cons.bch_euclid(6, 1, 1))
    assert all(r.kind == SKIPPED for r in rep.rows)
    assert "not a prime power" in rep.rows[0].note


def test_verify_respects_matrix_cap():
    rep = verify_instance(cons.bch_euclid(3, 1, 1), matrix_cap=5)
    assert all(r.kind == SKIPPED for r in rep.rows)
    assert "matrix cap" in rep.rows[0].note


def test_verify_distance_cap_falls_back_to_run_bound():
    rep = verify_instance(cons.bch_euclid(3, 1, 1), distance_cap=1)
    rows = rows_by_name(rep)
    # run bounds still at or above the claimed lower bound
    assert rows["d"].kind == LOWER_OK
    assert rows["d"].note == "run bound"
    assert rows["k"].passed  # rank rows unaffected by the distance cap


def test_verify_honest_failure_on_wrong_claim():
    # deliberately overclaim an exact distance: the even-weight code has d = 2
    p = cons.euclid_lcd(defset(7, 2, {0}), 3)
    rep = verify_instance(p)
    assert not rep.passed
    rows = rows_by_name(rep)
    assert rows["d"].kind == "exact" and not rows["d"].passed


def test_relative_distance_note_present_on_small_instances():
    rep = verify_instance(cons.rs_euclid_mds(7, 6, 3, 2))
    assert any("relative distance" in note for note in rep.notes)


# ----------------------------------------------------------------------
# sweeps
# ----------------------------------------------------------------------

def test_instances_bch_euclid_coverage():
    ps = instances("bch-euclid", 3)
    assert len(ps) == 6
    assert {(p.input_named("a"), p.input_named("b")) for p in ps} == {
        (0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)
    }


def test_instances_rs_families():
    assert len(instances("rs-euclid", 7, n=6)) == 330
    mds = instances("rs-mds", 7, n=6)
    assert len(mds) == 6
    assert all(p.family == "rs-mds" for p in mds)


def test_instances_subset_families():
    assert len(instances("hermitian", 2, n=3)) == 8
    assert len(instances("euclid-lcd", 2, n=15)) == 16
    lcd = instances("li-lcd", 2, m=3)
    assert len(lcd) == 16
    assert {p.case for p in lcd} == {"branch1", "branch2", "branch3", "branch4"}


def test_instances_rejects_unknown_family():
    with pytest.raises(ValueError):
        instances("rs-secret", 7, n=6)


def test_sweep_bch_euclid_all_pass():
    reports = sweep("bch-euclid", 3)
    assert len(reports) == 6
    assert all(r.passed for r in reports)


def test_sweep_hermitian_small_lengths_all_pass():
    for n in (3, 5):
        assert all(r.passed for r in sweep("hermitian", 2, n=n))


def test_sweep_rs_mds_all_pass():
    for q, n in ((7, 6), (5, 4)):
        assert all(r.passed for r in sweep("rs-mds", q, n=n))


def test_sweep_li_lcd_all_pass():
    assert all(r.passed for r in sweep("li-lcd", 2, m=3))


def test_sweep_is_deterministic():
    assert sweep("bch-euclid", 3) == sweep("bch-euclid", 3)
