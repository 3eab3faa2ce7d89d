import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quenta.defset import (
    bch_bound,
    coset_closure,
    coset_partition,
    cyclotomic_coset,
    defset,
    euclidean_dual_defset,
    hermitian_dual_defset,
    intersection_dim,
    is_lcd_euclidean,
    is_lcd_hermitian,
    rs_defset,
    rs_dual_defset,
)


def test_cyclotomic_cosets_golden():
    assert cyclotomic_coset(1, 8, 3).as_set() == {1, 3}
    assert cyclotomic_coset(2, 8, 3).as_set() == {2, 6}
    assert cyclotomic_coset(0, 8, 3).as_set() == {0}
    assert cyclotomic_coset(1, 7, 2).as_set() == {1, 2, 4}
    assert cyclotomic_coset(3, 7, 2).as_set() == {3, 5, 6}
    assert cyclotomic_coset(1, 3, 2).as_set() == {1, 2}


def test_coset_partition_covers_zn():
    part = coset_partition(8, 3)
    assert part.leaders() == (0, 1, 2, 4, 5)
    union = set()
    for c in part.cosets:
        assert not (union & c.as_set())
        union |= c.as_set()
    assert union == set(range(8))
    assert part.coset_of(7).as_set() == {5, 7}


def test_partition_requires_coprime():
    with pytest.raises(ValueError):
        coset_partition(8, 2)
    with pytest.raises(ValueError):
        cyclotomic_coset(1, 9, 3)


def test_defset_normalizes():
    Z = defset(8, 3, [9, 1, 1, -7])
    assert Z.as_set() == {1}
    assert len(Z) == 1
    assert 1 in Z and 3 not in Z


def test_coset_closure():
    assert coset_closure([1], 7, 2).as_set() == {1, 2, 4}
    assert coset_closure([0, 1], 8, 3).as_set() == {0, 1, 3}
    assert coset_closure([], 8, 3).as_set() == set()


def test_is_coset_closed():
    assert defset(8, 3, {1, 3}).is_coset_closed()
    assert not defset(8, 3, {1}).is_coset_closed()
    assert defset(8, 3, set()).is_coset_closed()


def test_euclidean_dual_defset():
    # n=7 q=2: Z = {1,2,4}, -Z = {3,5,6}, complement = {0,1,2,4} (the simplex code)
    Z = defset(7, 2, {1, 2, 4})
    assert euclidean_dual_defset(Z).as_set() == {0, 1, 2, 4}
    # Z = {0}: -Z = {0}, dual = Z_7 minus {0}
    assert euclidean_dual_defset(defset(7, 2, {0})).as_set() == {1, 2, 3, 4, 5, 6}
    # empty defining set (full code) dualizes to everything (zero code)
    assert euclidean_dual_defset(defset(7, 2, set())).as_set() == set(range(7))


def test_euclidean_dual_is_involution_on_closed_sets():
    part = coset_partition(15, 2)
    for mask in range(1 << len(part.cosets)):
        elems = set()
        for i, c in enumerate(part.cosets):
            if mask >> i & 1:
                elems |= c.as_set()
        Z = defset(15, 2, elems)
        assert euclidean_dual_defset(euclidean_dual_defset(Z)) == Z


def test_hermitian_dual_defset():
    # n=3 over GF(4): Z = {1} -> -2*{1} = {1}, dual = {0,2}
    Z = defset(3, 4, {1})
    assert hermitian_dual_defset(Z).as_set() == {0, 2}
    # n=5 over GF(4): Z = {1,4} -> -2*Z = {3,2}, dual = {0,1,4}
    Z = defset(5, 4, {1, 4})
    assert hermitian_dual_defset(Z).as_set() == {0, 1, 4}


def test_hermitian_dual_requires_square_base():
    with pytest.raises(ValueError):
        hermitian_dual_defset(defset(8, 3, {0}))


def test_intersection_dim():
    Z1 = defset(7, 2, {1, 2, 4})
    Z2 = defset(7, 2, {3, 5, 6})
    # dim(C1 cap C2) = n - |Z1 u Z2|
    assert intersection_dim(Z1, Z2) == 1
    assert intersection_dim(Z1, Z1) == 4
    with pytest.raises(ValueError):
        intersection_dim(Z1, defset(8, 3, {0}))


def test_bch_bound():
    assert bch_bound(defset(7, 2, set())) == 1
    assert bch_bound(defset(7, 2, set(range(7)))) == 8
    assert bch_bound(defset(7, 2, {1, 2, 4})) == 3       # run 1,2
    assert bch_bound(defset(7, 2, {0, 1, 2, 4})) == 4    # run 0,1,2
    # wraparound run: {6, 0, 1} is three consecutive residues mod 7
    assert bch_bound(defset(7, 2, {0, 1, 6})) == 4
    assert bch_bound(defset(15, 2, {1, 2, 3, 4})) == 5


def test_lcd_predicates():
    # even-weight code at n=7: Z = {0} has trivial hull
    assert is_lcd_euclidean(defset(7, 2, {0}))
    # Hamming Z = {1,2,4} is self-dual-ish: dual defset equals Z, hull = k
    assert not is_lcd_euclidean(defset(7, 2, {1, 2, 4}))
    assert is_lcd_hermitian(defset(3, 4, {0}))
    # the n=5, Z={1,4} code over GF(4) has Hermitian hull dimension 2
    Z = defset(5, 4, {1, 4})
    assert not is_lcd_hermitian(Z)
    assert intersection_dim(Z, hermitian_dual_defset(Z)) == 2


def test_rs_defsets():
    # RS_k(n, b): roots b .. b+n-k-1
    assert rs_defset(6, 3, 1).as_set() == {1, 2, 3}
    assert rs_defset(6, 3, 0).as_set() == {0, 1, 2}
    assert rs_defset(6, 5, 4).as_set() == {4}
    # base is stamped n+1 so every subset is coset-closed
    assert rs_defset(6, 3, 1).q == 7
    assert rs_defset(6, 3, 1).is_coset_closed()
    # dual window: RS_{n-k}(n, n-b+1)
    assert rs_dual_defset(6, 3, 1).as_set() == {6 % 6, 1, 2}  # {0,1,2} shifted: b'=n-b+1=6
    assert rs_dual_defset(6, 3, 1).as_set() == {0, 1, 2}
    assert rs_dual_defset(6, 2, 0).as_set() == {1, 2}


def test_rs_defset_ranges():
    with pytest.raises(ValueError):
        rs_defset(6, 0, 1)
    with pytest.raises(ValueError):
        rs_defset(6, 7, 1)
    with pytest.raises(ValueError):
        rs_defset(6, 3, -1)
    # k = n is the full code: empty window
    assert rs_defset(6, 6, 1).as_set() == set()


def test_set_operations_respect_compatibility():
    Z1 = defset(7, 2, {0})
    with pytest.raises(ValueError):
        Z1.union(defset(7, 3, {0}))
    with pytest.raises(ValueError):
        Z1.intersection(defset(8, 2, {0}))


@given(st.sets(st.integers(0, 14), max_size=15))
@settings(max_examples=300, deadline=None)
def test_closure_is_idempotent_hypothesis(seeds):
    Z = coset_closure(seeds, 15, 2)
    assert Z.is_coset_closed()
    assert coset_closure(Z.as_set(), 15, 2) == Z


@given(st.sets(st.integers(0, 14), max_size=15))
@settings(max_examples=300, deadline=None)
def test_hermitian_dual_involution_hypothesis(seeds):
    Z = coset_closure(seeds, 15, 4)
    assert hermitian_dual_defset(hermitian_dual_defset(Z)) == Z
