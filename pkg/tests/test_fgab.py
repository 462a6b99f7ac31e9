import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistk.fgab import (ZERO, Z, AbelianGroup, IntMatrix, cyclic, direct_sum, is_isomorphic,
                         kernel_cokernel, smith_normal_form)

from oracles import cokernel_by_enumeration, invariant_factors_by_minors, rational_rank


def matrices(max_dim=6, bound=20):
    return st.integers(0, max_dim).flatmap(
        lambda r: st.integers(0, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda rows: IntMatrix.from_rows(rows, c))))


def check_snf(A):
    U, D, V = smith_normal_form(A)
    assert U @ A @ V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    assert D.is_diagonal()
    diag = D.diagonal_entries()
    assert all(d >= 0 for d in diag)
    for d, d_next in zip(diag, diag[1:]):
        assert (d_next == 0) if d == 0 else (d_next % d == 0)
    return diag


def test_snf_one_by_one():
    U, D, V = smith_normal_form(IntMatrix.from_rows([[6]]))
    assert D.tolist() == [[6]]
    assert U.tolist() == [[1]] and V.tolist() == [[1]]


def test_snf_two_by_two():
    A = IntMatrix.from_rows([[2, 4], [6, 8]])
    # gcd of entries is 2 and |det| = 8
    assert invariant_factors_by_minors(A.tolist()) == [2, 4]
    assert check_snf(A) == [2, 4]


def test_snf_zero_and_empty():
    assert check_snf(IntMatrix.zeros(2, 2)) == [0, 0]
    U, D, V = smith_normal_form(IntMatrix.zeros(0, 3))
    assert (D.rows, D.cols, V.rows) == (0, 3, 3)


def test_snf_negative_pivot():
    assert check_snf(IntMatrix.from_rows([[-3]])) == [3]


def test_snf_needs_divisibility_fix():
    # diag(2, 3) is diagonal but not in normal form
    assert check_snf(IntMatrix.diagonal([2, 3])) == [1, 6]


def test_snf_large_entries():
    big = 10 ** 30
    diag = check_snf(IntMatrix.from_rows([[big, 0], [0, big * 3]]))
    assert diag == [big, 3 * big]


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_properties(A):
    diag = check_snf(A)
    expected = invariant_factors_by_minors(A.tolist()) if A.rows and A.cols else []
    assert [d for d in diag if d] == expected


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_nullity(A):
    ker, coker = kernel_cokernel(A)
    r = rational_rank(A.tolist()) if A.rows and A.cols else 0
    assert ker.rank + r == A.cols
    assert coker.rank == A.rows - r


@pytest.mark.parametrize("f, ker, coker", [
    ([[6]], ZERO, cyclic(6)),
    ([[0]], Z, Z),
    ([[2, 0], [0, 3]], ZERO, cyclic(6)),
])
def test_kernel_cokernel_examples(f, ker, coker):
    assert kernel_cokernel(IntMatrix.from_rows(f)) == (ker, coker)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 2).flatmap(
    lambda b: st.integers(1, 3).flatmap(
        lambda a: st.lists(st.lists(st.integers(-4, 4), min_size=a, max_size=a),
                           min_size=b, max_size=b))))
def test_cokernel_matches_enumeration(rows):
    _, coker = kernel_cokernel(IntMatrix.from_rows(rows))
    assert coker == cokernel_by_enumeration(rows)


def test_direct_sum_examples():
    assert direct_sum([cyclic(4), cyclic(6)]) == AbelianGroup(0, (2, 12))
    assert direct_sum([Z, cyclic(6)]) == AbelianGroup(1, (6,))
    assert direct_sum([]) == ZERO


groups = st.builds(lambda r, fs: AbelianGroup.from_factors(r, fs),
                   st.integers(0, 3), st.lists(st.integers(2, 30), max_size=4))


@settings(max_examples=100, deadline=None)
@given(st.lists(groups, max_size=5), st.randoms())
def test_direct_sum_commutative(gs, rnd):
    shuffled = list(gs)
    rnd.shuffle(shuffled)
    assert direct_sum(gs) == direct_sum(shuffled)


@settings(max_examples=100, deadline=None)
@given(groups, groups, groups)
def test_direct_sum_associative(a, b, c):
    assert direct_sum([direct_sum([a, b]), c]) == direct_sum([a, direct_sum([b, c])])


def test_is_isomorphic():
    assert is_isomorphic(AbelianGroup(0, (2, 12)), direct_sum([cyclic(4), cyclic(6)]))
    assert not is_isomorphic(Z, ZERO)
    assert is_isomorphic(cyclic(6), cyclic(6))


def test_group_invariants_enforced():
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroup(-1)


def test_from_factors_normalizes():
    assert AbelianGroup.from_factors(0, [0, 1, -6, 10]) == AbelianGroup(1, (2, 30))
    assert cyclic(0) == Z and cyclic(1) == ZERO and cyclic(-4) == cyclic(4)


def test_rendering():
    assert str(ZERO) == "0"
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z_2 + Z_4"
    assert str(Z) == "Z"


def test_intmatrix_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_det_matches_cofactor():
    from oracles import minor_det
    for rows in itertools.product(range(-2, 3), repeat=4):
        m = [list(rows[:2]), list(rows[2:])]
        assert IntMatrix.from_rows(m).det() == minor_det(m, [0, 1], [0, 1])
