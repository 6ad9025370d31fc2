import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.partitions import descent_set, partitions, permutations_with_descent_set
from latticehom.tableaux import (
    GroupSumCapError,
    RibbonFilling,
    RibbonShape,
    TabloidVector,
    YoungTableau,
    act,
    column_with_two_swappable,
    polytabloid,
    ribbon_of,
    standard_tableaux,
    sw_statistic,
    swappable_analysis,
    swappable_pairs,
    syt_count,
    syt_count_with_descent_set,
    whitney_ribbon,
    young_symmetrizer_apply,
)


def test_ribbon_geometry():
    R = ribbon_of((2, 5), 7)
    assert R.rows == (2, 3, 2) and str(R) == "Rib(2,3,2)"
    assert R.row_starts == (2, 5)
    assert R.columns == ((0,), (1, 2), (3,), (4, 5), (6,))
    assert R.boxes_with_box_below == 2
    assert whitney_ribbon((2, 4)) == RibbonShape((2, 2))
    with pytest.raises(ValueError):
        ribbon_of((0,), 3)


def test_filling_standardness_and_merge():
    F = RibbonFilling.from_rows([[1, 3], [2, 4, 5]])
    assert F.is_standard()
    G = F.merge_rows(1)
    assert G.shape.rows == (5,) and G.entries == F.entries
    with pytest.raises(ValueError):
        F.merge_rows(2)
    with pytest.raises(ValueError):
        RibbonFilling.from_rows([[1, 1]])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.data())
def test_standard_ribbon_fillings_count_descent_classes(n, data):
    S = tuple(sorted(data.draw(st.sets(st.integers(1, n - 1)) if n > 1 else st.just(set()))))
    shape = ribbon_of(S, n)
    count = sum(
        1 for w in itertools.permutations(range(1, n + 1)) if RibbonFilling(shape, w).is_standard()
    )
    assert count == permutations_with_descent_set(n, S)


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_length_counts(n):
    assert sum(syt_count(lam) ** 2 for lam in partitions(n)) == math.factorial(n)
    for lam in partitions(n):
        tabs = standard_tableaux(lam)
        assert len(tabs) == syt_count(lam)
        assert all(T.is_standard() for T in tabs)


@pytest.mark.parametrize("n", range(1, 7))
def test_descent_classes_partition_tableaux(n):
    for lam in partitions(n):
        total = sum(syt_count_with_descent_set(lam, S) for k in range(n) for S in itertools.combinations(range(1, n), k))
        assert total == syt_count(lam)


def test_polytabloid_of_column():
    F = RibbonFilling.from_rows([[3], [2], [1]])
    v = polytabloid(F)
    assert len(v) == 6
    assert v[(frozenset({3}), frozenset({2}), frozenset({1}))] == 1
    assert v[(frozenset({2}), frozenset({3}), frozenset({1}))] == -1


def test_action_on_fillings_and_tabloids():
    F = RibbonFilling.from_rows([[1, 3], [2, 4, 5]])
    G = act((1, 0, 2, 3, 4), F)
    assert G.entries == (2, 3, 1, 4, 5)
    v = polytabloid(F)
    assert act((1, 0, 2, 3, 4), v) == polytabloid(G)


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 2, 1)])
def test_symmetrizer_does_not_kill_own_polytabloid(lam):
    T = standard_tableaux(lam)[0]
    v = polytabloid(T)
    assert not young_symmetrizer_apply(T, v, degree=sum(lam)).is_zero()


def test_symmetrizer_kills_pair_in_row_and_column():
    # 1 and 2 share a column of the filling and a row of T
    F = RibbonFilling.from_rows([[2], [1]])
    T = YoungTableau.of([[1, 2]])
    assert young_symmetrizer_apply(T, polytabloid(F), degree=2).is_zero()


def test_symmetrizer_cap():
    T = YoungTableau.of([[1, 2, 3, 4, 5]])
    with pytest.raises(GroupSumCapError):
        young_symmetrizer_apply(T, TabloidVector(), degree=5, cap=10)


def test_swappable_analysis():
    T = YoungTableau.of([[1, 2, 4, 6, 9], [3, 5], [7, 8]])
    u = [(1,), (2, 7), (4, 9), (3, 5, 6), (8,)]
    assert swappable_pairs(T, u) == [(4, 9)]
    F = RibbonFilling.from_rows([[(4, 9), (3, 5)], [(2, 7), (3, 6)]])
    rep = swappable_analysis(T, u, F)
    assert rep.swappable_boxes == (0,)
    assert rep.ambiguous_boxes_a == (1, 3) and rep.ambiguous_boxes_b == (2,)
    with pytest.raises(ValueError):
        swappable_analysis(T, u, RibbonFilling.from_rows([[(4, 9), (4, 9)]]))


def test_column_with_two_swappable():
    shape = RibbonShape((2, 2))
    assert column_with_two_swappable(shape, [1, 2]) == (1, 2)
    assert column_with_two_swappable(shape, [0, 3]) is None


def test_sw_statistic_checks_rank():
    assert sw_statistic([(1, 2), (3, 4), (5,), (6,), (7,)], (1, 2)) == 4 * 2 - 2 + 2 - 4 - 0 - (4 - 4)
    with pytest.raises(ValueError):
        sw_statistic([(1, 2)], (2,))


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(1, 7)))
def test_descent_set_of_word(w):
    D = descent_set(w)
    assert all(w[i - 1] > w[i] for i in D)
    assert all(w[i - 1] < w[i] for i in range(1, 6) if i not in D)
