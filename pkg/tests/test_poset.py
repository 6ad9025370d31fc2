import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.lattices import boolean_lattice, partition_lattice
from latticehom.poset import (
    GradedPoset,
    PosetError,
    chain_is_valid,
    chains_with_rank_set,
    from_covers,
    maximal_chains,
    mobius,
    rank_selected_subposet,
)


def diamond() -> GradedPoset:
    return from_covers(["0", "a", "b", "1"], [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_diamond_structure():
    P = diamond()
    assert P.height == 2 and P.bottom == 0 and P.top == 3
    assert P.levels == ((0,), (1, 2), (3,))
    assert P.leq(0, 3) and not P.leq(1, 2)
    assert maximal_chains(P) == [(1,), (2,)]
    assert mobius(P, 0, 3) == 1


def test_cycle_is_rejected():
    with pytest.raises(PosetError, match="cycle"):
        from_covers(["a", "b"], [(0, 1), (1, 0)])


def test_ungraded_poset_is_rejected():
    # 0 < a < b < 1 together with 0 < 1 directly
    with pytest.raises(PosetError, match="graded"):
        from_covers(["0", "a", "b", "1"], [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_rank_mismatch_is_rejected():
    with pytest.raises(PosetError):
        from_covers(["0", "a", "1"], [(0, 1), (1, 2)], rank=[0, 2, 3])


def test_json_round_trip():
    P = diamond()
    Q = GradedPoset.from_json(P.to_json())
    assert Q.covers == P.covers and Q.rank == P.rank


@pytest.mark.parametrize("n", range(2, 6))
def test_mobius_of_boolean_and_partition_lattices(n):
    B = boolean_lattice(n)
    assert mobius(B, B.bottom, B.top) == (-1) ** n
    P = partition_lattice(n)
    assert mobius(P, P.bottom, P.top) == (-1) ** (n - 1) * math.factorial(n - 1)


def test_rank_selection_keeps_order():
    B = boolean_lattice(4)
    Q = rank_selected_subposet(B, (1, 3))
    assert Q.height == 3
    assert [len(level) for level in Q.levels] == [1, 4, 4, 1]
    # every atom sits below exactly three 3-subsets
    assert all(len(Q.up[x]) == 3 for x in Q.levels[1])
    with pytest.raises(PosetError):
        rank_selected_subposet(B, (3, 1))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.data())
def test_chain_counts_match_binomials(n, data):
    B = boolean_lattice(n)
    T = sorted(data.draw(st.sets(st.integers(1, n - 1), min_size=1)))
    chains = chains_with_rank_set(B, T)
    cuts = [0, *T]
    expected = math.prod(math.comb(n - a, b - a) for a, b in zip(cuts, cuts[1:]))
    assert len(chains) == expected
    assert all(chain_is_valid(B, c) for c in chains)
