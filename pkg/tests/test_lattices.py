import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.lattices import (
    GuardError,
    Matroid,
    MatroidError,
    atom_order,
    boolean_lattice,
    check_geometric,
    complete_graph_edges,
    d_divisible_boolean,
    graphic_matroid,
    join,
    lattice_of_flats,
    meet,
    partition_element,
    partition_lattice,
    uniform_matroid,
)
from latticehom.poset import PosetError

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(2, 8))
def test_partition_lattice_sizes(n):
    L = partition_lattice(n)
    assert len(L) == BELL[n]
    assert L.height == n - 1
    assert L.n_atoms == n * (n - 1) // 2


@pytest.mark.parametrize("n", range(1, 7))
def test_boolean_lattice_sizes(n):
    L = boolean_lattice(n)
    assert len(L) == 2**n
    assert L.n_atoms == n


def test_size_guards():
    with pytest.raises(GuardError):
        partition_lattice(11)
    with pytest.raises(GuardError):
        boolean_lattice(13)


def test_lattices_are_geometric():
    for L in (boolean_lattice(4), partition_lattice(4), lattice_of_flats(uniform_matroid(3, 5))):
        check_geometric(L)


def test_partition_join_and_meet():
    L = partition_lattice(5)
    a = partition_element(L, "|12|")
    b = partition_element(L, "|23|45|")
    assert L.labels[join(L, [a, b])] == "|123|45|"
    c = partition_element(L, "|123|")
    d = partition_element(L, "|13|45|")
    assert L.labels[meet(L, [c, d])] == "|13|2|4|5|"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sets(st.integers(1, 5), min_size=1), min_size=1, max_size=4))
def test_boolean_join_is_union(sets):
    L = boolean_lattice(5)
    xs = [L.index[tuple(sorted(s))] for s in sets]
    union = tuple(sorted(set().union(*sets)))
    assert L.keys[join(L, xs)] == union


def test_graphic_matroid_of_complete_graph_gives_partition_lattice():
    for n in range(2, 6):
        F = lattice_of_flats(graphic_matroid(n, complete_graph_edges(n)))
        P = partition_lattice(n)
        assert [len(x) for x in F.levels] == [len(x) for x in P.levels]


def test_uniform_matroid_flats():
    L = lattice_of_flats(uniform_matroid(2, 3))
    assert [len(x) for x in L.levels] == [1, 3, 1]
    L = lattice_of_flats(uniform_matroid(3, 5))
    assert [len(x) for x in L.levels] == [1, 5, 10, 1]


def test_matroid_validation():
    with pytest.raises(MatroidError):
        Matroid(["a", "b"], bases=[["a"], ["a", "b"]])
    m = Matroid(["a", "b", "c"], circuits=[["a", "b", "c"]])
    assert m.rank() == 2
    assert Matroid.from_json(m.to_json()).circuits() == m.circuits()


def test_atom_orders():
    L = partition_lattice(4)
    assert atom_order(L, "natural") == tuple(range(6))
    assert atom_order(L, "reverse") == tuple(reversed(range(6)))
    colex = [L.atom_labels[a] for a in atom_order(L, "colex")]
    assert colex == ["12", "13", "23", "14", "24", "34"]
    assert atom_order(L, "34,24,23,14,13,12") == tuple(reversed(range(6)))
    with pytest.raises(PosetError):
        atom_order(L, "12,13")
    M = L.with_atom_order(atom_order(L, "reverse"))
    assert M.atom_pos[L.atom_id("34")] == 0


def test_d_divisible_boolean():
    P = d_divisible_boolean(6, 2)
    assert [len(x) for x in P.levels] == [1, 15, 15, 1]
    with pytest.raises(PosetError):
        d_divisible_boolean(5, 2)


def test_action_preserves_partition_lattice():
    L = partition_lattice(4)
    L.check_action(itertools.permutations(range(4)))
