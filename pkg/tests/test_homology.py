import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.homology import (
    ChainVector,
    betti_from_mobius,
    betti_top,
    boundary_apply,
    boundary_component,
    chains_below,
    column_image,
    os_component,
    ribbon_basis_beta,
    ribbon_basis_wh,
    trace_on_basis,
    verify_basis,
    verify_os_relations,
)
from latticehom.lattices import boolean_lattice, graphic_matroid, lattice_of_flats, partition_element, partition_lattice, uniform_matroid
from latticehom.partitions import partitions, permutation_of_type, subsets
from latticehom.repstab import character_beta


def rank_sets(h):
    return [S for S in subsets(tuple(range(1, h))) if S]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_betti_matches_mobius(n):
    L = partition_lattice(n)
    for S in rank_sets(L.height):
        assert betti_top(L, S) == betti_from_mobius(L, S)


def test_small_betti_numbers():
    assert betti_top(partition_lattice(4), (2,)) == 6
    assert betti_top(partition_lattice(4), (1, 2)) == 6
    assert betti_top(boolean_lattice(4), (2,)) == 5


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 5), st.data())
def test_boundary_squares_to_zero(n, data):
    L = boolean_lattice(n)
    S = sorted(data.draw(st.sets(st.integers(1, n - 1), min_size=2)))
    chains = chains_below(L, S)
    picks = data.draw(st.lists(st.sampled_from(chains), min_size=1, max_size=5))
    c = ChainVector((ch, i + 1) for i, ch in enumerate(picks))
    assert boundary_apply(boundary_apply(c)).is_zero()
    assert boundary_apply(c) == sum(
        (boundary_component(c, i) for i in range(1, len(S) + 1)), ChainVector()
    )


def test_boundary_component_range():
    c = ChainVector({(1, 2): 1}, fixed_top=True)
    assert boundary_component(c, 1) == ChainVector({(2,): 1})
    with pytest.raises(ValueError):
        boundary_component(c, 2)


def test_unitriangular_not_identity_witness():
    L = partition_lattice(4)
    rep = verify_basis(ribbon_basis_beta(L, (2,)), L, (2,))
    assert rep.ok and rep.count == rep.betti == 6
    assert rep.incidence_unitriangular and not rep.incidence_identity
    assert rep.identity_witness is not None


def test_whitney_basis_dimensions():
    L = partition_lattice(5)
    wh = ribbon_basis_wh(L, (1, 2))
    assert sum(len(v) for v in wh.values()) == sum(betti_top(L, (1,), u) for u in L.levels[2])
    for u, vecs in wh.items():
        assert verify_basis(vecs, L, (1, 2), top=u).ok


def _hopf(L, n, S):
    vecs = ribbon_basis_beta(L, S)
    chi = character_beta("boolean" if L.name.startswith("B") else "partition", S, n)
    for rho in partitions(n):
        g = permutation_of_type(rho)
        assert trace_on_basis(vecs, L, S, g) == chi(rho), (S, rho)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_trace_on_partition_basis_matches_character(n):
    L = partition_lattice(n)
    for S in rank_sets(L.height):
        _hopf(L, n, S)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_trace_on_boolean_basis_matches_character(n):
    L = boolean_lattice(n)
    for S in rank_sets(L.height):
        _hopf(L, n, S)


def test_os_dimensions_of_k4():
    L = lattice_of_flats(graphic_matroid(4, list(itertools.combinations(range(1, 5), 2))))
    # Poincare polynomial (1 + t)(1 + 2t)(1 + 3t)
    assert [os_component(L, i).dimension for i in range(4)] == [1, 6, 11, 6]
    assert verify_os_relations(L).ok


def test_os_relation_for_uniform_matroid():
    L = lattice_of_flats(uniform_matroid(2, 3))
    a, b, c = range(3)
    total = column_image(L, (b, a)) - column_image(L, (c, a)) + column_image(L, (c, b))
    assert total.is_zero()
    assert os_component(L, 2).dimension == 2


def test_chain_vector_json():
    L = partition_lattice(4)
    v = ribbon_basis_beta(L, (2,))[0]
    data = v.to_json(L)
    assert data["filling"]["rows"] and all(t["coeff"] in ("1", "-1") for t in data["chain_terms"])
    u = partition_element(L, "|12|34|")
    assert L.labels[u] == "|12|34|"
