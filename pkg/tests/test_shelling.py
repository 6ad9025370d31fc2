import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.lattices import boolean_lattice, lattice_of_flats, partition_element, partition_lattice, uniform_matroid
from latticehom.poset import mobius
from latticehom.shelling import (
    descent_positions,
    enumerate_standard_nbc_plus_fillings,
    f_chain,
    f_first,
    f_rib,
    has_no_broken_circuit,
    is_nbc_independent,
    is_nbc_plus,
    label_word,
    minimal_labeling,
    res_S,
    saturated_chains,
    verify_el_labeling,
)


@pytest.mark.parametrize(
    "L", [boolean_lattice(4), partition_lattice(4), lattice_of_flats(uniform_matroid(3, 5))], ids=["B4", "Pi4", "U35"]
)
def test_minimal_labeling_is_el(L):
    rep = verify_el_labeling(L, minimal_labeling(L))
    assert rep.ok, rep.failures


def test_reordered_atoms_still_el():
    L = partition_lattice(4)
    L = L.with_atom_order((5, 4, 3, 2, 1, 0))
    assert verify_el_labeling(L, minimal_labeling(L)).ok


@pytest.mark.parametrize("n", [3, 4, 5])
def test_descending_chains_count_mobius(n):
    L = partition_lattice(n)
    words = [label_word(L, c) for c in saturated_chains(L)]
    desc = [w for w in words if descent_positions(L, w) == tuple(range(1, n - 1))]
    assert len(desc) == abs(mobius(L, L.bottom, L.top))


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(6)), st.sets(st.integers(1, 5)))
def test_chain_ribbon_round_trip(perm, S):
    L = boolean_lattice(6)
    M = f_chain(L, perm)
    F = f_rib(L, M, sorted(S))
    assert f_chain(L, F.entries) == M
    assert F.shape.size == 6


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(5)), st.sets(st.integers(1, 4), min_size=1))
def test_first_chain_restricts_back(perm, S):
    L = boolean_lattice(5)
    S = sorted(S)
    gamma = res_S(L, f_chain(L, perm), S)
    M = f_first(L, gamma)
    assert res_S(L, M, S) == gamma
    # the first extension ascends between the selected ranks
    word = label_word(L, M)
    assert set(descent_positions(L, word)) <= set(S)


def test_nbc_definitions_differ():
    L = partition_lattice(5)
    atoms = [L.atom_id(a) for a in ("12", "35", "45")]
    assert is_nbc_independent(L, atoms)
    # {35, 45} spans 34, which precedes both of them
    assert not has_no_broken_circuit(L, atoms)


def test_nbc_plus_words_are_label_words():
    L = partition_lattice(4)
    words = {label_word(L, c) for c in saturated_chains(L)}
    assert all(is_nbc_plus(L, w) for w in words)
    # a word whose second letter is not the least new atom
    assert not is_nbc_plus(L, (L.atom_id("12"), L.atom_id("23"), L.atom_id("14")))


def test_standard_fillings_have_exact_descents():
    L = partition_lattice(5)
    u = partition_element(L, "|123|45|")
    fills = enumerate_standard_nbc_plus_fillings(L, (1,), top=u)
    assert fills
    for F in fills:
        assert descent_positions(L, F.entries) == (1,)
        assert F.is_standard(L.atom_pos.__getitem__)
