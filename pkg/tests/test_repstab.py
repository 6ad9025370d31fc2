import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.partitions import subsets
from latticehom.repstab import (
    CharacterGuardError,
    RankError,
    character_alpha,
    character_beta,
    character_wh,
    component_bound_check,
    essential_part,
    essential_part_all_twos,
    fixed_chain_count,
    k_statistic,
    scan_beta,
    stability_scan,
    stabilizer_induced_wh,
)
from latticehom.symfunc import ClassFunction, IrrepDecomposition, decompose


def test_known_decompositions():
    assert decompose(character_beta("partition", (2,), 4)).mults == {(4,): 1, (3, 1): 1, (2, 2): 1}
    assert decompose(character_alpha("boolean", (1,), 4)).mults == {(4,): 1, (3, 1): 1}
    assert decompose(character_beta("boolean", (2,), 6)).mults == {(5, 1): 1, (4, 2): 1}
    assert character_beta("partition", (1, 2), 4).degree == 6


def test_fixed_chain_count_identity():
    # the identity fixes every chain: C(4,2) two-subsets of [4]
    assert fixed_chain_count("boolean", 4, (1, 1, 1, 1), (2,)) == 6
    assert fixed_chain_count("partition", 4, (1, 1, 1, 1), (1,)) == 6


@pytest.mark.parametrize("family,n", [("partition", 4), ("partition", 5), ("boolean", 4), ("boolean", 5)])
def test_fixed_point_wh_matches_stabilizer_induction(family, n):
    h = n - 1 if family == "partition" else n
    for S in subsets(tuple(range(1, h + 1))):
        if S:
            assert character_wh(family, S, n) == stabilizer_induced_wh(family, S, n), S


@pytest.mark.parametrize("family,n", [("partition", 6), ("boolean", 6)])
def test_whitney_splits_into_two_rank_selections(family, n):
    h = n - 1 if family == "partition" else n
    for S in subsets(tuple(range(1, h))):
        if not S:
            continue
        rest = S[:-1]
        tail = character_beta(family, rest, n) if rest else ClassFunction.trivial(n)
        assert character_wh(family, S, n) == character_beta(family, S, n) + tail


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["boolean", "partition"]), st.data())
def test_padded_multiplicities_never_decrease(family, data):
    S = tuple(sorted(data.draw(st.sets(st.integers(1, 2), min_size=1))))
    lo = max(S) + 2
    _, decs = scan_beta(family, S, range(lo, lo + 4))
    ns = sorted(decs)
    for a, b in zip(ns, ns[1:]):
        pa, pb = decs[a].padded().mults, decs[b].padded().mults
        assert all(pb.get(lam, 0) >= m for lam, m in pa.items())


def test_all_twos_three_ways():
    for S in [(1,), (2,), (1, 2)]:
        induced, pleth = essential_part_all_twos(S)
        assert induced == pleth == essential_part(S, (2,) * max(S))
    assert essential_part((1,), (2,)).mults == {(2,): 1}


def test_k_statistic_and_component_check():
    assert k_statistic((5, 4, 2)) == 3
    rep = component_bound_check((1, 2), (3,), n_range=range(3, 10))
    assert rep.ok and rep.scan is not None and rep.scan.stable_at == rep.max_size_plus_first_row


def test_stability_scan_verdicts():
    d = lambda n, m: IrrepDecomposition(n, m)  # noqa: E731
    decs = {3: None, 4: d(4, {(2, 2): 1}), 5: d(5, {(3, 2): 1})}
    rep = stability_scan(decs, 4)
    assert rep.verdict == "inconclusive"
    decs[6] = d(6, {(4, 2): 1})
    rep = stability_scan(decs, 4)
    assert rep.verdict == "certified" and rep.stable_at == 4 and rep.witness["padded"] == [2]
    decs[7] = d(7, {(5, 2): 1})
    assert stability_scan(decs, 5).verdict == "refuted"


def test_guards_and_bad_input():
    with pytest.raises(CharacterGuardError):
        character_beta("partition", (1,), 11)
    with pytest.raises(RankError):
        character_beta("boolean", (0,), 4)
    with pytest.raises(ValueError):
        character_beta("cube", (1,), 4)
