from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticehom.partitions import partitions
from latticehom.symfunc import (
    ClassFunction,
    DegreeGuardError,
    IrrepDecomposition,
    NotACharacterError,
    SymFunc,
    character_table,
    decompose,
    irrep_dimension,
    mn_character,
    plethysm,
    ribbon_schur,
)
from latticehom.tableaux import syt_count


def test_known_character_values():
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((3, 1), (2, 2)) == -1
    assert mn_character((2, 2), (3, 1)) == -1
    assert irrep_dimension((3, 2, 1)) == 16


@pytest.mark.parametrize("n", range(1, 8))
def test_orthonormality(n):
    irr = [ClassFunction.irreducible(lam) for lam in partitions(n)]
    for i, a in enumerate(irr):
        for j, b in enumerate(irr):
            assert a.inner(b) == (1 if i == j else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_dimensions_are_syt_counts(n):
    table = character_table(n)
    for lam in partitions(n):
        assert table[lam][(1,) * n] == syt_count(lam)


def test_decompose_regular_representation():
    n = 4
    reg = ClassFunction.from_function(n, lambda rho: 24 if rho == (1, 1, 1, 1) else 0)
    dec = decompose(reg)
    assert dec.mults == {lam: syt_count(lam) for lam in partitions(n)}
    assert dec.dimension == 24


def test_decompose_rejects_virtual_and_large():
    chi = ClassFunction.trivial(3) - ClassFunction.irreducible((2, 1))
    with pytest.raises(NotACharacterError):
        decompose(chi)
    assert decompose(chi, allow_virtual=True).mults == {(3,): 1, (2, 1): -1}
    with pytest.raises(NotACharacterError):
        decompose(ClassFunction.trivial(3).scaled(Fraction(1, 2)))
    with pytest.raises(DegreeGuardError):
        decompose(ClassFunction.trivial(13))


def test_padding_round_trip():
    d = IrrepDecomposition(6, {(4, 2): 1, (3, 2, 1): 2})
    assert d.padded().mults == {(2,): 1, (2, 1): 2}
    assert d.padded().repad(6) == d
    with pytest.raises(ValueError):
        d.padded().repad(3)
    assert d.max_first_row() == 4 and d.max_size_plus_first_row() == 10


def test_plethysms():
    h2 = SymFunc.h(2)
    assert plethysm(h2, h2).schur() == {(4,): 1, (2, 2): 1}
    assert plethysm(SymFunc.e(2), h2).schur() == {(3, 1): 1}
    assert plethysm(SymFunc.h(3), h2).schur() == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}


def test_ribbon_schur():
    assert ribbon_schur((1,), 3).schur() == {(2, 1): 1}
    assert ribbon_schur((), 4) == SymFunc.h(4)
    assert ribbon_schur((1, 2, 3), 4) == SymFunc.e(4)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_basis_round_trips(n, data):
    lam = data.draw(st.sampled_from(partitions(n)))
    f = SymFunc.schur_of(lam)
    assert f.schur() == {lam: 1}
    for basis in ("schur", "homogeneous", "powersum"):
        assert SymFunc.from_basis(n, basis, f.coefficients(basis)) == f
    assert SymFunc.from_character(f.character()) == f


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4))
def test_product_degree_and_pieri(a, b):
    f = SymFunc.h(a) * SymFunc.h(b)
    # Pieri: h_a h_b = sum of s_(a+b-k, k), k <= min(a, b)
    expected = {tuple(p for p in (a + b - k, k) if p): 1 for k in range(min(a, b) + 1)}
    assert f.schur() == expected
