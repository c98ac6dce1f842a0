from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopf2.lie import (FinLieAlgebra, JacobiError, LieModule, abelian, check_derivation, check_lie_morphism,
                       heis3, nonabelian2, sl2, solv3, trivial_module)
from hopf2.linalg import SparseMat
from hopf2.report import AxiomError


def test_catalog_passes_jacobi():
    for g in (sl2(), heis3(), nonabelian2(), solv3(), abelian(3)):
        assert g.jacobi_witness() is None


def test_antisymmetry_is_filled_in():
    g = sl2()
    assert g.structure(1, 0) == {2: -1}
    assert g.bracket({0: 1}, {0: 1}) == {}


def test_jacobi_failure_names_the_triple():
    with pytest.raises(JacobiError) as info:
        FinLieAlgebra(3, {(0, 1): {1: 1}, (1, 2): {0: 1}})
    assert info.value.witness == (0, 1, 2)


def test_conflicting_brackets_rejected():
    with pytest.raises(JacobiError):
        FinLieAlgebra(2, {(0, 1): {1: 1}, (1, 0): {1: 1}})


def test_adjoint_module_of_sl2():
    g = sl2()
    ad = LieModule(g, 3, [g.ad_matrix(i) for i in range(3)])
    assert ad.act({0: 1}, {1: 1}) == {2: 1}


def test_non_representation_rejected():
    g = nonabelian2()
    with pytest.raises(AxiomError) as info:
        LieModule(g, 1, [[[0]], [[1]]])
    assert info.value.witness == (0, 1)


def test_trivial_module():
    assert trivial_module(heis3(), 2).is_trivial()


def test_morphism_and_derivation_checks():
    g = heis3()
    assert check_lie_morphism(SparseMat.identity(3), g, g) is None
    assert check_lie_morphism(SparseMat.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 0]]), g, g) == (0, 1)
    assert check_derivation(g.ad_matrix(0), g) is None
    assert check_derivation(SparseMat.from_dense([[1, 0, 0], [0, 0, 0], [0, 0, 0]]), g) == (0, 1)


entries = st.integers(-2, 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(entries, min_size=4, max_size=4), st.lists(entries, min_size=4, max_size=4))
def test_matrix_commutators_give_lie_algebras(a, b):
    # span of two 2x2 matrices closed under commutators, via structure constants of gl2
    basis = [SparseMat.from_dense(m) for m in ([[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]],
                                               [[0, 0], [0, 1]])]

    def coords(m):
        d = m.to_dense()
        return {k: c for k, c in enumerate([d[0][0], d[0][1], d[1][0], d[1][1]]) if c}

    bracket = {(i, j): coords(basis[i] @ basis[j] - basis[j] @ basis[i]) for i in range(4) for j in range(i + 1, 4)}
    gl2 = FinLieAlgebra(4, bracket)
    x = {k: Fraction(c) for k, c in enumerate(a) if c}
    y = {k: Fraction(c) for k, c in enumerate(b) if c}
    # the bracket of gl2 agrees with the matrix commutator on arbitrary elements
    X = sum((basis[k].scale(c) for k, c in x.items()), SparseMat.zero(2, 2))
    Y = sum((basis[k].scale(c) for k, c in y.items()), SparseMat.zero(2, 2))
    assert gl2.bracket(x, y) == coords(X @ Y - Y @ X)
