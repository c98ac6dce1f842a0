from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopf2.cohomology import (Cochain, ModuleSES, NotClosed, ce_differential, coboundary_shear, cohomology_dim,
                              connecting_hom, differential_matrix, enveloping_skeletal, is_coboundary, splice,
                              splice_report)
from hopf2.crossed import check_hopf_xmod, check_lie_xmod
from hopf2.enveloping import primitives_up_to
from hopf2.functors import check_lie_xmod_iso, functor_p, pu_roundtrip_iso
from hopf2.lie import JacobiError, LieModule, abelian, heis3, nonabelian2, sl2, solv3, trivial_module
from hopf2.linalg import SparseMat, kernel_basis
from hopf2.report import AxiomError

X, Y, Z = 0, 1, 2


def heis3_ses(split=False):
    g = heis3()
    N = [[0, 0], [0, 0]] if split else [[0, 1], [0, 0]]
    zero2 = [[0, 0], [0, 0]]
    I = LieModule(g, 2, [N, zero2, zero2], names=["e1", "e2"])
    V, Q = trivial_module(g), trivial_module(g)
    return g, ModuleSES(V, I, Q, [[1], [0]], [[0, 1]])


ALPHA = Cochain(2, {(Y, Z): {0: 1}})


def sl2_adjoint():
    g = sl2()
    return g, LieModule(g, 3, [g.ad_matrix(i) for i in range(3)])


def test_cochain_is_alternating():
    c = Cochain(2, {(1, 0): {0: 3}})
    assert c.values == {(0, 1): {0: -3}}
    assert c(0, 1) == {0: -3} and c(1, 0) == {0: 3} and c(1, 1) == {}
    with pytest.raises(ValueError):
        Cochain(2, {(0, 0): {0: 1}})
    with pytest.raises(ValueError):
        Cochain(5)


def test_differential_degree_bound():
    g = heis3()
    with pytest.raises(ValueError):
        ce_differential(g, trivial_module(g), Cochain(4))


def test_differential_of_0_cochain_is_the_action():
    g, M = sl2_adjoint()
    v = {0: Fraction(1), 2: Fraction(2)}
    d = ce_differential(g, M, Cochain(0, {(): v}))
    for x in range(3):
        assert d(x) == M.act({x: Fraction(1)}, v)


@pytest.mark.parametrize("g,expected", [(heis3(), [1, 2, 2, 1]), (sl2(), [1, 0, 0, 1]),
                                        (solv3(), [1, 1, 0, 0]), (abelian(3), [1, 3, 3, 1])],
                         ids=["heis3", "sl2", "solv3", "abelian3"])
def test_trivial_cohomology(g, expected):
    M = trivial_module(g)
    assert [cohomology_dim(g, M, p) for p in range(4)] == expected


def test_h3_of_heis3_is_one_dimensional():
    g = heis3()
    assert cohomology_dim(g, trivial_module(g), 3) == 1


def test_euler_characteristic_vanishes():
    g, ses = heis3_ses()
    for g, M in [sl2_adjoint(), (g, ses.i), (solv3(), trivial_module(solv3(), 2))]:
        assert sum((-1) ** p * cohomology_dim(g, M, p) for p in range(4)) == 0


def test_d_squared_on_full_bases():
    g0, ses = heis3_ses()
    fixtures = [(g0, ses.v), (g0, ses.i), (g0, ses.q), sl2_adjoint(), (nonabelian2(), trivial_module(nonabelian2())),
                (solv3(), trivial_module(solv3()))]
    for g, M in fixtures:
        for p in range(3):
            prod = differential_matrix(g, M, p + 1) @ differential_matrix(g, M, p)
            assert not prod.entries


coeff = st.integers(-4, 4)


@settings(max_examples=40, deadline=None)
@given(st.lists(coeff, min_size=9, max_size=9))
def test_d_squared_random_1_cochains(cs):
    g, M = sl2_adjoint()
    c = Cochain(1, {(x,): {k: cs[3 * x + k] for k in range(3)} for x in range(3)})
    assert ce_differential(g, M, ce_differential(g, M, c)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.lists(coeff, min_size=6, max_size=6))
def test_d_squared_random_1_cochains_heis3(cs):
    g, ses = heis3_ses()
    c = Cochain(1, {(x,): {0: cs[2 * x], 1: cs[2 * x + 1]} for x in range(3)})
    assert ce_differential(g, ses.i, ce_differential(g, ses.i, c)).is_zero()


def test_ses_checks():
    g, ses = heis3_ses()
    assert ses.report().passed
    with pytest.raises(AxiomError):
        ModuleSES(ses.v, ses.i, ses.q, [[0], [1]], [[0, 1]])


def test_connecting_hom_split_is_coboundary():
    g, ses = heis3_ses(split=True)
    theta = connecting_hom(g, ses, ALPHA)
    assert is_coboundary(g, ses.v, theta)
    assert ce_differential(g, ses.v, theta).is_zero()


def test_connecting_hom_nonsplit_is_nonzero_class():
    g, ses = heis3_ses()
    theta = connecting_hom(g, ses, ALPHA)
    assert theta.values == {(X, Y, Z): {0: 1}}
    assert not is_coboundary(g, ses.v, theta)


def test_connecting_hom_lift_independence():
    g, ses = heis3_ses()
    t1 = connecting_hom(g, ses, ALPHA)
    t2 = connecting_hom(g, ses, ALPHA, lift=SparseMat.from_dense([[1], [1]]))
    assert is_coboundary(g, ses.v, t1 - t2)
    with pytest.raises(AxiomError):
        connecting_hom(g, ses, ALPHA, lift=SparseMat.from_dense([[1], [0]]))


def test_connecting_hom_rejects_open_alpha():
    g = solv3()
    V = trivial_module(g)
    I = trivial_module(g, 2)
    ses = ModuleSES(V, I, trivial_module(g), [[1], [0]], [[0, 1]])
    with pytest.raises(NotClosed):
        connecting_hom(g, ses, Cochain(2, {(1, 2): {0: 1}}))


def test_splice_of_zero_alpha_split_is_direct_sum():
    g, ses = heis3_ses(split=True)
    x = splice(g, ses, Cochain(2))
    assert splice_report(g, x).passed
    # n = Q + g with Q central
    assert all(not x.n.structure(0, j) for j in range(4))


def test_splice_heis3():
    g, ses = heis3_ses()
    x = splice(g, ses, ALPHA)
    rep = splice_report(g, x)
    assert rep.passed
    assert check_lie_xmod(x).passed
    K = kernel_basis(x.mu)
    assert K == [{0: 1}]


def test_splice_rejects_non_closed_alpha():
    g = solv3()
    ses = ModuleSES(trivial_module(g), trivial_module(g, 2), trivial_module(g), [[1], [0]], [[0, 1]])
    with pytest.raises(NotClosed) as info:
        splice(g, ses, Cochain(2, {(1, 2): {0: 1}}))
    assert info.value.witness == ("a", "b", "c")
    assert isinstance(info.value, JacobiError)


def test_coboundary_shear_is_a_morphism():
    g, ses = heis3_ses()
    b = Cochain(1, {(Z,): {0: 1}})
    x, y, rho, sigma, rep = coboundary_shear(g, ses, ALPHA, b)
    assert rep.passed
    assert x.alpha.values != y.alpha.values


def test_enveloping_skeletal():
    g, ses = heis3_ses()
    X = enveloping_skeletal(g, ses, ALPHA, 3)
    prims = primitives_up_to(X.b, 3)
    assert sorted(tuple(p.coords) for p in prims) == [(((0,),)), (((1,),))]
    assert check_hopf_xmod(X, 3).passed
    x = X.source
    y = functor_p(X, 3)
    rho, sigma = pu_roundtrip_iso(x, y)
    assert check_lie_xmod_iso(x, y, rho, sigma).passed
