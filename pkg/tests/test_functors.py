from fractions import Fraction

import pytest

from hopf2.crossed import (GroupXMod, HopfXMod, LieTwoAlg, LieXMod, check_crossed_morphism, check_group_xmod,
                           check_hopf_cocomod, check_hopf_xmod, check_lie_xmod, check_precat1, liexmod_to_2lie,
                           precat1_from_lie2, find_group_xmod_isomorphism)
from hopf2.functors import (FunctorReport, cat1_roundtrip_iso, cat1hopf_to_xmod, character_group,
                            check_hopf_xmod_iso, check_lie_xmod_iso, functor_chi, functor_fun, functor_kg, functor_p,
                            functor_u, grouplike_xmod, lemma4_report, pu_roundtrip_iso, star_action, u_morphism,
                            up_roundtrip_iso)
from hopf2.groups import cyclic, find_isomorphism, symmetric, trivial_group
from hopf2.hopf import Character, ad, group_algebra, grouplikes, tensor
from hopf2.lie import FinLieAlgebra, abelian, heis3, nonabelian2
from hopf2.linalg import SparseMat


def e(k):
    return {k: Fraction(1)}


def a3_s3():
    return GroupXMod.conjugation(symmetric(3), [0, 1, 2])


def z_heis3():
    return LieXMod.ideal(heis3(), [e(2)], names=["z"])


def nonab2_ideal():
    return LieXMod.ideal(nonabelian2(), [e(1)], names=["b"])


def zero_module_xmod():
    return LieXMod(abelian(1), nonabelian2(), SparseMat.zero(2, 1), [SparseMat.from_dense([[1]]), SparseMat.zero(1, 1)])


# -- U and P ---------------------------------------------------------------------------

def test_u_of_zero_xmod_is_unit_inclusion():
    g = heis3()
    x = LieXMod(FinLieAlgebra(0), g, SparseMat.zero(3, 0), [SparseMat.zero(0, 0)] * 3)
    X = functor_u(x, 3)
    assert X.b.basis(3) == [()]
    assert X.gamma(()) == X.h.one()
    assert check_hopf_xmod(X, 3).passed


def test_u_of_heis3_center_passes_at_degree_3():
    rep = check_hopf_xmod(functor_u(z_heis3(), 3), 3)
    assert rep.passed
    assert {"module_algebra", "module_coalgebra", "ii_equivariance", "iii_peiffer"} <= {c.name for c in rep.checks}


def test_identity_ii_is_equivariance_on_generators():
    # on degree-one monomials (ii) reads mu(n.m) = [n, mu(m)]
    x = z_heis3()
    X = functor_u(x, 1)
    for i in range(3):
        gen = X.gamma_apply(X.phi((i,), (0,)))
        assert gen == ad(X.h, e((i,)), X.gamma((0,)))
        assert {k[0]: c for k, c in gen.items()} == x.mu.matvec(x.action[i].column(0))


@pytest.mark.parametrize("make", [z_heis3, nonab2_ideal, zero_module_xmod], ids=["heis3", "nonab2", "zero"])
def test_p_of_u_recovers_input(make):
    x = make()
    y = functor_p(functor_u(x, 3), 3)
    assert check_lie_xmod(y).passed
    rho, sigma = pu_roundtrip_iso(x, y)
    assert check_lie_xmod_iso(x, y, rho, sigma).passed


def test_p_of_group_algebra_identity_is_zero():
    H = group_algebra(cyclic(2))
    y = functor_p(HopfXMod(H, H, e, lambda p, q: ad(H, e(p), e(q))))
    assert y.m.dim == 0 and y.n.dim == 0


def test_p_of_base_field_is_zero():
    k = group_algebra(trivial_group())
    y = functor_p(HopfXMod(k, k, e, lambda p, q: e(q)))
    assert y.m.dim == y.n.dim == 0


def test_u_of_p_recovers_enveloping_input():
    X = functor_u(z_heis3(), 3)
    Y = functor_u(functor_p(X, 3), 3)
    rho, sigma = up_roundtrip_iso(X, Y)
    assert check_hopf_xmod_iso(Y, X, rho, sigma, 3).passed


def test_u_is_functorial_on_morphisms():
    x = z_heis3()
    y = LieXMod.ideal(heis3(), [e(0), e(1), e(2)], names=list("xyz"))
    rho, sigma = SparseMat.from_dense([[0], [0], [1]]), SparseMat.identity(3)
    assert check_crossed_morphism(x, y, rho, sigma).passed
    X, Y = functor_u(x, 3), functor_u(y, 3)
    R, S = u_morphism(X, Y, rho, sigma)
    assert check_crossed_morphism(X, Y, R, S, degree=3).passed


# -- group algebras and group-likes ---------------------------------------------------

def test_kg_of_trivial_m_is_unit_inclusion():
    X = functor_kg(GroupXMod(trivial_group(), cyclic(3), [0], [[0]] * 3))
    assert X.b.dim == 1 and X.gamma(0) == X.h.one()
    assert check_hopf_xmod(X).passed


def test_kg_of_a3_s3_passes_exhaustively():
    rep = check_hopf_xmod(functor_kg(a3_s3()))
    assert rep.passed


@pytest.mark.parametrize("x", [a3_s3(), GroupXMod.conjugation(symmetric(3), range(6)),
                               GroupXMod(trivial_group(), cyclic(3), [0], [[0]] * 3)],
                         ids=["a3_s3", "s3_id", "trivial_c3"])
def test_grouplikes_of_kg_recover_input(x):
    y = grouplike_xmod(functor_kg(x))
    assert check_group_xmod(y).passed
    rho, sigma = find_group_xmod_isomorphism(x, y)
    assert check_crossed_morphism(x, y, rho, sigma).passed


def test_grouplikes_of_base_field_xmod_are_trivial():
    k = group_algebra(trivial_group())
    y = grouplike_xmod(HopfXMod(k, k, e, lambda p, q: e(q)))
    assert y.m.order == y.n.order == 1


def test_linearized_action_lands_in_grouplikes():
    X = functor_kg(a3_s3())
    gb = [g.coords for g in grouplikes(X.b)]
    for h in grouplikes(X.h):
        for b in gb:
            v = X.act(h.coords, b)
            assert X.b.coproduct(v) == tensor(v, v) and v in gb


@pytest.mark.parametrize("g", [cyclic(2), cyclic(3), symmetric(3)], ids=["C2", "C3", "S3"])
def test_group_algebras_have_no_primitives(g):
    H = group_algebra(g)
    y = functor_p(HopfXMod(H, H, e, lambda p, q: ad(H, e(p), e(q))))
    assert y.m.dim == 0


# -- functions and characters ---------------------------------------------------------------

def test_fun_of_trivial_m_is_degenerate():
    co = functor_fun(GroupXMod(trivial_group(), cyclic(2), [0], [[0]] * 2))
    assert co.l.dim == 1 and check_hopf_cocomod(co).passed


def test_fun_coaction_is_transpose_of_action():
    x = a3_s3()
    co = functor_fun(x)
    for m in range(3):
        want = {(n, mp): 1 for n in range(6) for mp in range(3) if x.action[n][mp] == m}
        assert co.rho(m) == want
    assert check_hopf_cocomod(co).passed


def test_chi_of_fun_recovers_input():
    x = a3_s3()
    y = functor_chi(functor_fun(x))
    assert check_group_xmod(y).passed
    rho, sigma = find_group_xmod_isomorphism(x, y)
    assert check_crossed_morphism(x, y, rho, sigma).passed


def test_chi_of_base_field_is_trivial():
    y = functor_chi(functor_fun(GroupXMod.conjugation(trivial_group(), [0])))
    assert y.m.order == y.n.order == 1


def test_character_group_of_functions_on_s3():
    S3 = symmetric(3)
    from hopf2.hopf import function_algebra
    G, chars = character_group(function_algebra(S3))
    assert find_isomorphism(G, S3) is not None and not G.is_abelian()


def test_star_action_unit_and_character_laws():
    co = functor_fun(a3_s3())
    K, L = co.k, co.l
    from hopf2.hopf import characters
    eps = Character(K, K.counit_vec)
    for phi in characters(L):
        assert star_action(co, eps, phi) == phi
    rep = lemma4_report(co)
    assert rep.passed and len(rep.checks) == 8


# -- pre-cat1 --------------------------------------------------------------------------

def test_cat1_recovers_u_of_heis3_center():
    x = z_heis3()
    p = precat1_from_lie2(liexmod_to_2lie(x), degree=3)
    assert check_precat1(p).passed
    y = cat1hopf_to_xmod(p, 3)
    assert check_hopf_xmod(y, 3).passed
    rho, sigma = cat1_roundtrip_iso(x, y)
    assert check_hopf_xmod_iso(functor_u(x, 3), y, rho, sigma, 3).passed


def test_cat1_of_identity_is_unit_inclusion():
    g = heis3()
    I3 = SparseMat.identity(3)
    y = cat1hopf_to_xmod(precat1_from_lie2(LieTwoAlg(g, g, I3, I3, I3), degree=2), 2)
    assert y.b.basis(2) == [()] and y.gamma(()) == y.h.one()
    assert check_hopf_xmod(y, 2).passed


def test_cat1_rejects_finite_input():
    from hopf2.crossed import PreCat1Hopf
    from hopf2.report import AxiomError
    H = group_algebra(cyclic(2))
    with pytest.raises(AxiomError):
        cat1hopf_to_xmod(PreCat1Hopf(H, H, e, e, e))


def test_functor_report_serializes():
    X = functor_kg(a3_s3())
    fr = FunctorReport("kg", "a3_s3", X, check_hopf_xmod(X))
    d = fr.to_dict()
    assert d["passed"] and d["functor"] == "kg" and d["report"]["checks"]
