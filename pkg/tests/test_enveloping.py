from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopf2.enveloping import (EnvelopingAction, EnvelopingAlgebra, UElement, extend_action, monomials, pbw_product,
                              primitives_up_to, u_antipode, u_coproduct, verify_enveloping)
from hopf2.lie import NotADerivation, abelian, heis3, nonabelian2, sl2, solv3
from hopf2.linalg import SparseMat

E, F, H = 0, 1, 2


def u(U, terms):
    return UElement(U, {k: Fraction(v) for k, v in terms.items()})


def rep_of(U, mats, elem):
    """Evaluate a PBW element in a matrix representation of the Lie algebra."""
    n = mats[0].shape[0]
    total = sympy.zeros(n, n)
    for mono, c in elem.coords.items():
        m = sympy.eye(n)
        for g in mono:
            m = m * mats[g]
        total += sympy.Rational(c.numerator, c.denominator) * m
    return total


SL2_REP = [sympy.Matrix([[0, 1], [0, 0]]), sympy.Matrix([[0, 0], [1, 0]]), sympy.Matrix([[1, 0], [0, -1]])]
HEIS_REP = [sympy.Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]), sympy.Matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
            sympy.Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])]


def test_unit_is_neutral():
    U = EnvelopingAlgebra(sl2())
    x = u(U, {(E,): 1})
    assert pbw_product(x, u(U, {(): 1})) == x


def test_sl2_straightening():
    U = EnvelopingAlgebra(sl2())
    fe = pbw_product(u(U, {(F,): 1}), u(U, {(E,): 1}))
    assert fe.coords == {(E, F): 1, (H,): -1}


def test_heis3_straightening():
    U = EnvelopingAlgebra(heis3())
    yx = pbw_product(u(U, {(1,): 1}), u(U, {(0,): 1}))
    assert yx.coords == {(0, 1): 1, (2,): -1}


def test_coproduct_examples():
    U = EnvelopingAlgebra(sl2())
    assert u_coproduct(u(U, {(): 1})) == {((), ()): 1}
    assert u_coproduct(u(U, {(E,): 1})) == {((E,), ()): 1, ((), (E,)): 1}
    assert u_coproduct(u(U, {(E, F): 1})) == {((E, F), ()): 1, ((E,), (F,)): 1, ((F,), (E,)): 1,
                                             ((), (E, F)): 1}


def test_antipode_examples():
    U = EnvelopingAlgebra(sl2())
    assert u_antipode(u(U, {(): 1})).coords == {(): 1}
    assert u_antipode(u(U, {(E,): 1})).coords == {(E,): -1}
    assert u_antipode(u(U, {(E, F): 1})).coords == {(E, F): 1, (H,): -1}


def test_primitives_examples():
    U = EnvelopingAlgebra(sl2())
    assert sorted(tuple(p.coords) for p in primitives_up_to(U, 1)) == [((E,),), ((F,),), ((H,),)]
    prims = primitives_up_to(U, 3)
    assert len(prims) == 3 and all(p.degree == 1 for p in prims)
    (x,) = primitives_up_to(abelian(1), 4)
    assert list(x.coords) == [(0,)]
    with pytest.raises(ValueError):
        primitives_up_to(U, 0)


@pytest.mark.parametrize("g", [sl2(), heis3(), nonabelian2(), abelian(2)], ids=lambda g: "x".join(g.names))
def test_primitives_have_dimension_of_g(g):
    assert len(primitives_up_to(g, 4)) == g.dim


@pytest.mark.parametrize("g", [heis3(), nonabelian2(), solv3()], ids=lambda g: "x".join(g.names))
def test_hopf_suite_small_algebras(g):
    assert verify_enveloping(EnvelopingAlgebra(g), 3).passed


mono3 = st.lists(st.integers(0, 2), max_size=4).map(lambda xs: tuple(sorted(xs)))
elements3 = st.dictionaries(mono3, st.integers(-3, 3).filter(bool), max_size=3)


@settings(max_examples=40, deadline=None)
@given(elements3, elements3)
def test_product_matches_sl2_representation(a, b):
    U = EnvelopingAlgebra(sl2())
    A, B = u(U, a), u(U, b)
    assert rep_of(U, SL2_REP, pbw_product(A, B)) == rep_of(U, SL2_REP, A) * rep_of(U, SL2_REP, B)


@settings(max_examples=40, deadline=None)
@given(elements3, elements3)
def test_product_matches_heisenberg_representation(a, b):
    U = EnvelopingAlgebra(heis3())
    A, B = u(U, a), u(U, b)
    assert rep_of(U, HEIS_REP, pbw_product(A, B)) == rep_of(U, HEIS_REP, A) * rep_of(U, HEIS_REP, B)


@settings(max_examples=30, deadline=None)
@given(elements3, elements3, elements3)
def test_associativity_random(a, b, c):
    U = EnvelopingAlgebra(sl2())
    A, B, C = u(U, a), u(U, b), u(U, c)
    assert pbw_product(pbw_product(A, B), C) == pbw_product(A, pbw_product(B, C))


@settings(max_examples=30, deadline=None)
@given(mono3, mono3)
def test_filtration_and_top_degree(a, b):
    U = EnvelopingAlgebra(sl2())
    p = pbw_product(u(U, {a: 1}), u(U, {b: 1}))
    assert p.degree <= len(a) + len(b)
    top = {m: c for m, c in p.coords.items() if len(m) == len(a) + len(b)}
    assert top == {tuple(sorted(a + b)): 1}


def test_monomial_count():
    assert len(monomials(3, 4)) == 35


def _derivation_action():
    # n = 1-dim acting on heis3 by the derivation x -> x, y -> y, z -> 2z
    n, m = abelian(1, names=["t"]), heis3()
    D = SparseMat.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    return n, m, [D]


def test_extend_action_examples():
    n, m, act = _derivation_action()
    Un, Um = EnvelopingAlgebra(n), EnvelopingAlgebra(m)
    b = u(Um, {(0, 1): 1, (2,): 3})
    assert extend_action(n, m, act, u(Un, {(): 1}), b) == b
    t = u(Un, {(0,): 1})
    x, y = u(Um, {(0,): 1}), u(Um, {(1,): 1})
    left = extend_action(n, m, act, t, pbw_product(x, y))
    right = pbw_product(extend_action(n, m, act, t, x), y) + pbw_product(x, extend_action(n, m, act, t, y))
    assert left == right
    tt = u(Un, {(0, 0): 1})
    assert extend_action(n, m, act, tt, b) == extend_action(n, m, act, t, extend_action(n, m, act, t, b))


def test_extend_action_rejects_non_derivation():
    n, m = abelian(1), heis3()
    bad = [SparseMat.from_dense([[1, 0, 0], [0, 0, 0], [0, 0, 0]])]
    Un, Um = EnvelopingAlgebra(n), EnvelopingAlgebra(m)
    with pytest.raises(NotADerivation):
        extend_action(n, m, bad, u(Un, {(0,): 1}), u(Um, {(0,): 1}))


def test_action_is_module_coalgebra():
    n, m, act = _derivation_action()
    Un, Um = EnvelopingAlgebra(n), EnvelopingAlgebra(m)
    phi = EnvelopingAction(Un, Um, act)
    for h in Un.basis(2):
        for b in Um.basis(3):
            left = Um.coproduct(phi(h, b))
            right = {}
            for (h1, h2), c in Un.coproduct({h: Fraction(1)}).items():
                for (b1, b2), d in Um.coproduct({b: Fraction(1)}).items():
                    for k1, x in phi(h1, b1).items():
                        for k2, y in phi(h2, b2).items():
                            right[(k1, k2)] = right.get((k1, k2), 0) + c * d * x * y
            assert left == {k: v for k, v in right.items() if v}
