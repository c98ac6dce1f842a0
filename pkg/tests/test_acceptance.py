"""Acceptance criteria 1-9, each run on the shipped fixtures with its time budget.

A verdict line per criterion is printed in the terminal summary (see conftest).
"""

import itertools
import re
import time
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from hopf2.cli import EXIT_FAIL, EXIT_PASS, run_command
from hopf2.cohomology import connecting_hom, differential_matrix, enveloping_skeletal, is_coboundary, splice, \
    splice_report
from hopf2.crossed import (HopfCoComod, check_crossed_morphism, check_group_xmod, check_hopf_cocomod, check_hopf_xmod,
                           check_lie_two_alg, check_lie_xmod, check_precat1, check_two_group, compose_arrows_group,
                           find_group_xmod_isomorphism, liexmod_to_2lie, twogroup_to_xmod, twolie_to_liexmod,
                           xmod_to_2group)
from hopf2.enveloping import EnvelopingAlgebra, verify_enveloping
from hopf2.functors import (cat1_roundtrip_iso, cat1hopf_to_xmod, check_hopf_xmod_iso, check_lie_xmod_iso, functor_chi,
                            functor_fun, functor_kg, functor_p, functor_u, grouplike_xmod, lemma4_report,
                            pu_roundtrip_iso)
from hopf2.hopf import adjoint_coaction, function_algebra, group_algebra, primitives, verify_hopf
from hopf2.io import build, load, load_document
from hopf2.linalg import SparseMat, kernel_basis, rank

FIX = Path(__file__).resolve().parent.parent / "fixtures"

CONDITIONS = ["gamma_morphism", "module_unit", "module_associative", "module_algebra", "module_algebra_unit",
              "module_coalgebra", "module_coalgebra_counit", "ii_equivariance", "iii_peiffer"]


def fx(name):
    return str(FIX / name)


def obj(name, context=None):
    return load(fx(name), context)[1]


def cli(*argv):
    return run_command([a if not a.endswith(".json") else fx(a) for a in argv])


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f} s, budget {self.seconds} s"


def _all_conditions_pass(rep):
    names = [c.name for c in rep.checks]
    for cond in CONDITIONS:
        matching = [n for n in names if n.startswith(cond)]
        assert matching, f"{cond} was not checked"
        assert all(rep.get(n).passed for n in matching), rep.failures()


# -- 1 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_c1_u_of_heis3_center():
    with Budget(10):
        X = functor_u(obj("heis3_xmod.json"), 3)
        _all_conditions_pass(check_hopf_xmod(X, 3))
    # the shipped document of the same object checks clean through the CLI
    assert cli("check", "heis3_u_xmod.json", "--max-degree", "3").exit_code == EXIT_PASS


@pytest.mark.criterion(1)
def test_c1_kg_of_a3_s3():
    with Budget(10):
        X = functor_kg(obj("a3_s3_xmod.json"))
        _all_conditions_pass(check_hopf_xmod(X))
    assert cli("check", "a3_s3_kg_xmod.json").exit_code == EXIT_PASS


# -- 2 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(2)
@pytest.mark.parametrize("name", ["heis3_xmod.json", "nonab2_xmod.json", "zero_xmod.json"])
def test_c2_p_of_u(name):
    x = obj(name)
    y = functor_p(functor_u(x, 3), 3)
    rho, sigma = pu_roundtrip_iso(x, y)
    assert rank(rho) == x.m.dim == y.m.dim and rank(sigma) == x.n.dim == y.n.dim
    assert check_lie_xmod_iso(x, y, rho, sigma).passed
    run = cli("roundtrip", name, "--path", "u.p", "--max-degree", "3")
    assert run.exit_code == EXIT_PASS and "rho" in run.data and "sigma" in run.data


# -- 3 ---------------------------------------------------------------------------------------

GROUP_XMODS = ["a3_s3_xmod.json", "s3_id_xmod.json", "trivial_c3_xmod.json"]
LIE_XMODS = ["heis3_xmod.json", "nonab2_xmod.json", "zero_xmod.json", "sl2_id_xmod.json"]


@pytest.mark.criterion(3)
@pytest.mark.parametrize("name", GROUP_XMODS + LIE_XMODS + ["a3_s3_2group.json", "heis3_2lie.json"])
def test_c3_roundtrip(name):
    assert cli("roundtrip", name, "--path", "xmod.2g.xmod").exit_code == EXIT_PASS


@pytest.mark.criterion(3)
@pytest.mark.parametrize("name", GROUP_XMODS)
def test_c3_group_roundtrip_by_search(name):
    x = obj(name)
    y = twogroup_to_xmod(xmod_to_2group(x))
    found = find_group_xmod_isomorphism(x, y)
    assert found is not None and check_crossed_morphism(x, y, *found).passed


@pytest.mark.criterion(3)
def test_c3_kernels_commute_in_every_lie_two_algebra():
    built = [liexmod_to_2lie(obj(n)) for n in LIE_XMODS] + [obj("heis3_2lie.json")]
    built += [liexmod_to_2lie(twolie_to_liexmod(L)) for L in built]
    for L in built:
        assert check_lie_two_alg(L).get("lemma1_kernels_commute").passed
        # direct: brackets of kernel bases of s and t vanish
        for a, b in itertools.product(kernel_basis(L.s), kernel_basis(L.t)):
            assert not L.g1.bracket(a, b)


@pytest.mark.criterion(3)
def test_c3_interchange_exhaustive_order_18():
    G = obj("a3_s3_2group.json")
    assert G.g1.order == 18 and check_two_group(G).get("interchange").passed
    pairs = list(G.composable())
    assert len(pairs) == 18 * 3
    mul = G.g1.mul
    for (f, g), (f2, g2) in itertools.product(pairs, repeat=2):
        lhs = mul(compose_arrows_group(G, f, g), compose_arrows_group(G, f2, g2))
        rhs = compose_arrows_group(G, mul(f, f2), mul(g, g2))
        assert lhs == rhs


# -- 4 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_c4_chi_of_fun_and_star_action_laws():
    with Budget(5):
        x = obj("a3_s3_xmod.json")
        co = functor_fun(x)
        assert check_hopf_cocomod(co).passed
        y = functor_chi(co)
        found = find_group_xmod_isomorphism(x, y)
        assert found is not None and check_crossed_morphism(x, y, *found).passed
        assert lemma4_report(co).passed
        F = obj("fun_s3_hopf.json")
        coad = HopfCoComod(F, F, lambda k: {k: Fraction(1)}, lambda k: adjoint_coaction(F, F.element({k: 1})))
        rep = lemma4_report(coad)
        assert rep.passed and len(rep.checks) == 8


@pytest.mark.criterion(4)
def test_c4_shipped_comodules():
    assert cli("roundtrip", "a3_s3_xmod.json", "--path", "kfun.chi").exit_code == EXIT_PASS
    assert cli("functor", "a3_s3_fun_cocomod.json", "--apply", "chi").exit_code == EXIT_PASS
    assert cli("check", "c2_coad_cocomod.json").exit_code == EXIT_PASS
    bad = cli("check", "corrupted_cocomod.json")
    assert bad.exit_code == EXIT_FAIL
    assert bad.reports[0].get("comodule_counit").witness == {"l": "d[g]", "index": 1}


# -- 5 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(5)
@pytest.mark.parametrize("name", GROUP_XMODS)
def test_c5_grouplikes_of_kg(name):
    x = obj(name)
    y = grouplike_xmod(functor_kg(x))
    assert check_group_xmod(y).passed
    found = find_group_xmod_isomorphism(x, y)
    assert found is not None and check_crossed_morphism(x, y, *found).passed
    assert cli("roundtrip", name, "--path", "kg.gl").exit_code == EXIT_PASS


def _primitive_dim_oracle(H):
    # solve Delta(x) = x (x) 1 + 1 (x) x directly with sympy
    n = H.dim
    one = H.one()
    rows = {}
    for j in range(n):
        col = dict(H.coproduct({j: Fraction(1)}))
        for i, c in one.items():
            col[(j, i)] = col.get((j, i), 0) - c
            col[(i, j)] = col.get((i, j), 0) - c
        for key, c in col.items():
            rows.setdefault(key, [0] * n)[j] += c
    M = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c for c in r]
                      for r in rows.values()])
    return n - M.rank()


@pytest.mark.criterion(5)
@pytest.mark.parametrize("name", ["c2.json", "c3.json", "s3.json"])
def test_c5_group_algebras_have_no_primitives(name):
    H = group_algebra(obj(name))
    assert primitives(H) == []
    assert _primitive_dim_oracle(H) == 0


# -- 6 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_c6_cat1_desk_model():
    p = obj("heis3_precat1.json")
    rep = check_precat1(p, 3)
    assert rep.passed and rep.get("s_e_identity").passed and rep.get("t_e_identity").passed
    y = cat1hopf_to_xmod(p, 3)
    assert check_hopf_xmod(y, 3).passed
    x = obj("heis3_xmod.json")
    rho, sigma = cat1_roundtrip_iso(x, y)
    assert check_hopf_xmod_iso(functor_u(x, 3), y, rho, sigma, 3).passed
    assert cli("functor", "heis3_precat1.json", "--apply", "cat1", "--max-degree", "3").exit_code == EXIT_PASS


# -- 7 ---------------------------------------------------------------------------------------

COMPLEXES = [("heis3.json", "heis3_trivial.json"), ("solv3.json", "solv3_trivial.json")]
SESES = [("heis3.json", "heis3_ses.json"), ("heis3.json", "heis3_split_ses.json"), ("solv3.json", "solv3_ses.json")]


@pytest.mark.criterion(7)
def test_c7_cohomology_suite():
    with Budget(30):
        modules = []
        for gname, mname in COMPLEXES:
            g = obj(gname)
            modules.append((g, obj(mname, {"algebra": g})))
        for gname, sname in SESES:
            g = obj(gname)
            ses = obj(sname, {"algebra": g})
            modules += [(g, ses.v), (g, ses.i), (g, ses.q)]
        for g, M in modules:
            for p in range(3):
                assert not (differential_matrix(g, M, p + 1) @ differential_matrix(g, M, p)).entries

        run = cli("cohomology", "heis3.json", "heis3_trivial.json", "--degree", "3")
        assert run.exit_code == EXIT_PASS and run.data["dim"] == 1

        g = obj("heis3.json")
        ses = obj("heis3_ses.json", {"algebra": g})
        alpha = obj("heis3_cocycle.json")
        t1 = connecting_hom(g, ses, alpha)
        t2 = connecting_hom(g, ses, alpha, lift=SparseMat.from_dense([[1], [1]]))
        assert is_coboundary(g, ses.v, t1 - t2) and not is_coboundary(g, ses.v, t1)

        x = splice(g, ses, alpha)
        assert check_lie_xmod(x).passed and splice_report(g, x).passed
        assert x.m.dim - rank(x.mu) == ses.v.dim
        assert x.n.dim - rank(x.mu) == g.dim

        split = obj("heis3_split_ses.json", {"algebra": g})
        assert splice_report(g, splice(g, split, obj("heis3_zero_cocycle.json"))).passed

        X = enveloping_skeletal(g, ses, alpha, 3)
        _all_conditions_pass(check_hopf_xmod(X, 3))
        y = functor_p(X, 3)
        rho, sigma = pu_roundtrip_iso(x, y)
        assert check_lie_xmod_iso(x, y, rho, sigma).passed


# -- 8 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_c8_broken_peiffer():
    run = cli("check", "bad_peiffer.json")
    assert run.exit_code == EXIT_FAIL
    assert run.reports[0].get("iii_peiffer").witness == {"b": "(123)", "b'": "(12)"}


@pytest.mark.criterion(8)
def test_c8_non_derivation():
    run = cli("check", "bad_derivation.json")
    assert run.exit_code == EXIT_FAIL
    assert run.reports[0].get("action_by_derivations").witness == {"m": "x", "m'": "y", "n": "t"}


@pytest.mark.criterion(8)
def test_c8_non_closed_cocycle():
    run = cli("check", "bad_cocycle.json")
    assert run.exit_code == EXIT_FAIL
    assert run.reports[0].get("closed").witness == ("a", "b", "c")
    run = cli("splice", "solv3.json", "solv3_ses.json", "bad_cocycle.json")
    assert run.exit_code == EXIT_FAIL
    assert run.error["witness"] == ["a", "b", "c"]


# -- 9 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_c9_finite_algebras():
    algebras = [obj(n) for n in ("ks3_hopf.json", "fun_s3_hopf.json", "trivial_hopf.json")]
    for n in ("trivial.json", "c2.json", "c3.json", "a3.json", "s3.json"):
        G = obj(n)
        algebras += [group_algebra(G), function_algebra(G)]
    kg, co = functor_kg(obj("a3_s3_xmod.json")), functor_fun(obj("a3_s3_xmod.json"))
    algebras += [kg.b, kg.h, co.k, co.l]
    for H in algebras:
        assert verify_hopf(H).passed, H


@pytest.mark.criterion(9)
def test_c9_u_sl2_degree_4():
    with Budget(60):
        U = EnvelopingAlgebra(obj("sl2.json"))
        rep = verify_enveloping(U, 4)
    assert rep.passed and rep.get("antipode").passed
    assert len(U.basis(4)) == 35


@pytest.mark.criterion(9)
def test_c9_emitted_enveloping_algebras():
    X = functor_u(obj("nonab2_xmod.json"), 3)
    for U in (X.b, X.h, EnvelopingAlgebra(obj("nonab2.json"))):
        assert verify_enveloping(U, 3).passed


# -- corpus ---------------------------------------------------------------------------------

def test_every_fixture_is_used_by_a_criterion():
    source = Path(__file__).read_text(encoding="utf-8")
    used = set(re.findall(r'"([\w.]+\.json)"', source))
    shipped = {p.name for p in FIX.glob("*.json")}
    assert shipped <= used, sorted(shipped - used)
    for name in shipped:
        build(load_document(FIX / name))
