"""Functors between crossed structures.

``U`` and ``P`` link Lie and Hopf crossed modules, ``k[-]`` (group algebra)
and group-likes link group and Hopf crossed modules, and functions and
characters link group crossed modules with Hopf crossed comodules.  Every
output is handed to the checker of its type; round trips come with the
isomorphism that the constructions carry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .crossed import (GroupXMod, HopfCoComod, HopfXMod, LieTwoAlg, LieXMod, PreCat1Hopf,
                      check_crossed_morphism, check_group_xmod, check_lie_xmod, check_precat1, twolie_to_liexmod)
from .enveloping import EnvelopingAction, EnvelopingAlgebra, EnvelopingMorphism
from .groups import FinGroup
from .hopf import (Character, FinDimHopf, NotSplit, char_convolution, characters, coad, group_algebra,
                   function_algebra, grouplikes, primitive_basis)
from .lie import FinLieAlgebra
from .linalg import SparseMat, SparseVec, coordinates, rank, vaxpy, vsub
from .report import AxiomError, Report, first

__all__ = [
    "FunctorReport",
    "functor_u",
    "functor_p",
    "functor_kg",
    "grouplike_xmod",
    "functor_fun",
    "functor_chi",
    "star_action",
    "character_group",
    "lemma4_report",
    "cat1hopf_to_xmod",
    "pu_roundtrip_iso",
    "up_roundtrip_iso",
    "check_lie_xmod_iso",
    "check_hopf_xmod_iso",
    "cat1_roundtrip_iso",
    "u_morphism",
    "kg_morphism",
]


def _e(k) -> SparseVec:
    return {k: Fraction(1)}


@dataclass
class FunctorReport:
    """What went in, what came out, and the verdicts of the checks actually run."""

    functor: str
    input: str
    output: Any
    report: Report
    roundtrip: Optional[Report] = None
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.report.passed and (self.roundtrip is None or self.roundtrip.passed)

    def to_dict(self) -> dict:
        from .report import jsonable
        d = {"functor": self.functor, "input": self.input, "output": repr(self.output),
             "passed": self.passed, "report": self.report.to_dict()}
        if self.roundtrip is not None:
            d["roundtrip"] = self.roundtrip.to_dict()
        if self.data:
            d["data"] = jsonable(self.data)
        return d


# -- U and P ----------------------------------------------------------------------

def functor_u(x: LieXMod, d: int = 4) -> HopfXMod:
    """``U(mu): U(m) -> U(n)`` with the action extended by derivations."""
    check_lie_xmod(x).require()
    B, H = EnvelopingAlgebra(x.m), EnvelopingAlgebra(x.n)
    gamma = EnvelopingMorphism(B, H, x.mu)
    phi = EnvelopingAction(H, B, x.action)
    out = HopfXMod(B, H, gamma, phi, degree=d, source=x)
    out.gamma_map, out.action_map = gamma, phi
    return out


def _labels(A, d):
    return A.basis(d) if isinstance(A, EnvelopingAlgebra) else A.basis()


def _prim_lie(A, prims: List[SparseVec], labeler) -> FinLieAlgebra:
    k = len(prims)
    bracket = {}
    for a, b in itertools.combinations(range(k), 2):
        c = vsub(A.mul(prims[a], prims[b]), A.mul(prims[b], prims[a]))
        co = coordinates(c, prims)
        if co is None:
            raise AxiomError("commutator of primitives is not primitive", witness=(a, b))
        bracket[(a, b)] = {i: v for i, v in enumerate(co) if v}
    return FinLieAlgebra(k, bracket, names=[_pname(p, labeler) for p in prims])


def _pname(p: SparseVec, labeler) -> str:
    parts = []
    for k, c in sorted(p.items(), key=lambda kv: str(kv[0])):
        name = labeler(k)
        parts.append(name if c == 1 else f"{c}*{name}")
    return "+".join(parts) or "0"


def functor_p(x: HopfXMod, d: Optional[int] = None) -> LieXMod:
    """Primitives of ``B`` and ``H`` with the restricted ``gamma`` and action.

    That the action and ``gamma`` preserve primitives is checked; a failure
    raises :class:`AxiomError` naming the offending pair.
    """
    d = x.degree if d is None else d
    B, H = x.b, x.h
    pb = primitive_basis(B, _labels(B, d))
    ph = primitive_basis(H, _labels(H, d))
    m = _prim_lie(B, pb, B.label)
    n = _prim_lie(H, ph, H.label)
    cols = []
    for j, p in enumerate(pb):
        c = coordinates(x.gamma_apply(p), ph)
        if c is None:
            raise AxiomError("gamma does not preserve primitives", witness={"m": m.names[j]})
        cols.append({i: v for i, v in enumerate(c) if v})
    mu = SparseMat.from_columns(cols, len(ph))
    action = []
    for i, q in enumerate(ph):
        acol = []
        for j, p in enumerate(pb):
            c = coordinates(x.act(q, p), pb)
            if c is None:
                raise AxiomError("action does not preserve primitives",
                                 witness={"n": n.names[i], "m": m.names[j]})
            acol.append({k: v for k, v in enumerate(c) if v})
        action.append(SparseMat.from_columns(acol, len(pb)))
    out = LieXMod(m, n, mu, action)
    out.prims_b, out.prims_h = pb, ph
    return out


def _into_prims(lie: FinLieAlgebra, prims: List[SparseVec]) -> SparseMat:
    """Generator ``j`` of ``lie`` in coordinates of the primitives of ``U(lie)``."""
    cols = []
    for j in range(lie.dim):
        c = coordinates({(j,): Fraction(1)}, prims)
        if c is None:
            raise AxiomError("generator is not in the span of the computed primitives", witness=j)
        cols.append({i: v for i, v in enumerate(c) if v})
    return SparseMat.from_columns(cols, len(prims))


def check_lie_xmod_iso(x: LieXMod, y: LieXMod, rho: SparseMat, sigma: SparseMat) -> Report:
    rep = check_crossed_morphism(x, y, rho, sigma)
    rep.subject = "Lie crossed module isomorphism"
    rep.note("rho_invertible", rho.rows == rho.cols == rank(rho))
    rep.note("sigma_invertible", sigma.rows == sigma.cols == rank(sigma))
    return rep


def pu_roundtrip_iso(x: LieXMod, y: LieXMod) -> Tuple[SparseMat, SparseMat]:
    """Carried ``(rho, sigma): x -> y`` for ``y = functor_p(functor_u(x))``."""
    return _into_prims(x.m, y.prims_b), _into_prims(x.n, y.prims_h)


def _gen_matrix(prims: List[SparseVec], ngens: int) -> SparseMat:
    cols = []
    for p in prims:
        if any(len(k) != 1 for k in p):
            raise AxiomError("primitive is not of degree one", witness=p)
        cols.append({k[0]: c for k, c in p.items()})
    return SparseMat.from_columns(cols, ngens)


def check_hopf_xmod_iso(x: HopfXMod, y: HopfXMod, rho: SparseMat, sigma: SparseMat,
                        d: Optional[int] = None) -> Report:
    """Isomorphism of enveloping crossed modules given by generator matrices."""
    R = EnvelopingMorphism(x.b, y.b, rho)
    S = EnvelopingMorphism(x.h, y.h, sigma)
    rep = check_crossed_morphism(x, y, R, S, degree=d)
    rep.subject = "Hopf crossed module isomorphism"
    rep.note("rho_invertible", rho.rows == rho.cols == rank(rho))
    rep.note("sigma_invertible", sigma.rows == sigma.cols == rank(sigma))
    return rep


def up_roundtrip_iso(x: HopfXMod, y: HopfXMod) -> Tuple[SparseMat, SparseMat]:
    """Carried ``y -> x`` for ``y = functor_u(functor_p(x))``: generators go to primitives."""
    p = y.source
    return _gen_matrix(p.prims_b, x.b.ngens), _gen_matrix(p.prims_h, x.h.ngens)


def u_morphism(fx: HopfXMod, fy: HopfXMod, rho: SparseMat, sigma: SparseMat):
    """``U`` on a morphism of Lie crossed modules."""
    return EnvelopingMorphism(fx.b, fy.b, rho), EnvelopingMorphism(fx.h, fy.h, sigma)


# -- group algebras and group-likes ---------------------------------------------------

def functor_kg(x: GroupXMod) -> HopfXMod:
    """Linearization ``kM -> kN`` of a group crossed module."""
    check_group_xmod(x).require()
    B, H = group_algebra(x.m), group_algebra(x.n)
    mu, act = x.mu, x.action
    return HopfXMod(B, H, lambda k: _e(mu[k]), lambda p, q: _e(act[p][q]), source=x)


def kg_morphism(rho: Sequence[int], sigma: Sequence[int]):
    return (lambda k: _e(rho[k])), (lambda k: _e(sigma[k]))


def _elem_name(H: FinDimHopf, v: SparseVec) -> str:
    if len(v) == 1:
        (k, c), = v.items()
        if c == 1:
            return H.label(k)
    return _pname(v, H.label)


def _group_from(elements: List[SparseVec], mul, names) -> Tuple[FinGroup, Dict]:
    index = {frozenset(v.items()): i for i, v in enumerate(elements)}
    table = []
    for a in elements:
        row = []
        for b in elements:
            key = frozenset(mul(a, b).items())
            if key not in index:
                raise AxiomError("set is not closed under the product")
            row.append(index[key])
        table.append(row)
    return FinGroup(table, names=names), index


def grouplike_xmod(x: HopfXMod) -> GroupXMod:
    """Restrict ``gamma`` and the action to group-like elements."""
    B, H = x.b, x.h
    gb = [g.coords for g in grouplikes(B)]
    gh = [g.coords for g in grouplikes(H)]
    M, ib = _group_from(gb, B.mul, [_elem_name(B, v) for v in gb])
    N, ih = _group_from(gh, H.mul, [_elem_name(H, v) for v in gh])

    def look(index, v, what):
        key = frozenset(v.items())
        if key not in index:
            raise AxiomError(f"{what} leaves the group-likes", witness=v)
        return index[key]

    mu = [look(ih, x.gamma_apply(b), "gamma") for b in gb]
    action = [[look(ib, x.act(h, b), "action") for b in gb] for h in gh]
    out = GroupXMod(M, N, mu, action)
    out.grouplikes_b, out.grouplikes_h = gb, gh
    return out


# -- functions and characters -----------------------------------------------------

def functor_fun(x: GroupXMod) -> HopfCoComod:
    """``K = k[N]``, ``L = k[M]``, ``zeta = mu^*`` and ``rho_L`` dual to the action."""
    check_group_xmod(x).require()
    K, L = function_algebra(x.n), function_algebra(x.m)
    zeta_cols = [dict() for _ in range(x.n.order)]
    for m, n in enumerate(x.mu):
        zeta_cols[n][m] = Fraction(1)
    rho = [dict() for _ in range(x.m.order)]
    for n in x.n.elements():
        for mp in x.m.elements():
            rho[x.action[n][mp]][(n, mp)] = Fraction(1)
    return HopfCoComod(K, L, lambda k: zeta_cols[k], lambda l: rho[l], source=x)


def star_action(x: HopfCoComod, eta: Character, phi: Character) -> Character:
    """``eta *_rho phi = mu_k (eta (x) phi) rho_L``."""
    L = x.l
    out = {}
    for l in L.basis():
        c = sum((v * eta.coords.get(p, 0) * phi.coords.get(q, 0) for (p, q), v in x.rho(l).items()),
                Fraction(0))
        if c:
            out[l] = c
    res = Character(L, out)
    if not res.is_multiplicative():
        raise NotSplit("star action left the characters")
    return res


def _char_name(H: FinDimHopf, ch: Character) -> str:
    if len(ch.coords) == 1:
        (k, c), = ch.coords.items()
        name = H.label(k)
        if c == 1 and name.startswith("d[") and name.endswith("]"):
            return name[2:-1]
    return "chi" + str(sorted((k, str(c)) for k, c in ch.coords.items()))


def character_group(H: FinDimHopf) -> Tuple[FinGroup, List[Character]]:
    """Characters of a commutative split ``H`` as a group under convolution."""
    chars = characters(H)
    index = {c: i for i, c in enumerate(chars)}
    table = [[index[char_convolution(H, a, b)] for b in chars] for a in chars]
    return FinGroup(table, names=[_char_name(H, c) for c in chars]), chars


def _compose_char(x: HopfCoComod, phi: Character) -> Character:
    K = x.k
    out = {}
    for k in K.basis():
        c = phi(x.zeta(k))
        if c:
            out[k] = c
    return Character(K, out)


def functor_chi(x: HopfCoComod) -> GroupXMod:
    """``M = chi(L)``, ``N = chi(K)``, ``mu = - o zeta``, action ``*_rho``."""
    M, cm = character_group(x.l)
    N, cn = character_group(x.k)
    im = {c: i for i, c in enumerate(cm)}
    iN = {c: i for i, c in enumerate(cn)}
    mu = [iN[_compose_char(x, phi)] for phi in cm]
    action = [[im[star_action(x, eta, phi)] for phi in cm] for eta in cn]
    out = GroupXMod(M, N, mu, action)
    out.characters_l, out.characters_k = cm, cn
    return out


def lemma4_report(x: HopfCoComod) -> Report:
    """Items (alpha)-(delta) on all characters of ``K`` and ``L``."""
    K, L = x.k, x.l
    rep = Report("character group and star action")
    cm, cn = characters(L), characters(K)
    conv = {(a, b): char_convolution(L, a, b) for a in cm for b in cm}
    unit = Character(L, L.counit_vec)

    def inverse(phi):
        return Character(L, {k: phi(L.antipode(_e(k))) for k in L.basis() if phi(L.antipode(_e(k)))})

    rep.record("alpha_closed", first((a, b) for (a, b), c in conv.items() if c not in set(cm)))
    rep.record("alpha_associative", first(
        (a, b, c) for a in cm for b in cm for c in cm if conv[(conv[(a, b)], c)] != conv[(a, conv[(b, c)])]))
    rep.record("alpha_unit", first(a for a in cm if conv[(unit, a)] != a or conv[(a, unit)] != a))
    rep.record("alpha_inverse", first(a for a in cm if conv[(inverse(a), a)] != unit or conv[(a, inverse(a))] != unit))
    kconv = {(a, b): char_convolution(K, a, b) for a in cn for b in cn}
    kunit = Character(K, K.counit_vec)
    act = {(eta, phi): star_action(x, eta, phi) for eta in cn for phi in cm}
    rep.record("beta_unit", first(phi for phi in cm if act[(kunit, phi)] != phi))
    rep.record("beta_composition", first(
        (a, b, phi) for a in cn for b in cn for phi in cm
        if act[(kconv[(a, b)], phi)] != act[(a, act[(b, phi)])]))
    rep.record("gamma_automorphism", first(
        (eta, phi, psi) for eta in cn for phi in cm for psi in cm
        if act[(eta, conv[(phi, psi)])] != conv[(act[(eta, phi)], act[(eta, psi)])]))
    adk = HopfCoComod(K, K, lambda k: _e(k), lambda k: coad(K, _e(k)))

    def kinv(eta):
        return Character(K, {k: eta(K.antipode(_e(k))) for k in K.basis() if eta(K.antipode(_e(k)))})

    rep.record("delta_coad_conjugation", first(
        (eta, g) for eta in cn for g in cn
        if star_action(adk, eta, g) != kconv[(kconv[(eta, g)], kinv(eta))]))
    return rep


# -- pre-cat1 Hopf algebras -----------------------------------------------------------

def cat1hopf_to_xmod(p: PreCat1Hopf, d: Optional[int] = None) -> HopfXMod:
    """Primitives, then the Lie crossed module of the Lie 2-algebra, then ``U``.

    Only enveloping-type inputs are accepted: that is the model of an
    irreducible cocommutative Hopf algebra used throughout.
    """
    if not p.enveloping:
        raise AxiomError("pre-cat1 input is not of enveloping type")
    d = p.degree if d is None else d
    check_precat1(p, d).require()
    A, H = p.a, p.h
    pa = primitive_basis(A, A.basis(d))
    ph = primitive_basis(H, H.basis(d))
    g1 = _prim_lie(A, pa, A.label)
    g0 = _prim_lie(H, ph, H.label)

    def restrict(f, src, dst):
        cols = []
        for v in src:
            img = {}
            for k, c in v.items():
                vaxpy(img, c, f(k))
            co = coordinates(img, dst)
            if co is None:
                raise AxiomError("structure map does not preserve primitives", witness=v)
            cols.append({i: c for i, c in enumerate(co) if c})
        return SparseMat.from_columns(cols, len(dst))

    L = LieTwoAlg(g0, g1, restrict(p.s, pa, ph), restrict(p.t, pa, ph), restrict(p.e, ph, pa))
    x = twolie_to_liexmod(L)
    out = functor_u(x, d)
    out.lie2, out.prims_a, out.prims_h = L, pa, ph
    return out


def cat1_roundtrip_iso(x: LieXMod, y: HopfXMod) -> Tuple[SparseMat, SparseMat]:
    """Carried generator matrices ``functor_u(x) -> y`` for ``y = cat1hopf_to_xmod(U(liexmod_to_2lie(x)))``.

    ``m_j`` sits in ``g1 = n x| m`` at index ``dim n + j``; it is read off in
    the computed primitives of ``U(g1)`` and then in the kernel of ``s``.
    """
    dn = x.n.dim
    pa, ph = y.prims_a, y.prims_h
    ym = y.source
    cols = []
    for j in range(x.m.dim):
        in_pa = coordinates({(dn + j,): Fraction(1)}, pa)
        c = coordinates({i: v for i, v in enumerate(in_pa) if v}, ym.embedding)
        cols.append({i: v for i, v in enumerate(c) if v})
    rho = SparseMat.from_columns(cols, ym.m.dim)
    return rho, _into_prims(x.n, ph)
