"""Crossed modules, crossed comodules and strict 2-objects, with their checkers.

Group and Lie crossed modules convert to and from strict 2-groups and strict
Lie 2-algebras through semidirect products; the categorical composition of a
2-object is never stored but recovered from the underlying group or vector
space structure and then verified.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .enveloping import EnvelopingAlgebra, EnvelopingMorphism
from .groups import FinGroup, GroupError, is_homomorphism
from .hopf import ad, apply_linear, check_hopf_morphism, coad, tensor
from .lie import FinLieAlgebra, check_derivation, check_lie_morphism
from .linalg import SparseMat, SparseVec, coordinates, kernel_basis, rank, vadd, vaxpy, vscale, vsub
from .report import AxiomError, Report, first

__all__ = [
    "NotComposable",
    "Lemma1Violation",
    "GroupXMod",
    "LieXMod",
    "HopfXMod",
    "HopfCoComod",
    "TwoGroup",
    "LieTwoAlg",
    "PreCat1Hopf",
    "check_group_xmod",
    "check_lie_xmod",
    "check_hopf_xmod",
    "check_hopf_cocomod",
    "check_two_group",
    "check_lie_two_alg",
    "check_precat1",
    "xmod_to_2group",
    "twogroup_to_xmod",
    "compose_arrows_group",
    "liexmod_to_2lie",
    "twolie_to_liexmod",
    "compose_arrows_linear",
    "precat1_from_lie2",
    "check_crossed_morphism",
    "find_group_xmod_isomorphism",
    "twogroup_roundtrip_iso",
    "check_two_group_iso",
    "liexmod_roundtrip_iso",
    "twolie_roundtrip_iso",
    "check_lie_two_alg_iso",
]


class NotComposable(ValueError):
    """Arrows whose target and source do not match."""


class Lemma1Violation(AxiomError):
    """Kernels of source and target fail to commute."""


def _e(k) -> SparseVec:
    return {k: Fraction(1)}


# -- groups --------------------------------------------------------------------

class GroupXMod:
    """``mu: M -> N`` with ``action[n][m]`` the index of ``n . m``."""

    def __init__(self, m: FinGroup, n: FinGroup, mu: Sequence[int], action: Sequence[Sequence[int]]):
        if len(mu) != m.order or any(not 0 <= x < n.order for x in mu):
            raise GroupError("mu table is malformed")
        if len(action) != n.order or any(len(r) != m.order or any(not 0 <= y < m.order for y in r)
                                         for r in action):
            raise GroupError("action table is malformed")
        self.m, self.n = m, n
        self.mu = tuple(int(x) for x in mu)
        self.action = tuple(tuple(int(y) for y in r) for r in action)

    def __repr__(self):
        return f"GroupXMod(|M|={self.m.order}, |N|={self.n.order})"

    @classmethod
    def conjugation(cls, g: FinGroup, sub: Sequence[int]) -> "GroupXMod":
        """Inclusion of a normal subgroup with the conjugation action."""
        M, emb = g.subgroup(sub)
        pos = {x: i for i, x in enumerate(emb)}
        action = [[pos[g.mul(n, x, g.inv[n])] for x in emb] for n in range(g.order)]
        return cls(M, g, emb, action)


def check_group_xmod(x: GroupXMod) -> Report:
    M, N, mu, act = x.m, x.n, x.mu, x.action
    mn, nn = M.names, N.names
    rep = Report("group crossed module")
    w = is_homomorphism(mu, M, N)
    rep.record("mu_homomorphism", None if w is None else {"m": mn[w[0]], "m'": mn[w[1]]})
    rep.record("action_unit", first({"m": mn[m]} for m in M.elements() if act[N.unit][m] != m))
    rep.record("action_composition", first(
        {"n": nn[a], "n'": nn[b], "m": mn[m]}
        for a in N.elements() for b in N.elements() for m in M.elements()
        if act[a][act[b][m]] != act[N.mult[a][b]][m]))
    rep.record("action_by_automorphisms", first(
        {"n": nn[a], "m": mn[m], "m'": mn[k]}
        for a in N.elements() for m in M.elements() for k in M.elements()
        if act[a][M.mult[m][k]] != M.mult[act[a][m]][act[a][k]]))
    rep.record("equivariance_a", first(
        {"n": nn[a], "m": mn[m]} for a in N.elements() for m in M.elements()
        if mu[act[a][m]] != N.mul(a, mu[m], N.inv[a])))
    rep.record("peiffer_b", first(
        {"m": mn[m], "m'": mn[k]} for k in M.elements() for m in M.elements()
        if act[mu[m]][k] != M.mul(m, k, M.inv[m])))
    return rep


class TwoGroup:
    """Strict 2-group ``s, t: G1 -> G0``, ``i: G0 -> G1``; composition is derived."""

    def __init__(self, g0: FinGroup, g1: FinGroup, s: Sequence[int], t: Sequence[int],
                 i: Sequence[int], check: bool = True):
        self.g0, self.g1 = g0, g1
        self.s, self.t, self.i = tuple(s), tuple(t), tuple(i)
        if len(self.s) != g1.order or len(self.t) != g1.order or len(self.i) != g0.order:
            raise GroupError("structure maps have the wrong length")
        if check:
            check_two_group(self).require()

    def __repr__(self):
        return f"TwoGroup(|G0|={self.g0.order}, |G1|={self.g1.order})"

    def composable(self) -> List[Tuple[int, int]]:
        return [(f, h) for f in self.g1.elements() for h in self.g1.elements() if self.t[f] == self.s[h]]


def compose_arrows_group(g: TwoGroup, f: int, h: int) -> int:
    """``h o f = h . i(t(f))^-1 . f`` for ``t(f) = s(h)``."""
    if g.t[f] != g.s[h]:
        raise NotComposable(f"t({g.g1.names[f]}) != s({g.g1.names[h]})")
    G1 = g.g1
    return G1.mul(h, G1.inv[g.i[g.t[f]]], f)


def check_two_group(g: TwoGroup) -> Report:
    G0, G1, s, t, i = g.g0, g.g1, g.s, g.t, g.i
    n1 = G1.names
    rep = Report("strict 2-group")
    for name, f, dom, cod in (("s", s, G1, G0), ("t", t, G1, G0), ("i", i, G0, G1)):
        w = is_homomorphism(f, dom, cod)
        rep.record(f"{name}_homomorphism", None if w is None else [dom.names[w[0]], dom.names[w[1]]])
    rep.record("s_i_identity", first(G0.names[x] for x in G0.elements() if s[i[x]] != x))
    rep.record("t_i_identity", first(G0.names[x] for x in G0.elements() if t[i[x]] != x))
    if not rep.passed:
        return rep

    def comp(f, h):
        return G1.mul(h, G1.inv[i[t[f]]], f)

    rep.record("identity_arrows", first(
        n1[f] for f in G1.elements() if comp(f, i[t[f]]) != f or comp(i[s[f]], f) != f))
    pairs = g.composable()
    rep.record("source_target", first(
        [n1[f], n1[h]] for f, h in pairs if s[comp(f, h)] != s[f] or t[comp(f, h)] != t[h]))
    rep.record("associativity", first(
        [n1[f], n1[h], n1[k]] for f, h in pairs for k in G1.elements()
        if t[h] == s[k] and comp(comp(f, h), k) != comp(f, comp(h, k))))
    rep.record("interchange", first(
        [n1[f1], n1[g1], n1[f2], n1[g2]] for f1, g1 in pairs for f2, g2 in pairs
        if comp(G1.mult[f1][f2], G1.mult[g1][g2]) != G1.mult[comp(f1, g1)][comp(f2, g2)]))
    return rep


def xmod_to_2group(x: GroupXMod) -> TwoGroup:
    """Semidirect product ``G1 = N x| M`` with ``(n, m)`` stored at ``n * |M| + m``."""
    check_group_xmod(x).require()
    M, N, mu, act = x.m, x.n, x.mu, x.action
    k = M.order

    def pair(idx):
        return divmod(idx, k)

    order = N.order * k
    table = []
    for a in range(order):
        n1, m1 = pair(a)
        row = []
        for b in range(order):
            n2, m2 = pair(b)
            row.append(N.mult[n1][n2] * k + M.mult[m1][act[n1][m2]])
        table.append(row)
    names = [f"({N.names[n]},{M.names[m]})" for n in range(N.order) for m in range(k)]
    G1 = FinGroup(table, names=names)
    s = [pair(a)[0] for a in range(order)]
    t = [N.mult[mu[pair(a)[1]]][pair(a)[0]] for a in range(order)]
    i = [n * k + M.unit for n in range(N.order)]
    return TwoGroup(N, G1, s, t, i)


def twogroup_to_xmod(g: TwoGroup) -> GroupXMod:
    """``M = ker s``, ``N = G0``, ``mu = t|ker s``, action by conjugation with ``i(n)``."""
    check_two_group(g).require()
    G1 = g.g1
    kernel = [f for f in G1.elements() if g.s[f] == g.g0.unit]
    M, emb = G1.subgroup(kernel)
    pos = {f: j for j, f in enumerate(emb)}
    mu = [g.t[f] for f in emb]
    action = [[pos[G1.mul(g.i[n], f, G1.inv[g.i[n]])] for f in emb] for n in g.g0.elements()]
    x = GroupXMod(M, g.g0, mu, action)
    x.embedding = emb
    return x


def find_group_xmod_isomorphism(x: GroupXMod, y: GroupXMod) -> Optional[Tuple[List[int], List[int]]]:
    """A pair ``(rho, sigma)`` of group isomorphisms commuting with ``mu`` and the actions."""
    from .groups import iter_isomorphisms
    for sigma in iter_isomorphisms(x.n, y.n):
        for rho in iter_isomorphisms(x.m, y.m):
            if all(y.mu[rho[m]] == sigma[x.mu[m]] for m in x.m.elements()) and \
                    all(rho[x.action[n][m]] == y.action[sigma[n]][rho[m]]
                        for n in x.n.elements() for m in x.m.elements()):
                return rho, sigma
    return None


def twogroup_roundtrip_iso(g: TwoGroup, h: TwoGroup) -> Tuple[List[int], List[int]]:
    """Carried map ``g -> h`` for ``h = xmod_to_2group(twogroup_to_xmod(g))``.

    Arrow ``f`` goes to ``(s(f), f . i(s(f))^-1)``.
    """
    x = twogroup_to_xmod(g)
    pos = {f: j for j, f in enumerate(x.embedding)}
    G1 = g.g1
    k = x.m.order
    F1 = [g.s[f] * k + pos[G1.mul(f, G1.inv[g.i[g.s[f]]])] for f in G1.elements()]
    return list(g.g0.elements()), F1


def check_two_group_iso(g: TwoGroup, h: TwoGroup, F0: Sequence[int], F1: Sequence[int]) -> Report:
    rep = Report("2-group isomorphism")
    for name, f, dom, cod in (("F0", F0, g.g0, h.g0), ("F1", F1, g.g1, h.g1)):
        rep.record(f"{name}_homomorphism", is_homomorphism(f, dom, cod))
        rep.note(f"{name}_bijective", len(set(f)) == cod.order == dom.order)
    rep.record("s_square", first(f for f in g.g1.elements() if h.s[F1[f]] != F0[g.s[f]]))
    rep.record("t_square", first(f for f in g.g1.elements() if h.t[F1[f]] != F0[g.t[f]]))
    rep.record("i_square", first(x for x in g.g0.elements() if h.i[F0[x]] != F1[g.i[x]]))
    return rep


# -- Lie algebras --------------------------------------------------------------

class LieXMod:
    """``mu: m -> n`` (``n.dim x m.dim`` matrix) with ``action[i]`` the derivation of ``n_i``."""

    def __init__(self, m: FinLieAlgebra, n: FinLieAlgebra, mu: SparseMat, action: Sequence[SparseMat]):
        if not isinstance(mu, SparseMat):
            mu = SparseMat.from_dense(mu, cols=m.dim)
        if mu.rows != n.dim or mu.cols != m.dim:
            raise AxiomError("mu has the wrong shape")
        acts = []
        for a in action:
            if not isinstance(a, SparseMat):
                a = SparseMat.from_dense(a, cols=m.dim)
            if a.rows != m.dim or a.cols != m.dim:
                raise AxiomError("action matrix has the wrong shape")
            acts.append(a)
        if len(acts) != n.dim:
            raise AxiomError("need one action matrix per generator of n")
        self.m, self.n, self.mu, self.action = m, n, mu, acts

    def __repr__(self):
        return f"LieXMod(dim m={self.m.dim}, dim n={self.n.dim})"

    def act(self, nv: SparseVec, mv: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, c in nv.items():
            vaxpy(acc, c, self.action[i].matvec(mv))
        return acc

    @classmethod
    def ideal(cls, g: FinLieAlgebra, basis: Sequence[SparseVec], names=None) -> "LieXMod":
        """Inclusion of an ideal spanned by ``basis`` with the adjoint action."""
        basis = [dict(b) for b in basis]

        def coords(v):
            c = coordinates(v, basis)
            if c is None:
                raise AxiomError("span is not an ideal")
            return {k: x for k, x in enumerate(c) if x}

        k = len(basis)
        bracket = {(a, b): coords(g.bracket(basis[a], basis[b])) for a in range(k) for b in range(a + 1, k)}
        m = FinLieAlgebra(k, bracket, names=names)
        mu = SparseMat.from_columns(basis, g.dim)
        action = [SparseMat.from_columns([coords(g.bracket({i: Fraction(1)}, b)) for b in basis], k)
                  for i in range(g.dim)]
        return cls(m, g, mu, action)


def check_lie_xmod(x: LieXMod) -> Report:
    m, n, mu = x.m, x.n, x.mu
    rep = Report("Lie crossed module")
    w = check_lie_morphism(mu, m, n)
    rep.record("mu_lie_morphism", None if w is None else {"m": m.names[w[0]], "m'": m.names[w[1]]})
    der = None
    for i, d in enumerate(x.action):
        w = check_derivation(d, m)
        if w is not None:
            der = {"n": n.names[i], "m": m.names[w[0]], "m'": m.names[w[1]]}
            break
    rep.record("action_by_derivations", der)
    rep.record("action_representation", first(
        {"n": n.names[i], "n'": n.names[j]} for i, j in itertools.combinations(range(n.dim), 2)
        if _mat_combo(x.action, n.structure(i, j), m.dim) != (x.action[i] @ x.action[j]) - (x.action[j] @ x.action[i])))
    mu_cols = mu.columns()
    rep.record("equivariance_a", first(
        {"n": n.names[i], "m": m.names[j]} for i in range(n.dim) for j in range(m.dim)
        if mu.matvec(x.action[i].column(j)) != n.bracket(_e(i), mu_cols[j])))
    rep.record("peiffer_b", first(
        {"m": m.names[i], "m'": m.names[j]} for i in range(m.dim) for j in range(m.dim)
        if x.act(mu_cols[i], _e(j)) != m.structure(i, j)))
    return rep


def _mat_combo(mats, v, dim) -> SparseMat:
    out = SparseMat.zero(dim, dim)
    for i, c in v.items():
        out = out + mats[i].scale(c)
    return out


class LieTwoAlg:
    """Strict Lie 2-algebra: Lie morphisms ``s, t: g1 -> g0`` and ``i: g0 -> g1``."""

    def __init__(self, g0: FinLieAlgebra, g1: FinLieAlgebra, s: SparseMat, t: SparseMat, i: SparseMat,
                 check: bool = True):
        self.g0, self.g1, self.s, self.t, self.i = g0, g1, s, t, i
        for name, f, rows, cols in (("s", s, g0.dim, g1.dim), ("t", t, g0.dim, g1.dim), ("i", i, g1.dim, g0.dim)):
            if f.rows != rows or f.cols != cols:
                raise AxiomError(f"{name} has the wrong shape")
        if check:
            check_lie_two_alg(self).require()

    def __repr__(self):
        return f"LieTwoAlg(dim g0={self.g0.dim}, dim g1={self.g1.dim})"


def check_lie_two_alg(L: LieTwoAlg) -> Report:
    rep = Report("strict Lie 2-algebra")
    for name, f, src, dst in (("s", L.s, L.g1, L.g0), ("t", L.t, L.g1, L.g0), ("i", L.i, L.g0, L.g1)):
        rep.record(f"{name}_lie_morphism", check_lie_morphism(f, src, dst))
    ident = SparseMat.identity(L.g0.dim)
    rep.note("s_i_identity", L.s @ L.i == ident)
    rep.note("t_i_identity", L.t @ L.i == ident)
    rep.record("lemma1_kernels_commute", _kernel_bracket_witness(L))
    return rep


def _kernel_bracket_witness(L: LieTwoAlg):
    ks, kt = kernel_basis(L.s), kernel_basis(L.t)
    for a in ks:
        for b in kt:
            if L.g1.bracket(a, b):
                return {"ker_s": a, "ker_t": b}
    return None


def compose_arrows_linear(L: LieTwoAlg, f: SparseVec, g: SparseVec) -> SparseVec:
    """``g o f = i(s(f)) + (f - i(s(f))) + (g - i(s(g)))`` for ``t(f) = s(g)``."""
    if L.t.matvec(f) != L.s.matvec(g):
        raise NotComposable("t(f) != s(g)")
    isf = L.i.matvec(L.s.matvec(f))
    isg = L.i.matvec(L.s.matvec(g))
    return vadd(vadd(isf, vsub(f, isf)), vsub(g, isg))


def liexmod_to_2lie(x: LieXMod) -> LieTwoAlg:
    """``g1 = n x| m`` on basis ``n_0.. , m_0..``; ``s(n,m) = n``, ``t(n,m) = mu(m) + n``."""
    check_lie_xmod(x).require()
    m, n = x.m, x.n
    dn, dm = n.dim, m.dim
    bracket = {}
    for i, j in itertools.combinations(range(dn), 2):
        bracket[(i, j)] = n.structure(i, j)
    for i in range(dn):
        for j in range(dm):
            bracket[(i, dn + j)] = {dn + k: c for k, c in x.action[i].column(j).items()}
    for i, j in itertools.combinations(range(dm), 2):
        bracket[(dn + i, dn + j)] = {dn + k: c for k, c in m.structure(i, j).items()}
    g1 = FinLieAlgebra(dn + dm, bracket, names=list(n.names) + list(m.names))
    s = SparseMat(dn, dn + dm, {(i, i): 1 for i in range(dn)})
    t_entries = {(i, i): 1 for i in range(dn)}
    for (r, c), v in x.mu.entries.items():
        t_entries[(r, dn + c)] = v
    t = SparseMat(dn, dn + dm, t_entries)
    i = SparseMat(dn + dm, dn, {(k, k): 1 for k in range(dn)})
    return LieTwoAlg(n, g1, s, t, i)


def twolie_to_liexmod(L: LieTwoAlg) -> LieXMod:
    """``m = ker s``, ``mu = t|ker s``, ``n . m = [i(n), m]``."""
    w = _kernel_bracket_witness(L)
    if w is not None:
        raise Lemma1Violation("[ker s, ker t] != 0", witness=w)
    K = kernel_basis(L.s)

    def coords(v):
        c = coordinates(v, K)
        if c is None:
            raise AxiomError("ker s is not preserved")
        return {k: x for k, x in enumerate(c) if x}

    k = len(K)
    names = [_vec_name(v, L.g1.names) for v in K]
    m = FinLieAlgebra(k, {(a, b): coords(L.g1.bracket(K[a], K[b])) for a in range(k) for b in range(a + 1, k)},
                      names=names)
    mu = SparseMat.from_columns([L.t.matvec(v) for v in K], L.g0.dim)
    i_cols = L.i.columns()
    action = [SparseMat.from_columns([coords(L.g1.bracket(i_cols[a], v)) for v in K], k)
              for a in range(L.g0.dim)]
    x = LieXMod(m, L.g0, mu, action)
    x.embedding = K
    return x


def _vec_name(v: SparseVec, names: Sequence[str]) -> str:
    parts = []
    for k, c in sorted(v.items()):
        parts.append(names[k] if c == 1 else f"{c}{names[k]}")
    return "+".join(parts) or "0"


def liexmod_roundtrip_iso(x: LieXMod, y: LieXMod) -> Tuple[SparseMat, SparseMat]:
    """Carried ``(rho, sigma)`` for ``y = twolie_to_liexmod(liexmod_to_2lie(x))``."""
    dn = x.n.dim
    cols = []
    for j in range(x.m.dim):
        c = coordinates({dn + j: Fraction(1)}, y.embedding)
        cols.append({k: v for k, v in enumerate(c) if v})
    return SparseMat.from_columns(cols, y.m.dim), SparseMat.identity(dn)


def twolie_roundtrip_iso(L: LieTwoAlg) -> Tuple[SparseMat, SparseMat]:
    """Carried ``(F0, F1)`` from ``L`` to ``liexmod_to_2lie(twolie_to_liexmod(L))``.

    Arrow ``f`` goes to ``(s(f), f - i(s(f)))`` in semidirect coordinates.
    """
    x = twolie_to_liexmod(L)
    dn = L.g0.dim
    cols = []
    for j in range(L.g1.dim):
        f = {j: Fraction(1)}
        sf = L.s.matvec(f)
        rest = coordinates(vsub(f, L.i.matvec(sf)), x.embedding)
        col = dict(sf)
        for k, c in enumerate(rest):
            if c:
                col[dn + k] = c
        cols.append(col)
    return SparseMat.identity(dn), SparseMat.from_columns(cols, dn + x.m.dim)


def check_lie_two_alg_iso(L: LieTwoAlg, M: LieTwoAlg, F0: SparseMat, F1: SparseMat) -> Report:
    rep = Report("Lie 2-algebra isomorphism")
    rep.record("F0_lie_morphism", check_lie_morphism(F0, L.g0, M.g0))
    rep.record("F1_lie_morphism", check_lie_morphism(F1, L.g1, M.g1))
    rep.note("F0_invertible", F0.rows == F0.cols == rank(F0))
    rep.note("F1_invertible", F1.rows == F1.cols == rank(F1))
    rep.note("s_square", M.s @ F1 == F0 @ L.s)
    rep.note("t_square", M.t @ F1 == F0 @ L.t)
    rep.note("i_square", M.i @ F0 == F1 @ L.i)
    return rep


# -- Hopf algebras ------------------------------------------------------------

class HopfXMod:
    """Crossed module of Hopf algebras ``gamma: B -> H`` with ``phi: H (x) B -> B``.

    ``gamma`` maps a basis label of ``B`` to an element of ``H`` and
    ``phi(h, b)`` maps a pair of basis labels to an element of ``B``.  For
    enveloping algebras the labels are PBW monomials and every check runs up
    to ``degree``.
    """

    def __init__(self, b, h, gamma: Callable, phi: Callable, degree: int = 4, source=None):
        self.b, self.h, self.gamma, self.phi = b, h, gamma, phi
        self.degree = degree
        self.source = source

    def __repr__(self):
        return f"HopfXMod({self.b!r} -> {self.h!r})"

    @property
    def enveloping(self) -> bool:
        return isinstance(self.b, EnvelopingAlgebra) and isinstance(self.h, EnvelopingAlgebra)

    def gamma_apply(self, v: SparseVec) -> SparseVec:
        return apply_linear(self.gamma, v)

    def act(self, hv: SparseVec, bv: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for p, x in hv.items():
            for q, y in bv.items():
                vaxpy(acc, x * y, self.phi(p, q))
        return acc

    @classmethod
    def finite(cls, b, h, gamma: SparseMat, phi: Dict[Tuple[int, int], SparseVec], source=None) -> "HopfXMod":
        cols = gamma.columns()
        table = {k: dict(v) for k, v in phi.items()}
        return cls(b, h, lambda k: cols[k], lambda p, q: table.get((p, q), {}), source=source)

    def labels(self, degree: Optional[int] = None):
        d = self.degree if degree is None else degree
        return self.b.basis(d), self.h.basis(d)


def check_hopf_xmod(x: HopfXMod, d: Optional[int] = None) -> Report:
    """Conditions (i)-(iii) on all basis labels (PBW monomials up to ``d``)."""
    B, H = x.b, x.h
    bl, hl = x.labels(d)
    rep = Report("Hopf crossed module")
    rep.extend(check_hopf_morphism(x.gamma, B, H, labels=bl), prefix="gamma_morphism")
    bn, hn = B.label, H.label

    def act(h, b):
        return x.act(h, b)

    rep.record("module_unit", first({"b": bn(b)} for b in bl if act(H.one(), _e(b)) != _e(b)))
    rep.record("module_associative", first(
        {"h": hn(p), "h'": hn(q), "b": bn(b)} for p in hl for q in hl for b in bl
        if act(H.mul(_e(p), _e(q)), _e(b)) != act(_e(p), x.phi(q, b))))

    def split_act(h, s, t):
        # sum (h' . s) (h'' . t)
        acc = {}
        for (p, q), c in H.coproduct(_e(h)).items():
            vaxpy(acc, c, B.mul(act(_e(p), s), act(_e(q), t)))
        return acc

    rep.record("module_algebra", first(
        {"h": hn(p), "b": bn(b), "b'": bn(c)} for p in hl for b in bl for c in bl
        if act(_e(p), B.mul(_e(b), _e(c))) != split_act(p, _e(b), _e(c))))
    rep.record("module_algebra_unit", first(
        {"h": hn(p)} for p in hl if act(_e(p), B.one()) != vscale(H.counit(_e(p)), B.one())))

    def coalg_ok(p, b):
        left = B.coproduct(x.phi(p, b))
        right = {}
        for (p1, p2), c in H.coproduct(_e(p)).items():
            for (b1, b2), e in B.coproduct(_e(b)).items():
                vaxpy(right, c * e, tensor(x.phi(p1, b1), x.phi(p2, b2)))
        return left == right

    rep.record("module_coalgebra", first({"h": hn(p), "b": bn(b)} for p in hl for b in bl if not coalg_ok(p, b)))
    rep.record("module_coalgebra_counit", first(
        {"h": hn(p), "b": bn(b)} for p in hl for b in bl
        if B.counit(x.phi(p, b)) != H.counit(_e(p)) * B.counit(_e(b))))
    rep.record("ii_equivariance", first(
        {"h": hn(p), "b": bn(b)} for p in hl for b in bl
        if x.gamma_apply(x.phi(p, b)) != ad(H, _e(p), x.gamma(b))))
    rep.record("iii_peiffer", first(
        {"b": bn(b), "b'": bn(c)} for b in bl for c in bl
        if act(x.gamma(b), _e(c)) != ad(B, _e(b), _e(c))))
    return rep


class HopfCoComod:
    """Crossed comodule ``zeta: K -> L`` with coaction ``rho: L -> K (x) L``.

    ``zeta(k)`` returns an element of ``L``; ``rho(l)`` returns a dict over
    ``(k, l)`` label pairs.
    """

    def __init__(self, k, l, zeta: Callable, rho: Callable, source=None):
        self.k, self.l, self.zeta, self.rho = k, l, zeta, rho
        self.source = source

    def __repr__(self):
        return f"HopfCoComod({self.k!r} -> {self.l!r})"

    @classmethod
    def finite(cls, k, l, zeta: SparseMat, rho: Sequence[SparseVec], source=None) -> "HopfCoComod":
        cols = zeta.columns()
        rows = [dict(r) for r in rho]
        return cls(k, l, lambda a: cols[a], lambda b: rows[b], source=source)

    def rho_apply(self, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for q, c in v.items():
            vaxpy(acc, c, self.rho(q))
        return acc


def check_hopf_cocomod(x: HopfCoComod) -> Report:
    K, L = x.k, x.l
    kl, ll = K.basis(), L.basis()
    ln = L.label
    rep = Report("Hopf crossed comodule")
    rep.extend(check_hopf_morphism(x.zeta, K, L, labels=kl), prefix="zeta_morphism")
    rho = x.rho

    def counit_ok(b):
        acc = {}
        for (p, q), c in rho(b).items():
            vaxpy(acc, c * K.counit(_e(p)), _e(q))
        return acc == _e(b)

    rep.record("comodule_counit", first({"l": ln(b), "index": b} for b in ll if not counit_ok(b)))

    def coassoc_ok(b):
        left, right = {}, {}
        for (p, q), c in rho(b).items():
            for (p1, p2), e in K.coproduct(_e(p)).items():
                vaxpy(left, c * e, {(p1, p2, q): Fraction(1)})
            for (p2, q2), e in rho(q).items():
                vaxpy(right, c * e, {(p, p2, q2): Fraction(1)})
        return left == right

    rep.record("comodule_coassociative", first({"l": ln(b)} for b in ll if not coassoc_ok(b)))

    def kl_mul(s, t):
        acc = {}
        for (p, q), c in s.items():
            for (p2, q2), e in t.items():
                vaxpy(acc, c * e, tensor(K.mul(_e(p), _e(p2)), L.mul(_e(q), _e(q2))))
        return acc

    rep.record("comodule_algebra", first(
        {"l": ln(a), "l'": ln(b)} for a in ll for b in ll
        if x.rho_apply(L.mul(_e(a), _e(b))) != kl_mul(rho(a), rho(b))))
    rep.record("comodule_algebra_unit", None if x.rho_apply(L.one()) == tensor(K.one(), L.one()) else "1")

    def rho_LL(t):
        # (mu_K (x) id (x) id) o (id (x) tau (x) id) o (rho (x) rho)
        acc = {}
        for (a, b), c in t.items():
            for (p, q), e in rho(a).items():
                for (p2, q2), f in rho(b).items():
                    for k, g in K.mul(_e(p), _e(p2)).items():
                        vaxpy(acc, c * e * f * g, {(k, q, q2): Fraction(1)})
        return acc

    def coalg_ok(b):
        left = {}
        for (p, q), c in rho(b).items():
            for (q1, q2), e in L.coproduct(_e(q)).items():
                vaxpy(left, c * e, {(p, q1, q2): Fraction(1)})
        return left == rho_LL(L.coproduct(_e(b)))

    rep.record("comodule_coalgebra", first({"l": ln(b)} for b in ll if not coalg_ok(b)))

    def counit_map_ok(b):
        acc = {}
        for (p, q), c in rho(b).items():
            vaxpy(acc, c * L.counit(_e(q)), _e(p))
        return acc == vscale(L.counit(_e(b)), K.one())

    rep.record("comodule_coalgebra_counit", first({"l": ln(b)} for b in ll if not counit_map_ok(b)))

    def ii_ok(a):
        left = x.rho_apply(x.zeta(a))
        right = {}
        for (p, q), c in coad(K, _e(a)).items():
            vaxpy(right, c, tensor(_e(p), x.zeta(q)))
        return left == right

    rep.record("ii_coequivariance", first({"k": K.label(a)} for a in kl if not ii_ok(a)))

    def iii_ok(b):
        acc = {}
        for (p, q), c in rho(b).items():
            vaxpy(acc, c, tensor(x.zeta(p), _e(q)))
        return acc == coad(L, _e(b))

    rep.record("iii_copeiffer", first({"l": ln(b)} for b in ll if not iii_ok(b)))
    return rep


class PreCat1Hopf:
    """Hopf morphisms ``s, t: A -> H`` and ``e: H -> A`` with ``s e = t e = id``."""

    def __init__(self, a, h, s: Callable, t: Callable, e: Callable, degree: int = 4, source=None):
        self.a, self.h, self.s, self.t, self.e = a, h, s, t, e
        self.degree = degree
        self.source = source

    def __repr__(self):
        return f"PreCat1Hopf({self.a!r} => {self.h!r})"

    @property
    def enveloping(self) -> bool:
        return isinstance(self.a, EnvelopingAlgebra) and isinstance(self.h, EnvelopingAlgebra)


def precat1_from_lie2(L: LieTwoAlg, degree: int = 4) -> PreCat1Hopf:
    """``U`` applied termwise to a strict Lie 2-algebra."""
    A, H = EnvelopingAlgebra(L.g1), EnvelopingAlgebra(L.g0)
    return PreCat1Hopf(A, H, EnvelopingMorphism(A, H, L.s), EnvelopingMorphism(A, H, L.t),
                       EnvelopingMorphism(H, A, L.i), degree=degree, source=L)


def check_precat1(p: PreCat1Hopf, d: Optional[int] = None) -> Report:
    d = p.degree if d is None else d
    al, hl = p.a.basis(d), p.h.basis(d)
    rep = Report("pre-cat1 Hopf algebra")
    for name, f, src, dst, labels in (("s", p.s, p.a, p.h, al), ("t", p.t, p.a, p.h, al),
                                      ("e", p.e, p.h, p.a, hl)):
        rep.extend(check_hopf_morphism(f, src, dst, labels=labels), prefix=f"{name}_morphism")
    for name, f in (("s_e_identity", p.s), ("t_e_identity", p.t)):
        rep.record(name, first(p.h.label(k) for k in hl if apply_linear(f, p.e(k)) != _e(k)))
    return rep


# -- morphisms of crossed structures ---------------------------------------------

def check_crossed_morphism(x, y, rho, sigma, degree: Optional[int] = None) -> Report:
    """Both commuting squares for a morphism ``(rho, sigma): x -> y``.

    Groups take index lists, Lie crossed modules matrices, Hopf crossed
    (co)modules callables from basis labels to elements.
    """
    if isinstance(x, GroupXMod):
        rep = Report("group crossed module morphism")
        rep.record("rho_homomorphism", is_homomorphism(rho, x.m, y.m))
        rep.record("sigma_homomorphism", is_homomorphism(sigma, x.n, y.n))
        rep.record("mu_square", first(m for m in x.m.elements() if y.mu[rho[m]] != sigma[x.mu[m]]))
        rep.record("action_square", first(
            (n, m) for n in x.n.elements() for m in x.m.elements()
            if rho[x.action[n][m]] != y.action[sigma[n]][rho[m]]))
        return rep
    if isinstance(x, LieXMod):
        rep = Report("Lie crossed module morphism")
        rep.record("rho_lie_morphism", check_lie_morphism(rho, x.m, y.m))
        rep.record("sigma_lie_morphism", check_lie_morphism(sigma, x.n, y.n))
        rep.note("mu_square", y.mu @ rho == sigma @ x.mu)
        sig, rh = sigma.columns(), rho.columns()
        rep.record("action_square", first(
            (i, j) for i in range(x.n.dim) for j in range(x.m.dim)
            if rho.matvec(x.action[i].column(j)) != y.act(sig[i], rh[j])))
        return rep
    if isinstance(x, HopfXMod):
        bl, hl = x.labels(degree)
        rep = Report("Hopf crossed module morphism")
        rep.extend(check_hopf_morphism(rho, x.b, y.b, labels=bl), prefix="rho")
        rep.extend(check_hopf_morphism(sigma, x.h, y.h, labels=hl), prefix="sigma")
        rep.record("gamma_square", first(
            x.b.label(b) for b in bl if y.gamma_apply(rho(b)) != apply_linear(sigma, x.gamma(b))))
        rep.record("action_square", first(
            (x.h.label(p), x.b.label(b)) for p in hl for b in bl
            if apply_linear(rho, x.phi(p, b)) != y.act(sigma(p), rho(b))))
        return rep
    if isinstance(x, HopfCoComod):
        rep = Report("Hopf crossed comodule morphism")
        rep.extend(check_hopf_morphism(rho, x.k, y.k), prefix="rho")
        rep.extend(check_hopf_morphism(sigma, x.l, y.l), prefix="sigma")
        rep.record("zeta_square", first(
            a for a in x.k.basis() if apply_linear(y.zeta, rho(a)) != apply_linear(sigma, x.zeta(a))))

        def coaction_ok(b):
            left = y.rho_apply(sigma(b))
            right = {}
            for (p, q), c in x.rho(b).items():
                vaxpy(right, c, tensor(rho(p), sigma(q)))
            return left == right

        rep.record("coaction_square", first(b for b in x.l.basis() if not coaction_ok(b)))
        return rep
    raise TypeError(f"no crossed morphism checker for {type(x).__name__}")
