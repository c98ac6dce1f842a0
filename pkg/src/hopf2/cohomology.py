"""Chevalley-Eilenberg cochains in low degree, module extensions and splicing.

A ``p``-cochain is stored on strictly increasing index tuples of ``g`` and is
extended to other tuples by alternation.  Values are vectors of the module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .crossed import LieXMod, check_crossed_morphism, check_lie_xmod
from .functors import functor_u
from .lie import FinLieAlgebra, JacobiError, LieModule, check_lie_morphism
from .linalg import (SparseMat, SparseVec, kernel_basis, membership, rank, solve_linear, span_basis,
                     vaxpy, vec, vsub)
from .report import AxiomError, Report, first

__all__ = [
    "MAX_DEGREE",
    "NotClosed",
    "Cochain",
    "ModuleSES",
    "ce_differential",
    "differential_matrix",
    "cochain_basis",
    "cohomology_dim",
    "is_coboundary",
    "connecting_hom",
    "splice",
    "splice_report",
    "coboundary_shear",
    "enveloping_skeletal",
]

MAX_DEGREE = 3


class NotClosed(JacobiError):
    """A cochain that should be a cocycle is not."""


def _sort_sign(idx: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sign of the sorting permutation, or 0 when an index repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


@dataclass
class Cochain:
    """Alternating ``degree``-linear map from ``g`` to a module."""

    degree: int
    values: Dict[Tuple[int, ...], SparseVec] = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.degree <= MAX_DEGREE + 1:
            raise ValueError(f"cochain degree {self.degree} out of range")
        clean = {}
        for k, v in self.values.items():
            k = tuple(int(i) for i in k)
            if len(k) != self.degree:
                raise ValueError(f"key {k} does not have length {self.degree}")
            sign, key = _sort_sign(k)
            v = vec(v)
            if sign == 0:
                if v:
                    raise ValueError(f"alternating cochain is nonzero on repeated index {k}")
                continue
            if sign < 0:
                v = {i: -c for i, c in v.items()}
            if key in clean and clean[key] != v:
                raise ValueError(f"conflicting values for {key}")
            if v:
                clean[key] = v
        self.values = clean

    def __call__(self, *idx: int) -> SparseVec:
        sign, key = _sort_sign(idx)
        if sign == 0:
            return {}
        v = self.values.get(key, {})
        return v if sign > 0 else {i: -c for i, c in v.items()}

    def is_zero(self) -> bool:
        return not self.values

    def __sub__(self, other: "Cochain") -> "Cochain":
        keys = set(self.values) | set(other.values)
        return Cochain(self.degree, {k: vsub(self.values.get(k, {}), other.values.get(k, {})) for k in keys})

    def map(self, f: SparseMat) -> "Cochain":
        """Post-compose with a module map."""
        return Cochain(self.degree, {k: f.matvec(v) for k, v in self.values.items()})


def cochain_basis(g: FinLieAlgebra, M: LieModule, p: int) -> List[Tuple[Tuple[int, ...], int]]:
    return [(c, k) for c in itertools.combinations(range(g.dim), p) for k in range(M.dim)]


def _to_vec(c: Cochain, g: FinLieAlgebra, M: LieModule) -> SparseVec:
    index = {b: i for i, b in enumerate(cochain_basis(g, M, c.degree))}
    return {index[(key, k)]: x for key, v in c.values.items() for k, x in v.items()}


def _from_vec(v: SparseVec, g: FinLieAlgebra, M: LieModule, p: int) -> Cochain:
    basis = cochain_basis(g, M, p)
    values: Dict[Tuple[int, ...], SparseVec] = {}
    for i, x in v.items():
        key, k = basis[i]
        values.setdefault(key, {})[k] = x
    return Cochain(p, values)


def ce_differential(g: FinLieAlgebra, M: LieModule, c: Cochain) -> Cochain:
    """``(dc)(x_0..x_p) = sum (-1)^i x_i . c(..^i..) + sum_{i<j} (-1)^{i+j} c([x_i,x_j], ..^i..^j..)``."""
    p = c.degree
    if p > MAX_DEGREE:
        raise ValueError(f"differential implemented up to degree {MAX_DEGREE}")
    if M.algebra is not g and M.algebra.dim != g.dim:
        raise ValueError("module over a different Lie algebra")
    out: Dict[Tuple[int, ...], SparseVec] = {}
    for xs in itertools.combinations(range(g.dim), p + 1):
        acc: SparseVec = {}
        for i, x in enumerate(xs):
            rest = xs[:i] + xs[i + 1:]
            vaxpy(acc, (-1) ** i, M.action[x].matvec(c(*rest)))
        for i, j in itertools.combinations(range(p + 1), 2):
            rest = tuple(xs[k] for k in range(p + 1) if k not in (i, j))
            for k, coef in g.structure(xs[i], xs[j]).items():
                vaxpy(acc, (-1) ** (i + j) * coef, c(k, *rest))
        if acc:
            out[xs] = acc
    return Cochain(p + 1, out)


def differential_matrix(g: FinLieAlgebra, M: LieModule, p: int) -> SparseMat:
    """Matrix of ``d: C^p -> C^{p+1}`` on the basis ``(index tuple, module index)``."""
    src = cochain_basis(g, M, p)
    dst_len = len(cochain_basis(g, M, p + 1))
    cols = [_to_vec(ce_differential(g, M, Cochain(p, {key: {k: 1}})), g, M) for key, k in src]
    return SparseMat.from_columns(cols, dst_len)


def cohomology_dim(g: FinLieAlgebra, M: LieModule, p: int) -> int:
    """``dim H^p = dim ker d_p - rank d_{p-1}`` from exact ranks."""
    if not 0 <= p <= MAX_DEGREE:
        raise ValueError(f"cohomology implemented in degrees 0..{MAX_DEGREE}")
    dp = differential_matrix(g, M, p)
    kernel = dp.cols - rank(dp)
    image = rank(differential_matrix(g, M, p - 1)) if p > 0 else 0
    return kernel - image


def is_coboundary(g: FinLieAlgebra, M: LieModule, c: Cochain) -> bool:
    if c.degree == 0:
        return c.is_zero()
    d = differential_matrix(g, M, c.degree - 1)
    return membership(_to_vec(c, g, M), d.columns(), dim=d.rows)


def _closed_witness(g, M, c: Cochain):
    dc = ce_differential(g, M, c)
    return first(k for k in sorted(dc.values))


class ModuleSES:
    """``0 -> V --inject--> I --project--> Q -> 0`` of ``g``-modules."""

    def __init__(self, v: LieModule, i: LieModule, q: LieModule, inject: SparseMat, project: SparseMat,
                 check: bool = True):
        if not isinstance(inject, SparseMat):
            inject = SparseMat.from_dense(inject, cols=v.dim)
        if not isinstance(project, SparseMat):
            project = SparseMat.from_dense(project, cols=i.dim)
        if (inject.rows, inject.cols) != (i.dim, v.dim) or (project.rows, project.cols) != (q.dim, i.dim):
            raise AxiomError("inject/project have the wrong shape")
        self.v, self.i, self.q = v, i, q
        self.inject, self.project = inject, project
        if check:
            self.report().require()

    @property
    def g(self) -> FinLieAlgebra:
        return self.i.algebra

    def report(self) -> Report:
        rep = Report("short exact sequence of modules")
        V, I, Q, a, b = self.v, self.i, self.q, self.inject, self.project
        rep.record("inject_equivariant", first(
            k for k in range(I.algebra.dim) if a @ V.action[k] != I.action[k] @ a))
        rep.record("project_equivariant", first(
            k for k in range(I.algebra.dim) if b @ I.action[k] != Q.action[k] @ b))
        rep.note("inject_injective", rank(a) == V.dim)
        rep.note("project_surjective", rank(b) == Q.dim)
        rep.note("exact_in_middle", not (b @ a).entries and V.dim + Q.dim == I.dim)
        return rep

    def lift(self) -> SparseMat:
        """A linear section ``Q -> I`` of ``project``."""
        cols = []
        for k in range(self.q.dim):
            x = solve_linear(self.project, {k: Fraction(1)})
            if x is None:
                raise AxiomError("project is not surjective", witness=k)
            cols.append(x)
        return SparseMat.from_columns(cols, self.i.dim)


def connecting_hom(g: FinLieAlgebra, ses: ModuleSES, alpha: Cochain,
                   lift: Optional[SparseMat] = None) -> Cochain:
    """``theta = inject^{-1} d(lift o alpha)``, a ``V``-valued 3-cocycle."""
    if alpha.degree != 2:
        raise ValueError("alpha must be a 2-cochain")
    w = _closed_witness(g, ses.q, alpha)
    if w is not None:
        raise NotClosed(f"alpha is not closed: d(alpha) is nonzero on {w}", witness=w)
    lam = ses.lift() if lift is None else lift
    if ses.project @ lam != SparseMat.identity(ses.q.dim):
        raise AxiomError("lift is not a section of project")
    beta = alpha.map(lam)
    dbeta = ce_differential(g, ses.i, beta)
    values = {}
    for key, v in dbeta.values.items():
        x = solve_linear(ses.inject, v)
        if x is None:
            raise AxiomError("d(lift o alpha) leaves the image of V", witness=key)
        values[key] = x
    theta = Cochain(3, values)
    if theta.degree <= MAX_DEGREE and not ce_differential(g, ses.v, theta).is_zero():
        raise AxiomError("theta is not closed")
    return theta


def splice(g: FinLieAlgebra, ses: ModuleSES, alpha: Cochain) -> LieXMod:
    """Crossed module ``I -> Q x_alpha g`` with kernel ``V`` and cokernel ``g``.

    ``n`` has basis ``Q`` first then ``g``; its Jacobi identity is exactly the
    closedness of ``alpha`` and a failure raises with the witness triple.
    """
    if alpha.degree != 2:
        raise ValueError("alpha must be a 2-cochain")
    I, Q = ses.i, ses.q
    dq, dg = Q.dim, g.dim
    bracket = {}
    for i in range(dg):
        for a in range(dq):
            bracket[(dq + i, a)] = dict(Q.action[i].column(a))
    for i, j in itertools.combinations(range(dg), 2):
        v = dict(alpha(i, j))
        for k, c in g.structure(i, j).items():
            v[dq + k] = c
        bracket[(dq + i, dq + j)] = v
    try:
        n = FinLieAlgebra(dq + dg, bracket, names=list(Q.names) + list(g.names))
    except JacobiError as exc:
        w = _closed_witness(g, Q, alpha)
        names = tuple(g.names[k] for k in w) if w is not None else exc.witness
        raise NotClosed(f"alpha is not closed; Jacobi fails in the extension on {names}",
                        witness=names) from exc
    m = FinLieAlgebra(I.dim, {}, names=list(I.names))
    mu = SparseMat(dq + dg, I.dim, dict(ses.project.entries))
    zero = SparseMat.zero(I.dim, I.dim)
    action = [zero] * dq + list(I.action)
    x = LieXMod(m, n, mu, action)
    x.ses, x.alpha = ses, alpha
    return x


def splice_report(g: FinLieAlgebra, x: LieXMod) -> Report:
    """Crossed-module axioms, ``ker mu = V`` and ``n / im mu = g``."""
    ses = x.ses
    rep = Report("splice")
    rep.extend(check_lie_xmod(x), prefix="xmod")
    K = kernel_basis(x.mu)
    inj = ses.inject.columns()
    rep.note("kernel_dim", len(K) == ses.v.dim)
    rep.note("kernel_is_V", all(membership(v, inj, dim=ses.i.dim) for v in K) and
             all(membership(v, K, dim=ses.i.dim) for v in inj))
    dq, dg = ses.q.dim, g.dim
    pi = SparseMat(dg, dq + dg, {(i, dq + i): 1 for i in range(dg)})
    rep.record("quotient_lie_morphism", check_lie_morphism(pi, x.n, g))
    ker_pi = kernel_basis(pi)
    im_mu = span_basis(x.mu.columns())
    rep.note("cokernel_is_g", rank(pi) == dg and len(ker_pi) == len(im_mu) and
             all(membership(v, im_mu, dim=dq + dg) for v in ker_pi))
    return rep


def coboundary_shear(g: FinLieAlgebra, ses: ModuleSES, alpha: Cochain, b: Cochain):
    """Splices for ``alpha`` and ``alpha + db`` and the morphism between them.

    ``rho`` is the identity of ``I`` and ``sigma(q, x) = (q - b(x), x)``.
    Returns ``(x, y, rho, sigma, report)``.
    """
    if b.degree != 1:
        raise ValueError("b must be a 1-cochain")
    db = ce_differential(g, ses.q, b)
    keys = set(alpha.values) | set(db.values)
    alpha2 = Cochain(2, {k: vaxpy(dict(alpha.values.get(k, {})), 1, db.values.get(k, {})) for k in keys})
    x, y = splice(g, ses, alpha), splice(g, ses, alpha2)
    dq, dg = ses.q.dim, g.dim
    entries = {(k, k): Fraction(1) for k in range(dq + dg)}
    for i in range(dg):
        for a, c in b(i).items():
            entries[(a, dq + i)] = -c
    sigma = SparseMat(dq + dg, dq + dg, entries)
    rho = SparseMat.identity(ses.i.dim)
    rep = check_crossed_morphism(x, y, rho, sigma)
    rep.subject = "coboundary shear"
    return x, y, rho, sigma, rep


def enveloping_skeletal(g: FinLieAlgebra, ses: ModuleSES, alpha: Cochain, d: int = 4):
    """``U`` of the splice: ``S(I) -> U(Q x_alpha g)``."""
    return functor_u(splice(g, ses, alpha), d)
