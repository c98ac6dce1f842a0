"""Universal enveloping algebras in PBW normal form.

A PBW monomial is a non-decreasing tuple of generator indices, ``()`` being
the unit.  Products are straightened by the rewriting rule
``x_j x_i -> x_i x_j + [x_j, x_i]`` for ``j > i``; all results are cached per
algebra.  Elements are exact and never truncated: only the checkers take a
degree bound.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .hopf import HopfElement, primitive_basis, verify_hopf
from .lie import FinLieAlgebra, NotADerivation, check_derivation, check_lie_morphism
from .linalg import SparseMat, SparseVec, vaxpy, vscale
from .report import AxiomError, Report

Mono = Tuple[int, ...]

__all__ = [
    "EnvelopingAlgebra",
    "UElement",
    "EnvelopingMorphism",
    "EnvelopingAction",
    "pbw_product",
    "u_coproduct",
    "u_antipode",
    "primitives_up_to",
    "extend_action",
    "verify_enveloping",
    "monomials",
]


def monomials(n: int, degree: int) -> List[Mono]:
    """PBW monomials in ``n`` generators of length at most ``degree``."""
    out: List[Mono] = []
    for k in range(degree + 1):
        out.extend(itertools.combinations_with_replacement(range(n), k))
    return out


class EnvelopingAlgebra:
    """``U(g)`` for a finite-dimensional Lie algebra ``g``."""

    is_finite = False

    def __init__(self, lie: FinLieAlgebra):
        self.lie = lie
        self._gm: Dict[Tuple[int, Mono], SparseVec] = {}
        self._mm: Dict[Tuple[Mono, Mono], SparseVec] = {}
        self._delta: Dict[Mono, SparseVec] = {}
        self._S: Dict[Mono, SparseVec] = {}

    def __repr__(self):
        return f"U({self.lie!r})"

    @property
    def ngens(self) -> int:
        return self.lie.dim

    def basis(self, degree: int = 4) -> List[Mono]:
        return monomials(self.lie.dim, degree)

    def label(self, mono: Mono) -> str:
        if not mono:
            return "1"
        parts = []
        for i, k in sorted(Counter(mono).items()):
            name = self.lie.names[i]
            parts.append(name if k == 1 else f"{name}^{k}")
        return " ".join(parts)

    def one(self) -> SparseVec:
        return {(): Fraction(1)}

    def generator(self, i: int) -> "UElement":
        return UElement(self, {(i,): Fraction(1)})

    def element(self, terms) -> "UElement":
        return UElement(self, {tuple(k): Fraction(c) for k, c in dict(terms).items()})

    # straightening
    def gen_times(self, i: int, w: Mono) -> SparseVec:
        """Normal form of ``x_i * w`` for a PBW monomial ``w``."""
        key = (i, w)
        hit = self._gm.get(key)
        if hit is not None:
            return hit
        if not w or i <= w[0]:
            res = {(i,) + w: Fraction(1)}
        else:
            head, rest = w[0], w[1:]
            res = {}
            for mono, c in self.gen_times(i, rest).items():
                vaxpy(res, c, self.gen_times(head, mono))
            for k, c in self.lie.structure(i, head).items():
                vaxpy(res, c, self.gen_times(k, rest))
        self._gm[key] = res
        return res

    def mono_mul(self, u: Mono, v: Mono) -> SparseVec:
        key = (u, v)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        if not u:
            res = {v: Fraction(1)}
        elif not v:
            res = {u: Fraction(1)}
        elif u[-1] <= v[0]:
            res = {u + v: Fraction(1)}
        else:
            res = {}
            for mono, c in self.gen_times(u[-1], v).items():
                vaxpy(res, c, self.mono_mul(u[:-1], mono))
        self._mm[key] = res
        return res

    def mul(self, a: SparseVec, b: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for u, x in a.items():
            for v, y in b.items():
                vaxpy(acc, x * y, self.mono_mul(u, v))
        return acc

    # coalgebra
    def mono_coproduct(self, mono: Mono) -> SparseVec:
        hit = self._delta.get(mono)
        if hit is not None:
            return hit
        counts = sorted(Counter(mono).items())
        res = {}
        for split in itertools.product(*(range(k + 1) for _, k in counts)):
            left, right, coeff = [], [], 1
            for (g, k), s in zip(counts, split):
                left += [g] * s
                right += [g] * (k - s)
                coeff *= comb(k, s)
            res[(tuple(left), tuple(right))] = Fraction(coeff)
        self._delta[mono] = res
        return res

    def coproduct(self, a: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for m, c in a.items():
            vaxpy(acc, c, self.mono_coproduct(m))
        return acc

    def counit(self, a: SparseVec) -> Fraction:
        return Fraction(a.get((), 0))

    def mono_antipode(self, mono: Mono) -> SparseVec:
        hit = self._S.get(mono)
        if hit is not None:
            return hit
        res: SparseVec = {(): Fraction(1)}
        for g in mono:
            nxt: SparseVec = {}
            for m, c in res.items():
                vaxpy(nxt, c, self.gen_times(g, m))
            res = nxt
        res = vscale(Fraction((-1) ** len(mono)), res)
        self._S[mono] = res
        return res

    def antipode(self, a: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for m, c in a.items():
            vaxpy(acc, c, self.mono_antipode(m))
        return acc


class UElement(HopfElement):
    """Element of an enveloping algebra: PBW monomial -> coefficient."""

    __slots__ = ()

    @property
    def terms(self) -> SparseVec:
        return self.coords

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.coords), default=0)


def _check_same(a: UElement, b: UElement):
    if a.algebra is not b.algebra:
        raise ValueError("elements of different enveloping algebras")


def pbw_product(a: UElement, b: UElement) -> UElement:
    _check_same(a, b)
    return UElement(a.algebra, a.algebra.mul(a.coords, b.coords))


def u_coproduct(a: UElement) -> SparseVec:
    return a.algebra.coproduct(a.coords)


def u_antipode(a: UElement) -> UElement:
    return UElement(a.algebra, a.algebra.antipode(a.coords))


def _as_enveloping(g) -> EnvelopingAlgebra:
    return g if isinstance(g, EnvelopingAlgebra) else EnvelopingAlgebra(g)


def primitives_up_to(g, d: int) -> List[UElement]:
    """Basis of the primitives of filtration degree at most ``d``, by linear solve."""
    if d < 1:
        raise ValueError("degree bound must be at least 1")
    U = _as_enveloping(g)
    return [UElement(U, v) for v in primitive_basis(U, U.basis(d))]


class EnvelopingMorphism:
    """``U(f)`` for a Lie morphism ``f``: generator images, extended multiplicatively."""

    def __init__(self, src: EnvelopingAlgebra, dst: EnvelopingAlgebra, matrix: SparseMat,
                 check: bool = True):
        if matrix.rows != dst.ngens or matrix.cols != src.ngens:
            raise AxiomError("morphism matrix has the wrong shape")
        if check:
            w = check_lie_morphism(matrix, src.lie, dst.lie)
            if w is not None:
                raise AxiomError(f"not a Lie morphism on basis pair {w}", witness=w)
        self.src, self.dst, self.matrix = src, dst, matrix
        self._images = [{(k,): c for k, c in col.items()} for col in matrix.columns()]
        self._cache: Dict[Mono, SparseVec] = {}

    def __call__(self, mono: Mono) -> SparseVec:
        hit = self._cache.get(mono)
        if hit is None:
            hit = self.dst.one()
            for g in mono:
                hit = self.dst.mul(hit, self._images[g])
            self._cache[mono] = hit
        return hit

    def apply(self, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for m, c in v.items():
            vaxpy(acc, c, self(m))
        return acc


class EnvelopingAction:
    """``U(n)`` acting on ``U(m)``, extending derivations ``act[i]`` of ``m``.

    Generators of ``n`` act as derivations of the associative product of
    ``U(m)`` and PBW monomials act by composition.
    """

    def __init__(self, Un: EnvelopingAlgebra, Um: EnvelopingAlgebra, act: Sequence[SparseMat],
                 check: bool = True):
        if len(act) != Un.ngens:
            raise AxiomError("need one derivation matrix per generator")
        for i, d in enumerate(act):
            if d.rows != Um.ngens or d.cols != Um.ngens:
                raise AxiomError("derivation matrix has the wrong shape")
            if check:
                w = check_derivation(d, Um.lie)
                if w is not None:
                    raise NotADerivation(f"generator {Un.lie.names[i]} is not a derivation on pair {w}",
                                         witness=(i,) + w)
        self.Un, self.Um, self.act = Un, Um, list(act)
        self._images = [[{(k,): c for k, c in col.items()} for col in d.columns()] for d in act]
        self._gen: Dict[Tuple[int, Mono], SparseVec] = {}
        self._mono: Dict[Tuple[Mono, Mono], SparseVec] = {}

    def gen_on(self, i: int, mono: Mono) -> SparseVec:
        key = (i, mono)
        hit = self._gen.get(key)
        if hit is not None:
            return hit
        Um = self.Um
        res: SparseVec = {}
        for t, y in enumerate(mono):
            dy = self._images[i][y]
            if not dy:
                continue
            left = Um.mul({mono[:t]: Fraction(1)}, dy)
            vaxpy(res, 1, Um.mul(left, {mono[t + 1:]: Fraction(1)}))
        self._gen[key] = res
        return res

    def __call__(self, h: Mono, b: Mono) -> SparseVec:
        key = (h, b)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        if not h:
            res = {b: Fraction(1)}
        else:
            res = {}
            for m, c in self(h[1:], b).items():
                vaxpy(res, c, self.gen_on(h[0], m))
        self._mono[key] = res
        return res

    def apply(self, h: SparseVec, b: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for u, x in h.items():
            for v, y in b.items():
                vaxpy(acc, x * y, self(u, v))
        return acc


def extend_action(n: FinLieAlgebra, m: FinLieAlgebra, act: Sequence[SparseMat],
                  a: UElement, b: UElement) -> UElement:
    """Act with ``a`` in ``U(n)`` on ``b`` in ``U(m)``; raises :class:`NotADerivation`."""
    if a.algebra.lie is not n or b.algebra.lie is not m:
        raise ValueError("elements do not belong to U(n) and U(m)")
    action = EnvelopingAction(a.algebra, b.algebra, act)
    return UElement(b.algebra, action.apply(a.coords, b.coords))


def verify_enveloping(U: EnvelopingAlgebra, d: int = 4, samples: int = 200, seed: int = 0) -> Report:
    """Hopf axiom suite on PBW monomials of degree at most ``d``.

    Associativity runs on ``samples`` random monomial triples; every other
    law runs on all monomials (or pairs of monomials).
    """
    labels = U.basis(d)
    rng = random.Random(seed)
    triples = [tuple(rng.choice(labels) for _ in range(3)) for _ in range(samples)]
    rep = verify_hopf(U, labels=labels, triples=triples)
    rep.subject = f"hopf axioms of {U!r} up to degree {d}"
    return rep
