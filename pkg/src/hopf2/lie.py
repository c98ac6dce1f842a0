"""Finite-dimensional Lie algebras by structure constants, and their modules."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import SparseMat, SparseVec, vaxpy, vec
from .report import AxiomError

__all__ = [
    "JacobiError",
    "NotADerivation",
    "FinLieAlgebra",
    "LieModule",
    "check_lie_morphism",
    "check_derivation",
    "sl2",
    "heis3",
    "nonabelian2",
    "abelian",
    "solv3",
    "trivial_module",
]


class JacobiError(AxiomError):
    """Bracket data violating antisymmetry or the Jacobi identity."""


class NotADerivation(AxiomError):
    """A matrix that should act by derivations does not."""


class FinLieAlgebra:
    """Lie algebra on basis ``0..dim-1``; ``bracket[(i, j)]`` is ``[x_i, x_j]``.

    Only one of ``(i, j)`` / ``(j, i)`` needs to be given; if both are, they
    must be negatives of each other.  The Jacobi identity is checked on all
    basis triples.
    """

    def __init__(self, dim: int, bracket=None, names: Optional[Sequence[str]] = None,
                 check: bool = True):
        self.dim = int(dim)
        self.names = list(names) if names is not None else [f"x{i}" for i in range(self.dim)]
        table: Dict[Tuple[int, int], SparseVec] = {}
        for (i, j), v in dict(bracket or {}).items():
            i, j = int(i), int(j)
            v = vec(v)
            if not (0 <= i < self.dim and 0 <= j < self.dim) or any(not 0 <= k < self.dim for k in v):
                raise JacobiError(f"bracket entry ({i}, {j}) out of range", witness=(i, j))
            if i == j:
                if v:
                    raise JacobiError("[x, x] must vanish", witness=(i, i))
                continue
            neg = {k: -c for k, c in v.items()}
            for key, val in (((i, j), v), ((j, i), neg)):
                if key in table and table[key] != val:
                    raise JacobiError("bracket is not antisymmetric", witness=key)
                if val:
                    table[key] = val
        self.table = table
        if check:
            w = self.jacobi_witness()
            if w is not None:
                raise JacobiError(f"Jacobi identity fails on basis triple {w}", witness=w)

    def __repr__(self):
        return f"FinLieAlgebra(dim={self.dim})"

    def structure(self, i: int, j: int) -> SparseVec:
        return self.table.get((i, j), {})

    def bracket(self, u: SparseVec, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, x in u.items():
            for j, y in v.items():
                s = self.table.get((i, j))
                if s:
                    vaxpy(acc, x * y, s)
        return acc

    def jacobi_witness(self) -> Optional[Tuple[int, int, int]]:
        e = _unit_vectors(self.dim)
        for i, j, k in itertools.combinations(range(self.dim), 3):
            acc = self.bracket(e[i], self.structure(j, k))
            vaxpy(acc, 1, self.bracket(e[j], self.structure(k, i)))
            vaxpy(acc, 1, self.bracket(e[k], self.structure(i, j)))
            if acc:
                return (i, j, k)
        return None

    def is_abelian(self) -> bool:
        return not self.table

    def ad_matrix(self, i: int) -> SparseMat:
        return SparseMat(self.dim, self.dim, {(k, j): c for j in range(self.dim)
                                              for k, c in self.structure(i, j).items()})

    def bracket_entries(self) -> List[Tuple[int, int, SparseVec]]:
        return [(i, j, v) for (i, j), v in sorted(self.table.items()) if i < j]


def _unit_vectors(n: int) -> List[SparseVec]:
    return [{i: Fraction(1)} for i in range(n)]


def _comm(a: SparseMat, b: SparseMat) -> SparseMat:
    return (a @ b) - (b @ a)


def _combo(mats: Sequence[SparseMat], v: SparseVec, n: int) -> SparseMat:
    out = SparseMat.zero(n, n)
    for i, c in v.items():
        out = out + mats[i].scale(c)
    return out


class LieModule:
    """A representation: ``action[i]`` is the matrix of generator ``i``."""

    def __init__(self, algebra: FinLieAlgebra, dim: int, action: Sequence, names=None,
                 check: bool = True):
        self.algebra = algebra
        self.dim = int(dim)
        mats = []
        for a in action:
            if not isinstance(a, SparseMat):
                a = SparseMat.from_dense(a, cols=self.dim) if len(a) else SparseMat.zero(0, self.dim)
            if a.rows != self.dim or a.cols != self.dim:
                raise AxiomError("action matrix has the wrong shape")
            mats.append(a)
        if len(mats) != algebra.dim:
            raise AxiomError("need one action matrix per generator")
        self.action = mats
        self.names = list(names) if names is not None else [f"v{i}" for i in range(self.dim)]
        if check:
            w = self.representation_witness()
            if w is not None:
                raise AxiomError(f"action is not a representation on generators {w}", witness=w)

    def __repr__(self):
        return f"LieModule(dim={self.dim}, over {self.algebra!r})"

    def representation_witness(self) -> Optional[Tuple[int, int]]:
        g = self.algebra
        for i, j in itertools.combinations(range(g.dim), 2):
            if _combo(self.action, g.structure(i, j), self.dim) != _comm(self.action[i], self.action[j]):
                return (i, j)
        return None

    def act(self, x: SparseVec, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, c in x.items():
            vaxpy(acc, c, self.action[i].matvec(v))
        return acc

    def is_trivial(self) -> bool:
        return all(not a.entries for a in self.action)


def trivial_module(g: FinLieAlgebra, dim: int = 1) -> LieModule:
    return LieModule(g, dim, [SparseMat.zero(dim, dim) for _ in range(g.dim)])


def check_lie_morphism(f: SparseMat, src: FinLieAlgebra, dst: FinLieAlgebra) -> Optional[Tuple[int, int]]:
    """``None`` if ``f`` preserves brackets on all basis pairs, else a failing pair."""
    if f.rows != dst.dim or f.cols != src.dim:
        raise AxiomError("morphism matrix has the wrong shape")
    cols = f.columns()
    for i, j in itertools.combinations(range(src.dim), 2):
        if f.matvec(src.structure(i, j)) != dst.bracket(cols[i], cols[j]):
            return (i, j)
    return None


def check_derivation(d: SparseMat, g: FinLieAlgebra) -> Optional[Tuple[int, int]]:
    """``None`` if ``d [a, b] = [d a, b] + [a, d b]`` on all basis pairs."""
    cols = d.columns()
    e = _unit_vectors(g.dim)
    for i, j in itertools.combinations(range(g.dim), 2):
        rhs = g.bracket(cols[i], e[j])
        vaxpy(rhs, 1, g.bracket(e[i], cols[j]))
        if d.matvec(g.structure(i, j)) != rhs:
            return (i, j)
    return None


# -- catalog ---------------------------------------------------------------------

def sl2() -> FinLieAlgebra:
    """Basis order e < f < h with ``[e,f] = h``, ``[h,e] = 2e``, ``[h,f] = -2f``."""
    return FinLieAlgebra(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, names=["e", "f", "h"])


def heis3() -> FinLieAlgebra:
    """Heisenberg algebra ``[x, y] = z``."""
    return FinLieAlgebra(3, {(0, 1): {2: 1}}, names=["x", "y", "z"])


def nonabelian2() -> FinLieAlgebra:
    """Two-dimensional nonabelian algebra ``[a, b] = b``."""
    return FinLieAlgebra(2, {(0, 1): {1: 1}}, names=["a", "b"])


def abelian(n: int, names=None) -> FinLieAlgebra:
    return FinLieAlgebra(n, {}, names=names or ([f"v{i}" for i in range(n)] if n > 1 else ["v"][:n]))


def solv3() -> FinLieAlgebra:
    """Non-unimodular solvable algebra ``[a, b] = b``, ``[a, c] = c``."""
    return FinLieAlgebra(3, {(0, 1): {1: 1}, (0, 2): {2: 1}}, names=["a", "b", "c"])
