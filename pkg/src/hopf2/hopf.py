"""Finite-dimensional Hopf algebras by structure constants.

Besides :class:`FinDimHopf` this module holds the structure-agnostic tensor
helpers used throughout the package.  Anything with the methods ``basis``,
``one``, ``mul``, ``coproduct``, ``counit``, ``antipode`` and ``label`` is
treated as a Hopf algebra; elements are sparse dicts over basis labels and
elements of ``H (x) H`` are dicts over label pairs.
"""

from __future__ import annotations

import itertools
from math import lcm
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .groups import FinGroup
from .linalg import (SparseMat, SparseVec, coordinates, kernel_basis, membership, rref, scalar,
                     solve_linear, vaxpy, vec, vscale, vsub)
from .report import AxiomError, Report, first

__all__ = [
    "HopfError",
    "NotSplit",
    "FinDimHopf",
    "HopfElement",
    "Character",
    "tensor",
    "tensor_mul",
    "apply_linear",
    "apply_tensor",
    "ad",
    "coad",
    "verify_hopf",
    "group_algebra",
    "function_algebra",
    "dualize",
    "adjoint_action",
    "adjoint_coaction",
    "characters",
    "grouplikes",
    "primitives",
    "primitive_basis",
    "char_convolution",
    "check_hopf_morphism",
]


class HopfError(AxiomError):
    """Structure tensors that do not define a Hopf algebra."""


class NotSplit(ValueError):
    """Eigenvalues leave the rationals, or the algebra is not semisimple."""


# -- generic tensor helpers ---------------------------------------------------

def tensor(a: SparseVec, b: SparseVec) -> SparseVec:
    return {(i, j): x * y for i, x in a.items() for j, y in b.items()}


def apply_linear(f: Callable[[Hashable], SparseVec], v: SparseVec) -> SparseVec:
    acc: SparseVec = {}
    for k, c in v.items():
        vaxpy(acc, c, f(k))
    return acc


def apply_tensor(f, g, t: SparseVec) -> SparseVec:
    """``(f (x) g)(t)``; either map may be ``None`` for the identity."""
    acc: SparseVec = {}
    cache_f, cache_g = {}, {}
    for (i, j), c in t.items():
        fi = cache_f.get(i)
        if fi is None:
            fi = cache_f[i] = {i: Fraction(1)} if f is None else f(i)
        gj = cache_g.get(j)
        if gj is None:
            gj = cache_g[j] = {j: Fraction(1)} if g is None else g(j)
        for a, x in fi.items():
            for b, y in gj.items():
                k = (a, b)
                z = acc.get(k, 0) + c * x * y
                if z:
                    acc[k] = z
                else:
                    acc.pop(k, None)
    return acc


def tensor_mul(A, B, s: SparseVec, t: SparseVec) -> SparseVec:
    """Product in ``A (x) B``: ``(a (x) b)(c (x) d) = ac (x) bd``."""
    acc: SparseVec = {}
    for (a, b), x in s.items():
        for (c, d), y in t.items():
            left = A.mul({a: Fraction(1)}, {c: Fraction(1)})
            right = B.mul({b: Fraction(1)}, {d: Fraction(1)})
            vaxpy(acc, x * y, tensor(left, right))
    return acc


def ad(H, a: SparseVec, x: SparseVec) -> SparseVec:
    """Adjoint action ``sum a' x S(a'')``."""
    acc: SparseVec = {}
    for (p, q), c in H.coproduct(a).items():
        vaxpy(acc, c, H.mul(H.mul({p: Fraction(1)}, x), H.antipode({q: Fraction(1)})))
    return acc


def coad(H, x: SparseVec) -> SparseVec:
    """Adjoint coaction ``sum x1 S(x3) (x) x2``."""
    acc: SparseVec = {}
    for (p, q), c in H.coproduct(x).items():
        Sq = H.antipode({q: Fraction(1)})
        for (p1, p2), d in H.coproduct({p: Fraction(1)}).items():
            vaxpy(acc, c * d, tensor(H.mul({p1: Fraction(1)}, Sq), {p2: Fraction(1)}))
    return acc


def _e(k) -> SparseVec:
    return {k: Fraction(1)}


def verify_hopf(H, labels: Optional[Sequence] = None, triples: Optional[Sequence] = None) -> Report:
    """Check every Hopf algebra law on the given basis labels.

    ``triples`` overrides the associativity test set (default: all triples).
    """
    labels = list(H.basis() if labels is None else labels)
    rep = Report(f"hopf axioms of {H!r}")
    one = H.one()
    prod = {}

    def mul(a, b):
        key = (a, b)
        if key not in prod:
            prod[key] = H.mul(_e(a), _e(b))
        return prod[key]

    if triples is None:
        triples = itertools.product(labels, repeat=3)
    rep.record("associativity", first(
        (a, b, c) for a, b, c in triples
        if H.mul(mul(a, b), _e(c)) != H.mul(_e(a), mul(b, c))))
    rep.record("unit", first(a for a in labels if H.mul(one, _e(a)) != _e(a) or H.mul(_e(a), one) != _e(a)))

    def delta(k):
        return H.coproduct(_e(k))

    def coassoc(a):
        d = delta(a)
        left = {}
        for (p, q), c in d.items():
            for (p1, p2), x in delta(p).items():
                vaxpy(left, c * x, {(p1, p2, q): Fraction(1)})
        right = {}
        for (p, q), c in d.items():
            for (q1, q2), x in delta(q).items():
                vaxpy(right, c * x, {(p, q1, q2): Fraction(1)})
        return left == right

    rep.record("coassociativity", first(a for a in labels if not coassoc(a)))

    def counit_ok(a):
        d = delta(a)
        left, right = {}, {}
        for (p, q), c in d.items():
            vaxpy(left, c * H.counit(_e(p)), _e(q))
            vaxpy(right, c * H.counit(_e(q)), _e(p))
        return left == _e(a) == right

    rep.record("counit", first(a for a in labels if not counit_ok(a)))
    rep.record("unit_is_grouplike",
               None if H.coproduct(one) == tensor(one, one) and H.counit(one) == 1 else "1")
    rep.record("comult_multiplicative", first(
        (a, b) for a in labels for b in labels
        if H.coproduct(mul(a, b)) != tensor_mul(H, H, delta(a), delta(b))))
    rep.record("counit_multiplicative", first(
        (a, b) for a in labels for b in labels
        if H.counit(mul(a, b)) != H.counit(_e(a)) * H.counit(_e(b))))

    def antipode_ok(a):
        d = delta(a)
        left, right = {}, {}
        for (p, q), c in d.items():
            vaxpy(left, c, H.mul(H.antipode(_e(p)), _e(q)))
            vaxpy(right, c, H.mul(_e(p), H.antipode(_e(q))))
        target = vscale(H.counit(_e(a)), one)
        return left == target == right

    rep.record("antipode", first(a for a in labels if not antipode_ok(a)))
    return rep


# -- finite-dimensional Hopf algebras -------------------------------------------

class FinDimHopf:
    """Hopf algebra on basis ``0..dim-1`` given by its five structure tensors.

    ``comult[k]`` is stored over the flattened tensor-square basis, with the
    pair ``(i, j)`` at index ``i * dim + j``.  Construction runs
    :func:`verify_hopf` and raises :class:`HopfError` on any failure unless
    ``check=False``.
    """

    is_finite = True

    def __init__(self, dim: int, mult, unit, comult, counit, antipode,
                 names: Optional[Sequence[str]] = None, check: bool = True):
        self.dim = int(dim)
        n = self.dim
        self.mult_table: Dict[Tuple[int, int], SparseVec] = {}
        for (i, j), v in dict(mult).items():
            v = vec(v)
            if v:
                self.mult_table[(int(i), int(j))] = v
        self.unit_vec = vec(unit)
        flat = []
        for k in range(n):
            entries = comult[k] if k < len(comult) else {}
            row = {}
            for key, c in (entries.items() if isinstance(entries, dict) else enumerate(entries)):
                idx = key[0] * n + key[1] if isinstance(key, tuple) else int(key)
                c = scalar(c)
                if c:
                    row[idx] = c
            flat.append(row)
        self.comult_flat: List[SparseVec] = flat
        self._comult = [{divmod(idx, n): c for idx, c in row.items()} for row in flat]
        self.counit_vec = vec(counit)
        if not isinstance(antipode, SparseMat):
            antipode = SparseMat.from_dense(antipode)
        if antipode.rows != n or antipode.cols != n:
            raise HopfError("antipode has the wrong shape")
        self.antipode_mat = antipode
        self._antipode_cols = antipode.columns()
        self.names = list(names) if names is not None else [f"e{i}" for i in range(n)]
        if check:
            verify_hopf(self).require(HopfError)

    def __repr__(self):
        return f"FinDimHopf(dim={self.dim})"

    def basis(self, degree=None) -> List[int]:
        return list(range(self.dim))

    def label(self, k) -> str:
        return self.names[k]

    def one(self) -> SparseVec:
        return dict(self.unit_vec)

    def mul(self, a: SparseVec, b: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, x in a.items():
            for j, y in b.items():
                v = self.mult_table.get((i, j))
                if v:
                    vaxpy(acc, x * y, v)
        return acc

    def coproduct(self, a: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for k, c in a.items():
            vaxpy(acc, c, self._comult[k])
        return acc

    def counit(self, a: SparseVec) -> Fraction:
        return sum((c * self.counit_vec.get(k, 0) for k, c in a.items()), Fraction(0))

    def antipode(self, a: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for k, c in a.items():
            vaxpy(acc, c, self._antipode_cols[k])
        return acc

    def element(self, coords) -> "HopfElement":
        return HopfElement(self, vec(coords))

    def is_commutative(self) -> bool:
        return all(self.mult_table.get((i, j), {}) == self.mult_table.get((j, i), {})
                   for i in range(self.dim) for j in range(i))

    def is_cocommutative(self) -> bool:
        return all(d == {(q, p): c for (p, q), c in d.items()} for d in self._comult)

    def structure(self) -> tuple:
        """Hashable snapshot of all structure tensors, for exact comparisons."""
        return (self.dim,
                frozenset((k, frozenset(v.items())) for k, v in self.mult_table.items()),
                frozenset(self.unit_vec.items()),
                tuple(frozenset(r.items()) for r in self.comult_flat),
                frozenset(self.counit_vec.items()),
                self.antipode_mat)


class HopfElement:
    """An element of a Hopf algebra, kept as sparse coordinates over basis labels."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords: SparseVec):
        self.algebra = algebra
        self.coords = {k: c for k, c in coords.items() if c}

    def _same(self, other: "HopfElement"):
        if not isinstance(other, HopfElement) or other.algebra is not self.algebra:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.algebra, vaxpy(dict(self.coords), 1, other.coords))

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.algebra, vsub(self.coords, other.coords))

    def __neg__(self):
        return type(self)(self.algebra, vscale(-1, self.coords))

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            self._same(other)
            return type(self)(self.algebra, self.algebra.mul(self.coords, other.coords))
        return type(self)(self.algebra, vscale(scalar(other), self.coords))

    def __rmul__(self, c):
        return type(self)(self.algebra, vscale(scalar(c), self.coords))

    def __eq__(self, other):
        if isinstance(other, HopfElement):
            return self.algebra is other.algebra and self.coords == other.coords
        if other == 0:
            return not self.coords
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def __repr__(self):
        if not self.coords:
            return "0"
        parts = []
        for k in sorted(self.coords, key=_sort_key):
            c = self.coords[k]
            name = self.algebra.label(k)
            parts.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def coproduct(self) -> SparseVec:
        return self.algebra.coproduct(self.coords)

    def counit(self) -> Fraction:
        return self.algebra.counit(self.coords)

    def antipode(self) -> "HopfElement":
        return type(self)(self.algebra, self.algebra.antipode(self.coords))


def _sort_key(k):
    return (len(k), k) if isinstance(k, tuple) else (0, k)


class Character:
    """An algebra map ``H -> Q`` stored as a covector on the basis of ``H``."""

    __slots__ = ("hopf", "coords")

    def __init__(self, hopf: FinDimHopf, coords: SparseVec):
        self.hopf = hopf
        self.coords = {k: c for k, c in coords.items() if c}

    def __call__(self, x: SparseVec) -> Fraction:
        return sum((c * self.coords.get(k, 0) for k, c in x.items()), Fraction(0))

    def key(self) -> tuple:
        return tuple(sorted(self.coords.items()))

    def __eq__(self, other):
        return isinstance(other, Character) and other.hopf is self.hopf and other.coords == self.coords

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Character({dict(sorted(self.coords.items()))})"

    def is_multiplicative(self) -> bool:
        h = self.hopf
        if self(h.one()) != 1:
            return False
        return all(self(h.mul(_e(a), _e(b))) == self.coords.get(a, 0) * self.coords.get(b, 0)
                   for a in range(h.dim) for b in range(h.dim))


# -- constructors ---------------------------------------------------------------

def group_algebra(g: FinGroup) -> FinDimHopf:
    n = g.order
    mult = {(a, b): {g.mult[a][b]: 1} for a in range(n) for b in range(n)}
    comult = [{(a, a): 1} for a in range(n)]
    antipode = SparseMat(n, n, {(g.inv[a], a): 1 for a in range(n)})
    return FinDimHopf(n, mult, {g.unit: 1}, comult, [1] * n, antipode, names=list(g.names))


def function_algebra(g: FinGroup) -> FinDimHopf:
    n = g.order
    mult = {(a, a): {a: 1} for a in range(n)}
    comult = [{(h, g.mult[g.inv[h]][a]): 1 for h in range(n)} for a in range(n)]
    counit = {g.unit: 1}
    antipode = SparseMat(n, n, {(g.inv[a], a): 1 for a in range(n)})
    return FinDimHopf(n, mult, [1] * n, comult, counit, antipode,
                      names=[f"d[{x}]" for x in g.names])


def dualize(h: FinDimHopf) -> FinDimHopf:
    """Linear dual on the dual basis: product and coproduct swap by transposition."""
    n = h.dim
    mult: Dict[Tuple[int, int], SparseVec] = {}
    for k, row in enumerate(h._comult):
        for (i, j), c in row.items():
            mult.setdefault((i, j), {})[k] = c
    comult = [{} for _ in range(n)]
    for (i, j), v in h.mult_table.items():
        for k, c in v.items():
            comult[k][(i, j)] = c
    return FinDimHopf(n, mult, h.counit_vec, comult, h.unit_vec, h.antipode_mat.transpose(),
                      names=[f"{x}*" if not x.endswith("*") else x[:-1] for x in h.names])


# -- operations ------------------------------------------------------------------

def adjoint_action(h, a: HopfElement, x: HopfElement) -> HopfElement:
    if a.algebra is not h or x.algebra is not h:
        raise ValueError("elements must belong to the given algebra")
    return type(x)(h, ad(h, a.coords, x.coords))


def adjoint_coaction(h, x: HopfElement) -> SparseVec:
    if x.algebra is not h:
        raise ValueError("element must belong to the given algebra")
    return coad(h, x.coords)


def check_hopf_morphism(f: Callable, A, B, labels=None) -> Report:
    """Check that ``f`` (basis label of ``A`` -> element of ``B``) is a Hopf morphism."""
    labels = list(A.basis() if labels is None else labels)
    rep = Report("hopf morphism")
    fe = {a: f(a) for a in labels}

    def F1(k):
        return fe[k] if k in fe else f(k)

    def F(v):
        return apply_linear(F1, v)

    rep.record("unit", None if F(A.one()) == B.one() else "1")
    rep.record("multiplicative", first(
        (a, b) for a in labels for b in labels
        if F(A.mul(_e(a), _e(b))) != B.mul(fe[a], fe[b])))
    rep.record("comultiplicative", first(
        a for a in labels if apply_tensor(F1, F1, A.coproduct(_e(a))) != B.coproduct(fe[a])))
    rep.record("counit", first(a for a in labels if B.counit(fe[a]) != A.counit(_e(a))))
    rep.record("antipode", first(a for a in labels if F(A.antipode(_e(a))) != B.antipode(fe[a])))
    return rep


def _flatten_pairs(t: SparseVec, index: Dict) -> SparseVec:
    out = {}
    for k, c in t.items():
        if k not in index:
            index[k] = len(index)
        out[index[k]] = c
    return out


def primitive_basis(H, labels: Sequence) -> List[SparseVec]:
    """Basis of ``{x in span(labels) : Delta x = 1 (x) x + x (x) 1}``."""
    labels = list(labels)
    one = H.one()
    index: Dict = {}
    cols = []
    for a in labels:
        ea = _e(a)
        d = vsub(vsub(H.coproduct(ea), tensor(one, ea)), tensor(ea, one))
        cols.append(_flatten_pairs(d, index))
    m = SparseMat.from_columns(cols, len(index))
    return [{labels[i]: c for i, c in v.items()} for v in kernel_basis(m)]


def primitives(h: FinDimHopf) -> List[HopfElement]:
    """Basis of the primitive subspace; commutator closure is asserted."""
    basis = primitive_basis(h, h.basis())
    for p in basis:
        for q in basis:
            comm = vsub(h.mul(p, q), h.mul(q, p))
            if not _in_span(comm, basis):
                raise HopfError("primitives are not closed under commutators", witness=(p, q))
    return [HopfElement(h, p) for p in basis]


def _in_span(v: SparseVec, basis: Sequence[SparseVec]) -> bool:
    index: Dict = {}
    rows = [_flatten_pairs(b, index) for b in basis]
    w = {}
    for k, c in v.items():
        if k not in index:
            return False
        w[index[k]] = c
    return membership(w, rows)


# -- characters and group-likes ---------------------------------------------------

def _minimal_polynomial(T: List[List[Fraction]]) -> List[Fraction]:
    """Monic minimal polynomial of a square matrix, lowest degree first."""
    r = len(T)
    powers = []
    P = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    while True:
        flat = {i * r + j: P[i][j] for i in range(r) for j in range(r) if P[i][j]}
        if powers:
            cols = powers
            m = SparseMat.from_columns(cols, r * r)
            x = solve_linear(m, flat)
            if x is not None:
                return [-x.get(i, Fraction(0)) for i in range(len(powers))] + [Fraction(1)]
        powers.append(flat)
        P = [[sum((P[i][k] * T[k][j] for k in range(r)), Fraction(0)) for j in range(r)] for i in range(r)]


def _divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _rational_roots(coeffs: List[Fraction]) -> List[Fraction]:
    """Distinct rational roots of a polynomial given lowest degree first."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = []
    while ints and ints[0] == 0:
        ints = ints[1:]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(ints) <= 1:
        return roots
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r not in roots and sum(c * r ** i for i, c in enumerate(ints)) == 0:
                    roots.append(r)
    return roots


def _eigensplit(T: List[List[Fraction]]) -> List[List[SparseVec]]:
    """Eigenspace bases of a split semisimple matrix, else :class:`NotSplit`."""
    r = len(T)
    poly = _minimal_polynomial(T)
    roots = _rational_roots(poly)
    if len(roots) != len(poly) - 1:
        raise NotSplit("minimal polynomial does not split into distinct rational linear factors")
    spaces = []
    for lam in roots:
        shifted = SparseMat(r, r, {(i, j): T[i][j] - (lam if i == j else 0) for i in range(r) for j in range(r)})
        spaces.append(kernel_basis(shifted))
    return spaces


def characters(a: FinDimHopf) -> List[Character]:
    """All algebra maps ``a -> Q``, via common eigenvectors of right translations.

    Characters vanish on the ideal generated by commutators, so the search
    runs on its annihilator, where the translation operators commute.  Raises
    :class:`NotSplit` when that commutative quotient is not split semisimple
    over the rationals.
    """
    n = a.dim
    basis = range(n)
    comms = [vsub(a.mul(_e(i), _e(j)), a.mul(_e(j), _e(i))) for i in basis for j in range(i)]
    comms = [c for c in comms if c]
    ideal_rows = []
    if comms:
        comm_span = list(rref(comms).values())
        gen = [a.mul(a.mul(_e(i), c), _e(l)) for c in comm_span for i in basis for l in basis]
        ideal_rows = list(rref(gen).values())
    space = kernel_basis(SparseMat.from_columns(ideal_rows, n).transpose()) if ideal_rows else \
        [_e(i) for i in basis]
    if not space:
        return []

    def translate(phi: SparseVec, x: int) -> SparseVec:
        # (phi . L_x)(e_k) = phi(x e_k)
        out = {}
        for k in basis:
            c = sum((phi.get(j, 0) * v for j, v in a.mul(_e(x), _e(k)).items()), Fraction(0))
            if c:
                out[k] = c
        return out

    pieces = [space]
    for x in basis:
        nxt = []
        for W in pieces:
            if len(W) == 1:
                nxt.append(W)
                continue
            T_cols = []
            for w in W:
                coords = _coords_in(translate(w, x), W)
                if coords is None:
                    raise NotSplit("translation does not preserve the character space")
                T_cols.append(coords)
            T = [[T_cols[j].get(i, Fraction(0)) for j in range(len(W))] for i in range(len(W))]
            for eig in _eigensplit(T):
                nxt.append([_combine(v, W) for v in eig])
        pieces = nxt
    out = []
    for W in pieces:
        if len(W) != 1:
            raise NotSplit("joint eigenspace of dimension > 1: quotient not semisimple")
        phi = W[0]
        at_one = sum((phi.get(k, 0) * c for k, c in a.unit_vec.items()), Fraction(0))
        if not at_one:
            raise NotSplit("eigencovector vanishes on the unit")
        ch = Character(a, vscale(1 / at_one, phi))
        if not ch.is_multiplicative():
            raise NotSplit("joint eigencovector is not multiplicative")
        out.append(ch)
    unit = Character(a, a.counit_vec)
    out.sort(key=lambda c: (c != unit, sorted(c.coords.items())))
    return out


def _coords_in(v: SparseVec, W: List[SparseVec]) -> Optional[SparseVec]:
    c = coordinates(v, W)
    return None if c is None else {i: x for i, x in enumerate(c) if x}


def _combine(coeffs: SparseVec, W: List[SparseVec]) -> SparseVec:
    acc: SparseVec = {}
    for i, c in coeffs.items():
        vaxpy(acc, c, W[i])
    return acc


def grouplikes(h: FinDimHopf) -> List[HopfElement]:
    """All ``x`` with ``Delta x = x (x) x`` and ``eps(x) = 1``.

    Computed as the characters of the dual algebra; each candidate is verified
    by substitution and the list is checked to be closed under products.
    """
    dual = dualize(h)
    out = []
    for ch in characters(dual):
        x = dict(ch.coords)
        if h.coproduct(x) != tensor(x, x) or h.counit(x) != 1:
            raise HopfError("character of the dual is not group-like", witness=x)
        out.append(HopfElement(h, x))
    keys = {frozenset(g.coords.items()) for g in out}
    for g in out:
        for k in out:
            if frozenset(h.mul(g.coords, k.coords).items()) not in keys:
                raise HopfError("group-likes not closed under multiplication")
    one = frozenset(h.one().items())
    out.sort(key=lambda g: (frozenset(g.coords.items()) != one, sorted(g.coords.items())))
    return out


def char_convolution(h: FinDimHopf, phi: Character, psi: Character) -> Character:
    """Convolution ``(phi * psi)(x) = sum phi(x') psi(x'')``."""
    if phi.hopf is not h or psi.hopf is not h:
        raise ValueError("characters of a different algebra")
    out = {}
    for k in range(h.dim):
        c = sum((v * phi.coords.get(i, 0) * psi.coords.get(j, 0)
                 for (i, j), v in h._comult[k].items()), Fraction(0))
        if c:
            out[k] = c
    res = Character(h, out)
    if not res.is_multiplicative():
        raise NotSplit("convolution left the character set")
    return res
