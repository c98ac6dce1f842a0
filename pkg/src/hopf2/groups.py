"""Finite groups given by multiplication tables, plus isomorphism search."""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

__all__ = [
    "GroupError",
    "FinGroup",
    "cyclic",
    "symmetric",
    "alternating",
    "trivial_group",
    "is_homomorphism",
    "iter_isomorphisms",
    "find_isomorphism",
]


class GroupError(ValueError):
    """A table fails a group axiom; ``witness`` holds the offending elements."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FinGroup:
    """A finite group on elements ``0..order-1``.

    ``mult[g][h]`` is the index of ``gh``.  Unit and inverses are derived from
    the table when not supplied and every group law is checked exhaustively.
    """

    def __init__(self, mult: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                 unit: Optional[int] = None, inv: Optional[Sequence[int]] = None):
        n = len(mult)
        if n == 0:
            raise GroupError("a group has at least one element")
        self.mult: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in row) for row in mult)
        for g, row in enumerate(self.mult):
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise GroupError(f"row {g} of the table is malformed", witness=(g,))
        self.order = n
        self.names = list(names) if names is not None else [f"g{i}" for i in range(n)]
        if len(self.names) != n:
            raise GroupError("names do not match the order")
        self.unit = self._find_unit() if unit is None else int(unit)
        self.inv = tuple(self._find_inverses() if inv is None else (int(x) for x in inv))
        self._validate()

    def _find_unit(self) -> int:
        for e in range(self.order):
            if all(self.mult[e][g] == g and self.mult[g][e] == g for g in range(self.order)):
                return e
        raise GroupError("no two-sided unit")

    def _find_inverses(self) -> List[int]:
        out = []
        for g in range(self.order):
            row = self.mult[g]
            try:
                out.append(row.index(self.unit))
            except ValueError:
                raise GroupError(f"{self.names[g]} has no inverse", witness=(g,)) from None
        return out

    def _validate(self):
        m, e = self.mult, self.unit
        for g in range(self.order):
            if m[e][g] != g or m[g][e] != g:
                raise GroupError("unit law fails", witness=(e, g))
            if m[g][self.inv[g]] != e or m[self.inv[g]][g] != e:
                raise GroupError("inverse law fails", witness=(g,))
        for a, b, c in itertools.product(range(self.order), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise GroupError("associativity fails", witness=(a, b, c))

    def __repr__(self):
        return f"FinGroup(order={self.order})"

    def __len__(self):
        return self.order

    def mul(self, *gs: int) -> int:
        out = self.unit
        for g in gs:
            out = self.mult[out][g]
        return out

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.unit:
            x = self.mult[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.mult[a][b] == self.mult[b][a] for a in range(self.order) for b in range(a))

    def closure(self, gens: Sequence[int]) -> List[int]:
        seen = {self.unit}
        frontier = [self.unit]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mult[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def generators(self) -> List[int]:
        """A small generating set, picked greedily by decreasing element order."""
        gens: List[int] = []
        span = {self.unit}
        for g in sorted(range(self.order), key=lambda x: (-self.element_order(x), x)):
            if g not in span:
                gens.append(g)
                span = set(self.closure(gens))
            if len(span) == self.order:
                break
        return gens

    def subgroup(self, elements: Sequence[int]) -> Tuple["FinGroup", List[int]]:
        """The subgroup on ``elements`` (closed under products) and its embedding."""
        elements = list(elements)
        pos = {g: i for i, g in enumerate(elements)}
        try:
            table = [[pos[self.mult[a][b]] for b in elements] for a in elements]
        except KeyError:
            raise GroupError("elements are not closed under multiplication") from None
        return FinGroup(table, names=[self.names[g] for g in elements]), elements

    @classmethod
    def from_permutations(cls, perms: Sequence[Tuple[int, ...]], names=None) -> "FinGroup":
        """Group of the listed permutations, composed right to left: ``(pq)(x) = p(q(x))``."""
        perms = [tuple(p) for p in perms]
        pos = {p: i for i, p in enumerate(perms)}
        table = [[pos[tuple(p[q[x]] for x in range(len(q)))] for q in perms] for p in perms]
        return cls(table, names=names or [_cycle_name(p) for p in perms])


def _cycle_name(p: Tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def trivial_group() -> FinGroup:
    return FinGroup([[0]], names=["e"])


def cyclic(n: int) -> FinGroup:
    names = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return FinGroup([[(a + b) % n for b in range(n)] for a in range(n)], names=names)


# Fixed element order: the alternating subgroup comes first, so A3 -> S3 is
# the inclusion 0, 1, 2.
_S3 = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]


def symmetric(n: int) -> FinGroup:
    if n == 3:
        return FinGroup.from_permutations(_S3)
    even = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    odd = [p for p in itertools.permutations(range(n)) if _parity(p) == 1]
    return FinGroup.from_permutations(even + odd)


def alternating(n: int) -> FinGroup:
    if n == 3:
        return FinGroup.from_permutations(_S3[:3])
    return FinGroup.from_permutations([p for p in itertools.permutations(range(n)) if _parity(p) == 0])


def _parity(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def is_homomorphism(f: Sequence[int], g: FinGroup, h: FinGroup) -> Optional[Tuple[int, int]]:
    """``None`` when ``f: g -> h`` is a homomorphism, else a failing pair."""
    if len(f) != g.order:
        raise GroupError("map length does not match the domain")
    for a in range(g.order):
        for b in range(g.order):
            if f[g.mult[a][b]] != h.mult[f[a]][f[b]]:
                return (a, b)
    return None


def _extend(g: FinGroup, h: FinGroup, gens: List[int], images: Tuple[int, ...]) -> Optional[List[int]]:
    phi: Dict[int, int] = {g.unit: h.unit}
    frontier = [g.unit]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = g.mult[x][s]
                fy = h.mult[phi[x]][t]
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    phi[y] = fy
                    nxt.append(y)
        frontier = nxt
    if len(phi) != g.order or len(set(phi.values())) != g.order:
        return None
    out = [phi[x] for x in range(g.order)]
    if is_homomorphism(out, g, h) is not None:
        return None
    return out


def iter_isomorphisms(g: FinGroup, h: FinGroup) -> Iterator[List[int]]:
    """All isomorphisms ``g -> h`` as index lists, found by generator images."""
    if g.order != h.order:
        return
    if sorted(map(g.element_order, g.elements())) != sorted(map(h.element_order, h.elements())):
        return
    gens = g.generators()
    pools = [[y for y in h.elements() if h.element_order(y) == g.element_order(x)] for x in gens]
    for images in itertools.product(*pools):
        phi = _extend(g, h, gens, images)
        if phi is not None:
            yield phi


def find_isomorphism(g: FinGroup, h: FinGroup) -> Optional[List[int]]:
    return next(iter_isomorphisms(g, h), None)
