"""Exact rational linear algebra over sparse vectors and matrices.

Vectors are plain ``dict`` objects mapping a basis key to a nonzero
:class:`fractions.Fraction`.  Keys are usually non-negative integers but the
helpers below only need them to be hashable, which lets the same code handle
PBW monomials and tensor-square pairs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Scalar = Fraction
SparseVec = Dict[Hashable, Fraction]

__all__ = [
    "Scalar",
    "SparseVec",
    "SparseMat",
    "DimensionError",
    "scalar",
    "vec",
    "vadd",
    "vsub",
    "vscale",
    "vaxpy",
    "lincomb",
    "dense",
    "rref",
    "rank",
    "kernel_basis",
    "solve_linear",
    "membership",
    "span_basis",
    "coordinates",
]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def scalar(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vec(items) -> SparseVec:
    """Build a sparse vector from a mapping or a dense sequence, dropping zeros."""
    if isinstance(items, dict):
        pairs = items.items()
    else:
        pairs = enumerate(items)
    out = {}
    for k, c in pairs:
        c = scalar(c)
        if c:
            out[k] = c
    return out


def vaxpy(acc: SparseVec, c, v: SparseVec) -> SparseVec:
    """In place ``acc += c * v``; returns ``acc``."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def vadd(a: SparseVec, b: SparseVec) -> SparseVec:
    return vaxpy(dict(a), 1, b)


def vsub(a: SparseVec, b: SparseVec) -> SparseVec:
    return vaxpy(dict(a), -1, b)


def vscale(c, v: SparseVec) -> SparseVec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def lincomb(terms: Iterable[Tuple[Fraction, SparseVec]]) -> SparseVec:
    acc: SparseVec = {}
    for c, v in terms:
        vaxpy(acc, c, v)
    return acc


def dense(v: SparseVec, n: int) -> List[Fraction]:
    return [v.get(i, Fraction(0)) for i in range(n)]


class SparseMat:
    """Immutable sparse ``rows x cols`` matrix with exact entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        clean = {}
        for (r, c), x in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionError(f"entry ({r}, {c}) outside {rows}x{cols}")
            x = scalar(x)
            if x:
                clean[(r, c)] = x
        self.entries = clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], cols: Optional[int] = None) -> "SparseMat":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise DimensionError("ragged dense matrix")
            for c, x in enumerate(row):
                entries[(r, c)] = x
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[SparseVec], rows: int) -> "SparseMat":
        entries = {}
        for c, col in enumerate(columns):
            for r, x in col.items():
                entries[(r, c)] = x
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMat":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMat":
        return cls(rows, cols)

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def row_dicts(self) -> List[SparseVec]:
        out: List[SparseVec] = [{} for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def column(self, c: int) -> SparseVec:
        return {r: x for (r, cc), x in self.entries.items() if cc == c}

    def columns(self) -> List[SparseVec]:
        out: List[SparseVec] = [{} for _ in range(self.cols)]
        for (r, c), x in self.entries.items():
            out[c][r] = x
        return out

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows, {(c, r): x for (r, c), x in self.entries.items()})

    def matvec(self, v: SparseVec) -> SparseVec:
        for k in v:
            if not (isinstance(k, int) and 0 <= k < self.cols):
                raise DimensionError(f"vector index {k!r} outside {self.cols} columns")
        out: SparseVec = {}
        for (r, c), x in self.entries.items():
            y = v.get(c)
            if y:
                out[r] = out.get(r, 0) + x * y
        return {k: x for k, x in out.items() if x}

    __call__ = matvec

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        right = other.row_dicts()
        acc: Dict[Tuple[int, int], Fraction] = {}
        for (r, k), x in self.entries.items():
            for c, y in right[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + x * y
        return SparseMat(self.rows, other.cols, acc)

    def __add__(self, other: "SparseMat") -> "SparseMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")
        acc = dict(self.entries)
        for k, x in other.entries.items():
            acc[k] = acc.get(k, 0) + x
        return SparseMat(self.rows, self.cols, acc)

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + other.scale(-1)

    def scale(self, c) -> "SparseMat":
        return SparseMat(self.rows, self.cols, {k: c * x for k, x in self.entries.items()})

    def rank(self) -> int:
        return rank(self)


# -- fraction-free elimination ------------------------------------------------

def _integral(row: SparseVec) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row."""
    den = 1
    for x in row.values():
        den = den * x.denominator // gcd(den, x.denominator)
    ints = {k: int(x * den) for k, x in row.items()}
    return _primitive(ints)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        row = {k: x // g for k, x in row.items()}
    return row


def _eliminate(row: Dict[int, int], piv: Dict[int, int], col: int) -> Dict[int, int]:
    a = piv[col]
    b = row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {k: a * x for k, x in row.items()}
    for k, y in piv.items():
        z = out.get(k, 0) - b * y
        if z:
            out[k] = z
        else:
            out.pop(k, None)
    return _primitive(out)


class _Echelon:
    """Incremental integer echelon form keyed by leading column."""

    def __init__(self):
        self.pivots: Dict[int, Dict[int, int]] = {}

    def reduce(self, row: Dict[int, int]) -> Dict[int, int]:
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            row = _eliminate(row, piv, lead)
        return row

    def insert(self, row: SparseVec) -> bool:
        if not row:
            return False
        row = self.reduce(_integral(row))
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def reduced(self) -> Dict[int, SparseVec]:
        """Back-substitute to reduced echelon form, pivots normalized to 1."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for i in reversed(range(len(cols))):
            ci = cols[i]
            for cj in cols[:i]:
                rj = rows[cj]
                if ci in rj:
                    rows[cj] = _eliminate(rj, rows[ci], ci)
        out = {}
        for c in cols:
            r = rows[c]
            p = r[c]
            out[c] = {k: Fraction(x, p) for k, x in r.items()}
        return out


def rref(rows: Iterable[SparseVec]) -> Dict[int, SparseVec]:
    """Reduced row echelon form of integer-keyed rows, as ``{pivot_col: row}``."""
    ech = _Echelon()
    for r in rows:
        ech.insert(r)
    return ech.reduced()


def _check_int_keys(v: SparseVec, n: int, what: str):
    for k in v:
        if not (isinstance(k, int) and 0 <= k < n):
            raise DimensionError(f"{what}: index {k!r} outside dimension {n}")


def rank(m: SparseMat) -> int:
    ech = _Echelon()
    for r in m.row_dicts():
        ech.insert(r)
    return len(ech.pivots)


def kernel_basis(m: SparseMat) -> List[SparseVec]:
    """Basis of the null space of ``m``; one vector per free column."""
    red = rref(m.row_dicts())
    out = []
    for f in range(m.cols):
        if f in red:
            continue
        v = {f: Fraction(1)}
        for p, row in red.items():
            x = row.get(f)
            if x:
                v[p] = -x
        out.append(v)
    return out


def solve_linear(m: SparseMat, b: SparseVec) -> Optional[SparseVec]:
    """Some ``x`` with ``m x = b``, or ``None`` when the system is inconsistent."""
    _check_int_keys(b, m.rows, "right-hand side")
    aug = m.row_dicts()
    for r, x in b.items():
        aug[r][m.cols] = x
    red = rref(aug)
    if m.cols in red:
        return None
    return {p: row[m.cols] for p, row in red.items() if row.get(m.cols)}


def span_basis(vectors: Iterable[SparseVec]) -> List[SparseVec]:
    """Reduced echelon basis of the span of ``vectors``."""
    return list(rref(vectors).values())


def membership(v: SparseVec, basis: Sequence[SparseVec], dim: Optional[int] = None) -> bool:
    """Whether ``v`` lies in the span of ``basis``."""
    if dim is not None:
        _check_int_keys(v, dim, "vector")
        for b in basis:
            _check_int_keys(b, dim, "basis vector")
    if not v:
        return True
    ech = _Echelon()
    for b in basis:
        ech.insert(b)
    return not ech.reduce(_integral(v))


def coordinates(v: SparseVec, basis: Sequence[SparseVec]) -> Optional[List[Fraction]]:
    """Coefficients of ``v`` in terms of a linearly independent ``basis``.

    Keys may be arbitrary hashables; returns ``None`` when ``v`` is outside
    the span.
    """
    keys = {}
    for b in list(basis) + [v]:
        for k in b:
            if k not in keys:
                keys[k] = len(keys)
    cols = [{keys[k]: x for k, x in b.items()} for b in basis]
    m = SparseMat.from_columns(cols, len(keys))
    x = solve_linear(m, {keys[k]: c for k, c in v.items()})
    if x is None:
        return None
    return [x.get(i, Fraction(0)) for i in range(len(basis))]
