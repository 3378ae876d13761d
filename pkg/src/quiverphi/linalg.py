"""
Exact linear algebra over the rationals and prime fields.

Elements of Q are ``fractions.Fraction`` and elements of GF(p) are ints in
``[0, p)``; both support Python's arithmetic operators, so the routines here
compute with plain ``+``/``*`` and pass every result through
``FieldSpec.norm``. Nothing in this module has a tolerance.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from .errors import ConfigError, DimensionMismatch

Vector = Tuple[Any, ...]
SparseVector = Dict[Hashable, Any]


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``p == 0`` for Q, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p and not sympy.isprime(self.p):
            raise ConfigError(f"GF({self.p}) requested but {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(int(p))

    @property
    def kind(self) -> str:
        return "PrimeField" if self.p else "Rationals"

    @property
    def label(self) -> str:
        return f"Q({self.p})" if self.p else "Q"

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def norm(self, x):
        return x % self.p if self.p else x

    def coerce(self, x):
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if self.p:
            return pow(int(x), -1, self.p)
        return 1 / Fraction(x)

    def parse(self, text: str):
        return self.coerce(Fraction(text.strip()))

    def format(self, x) -> str:
        if self.p:
            return str(int(x))
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def to_json(self, x):
        """GF(p) entries as ints, rationals as "n/d" strings (plain ints when integral)."""
        if self.p:
            return int(x)
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def from_json(self, x):
        return self.coerce(Fraction(x) if isinstance(x, str) else x)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: Tuple[Any, ...]
    field: FieldSpec

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    # constructors

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: FieldSpec,
                  cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"ragged row of length {len(r)}, expected {cols}")
        flat = tuple(field.coerce(x) for r in rows for x in r)
        return cls(len(rows), cols, flat, field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], rows: int, field: FieldSpec) -> "Matrix":
        cols = len(columns)
        flat = [field.zero] * (rows * cols)
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise DimensionMismatch(f"column of length {len(c)}, expected {rows}")
            for i, x in enumerate(c):
                flat[i * cols + j] = field.coerce(x)
        return cls(rows, cols, tuple(flat), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Matrix":
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        flat = [field.zero] * (n * n)
        for i in range(n):
            flat[i * n + i] = field.one
        return cls(n, n, tuple(flat), field)

    @classmethod
    def scalar(cls, n: int, c, field: FieldSpec) -> "Matrix":
        flat = [field.zero] * (n * n)
        c = field.coerce(c)
        for i in range(n):
            flat[i * n + i] = c
        return cls(n, n, tuple(flat), field)

    # access

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic

    def transpose(self) -> "Matrix":
        flat = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.cols, self.rows, flat, self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        n, m = other.rows, other.cols
        other_rows = [other.entries[k * m:(k + 1) * m] for k in range(n)]
        flat: List[Any] = []
        for i in range(self.rows):
            acc = [f.zero] * m
            for k, x in enumerate(self.entries[i * self.cols:(i + 1) * self.cols]):
                if x:
                    orow = other_rows[k]
                    for j in range(m):
                        y = orow[j]
                        if y:
                            acc[j] += x * y
            flat.extend(f.norm(a) for a in acc)
        return Matrix(self.rows, m, tuple(flat), f)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(self.rows, self.cols,
                      tuple(f.norm(a + b) for a, b in zip(self.entries, other.entries)), f)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(self.rows, self.cols,
                      tuple(f.norm(a - b) for a, b in zip(self.entries, other.entries)), f)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(self.rows, self.cols, tuple(f.norm(c * a) for a in self.entries), f)

    def apply(self, vec: Sequence[Any]) -> Vector:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        f = self.field
        out = []
        for i in range(self.rows):
            acc = f.zero
            for a, b in zip(self.entries[i * self.cols:(i + 1) * self.cols], vec):
                if a and b:
                    acc += a * b
            out.append(f.norm(acc))
        return tuple(out)

    def _same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    # assembly

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack of {self.shape} and {other.shape}")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                self.field, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatch(f"vstack of {self.shape} and {other.shape}")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries, self.field)

    def block_diag(self, other: "Matrix") -> "Matrix":
        f = self.field
        z = f.zero
        rows = [list(self.row(i)) + [z] * other.cols for i in range(self.rows)]
        rows += [[z] * self.cols + list(other.row(i)) for i in range(other.rows)]
        return Matrix.from_rows(rows, f, self.cols + other.cols)

    def select(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix.from_rows([[self[i, j] for j in col_idx] for i in row_idx], self.field, len(col_idx))


# ---------------------------------------------------------------------------
# sparse reduced echelon form


class Echelon:
    """Incrementally maintained reduced row echelon form over sparse rows.

    Rows are dicts keyed by arbitrary hashable coordinates. The pivot of a row is
    its smallest key under ``key``; every stored row is monic at its pivot and has
    no entry at any other pivot.
    """

    def __init__(self, field: FieldSpec, key: Optional[Callable[[Hashable], Any]] = None):
        self.field = field
        self._key = key or (lambda k: k)
        self._rows: Dict[Hashable, SparseVector] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self._rows, key=self._key)

    def row(self, pivot: Hashable) -> SparseVector:
        return self._rows[pivot]

    def is_pivot(self, k: Hashable) -> bool:
        return k in self._rows

    def reduce(self, vec: Mapping[Hashable, Any]) -> SparseVector:
        f = self.field
        v = {k: f.norm(x) for k, x in vec.items()}
        v = {k: x for k, x in v.items() if x}
        for piv in [k for k in v if k in self._rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, x in self._rows[piv].items():
                y = f.norm(v.get(k, 0) - c * x)
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping[Hashable, Any]) -> Optional[Hashable]:
        """Insert ``vec``; returns the new pivot, or None if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return None
        return self._insert_reduced(v)

    def _insert_reduced(self, v: SparseVector) -> Hashable:
        f = self.field
        piv = min(v, key=self._key)
        inv = f.inv(v[piv])
        v = {k: f.norm(x * inv) for k, x in v.items()}
        for row in self._rows.values():
            c = row.get(piv)
            if not c:
                continue
            for k, x in v.items():
                y = f.norm(row.get(k, 0) - c * x)
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
        self._rows[piv] = v
        return piv

    def contains(self, vec: Mapping[Hashable, Any]) -> bool:
        return not self.reduce(vec)

    def copy(self) -> "Echelon":
        e = Echelon(self.field, self._key)
        e._rows = {k: dict(r) for k, r in self._rows.items()}
        return e


class Subspace:
    """A subspace of F^n with a fixed basis and coordinate lookup."""

    def __init__(self, vectors: Iterable[Sequence[Any]], dim: int, field: FieldSpec):
        self.dim = dim
        self.field = field
        self.basis: List[Vector] = []
        self._ech = Echelon(field)
        for v in vectors:
            v = tuple(field.coerce(x) for x in v)
            if len(v) != dim:
                raise DimensionMismatch(f"vector of length {len(v)} in F^{dim}")
            row = {(0, j): x for j, x in enumerate(v) if x}
            reduced = self._ech.reduce(row)
            if not any(k[0] == 0 for k in reduced):
                continue
            reduced[(1, len(self.basis))] = reduced.get((1, len(self.basis)), 0) + field.one
            self._ech._insert_reduced({k: x for k, x in reduced.items() if field.norm(x)})
            self.basis.append(v)

    def __len__(self) -> int:
        return len(self.basis)

    def coordinates(self, vec: Sequence[Any]) -> Optional[Vector]:
        f = self.field
        r = self._ech.reduce({(0, j): f.coerce(x) for j, x in enumerate(vec) if x})
        if any(k[0] == 0 for k in r):
            return None
        return tuple(f.norm(-r.get((1, i), 0)) for i in range(len(self.basis)))

    def contains(self, vec: Sequence[Any]) -> bool:
        return self.coordinates(vec) is not None

    def complement(self) -> List[int]:
        """Coordinate indices j such that the unit vectors e_j complete the basis."""
        pivots = {k[1] for k in self._ech.pivots if k[0] == 0}
        return [j for j in range(self.dim) if j not in pivots]


# ---------------------------------------------------------------------------
# dense entry points


def _matrix_rows(m: Matrix) -> Iterable[SparseVector]:
    for i in range(m.rows):
        yield {j: x for j, x in enumerate(m.row(i)) if x}


def rank(m: Matrix) -> int:
    e = Echelon(m.field)
    for r in _matrix_rows(m):
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[Mapping[int, Any]], nvars: int, field: FieldSpec) -> List[SparseVector]:
    """Basis of {x in F^nvars : r.x = 0 for every sparse row r}, one vector per free variable."""
    e = Echelon(field)
    for r in rows:
        e.add(r)
    out: List[SparseVector] = []
    pivots = e.pivots
    for free in range(nvars):
        if e.is_pivot(free):
            continue
        v: SparseVector = {free: field.one}
        for p in pivots:
            c = e.row(p).get(free)
            if c:
                v[p] = field.norm(-c)
        out.append(v)
    return out


def kernel_basis(m: Matrix) -> List[Vector]:
    f = m.field
    return [tuple(v.get(j, f.zero) for j in range(m.cols))
            for v in nullspace(_matrix_rows(m), m.cols, f)]


def solve(m: Matrix, b: Sequence[Any]) -> Optional[Vector]:
    """A particular solution of m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {m.rows} equations")
    f = m.field
    e = Echelon(f)
    for i, r in enumerate(_matrix_rows(m)):
        bi = f.coerce(b[i])
        if bi:
            r[m.cols] = bi
        e.add(r)
    if e.is_pivot(m.cols):
        return None
    x = [f.zero] * m.cols
    for p in e.pivots:
        x[p] = e.row(p).get(m.cols, f.zero)
    return tuple(x)


def inverse(m: Matrix) -> Optional[Matrix]:
    if m.rows != m.cols:
        raise DimensionMismatch(f"inverse of non-square {m.shape} matrix")
    n = m.rows
    f = m.field
    e = Echelon(f)
    for i in range(n):
        r = {j: x for j, x in enumerate(m.row(i)) if x}
        r[n + i] = f.one
        e.add(r)
    if any(not e.is_pivot(j) for j in range(n)):
        return None
    rows = [[e.row(i).get(n + j, f.zero) for j in range(n)] for i in range(n)]
    return Matrix.from_rows(rows, f, n)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def image_basis(m: Matrix) -> List[Vector]:
    """Basis of the column space, as the reduced rows of the transpose."""
    f = m.field
    e = Echelon(f)
    for j in range(m.cols):
        e.add({i: x for i, x in enumerate(m.column(j)) if x})
    return [tuple(e.row(p).get(i, f.zero) for i in range(m.rows)) for p in e.pivots]


def unit_vector(n: int, j: int, field: FieldSpec) -> Vector:
    v = [field.zero] * n
    v[j] = field.one
    return tuple(v)
