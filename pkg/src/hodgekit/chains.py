"""Boundary and coboundary matrices over GF(2) and oriented reals.

The sparse matrix here is the carrier for every operator in the package:
boundary maps, Laplacians, filters, and sheaf coboundaries.  Matrices are
immutable values; all arithmetic is done in the tagged coefficient field
(GF(2) with xor accumulation, or float64 with a construction-time zero
threshold of 1e-12).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Iterable

import numpy as np

from .errors import DimensionOutOfRange, FieldMismatch, ShapeMismatch

if TYPE_CHECKING:
    from .complex import SimplicialComplex

REAL_ZERO_TOL = 1e-12


class Field(Enum):
    GF2 = "gf2"
    REAL = "real"


@dataclass(frozen=True, eq=False)
class Cochain:
    """A value vector aligned to the canonical order of the n-simplices."""

    dimension: int
    values: np.ndarray
    field: Field = Field.REAL

    def __post_init__(self) -> None:
        dtype = np.uint8 if self.field is Field.GF2 else np.float64
        vals = np.asarray(self.values, dtype=dtype)
        if self.field is Field.GF2:
            vals = vals % 2
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, eq=False)
class SparseMatrix:
    """Immutable triplet-form sparse matrix tagged with its field.

    GF(2) entries are exactly 1; real entries are finite and have magnitude
    above REAL_ZERO_TOL.  Duplicate positions are summed in the field during
    construction and zeros dropped.
    """

    rows: int
    cols: int
    entries: dict = field(repr=False)
    field_tag: Field

    @classmethod
    def from_entries(
        cls,
        rows: int,
        cols: int,
        triplets: Iterable[tuple[int, int, float]],
        field_tag: Field,
    ) -> SparseMatrix:
        acc: dict[tuple[int, int], float] = {}
        for r, c, v in triplets:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ShapeMismatch(f"entry ({r},{c}) outside {rows}x{cols}")
            acc[(r, c)] = acc.get((r, c), 0) + v
        entries: dict[tuple[int, int], float] = {}
        for pos, v in acc.items():
            if field_tag is Field.GF2:
                if int(v) % 2:
                    entries[pos] = 1
            elif abs(v) > REAL_ZERO_TOL:
                if not np.isfinite(v):
                    raise ValueError(f"non-finite entry at {pos}")
                entries[pos] = float(v)
        return cls(rows, cols, entries, field_tag)

    @classmethod
    def from_dense(cls, array: np.ndarray, field_tag: Field) -> SparseMatrix:
        a = np.asarray(array)
        rows, cols = a.shape
        triplets = [
            (int(r), int(c), a[r, c]) for r, c in zip(*np.nonzero(a))
        ]
        return cls.from_entries(rows, cols, triplets, field_tag)

    @classmethod
    def zeros(cls, rows: int, cols: int, field_tag: Field) -> SparseMatrix:
        return cls(rows, cols, {}, field_tag)

    @classmethod
    def identity(cls, n: int, field_tag: Field) -> SparseMatrix:
        value = 1 if field_tag is Field.GF2 else 1.0
        return cls(n, n, {(i, i): value for i in range(n)}, field_tag)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def toarray(self) -> np.ndarray:
        dtype = np.uint8 if self.field_tag is Field.GF2 else np.float64
        out = np.zeros((self.rows, self.cols), dtype=dtype)
        for (r, c), v in self.entries.items():
            out[r, c] = v
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.field_tag == other.field_tag
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return (
            f"SparseMatrix({self.rows}x{self.cols}, {self.field_tag.value},"
            f" nnz={self.nnz})"
        )


def transpose(m: SparseMatrix) -> SparseMatrix:
    return SparseMatrix(
        m.cols, m.rows, {(c, r): v for (r, c), v in m.entries.items()}, m.field_tag
    )


def boundary_matrix(c: SimplicialComplex, n: int, field_tag: Field) -> SparseMatrix:
    """Boundary map from n-chains to (n-1)-chains, shape (#C_{n-1}, #C_n).

    GF(2) entries record bare face incidence.  Real entries carry the
    induced-orientation sign: the face obtained by deleting the i-th vertex
    of the ascending vertex tuple gets (-1)**i.
    """
    if not 1 <= n <= c.max_dim:
        raise DimensionOutOfRange(
            f"boundary dimension {n} outside 1..{c.max_dim}"
        )
    rows = c.n_simplices(n - 1)
    cols = c.n_simplices(n)
    triplets = []
    for j, s in enumerate(c.simplices(n)):
        for i, f in enumerate(s.faces()):
            value = 1 if field_tag is Field.GF2 else float((-1) ** i)
            triplets.append((c.index(f), j, value))
    return SparseMatrix.from_entries(rows, cols, triplets, field_tag)


def coboundary_matrix(c: SimplicialComplex, n: int, field_tag: Field) -> SparseMatrix:
    """Transpose of boundary_matrix(c, n+1); 0 x #C_n when nothing is above."""
    if not 0 <= n <= c.max_dim:
        raise DimensionOutOfRange(
            f"coboundary dimension {n} outside 0..{c.max_dim}"
        )
    if n == c.max_dim:
        return SparseMatrix.zeros(0, c.n_simplices(n), field_tag)
    return transpose(boundary_matrix(c, n + 1, field_tag))


def apply(m: SparseMatrix, x: Cochain, result_dim: int | None = None) -> Cochain:
    """Matrix-vector product in the matrix's field.

    The result keeps x's dimension tag unless result_dim overrides it
    (boundary maps move between dimensions, operators on one chain do not).
    """
    if m.field_tag is not x.field:
        raise FieldMismatch(f"{m.field_tag.value} matrix applied to {x.field.value} cochain")
    if m.cols != len(x):
        raise ShapeMismatch(f"matrix has {m.cols} columns, cochain length {len(x)}")
    dim = x.dimension if result_dim is None else result_dim
    if m.field_tag is Field.GF2:
        out = np.zeros(m.rows, dtype=np.uint8)
        for (r, c), _ in m.entries.items():
            out[r] ^= x.values[c] & 1
    else:
        out = np.zeros(m.rows, dtype=np.float64)
        for (r, c), v in m.entries.items():
            out[r] += v * x.values[c]
    return Cochain(dim, out, m.field_tag)


def compose(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Matrix product a @ b in the common field."""
    if a.field_tag is not b.field_tag:
        raise FieldMismatch(
            f"cannot compose {a.field_tag.value} with {b.field_tag.value}"
        )
    if a.cols != b.rows:
        raise ShapeMismatch(f"inner dimensions differ: {a.cols} vs {b.rows}")
    if a.field_tag is Field.GF2:
        prod = (a.toarray().astype(np.int64) @ b.toarray().astype(np.int64)) % 2
    else:
        prod = a.toarray() @ b.toarray()
    return SparseMatrix.from_dense(prod, a.field_tag)


def add(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Entrywise sum in the common field (xor for GF(2))."""
    if a.field_tag is not b.field_tag:
        raise FieldMismatch(f"cannot add {a.field_tag.value} and {b.field_tag.value}")
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    triplets = [(r, c, v) for (r, c), v in a.entries.items()]
    triplets += [(r, c, v) for (r, c), v in b.entries.items()]
    return SparseMatrix.from_entries(a.rows, a.cols, triplets, a.field_tag)
