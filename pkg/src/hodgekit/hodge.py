"""Inner products, adjoints, Hodge Laplacians, and signal decomposition.

The Laplacian at dimension n combines the two directions a chain can go:
up through the boundary map above it and down through its own boundary
map.  With non-unit weights the plain transposes are replaced by adjoints
with respect to the weighted inner products; the resulting operator is
self-adjoint for those products but not symmetric as a raw matrix, so
spectral work symmetrizes it by the similarity W^(1/2) L W^(-1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping

import numpy as np

from .chains import (
    Cochain,
    Field,
    SparseMatrix,
    add,
    apply,
    boundary_matrix,
    coboundary_matrix,
    compose,
)
from .errors import DimensionOutOfRange, NumericalFailure, ShapeMismatch
from .spectral import HARMONIC_RTOL, eigendecompose

if TYPE_CHECKING:
    from .complex import SimplicialComplex


class InnerProductWeights:
    """Strictly positive diagonal weights per chain dimension.

    Dimensions without an explicit vector use the standard (all-ones)
    inner product.
    """

    def __init__(self, weights: Mapping[int, "np.ndarray | list[float]"] | None = None):
        self._weights: dict[int, np.ndarray] = {}
        for dim, values in (weights or {}).items():
            vec = np.asarray(values, dtype=np.float64)
            if vec.ndim != 1:
                raise ShapeMismatch(f"weights for dimension {dim} must be a vector")
            if not np.all(vec > 0):
                raise ValueError(f"weights for dimension {dim} must be positive")
            self._weights[int(dim)] = vec

    @classmethod
    def ones(cls) -> InnerProductWeights:
        return cls()

    def vector(self, n: int, length: int) -> np.ndarray:
        vec = self._weights.get(n)
        if vec is None:
            return np.ones(length)
        if len(vec) != length:
            raise ShapeMismatch(
                f"dimension {n} has {length} simplices but {len(vec)} weights"
            )
        return vec


@dataclass(frozen=True, eq=False)
class HodgeOperators:
    """Up, down, and combined Laplacians at one dimension.

    weight_vector is the diagonal inner product on this dimension's chain
    space; the boundary/adjoint maps used to assemble the parts are kept
    for projections and kernel checks (None where the chain complex ends).
    """

    dimension: int
    up: SparseMatrix
    down: SparseMatrix
    full: SparseMatrix
    weight_vector: np.ndarray
    boundary_up: SparseMatrix | None = None
    boundary_down: SparseMatrix | None = None
    adjoint_up: SparseMatrix | None = None
    adjoint_down: SparseMatrix | None = None

    @property
    def size(self) -> int:
        return self.full.rows


def inner_product(
    x: Cochain, y: Cochain, w: InnerProductWeights | None = None
) -> float:
    """Weighted dot product of two cochains of the same dimension."""
    if x.dimension != y.dimension:
        raise ShapeMismatch(f"dimensions differ: {x.dimension} vs {y.dimension}")
    if len(x) != len(y):
        raise ShapeMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    weights = (w or InnerProductWeights.ones()).vector(x.dimension, len(x))
    return float(np.sum(weights * x.values * y.values))


def adjoint_boundary(
    c: SimplicialComplex, n: int, w: InnerProductWeights | None = None
) -> SparseMatrix:
    """Adjoint of the n-th boundary map for the weighted inner products.

    Computes W_n^(-1) d_n^T W_(n-1); with all-ones weights this is exactly
    the transpose.
    """
    if not 1 <= n <= c.max_dim:
        raise DimensionOutOfRange(f"boundary dimension {n} outside 1..{c.max_dim}")
    w = w or InnerProductWeights.ones()
    d = boundary_matrix(c, n, Field.REAL).toarray()
    w_lo = w.vector(n - 1, c.n_simplices(n - 1))
    w_hi = w.vector(n, c.n_simplices(n))
    adj = (d.T * w_lo[np.newaxis, :]) / w_hi[:, np.newaxis]
    return SparseMatrix.from_dense(adj, Field.REAL)


def hodge_laplacian(
    c: SimplicialComplex, n: int, w: InnerProductWeights | None = None
) -> HodgeOperators:
    """Assemble up, down, and combined Laplacians on the n-chains.

    Missing boundary maps (below dimension 0, above the top dimension)
    contribute zero blocks.
    """
    if not 0 <= n <= c.max_dim:
        raise DimensionOutOfRange(f"dimension {n} outside 0..{c.max_dim}")
    w = w or InnerProductWeights.ones()
    size = c.n_simplices(n)
    boundary_up = adjoint_up = None
    boundary_down = adjoint_down = None
    if n < c.max_dim:
        boundary_up = boundary_matrix(c, n + 1, Field.REAL)
        adjoint_up = adjoint_boundary(c, n + 1, w)
        up = compose(boundary_up, adjoint_up)
    else:
        up = SparseMatrix.zeros(size, size, Field.REAL)
    if n >= 1:
        boundary_down = boundary_matrix(c, n, Field.REAL)
        adjoint_down = adjoint_boundary(c, n, w)
        down = compose(adjoint_down, boundary_down)
    else:
        down = SparseMatrix.zeros(size, size, Field.REAL)
    return HodgeOperators(
        dimension=n,
        up=up,
        down=down,
        full=add(up, down),
        weight_vector=w.vector(n, size),
        boundary_up=boundary_up,
        boundary_down=boundary_down,
        adjoint_up=adjoint_up,
        adjoint_down=adjoint_down,
    )


def symmetrized(ops: HodgeOperators) -> np.ndarray:
    """W^(1/2) L W^(-1/2): symmetric, same spectrum as the full Laplacian."""
    sqrt_w = np.sqrt(ops.weight_vector)
    a = ops.full.toarray()
    return (a * sqrt_w[:, np.newaxis]) / sqrt_w[np.newaxis, :]


def harmonic_basis(ops: HodgeOperators, tol: float | None = None) -> list[Cochain]:
    """Orthonormal basis of the Laplacian kernel (the harmonic space).

    Eigenvectors with eigenvalue at most tol are harmonic; tol defaults to
    1e-8 times the largest eigenvalue.  Orthonormality is with respect to
    the weighted inner product on this dimension.
    """
    if ops.size == 0:
        return []
    sym = SparseMatrix.from_dense(symmetrized(ops), Field.REAL)
    basis = eigendecompose(sym, dimension=ops.dimension)
    threshold = tol if tol is not None else HARMONIC_RTOL * basis.lambda_max
    inv_sqrt_w = 1.0 / np.sqrt(ops.weight_vector)
    out = []
    for k in range(basis.size):
        if basis.eigenvalues[k] <= threshold:
            out.append(Cochain(ops.dimension, inv_sqrt_w * basis.eigenvectors[:, k]))
    return out


def _weighted_projection(
    columns: np.ndarray, target: np.ndarray, sqrt_w: np.ndarray
) -> np.ndarray:
    """Least-squares projection of target onto span(columns), weighted."""
    if columns.shape[1] == 0:
        return np.zeros_like(target)
    coeffs, *_ = np.linalg.lstsq(
        columns * sqrt_w[:, np.newaxis], target * sqrt_w, rcond=None
    )
    return columns @ coeffs


def hodge_decompose(
    s: Cochain,
    c: SimplicialComplex,
    n: int,
    w: InnerProductWeights | None = None,
    tol: float = 1e-8,
) -> tuple[Cochain, Cochain, Cochain]:
    """Split a signal into irrotational, harmonic, and solenoidal parts.

    The irrotational part lives in the image of the adjoint boundary from
    below, the solenoidal part in the image of the boundary from above,
    and the harmonic remainder in the Laplacian kernel.  The parts are
    mutually orthogonal for the weighted inner product; tol bounds both
    the allowed orthogonality defect (relative to |s|^2) and the kernel
    residual of the harmonic part (relative to |s|), and violations raise
    NumericalFailure.
    """
    if s.dimension != n:
        raise ShapeMismatch(f"signal dimension {s.dimension} != {n}")
    if len(s) != c.n_simplices(n):
        raise ShapeMismatch(
            f"signal length {len(s)} != {c.n_simplices(n)} simplices"
        )
    w = w or InnerProductWeights.ones()
    ops = hodge_laplacian(c, n, w)
    sqrt_w = np.sqrt(ops.weight_vector)
    values = s.values

    if ops.adjoint_down is not None:
        irrot = _weighted_projection(ops.adjoint_down.toarray(), values, sqrt_w)
    else:
        irrot = np.zeros_like(values)
    if ops.boundary_up is not None:
        solenoid = _weighted_projection(ops.boundary_up.toarray(), values, sqrt_w)
    else:
        solenoid = np.zeros_like(values)
    harmonic = values - irrot - solenoid

    norm_sq = float(np.sum(ops.weight_vector * values * values))
    pair_bound = tol * norm_sq
    for a, b in ((irrot, harmonic), (irrot, solenoid), (harmonic, solenoid)):
        if abs(float(np.sum(ops.weight_vector * a * b))) > pair_bound + 1e-300:
            raise NumericalFailure("decomposition parts are not orthogonal")
    residual = ops.full.toarray() @ harmonic
    if np.linalg.norm(residual) > tol * np.linalg.norm(values) + 1e-300:
        raise NumericalFailure("harmonic part is not in the Laplacian kernel")

    return (
        Cochain(n, irrot),
        Cochain(n, harmonic),
        Cochain(n, solenoid),
    )


def gradient(c: SimplicialComplex, f: Cochain) -> Cochain:
    """Finite differences of a vertex function along the oriented edges."""
    if f.dimension != 0:
        raise ShapeMismatch(f"gradient needs a vertex signal, got dimension {f.dimension}")
    if len(f) != c.n_simplices(0):
        raise ShapeMismatch(f"signal length {len(f)} != {c.n_simplices(0)} vertices")
    if c.max_dim == 0:
        return Cochain(1, np.zeros(0))
    return apply(coboundary_matrix(c, 0, Field.REAL), f, result_dim=1)
