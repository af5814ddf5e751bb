"""Symmetric eigendecomposition, simplicial Fourier transform, spectra checks.

The eigensolver contract is: full spectrum, ascending eigenvalues,
orthonormal eigenvectors, and a deterministic sign convention (each
eigenvector's largest-magnitude entry is positive, first such entry on
ties).  Within a numerically repeated eigenvalue the basis is arbitrary,
so comparisons across runs should use subspace projectors, not vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .chains import Cochain, Field, SparseMatrix, boundary_matrix, compose, transpose
from .errors import FieldMismatch, NotAGraph, NotSymmetric, ShapeMismatch
from .homology import betti

if TYPE_CHECKING:
    from .complex import SimplicialComplex

HARMONIC_RTOL = 1e-8


@dataclass(frozen=True, eq=False)
class SpectralBasis:
    """Ascending eigenvalues with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    dimension: int | None = None

    @property
    def size(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1]) if self.size else 0.0


def eigendecompose(
    L: SparseMatrix, tol: float = 1e-10, dimension: int | None = None
) -> SpectralBasis:
    """Full eigendecomposition of a symmetric real matrix.

    Raises NotSymmetric unless max|L - L^T| <= tol * max|L|.  The weighted
    self-adjoint case must be symmetrized by the caller first.
    """
    if L.field_tag is not Field.REAL:
        raise FieldMismatch("eigendecomposition needs a real matrix")
    a = L.toarray()
    if a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    if a.size:
        scale = max(np.max(np.abs(a)), 1.0)
        if np.max(np.abs(a - a.T)) > tol * scale:
            raise NotSymmetric("matrix is not symmetric within tolerance")
    sym = (a + a.T) / 2.0
    if sym.size == 0:
        return SpectralBasis(np.zeros(0), np.zeros((0, 0)), dimension)
    eigenvalues, vectors = np.linalg.eigh(sym)
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0:
            vectors[:, k] = -col
    return SpectralBasis(eigenvalues, vectors, dimension)


def _check_alignment(x: Cochain, basis: SpectralBasis) -> None:
    if basis.dimension is not None and x.dimension != basis.dimension:
        raise ShapeMismatch(
            f"cochain dimension {x.dimension} != basis dimension {basis.dimension}"
        )
    if len(x) != basis.size:
        raise ShapeMismatch(f"cochain length {len(x)} != basis size {basis.size}")


def sft(x: Cochain, basis: SpectralBasis) -> Cochain:
    """Simplicial Fourier transform: coordinates of x in the eigenbasis."""
    _check_alignment(x, basis)
    return Cochain(x.dimension, basis.eigenvectors.T @ x.values)


def inverse_sft(xhat: Cochain, basis: SpectralBasis) -> Cochain:
    """Inverse transform: reassemble the signal from spectral coordinates."""
    _check_alignment(xhat, basis)
    return Cochain(xhat.dimension, basis.eigenvectors @ xhat.values)


@dataclass(frozen=True)
class SpectraReport:
    """Comparison of the two graph Laplacian spectra."""

    l0_nonzero: tuple[float, ...]
    l1_nonzero: tuple[float, ...]
    agree: bool
    zero_mult_diff: int
    b0_minus_b1: int


def graph_laplacians(c: SimplicialComplex) -> tuple[SparseMatrix, SparseMatrix]:
    """The vertex Laplacian d1 d1^T and the edge Laplacian d1^T d1."""
    if c.max_dim > 1:
        raise NotAGraph(f"complex has dimension {c.max_dim}")
    n_v = c.n_simplices(0)
    n_e = c.n_simplices(1)
    if n_e == 0:
        return (
            SparseMatrix.zeros(n_v, n_v, Field.REAL),
            SparseMatrix.zeros(0, 0, Field.REAL),
        )
    d1 = boundary_matrix(c, 1, Field.REAL)
    return compose(d1, transpose(d1)), compose(transpose(d1), d1)


def compare_spectra(c: SimplicialComplex, tol: float | None = None) -> SpectraReport:
    """Check that the two graph Laplacians share their nonzero spectrum.

    The multiplicity of the eigenvalue zero differs between them by exactly
    b0 - b1; both quantities are reported so callers can assert equality.
    """
    l0, l1 = graph_laplacians(c)
    ev0 = eigendecompose(l0).eigenvalues
    ev1 = eigendecompose(l1).eigenvalues
    lam_max = max(
        float(ev0[-1]) if ev0.size else 0.0, float(ev1[-1]) if ev1.size else 0.0
    )
    zero_thr = HARMONIC_RTOL * lam_max
    match_tol = tol if tol is not None else 1e-6 * lam_max
    nz0 = tuple(float(v) for v in ev0 if v > zero_thr)
    nz1 = tuple(float(v) for v in ev1 if v > zero_thr)
    if len(nz0) == len(nz1):
        agree = all(abs(a - b) <= match_tol for a, b in zip(nz0, nz1))
    else:
        agree = False
    b = betti(c, Field.GF2)
    b0_minus_b1 = b[0] - (b[1] if len(b) > 1 else 0)
    zero_mult_diff = (len(ev0) - len(nz0)) - (len(ev1) - len(nz1))
    return SpectraReport(nz0, nz1, agree, zero_mult_diff, b0_minus_b1)
