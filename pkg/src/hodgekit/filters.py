"""Polynomial filters in the up and down Hodge Laplacians.

Because the up and down parts annihilate each other (a consequence of the
boundary-of-boundary identity), the two polynomial branches can be
evaluated independently and filter irrotational and solenoidal content
separately.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .chains import Cochain, Field, SparseMatrix, apply
from .errors import ShapeMismatch
from .hodge import HodgeOperators

MAX_DEGREE = 64
MAGNITUDE_WARN = 1e12


@dataclass(frozen=True)
class FilterSpec:
    """Filter coefficients: constant, down-branch, and up-branch powers.

    down_coeffs[j-1] weighs (L_down)^j and up_coeffs[k-1] weighs (L_up)^k;
    the constant alpha0 weighs the identity.
    """

    dimension: int
    alpha0: float = 0.0
    down_coeffs: tuple[float, ...] = field(default_factory=tuple)
    up_coeffs: tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "down_coeffs", tuple(float(v) for v in self.down_coeffs))
        object.__setattr__(self, "up_coeffs", tuple(float(v) for v in self.up_coeffs))
        for v in (self.alpha0, *self.down_coeffs, *self.up_coeffs):
            if not np.isfinite(v):
                raise ValueError("filter coefficients must be finite")
        degree = max(len(self.down_coeffs), len(self.up_coeffs))
        if degree > MAX_DEGREE:
            raise ValueError(f"filter degree {degree} exceeds {MAX_DEGREE}")


def _polynomial(base: np.ndarray, coeffs: tuple[float, ...]) -> np.ndarray:
    out = np.zeros_like(base)
    power = np.eye(base.shape[0])
    for coeff in coeffs:
        power = power @ base
        if coeff:
            out += coeff * power
    return out


def build_filter(spec: FilterSpec, ops: HodgeOperators) -> SparseMatrix:
    """Evaluate the filter polynomial on the given dimension's Laplacians."""
    if spec.dimension != ops.dimension:
        raise ShapeMismatch(
            f"filter dimension {spec.dimension} != operators dimension {ops.dimension}"
        )
    size = ops.size
    h = spec.alpha0 * np.eye(size)
    h += _polynomial(ops.down.toarray(), spec.down_coeffs)
    h += _polynomial(ops.up.toarray(), spec.up_coeffs)
    if h.size and np.max(np.abs(h)) > MAGNITUDE_WARN:
        warnings.warn(
            "filter matrix magnitude exceeds 1e12; iterated Laplacian powers "
            "grow as lambda_max^k",
            RuntimeWarning,
            stacklevel=2,
        )
    return SparseMatrix.from_dense(h, Field.REAL)


def apply_filter(h: SparseMatrix, s: Cochain) -> Cochain:
    """Filter a signal: plain matrix-vector product."""
    return apply(h, s)


def shift(ops: HodgeOperators, s: Cochain, d: int = 1) -> Cochain:
    """Apply the combined Laplacian d times (the simplicial shift)."""
    if d < 1:
        raise ValueError(f"shift count must be positive, got {d}")
    out = s
    for _ in range(d):
        out = apply(ops.full, out)
    return out
