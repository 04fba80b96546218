"""Gibbs vectors, partition functions, and the pinching reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import AthermalityState, GibbsContext, ProbabilityVector, validate_state
from .errors import DimensionMismatch, NonFiniteBeta

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-9
PSD_TOL = 1e-10
DEGENERACY_TOL = 1e-12


def gibbs_vector(energies: Sequence[float], beta: float) -> ProbabilityVector:
    """Thermal occupation vector exp(-beta*h_i)/Z, computed in log domain.

    Negative beta is allowed (population-inverted target states).
    """
    if not math.isfinite(beta):
        raise NonFiniteBeta(f"beta must be finite, got {beta!r}")
    exponents = [-beta * h for h in energies]
    shift = max(exponents)
    weights = [math.exp(e - shift) for e in exponents]
    total = math.fsum(weights)
    return ProbabilityVector(tuple(w / total for w in weights))


def log_partition(energies: Sequence[float], beta: float) -> float:
    """ln Z(beta) via the shifted log-sum-exp."""
    if not math.isfinite(beta):
        raise NonFiniteBeta(f"beta must be finite, got {beta!r}")
    exponents = [-beta * h for h in energies]
    shift = max(exponents)
    return shift + math.log(math.fsum(math.exp(e - shift) for e in exponents))


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix (Hermitian, unit trace, PSD within tolerance)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise ValueError("matrix is not Hermitian within tolerance")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {tr!r} not within {TRACE_TOL} of 1")
        if np.min(np.linalg.eigvalsh(m)) < -PSD_TOL:
            raise ValueError("matrix is not positive semidefinite within tolerance")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _degeneracy_blocks(
    g: Sequence[float], degeneracy_tol: float
) -> list[list[int]]:
    """Group indices whose Gibbs entries are equal within relative tolerance."""
    blocks: list[list[int]] = []
    reps: list[float] = []
    for i, gi in enumerate(g):
        for b, rep in enumerate(reps):
            if abs(gi - rep) <= degeneracy_tol * max(abs(gi), abs(rep)):
                blocks[b].append(i)
                break
        else:
            blocks.append([i])
            reps.append(gi)
    return blocks


def pinch(
    rho: DensityMatrix,
    g: ProbabilityVector,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> DensityMatrix:
    """Zero all entries of rho outside the degeneracy blocks of g.

    g is the diagonal of the reference Gibbs state in the computational
    basis; blocks are sets of indices with equal Gibbs entries.
    """
    if rho.dim != g.dim:
        raise DimensionMismatch(f"rho dim {rho.dim} != Gibbs dim {g.dim}")
    blocks = _degeneracy_blocks(g.entries, degeneracy_tol)
    mask = np.zeros((g.dim, g.dim), dtype=bool)
    for block in blocks:
        idx = np.asarray(block)
        mask[np.ix_(idx, idx)] = True
    return DensityMatrix(np.where(mask, rho.matrix, 0.0))


def to_quasiclassical(rho: DensityMatrix, gibbs: GibbsContext) -> AthermalityState:
    """Pinch rho against the Gibbs state of `gibbs` and read off populations."""
    g = gibbs_vector(gibbs.energies, gibbs.beta)
    pinched = pinch(rho, g)
    populations = np.diag(pinched.matrix).real
    return validate_state(list(populations), list(g.entries))
