"""Extremal temperatures reachable with a given resource, and the maximal
ground-state overlap.

Cooling: the largest inverse temperature beta~ such that the target Gibbs
pair (g~(beta~), g) is still dominated by the resource boundary. One
condition per k in [n-1]; each is solved on the monotone map
beta~ -> mass of the k lowest levels. Heating mirrors this with top-k
masses and allows negative beta~ (population inversion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import AthermalityState, ExtendedBeta, GibbsContext
from .errors import (
    BisectionError,
    DegenerateTarget,
    NonPositiveBeta,
    NonPositiveGap,
    WrongDegeneracy,
)
from .majorization import alpha_at, compute_elbows

# An unreachable condition (alpha at or above the analytic beta~ -> +-inf
# limit) is tagged infinite rather than chased by bisection.
LIMIT_SLACK = 1e-12

_REL_WIDTH = 1e-13
_MAX_ITERS = 200
_MAX_DOUBLINGS = 120


def _thermal_weights(energies: Sequence[float], beta: float) -> list[float]:
    shift = max(-beta * h for h in energies)
    return [math.exp(-beta * h - shift) for h in energies]


def _bottom_mass(energies: Sequence[float], beta: float, k: int) -> float:
    """Mass of the k lowest-energy levels of the Gibbs vector at beta."""
    w = _thermal_weights(energies, beta)
    return math.fsum(w[:k]) / math.fsum(w)


def _top_mass(energies: Sequence[float], beta: float, k: int) -> float:
    """Mass of the k highest-energy levels of the Gibbs vector at beta."""
    w = _thermal_weights(energies, beta)
    return math.fsum(w[len(w) - k:]) / math.fsum(w)


@dataclass(frozen=True)
class CoolingReport:
    beta_max: ExtendedBeta
    per_condition: tuple[tuple[int, ExtendedBeta, float], ...]


@dataclass(frozen=True)
class HeatingReport:
    beta_min: ExtendedBeta
    per_condition: tuple[tuple[int, ExtendedBeta, float], ...]


def _bisect(
    f: Callable[[float], float], lo: float, hi: float
) -> float:
    """Root of f on [lo, hi] with f(lo) <= 0 <= f(hi) or f(lo) >= 0 >= f(hi)."""
    flo = f(lo)
    rising = flo <= 0.0
    mid = 0.5 * (lo + hi)
    for _ in range(_MAX_ITERS):
        mid = 0.5 * (lo + hi)
        if hi - lo < _REL_WIDTH * max(1.0, abs(mid)):
            return mid
        fm = f(mid)
        if (fm <= 0.0) == rising:
            lo = mid
        else:
            hi = mid
    return mid


def _solve_cooling_condition(
    energies: Sequence[float], beta: float, k: int, alpha_k: float, limit: float
) -> ExtendedBeta:
    if alpha_k >= limit - LIMIT_SLACK:
        return ExtendedBeta.pos_inf()

    def f(bt: float) -> float:
        return _bottom_mass(energies, bt, k) - alpha_k

    if f(beta) >= 0.0:
        return ExtendedBeta.finite(beta)
    offset = 1.0
    for _ in range(_MAX_DOUBLINGS):
        if f(beta + offset) >= 0.0:
            return ExtendedBeta.finite(_bisect(f, beta, beta + offset))
        offset *= 2.0
    raise BisectionError(f"no cooling bracket for condition k={k}")


def _solve_heating_condition(
    energies: Sequence[float], beta: float, k: int, alpha_k: float, limit: float
) -> ExtendedBeta:
    if alpha_k >= limit - LIMIT_SLACK:
        return ExtendedBeta.neg_inf()

    def f(bt: float) -> float:
        return _top_mass(energies, bt, k) - alpha_k

    if f(beta) >= 0.0:
        return ExtendedBeta.finite(beta)
    offset = 1.0
    for _ in range(_MAX_DOUBLINGS):
        if f(beta - offset) >= 0.0:
            return ExtendedBeta.finite(_bisect(f, beta - offset, beta))
        offset *= 2.0
    raise BisectionError(f"no heating bracket for condition k={k}")


def beta_max(resource: AthermalityState, target: GibbsContext) -> CoolingReport:
    """Maximal inverse temperature to which the target can be cooled."""
    if target.is_degenerate:
        raise DegenerateTarget("target energies are completely degenerate")
    boundary = compute_elbows(resource)
    h = target.energies
    n = target.dim
    d = target.ground_degeneracy()
    per = []
    for k in range(1, n):
        y_k = _bottom_mass(h, target.beta, k)
        alpha_k = alpha_at(boundary, y_k)
        limit = k / d if k < d else 1.0
        beta_k = _solve_cooling_condition(h, target.beta, k, alpha_k, limit)
        per.append((k, beta_k, alpha_k))
    best = min(b for _, b, _ in per)
    return CoolingReport(beta_max=best, per_condition=tuple(per))


def beta_min(resource: AthermalityState, target: GibbsContext) -> HeatingReport:
    """Minimal (possibly negative) inverse temperature reachable by heating."""
    if target.is_degenerate:
        raise DegenerateTarget("target energies are completely degenerate")
    boundary = compute_elbows(resource)
    h = target.energies
    n = target.dim
    d_top = target.top_degeneracy()
    per = []
    for k in range(1, n):
        y_k = _top_mass(h, target.beta, k)
        alpha_k = alpha_at(boundary, y_k)
        limit = k / d_top if k < d_top else 1.0
        beta_k = _solve_heating_condition(h, target.beta, k, alpha_k, limit)
        per.append((k, beta_k, alpha_k))
    best = max(b for _, b, _ in per)
    return HeatingReport(beta_min=best, per_condition=tuple(per))


def qubit_beta_bounds(
    resource: AthermalityState, E: float, beta: float
) -> tuple[ExtendedBeta, ExtendedBeta]:
    """Closed-form (beta~_max, beta~_min) for a qubit target with gap E."""
    if not E > 0.0:
        raise NonPositiveGap(f"energy gap must be > 0, got {E!r}")
    if not (math.isfinite(beta) and beta > 0.0):
        raise NonPositiveBeta(f"beta must be finite and > 0, got {beta!r}")
    boundary = compute_elbows(resource)
    if boundary.is_diagonal:
        return ExtendedBeta.finite(beta), ExtendedBeta.finite(beta)
    w = math.exp(-beta * E)
    g1 = 1.0 / (1.0 + w)
    g2 = w / (1.0 + w)

    alpha = alpha_at(boundary, g1)
    if alpha >= 1.0 - LIMIT_SLACK:
        bmax = ExtendedBeta.pos_inf()
    else:
        bmax = ExtendedBeta.finite(math.log(alpha / (1.0 - alpha)) / E)

    alpha_t = alpha_at(boundary, g2)
    if alpha_t >= 1.0 - LIMIT_SLACK:
        bmin = ExtendedBeta.neg_inf()
    else:
        bmin = ExtendedBeta.finite(math.log((1.0 - alpha_t) / alpha_t) / E)
    return bmax, bmin


def max_ground_overlap(
    resource: AthermalityState, target: GibbsContext, ground_degeneracy: int = 1
) -> float:
    """Largest reachable overlap with the target's (degenerate) ground space."""
    if ground_degeneracy != target.ground_degeneracy():
        raise WrongDegeneracy(
            f"ground degeneracy {ground_degeneracy} inconsistent with energies "
            f"(multiplicity {target.ground_degeneracy()})"
        )
    boundary = compute_elbows(resource)
    y = _bottom_mass(target.energies, target.beta, ground_degeneracy)
    return alpha_at(boundary, y)


def _excited_occupancy(beta: float, E: float) -> float:
    x = beta * E
    if x > 700.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(x))


def qubit_energy_change(E: float, beta: float, beta_tilde: float) -> float:
    """Mean-energy change of a gap-E qubit driven from beta to beta_tilde."""
    return (_excited_occupancy(beta_tilde, E) - _excited_occupancy(beta, E)) * E
