"""Validated domain types: probability vectors, Gibbs contexts, athermality
states, and inverse temperatures extended with the two infinite tags.

All types are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    AthermalError,
    DimensionMismatch,
    NegativeEntry,
    NonPositiveBeta,
    NormalizationOutOfTolerance,
    RankDeficientGibbs,
)

NORMALIZATION_TOL = 1e-9


@dataclass(frozen=True)
class ProbabilityVector:
    """Probability vector, stored exactly renormalized."""

    entries: tuple[float, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise DimensionMismatch("probability vector must have dim >= 1")
        for x in self.entries:
            if not math.isfinite(x):
                raise NegativeEntry(f"non-finite entry {x!r}")
            if x < 0.0:
                raise NegativeEntry(f"negative entry {x!r}")
        total = math.fsum(self.entries)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NormalizationOutOfTolerance(
                f"entries sum to {total!r}, off by more than {NORMALIZATION_TOL}"
            )
        if total != 1.0:
            object.__setattr__(
                self, "entries", tuple(x / total for x in self.entries)
            )

    @classmethod
    def from_raw(cls, raw: Sequence[float]) -> "ProbabilityVector":
        return cls(tuple(float(x) for x in raw))

    @property
    def dim(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class GibbsContext:
    """Sorted energy levels plus a positive inverse temperature.

    Energies are accepted in any order; they are sorted stably and the
    sorting permutation is retained so paired population lists can be
    reordered consistently (see :meth:`apply_permutation`).
    """

    energies: tuple[float, ...]
    beta: float
    permutation: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.energies) < 1:
            raise DimensionMismatch("at least one energy level required")
        for h in self.energies:
            if not math.isfinite(h):
                raise AthermalError(f"non-finite energy {h!r}")
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise NonPositiveBeta(f"beta must be finite and > 0, got {self.beta!r}")
        order = sorted(range(len(self.energies)), key=lambda i: self.energies[i])
        object.__setattr__(self, "permutation", tuple(order))
        object.__setattr__(
            self, "energies", tuple(float(self.energies[i]) for i in order)
        )

    @property
    def dim(self) -> int:
        return len(self.energies)

    @property
    def is_degenerate(self) -> bool:
        return self.energies[0] == self.energies[-1]

    def ground_degeneracy(self) -> int:
        return sum(1 for h in self.energies if h == self.energies[0])

    def top_degeneracy(self) -> int:
        return sum(1 for h in self.energies if h == self.energies[-1])

    def apply_permutation(self, values: Sequence[float]) -> tuple[float, ...]:
        """Reorder a list paired with the originally supplied energies."""
        if len(values) != len(self.permutation):
            raise DimensionMismatch(
                f"expected {len(self.permutation)} values, got {len(values)}"
            )
        return tuple(float(values[i]) for i in self.permutation)


@dataclass(frozen=True)
class AthermalityState:
    """Quasi-classical state relative to its full-rank Gibbs vector."""

    r: ProbabilityVector
    g: ProbabilityVector

    def __post_init__(self):
        if self.r.dim != self.g.dim:
            raise DimensionMismatch(
                f"population dim {self.r.dim} != Gibbs dim {self.g.dim}"
            )
        if any(x <= 0.0 for x in self.g.entries):
            raise RankDeficientGibbs("Gibbs vector must be strictly positive")

    @property
    def dim(self) -> int:
        return self.r.dim

    @property
    def is_free(self) -> bool:
        return self.r.entries == self.g.entries


def validate_state(r: Sequence[float], g: Sequence[float]) -> AthermalityState:
    """Validate and renormalize a raw (populations, Gibbs) pair."""
    if len(r) == 0 or len(g) == 0:
        raise DimensionMismatch("input lists must be non-empty")
    if len(r) != len(g):
        raise DimensionMismatch(f"lengths differ: {len(r)} vs {len(g)}")
    return AthermalityState(
        ProbabilityVector.from_raw(r), ProbabilityVector.from_raw(g)
    )


@dataclass(frozen=True)
class ExtendedBeta:
    """Inverse temperature extended with explicit +inf / -inf tags.

    The tags never enter arithmetic; consumers branch on :attr:`kind`.
    Ordering is total: -inf < any finite value < +inf.
    """

    kind: str  # "finite", "+inf", or "-inf"
    value: float = 0.0

    def __post_init__(self):
        if self.kind not in ("finite", "+inf", "-inf"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "finite" and not math.isfinite(self.value):
            raise ValueError(f"finite tag with non-finite value {self.value!r}")

    @classmethod
    def finite(cls, value: float) -> "ExtendedBeta":
        return cls("finite", float(value))

    @classmethod
    def pos_inf(cls) -> "ExtendedBeta":
        return cls("+inf")

    @classmethod
    def neg_inf(cls) -> "ExtendedBeta":
        return cls("-inf")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def _key(self) -> tuple[int, float]:
        if self.kind == "-inf":
            return (-1, 0.0)
        if self.kind == "+inf":
            return (1, 0.0)
        return (0, self.value)

    def __lt__(self, other: "ExtendedBeta") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "ExtendedBeta") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "ExtendedBeta") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "ExtendedBeta") -> bool:
        return self._key() >= other._key()

    def to_json(self):
        """Finite values as numbers, tags as the strings "+inf" / "-inf"."""
        return self.value if self.kind == "finite" else self.kind
