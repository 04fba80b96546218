"""Testing-region geometry.

The lower boundary of the testing region of a state (r, g) is the
piecewise-linear concave curve through the "elbows" obtained from prefix
sums in non-increasing r_i/g_i order. Pointwise domination of these
boundaries decides relative majorization.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cmp_to_key

from .core import AthermalityState
from .errors import YOutOfRange

# Additive slack for boundary-domination comparisons. Comparisons happen at
# exact elbow ordinates where both sides are short sums/products of inputs.
DOMINATION_SLACK = 1e-12

# Adjacent segments whose direction cross-product is below this are merged.
COLLINEARITY_TOL = 1e-14

_Y_CLAMP = 1e-12


@dataclass(frozen=True)
class TestingBoundary:
    """Ordered elbow list from (0,0) to (1,1); canonical (collinear-merged)."""

    elbows: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.elbows) < 2:
            raise ValueError("boundary needs at least the two endpoints")
        if self.elbows[0] != (0.0, 0.0) or self.elbows[-1] != (1.0, 1.0):
            raise ValueError("boundary must run from (0,0) to (1,1)")

    @property
    def is_diagonal(self) -> bool:
        return len(self.elbows) == 2

    def interior(self) -> tuple[tuple[float, float], ...]:
        """Elbows excluding the fixed endpoints (0,0) and (1,1)."""
        return self.elbows[1:-1]

    def to_csv(self) -> str:
        """One `x,y` row per elbow, 17 significant digits, LF endings."""
        return "".join(f"{x:.17g},{y:.17g}\n" for x, y in self.elbows)


def compute_elbows(state: AthermalityState) -> TestingBoundary:
    """Elbows of (r, g): prefix sums in non-increasing r_i/g_i order.

    Ratios are compared by cross-multiplication so ties sort exactly; ties
    are broken by original index and the resulting collinear elbows merged,
    which makes the output canonical (tie-invariant).
    """
    r = state.r.entries
    g = state.g.entries
    n = state.dim

    def cmp(i: int, j: int) -> int:
        cross = r[i] * g[j] - r[j] * g[i]  # sign of r_i/g_i - r_j/g_j
        if cross > 0.0:
            return -1
        if cross < 0.0:
            return 1
        return i - j

    order = sorted(range(n), key=cmp_to_key(cmp))

    points = [(0.0, 0.0)]
    x = y = 0.0
    for idx in order:
        x += r[idx]
        y += g[idx]
        points.append((x, y))
    points[-1] = (1.0, 1.0)  # prefix sums of renormalized entries, pin exactly

    out = [points[0]]
    for k in range(1, len(points) - 1):
        ax, ay = out[-1]
        bx, by = points[k]
        cx, cy = points[k + 1]
        cross = (bx - ax) * (cy - ay) - (cx - ax) * (by - ay)
        if abs(cross) < COLLINEARITY_TOL:
            continue
        out.append((bx, by))
    out.append(points[-1])
    return TestingBoundary(tuple(out))


def alpha_at(boundary: TestingBoundary, y: float) -> float:
    """Boundary abscissa at ordinate y, by linear interpolation."""
    if y < 0.0 or y > 1.0:
        if -_Y_CLAMP <= y < 0.0:
            y = 0.0
        elif 1.0 < y <= 1.0 + _Y_CLAMP:
            y = 1.0
        else:
            raise YOutOfRange(f"y={y!r} outside [0, 1]")
    ys = [p[1] for p in boundary.elbows]
    k = bisect_right(ys, y) - 1
    if k >= len(ys) - 1:
        return boundary.elbows[-1][0]
    x0, y0 = boundary.elbows[k]
    if y == y0:
        return x0
    x1, y1 = boundary.elbows[k + 1]
    return x0 + (x1 - x0) / (y1 - y0) * (y - y0)


def relatively_majorizes(
    source: AthermalityState, target: AthermalityState
) -> bool:
    """True iff (r, g) of `source` relatively majorizes that of `target`.

    By convexity it suffices to dominate the target boundary at the target's
    elbow ordinates.
    """
    src = compute_elbows(source)
    tgt = compute_elbows(target)
    for x, y in tgt.elbows:
        if alpha_at(src, y) < x - DOMINATION_SLACK:
            return False
    return True
