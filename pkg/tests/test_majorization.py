import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from athermal import alpha_at, compute_elbows, relatively_majorizes, validate_state
from athermal.errors import YOutOfRange


_weight = st.floats(min_value=1e-3, max_value=1.0, allow_nan=False)


@st.composite
def states(draw):
    dim = draw(st.integers(min_value=1, max_value=8))
    rw = draw(st.lists(_weight, min_size=dim, max_size=dim))
    gw = draw(st.lists(_weight, min_size=dim, max_size=dim))
    r = [x / math.fsum(rw) for x in rw]
    g = [x / math.fsum(gw) for x in gw]
    return validate_state(r, g)


class TestComputeElbows:
    def test_worked_example(self):
        state = validate_state((0.7, 0.2, 0.1), (0.2, 0.3, 0.5))
        b = compute_elbows(state)
        expected = ((0.0, 0.0), (0.7, 0.2), (0.9, 0.5), (1.0, 1.0))
        assert np.allclose(b.elbows, expected, atol=1e-15)

    def test_free_state_is_diagonal(self):
        g = (0.6, 0.3, 0.1)
        b = compute_elbows(validate_state(g, g))
        assert b.is_diagonal
        assert b.elbows == ((0.0, 0.0), (1.0, 1.0))

    def test_collinear_segments_merge(self):
        # two levels with equal ratio r/g collapse into one segment
        state = validate_state((0.4, 0.2, 0.4), (0.2, 0.1, 0.7))
        b = compute_elbows(state)
        assert len(b.elbows) == 3

    def test_endpoints_pinned(self):
        state = validate_state((1.0, 0.0), (0.5, 0.5))
        b = compute_elbows(state)
        assert b.elbows[0] == (0.0, 0.0)
        assert b.elbows[-1] == (1.0, 1.0)

    @given(states())
    @settings(max_examples=200, deadline=None)
    def test_elbow_invariants(self, state):
        b = compute_elbows(state)
        xs = [p[0] for p in b.elbows]
        ys = [p[1] for p in b.elbows]
        assert b.elbows[0] == (0.0, 0.0) and b.elbows[-1] == (1.0, 1.0)
        assert all(x1 < x2 for x1, x2 in zip(xs, xs[1:]))
        assert all(y1 <= y2 for y1, y2 in zip(ys, ys[1:]))
        assert all(x >= y - 1e-12 for x, y in b.elbows)
        # alpha (x as a function of y) is concave: slopes dy/dx non-decreasing
        slopes = [
            (y2 - y1) / (x2 - x1)
            for (x1, y1), (x2, y2) in zip(b.elbows, b.elbows[1:])
        ]
        assert all(s2 >= s1 - 1e-9 for s1, s2 in zip(slopes, slopes[1:]))


class TestAlphaAt:
    def test_exact_at_elbow(self):
        state = validate_state((0.7, 0.2, 0.1), (0.2, 0.3, 0.5))
        b = compute_elbows(state)
        # exact at stored elbows (no interpolation noise)
        for x, y in b.interior():
            assert alpha_at(b, y) == x
        assert alpha_at(b, 0.2) == 0.7
        assert alpha_at(b, 0.5) == pytest.approx(0.9, abs=1e-15)

    def test_interpolated_value(self):
        state = validate_state((0.7, 0.2, 0.1), (0.2, 0.3, 0.5))
        b = compute_elbows(state)
        assert alpha_at(b, 0.35) == pytest.approx(0.8, abs=1e-15)

    def test_rejects_out_of_range(self):
        b = compute_elbows(validate_state((0.9, 0.1), (0.5, 0.5)))
        with pytest.raises(YOutOfRange):
            alpha_at(b, 1.5)

    @given(states(), st.floats(min_value=0.0, max_value=1.0))
    @settings(max_examples=200, deadline=None)
    def test_majorizes_ordinate(self, state, y):
        b = compute_elbows(state)
        assert alpha_at(b, y) >= y - 1e-12


class TestRelativelyMajorizes:
    def test_reflexive(self):
        state = validate_state((0.7, 0.2, 0.1), (0.2, 0.3, 0.5))
        assert relatively_majorizes(state, state)

    def test_anything_majorizes_free(self):
        g = (0.5, 0.3, 0.2)
        state = validate_state((0.8, 0.1, 0.1), g)
        assert relatively_majorizes(state, validate_state(g, g))

    def test_free_does_not_majorize_athermal(self):
        g = (0.5, 0.3, 0.2)
        state = validate_state((0.8, 0.1, 0.1), g)
        assert not relatively_majorizes(validate_state(g, g), state)

    def test_strict_qubit_pair(self):
        mild = validate_state((0.8, 0.2), (0.75, 0.25))
        cold = validate_state((0.9, 0.1), (0.75, 0.25))
        assert relatively_majorizes(cold, mild)
        assert not relatively_majorizes(mild, cold)

    @given(states(), states())
    @settings(max_examples=150, deadline=None)
    def test_decision_matches_pointwise_domination(self, a, b):
        ba, bb = compute_elbows(a), compute_elbows(b)
        verdict = relatively_majorizes(a, b)
        dominated = all(
            alpha_at(ba, y) >= x - 1e-12 for x, y in bb.elbows
        )
        assert verdict == dominated


class TestBoundaryCsv:
    def test_round_trip_precision(self):
        state = validate_state((0.7, 0.2, 0.1), (0.2, 0.3, 0.5))
        b = compute_elbows(state)
        text = b.to_csv()
        rows = [line.split(",") for line in text.strip().splitlines()]
        parsed = tuple((float(x), float(y)) for x, y in rows)
        assert parsed == b.elbows
