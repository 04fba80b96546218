import numpy as np
import pytest

from athermal import lp_feasible, relatively_majorizes, validate_state
from athermal.core import ProbabilityVector
from athermal.errors import DimensionMismatch


def _pv(entries):
    return ProbabilityVector(tuple(entries))


def random_state(rng, dim):
    r = rng.dirichlet(np.ones(dim))
    g = rng.dirichlet(np.ones(dim)) + 1e-3
    return validate_state(r, g / g.sum())


class TestLpFeasible:
    def test_identity_instance(self):
        p = _pv((0.7, 0.3))
        r = _pv((0.6, 0.4))
        out = lp_feasible(p, r, p, r)
        assert out.feasible
        assert out.max_violation < 1e-9

    def test_map_to_gibbs_always_feasible(self):
        # E = r 1^T maps every vector to r
        p = _pv((0.9, 0.1))
        r = _pv((0.6, 0.4))
        out = lp_feasible(p, r, r, r)
        assert out.feasible

    def test_infeasible_reports_positive_violation(self):
        p = _pv((0.6, 0.4))
        r = _pv((0.6, 0.4))
        q = _pv((0.9, 0.1))
        out = lp_feasible(p, r, q, r)
        assert not out.feasible
        assert out.max_violation > 1e-7

    def test_dimension_reduction_allowed(self):
        p = _pv((0.5, 0.3, 0.2))
        r = _pv((0.4, 0.4, 0.2))
        out = lp_feasible(p, r, _pv((0.8, 0.2)), _pv((0.6, 0.4)))
        assert isinstance(out.feasible, bool)

    def test_rejects_mismatched_pair_dims(self):
        with pytest.raises(DimensionMismatch):
            lp_feasible(_pv((0.5, 0.5)), _pv((0.4, 0.3, 0.3)), _pv((1.0,)), _pv((1.0,)))

    def test_rejects_bad_tol(self):
        p = _pv((0.5, 0.5))
        with pytest.raises(ValueError):
            lp_feasible(p, p, p, p, tol=0.0)

    def test_agrees_with_geometry(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            n = int(rng.integers(2, 5))
            m = int(rng.integers(2, 5))
            src = random_state(rng, n)
            tgt = random_state(rng, m)
            geo = relatively_majorizes(src, tgt)
            lp = lp_feasible(src.r, src.g, tgt.r, tgt.g).feasible
            assert geo == lp

    def test_explicit_gibbs_stochastic_witness(self):
        # push p through a fixed column-stochastic E that also fixes r
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = 3
            E = rng.dirichlet(np.ones(n), size=n).T  # columns sum to 1
            r = rng.dirichlet(np.ones(n)) + 1e-3
            r = r / r.sum()
            p = rng.dirichlet(np.ones(n))
            q = E @ p
            s = E @ r
            out = lp_feasible(_pv(tuple(p)), _pv(tuple(r)), _pv(tuple(q)), _pv(tuple(s)))
            assert out.feasible
