"""Self-checks for the brute-force reference solver."""

import pytest

from boundedcode import core, oracle
from boundedcode.errors import InfeasibleError, InputError

QUAD_WEIGHTS = [0.4, 0.3, 0.14, 0.06, 0.06, 0.02, 0.02]


class TestEnumerateOptima:
    def test_trivial_min_single_optimum(self):
        spec = core.problem([1.0] * 7, radix=3, l_min=2, l_max=5)
        best, optima = oracle.enumerate_optima(spec)
        assert best == 0.0
        assert optima == [(2,) * 9]  # padded to the full level

    def test_quadratic_tie_set(self):
        spec = core.problem(QUAD_WEIGHTS, radix=3, l_min=1, l_max=4,
                            penalty=core.QuadraticPenalty())
        best, optima = oracle.enumerate_optima(spec)
        assert best == pytest.approx(0.6, abs=1e-12)
        assert (1, 2, 2, 2, 2, 2, 2) in optima
        assert (1, 1, 2, 2, 3, 3, 3) in optima

    def test_vectors_are_monotone_and_kraft_tight(self):
        spec = core.problem([5.0, 3.0, 2.0, 1.0], radix=2, l_min=1, l_max=3)
        _, optima = oracle.enumerate_optima(spec)
        for vec in optima:
            assert list(vec) == sorted(vec)
            assert core.kraft_sum(vec, 2) == 1

    def test_infeasible_raises(self):
        spec = core.problem([1.0] * 10, radix=2, l_max=3)
        with pytest.raises(InfeasibleError):
            oracle.enumerate_optima(spec)

    def test_size_guard(self):
        spec = core.problem([1.0] * 20, radix=2)
        with pytest.raises(InputError):
            oracle.enumerate_optima(spec)

    def test_fringe_bound_restricts_real_symbols(self):
        spec = core.problem([1.0] * 7, radix=3, l_min=1, l_max=3)
        best_any, _ = oracle.enumerate_optima(spec)
        # no Kraft-tight vector has fringe 0 here; allow slack
        best_d0, optima_d0 = oracle.enumerate_optima(
            spec, fringe_bound=0, kraft_slack=True
        )
        assert best_d0 >= best_any
        for vec in optima_d0:
            real = vec[:7]
            assert max(real) - min(real) == 0


class TestFringeOracle:
    def test_unit7_fixtures(self):
        best0, _ = oracle.best_fringe_oracle([1.0] * 7, 3, 0)
        best1, _ = oracle.best_fringe_oracle([1.0] * 7, 3, 1)
        assert best0 == pytest.approx(14.0)
        assert best1 == pytest.approx(13.0)

    def test_single_symbol(self):
        best, optima = oracle.best_fringe_oracle([1.0], 2, 0)
        assert best == 0.0
        assert optima == [(0,)]
