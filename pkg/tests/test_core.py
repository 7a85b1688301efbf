"""Unit tests for problem normalization, penalties, padding and Kraft math."""

import math
from fractions import Fraction

import pytest

from boundedcode import core
from boundedcode.errors import CapacityError, InputError


class TestPenalties:
    def test_linear_phi(self):
        p = core.LinearPenalty()
        assert [p.phi(d, 0, 2) for d in range(4)] == [0.0, 1.0, 2.0, 3.0]

    def test_quadratic_default_is_pure_square(self):
        p = core.QuadraticPenalty()
        assert [p.phi(d, 1, 3) for d in range(4)] == [0.0, 1.0, 4.0, 9.0]

    def test_quadratic_increments(self):
        # delta**2 has odd-number increments regardless of l_min
        p = core.QuadraticPenalty()
        assert p.increments(3, 1, 3) == [1.0, 3.0, 5.0]

    def test_quadratic_offset_shifts(self):
        p = core.QuadraticPenalty(offset=1)
        assert p.phi(2, 1, 3) == 9.0

    def test_exponential_includes_l_min(self):
        p = core.ExponentialPenalty(1.0)
        assert p.phi(0, 2, 2) == 4.0
        assert p.phi(1, 2, 2) == 8.0

    def test_exponential_rejects_nonpositive_rate(self):
        with pytest.raises(InputError):
            core.ExponentialPenalty(0.0)

    def test_absolute_wraps_inner_at_full_length(self):
        p = core.AbsolutePenalty(core.LinearPenalty())
        assert p.phi(0, 3, 2) == 3.0
        assert p.phi(2, 3, 2) == 5.0

    def test_custom_convex_accepted(self):
        p = core.CustomPenalty(lambda d: d * d + d)
        p.validate(5, 0, 2)

    def test_custom_nonconvex_rejected(self):
        p = core.CustomPenalty(lambda d: math.sqrt(d))
        with pytest.raises(InputError):
            p.validate(4, 0, 2)

    def test_decreasing_rejected(self):
        p = core.CustomPenalty(lambda d: -d)
        with pytest.raises(InputError):
            p.validate(3, 0, 2)


class TestProblem:
    def test_sorts_and_remembers_order(self):
        spec = core.problem([0.1, 0.5, 0.4])
        assert spec.weights == (0.5, 0.4, 0.1)
        assert spec.order == (1, 2, 0)

    def test_stable_sort_on_ties(self):
        spec = core.problem([0.2, 0.6, 0.2])
        assert spec.order == (1, 0, 2)

    def test_default_l_max_is_hard_bound(self):
        spec = core.problem([1.0] * 7, radix=3)
        assert spec.l_max == core.hard_length_bound(7, 3) == 3

    def test_rejects_bad_weights(self):
        for bad in ([], [0.0], [-1.0], [float("nan")], [float("inf")]):
            with pytest.raises(InputError):
                core.problem(bad)

    def test_rejects_bad_radix_and_bounds(self):
        with pytest.raises(InputError):
            core.problem([1.0, 1.0], radix=1)
        with pytest.raises(InputError):
            core.problem([1.0, 1.0], l_min=3, l_max=2)


class TestPadding:
    def test_dummy_count_fixtures(self):
        assert core.dummy_count(7, 3) == 0
        assert core.dummy_count(6, 3) == 1
        assert core.dummy_count(5, 2) == 0  # binary never pads

    def test_pad_appends_zero_weights_after_real(self):
        spec = core.pad_dummies(core.problem([3.0, 2.0, 1.0], radix=4))
        assert spec.n_padded == 4
        assert spec.weights[3:] == (0.0,)
        assert spec.n_real == 3
        assert spec.n_padded % (spec.radix - 1) == 1 % (spec.radix - 1)

    def test_pad_extends_to_full_min_level(self):
        # 2 symbols with l_min=2 in binary: pad to 2**2 so the fixed-length
        # code is Kraft-tight
        spec = core.pad_dummies(core.problem([1.0, 1.0], l_min=2, l_max=3))
        assert spec.n_padded == 4

    def test_pad_is_idempotent(self):
        spec = core.pad_dummies(core.problem([1.0] * 6, radix=3))
        assert core.pad_dummies(spec) is spec


class TestKraft:
    def test_fixtures(self):
        assert core.kraft_sum([1, 2, 2, 2, 2, 2, 2], 3) == 1
        assert core.kraft_sum([2] * 7, 3) == Fraction(7, 9)
        assert core.kraft_sum([1, 1], 2) == 1

    def test_exactness_no_rounding(self):
        # a full tree at depth 40 sums to exactly 1, far beyond double precision
        assert core.kraft_sum([40] * (2**20), 2) == Fraction(2**20, 2**40)


class TestCost:
    WEIGHTS = (0.4, 0.3, 0.14, 0.06, 0.06, 0.02, 0.02)

    def _spec(self):
        return core.problem(
            list(self.WEIGHTS), radix=3, l_min=1, l_max=4,
            penalty=core.QuadraticPenalty(),
        )

    def test_quadratic_fixture_both_optima(self):
        spec = self._spec()
        assert core.penalty_cost(spec, [1, 2, 2, 2, 2, 2, 2]) == pytest.approx(0.6)
        assert core.penalty_cost(spec, [1, 1, 2, 2, 3, 3, 3]) == pytest.approx(0.6)

    def test_all_min_costs_phi_zero(self):
        spec = core.problem([2.0, 1.0], l_min=1, l_max=2)
        assert core.penalty_cost(spec, [1, 1]) == 0.0

    def test_out_of_bounds_length_rejected(self):
        spec = self._spec()
        with pytest.raises(InputError):
            core.penalty_cost(spec, [0, 2, 2, 2, 2, 2, 2])


class TestClassify:
    def test_trivial_min(self):
        spec = core.pad_dummies(core.problem([1.0] * 7, radix=3, l_min=2, l_max=5))
        assert core.classify_bounds(spec).kind == core.TRIVIAL_MIN

    def test_infeasible(self):
        spec = core.pad_dummies(core.problem([1.0] * 10, radix=2, l_min=0, l_max=3))
        assert core.classify_bounds(spec).kind == core.INFEASIBLE

    def test_nontrivial_clamps_effective_l_max(self):
        spec = core.pad_dummies(core.problem([1.0] * 7, radix=3, l_min=1, l_max=4))
        cls = core.classify_bounds(spec)
        assert cls.kind == core.NONTRIVIAL
        assert cls.effective_l_max == 3

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            core.check_capacity(2, 128)
        core.check_capacity(2, 127)
