"""Tests for the fringe-limited sweep."""

import random

import pytest

from boundedcode import core, oracle
from boundedcode.errors import InputError
from boundedcode.fringe_search import best_fringe_limited, fringe


class TestFringeMeasure:
    def test_fixtures(self):
        assert fringe((1, 2, 2, 2, 2, 2, 2)) == 1
        assert fringe((3, 3, 3)) == 0
        assert fringe((1, 2, 3, 3)) == 2

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            fringe(())


class TestBestFringeLimited:
    def test_unit7_d0(self):
        res = best_fringe_limited([1.0] * 7, radix=3, d=0)
        assert res.sorted_lengths == (2,) * 7
        assert res.cost == 14.0

    def test_unit7_d1(self):
        res = best_fringe_limited([1.0] * 7, radix=3, d=1)
        assert res.sorted_lengths == (1, 2, 2, 2, 2, 2, 2)
        assert res.cost == 13.0

    def test_result_respects_bound(self):
        rng = random.Random(14)
        for _ in range(100):
            n = rng.randint(1, 12)
            radix = rng.choice([2, 3])
            d = rng.choice([0, 1, 2])
            weights = [rng.random() + 0.01 for _ in range(n)]
            res = best_fringe_limited(weights, radix=radix, d=d)
            assert fringe(res.sorted_lengths) <= d

    def test_matches_oracle(self):
        rng = random.Random(15)
        checked = 0
        for _ in range(150):
            n = rng.randint(1, 8)
            radix = rng.choice([2, 3])
            d = rng.choice([0, 1, 2])
            penalty = rng.choice([core.LinearPenalty(), core.QuadraticPenalty()])
            weights = [rng.random() + 0.01 for _ in range(n)]
            try:
                best, _ = oracle.best_fringe_oracle(weights, radix, d, penalty)
            except InputError:
                continue
            res = best_fringe_limited(weights, radix=radix, d=d, penalty=penalty)
            assert res.cost == pytest.approx(best, rel=1e-9, abs=1e-12)
            checked += 1
        assert checked > 100

    def test_cost_nonincreasing_in_d(self):
        rng = random.Random(16)
        for _ in range(30):
            n = rng.randint(2, 10)
            radix = rng.choice([2, 3])
            weights = [rng.random() + 0.01 for _ in range(n)]
            costs = [
                best_fringe_limited(weights, radix=radix, d=d).cost
                for d in range(4)
            ]
            for a, b in zip(costs, costs[1:]):
                assert b <= a + 1e-12

    def test_huffman_cost_reached_when_fringe_allows(self):
        # quadratic-free check: with linear penalty and a generous d the
        # sweep reaches the unconstrained Huffman optimum
        from boundedcode import huffman

        weights = [0.4, 0.3, 0.14, 0.06, 0.06, 0.02, 0.02]
        padded = core.pad_dummies(core.problem(weights, radix=3))
        h_lengths = huffman.bottom_merge_huffman(padded.weights, 3)
        h_cost = sum(w * l for w, l in zip(padded.weights, h_lengths))
        d = fringe(h_lengths[: padded.n_real])
        res = best_fringe_limited(weights, radix=3, d=d)
        assert res.cost == pytest.approx(h_cost, rel=1e-12)

    def test_negative_d_rejected(self):
        with pytest.raises(InputError):
            best_fringe_limited([1.0, 1.0], radix=2, d=-1)

    def test_tie_prefers_smaller_max_length(self):
        # two dyadic symbols: every window costs the same at d>=1 only if
        # weights force it; with equal weights the [1,1] window wins over
        # deeper ones and is listed first
        res = best_fringe_limited([1.0, 1.0], radix=2, d=2)
        assert res.sorted_lengths == (1, 1)
