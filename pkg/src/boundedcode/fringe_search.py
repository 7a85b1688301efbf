"""Fringe-limited coding: best code whose length spread is at most d.

Every monotone Kraft-feasible vector with max-min spread at most d lives in
some window [l' - d, l'] with l' between ceil(log_D n) and
floor(log_D n) + d, so sweeping the bounded solver over those windows and
keeping the cheapest result is exact.  Costs are compared on the absolute
objective (penalty evaluated at the full length) since windows differ in
their lower bounds.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from . import core, monge, solver
from .errors import InfeasibleError, InputError


def fringe(lengths: Sequence[int]) -> int:
    """Spread of a length vector: max - min."""
    if not lengths:
        raise InputError("fringe of an empty length vector is undefined")
    return max(lengths) - min(lengths)


def _int_log_bounds(n: int, radix: int) -> tuple[int, int]:
    """(smallest l with radix**l >= n, largest l with radix**l <= n)."""
    ceil_l = 0
    while radix**ceil_l < n:
        ceil_l += 1
    floor_l = ceil_l if radix**ceil_l == n else ceil_l - 1
    return ceil_l, floor_l


def best_fringe_limited(
    weights: Sequence[float],
    radix: int = 2,
    d: int = 0,
    penalty: core.Penalty | None = None,
) -> solver.SolveResult:
    """Minimum absolute-cost code with fringe at most d.

    Sweeps every candidate maximum length l', solving the length-bounded
    problem on [max(l'-d, 0), l']; ties across windows resolve to the
    smallest l'.  The result's cost is the absolute objective
    sum of w * phi(l) (phi taken at the full length).
    """
    if d < 0:
        raise InputError(f"fringe bound must be nonnegative, got {d}")
    if penalty is None:
        penalty = core.LinearPenalty()
    probe = core.problem(weights, radix=radix, l_min=0, l_max=None,
                         penalty=core.LinearPenalty())
    n_p = core.pad_dummies(probe).n_padded
    ceil_l, floor_l = _int_log_bounds(n_p, radix)
    # floor + d can undershoot ceil when n is not a radix power and d is
    # small; the fixed-length window must always be swept
    hi = max(floor_l + d, ceil_l)
    best: solver.SolveResult | None = None
    for l_hi in range(ceil_l, hi + 1):
        l_lo = max(l_hi - d, 0)
        abs_spec = core.problem(weights, radix=radix, l_min=l_lo, l_max=l_hi,
                                penalty=core.AbsolutePenalty(penalty))
        try:
            if isinstance(penalty, core.LinearPenalty):
                lin = core.problem(weights, radix=radix, l_min=l_lo, l_max=l_hi)
                res = monge.solve_linear_fast(lin)
                res = solver.finish(
                    core.pad_dummies(abs_spec), list(res.padded_lengths), "fringe"
                )
            else:
                res = solver.solve(abs_spec)
                res = dataclasses.replace(res, solver="fringe")
        except InfeasibleError:
            continue
        if best is None or res.cost < best.cost:
            best = res
    if best is None:
        raise InfeasibleError(f"no code with fringe <= {d} exists")
    return best
