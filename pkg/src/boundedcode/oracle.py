"""Exhaustive reference solvers used by the test suite.

Deliberately simple and independent of the production solvers: enumerate
every monotone length vector directly, with exact scaled-integer Kraft
accounting, and return all optima.
"""

from __future__ import annotations

from . import core
from .core import ProblemSpec
from .errors import InfeasibleError, InputError

MAX_ORACLE_SYMBOLS = 12


def enumerate_optima(
    spec: ProblemSpec,
    fringe_bound: int | None = None,
    kraft_slack: bool = False,
) -> tuple[float, list[tuple[int, ...]]]:
    """Minimum cost and all optimal padded length vectors.

    Vectors are nondecreasing over the padded sorted symbols, confined to
    `[l_min, effective l_max]`, with padded Kraft sum exactly 1 (or at most
    1 with `kraft_slack`).  `fringe_bound` restricts max-min over the real
    symbols only.
    """
    padded = core.pad_dummies(spec)
    cls = core.classify_bounds(padded)
    if cls.kind == core.INFEASIBLE:
        raise InfeasibleError("no code exists within the bounds")
    n = padded.n_padded
    if cls.kind == core.TRIVIAL_MIN:
        vec = (spec.l_min,) * n
        return core.penalty_cost(padded, vec), [vec]
    if n > MAX_ORACLE_SYMBOLS:
        raise InputError(f"oracle limited to {MAX_ORACLE_SYMBOLS} padded symbols")

    D = padded.radix
    L = cls.effective_l_max
    lo = padded.l_min
    target = D**L  # Kraft scaled by D**L
    w = padded.weights
    phi = padded.penalty.phi
    phis = [phi(d, lo, D) for d in range(L - lo + 1)]

    best: list[float] = [float("inf")]
    optima: list[tuple[int, ...]] = []
    cur = [0] * n
    n_real = padded.n_real

    def rec(i: int, min_len: int, used: int, cost: float):
        if i == n:
            if used == target or (kraft_slack and used <= target):
                if cost < best[0] - 1e-12 * max(1.0, abs(cost)):
                    best[0] = cost
                    optima.clear()
                    optima.append(tuple(cur))
                elif abs(cost - best[0]) <= 1e-12 * max(1.0, abs(cost)):
                    optima.append(tuple(cur))
            return
        remaining = n - i
        start = max(min_len, lo)
        if fringe_bound is not None and 0 < i < n_real:
            start = max(start, cur[0])  # monotone anyway; kept for clarity
        for l in range(start, L + 1):
            if fringe_bound is not None and i < n_real and i > 0:
                if l - cur[0] > fringe_bound:
                    break
            width = D ** (L - l)
            u = used + width
            # cheapest completion puts everything at depth L
            if u + (remaining - 1) > target:
                continue
            # widest completion keeps everything at depth l
            if not kraft_slack and u + (remaining - 1) * width < target:
                break
            cur[i] = l
            rec(i + 1, l, u, cost + (w[i] * phis[l - lo] if w[i] else 0.0))
        cur[i] = 0

    rec(0, lo, 0, 0.0)
    if not optima:
        raise InfeasibleError("enumeration found no feasible vector")
    return best[0], optima


def best_fringe_oracle(
    weights,
    radix: int,
    d: int,
    penalty: core.Penalty | None = None,
) -> tuple[float, list[tuple[int, ...]]]:
    """Fringe-bounded reference optimum under the absolute objective.

    Enumerates monotone vectors with Kraft sum at most 1 over lengths in
    `[1, hard bound]` (length 0 only for a single padded symbol), fringe of
    the real symbols at most `d`, minimizing sum of `w * phi(l, 0, radix)`.
    """
    if penalty is None:
        penalty = core.LinearPenalty()
    spec = core.problem(weights, radix=radix, l_min=0, l_max=None, penalty=penalty)
    padded = core.pad_dummies(spec)
    if padded.n_padded == 1:
        return penalty.phi(0, 0, radix) * padded.weights[0], [(0,)]
    lifted = core.problem(
        list(padded.weights[: padded.n_real]),
        radix=radix,
        l_min=1,
        l_max=core.hard_length_bound(padded.n_padded, radix),
        penalty=core.AbsolutePenalty(penalty),
    )
    return enumerate_optima(lifted, fringe_bound=d, kraft_slack=True)
