"""Problem normalization, penalty functions and feasibility logic.

Everything downstream works on a `ProblemSpec` whose weights are sorted
nonincreasing (the permutation back to the caller's order is retained) and
padded with zero-weight dummy symbols so that `n mod (radix-1) == 1`.  All
Kraft/width arithmetic is exact: widths are integers in units of
`radix**-L` for the effective maximum length `L`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CapacityError, InputError

# Exact width arithmetic is done in scaled 128-bit-bounded integers.
WIDTH_CAPACITY_BITS = 128


# ---------------------------------------------------------------------------
# Penalties
# ---------------------------------------------------------------------------

class Penalty:
    """Convex increasing cost of exceeding the minimum codeword length.

    `phi(delta, l_min, radix)` is the cost contribution factor for a codeword
    `delta` symbols longer than `l_min`.  The shifted forms (quadratic,
    exponential) take `l_min` into account so that the optimized objective is
    the natural absolute one (e.g. sum of `w * l**2`).
    """

    name = "penalty"

    def phi(self, delta: int, l_min: int, radix: int) -> float:
        raise NotImplementedError

    def increments(self, span: int, l_min: int, radix: int) -> list[float]:
        """[phi(d) - phi(d-1) for d in 1..span]; must be nonnegative, nondecreasing."""
        vals = [self.phi(d, l_min, radix) for d in range(span + 1)]
        return [b - a for a, b in zip(vals, vals[1:])]

    def validate(self, span: int, l_min: int, radix: int) -> None:
        try:
            inc = self.increments(span, l_min, radix)
        except (OverflowError, ValueError) as exc:
            raise InputError(f"penalty not evaluable on 0..{span}: {exc}") from exc
        if any(not math.isfinite(v) for v in inc):
            raise InputError("penalty overflows double precision on the used range")
        for i, v in enumerate(inc):
            if v < 0 or (i > 0 and v < inc[i - 1]):
                raise InputError(
                    f"penalty is not convex increasing at delta={i + 1}"
                )


@dataclass(frozen=True)
class LinearPenalty(Penalty):
    """phi(delta) = delta: minimizes expected codeword length."""

    name = "linear"

    def phi(self, delta: int, l_min: int, radix: int) -> float:
        return float(delta)


@dataclass(frozen=True)
class QuadraticPenalty(Penalty):
    """phi(delta) = (delta + offset)**2.

    The default (offset 0) penalizes the square of the excess over the
    minimum length; pass `offset=l_min` to penalize squared absolute length
    instead (the communications-delay flavor).
    """

    offset: int = 0
    name = "quadratic"

    def phi(self, delta: int, l_min: int, radix: int) -> float:
        return float((delta + self.offset) ** 2)


@dataclass(frozen=True)
class AbsolutePenalty(Penalty):
    """Evaluate another penalty at absolute length `delta + l_min`.

    Used by the fringe sweep so costs from windows with different lower
    bounds are directly comparable.
    """

    inner: Penalty
    name = "absolute"

    def phi(self, delta: int, l_min: int, radix: int) -> float:
        return self.inner.phi(delta + l_min, 0, radix)


@dataclass(frozen=True)
class ExponentialPenalty(Penalty):
    """phi(delta) = radix**(rate * (delta + l_min)); rate > 0.

    Large rates overflow doubles; callers must scale their instances.
    """

    rate: float = 1.0
    name = "exponential"

    def __post_init__(self):
        if not (self.rate > 0):
            raise InputError("exponential penalty requires rate > 0")

    def phi(self, delta: int, l_min: int, radix: int) -> float:
        return float(radix) ** (self.rate * (delta + l_min))


@dataclass(frozen=True)
class CustomPenalty(Penalty):
    """Caller-supplied convex increasing function of delta = l - l_min."""

    fn: Callable[[int], float]
    name = "custom"

    def phi(self, delta: int, l_min: int, radix: int) -> float:
        return float(self.fn(delta))


# ---------------------------------------------------------------------------
# Problem spec
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProblemSpec:
    """A validated, internally sorted coding instance.

    `weights` are nonincreasing; positions `n_real..` are zero-weight dummies
    added by `pad_dummies`.  `order[k]` is the caller's index of the symbol
    stored at sorted position `k`.
    """

    weights: tuple[float, ...]
    radix: int
    l_min: int
    l_max: int
    penalty: Penalty
    n_real: int
    order: tuple[int, ...]

    @property
    def n_padded(self) -> int:
        return len(self.weights)

    def total_weight(self) -> float:
        return float(sum(self.weights))


def hard_length_bound(n: int, radix: int) -> int:
    """Largest codeword length any optimal bounded code ever needs."""
    return max(1, math.ceil((n - 1) / (radix - 1)))


def problem(
    weights: Sequence[float],
    radix: int = 2,
    l_min: int = 0,
    l_max: int | None = None,
    penalty: Penalty | None = None,
) -> ProblemSpec:
    """Validate and normalize an instance (sort weights, keep the permutation)."""
    if penalty is None:
        penalty = LinearPenalty()
    if radix < 2:
        raise InputError(f"radix must be >= 2, got {radix}")
    n = len(weights)
    if n == 0:
        raise InputError("need at least one symbol weight")
    ws = [float(w) for w in weights]
    for w in ws:
        if not (w > 0) or not math.isfinite(w):
            raise InputError(f"weights must be positive finite reals, got {w}")
    if l_max is None:
        l_max = hard_length_bound(n, radix)
    if not (0 <= l_min <= l_max):
        raise InputError(f"need 0 <= l_min <= l_max, got [{l_min}, {l_max}]")
    # stable sort, nonincreasing; ties keep the caller's order
    order = sorted(range(n), key=lambda i: -ws[i])
    penalty.validate(l_max - l_min, l_min, radix)
    return ProblemSpec(
        weights=tuple(ws[i] for i in order),
        radix=radix,
        l_min=l_min,
        l_max=l_max,
        penalty=penalty,
        n_real=n,
        order=tuple(order),
    )


def dummy_count(n: int, radix: int) -> int:
    """Number of zero-weight fillers needed so a full radix-ary tree exists."""
    return (radix - n) % (radix - 1)


def pad_dummies(spec: ProblemSpec) -> ProblemSpec:
    """Append zero-weight dummy symbols after all real ones.

    The padded count satisfies `n mod (radix-1) == 1`, so optimal codes over
    the padded alphabet meet the Kraft inequality with equality.  When even
    radix**l_min codewords of the minimum length would not all be used, the
    padding extends to radix**l_min symbols (same congruence class) so the
    fixed-length code is Kraft-tight too.
    """
    if spec.n_padded != spec.n_real:  # already padded
        return spec
    k = dummy_count(spec.n_real, spec.radix)
    full_min = spec.radix**spec.l_min
    if full_min > spec.n_real + k:
        k = full_min - spec.n_real
    if k == 0:
        return spec
    return ProblemSpec(
        weights=spec.weights + (0.0,) * k,
        radix=spec.radix,
        l_min=spec.l_min,
        l_max=spec.l_max,
        penalty=spec.penalty,
        n_real=spec.n_real,
        order=spec.order,
    )


# ---------------------------------------------------------------------------
# Kraft sums and cost
# ---------------------------------------------------------------------------

def kraft_sum(lengths: Sequence[int], radix: int) -> Fraction:
    """Exact sum of radix**-l over the given lengths."""
    total = Fraction(0)
    for l in lengths:
        if l < 0:
            raise InputError(f"negative codeword length {l}")
        total += Fraction(1, radix**l)
    return total


def penalty_cost(spec: ProblemSpec, lengths: Sequence[int]) -> float:
    """Sum of w_i * phi(l_i - l_min) in the spec's sorted symbol order."""
    phi = spec.penalty.phi
    total = 0.0
    for w, l in zip(spec.weights, lengths):
        if not (spec.l_min <= l <= spec.l_max):
            raise InputError(f"length {l} outside [{spec.l_min}, {spec.l_max}]")
        if w:
            total += w * phi(l - spec.l_min, spec.l_min, spec.radix)
    return total


def weight_increments(spec: ProblemSpec, effective_l_max: int) -> list[float]:
    """phi increment per level, indexed by level l_min+1 .. effective_l_max."""
    return spec.penalty.increments(
        effective_l_max - spec.l_min, spec.l_min, spec.radix
    )


# ---------------------------------------------------------------------------
# Feasibility classification
# ---------------------------------------------------------------------------

TRIVIAL_MIN = "trivial-min"
INFEASIBLE = "infeasible"
NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class Classification:
    kind: str
    effective_l_max: int = 0


def classify_bounds(spec: ProblemSpec) -> Classification:
    """Sort an instance into fixed-length/unsolvable/interesting.

    Expects a padded spec.  For nontrivial instances, the effective maximum
    length is clamped to the hard bound, which never removes an optimum.
    """
    n = spec.n_padded
    D = spec.radix
    if D**spec.l_min >= n:
        return Classification(TRIVIAL_MIN, spec.l_min)
    if D**spec.l_max < n:
        return Classification(INFEASIBLE)
    eff = min(spec.l_max, hard_length_bound(n, D))
    return Classification(NONTRIVIAL, eff)


def check_capacity(radix: int, effective_l_max: int) -> None:
    """Exact widths live in units radix**-L; reject once 128 bits is not enough."""
    if radix**effective_l_max >= 1 << WIDTH_CAPACITY_BITS:
        raise CapacityError(
            f"radix**{effective_l_max} exceeds {WIDTH_CAPACITY_BITS}-bit exact width arithmetic"
        )
