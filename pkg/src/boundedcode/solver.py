"""Reduction of length-bounded coding to coin selection, plus codebooks.

The node grid has one cell per (symbol, level) with width radix**-level and
weight `w_i * (phi(level - l_min) - phi(level - l_min - 1))`.  Selecting a
minimum-weight node subset of the right total width yields the optimal
length vector; levels are generated lazily so only one width class is ever
alive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import coins, core
from .core import Classification, ProblemSpec
from .errors import InfeasibleError, InputError, NoSolutionError


def total_width(spec: ProblemSpec) -> Fraction:
    """Exact target width of the node-selection problem for a padded spec."""
    n = spec.n_padded
    D = spec.radix
    num = n - D**spec.l_min
    if num % (D - 1):
        raise InputError("spec must be padded before reduction")
    return Fraction(num // (D - 1), D**spec.l_min)


def scaled_total_width(n_padded: int, radix: int, l_min: int, l_max: int) -> int:
    """Same target width in integer units of radix**-l_max."""
    return (n_padded - radix**l_min) // (radix - 1) * radix ** (l_max - l_min)


def solve_padded(spec: ProblemSpec, effective_l_max: int) -> list[int]:
    """Optimal sorted lengths for a padded nontrivial spec (full sweep)."""
    n = spec.n_padded
    D = spec.radix
    L = effective_l_max
    core.check_capacity(D, L)
    dphi = core.weight_increments(spec, L)  # index t -> level l_min+1+t
    w = spec.weights
    scaled = scaled_total_width(n, D, spec.l_min, L)

    def levels():
        for l in range(L, spec.l_min, -1):
            d = dphi[l - spec.l_min - 1]
            # ascending weight = descending symbol index; payload = column
            yield l, [(w[i] * d, i) for i in range(n - 1, -1, -1)]

    chosen = coins.sweep(levels(), scaled, L, spec.l_min + 1, D)
    counts = [0] * n
    flat: list = []
    for payload in chosen:
        coins._flatten(payload, flat)
    for i in flat:
        counts[i] += 1
    return [spec.l_min + c for c in counts]


# ---------------------------------------------------------------------------
# Result plumbing shared by all solvers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Codebook:
    """Canonical codewords per original symbol."""

    radix: int
    lengths: tuple[int, ...]       # original symbol order
    codewords: tuple[str, ...]     # digit strings, most significant first
    cost: float
    kraft: Fraction


@dataclass(frozen=True)
class SolveResult:
    """Lengths plus bookkeeping; `lengths` is in the caller's symbol order."""

    lengths: tuple[int, ...]
    sorted_lengths: tuple[int, ...]   # real symbols, sorted-weight order
    padded_lengths: tuple[int, ...]   # includes dummies, sorted-weight order
    cost: float
    radix: int
    solver: str

    @property
    def kraft(self) -> Fraction:
        return core.kraft_sum(self.lengths, self.radix)

    @property
    def fringe(self) -> int:
        return max(self.lengths) - min(self.lengths)

    def codebook(self) -> Codebook:
        codes = lengths_to_codewords(self.sorted_lengths, self.radix)
        n = len(self.lengths)
        assert len(self._order) == n
        by_orig = [""] * n
        for k, orig in enumerate(self._order):
            by_orig[orig] = codes[k]
        return Codebook(
            radix=self.radix,
            lengths=self.lengths,
            codewords=tuple(by_orig),
            cost=self.cost,
            kraft=self.kraft,
        )

    _order: tuple[int, ...] = ()


def finish(spec: ProblemSpec, padded_lengths: Sequence[int], solver: str) -> SolveResult:
    """Strip dummies, restore caller order, attach cost."""
    sorted_lengths = tuple(padded_lengths[: spec.n_real])
    lengths = [0] * spec.n_real
    for k, orig in enumerate(spec.order):
        lengths[orig] = sorted_lengths[k]
    cost = core.penalty_cost(spec, padded_lengths)
    return SolveResult(
        lengths=tuple(lengths),
        sorted_lengths=sorted_lengths,
        padded_lengths=tuple(padded_lengths),
        cost=cost,
        radix=spec.radix,
        solver=solver,
        _order=spec.order,
    )


def prepare(spec: ProblemSpec) -> tuple[ProblemSpec, Classification]:
    padded = core.pad_dummies(spec)
    cls = core.classify_bounds(padded)
    if cls.kind == core.INFEASIBLE:
        raise InfeasibleError(
            f"{padded.n_padded} symbols cannot fit in {spec.radix}**{spec.l_max} codewords"
        )
    return padded, cls


def solve(spec: ProblemSpec) -> SolveResult:
    """Length-bounded optimum via the full width-ascending node sweep."""
    padded, cls = prepare(spec)
    if cls.kind == core.TRIVIAL_MIN:
        lengths = [spec.l_min] * padded.n_padded
    else:
        lengths = solve_padded(padded, cls.effective_l_max)
    return finish(padded, lengths, "package-merge")


# ---------------------------------------------------------------------------
# Canonical codebooks
# ---------------------------------------------------------------------------

def lengths_to_codewords(lengths: Sequence[int], radix: int) -> list[str]:
    """Canonical codeword per length; lengths must be sorted nondecreasing."""
    if any(b < a for a, b in zip(lengths, lengths[1:])):
        raise InputError("lengths must be sorted nondecreasing")
    if core.kraft_sum(lengths, radix) > 1:
        raise InputError("lengths violate the Kraft inequality")
    digits = "0123456789abcdefghijklmnopqrstuvwxyz"
    if radix > len(digits):
        digits = None  # fall back to dot-separated decimal digits
    codes = []
    value = 0
    prev = None
    for l in lengths:
        if prev is not None:
            value = (value + 1) * radix ** (l - prev)
        codes.append(_render(value, l, radix, digits))
        prev = l
    return codes


def _render(value: int, length: int, radix: int, digits) -> str:
    out = []
    v = value
    for _ in range(length):
        out.append(v % radix)
        v //= radix
    out.reverse()
    if digits is not None:
        return "".join(digits[d] for d in out)
    return ".".join(str(d) for d in out)


def lengths_to_codebook(lengths: Sequence[int], radix: int) -> Codebook:
    """Canonical codebook for already-sorted lengths (identity symbol order)."""
    codes = lengths_to_codewords(lengths, radix)
    return Codebook(
        radix=radix,
        lengths=tuple(lengths),
        codewords=tuple(codes),
        cost=math.nan,
        kraft=core.kraft_sum(lengths, radix),
    )
