"""The D-ary coin collector subproblem.

Choose a subset of coins whose widths (integer powers of ``1/D``) sum to an
exact target, minimizing total weight.  Solved by a width-ascending sweep:
at each width class, the base-D digit of the remaining target is satisfied
by the lightest available items, then the leftovers are packaged D at a
time into the next width class.  Ties are broken deterministically:
lighter first, then unmerged (atomic) before merged, then group position.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .errors import InputError, NoSolutionError

_ATOM = 0
_PACKAGE = 1


@dataclass(frozen=True)
class Coin:
    """An atomic item: width radix**-width_exp, a weight, and its identity."""

    width_exp: int
    weight: float
    payload: tuple[Hashable, ...]

    def __post_init__(self):
        if self.weight < 0:
            raise InputError("coin weights must be nonnegative")


@dataclass
class CoinProblem:
    """Coins grouped by width exponent plus the exact target width."""

    groups: dict[int, list[Coin]] = field(default_factory=dict)
    total_width: Fraction = Fraction(0)
    radix: int = 2

    @property
    def num_coins(self) -> int:
        return sum(len(g) for g in self.groups.values())


def coin_problem(coins: Iterable[Coin], total_width, radix: int = 2) -> CoinProblem:
    """Group and sort coins; ties keep the caller's coin order."""
    groups: dict[int, list[Coin]] = {}
    for c in coins:
        groups.setdefault(c.width_exp, []).append(c)
    for g in groups.values():
        g.sort(key=lambda c: c.weight)  # stable: equal weights keep input order
    return CoinProblem(groups=groups, total_width=Fraction(total_width), radix=radix)


def _digits_of(total: Fraction, radix: int, e_max: int) -> int:
    """Target width in integer units of radix**-e_max, or raise NoSolution."""
    scaled = total * Fraction(radix) ** e_max
    if scaled.denominator != 1:
        raise NoSolutionError(
            "target width needs finer coins than any available width"
        )
    return scaled.numerator


def sweep(
    level_items: Iterator[tuple[int, list[tuple[float, Any]]]],
    scaled_total: int,
    e_max: int,
    e_min: int,
    radix: int,
):
    """Run the width-ascending selection over levels e_max down to e_min.

    `level_items` yields `(e, items)` with `items` sorted ascending by
    weight; each item is `(weight, payload)`.  `scaled_total` is the target
    width in units radix**-e_max.  Returns the selected payloads.
    """
    D = radix
    selected: list[Any] = []
    carried: list[tuple[float, Any]] = []  # packages, creation (weight) order
    for e, atoms in level_items:
        digit = (scaled_total // D ** (e_max - e)) % D
        merged = _merge(atoms, carried)
        if len(merged) < digit:
            raise NoSolutionError(f"not enough items of width exponent {e}")
        for w, payload in merged[:digit]:
            selected.append(payload)
        rest = merged[digit:]
        carried = []
        for j in range(0, len(rest) - D + 1, D):
            chunk = rest[j : j + D]
            wsum = 0.0
            payloads = []
            for w, payload in chunk:
                wsum += w
                payloads.append(payload)
            carried.append((wsum, payloads))
    top = scaled_total // D ** (e_max - e_min + 1)
    if len(carried) < top:
        raise NoSolutionError("not enough packaged width to reach the target")
    for w, payload in carried[:top]:
        selected.append(payload)
    return selected


def _merge(atoms, packages):
    """Two-queue merge; on weight ties atoms come first."""
    out = []
    i = j = 0
    na, np_ = len(atoms), len(packages)
    while i < na and j < np_:
        if atoms[i][0] <= packages[j][0]:
            out.append(atoms[i])
            i += 1
        else:
            out.append(packages[j])
            j += 1
    out.extend(atoms[i:])
    out.extend(packages[j:])
    return out


def _flatten(payload, out: list):
    if isinstance(payload, list):  # package: list of constituent payloads
        for p in payload:
            _flatten(p, out)
    elif isinstance(payload, tuple):  # atomic coin: tuple of identifiers
        out.extend(payload)
    else:  # atomic coin: bare identifier
        out.append(payload)


def package_merge(problem: CoinProblem) -> set:
    """Solve the coin collector problem; returns the union of atomic payloads."""
    if problem.total_width < 0:
        raise InputError("target width must be nonnegative")
    if problem.total_width == 0:
        return set()
    if not problem.groups:
        raise NoSolutionError("no coins but nonzero target width")
    D = problem.radix
    e_max = max(problem.groups)
    e_min = min(problem.groups)
    scaled = _digits_of(problem.total_width, D, e_max)

    def levels():
        for e in range(e_max, e_min - 1, -1):
            atoms = [(c.weight, c.payload) for c in problem.groups.get(e, [])]
            yield e, atoms

    chosen = sweep(levels(), scaled, e_max, e_min, D)
    flat: list = []
    for payload in chosen:
        _flatten(payload, flat)
    return set(flat)


def verify_selection(problem: CoinProblem, selection: Iterable[Hashable]) -> bool:
    """True iff the chosen atomic identifiers sum exactly to the target width."""
    wanted = set(selection)
    width = Fraction(0)
    seen = set()
    for g in problem.groups.values():
        for c in g:
            for ident in c.payload:
                if ident in wanted:
                    width += Fraction(problem.radix) ** -c.width_exp
                    seen.add(ident)
    if seen != wanted:
        return False
    return width == problem.total_width
