"""Fast linear-penalty solver via a minimum k-link path.

For the linear penalty, a bounded code that must reach l_max is determined
by the number of internal tree vertices on each of the k = l_max - l_min
deepest levels.  Encoding those counts as a strictly increasing sequence
alpha_0 = 0 < ... < alpha_k = (n - D**l_min)/(D-1), the cost becomes the
weight of a k-link path whose edge weights are cumulative tail sums of the
symbol weights.  The weights satisfy the concave quadrangle inequality, so
each dynamic-programming layer is solved by divide and conquer on row
minima.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, core, huffman, solver
from .core import ProblemSpec
from .errors import InputError, NoSolutionError


@dataclass(frozen=True)
class CumulativeTail:
    """s[i] = total weight of the i lightest symbols; s[0] = 0."""

    s: np.ndarray
    n: int

    @classmethod
    def from_weights(cls, weights) -> "CumulativeTail":
        """Weights sorted nonincreasing; dummies included."""
        asc = np.array(weights[::-1], dtype=np.float64)
        s = np.concatenate(([0.0], np.cumsum(asc)))
        return cls(s=s, n=len(asc))


@dataclass(frozen=True)
class AlphaPath:
    """Internal-vertex counts, cumulative from the deepest level up."""

    alphas: tuple[int, ...]
    cost: float

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.alphas, self.alphas[1:])):
            raise InputError("alpha sequence must be strictly increasing")


def edge_weight(a_prev: int, a_next: int, tails: CumulativeTail, radix: int) -> float:
    """Weight added by moving the internal count from a_prev to a_next.

    Infinite when the counts are incompatible (more leaves demanded than
    symbols exist, or a non-positive step after clamping at zero).
    """
    idx = radix * max(a_next, 0) - max(a_prev, 0)
    if idx < 0 or idx > tails.n:
        return math.inf
    return float(tails.s[idx])


def min_k_link_path(
    tails: CumulativeTail, radix: int, l_min: int, k: int
) -> AlphaPath:
    """Minimum-weight path 0 -> (n - radix**l_min)/(radix-1) with exactly k links."""
    n = tails.n
    num = n - radix**l_min
    if num < 0 or num % (radix - 1):
        raise InputError("tails must cover a padded symbol count with radix**l_min <= n")
    N = num // (radix - 1)
    if k < 1 or k > N:
        raise NoSolutionError(f"no strictly increasing {k}-link path to {N}")
    cost, alpha = _kernels.klink_path(tails.s, radix, n, N, k)
    if alpha is None:
        raise NoSolutionError("all candidate paths hit an incompatible edge")
    return AlphaPath(alphas=tuple(int(a) for a in alpha), cost=cost)


def alpha_to_lengths(path: AlphaPath, radix: int, l_min: int, l_max: int) -> list[int]:
    """Sorted (nondecreasing) lengths of the code encoded by an alpha path.

    alpha_i - alpha_{i-1} is the internal-vertex count at level l_max - i;
    every level above l_min is fully internal.  Leaves at level l number
    radix * internal(l-1) - internal(l); heavier symbols take shorter
    lengths.
    """
    D = radix
    k = l_max - l_min
    if len(path.alphas) != k + 1:
        raise InputError(f"path has {len(path.alphas) - 1} links, need {k}")

    def internal(l: int) -> int:
        if l >= l_max:
            return 0
        return path.alphas[l_max - l] - path.alphas[l_max - l - 1]

    lengths: list[int] = []
    for l in range(l_min, l_max + 1):
        # above l_min every vertex is internal: D * internal(l_min - 1) = D**l_min
        parents = D * internal(l - 1) if l > l_min else D**l_min
        leaves = parents - internal(l)
        if leaves < 0:
            raise NoSolutionError(f"negative leaf count at level {l}")
        lengths.extend([l] * leaves)
    return lengths


def solve_linear_fast(spec: ProblemSpec) -> solver.SolveResult:
    """Linear-penalty bounded optimum: Huffman pre-check, then k-link path."""
    if not isinstance(spec.penalty, core.LinearPenalty):
        raise InputError("the k-link-path solver handles the linear penalty only")
    padded, cls = solver.prepare(spec)
    if cls.kind == core.TRIVIAL_MIN:
        return solver.finish(padded, [spec.l_min] * padded.n_padded, "monge")
    check = huffman.precheck_lmax(
        padded.weights, padded.radix, padded.l_min, cls.effective_l_max
    )
    if check.accepted:
        # the lower-bounded Huffman code already fits under l_max
        return solver.finish(padded, list(check.lengths), "monge")
    L = cls.effective_l_max
    k = L - padded.l_min
    tails = CumulativeTail.from_weights(padded.weights)
    path = min_k_link_path(tails, padded.radix, padded.l_min, k)
    lengths = alpha_to_lengths(path, padded.radix, padded.l_min, L)
    if len(lengths) != padded.n_padded:
        raise NoSolutionError("alpha path does not describe a full code")
    return solver.finish(padded, lengths, "monge")
