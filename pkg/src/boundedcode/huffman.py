"""Bottom-merge D-ary Huffman coding and the length-lower-bounded variant.

The two-queue method keeps singles and merged packages in separate FIFO
queues, popping singles first on weight ties; among optimal codes this
yields the minimum reverse-lexicographic (and minimum-height) one.
Truncation stops merging once radix**l_min roots remain, which are then
assigned all the length-l_min prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import core, solver
from .core import ProblemSpec
from .errors import InfeasibleError, InputError


def bottom_merge_huffman(weights: Sequence[float], radix: int) -> list[int]:
    """Optimal expected-length code for padded, nonincreasing weights."""
    return truncated_huffman(weights, radix, 0)


def truncated_huffman(weights: Sequence[float], radix: int, l_min: int) -> list[int]:
    """Merge until radix**l_min roots remain; roots get fixed length l_min.

    Minimizes the expected length subject to every codeword having at least
    l_min symbols.  Input must be padded (count = 1 mod radix-1) and sorted
    nonincreasing.
    """
    D = radix
    n = len(weights)
    if n % (D - 1) != 1 % (D - 1):
        raise InputError("weights must be padded before Huffman merging")
    target = D**l_min
    if target > n:
        raise InputError(
            f"radix**{l_min} exceeds the symbol count; the fixed-length code is optimal"
        )
    num_merges = (n - target) // (D - 1)
    total = n + num_merges
    weight = [0.0] * total
    parent = [-1] * total
    for i, w in enumerate(weights):
        weight[i] = float(w)
    singles = list(range(n - 1, -1, -1))  # ascending weight
    merged: list[int] = []
    si = mi = 0
    for m in range(num_merges):
        node = n + m
        s = 0.0
        for _ in range(D):
            # singles before merged on ties (bottom-merge rule)
            if si < len(singles) and (
                mi >= len(merged) or weight[singles[si]] <= weight[merged[mi]]
            ):
                child = singles[si]
                si += 1
            else:
                child = merged[mi]
                mi += 1
            parent[child] = node
            s += weight[child]
        weight[node] = s
        merged.append(node)
    depth = [0] * total
    for node in range(total - 1, -1, -1):
        if parent[node] == -1:
            depth[node] = l_min  # root of the truncated forest
        else:
            depth[node] = depth[parent[node]] + 1
    return depth[:n]


@dataclass(frozen=True)
class PrecheckResult:
    """Outcome of the lower-bounded Huffman pre-check against l_max."""

    accepted: bool
    lengths: tuple[int, ...] | None  # padded, sorted order; None when rejected
    max_length: int

    @property
    def must_hit_max(self) -> bool:
        return not self.accepted


def precheck_lmax(
    weights: Sequence[float], radix: int, l_min: int, l_max: int
) -> PrecheckResult:
    """Linear-penalty shortcut: if the lower-bounded Huffman code already
    fits under l_max it is optimal for the bounded problem; otherwise the
    bounded optimum provably has a codeword of length exactly l_max."""
    lengths = truncated_huffman(weights, radix, l_min)
    longest = max(lengths)
    if longest <= l_max:
        return PrecheckResult(True, tuple(lengths), longest)
    return PrecheckResult(False, None, longest)


def solve_huffman(spec: ProblemSpec) -> solver.SolveResult:
    """Solve via (truncated) bottom-merge Huffman coding alone.

    Only valid for the linear penalty; raises InfeasibleError if the
    unbounded-above optimum exceeds the requested l_max.
    """
    if not isinstance(spec.penalty, core.LinearPenalty):
        raise InputError("the Huffman solver handles the linear penalty only")
    padded, cls = solver.prepare(spec)
    if cls.kind == core.TRIVIAL_MIN:
        return solver.finish(padded, [spec.l_min] * padded.n_padded, "huffman")
    check = precheck_lmax(padded.weights, padded.radix, padded.l_min, cls.effective_l_max)
    if not check.accepted:
        raise InfeasibleError(
            f"Huffman code reaches length {check.max_length} > l_max; "
            "use a length-bounded solver"
        )
    return solver.finish(padded, list(check.lengths), "huffman")
