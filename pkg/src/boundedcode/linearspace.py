"""O(n)-space solver: attribute-only package-merge plus region recursion.

Instead of materializing node sets, one pass keeps four attributes per
package — weight, width, count of nodes at the middle level, width of nodes
below it.  The winning attributes split the selection into four disjoint
rectangles: B and Gamma (the lightest n_nu columns down to the middle
level, known outright) and A and Delta, recovered by recursive calls on
grids of half the height.  Output is bit-for-bit equal to the full solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels, core, solver
from .core import ProblemSpec
from .errors import InputError, NoSolutionError


@dataclass(frozen=True)
class PackageSummary:
    """The four retained attributes of a package.

    mu: total weight; rho: total width (exact); nu: node count at the middle
    level; psi: width of the nodes strictly below the middle level (exact).
    """

    mu: float
    rho: Fraction
    nu: int
    psi: Fraction

    def __post_init__(self):
        if self.psi > self.rho:
            raise InputError("psi cannot exceed the package width")
        if self.nu < 0:
            raise InputError("nu is a count and cannot be negative")


def merge_summaries(parts: Sequence[PackageSummary]) -> PackageSummary:
    """Package equal-width summaries into one; all four fields add."""
    if not parts:
        raise InputError("cannot merge zero summaries")
    rho = parts[0].rho
    for p in parts[1:]:
        if p.rho != rho:
            raise InputError("packaged summaries must have equal widths")
    return PackageSummary(
        mu=sum(p.mu for p in parts),
        rho=sum((p.rho for p in parts), Fraction(0)),
        nu=sum(p.nu for p in parts),
        psi=sum((p.psi for p in parts), Fraction(0)),
    )


def solve_linear_space(spec: ProblemSpec, stats: dict | None = None) -> solver.SolveResult:
    """Length-bounded optimum in O(n) working memory.

    `stats`, when given, receives `peak_live` (largest number of live items
    in any single attribute run) and `nodes_touched` (grid cells scanned
    per recursion depth).
    """
    padded, cls = solver.prepare(spec)
    if cls.kind == core.TRIVIAL_MIN:
        if stats is not None:
            stats.update(peak_live=0, nodes_touched=[])
        return solver.finish(padded, [spec.l_min] * padded.n_padded, "linear-space")

    n = padded.n_padded
    D = padded.radix
    L = cls.effective_l_max
    core.check_capacity(D, L)
    w = padded.weights
    rev_w = np.array(w[::-1], dtype=np.float64)  # ascending weight
    inc = np.array(core.weight_increments(padded, L), dtype=np.float64)
    counts = np.zeros(n, dtype=np.int64)
    peak_live = 0
    touched: list[int] = []

    def region(a: int, b: int, u: int, v: int, width: int, depth: int) -> None:
        # width is in integer units of D**-v
        nonlocal peak_live
        if width == 0:
            return
        m = b - a + 1
        nlev = v - u + 1
        if m <= 0 or nlev <= 0:
            raise NoSolutionError("nonzero width left for an empty region")
        if len(touched) <= depth:
            touched.append(0)
        touched[depth] += m * nlev
        t_mid = (u + v) // 2 - u
        unit = [D ** (nlev - 1 - t) for t in range(nlev)]
        digits = [(width // unit[t]) % D for t in range(nlev)]
        psi_units = [unit[t] if t > t_mid else 0 for t in range(nlev)]
        top = width // (unit[0] * D)
        rw = rev_w[n - 1 - b : n - a]
        dphi = inc[u - spec.l_min - 1 : v - spec.l_min]
        # the huge scaled width never enters the kernel (digits and top are
        # computed here); only psi values do, bounded by the lower half-grid
        psi_bound = 2 * (m + 1) * (unit[t_mid + 1] if t_mid + 1 < nlev else 0)
        exact_big = max(psi_bound, top) >= _kernels.JIT_WIDTH_LIMIT
        status, n_nu, psi, peak = _kernels.attribute_run(
            rw, dphi, digits, t_mid, top, D, psi_units, force_python=exact_big
        )
        if status:
            raise NoSolutionError("attribute run could not meet the width target")
        peak_live = max(peak_live, peak)
        psi = int(psi)
        n_nu = int(n_nu)
        # B and Gamma: the n_nu lightest columns take every level down to l_mid
        if n_nu:
            counts[b - n_nu + 1 : b + 1] += t_mid + 1
        bg_width = n_nu * sum(unit[: t_mid + 1])
        width_a = width - psi - bg_width
        if width_a < 0:
            raise NoSolutionError("region accounting went negative")
        if t_mid >= 1:
            scale = unit[t_mid - 1]  # convert units D**-v -> D**-(l_mid - 1)
            if width_a % scale:
                raise NoSolutionError("upper region width is not level-aligned")
            region(a, b - n_nu, u, u + t_mid - 1, width_a // scale, depth + 1)
        elif width_a:
            raise NoSolutionError("leftover width with no upper levels")
        if t_mid + 1 <= nlev - 1:
            region(b - n_nu + 1, b, u + t_mid + 1, v, psi, depth + 1)
        elif psi:
            raise NoSolutionError("leftover width with no lower levels")

    total = solver.scaled_total_width(n, D, padded.l_min, L)
    region(0, n - 1, padded.l_min + 1, L, total, 0)
    if stats is not None:
        stats.update(peak_live=peak_live, nodes_touched=touched)
    lengths = [padded.l_min + int(c) for c in counts]
    return solver.finish(padded, lengths, "linear-space")
