"""Hot inner loops, compiled with numba when available.

Each kernel exists once as a plain-Python function; the jit build is the
same function passed through `numba.njit`.  Selection order:

* `BOUNDEDCODE_NO_JIT=1` in the environment forces the Python path.
* Instances whose exact scaled widths do not fit in signed 64-bit integers
  always take the Python path with unbounded ints.

Both paths execute identical arithmetic in identical order, so results are
bit-for-bit equal.
"""

from __future__ import annotations

import math
import os

import numpy as np

_ENV_FLAG = "BOUNDEDCODE_NO_JIT"

# Scaled widths must stay clear of int64 limits on the jit path.
JIT_WIDTH_LIMIT = 1 << 62


def jit_enabled() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip() not in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# Four-attribute package-merge run
# ---------------------------------------------------------------------------

def _attribute_run_impl(
    rw, dphi, digits, t_mid, top, D, psi_units,
    pmu, pnu, ppsi, qmu, qnu, qpsi,
):
    """One package-merge pass keeping (weight, mid-level count, deep width).

    `rw` holds the region's weights ascending (reverse symbol order); level
    index t runs over the region's levels, deepest last.  Returns
    (status, selected nu, selected psi, peak live item count); status != 0
    means the width target cannot be met.
    """
    m = len(rw)
    nlev = len(dphi)
    npk = 0
    sel_nu = 0
    sel_psi = 0
    peak = 0
    for t in range(nlev - 1, -1, -1):
        dp = dphi[t]
        d = digits[t]
        anu = 1 if t == t_mid else 0
        apsi = psi_units[t]
        i = 0
        j = 0
        if m + npk > peak:
            peak = m + npk
        if m + npk < d:
            return 1, 0, 0, peak
        cnt = 0
        while cnt < d:
            if i < m and (j >= npk or rw[i] * dp <= pmu[j]):
                sel_nu += anu
                sel_psi += apsi
                i += 1
            else:
                sel_nu += pnu[j]
                sel_psi += ppsi[j]
                j += 1
            cnt += 1
        nq = 0
        fill = 0
        amu = 0.0
        acc_nu = 0
        acc_psi = apsi - apsi  # 0 of the right type (int or big int)
        while True:
            if i < m and (j >= npk or rw[i] * dp <= pmu[j]):
                wmu = rw[i] * dp
                wnu = anu
                wpsi = apsi
                i += 1
            elif j < npk:
                wmu = pmu[j]
                wnu = pnu[j]
                wpsi = ppsi[j]
                j += 1
            else:
                break
            amu += wmu
            acc_nu += wnu
            acc_psi += wpsi
            fill += 1
            if fill == D:
                qmu[nq] = amu
                qnu[nq] = acc_nu
                qpsi[nq] = acc_psi
                nq += 1
                fill = 0
                amu = 0.0
                acc_nu = 0
                acc_psi = acc_psi - acc_psi
        pmu, qmu = qmu, pmu
        pnu, qnu = qnu, pnu
        ppsi, qpsi = qpsi, ppsi
        npk = nq
    if npk < top:
        return 1, 0, 0, peak
    for j in range(top):
        sel_nu += pnu[j]
        sel_psi += ppsi[j]
    return 0, sel_nu, sel_psi, peak


_attribute_run_jit = None


def _get_attribute_run_jit():
    global _attribute_run_jit
    if _attribute_run_jit is None:
        from numba import njit

        _attribute_run_jit = njit(cache=True)(_attribute_run_impl)
    return _attribute_run_jit


def attribute_run(rw, dphi, digits, t_mid, top, radix, psi_units, force_python=False):
    """Dispatch an attribute run; `rw` ascending float weights.

    When any scaled width can exceed int64, pass Python-int `digits` and
    `psi_units` plus `force_python=True`.
    """
    m = len(rw)
    cap = m + 2
    if force_python or not jit_enabled():
        pmu = [0.0] * cap
        pnu = [0] * cap
        ppsi = [0] * cap
        qmu = [0.0] * cap
        qnu = [0] * cap
        qpsi = [0] * cap
        rw_l = [float(x) for x in rw]
        dphi_l = [float(x) for x in dphi]
        return _attribute_run_impl(
            rw_l, dphi_l, list(digits), t_mid, top, radix, list(psi_units),
            pmu, pnu, ppsi, qmu, qnu, qpsi,
        )
    fn = _get_attribute_run_jit()
    return fn(
        np.ascontiguousarray(rw, dtype=np.float64),
        np.ascontiguousarray(dphi, dtype=np.float64),
        np.ascontiguousarray(digits, dtype=np.int64),
        t_mid,
        top,
        radix,
        np.ascontiguousarray(psi_units, dtype=np.int64),
        np.zeros(cap, np.float64),
        np.zeros(cap, np.int64),
        np.zeros(cap, np.int64),
        np.zeros(cap, np.float64),
        np.zeros(cap, np.int64),
        np.zeros(cap, np.int64),
    )


# ---------------------------------------------------------------------------
# Layered minimum k-link path (concave weights)
# ---------------------------------------------------------------------------

def _klink_impl(s, D, n, N, k, prev, cur, parents, stack):
    """k layers of row minima for dp[b] = min_a dp_prev[a] + s[D*b - a].

    Valid predecessors per row b are a in [D*b - n, b - 1]; leftmost minima
    are monotone nondecreasing in b (concave quadrangle inequality), so a
    divide-and-conquer over rows needs O(N log N) work per layer.
    """
    inf = math.inf
    for a in range(N + 1):
        prev[a] = inf
    prev[0] = 0.0
    for layer in range(1, k + 1):
        rlo = layer
        rhi = N - (k - layer)
        for b in range(N + 1):
            cur[b] = inf
        top = 0
        stack[top, 0] = rlo
        stack[top, 1] = rhi
        stack[top, 2] = layer - 1
        stack[top, 3] = N
        top += 1
        while top > 0:
            top -= 1
            lo = stack[top, 0]
            hi = stack[top, 1]
            clo = stack[top, 2]
            chi = stack[top, 3]
            if lo > hi:
                continue
            mid = (lo + hi) // 2
            alo = clo
            low_valid = D * mid - n
            if low_valid > alo:
                alo = low_valid
            ahi = chi
            if mid - 1 < ahi:
                ahi = mid - 1
            if alo > ahi:
                cur[mid] = inf
                parents[layer - 1, mid] = -1
                barg = clo
            else:
                barg = alo
                best = prev[alo] + s[D * mid - alo]
                for a in range(alo + 1, ahi + 1):
                    v = prev[a] + s[D * mid - a]
                    if v < best:
                        best = v
                        barg = a
                cur[mid] = best
                parents[layer - 1, mid] = barg
            if lo < mid:
                stack[top, 0] = lo
                stack[top, 1] = mid - 1
                stack[top, 2] = clo
                stack[top, 3] = barg
                top += 1
            if mid < hi:
                stack[top, 0] = mid + 1
                stack[top, 1] = hi
                stack[top, 2] = barg
                stack[top, 3] = chi
                top += 1
        prev, cur = cur, prev
    return prev[N]


_klink_jit = None


def _get_klink_jit():
    global _klink_jit
    if _klink_jit is None:
        from numba import njit

        _klink_jit = njit(cache=True)(_klink_impl)
    return _klink_jit


def klink_path(s, radix: int, n: int, N: int, k: int):
    """Minimum-weight strictly increasing k-link path 0 -> N.

    Returns (cost, alpha array of length k+1) or (inf, None) when no path
    exists.  `s[i]` is the total weight of the i lightest symbols.
    """
    s = np.ascontiguousarray(s, dtype=np.float64)
    prev = np.empty(N + 1, np.float64)
    cur = np.empty(N + 1, np.float64)
    parents = np.full((k, N + 1), -1, np.int32)
    depth = 2 * (max(N, 2).bit_length() + 2)
    stack = np.zeros((2 * depth + 4, 4), np.int64)
    impl = _get_klink_jit() if jit_enabled() else _klink_impl
    cost = impl(s, radix, n, N, k, prev, cur, parents, stack)
    if not math.isfinite(cost):
        return math.inf, None
    alpha = np.zeros(k + 1, np.int64)
    alpha[k] = N
    b = N
    for layer in range(k, 0, -1):
        a = parents[layer - 1, b]
        if a < 0:
            return math.inf, None
        alpha[layer - 1] = a
        b = a
    return float(cost), alpha
