"""Compiled inner loop of the realization search.

One restart is a sequence of single-station moves. The received-energy table
``R[s, w]`` (energy at station w when subset s transmits) is updated
incrementally: a move of station k only touches the rows of subsets that
contain k, and the mismatch count is adjusted by the change in those rows.
"""

import numpy as np
from numba import njit

MOVE_STEP, MOVE_FRESH, MOVE_NEAR = 0, 1, 2


@njit(cache=True)
def _gain(ax, ay, bx, by, alpha):
    d2 = (ax - bx) ** 2 + (ay - by) ** 2
    if d2 < 1e-24:
        d2 = 1e-24
    if alpha == 4.0:
        return 1.0 / (d2 * d2)
    return d2 ** (-alpha / 2.0)


@njit(cache=True)
def _row_bad(R, s, members, sizes, target_forbidden, margin):
    peak = 0.0
    for a in range(sizes[s]):
        v = R[s, members[s, a]]
        if v > peak:
            peak = v
    return (peak >= 1.0) != target_forbidden[s] or abs(peak - 1.0) < margin


@njit(cache=True)
def _fill(pos, members, sizes, alpha, G, R):
    n = pos.shape[0]
    for i in range(n):
        G[i, i] = 0.0
        for j in range(i + 1, n):
            g = _gain(pos[i, 0], pos[i, 1], pos[j, 0], pos[j, 1], alpha)
            G[i, j] = g
            G[j, i] = g
    R[:, :] = 0.0
    for s in range(members.shape[0]):
        for a in range(sizes[s]):
            for b in range(sizes[s]):
                if a != b:
                    R[s, members[s, b]] += G[members[s, a], members[s, b]]


@njit(cache=True)
def descend(pos0, who, noise, kind, anchor, fresh, scales, members, sizes, subsets_of, n_subsets_of,
            target_forbidden, margin, alpha, near_ratio):
    """Run one restart; return (best mismatch, best placement)."""
    n = pos0.shape[0]
    S = members.shape[0]
    pos = pos0.copy()
    G = np.zeros((n, n))
    R = np.zeros((S, n))
    _fill(pos, members, sizes, alpha, G, R)
    bad = np.zeros(S, dtype=np.bool_)
    cur = 0
    for s in range(S):
        bad[s] = _row_bad(R, s, members, sizes, target_forbidden, margin)
        cur += bad[s]
    best = cur
    best_pos = pos.copy()
    g_new = np.zeros(n)
    # candidate rows for the subsets that contain the moved station
    Rc = np.zeros((n_subsets_of.max(), n))
    bad_c = np.zeros(n_subsets_of.max(), dtype=np.bool_)
    for t in range(who.shape[0]):
        if best == 0:
            break
        k = who[t]
        if kind[t] == MOVE_STEP:
            px = pos[k, 0] + scales[t] * noise[t, 0]
            py = pos[k, 1] + scales[t] * noise[t, 1]
        elif kind[t] == MOVE_FRESH:
            px = fresh[t, 0]
            py = fresh[t, 1]
        else:
            px = pos[anchor[t], 0] + near_ratio * fresh[t, 0]
            py = pos[anchor[t], 1] + near_ratio * fresh[t, 1]
        for x in range(n):
            g_new[x] = 0.0 if x == k else _gain(px, py, pos[x, 0], pos[x, 1], alpha)
        mis = cur
        for c in range(n_subsets_of[k]):
            s = subsets_of[k, c]
            total = 0.0
            peak = 0.0
            for a in range(sizes[s]):
                x = members[s, a]
                if x != k:
                    v = R[s, x] + g_new[x] - G[k, x]
                    Rc[c, x] = v
                    total += g_new[x]
                    if v > peak:
                        peak = v
            Rc[c, k] = total
            if total > peak:
                peak = total
            bad_c[c] = (peak >= 1.0) != target_forbidden[s] or abs(peak - 1.0) < margin
            mis += bad_c[c] - bad[s]
        if mis <= cur:
            pos[k, 0] = px
            pos[k, 1] = py
            for x in range(n):
                G[k, x] = g_new[x]
                G[x, k] = g_new[x]
            for c in range(n_subsets_of[k]):
                s = subsets_of[k, c]
                for a in range(sizes[s]):
                    x = members[s, a]
                    R[s, x] = Rc[c, x]
                bad[s] = bad_c[c]
            cur = mis
            if cur < best:
                best = cur
                best_pos[:, :] = pos
    return best, best_pos


@njit(cache=True)
def descend_batch(init, who, noise, kind, anchor, fresh, scales, members, sizes, subsets_of,
                  n_subsets_of, target_forbidden, margin, alpha, near_ratio):
    B = init.shape[0]
    best = np.empty(B, dtype=np.int64)
    best_pos = np.empty_like(init)
    for b in range(B):
        m, p = descend(init[b], who[b], noise[b], kind[b], anchor[b], fresh[b], scales,
                       members, sizes, subsets_of, n_subsets_of, target_forbidden, margin, alpha, near_ratio)
        best[b] = m
        best_pos[b] = p
    return best, best_pos
