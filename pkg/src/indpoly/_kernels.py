"""Compiled inner loops: free-tree successor on level sequences and an int64
independence-polynomial filter.

Level sequences are preorder depth lists with the root at depth 0.  The
successor rule generates each free tree once, rooted at a centre.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# int64 coefficients count independent sets of subforests, so they are bounded
# by 2**(n-1) + 1; the cap keeps a wide safety margin.
FAST_MAX_N = 32

STATE_FRESH = 0
STATE_RUNNING = 1
STATE_DONE = 2


@njit(cache=True)
def _second_one(L, n):
    for i in range(2, n):
        if L[i] == 1:
            return i
    return n


@njit(cache=True)
def _next_rooted(L, n, p):
    """Rooted-tree successor acting from position ``p``; False when exhausted."""
    if p == 0:
        return False
    q = p - 1
    while L[q] != L[p] - 1:
        q -= 1
    for i in range(p, n):
        L[i] = L[i - p + q]
    return True


@njit(cache=True)
def _is_free_canonical(L, n):
    # first root branch must be no taller than the rest; on equal height it
    # must be no larger, then no later lexicographically
    m = _second_one(L, n)
    left_h = 0
    for i in range(1, m):
        if L[i] - 1 > left_h:
            left_h = L[i] - 1
    rest_h = 0
    for i in range(m, n):
        if L[i] > rest_h:
            rest_h = L[i]
    if rest_h < left_h:
        return False
    if rest_h == left_h:
        left_len = m - 1
        rest_len = n - m + 1
        if left_len > rest_len:
            return False
        if left_len == rest_len:
            # rest is [0] + L[m:]
            for i in range(left_len):
                a = L[1 + i] - 1
                b = 0 if i == 0 else L[m + i - 1]
                if a < b:
                    return True
                if a > b:
                    return False
    return True


@njit(cache=True)
def _to_free_canonical(L, n):
    """Leave ``L`` valid or jump to the next valid sequence; False when exhausted."""
    if _is_free_canonical(L, n):
        return True
    p = _second_one(L, n) - 1
    old = L[p]
    if not _next_rooted(L, n, p):
        return False
    if old > 2:
        m = _second_one(L, n)
        h = 0
        for i in range(1, m):
            if L[i] - 1 > h:
                h = L[i] - 1
        k = h + 1
        for j in range(k):
            L[n - k + j] = j + 1
    return True


@njit(cache=True)
def init_state(n):
    L = np.zeros(max(n, 1), dtype=np.int8)
    half = n // 2
    for i in range(half + 1):
        L[i] = i
    for j in range(1, (n + 1) // 2):
        L[half + j] = j
    return L


@njit(cache=True)
def advance(L, n, state):
    """Move to the next free tree in place; returns False once the stream ends."""
    if state[0] == STATE_DONE:
        return False
    if n <= 2:
        if state[0] == STATE_FRESH:
            state[0] = STATE_RUNNING
            return True
        state[0] = STATE_DONE
        return False
    if state[0] == STATE_RUNNING:
        p = n - 1
        while L[p] == 1:
            p -= 1
        if not _next_rooted(L, n, p):
            state[0] = STATE_DONE
            return False
    state[0] = STATE_RUNNING
    if not _to_free_canonical(L, n):
        state[0] = STATE_DONE
        return False
    return True


@njit(cache=True)
def fill_batch(L, n, state, out):
    """Write up to ``len(out)`` successive level sequences into ``out``."""
    k = 0
    while k < out.shape[0]:
        if not advance(L, n, state):
            break
        for i in range(n):
            out[k, i] = L[i]
        k += 1
    return k


@njit(cache=True)
def _polymul_into(a, da, b, db, tmp):
    for i in range(da + db + 1):
        tmp[i] = 0
    for i in range(da + 1):
        ai = a[i]
        if ai != 0:
            for j in range(db + 1):
                tmp[i + j] += ai * b[j]
    for i in range(da + db + 1):
        a[i] = tmp[i]
    return da + db


@njit(cache=True)
def independence_poly_levels(L, n, E, I, dE, dI, parent, last, S, tmp, out):
    """int64 independence polynomial of the tree encoded by ``L``; returns its degree."""
    for v in range(n):
        for k in range(n + 1):
            E[v, k] = 0
            I[v, k] = 0
        E[v, 0] = 1
        I[v, 1] = 1
        dE[v] = 0
        dI[v] = 1
    last[0] = 0
    for v in range(1, n):
        parent[v] = last[L[v] - 1]
        last[L[v]] = v
    for v in range(n - 1, 0, -1):
        p = parent[v]
        ds = dE[v] if dE[v] > dI[v] else dI[v]
        for k in range(ds + 1):
            S[k] = E[v, k] + I[v, k]
        dE[p] = _polymul_into(E[p], dE[p], S, ds, tmp)
        dI[p] = _polymul_into(I[p], dI[p], E[v], dE[v], tmp)
    d = dE[0] if dE[0] > dI[0] else dI[0]
    for k in range(d + 1):
        out[k] = E[0, k] + I[0, k]
    while d > 0 and out[d] == 0:
        d -= 1
    return d


@njit(cache=True)
def scan_shard(n, shard, shards, block):
    """Walk the whole stream, analysing blocks ``b`` with ``b % shards == shard``.

    Returns (trees analysed, level sequences of trees with a symmetric polynomial).
    """
    L = init_state(n)
    state = np.zeros(1, dtype=np.int64)
    E = np.zeros((n, n + 1), dtype=np.int64)
    I = np.zeros((n, n + 1), dtype=np.int64)
    dE = np.zeros(n, dtype=np.int64)
    dI = np.zeros(n, dtype=np.int64)
    parent = np.zeros(n, dtype=np.int64)
    last = np.zeros(n + 1, dtype=np.int64)
    S = np.zeros(n + 1, dtype=np.int64)
    tmp = np.zeros(2 * n + 2, dtype=np.int64)
    P = np.zeros(n + 1, dtype=np.int64)
    hits = np.zeros((16, n), dtype=np.int8)
    nhits = 0
    count = 0
    idx = -1
    while advance(L, n, state):
        idx += 1
        if (idx // block) % shards != shard:
            continue
        count += 1
        d = independence_poly_levels(L, n, E, I, dE, dI, parent, last, S, tmp, P)
        # a symmetric independence polynomial has leading coefficient 1
        if P[d] != 1:
            continue
        sym = True
        for k in range(d // 2 + 1):
            if P[k] != P[d - k]:
                sym = False
                break
        if sym:
            if nhits == hits.shape[0]:
                bigger = np.zeros((2 * nhits, n), dtype=np.int8)
                bigger[:nhits] = hits
                hits = bigger
            for i in range(n):
                hits[nhits, i] = L[i]
            nhits += 1
    return count, hits[:nhits].copy()
