"""Pure NumPy kernel backend.

Mirrors the compiled extension (`_ckern`) function for function.  Integer
results (distances, infection counts) are bit-identical to the compiled
backend; floating-point sums can differ in the last ulp because the
accumulation order differs.

Graphs arrive as CSR adjacency: `indptr` (int64, length n+1) and `indices`
(int32, length 2E, each row sorted ascending).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_U = np.uint64
_GAMMA = _U(0x9E3779B97F4A7C15)
_MIX1 = _U(0xBF58476D1CE4E5B9)
_MIX2 = _U(0x94D049BB133111EB)
_S30, _S27, _S31, _S11 = _U(30), _U(27), _U(31), _U(11)
_INV53 = 1.0 / float(1 << 53)


def _mix64(z):
    # splitmix64 finalizer; works elementwise on uint64 arrays or scalars.
    z = z + _GAMMA
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


def _neighbors_of(indptr, indices, frontier):
    """Concatenated adjacency rows of all frontier nodes."""
    starts = indptr[frontier]
    counts = indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return indices[:0]
    flat = np.repeat(starts - (np.cumsum(counts) - counts), counts)
    flat += np.arange(total, dtype=flat.dtype)
    return indices[flat]


def _bfs_levels(indptr, indices, n, src, skip):
    """Yield (level, frontier) pairs for a BFS from src, skip excluded."""
    visited = np.zeros(n, dtype=bool)
    if skip >= 0:
        visited[skip] = True
    visited[src] = True
    frontier = np.array([src], dtype=np.int64)
    d = 0
    while frontier.size:
        d += 1
        nxt = _neighbors_of(indptr, indices, frontier)
        nxt = nxt[~visited[nxt]]
        if nxt.size == 0:
            return
        frontier = np.unique(nxt).astype(np.int64)
        visited[frontier] = True
        yield d, frontier


def bfs_block(indptr, indices, lo, hi, skip=-1):
    """Hop distances from sources lo..hi-1 to every node; -1 = unreachable."""
    n = indptr.shape[0] - 1
    out = np.full((hi - lo, n), -1, dtype=np.int32)
    for row, src in enumerate(range(lo, hi)):
        if src == skip:
            continue
        dist = out[row]
        dist[src] = 0
        for d, frontier in _bfs_levels(indptr, indices, n, src, skip):
            dist[frontier] = d
    return out


def inv_dist_sum(indptr, indices, skip=-1):
    """Sum of 1/d over ordered reachable pairs, with node `skip` removed."""
    n = indptr.shape[0] - 1
    total = 0.0
    for src in range(n):
        if src == skip:
            continue
        for d, frontier in _bfs_levels(indptr, indices, n, src, skip):
            total += frontier.size / d
    return total


def brandes(indptr, indices):
    """Raw shortest-path betweenness; every unordered pair counted twice."""
    from collections import deque

    n = indptr.shape[0] - 1
    cb = np.zeros(n)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n)
        delta = np.zeros(n)
        preds = [[] for _ in range(n)]
        order = []
        dist[s] = 0
        sigma[s] = 1.0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            for w in indices[indptr[v] : indptr[v + 1]]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        for w in reversed(order):
            coef = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coef
            if w != s:
                cb[w] += delta[w]
    return cb


def si_counts(indptr, indices, seeds, beta, t_max, keys):
    """Synchronous SI runs; returns cumulative infected counts per run/step.

    `keys` carries one uint64 run key per run (as int64 bit patterns).  A
    susceptible node v with infected neighbor u at the start of step t is
    infected when hash(key, t, u, v) maps below beta; trials are independent
    per contact edge.
    """
    n = indptr.shape[0] - 1
    runs = keys.shape[0]
    ukeys = keys.view(_U) if keys.dtype != np.uint64 else keys
    out = np.empty((runs, t_max + 1), dtype=np.int64)
    for r in range(runs):
        key = ukeys[r]
        state = np.zeros(n, dtype=np.uint8)
        state[seeds] = 1
        cnt = int(seeds.shape[0])
        out[r, 0] = cnt
        frozen = False
        for t in range(1, t_max + 1):
            if not frozen:
                sus = np.flatnonzero(state == 0)
                nbrs = _neighbors_of(indptr, indices, sus)
                reps = np.repeat(sus, indptr[sus + 1] - indptr[sus])
                contact = state[nbrs] == 1
                if not contact.any():
                    frozen = True
                else:
                    u = nbrs[contact].astype(_U)
                    v = reps[contact].astype(_U)
                    with np.errstate(over="ignore"):  # wraparound is intended
                        h = _mix64(_mix64(_mix64(key ^ _U(t)) ^ u) ^ v)
                    uni = (h >> _S11).astype(np.float64) * _INV53
                    hit = reps[contact][uni < beta]
                    if hit.size:
                        newly = np.unique(hit)
                        state[newly] = 1
                        cnt += int(newly.size)
            out[r, t] = cnt
    return out
