# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernel backend: BFS distance blocks, inverse-distance sums,
betweenness accumulation and SI epidemic runs.

Twin of `_pykern`; integer outputs are bit-identical, float sums may differ
in the last ulp.  Heavy loops release the GIL so callers can thread over
sources / deleted nodes / runs.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t, uint64_t

cnp.import_array()

BACKEND_NAME = "c"

_EMPTY_I32 = np.zeros(1, dtype=np.int32)


cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    # splitmix64 finalizer; must match _pykern._mix64 and _seeds.mix64.
    z = z + <uint64_t>0x9E3779B97F4A7C15ULL
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef void _bfs_fill(int64_t* indptr, int32_t* indices, int n,
                    int32_t src, int32_t skip,
                    int32_t* dist, int32_t* queue) noexcept nogil:
    cdef int head = 0, tail = 0
    cdef int32_t v, w
    cdef int64_t p
    cdef int i
    for i in range(n):
        dist[i] = -1
    if src == skip:
        return
    dist[src] = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if w == skip:
                continue
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1


def bfs_block(indptr, indices, int lo, int hi, int skip=-1):
    """Hop distances from sources lo..hi-1 to every node; -1 = unreachable."""
    cdef cnp.int64_t[::1] ip = indptr
    cdef cnp.int32_t[::1] ix = indices if indices.shape[0] else _EMPTY_I32
    cdef int n = ip.shape[0] - 1
    out = np.empty((hi - lo, n), dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] out_mv = out
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int row, src
    with nogil:
        for row in range(hi - lo):
            src = lo + row
            _bfs_fill(&ip[0], &ix[0], n, src, skip,
                      &out_mv[row, 0], &queue[0])
    return out


def inv_dist_sum(indptr, indices, int skip=-1):
    """Sum of 1/d over ordered reachable pairs, with node `skip` removed."""
    cdef cnp.int64_t[::1] ip = indptr
    cdef cnp.int32_t[::1] ix = indices if indices.shape[0] else _EMPTY_I32
    cdef int n = ip.shape[0] - 1
    dist_arr = np.empty(n, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef double total = 0.0
    cdef int src, i
    with nogil:
        for src in range(n):
            if src == skip:
                continue
            _bfs_fill(&ip[0], &ix[0], n, src, skip, &dist[0], &queue[0])
            for i in range(n):
                if dist[i] > 0:
                    total += 1.0 / dist[i]
    return total


cdef void _brandes_source(int64_t* indptr, int32_t* indices,
                          int n, int32_t s,
                          int32_t* dist, double* sigma, double* delta,
                          int32_t* order, int32_t* npred, int32_t* preds,
                          double* cb) noexcept nogil:
    cdef int head = 0, tail = 0
    cdef int32_t v, w
    cdef int64_t p
    cdef int i, j
    cdef double coef
    for i in range(n):
        dist[i] = -1
        sigma[i] = 0.0
        delta[i] = 0.0
        npred[i] = 0
    dist[s] = 0
    sigma[s] = 1.0
    order[tail] = s
    tail += 1
    while head < tail:
        v = order[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                order[tail] = w
                tail += 1
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                # predecessors of w are neighbors of w: reuse its CSR slot
                preds[indptr[w] + npred[w]] = v
                npred[w] += 1
    for i in range(tail - 1, -1, -1):
        w = order[i]
        coef = (1.0 + delta[w]) / sigma[w]
        for j in range(npred[w]):
            v = preds[indptr[w] + j]
            delta[v] += sigma[v] * coef
        if w != s:
            cb[w] += delta[w]


def brandes(indptr, indices):
    """Raw shortest-path betweenness; every unordered pair counted twice."""
    cdef cnp.int64_t[::1] ip = indptr
    cdef cnp.int32_t[::1] ix = indices if indices.shape[0] else _EMPTY_I32
    cdef int n = ip.shape[0] - 1
    cb_arr = np.zeros(n)
    dist_arr = np.empty(n, dtype=np.int32)
    sigma_arr = np.empty(n)
    delta_arr = np.empty(n)
    order_arr = np.empty(n, dtype=np.int32)
    npred_arr = np.empty(n, dtype=np.int32)
    preds_arr = np.empty(max(indices.shape[0], 1), dtype=np.int32)
    cdef cnp.float64_t[::1] cb = cb_arr
    cdef cnp.int32_t[::1] dist = dist_arr
    cdef cnp.float64_t[::1] sigma = sigma_arr
    cdef cnp.float64_t[::1] delta = delta_arr
    cdef cnp.int32_t[::1] order = order_arr
    cdef cnp.int32_t[::1] npred = npred_arr
    cdef cnp.int32_t[::1] preds = preds_arr
    cdef int32_t s
    with nogil:
        for s in range(n):
            _brandes_source(&ip[0], &ix[0], n, s,
                            &dist[0], &sigma[0], &delta[0],
                            &order[0], &npred[0], &preds[0], &cb[0])
    return cb_arr


cdef void _si_run(int64_t* indptr, int32_t* indices, int n,
                  int32_t* seeds, int n_seeds,
                  double beta, int t_max, uint64_t key,
                  uint8_t* state, int32_t* newly, int64_t* counts) noexcept nogil:
    cdef int i, t, n_new, cnt, frozen, any_contact
    cdef int32_t v, u
    cdef int64_t p
    cdef uint64_t h
    cdef double uni
    for i in range(n):
        state[i] = 0
    for i in range(n_seeds):
        state[seeds[i]] = 1
    cnt = n_seeds
    counts[0] = cnt
    frozen = 0
    for t in range(1, t_max + 1):
        if not frozen:
            n_new = 0
            any_contact = 0
            for v in range(n):
                if state[v] != 0:
                    continue
                for p in range(indptr[v], indptr[v + 1]):
                    u = indices[p]
                    if state[u] == 1:
                        any_contact = 1
                        h = _mix64(_mix64(_mix64(key ^ <uint64_t>t) ^ <uint64_t>u)
                                   ^ <uint64_t>v)
                        uni = <double>(h >> 11) * (1.0 / 9007199254740992.0)
                        if uni < beta:
                            newly[n_new] = v
                            n_new += 1
                            break
            for i in range(n_new):
                state[newly[i]] = 1
            cnt += n_new
            if not any_contact:
                frozen = 1
        counts[t] = cnt


def si_counts(indptr, indices, seeds, double beta, int t_max, keys):
    """Synchronous SI runs; returns cumulative infected counts per run/step.

    `keys` carries one uint64 run key per run (as int64 bit patterns); the
    infection trial for contact (u infected -> v susceptible) at step t
    hashes (key, t, u, v), so outcomes are schedule-independent.
    """
    cdef cnp.int64_t[::1] ip = indptr
    cdef cnp.int32_t[::1] ix = indices if indices.shape[0] else _EMPTY_I32
    cdef cnp.int32_t[::1] seeds_mv = seeds
    cdef cnp.int64_t[::1] keys_mv = keys
    cdef int n = ip.shape[0] - 1
    cdef int runs = keys_mv.shape[0]
    if seeds_mv.shape[0] == 0:
        raise ValueError("seed set must not be empty")
    out = np.empty((runs, t_max + 1), dtype=np.int64)
    state_arr = np.empty(n, dtype=np.uint8)
    newly_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int64_t[:, ::1] out_mv = out
    cdef cnp.uint8_t[::1] state = state_arr
    cdef cnp.int32_t[::1] newly = newly_arr
    cdef int r
    with nogil:
        for r in range(runs):
            _si_run(&ip[0], &ix[0], n, &seeds_mv[0], seeds_mv.shape[0],
                    beta, t_max, <uint64_t>keys_mv[r],
                    &state[0], &newly[0], &out_mv[r, 0])
    return out
