# cython: language_level=3
"""Compiled kernels: scheme backtracking, betweenness scan, median check.

Contracts mirror _kernel_py exactly; see that module for the readable
reference implementations.
"""

cimport cython
from libc.string cimport memcpy

import numpy as np


cdef inline const int* _ptr(const int[::1] a) noexcept nogil:
    if a.shape[0] == 0:
        return NULL
    return &a[0]


@cython.boundscheck(False)
@cython.wraparound(False)
cdef inline bint _ok(int x,
                     const int* r1_off, const int* r1_o1, const int* r1_o2, const int* r1_qm,
                     const int* r2_off, const int* r2_e, const int* r2_o,
                     const unsigned char* placed) noexcept nogil:
    cdef int i, cnt
    for i in range(r1_off[x], r1_off[x + 1]):
        cnt = placed[r1_o1[i]] + placed[r1_o2[i]]
        if (r1_qm[i] >> cnt) & 1:
            return False
    for i in range(r2_off[x], r2_off[x + 1]):
        if placed[r2_o[i]] and not placed[r2_e[i]]:
            return False
    return True


@cython.boundscheck(False)
@cython.wraparound(False)
def enumerate_scheme(int n,
                     const int[::1] r1_off, const int[::1] r1_o1,
                     const int[::1] r1_o2, const int[::1] r1_qm,
                     const int[::1] r2_off, const int[::1] r2_e, const int[::1] r2_o,
                     const int[::1] prefix, bint count_only):
    if n < 1 or n > 60:
        raise ValueError("kernel supports 1 <= n <= 60")
    cdef const int* p1o = _ptr(r1_off)
    cdef const int* p1a = _ptr(r1_o1)
    cdef const int* p1b = _ptr(r1_o2)
    cdef const int* p1q = _ptr(r1_qm)
    cdef const int* p2o = _ptr(r2_off)
    cdef const int* p2e = _ptr(r2_e)
    cdef const int* p2x = _ptr(r2_o)

    cdef unsigned char placed[64]
    cdef unsigned char buf[64]
    cdef int cursor[64]
    cdef unsigned char chunk[65536]
    cdef int chunk_used = 0
    cdef long long count = 0
    cdef int depth, x, i, start_depth
    cdef bint found

    out = None if count_only else bytearray()

    for i in range(n + 1):
        placed[i] = 0

    # place the caller's prefix with the same checks as the search proper
    start_depth = 0
    for i in range(prefix.shape[0]):
        x = prefix[i]
        if x < 1 or x > n or placed[x] or not _ok(x, p1o, p1a, p1b, p1q, p2o, p2e, p2x, placed):
            return 0, (None if count_only else b"")
        placed[x] = 1
        buf[start_depth] = <unsigned char> x
        start_depth += 1

    if start_depth == n:
        return 1, (None if count_only else bytes([buf[i] for i in range(n)]))

    depth = start_depth
    cursor[depth] = 0
    while True:
        x = cursor[depth] + 1
        found = False
        while x <= n:
            if not placed[x] and _ok(x, p1o, p1a, p1b, p1q, p2o, p2e, p2x, placed):
                found = True
                break
            x += 1
        if not found:
            if depth == start_depth:
                break
            depth -= 1
            placed[buf[depth]] = 0
            continue
        cursor[depth] = x
        buf[depth] = <unsigned char> x
        if depth == n - 1:
            count += 1
            if not count_only:
                if chunk_used + n > 65536:
                    out.extend((<const char*> chunk)[:chunk_used])
                    chunk_used = 0
                memcpy(chunk + chunk_used, buf, n)
                chunk_used += n
            continue
        placed[x] = 1
        depth += 1
        cursor[depth] = 0

    if not count_only and chunk_used:
        out.extend((<const char*> chunk)[:chunk_used])
    return count, (None if count_only else bytes(out))


@cython.boundscheck(False)
@cython.wraparound(False)
def betweenness_adjacency(const short[:, ::1] dist):
    cdef Py_ssize_t v = dist.shape[0]
    out_np = np.zeros((v, v), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_np
    cdef Py_ssize_t u, w, x
    cdef int duw
    cdef bint edge
    with nogil:
        for u in range(v):
            for w in range(u + 1, v):
                duw = dist[u, w]
                edge = True
                for x in range(v):
                    if x != u and x != w and dist[u, x] + dist[x, w] == duw:
                        edge = False
                        break
                if edge:
                    out[u, w] = 1
                    out[w, u] = 1
    return out_np


@cython.boundscheck(False)
@cython.wraparound(False)
cdef bint _median_core(const short[:, ::1] dist, int* witness) noexcept nogil:
    # For each pair (u, v): bucket the geodesic interval I(u, v) by distance
    # from u. The median candidate for a third vertex w must sit at level
    # l = (d(u,v) + d(u,w) - d(v,w)) / 2, so only that bucket is scanned.
    cdef Py_ssize_t nv = dist.shape[0]
    cdef int u, v, w, x, l, duv, need, cnt, idx, per
    with gil:
        scratch = np.empty(3 * (nv + 2), dtype=np.int32)
        items_a = np.empty(nv, dtype=np.int32)
        cdef_view = scratch  # keep references alive via locals
    cdef int[::1] sc = scratch
    cdef int[::1] items = items_a
    # layout inside sc: off at [0 .. nv+1], fill at [nv+2 .. 2nv+3]
    for u in range(nv):
        for v in range(u + 1, nv):
            duv = dist[u, v]
            for l in range(duv + 2):
                sc[l] = 0
            for x in range(nv):
                if dist[u, x] + dist[x, v] == duv:
                    sc[dist[u, x] + 1] += 1
            for l in range(duv + 1):
                sc[l + 1] += sc[l]
                sc[nv + 2 + l] = sc[l]
            for x in range(nv):
                if dist[u, x] + dist[x, v] == duv:
                    l = dist[u, x]
                    items[sc[nv + 2 + l]] = x
                    sc[nv + 2 + l] += 1
            for w in range(v + 1, nv):
                per = duv + dist[u, w] - dist[v, w]
                if per & 1:
                    witness[0] = u; witness[1] = v; witness[2] = w
                    return False
                l = per >> 1
                if l < 0 or l > duv:
                    witness[0] = u; witness[1] = v; witness[2] = w
                    return False
                need = dist[u, w] - l
                cnt = 0
                for idx in range(sc[l], sc[l + 1]):
                    if dist[items[idx], w] == need:
                        cnt += 1
                        if cnt > 1:
                            break
                if cnt != 1:
                    witness[0] = u; witness[1] = v; witness[2] = w
                    return False
    return True


def median_unique_ok(const short[:, ::1] dist):
    cdef int witness[3]
    if _median_core(dist, witness):
        return True, None
    return False, (witness[0], witness[1], witness[2])
