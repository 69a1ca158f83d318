"""Pure-Python kernels: the fallback backend.

Same contracts as the compiled module in _kernel.pyx. These versions favour
clarity over speed; the backtracking search is identical in structure, while
the graph checks use the definitional formulations so that the compiled
shortcuts have an independent reference to be tested against.
"""

from __future__ import annotations

import numpy as np


def enumerate_scheme(n, r1_off, r1_o1, r1_o2, r1_qm, r2_off, r2_e, r2_o, prefix, count_only):
    """Depth-first enumeration of all orders satisfying a compiled scheme.

    A candidate x is rejected the moment a condition becomes irrevocably
    violated: conditions constraining x are decided when x is placed (its
    local rank in each triple is then fixed), and never-bottom conditions on
    a still unplaced element fire as soon as the other two are both placed.

    Returns (count, packed) where packed concatenates the orders as bytes in
    lexicographic sequence, or None when count_only is set.
    """
    rule1 = [
        [(int(r1_o1[i]), int(r1_o2[i]), int(r1_qm[i])) for i in range(r1_off[x], r1_off[x + 1])]
        for x in range(n + 1)
    ]
    rule2 = [
        [(int(r2_e[i]), int(r2_o[i])) for i in range(r2_off[x], r2_off[x + 1])]
        for x in range(n + 1)
    ]
    placed = bytearray(n + 1)
    buf = bytearray(n)
    out: bytearray | None = None if count_only else bytearray()
    count = 0

    def ok(x: int) -> bool:
        for o1, o2, qm in rule1[x]:
            if (qm >> (placed[o1] + placed[o2])) & 1:
                return False
        for e, o in rule2[x]:
            if placed[o] and not placed[e]:
                return False
        return True

    depth = 0
    for p in prefix:
        x = int(p)
        if not 1 <= x <= n or placed[x] or not ok(x):
            return 0, (None if count_only else b"")
        placed[x] = 1
        buf[depth] = x
        depth += 1

    def rec(depth: int) -> None:
        nonlocal count
        if depth == n:
            count += 1
            if out is not None:
                out.extend(buf)
            return
        for x in range(1, n + 1):
            if not placed[x] and ok(x):
                placed[x] = 1
                buf[depth] = x
                rec(depth + 1)
                placed[x] = 0

    rec(depth)
    return count, (None if count_only else bytes(out))


def betweenness_adjacency(dist):
    """Adjacency matrix of the betweenness graph for a metric distance
    matrix: u ~ w iff no third point x has d(u,x) + d(x,w) = d(u,w)."""
    d = np.asarray(dist)
    v = d.shape[0]
    out = np.zeros((v, v), dtype=np.uint8)
    for u in range(v):
        row_u = d[u]
        for w in range(u + 1, v):
            between = (row_u + d[w]) == row_u[w]
            between[u] = between[w] = False
            if not between.any():
                out[u, w] = out[w, u] = 1
    return out


def median_unique_ok(dist):
    """Check that every vertex triple has exactly one vertex in the
    intersection of its three pairwise geodesic intervals.

    Definitional formulation (quartic); fine for small graphs and an
    independent reference for the compiled bucket algorithm. Returns
    (ok, witness) where witness is the first failing triple or None.
    """
    d = np.asarray(dist)
    v = d.shape[0]
    for u in range(v):
        du = d[u]
        for w in range(u + 1, v):
            i_uw = (du + d[w]) == du[w]
            for z in range(w + 1, v):
                dz = d[z]
                cnt = int(np.count_nonzero(i_uw & ((du + dz) == du[z]) & ((d[w] + dz) == d[w][z])))
                if cnt != 1:
                    return False, (u, w, z)
    return True, None
