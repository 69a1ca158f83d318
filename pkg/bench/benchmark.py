#!/usr/bin/env python3
"""Compare the compiled kernel against the pure Python fallback.

Times the three kernel entry points on representative workloads and prints
a small table. Wall times are best-of-repeat, results are cross-checked
between the two backends before timing so a speedup never hides a wrong
answer.

Usage: python3 bench/benchmark.py [--repeat 3] [--skip-median]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from condorcet._core import backend_module
from condorcet.generate import compile_scheme
from condorcet.graph import build_swap_graph, graph_distances, kendall_matrix
from condorcet.schemes import fishburn_scheme, named_set, set_alternating_scheme

try:
    backend_module("compiled")
except ImportError:
    raise SystemExit("compiled backend is not built; run pip install -e . first")

PY = backend_module("python")
C = backend_module("compiled")


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def run_enumeration(kernel, cs, count_only=True):
    prefix = np.zeros(0, dtype=np.int32)
    return kernel.enumerate_scheme(
        cs.n, cs.r1_off, cs.r1_o1, cs.r1_o2, cs.r1_qm, cs.r2_off, cs.r2_e, cs.r2_o,
        prefix, count_only,
    )


def domain_from_kernel(cs):
    count, packed = run_enumeration(C, cs, count_only=False)
    from condorcet.model import Domain

    arr = np.frombuffer(packed, dtype=np.uint8).reshape(count, cs.n).copy()
    return Domain._from_canonical(arr, range(1, cs.n + 1))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-median", action="store_true",
                    help="median uniqueness is the slow one on the fallback")
    args = ap.parse_args()

    rows = []

    # enumeration: the odd family at three sizes
    for n in (10, 12, 14):
        cs = compile_scheme(set_alternating_scheme(named_set("odd", n), n))
        want = run_enumeration(C, cs)[0]
        got = run_enumeration(PY, cs)[0]
        assert want == got, f"backend disagreement at n={n}: {want} vs {got}"
        tc = best_of(lambda: run_enumeration(C, cs), args.repeat)
        tp = best_of(lambda: run_enumeration(PY, cs), args.repeat)
        rows.append((f"enumerate odd n={n} ({want} orders)", tc, tp))

    # betweenness adjacency on a mid-sized Fishburn domain
    dom = domain_from_kernel(compile_scheme(fishburn_scheme(9)))
    dist = np.ascontiguousarray(kendall_matrix(dom), dtype=np.int16)
    ac = C.betweenness_adjacency(dist)
    apy = PY.betweenness_adjacency(dist)
    assert np.array_equal(np.asarray(ac), np.asarray(apy))
    tc = best_of(lambda: C.betweenness_adjacency(dist), args.repeat)
    tp = best_of(lambda: PY.betweenness_adjacency(dist), args.repeat)
    rows.append((f"betweenness fishburn n=9 ({len(dom)} orders)", tc, tp))

    if not args.skip_median:
        g = build_swap_graph(dom)
        gdist = np.ascontiguousarray(graph_distances(g), dtype=np.int16)
        okc = C.median_unique_ok(gdist)[0]
        okp = PY.median_unique_ok(gdist)[0]
        assert okc == okp, "median verdicts differ"
        tc = best_of(lambda: C.median_unique_ok(gdist), args.repeat)
        tp = best_of(lambda: PY.median_unique_ok(gdist), 1)
        rows.append((f"median check n=9 ({len(dom)} vertices)", tc, tp))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'python':>10}  {'speedup':>8}")
    for name, tc, tp in rows:
        print(f"{name:<{width}}  {tc:>9.4f}s  {tp:>9.4f}s  {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
