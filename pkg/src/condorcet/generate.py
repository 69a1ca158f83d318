"""Domain generation: pruned prefix backtracking over a scheme.

generate_domain walks the tree of order prefixes, abandoning a prefix the
moment any assigned condition is irrevocably violated. The hot loop lives in
the kernel backend (compiled or pure Python); this module compiles a scheme
into flat per-element check records, drives the kernel, and offers a slow
but independent brute-force oracle for small n.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import NamedTuple

import numpy as np

from . import _core
from .model import Domain, ResourceGuardError
from .schemes import Scheme, make_scheme, set_alternating_scheme
from .model import NeverCondition

__all__ = [
    "generate_domain",
    "count_domain",
    "brute_force_domain",
    "common_part_domain",
    "domain_satisfies",
    "GENERATE_N_CAP",
    "BRUTE_FORCE_N_CAP",
]

GENERATE_N_CAP = 24
BRUTE_FORCE_N_CAP = 10


class CompiledScheme(NamedTuple):
    """Flat check records grouped by the element whose placement triggers
    them. rule1 rows (o1, o2, qmask): when x is placed, its local rank in
    the triple {x, o1, o2} is 1 + placed(o1) + placed(o2); qmask holds the
    forbidden ranks as bits rank-1. rule2 rows (e, o): a never-bottom
    condition on e fires early when x and o are both placed while e is not."""

    n: int
    r1_off: np.ndarray
    r1_o1: np.ndarray
    r1_o2: np.ndarray
    r1_qm: np.ndarray
    r2_off: np.ndarray
    r2_e: np.ndarray
    r2_o: np.ndarray


def compile_scheme(scheme: Scheme) -> CompiledScheme:
    n = scheme.n
    qmask: dict[tuple[int, int, int], int] = {}
    early: set[tuple[int, int, int]] = set()
    for t, conds in scheme.assignment.items():
        for c in conds:
            e = t[c.pos - 1]
            o1, o2 = (a for a in t if a != e)
            qmask[(e, o1, o2)] = qmask.get((e, o1, o2), 0) | (1 << (c.rank - 1))
            if c.rank == 3:
                early.add((o1, e, o2))
                early.add((o2, e, o1))

    r1_by_x: list[list[tuple[int, int, int]]] = [[] for _ in range(n + 1)]
    for (e, o1, o2), qm in qmask.items():
        r1_by_x[e].append((o1, o2, qm))
    r2_by_x: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for x, e, o in early:
        r2_by_x[x].append((e, o))

    def flatten(rows_by_x, width):
        off = np.zeros(n + 2, dtype=np.int32)
        flat = [[] for _ in range(width)]
        for x in range(1, n + 1):
            rows = sorted(rows_by_x[x])
            off[x + 1] = off[x] + len(rows)
            for row in rows:
                for col, val in enumerate(row):
                    flat[col].append(val)
        return off, [np.array(c, dtype=np.int32) for c in flat]

    r1_off, (r1_o1, r1_o2, r1_qm) = flatten(r1_by_x, 3)
    r2_off, (r2_e, r2_o) = flatten(r2_by_x, 2)
    return CompiledScheme(n, r1_off, r1_o1, r1_o2, r1_qm, r2_off, r2_e, r2_o)


def _run(cs: CompiledScheme, prefix: tuple[int, ...], count_only: bool):
    return _core.enumerate_scheme(
        cs.n, cs.r1_off, cs.r1_o1, cs.r1_o2, cs.r1_qm, cs.r2_off, cs.r2_e, cs.r2_o,
        np.asarray(prefix, dtype=np.int32), count_only,
    )


def _check_ok(cs: CompiledScheme, placed: bytearray, x: int) -> bool:
    # mirror of the kernel check, used only to fan out work for jobs > 1
    for i in range(cs.r1_off[x], cs.r1_off[x + 1]):
        if (int(cs.r1_qm[i]) >> (placed[cs.r1_o1[i]] + placed[cs.r1_o2[i]])) & 1:
            return False
    for i in range(cs.r2_off[x], cs.r2_off[x + 1]):
        if placed[cs.r2_o[i]] and not placed[cs.r2_e[i]]:
            return False
    return True


def _fanout_prefixes(cs: CompiledScheme, depth: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    placed = bytearray(cs.n + 1)

    def walk(prefix: tuple[int, ...]) -> None:
        if len(prefix) == depth:
            out.append(prefix)
            return
        for x in range(1, cs.n + 1):
            if not placed[x] and _check_ok(cs, placed, x):
                placed[x] = 1
                walk(prefix + (x,))
                placed[x] = 0

    walk(())
    return out


def _worker(args):
    cs_fields, prefix, count_only = args
    return _run(CompiledScheme(*cs_fields), prefix, count_only)


def _drive(scheme: Scheme, count_only: bool, jobs: int, force: bool):
    n = scheme.n
    if n > GENERATE_N_CAP and not force:
        raise ResourceGuardError(
            f"n={n} exceeds the default cap {GENERATE_N_CAP}; pass force=True to proceed"
        )
    cs = compile_scheme(scheme)
    if jobs <= 1 or n < 3:
        return _run(cs, (), count_only)
    depth = 2 if n >= 2 else 1
    prefixes = _fanout_prefixes(cs, depth)
    total = 0
    chunks: list[bytes] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for cnt, packed in pool.map(_worker, [(tuple(cs), p, count_only) for p in prefixes]):
            total += cnt
            if not count_only and packed:
                chunks.append(packed)
    return total, (None if count_only else b"".join(chunks))


def generate_domain(scheme: Scheme, *, jobs: int = 1, force: bool = False) -> Domain:
    """All orders on 1..n satisfying every condition of the scheme, as a
    canonical Domain. The search emits orders in lexicographic sequence, so
    no sort is needed afterwards."""
    count, packed = _drive(scheme, count_only=False, jobs=jobs, force=force)
    arr = np.frombuffer(packed or b"", dtype=np.uint8).reshape(count, scheme.n).copy()
    return Domain._from_canonical(arr, range(1, scheme.n + 1))


def count_domain(scheme: Scheme, *, jobs: int = 1, force: bool = False) -> int:
    """Size of generate_domain(scheme) without materializing the orders."""
    count, _ = _drive(scheme, count_only=True, jobs=jobs, force=force)
    return count


def brute_force_domain(scheme: Scheme) -> Domain:
    """Filter all n! orders directly against the scheme definition.

    Independent of the backtracking kernel on purpose: this is the oracle
    the generator is validated against.
    """
    n = scheme.n
    if n > BRUTE_FORCE_N_CAP:
        raise ResourceGuardError(f"brute force capped at n <= {BRUTE_FORCE_N_CAP}")
    items = sorted(scheme.assignment.items())
    kept = []
    for perm in permutations(range(1, n + 1)):
        pos = {a: i for i, a in enumerate(perm)}
        good = True
        for t, conds in items:
            for c in conds:
                e = t[c.pos - 1]
                rank = 1 + sum(1 for o in t if o != e and pos[o] < pos[e])
                if rank == c.rank:
                    good = False
                    break
            if not good:
                break
        if good:
            kept.append(perm)
    return Domain(kept, alternatives=range(1, n + 1))


def common_part_domain(n: int) -> Domain:
    """Orders satisfying both 1N3 and 3N1 on every triple: the intersection
    of all set-alternating domains for this n. Sizes follow the shifted
    Fibonacci recurrence c_1=1, c_2=2, c_m = c_{m-1} + c_{m-2}."""
    if n < 1:
        raise ValueError("n must be positive")
    both = (NeverCondition(1, 3), NeverCondition(3, 1))
    scheme = make_scheme(
        n,
        {t: both for t in _all_triples(n)},
        origin="common part",
    )
    return generate_domain(scheme)


def _all_triples(n: int):
    from .model import all_triples

    return all_triples(n)


def domain_satisfies(domain: Domain, scheme: Scheme) -> bool:
    """Vectorized check that every order of the domain satisfies every
    condition of the scheme."""
    if domain.alternatives != tuple(range(1, scheme.n + 1)):
        raise ValueError("domain and scheme alternatives differ")
    if len(domain) == 0:
        return True
    r = domain.ranks().astype(np.int16)
    for t, conds in scheme.assignment.items():
        cols = [domain.column_of(a) for a in t]
        ra, rb, rc = r[:, cols[0]], r[:, cols[1]], r[:, cols[2]]
        local = (
            1 + (ra > rb).astype(np.int16) + (ra > rc),
            1 + (rb > ra).astype(np.int16) + (rb > rc),
            1 + (rc > ra).astype(np.int16) + (rc > rb),
        )
        for c in conds:
            if bool((local[c.pos - 1] == c.rank).any()):
                return False
    return True


def default_set_alternating(n: int, members) -> Scheme:
    """Convenience wrapper kept next to the generator for callers that start
    from a raw member list."""
    return set_alternating_scheme(members, n)
