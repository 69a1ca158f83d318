"""Exhaustive enumeration of maximal Condorcet domains at small n.

The search walks a lattice of per-triple condition choices.  Every
maximal domain equals the set of orders satisfying one never condition
per triple (pick any satisfied condition for each triple; the result
contains the domain and is itself Condorcet, so maximality forces
equality).  Leaves of the walk therefore cover all maximal domains, and
a direct no-order-can-be-added filter keeps exactly those.  Dominated
branches (child order sets contained in a sibling's) are pruned, which
loses only non-maximal leaves.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import analyze
from .model import (
    PATTERN_CELL_MASKS,
    Domain,
    ResourceGuardError,
    all_triples,
)

ENUMERATE_N_CAP = 5
_PCM = np.array(PATTERN_CELL_MASKS, dtype=np.int16)

_PEAK_PIT_CELLS = tuple(b for b in range(9) if b % 3 in (0, 2))
_ALL_CELLS = tuple(range(9))


class _Tables:
    def __init__(self, n: int):
        self.n = n
        self.orders = sorted(itertools.permutations(range(1, n + 1)))
        self.triples = list(all_triples(range(1, n + 1)))
        r = len(self.orders)
        perm = np.array(self.orders, dtype=np.int8)
        pos = np.empty((r, n), dtype=np.int8)
        np.put_along_axis(pos, perm.astype(np.intp) - 1, np.arange(n, dtype=np.int8)[None, :], axis=1)
        ids = np.empty((r, len(self.triples)), dtype=np.uint8)
        for ti, (a, b, c) in enumerate(self.triples):
            pa, pb, pc = pos[:, a - 1], pos[:, b - 1], pos[:, c - 1]
            ra = 1 + (pa > pb).astype(np.uint8) + (pa > pc)
            ids[:, ti] = (ra - 1) * 2 + (pb > pc)
        self.ids = ids
        # allowed[t][cell] = bitmask over orders avoiding that cell on t
        self.allowed = []
        for ti in range(len(self.triples)):
            cells = []
            occ = _PCM[ids[:, ti]]
            for bit in range(9):
                rows = np.nonzero((occ >> bit) & 1 == 0)[0]
                cells.append(sum(1 << int(i) for i in rows))
            self.allowed.append(cells)

    def mask_to_bools(self, mask: int) -> np.ndarray:
        nbytes = (len(self.orders) + 7) // 8
        raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: len(self.orders)].astype(bool)


def _lattice_finals(tables: _Tables, cells: Sequence[int]) -> set[int]:
    full = (1 << len(tables.orders)) - 1
    depth_max = len(tables.triples)
    finals: set[int] = set()
    visited: set[tuple[int, int]] = set()
    stack = [(0, full)]
    while stack:
        depth, mask = stack.pop()
        if depth == depth_max:
            finals.add(mask)
            continue
        key = (depth, mask)
        if key in visited:
            continue
        visited.add(key)
        kids = sorted({mask & tables.allowed[depth][c] for c in cells}, reverse=True)
        keep: list[int] = []
        for k in kids:
            # larger ints come first, so any superset of k is already kept
            if k and not any(k & s == k for s in keep):
                keep.append(k)
        stack.extend((depth + 1, k) for k in keep)
    return finals


def _filter_maximal(tables: _Tables, masks: Iterable[int], chunk: int = 2048) -> list[int]:
    """Keep the masks to which no outside order can be added."""
    masks = list(masks)
    r = len(tables.orders)
    t_count = len(tables.triples)
    onehot = [
        (tables.ids[:, ti][:, None] == np.arange(6)[None, :]).astype(np.uint8)
        for ti in range(t_count)
    ]
    out = []
    for lo in range(0, len(masks), chunk):
        block = masks[lo : lo + chunk]
        bmat = np.stack([tables.mask_to_bools(m) for m in block])
        counts = bmat.sum(axis=1)
        ok = np.ones((len(block), r), dtype=bool)
        for ti in range(t_count):
            present = (bmat.astype(np.uint8) @ onehot[ti]) > 0
            occ = np.zeros(len(block), dtype=np.int16)
            for pid in range(6):
                occ |= np.where(present[:, pid], _PCM[pid], 0)
            free = ~occ & 511
            cell_ok = (free[:, None] & ~_PCM[None, :]) != 0  # block x 6
            ok &= cell_ok[np.arange(len(block))[:, None], tables.ids[:, ti][None, :]]
        maximal = ok.sum(axis=1) == counts
        out.extend(m for m, flag in zip(block, maximal) if flag)
    return out


def _mask_to_domain(tables: _Tables, mask: int) -> Domain:
    rows = [tables.orders[i] for i in range(len(tables.orders)) if mask >> i & 1]
    return Domain._from_canonical(
        np.array(rows, dtype=np.uint8), range(1, tables.n + 1)
    )


class _Canonicalizer:
    """Least relabeled image of a domain, as packed bytes."""

    def __init__(self, tables: _Tables):
        self.tables = tables
        n = tables.n
        index = {o: i for i, o in enumerate(tables.orders)}
        remaps = []
        for perm in itertools.permutations(range(1, n + 1)):
            row = [index[tuple(perm[x - 1] for x in o)] for o in tables.orders]
            remaps.append(row)
        self.remaps = np.array(remaps, dtype=np.int32)

    def key(self, mask: int) -> bytes:
        members = [i for i in range(len(self.tables.orders)) if mask >> i & 1]
        vec = np.zeros(len(self.tables.orders), dtype=bool)
        best = None
        for row in self.remaps:
            vec[:] = False
            vec[row[members]] = True
            packed = np.packbits(vec).tobytes()
            if best is None or packed < best:
                best = packed
        return best


def enumerate_maximal_condorcet(
    n: int, *, peak_pit_only: bool = False, allow_long: bool = False
) -> list[Domain]:
    """All maximal Condorcet domains on 1..n, raw (no isomorphism grouping).

    With peak_pit_only the condition lattice is restricted to rank-1 and
    rank-3 conditions, which yields every maximal peak-pit domain; at
    the supported n these are maximal Condorcet domains as well (the
    filter discards any that are not, and none are at n <= 5).

    n=6 is possible in principle (allow_long=True) but unbounded in
    memory and time; it is not exercised by the test suite.
    """
    cap = 6 if allow_long else ENUMERATE_N_CAP
    if n < 1 or n > cap:
        raise ResourceGuardError(
            f"enumeration supports n <= {ENUMERATE_N_CAP} "
            f"(n=6 only with allow_long=True), got n={n}"
        )
    if n <= 2:
        # a single order, or both orders on two alternatives
        return [Domain(list(itertools.permutations(range(1, n + 1))))]
    tables = _Tables(n)
    cells = _PEAK_PIT_CELLS if peak_pit_only else _ALL_CELLS
    finals = _lattice_finals(tables, cells)
    maximal = _filter_maximal(tables, finals)
    domains = [_mask_to_domain(tables, m) for m in maximal]
    domains.sort(key=lambda d: (-len(d), d.orders()))
    return domains


def isomorphism_classes(domains: Sequence[Domain]) -> list[list[Domain]]:
    """Group by relabeling equivalence; class representatives first."""
    if not domains:
        return []
    n = domains[0].n
    tables = _Tables(n)
    index = {o: i for i, o in enumerate(tables.orders)}
    canon = _Canonicalizer(tables)
    groups: dict[bytes, list[Domain]] = {}
    for d in domains:
        mask = sum(1 << index[o] for o in d.orders())
        groups.setdefault(canon.key(mask), []).append(d)
    out = [sorted(g, key=lambda d: d.orders()) for g in groups.values()]
    out.sort(key=lambda g: (-len(g[0]), g[0].orders()))
    return out


@dataclass(frozen=True)
class CensusRow:
    size: int
    count: int


def domain_flags(domain: Domain) -> dict[str, bool]:
    pp = analyze.is_peak_pit(domain)
    bip = pp and analyze.find_bipartition(domain) is not None
    mbb = analyze.find_midpoint_bipartition(domain) is not None
    return {"peak_pit": pp, "bipartite": bip, "midpoint_bipartite": mbb}


def census(
    domains: Sequence[Domain],
    *,
    peak_pit: Optional[bool] = None,
    bipartite: Optional[bool] = None,
    midpoint_bipartite: Optional[bool] = None,
    up_to_isomorphism: bool = False,
) -> list[CensusRow]:
    """Size histogram after flag filters; optionally one per iso class."""
    pool: Sequence[Domain]
    if up_to_isomorphism:
        pool = [g[0] for g in isomorphism_classes(domains)]
    else:
        pool = domains
    sizes: Counter[int] = Counter()
    for d in pool:
        flags = domain_flags(d)
        if peak_pit is not None and flags["peak_pit"] != peak_pit:
            continue
        if bipartite is not None and flags["bipartite"] != bipartite:
            continue
        if midpoint_bipartite is not None and flags["midpoint_bipartite"] != midpoint_bipartite:
            continue
        sizes[len(d)] += 1
    return [CensusRow(s, c) for s, c in sorted(sizes.items(), reverse=True)]
