"""Structural property checks for domains of linear orders.

All predicates work on the satisfied never conditions of each triple,
so they apply to any Domain, not only scheme-generated ones.  The two
partition searches are exhaustive within their guards and certify a
"none" verdict as strongly as a found witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .model import (
    ALL_CELLS_MASK,
    PATTERN_CELL_MASKS,
    Domain,
    NeverCondition,
    ResourceGuardError,
    all_triples,
    restrict_domain,
    triple_pattern_table,
)

MAXIMALITY_N_CAP = 9
BIPARTITION_N_CAP = 16
AXIS_SEARCH_N_CAP = 8

# cell bit layout: bit 3*(pos-1)+(rank-1); see model._cell_bit
_Q1_CELLS = sum(1 << (3 * p) for p in range(3))
_Q3_CELLS = sum(1 << (3 * p + 2) for p in range(3))


def _free_masks(domain: Domain) -> dict[tuple[int, int, int], int]:
    """Per triple, the 9-bit mask of never conditions the domain satisfies."""
    out = {}
    for triple, present in triple_pattern_table(domain).items():
        occupied = 0
        for pid in present:
            occupied |= PATTERN_CELL_MASKS[pid]
        out[triple] = ~occupied & ALL_CELLS_MASK
    return out


def _conditions_from_mask(mask: int) -> tuple[NeverCondition, ...]:
    return tuple(
        NeverCondition(b // 3 + 1, b % 3 + 1) for b in range(9) if mask >> b & 1
    )


def condition_table(domain: Domain) -> dict[tuple[int, int, int], tuple[NeverCondition, ...]]:
    return {t: _conditions_from_mask(m) for t, m in _free_masks(domain).items()}


def is_condorcet(domain: Domain) -> bool:
    return all(m != 0 for m in _free_masks(domain).values())


def is_copious(domain: Domain) -> bool:
    """Every triple restriction realizes 4 distinct orders."""
    return all(len(p) == 4 for p in triple_pattern_table(domain).values())


def is_ample(domain: Domain) -> bool:
    """Every pair restriction realizes both orders."""
    ranks = domain.ranks()
    cols = range(len(domain.alternatives))
    for i, j in itertools.combinations(cols, 2):
        less = ranks[:, i] < ranks[:, j]
        if less.all() or not less.any():
            return False
    return True


def is_peak_pit(domain: Domain) -> bool:
    return all(m & (_Q1_CELLS | _Q3_CELLS) for m in _free_masks(domain).values())


def is_arrow_single_peaked(domain: Domain) -> bool:
    return all(m & _Q3_CELLS for m in _free_masks(domain).values())


def is_dual_arrow(domain: Domain) -> bool:
    return all(m & _Q1_CELLS for m in _free_masks(domain).values())


def is_connected(domain: Domain) -> bool:
    """Connectivity under single adjacent transpositions."""
    members = set(domain.orders())
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        lst = list(cur)
        for i in range(len(lst) - 1):
            lst[i], lst[i + 1] = lst[i + 1], lst[i]
            nxt = tuple(lst)
            if nxt in members and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
            lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return len(seen) == len(members)


def has_maximal_width(domain: Domain) -> bool:
    members = set(domain.orders())
    return any(o[::-1] in members for o in members)


def is_unitary(domain: Domain) -> bool:
    return domain.is_identity_member()


def _addable_orders(domain: Domain, count_cap: int = 0) -> list[tuple[int, ...]]:
    """Orders outside the domain whose addition keeps it Condorcet."""
    n = domain.n
    alts = domain.alternatives
    free = _free_masks(domain)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    pos = np.argsort(perms, axis=1).astype(np.int8)
    ok = np.ones(len(perms), dtype=bool)
    col = {a: i for i, a in enumerate(alts)}
    for (a, b, c), mask in free.items():
        pa, pb, pc = pos[:, col[a]], pos[:, col[b]], pos[:, col[c]]
        ra = 1 + (pa > pb) + (pa > pc)
        ids = (ra - 1) * 2 + (pb > pc)
        table = np.fromiter(
            ((mask & ~PATTERN_CELL_MASKS[i]) != 0 for i in range(6)), dtype=bool
        )
        ok &= table[ids]
        if not ok.any():
            return []
    members = set(domain.orders())
    found = []
    for row in np.nonzero(ok)[0]:
        order = tuple(alts[i] for i in perms[row])
        if order not in members:
            found.append(order)
            if count_cap and len(found) >= count_cap:
                break
    return found


def is_maximal(domain: Domain) -> bool:
    """No outside order can join without breaking the Condorcet property.

    Scans all n! candidates, so n is capped; scheme-generated domains
    are maximal by construction and do not need this test.
    """
    if domain.n > MAXIMALITY_N_CAP:
        raise ResourceGuardError(
            f"maximality scan needs n <= {MAXIMALITY_N_CAP}, got n={domain.n}"
        )
    if not is_condorcet(domain):
        return False
    return not _addable_orders(domain, count_cap=1)


def _restriction_size(domain: Domain, part) -> int:
    if not part:
        return 1
    return len(restrict_domain(domain, sorted(part)))


def check_bipartition(domain: Domain, part: Iterable[int]) -> bool:
    """Does this particular set A witness the peaked/dipped split?

    Same requirements as find_bipartition, for one candidate instead of
    a scan, so it stays usable above the scan cap.
    """
    if not is_peak_pit(domain):
        raise ValueError("bipartite is defined for peak-pit domains")
    part = frozenset(part)
    whole = set(domain.alternatives)
    if not part <= whole:
        raise ValueError("part must be a subset of the alternatives")
    free = _free_masks(domain)
    for t, mask in free.items():
        inside = sum(1 for x in t if x in part)
        if inside == 3 and not mask & _Q3_CELLS:
            return False
        if inside == 0 and not mask & _Q1_CELLS:
            return False
    rest = whole - part
    return (
        _restriction_size(domain, part) == 1 << max(len(part) - 1, 0)
        and _restriction_size(domain, rest) == 1 << max(len(rest) - 1, 0)
    )


def find_bipartition(domain: Domain) -> Optional[frozenset[int]]:
    """Lexicographically smallest A witnessing a peaked/dipped split.

    Triples inside A need a satisfied never-bottom condition, triples
    inside the complement need never-top; mixed triples are free.  The
    conditions alone are not enough: an Arrow single-peaked domain on k
    alternatives holds at most 2^(k-1) orders, and both restrictions
    must reach that bound.  Without the size requirement almost any
    domain splits, because parts with fewer than three alternatives put
    no constraint on their triples.
    """
    if not is_peak_pit(domain):
        raise ValueError("bipartite is defined for peak-pit domains")
    n = domain.n
    if n > BIPARTITION_N_CAP:
        raise ResourceGuardError(
            f"bipartition scan needs n <= {BIPARTITION_N_CAP}, got n={n}"
        )
    alts = domain.alternatives
    col = {a: i for i, a in enumerate(alts)}
    free = _free_masks(domain)
    bad_nb = []  # triples that cannot sit inside A
    bad_nt = []  # triples that cannot sit inside the complement
    for t, mask in free.items():
        bits = sum(1 << col[x] for x in t)
        if not mask & _Q3_CELLS:
            bad_nb.append(bits)
        if not mask & _Q1_CELLS:
            bad_nt.append(bits)
    subsets = np.arange(1 << n, dtype=np.uint32)
    valid = np.ones(1 << n, dtype=bool)
    for m in bad_nb:
        valid &= (subsets & np.uint32(m)) != np.uint32(m)
    for m in bad_nt:
        valid &= (subsets & np.uint32(m)) != 0
    hits = np.nonzero(valid)[0]
    candidates = sorted(tuple(a for a in alts if h >> col[a] & 1) for h in hits)
    whole = set(alts)
    for cand in candidates:
        part = set(cand)
        rest = whole - part
        if _restriction_size(domain, part) != 1 << max(len(part) - 1, 0):
            continue
        if _restriction_size(domain, rest) != 1 << max(len(rest) - 1, 0):
            continue
        return frozenset(cand)
    return None


def _axis_partition(
    triples: list[tuple[tuple[int, int, int], bool, bool]],
    axis: tuple[int, ...],
) -> Optional[frozenset[int]]:
    pos = {a: i for i, a in enumerate(axis)}
    nb_all: dict[int, bool] = {}
    nt_all: dict[int, bool] = {}
    for t, nb, nt in triples:
        m = sorted(t, key=pos.__getitem__)[1]
        nb_all[m] = nb_all.get(m, True) and nb
        nt_all[m] = nt_all.get(m, True) and nt
        if not (nb_all[m] or nt_all[m]):
            return None
    return frozenset(m for m in nb_all if nb_all[m])


def find_midpoint_bipartition(
    domain: Domain, axis: Optional[Iterable[int]] = None
) -> Optional[tuple[tuple[int, ...], frozenset[int]]]:
    """Axis plus set A: never-bottom on A-midpoint triples, never-top off it.

    With an explicit axis only A is searched; each midpoint is settled
    independently.  Without one, all axes are tried (reversal changes no
    midpoint, so only one of each reversed pair is scanned).
    """
    flags = [
        (t, bool(m & _Q3_CELLS), bool(m & _Q1_CELLS))
        for t, m in _free_masks(domain).items()
    ]
    if axis is not None:
        ax = tuple(axis)
        if sorted(ax) != sorted(domain.alternatives):
            raise ValueError("axis must order exactly the domain's alternatives")
        part = _axis_partition(flags, ax)
        return None if part is None else (ax, part)
    if domain.n > AXIS_SEARCH_N_CAP:
        raise ResourceGuardError(
            f"axis search needs n <= {AXIS_SEARCH_N_CAP}, got n={domain.n}"
        )
    for ax in itertools.permutations(sorted(domain.alternatives)):
        if ax[0] > ax[-1]:
            continue
        part = _axis_partition(flags, ax)
        if part is not None:
            return ax, part
    return None


@dataclass
class AnalysisReport:
    n: int
    size: int
    alternatives: tuple[int, ...]
    is_condorcet: bool
    is_copious: bool
    is_ample: bool
    is_peak_pit: bool
    is_arrow_single_peaked: bool
    is_dual_arrow: bool
    is_connected: bool
    has_maximal_width: bool
    is_unitary: bool
    is_maximal: Optional[bool]
    bipartition: Optional[frozenset[int]]
    midpoint_bipartition: Optional[tuple[tuple[int, ...], frozenset[int]]]
    conditions: dict[tuple[int, int, int], tuple[NeverCondition, ...]]
    skipped: dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = {
            "n": self.n,
            "size": self.size,
            "alternatives": list(self.alternatives),
            "is_condorcet": self.is_condorcet,
            "is_copious": self.is_copious,
            "is_ample": self.is_ample,
            "is_peak_pit": self.is_peak_pit,
            "is_arrow_single_peaked": self.is_arrow_single_peaked,
            "is_dual_arrow": self.is_dual_arrow,
            "is_connected": self.is_connected,
            "has_maximal_width": self.has_maximal_width,
            "is_unitary": self.is_unitary,
            "is_maximal": self.is_maximal,
            "bipartition": sorted(self.bipartition) if self.bipartition is not None else None,
            "midpoint_bipartition": None,
            "conditions": {
                " ".join(map(str, t)): [str(c) for c in cs]
                for t, cs in sorted(self.conditions.items())
            },
            "skipped": dict(sorted(self.skipped.items())),
        }
        if self.midpoint_bipartition is not None:
            ax, part = self.midpoint_bipartition
            d["midpoint_bipartition"] = {"axis": list(ax), "set": sorted(part)}
        return d

    def format_text(self) -> str:
        lines = [f"domain: {self.size} orders on {self.n} alternatives"]
        for name in (
            "is_condorcet", "is_copious", "is_ample", "is_peak_pit",
            "is_arrow_single_peaked", "is_dual_arrow", "is_connected",
            "has_maximal_width", "is_unitary", "is_maximal",
        ):
            if name in self.skipped:
                lines.append(f"{name}: skipped ({self.skipped[name]})")
            else:
                lines.append(f"{name}: {getattr(self, name)}")
        if "bipartition" in self.skipped:
            lines.append(f"bipartition: skipped ({self.skipped['bipartition']})")
        elif self.bipartition is None:
            lines.append("bipartition: none")
        else:
            lines.append("bipartition: " + " ".join(map(str, sorted(self.bipartition))))
        if "midpoint_bipartition" in self.skipped:
            lines.append(
                f"midpoint_bipartition: skipped ({self.skipped['midpoint_bipartition']})"
            )
        elif self.midpoint_bipartition is None:
            lines.append("midpoint_bipartition: none")
        else:
            ax, part = self.midpoint_bipartition
            lines.append(
                "midpoint_bipartition: axis "
                + "".join(map(str, ax))
                + " set "
                + (" ".join(map(str, sorted(part))) or "(empty)")
            )
        lines.append("triples:")
        for t, cs in sorted(self.conditions.items()):
            lines.append(
                "  "
                + " ".join(map(str, t))
                + ": "
                + (" ".join(str(c) for c in cs) or "(none)")
            )
        return "\n".join(lines)


def classify(domain: Domain) -> AnalysisReport:
    """Run every available check, recording the skipped guarded ones."""
    skipped: dict[str, str] = {}
    peak_pit = is_peak_pit(domain)

    maximal: Optional[bool] = None
    if domain.n <= MAXIMALITY_N_CAP:
        maximal = is_maximal(domain)
    else:
        skipped["is_maximal"] = f"n={domain.n} exceeds scan cap {MAXIMALITY_N_CAP}"

    bipartition = None
    if not peak_pit:
        skipped["bipartition"] = "not a peak-pit domain"
    elif domain.n > BIPARTITION_N_CAP:
        skipped["bipartition"] = f"n={domain.n} exceeds scan cap {BIPARTITION_N_CAP}"
    else:
        bipartition = find_bipartition(domain)

    mbb = None
    if domain.n > AXIS_SEARCH_N_CAP:
        skipped["midpoint_bipartition"] = (
            f"n={domain.n} exceeds axis search cap {AXIS_SEARCH_N_CAP}"
        )
    else:
        mbb = find_midpoint_bipartition(domain)

    return AnalysisReport(
        n=domain.n,
        size=len(domain),
        alternatives=domain.alternatives,
        is_condorcet=is_condorcet(domain),
        is_copious=is_copious(domain),
        is_ample=is_ample(domain),
        is_peak_pit=peak_pit,
        is_arrow_single_peaked=is_arrow_single_peaked(domain),
        is_dual_arrow=is_dual_arrow(domain),
        is_connected=is_connected(domain),
        has_maximal_width=has_maximal_width(domain),
        is_unitary=is_unitary(domain),
        is_maximal=maximal,
        bipartition=bipartition,
        midpoint_bipartition=mbb,
        conditions=condition_table(domain),
        skipped=skipped,
    )
