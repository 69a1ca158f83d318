"""Core model: linear orders, triples, never conditions, and domains.

Orders are tuples of alternative labels, best alternative first. A Domain
holds a canonical (lexicographically sorted, duplicate free) collection of
orders over a fixed alternative set, backed by a compact uint8 matrix so
that large domains stay cheap to store and to project. Restrictions keep
the original labels, which lets structure detectors track alternative
identity across projections instead of losing it to relabeling.

A never condition pNq is positional: the triple (i, j, k) is always taken
in ascending label order, p picks one of the three elements (1 the
smallest), and q is the forbidden local rank (1 the best). So 1N3 reads
"the smallest element of the triple is never ranked last among the three"
and 3N1 reads "the largest is never ranked first".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "ResourceGuardError",
    "NeverCondition",
    "Domain",
    "all_triples",
    "as_triple",
    "parse_order",
    "order_string",
    "restrict_order",
    "restrict_domain",
    "dual_domain",
    "reverse_complement",
    "normalize_generating_set",
    "satisfied_conditions",
    "triple_pattern_table",
    "load_domain",
    "dump_domain",
    "TRIPLE_PATTERNS",
    "PATTERN_CELL_MASKS",
    "ALL_CELLS_MASK",
    "CYCLIC_CLASS_IDS",
]


class ResourceGuardError(RuntimeError):
    """Raised when an operation would exceed its built-in size guard."""


@dataclass(frozen=True, order=True)
class NeverCondition:
    """Positional never condition pNq on the ascending triple axis.

    pos: which element of the ascending triple is constrained (1..3).
    rank: the local rank that element never takes (1..3, best first).
    """

    pos: int
    rank: int

    def __post_init__(self) -> None:
        if self.pos not in (1, 2, 3) or self.rank not in (1, 2, 3):
            raise ValueError(f"condition out of range: {self.pos}N{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "NeverCondition":
        t = text.strip().upper()
        if len(t) != 3 or t[1] != "N" or not t[0].isdigit() or not t[2].isdigit():
            raise ValueError(f"malformed never condition {text!r}, expected e.g. 1N3")
        return cls(int(t[0]), int(t[2]))

    def __str__(self) -> str:
        return f"{self.pos}N{self.rank}"

    @property
    def kind(self) -> str:
        """Value-form name: what the constrained element never is."""
        return ("never-top", "never-middle", "never-bottom")[self.rank - 1]

    def element_of(self, triple: Sequence[int]) -> int:
        return triple[self.pos - 1]


# The six relative arrangements of an ascending triple (i, j, k), encoded as
# local ranks (rank_i, rank_j, rank_k). The tuple index is the pattern id.
TRIPLE_PATTERNS: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (2, 3, 1),
    (3, 1, 2),
    (3, 2, 1),
)

_PATTERN_ID: dict[tuple[int, int, int], int] = {p: i for i, p in enumerate(TRIPLE_PATTERNS)}


def _cell_bit(pos: int, rank: int) -> int:
    return 1 << (3 * (pos - 1) + (rank - 1))


# pattern id -> 9-bit mask of the (pos, rank) cells that pattern occupies
PATTERN_CELL_MASKS: tuple[int, ...] = tuple(
    _cell_bit(1, p[0]) | _cell_bit(2, p[1]) | _cell_bit(3, p[2]) for p in TRIPLE_PATTERNS
)

ALL_CELLS_MASK = (1 << 9) - 1

# The two cyclic pattern classes: a triple restriction admits no never
# condition exactly when it contains one of these classes in full.
CYCLIC_CLASS_IDS: tuple[frozenset[int], ...] = (
    frozenset({_PATTERN_ID[(1, 2, 3)], _PATTERN_ID[(3, 1, 2)], _PATTERN_ID[(2, 3, 1)]}),
    frozenset({_PATTERN_ID[(1, 3, 2)], _PATTERN_ID[(2, 1, 3)], _PATTERN_ID[(3, 2, 1)]}),
)


def condition_cell_bit(cond: NeverCondition) -> int:
    """Bit of the 9-cell occupancy mask that cond forbids."""
    return _cell_bit(cond.pos, cond.rank)


def as_triple(t: Sequence[int]) -> tuple[int, int, int]:
    trip = tuple(int(x) for x in t)
    if len(trip) != 3 or not (trip[0] < trip[1] < trip[2]):
        raise ValueError(f"not an ascending triple: {t!r}")
    return trip


def all_triples(alternatives: Sequence[int] | int) -> Iterator[tuple[int, int, int]]:
    """Ascending triples over an alternative set (or over 1..n for an int)."""
    if isinstance(alternatives, int):
        alternatives = range(1, alternatives + 1)
    return combinations(sorted(alternatives), 3)


def parse_order(text: str) -> tuple[int, ...]:
    """Parse '6 5 2 3 1 4' or compact '652314' (single digits only)."""
    parts = text.split()
    if len(parts) == 1 and len(parts[0]) > 1 and parts[0].isdigit():
        return tuple(int(c) for c in parts[0])
    return tuple(int(p) for p in parts)


def order_string(order: Sequence[int]) -> str:
    if order and max(order) > 9:
        return " ".join(str(x) for x in order)
    return "".join(str(x) for x in order)


class Domain:
    """Canonical set of linear orders over a fixed alternative set.

    Rows of the backing matrix are orders, best alternative first, sorted
    lexicographically with duplicates removed. The alternative set defaults
    to 1..n; restrictions produce domains whose alternatives are a subset
    of the original labels.
    """

    __slots__ = ("_arr", "_alternatives", "_ranks", "_byteset")

    def __init__(
        self,
        orders: Iterable[Sequence[int]] | np.ndarray,
        alternatives: Sequence[int] | None = None,
    ) -> None:
        if isinstance(orders, np.ndarray):
            arr = orders.astype(np.uint8, copy=True)
            if arr.ndim != 2:
                raise ValueError("order matrix must be two dimensional")
        else:
            rows = [tuple(o) for o in orders]
            if rows:
                width = len(rows[0])
                arr = np.array(rows, dtype=np.uint8).reshape(len(rows), width)
            else:
                arr = np.empty((0, 0 if alternatives is None else len(alternatives)), dtype=np.uint8)
        if alternatives is None:
            if arr.shape[0] == 0:
                raise ValueError("empty domain needs an explicit alternative set")
            alternatives = tuple(int(x) for x in sorted(arr[0].tolist()))
        alts = tuple(int(x) for x in sorted(alternatives))
        if len(set(alts)) != len(alts):
            raise ValueError("duplicate alternatives")
        if any(a < 1 or a > 255 for a in alts):
            raise ValueError("alternative labels must lie in 1..255")
        if arr.shape[0] and arr.shape[1] != len(alts):
            raise ValueError("order length does not match the alternative count")
        ref = np.array(alts, dtype=np.uint8)
        if arr.shape[0] and not np.array_equal(np.sort(arr, axis=1), np.tile(ref, (arr.shape[0], 1))):
            bad = next(
                tuple(int(v) for v in row)
                for row in arr
                if tuple(sorted(row.tolist())) != alts
            )
            raise ValueError(f"not a permutation of the alternatives: {bad}")
        if arr.shape[0]:
            arr = np.unique(arr, axis=0)
        arr.setflags(write=False)
        self._arr = arr
        self._alternatives = alts
        self._ranks: np.ndarray | None = None
        self._byteset: frozenset[bytes] | None = None

    @classmethod
    def _from_canonical(cls, arr: np.ndarray, alternatives: Sequence[int]) -> "Domain":
        """Wrap an already sorted, duplicate-free uint8 matrix without checks."""
        self = object.__new__(cls)
        a = arr if arr.dtype == np.uint8 else arr.astype(np.uint8)
        a.setflags(write=False)
        self._arr = a
        self._alternatives = tuple(int(x) for x in alternatives)
        self._ranks = None
        self._byteset = None
        return self

    @property
    def n(self) -> int:
        """Ambient size: how many alternatives the orders rank."""
        return len(self._alternatives)

    @property
    def alternatives(self) -> tuple[int, ...]:
        return self._alternatives

    @property
    def matrix(self) -> np.ndarray:
        """Read-only (m, n) uint8 view of the orders."""
        return self._arr

    def __len__(self) -> int:
        return self._arr.shape[0]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for row in self._arr:
            yield tuple(int(x) for x in row)

    def __contains__(self, order: Sequence[int]) -> bool:
        key = bytes(bytearray(int(x) for x in order))
        if self._byteset is None:
            self._byteset = frozenset(self._arr.tobytes()[i : i + self.n] for i in range(0, self._arr.size, self.n)) if self.n else frozenset()
        return key in self._byteset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Domain):
            return NotImplemented
        return self._alternatives == other._alternatives and np.array_equal(self._arr, other._arr)

    def __hash__(self) -> int:
        return hash((self._alternatives, self._arr.tobytes()))

    def __repr__(self) -> str:
        return f"Domain(n={self.n}, size={len(self)})"

    def orders(self) -> list[tuple[int, ...]]:
        return list(self)

    def ranks(self) -> np.ndarray:
        """(m, n) int8 matrix: ranks()[r, c] is the position (0 based) of
        alternatives[c] in order r. Cached; the workhorse for triple scans."""
        if self._ranks is None:
            if len(self) == 0:
                self._ranks = np.empty((0, self.n), dtype=np.int8)
            else:
                # compact labels to 0..n-1 columns, then invert each row
                idx = np.searchsorted(np.array(self._alternatives, dtype=np.uint8), self._arr)
                r = np.empty_like(idx, dtype=np.int8)
                np.put_along_axis(r, idx, np.arange(self.n, dtype=np.int8)[None, :], axis=1)
                r.setflags(write=False)
                self._ranks = r
        return self._ranks

    def column_of(self, alternative: int) -> int:
        return self._alternatives.index(alternative)

    def restrict(self, members: Iterable[int]) -> "Domain":
        return restrict_domain(self, members)

    def dual(self) -> "Domain":
        return dual_domain(self)

    def relabel(self, mapping: dict[int, int]) -> "Domain":
        """Apply a bijection on alternative labels and recanonicalize."""
        if sorted(mapping) != list(self._alternatives):
            raise ValueError("mapping must cover exactly the alternatives")
        lut = np.zeros(256, dtype=np.uint8)
        for a, b in mapping.items():
            lut[a] = b
        return Domain(lut[self._arr], alternatives=sorted(mapping.values()))

    def is_identity_member(self) -> bool:
        """Does the ascending order of the alternatives belong to the domain?"""
        return tuple(self._alternatives) in self


def restrict_order(order: Sequence[int], members: Iterable[int]) -> tuple[int, ...]:
    """Project an order onto a nonempty subset of its alternatives.

    Relative positions are preserved and the original labels are kept.
    """
    keep = set(members)
    if not keep:
        raise ValueError("cannot restrict to an empty set")
    missing = keep.difference(order)
    if missing:
        raise ValueError(f"not alternatives of this order: {sorted(missing)}")
    return tuple(x for x in order if x in keep)


def restrict_domain(domain: Domain, members: Iterable[int]) -> Domain:
    keep = sorted(set(members))
    if not keep:
        raise ValueError("cannot restrict to an empty set")
    if not set(keep).issubset(domain.alternatives):
        extra = sorted(set(keep) - set(domain.alternatives))
        raise ValueError(f"not alternatives of this domain: {extra}")
    if len(domain) == 0:
        return Domain([], alternatives=keep)
    mask = np.isin(domain.matrix, np.array(keep, dtype=np.uint8))
    vals = domain.matrix[mask].reshape(len(domain), len(keep))
    return Domain(np.unique(vals, axis=0), alternatives=keep)


def dual_domain(domain: Domain) -> Domain:
    """Reverse every order. An involution that preserves the size."""
    if len(domain) == 0:
        return domain
    return Domain(np.unique(domain.matrix[:, ::-1], axis=0), alternatives=domain.alternatives)


def reverse_complement(members: Iterable[int], n: int, normalize: bool = False) -> frozenset[int]:
    """Mirror image of a generating set: n+1-x over the complement in 1..n.

    With normalize=True the result is clipped to the meaningful midpoint
    window {2..n-1}.
    """
    a = set(members)
    if any(x < 1 or x > n for x in a):
        raise ValueError(f"members outside 1..{n}")
    out = {n + 1 - x for x in range(1, n + 1) if x not in a}
    if normalize:
        out = {x for x in out if 2 <= x <= n - 1}
    return frozenset(out)


def normalize_generating_set(members: Iterable[int], n: int) -> frozenset[int]:
    """Clip a generating set to {2..n-1}; membership of 1 and n is inert."""
    return frozenset(x for x in members if 2 <= x <= n - 1)


def _pattern_ids_for_triple(domain: Domain, triple: tuple[int, int, int]) -> frozenset[int]:
    r = domain.ranks()
    if len(domain) == 0:
        return frozenset()
    i, j, k = (domain.column_of(a) for a in triple)
    a, b, c = r[:, i].astype(np.int16), r[:, j].astype(np.int16), r[:, k].astype(np.int16)
    ri = 1 + (a > b).astype(np.int16) + (a > c)
    ids = (ri - 1) * 2 + (b > c)
    return frozenset(int(x) for x in np.unique(ids))


def triple_pattern_table(domain: Domain) -> dict[tuple[int, int, int], frozenset[int]]:
    """For every ascending triple, the set of pattern ids present in the
    restriction. Pattern ids index TRIPLE_PATTERNS."""
    return {t: _pattern_ids_for_triple(domain, t) for t in all_triples(domain.alternatives)}


def satisfied_conditions(domain: Domain, triple: Sequence[int]) -> frozenset[NeverCondition]:
    """All never conditions pNq that the restriction to the triple satisfies,
    i.e. no order of the domain puts the triple's p-th element at local rank q."""
    t = as_triple(triple)
    occupied = 0
    for pid in _pattern_ids_for_triple(domain, t):
        occupied |= PATTERN_CELL_MASKS[pid]
    return frozenset(
        NeverCondition(p, q)
        for p in (1, 2, 3)
        for q in (1, 2, 3)
        if not occupied & _cell_bit(p, q)
    )


def load_domain(text: str) -> Domain:
    """Parse the plain text domain format.

    First significant line: 'n <count>'. Every further line is one order,
    space separated, best alternative first. '#' starts a comment.
    """
    n: int | None = None
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        try:
            order = tuple(int(p) for p in line.split())
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if sorted(order) != list(range(1, n + 1)):
            raise ValueError(f"line {lineno}: not a permutation of 1..{n}: {line!r}")
        rows.append(order)
    if n is None:
        raise ValueError("missing 'n <count>' header")
    return Domain(rows, alternatives=range(1, n + 1))


def dump_domain(domain: Domain) -> str:
    """Serialize to the plain text domain format (canonical order)."""
    if domain.alternatives != tuple(range(1, domain.n + 1)):
        raise ValueError("only domains over 1..n can be serialized; relabel first")
    lines = [f"n {domain.n}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in domain.matrix)
    return "\n".join(lines) + "\n"
