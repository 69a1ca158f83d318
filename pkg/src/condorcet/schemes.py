"""Never-condition schemes: a condition assignment for every triple of 1..n.

The central constructor is the set-alternating scheme D_X(A): a triple
(i, j, k) gets 1N3 when its midpoint j belongs to A and 3N1 otherwise.
Fishburn's alternating scheme (2N3 / 2N1 keyed on midpoint parity) is also
provided, along with a plain text file format for arbitrary schemes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .model import NeverCondition, all_triples, as_triple, normalize_generating_set

__all__ = [
    "Scheme",
    "make_scheme",
    "set_alternating_scheme",
    "named_set",
    "fishburn_scheme",
    "read_scheme",
    "write_scheme",
    "NAMED_SET_KINDS",
]

NAMED_SET_KINDS = ("odd", "even", "truncated-even")

NEVER_BOTTOM_FIRST = NeverCondition(1, 3)
NEVER_TOP_LAST = NeverCondition(3, 1)


@dataclass(frozen=True)
class Scheme:
    """Total assignment of nonempty condition sets to the triples of 1..n.

    origin is a display label only and does not participate in equality.
    """

    n: int
    assignment: Mapping[tuple[int, int, int], frozenset[NeverCondition]]
    origin: str | None = field(default=None, compare=False)

    def conditions(self, triple) -> frozenset[NeverCondition]:
        return self.assignment[as_triple(triple)]

    def triples(self):
        return sorted(self.assignment)

    def __repr__(self) -> str:
        tag = f", origin={self.origin!r}" if self.origin else ""
        return f"Scheme(n={self.n}{tag})"


def make_scheme(
    n: int,
    mapping: Mapping[tuple[int, int, int], Iterable[NeverCondition]],
    origin: str | None = None,
) -> Scheme:
    """Validate and freeze a condition assignment. Every triple of 1..n must
    be present with at least one condition."""
    if n < 1:
        raise ValueError("n must be positive")
    assignment: dict[tuple[int, int, int], frozenset[NeverCondition]] = {}
    for t, conds in mapping.items():
        trip = as_triple(t)
        if trip[2] > n:
            raise ValueError(f"triple {trip} outside 1..{n}")
        cs = frozenset(conds)
        if not cs:
            raise ValueError(f"triple {trip} has an empty condition set")
        assignment[trip] = cs
    missing = [t for t in all_triples(n) if t not in assignment]
    if missing:
        head = ", ".join(str(t) for t in missing[:4])
        raise ValueError(f"{len(missing)} triple(s) missing, first: {head}")
    return Scheme(n=n, assignment=assignment, origin=origin)


def set_alternating_scheme(members: Iterable[int], n: int) -> Scheme:
    """Scheme keyed on midpoint membership: 1N3 if the midpoint of the
    ascending triple lies in the set, 3N1 otherwise.

    Membership of 1 and n never matters (no triple has them as midpoint),
    so the set is normalized to {2..n-1} internally.
    """
    if n < 1:
        raise ValueError("n must be positive")
    given = frozenset(int(x) for x in members)
    a = normalize_generating_set(given, n)
    mapping = {
        (i, j, k): (NEVER_BOTTOM_FIRST,) if j in a else (NEVER_TOP_LAST,)
        for i, j, k in all_triples(n)
    }
    label = "{" + ",".join(str(x) for x in sorted(given)) + "}"
    return make_scheme(n, mapping, origin=f"set-alternating {label}")


def named_set(kind: str, n: int) -> frozenset[int]:
    """The reference generating sets.

    odd:            {2} plus the odd numbers 3, 5, ... up to n-3+(n mod 2)
    even:           the even numbers 2, 4, ... up to n-2+(n mod 2)
    truncated-even: for odd n the even numbers up to n-3; for even n the
                    even set with its largest element n-2 removed
    """
    if n < 4:
        raise ValueError("named sets are defined for n >= 4")
    p = n % 2
    if kind == "odd":
        return frozenset({2} | set(range(3, n - 3 + p + 1, 2)))
    if kind == "even":
        return frozenset(range(2, n - 2 + p + 1, 2))
    if kind == "truncated-even":
        if p:
            return frozenset(range(2, n - 3 + 1, 2))
        return named_set("even", n) - {n - 2}
    raise ValueError(f"unknown named set kind {kind!r}, expected one of {NAMED_SET_KINDS}")


def fishburn_scheme(n: int, variant: str = "even") -> Scheme:
    """Alternating scheme keyed on midpoint parity: the middle element is
    never bottom (2N3) when the midpoint parity matches the variant, never
    top (2N1) otherwise."""
    if n < 3:
        raise ValueError("fishburn scheme needs n >= 3")
    if variant not in ("even", "odd"):
        raise ValueError("variant must be 'even' or 'odd'")
    want = 0 if variant == "even" else 1
    mapping = {
        (i, j, k): (NeverCondition(2, 3) if j % 2 == want else NeverCondition(2, 1),)
        for i, j, k in all_triples(n)
    }
    return make_scheme(n, mapping, origin=f"fishburn {variant}")


def read_scheme(text: str) -> Scheme:
    """Parse the plain text scheme format.

    First significant line: 'n <count>'. Then either a single macro line

        set-alternating 2,3,5
        fishburn even

    or one explicit line per condition: '<i> <j> <k> <p>N<q>'. Repeating a
    triple merges the conditions. '#' starts a comment. Explicit schemes
    must cover every triple.
    """
    n: int | None = None
    macro: Scheme | None = None
    mapping: dict[tuple[int, int, int], set[NeverCondition]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if parts[0] == "set-alternating":
            if macro or mapping:
                raise ValueError(f"line {lineno}: macro must be the only content line")
            spec = parts[1] if len(parts) > 1 else ""
            members = [int(x) for x in spec.split(",") if x] if spec else []
            macro = set_alternating_scheme(members, n)
            continue
        if parts[0] == "fishburn":
            if macro or mapping:
                raise ValueError(f"line {lineno}: macro must be the only content line")
            macro = fishburn_scheme(n, parts[1] if len(parts) > 1 else "even")
            continue
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected '<i> <j> <k> <p>N<q>', got {raw!r}")
        try:
            trip = as_triple(tuple(int(x) for x in parts[:3]))
            cond = NeverCondition.parse(parts[3])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if trip[2] > n:
            raise ValueError(f"line {lineno}: triple {trip} outside 1..{n}")
        mapping.setdefault(trip, set()).add(cond)
    if n is None:
        raise ValueError("missing 'n <count>' header")
    if macro is not None:
        return macro
    try:
        return make_scheme(n, mapping)
    except ValueError as exc:
        raise ValueError(f"incomplete scheme: {exc}") from None


def write_scheme(scheme: Scheme) -> str:
    """Serialize with one explicit condition per line, sorted. Round-trips
    through read_scheme regardless of how the scheme was built."""
    lines = [f"n {scheme.n}"]
    for t in scheme.triples():
        for cond in sorted(scheme.assignment[t]):
            lines.append(f"{t[0]} {t[1]} {t[2]} {cond}")
    return "\n".join(lines) + "\n"
