"""Part decomposition of even-scheme domains and the Dyck word bijection.

Orders of the even-scheme domain split into parts by the first point
where the top segment is an initial interval of the alternatives: part
k collects the orders whose top 2k elements are exactly 1..2k and no
shorter even prefix is.  Top segments of part k biject with Dyck words
of half-length k+1, which gives the Catalan convolution for the domain
size.
"""

from __future__ import annotations

from typing import Iterator

from .generate import domain_satisfies
from .model import Domain
from .schemes import set_alternating_scheme
from .sizes import catalan, even_scheme_size


def is_dyck_word(text: str) -> bool:
    if len(text) % 2 or not text:
        return False
    height = 0
    for ch in text:
        if ch == "u":
            height += 1
        elif ch == "d":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


def dyck_words(k: int) -> Iterator[str]:
    """All Dyck words of half-length k, lexicographically (d < u reversed)."""
    def rec(prefix: list[str], ups: int, downs: int) -> Iterator[str]:
        if ups == downs == 0:
            yield "".join(prefix)
            return
        if downs > ups:
            prefix.append("d")
            yield from rec(prefix, ups, downs - 1)
            prefix.pop()
        if ups > 0:
            prefix.append("u")
            yield from rec(prefix, ups - 1, downs)
            prefix.pop()
    yield from rec([], k, k)


def marked_elements(k: int) -> frozenset[int]:
    """The descent letters of a top segment: 1 plus the evens below 2k."""
    return frozenset({1} | set(range(2, 2 * k - 1, 2)))


def part_index(order: tuple[int, ...]) -> int:
    """Smallest k with the top 2k elements equal to {1..2k}."""
    top = 0
    for j in range(0, len(order) - 1, 2):
        top = max(top, order[j], order[j + 1])
        if top == j + 2:
            return (j + 2) // 2
    raise ValueError("order has no initial-interval prefix of even length")


def _require_even_scheme(domain: Domain) -> int:
    n = domain.n
    if n % 2 or n < 2:
        raise ValueError("part decomposition is defined for even n")
    if domain.alternatives != tuple(range(1, n + 1)):
        raise ValueError("part decomposition needs alternatives 1..n")
    if n >= 4:
        scheme = set_alternating_scheme(range(2, n - 1, 2), n)
        if not domain_satisfies(domain, scheme) or len(domain) != even_scheme_size(n):
            raise ValueError("domain is not the even-scheme domain")
    return n


def split_parts(domain: Domain) -> dict[int, Domain]:
    """Partition of the even-scheme domain by part index."""
    n = _require_even_scheme(domain)
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for o in domain:
        buckets.setdefault(part_index(o), []).append(o)
    return {k: Domain(v) for k, v in sorted(buckets.items())}


def part_size_table(n: int) -> list[tuple[int, int]]:
    """(k, C_{k+1} * a(n-2k)) rows; the sizes the parts must have."""
    if n % 2 or n < 2:
        raise ValueError("parts exist for even n only")
    rows = []
    for k in range(1, n // 2 + 1):
        rest = n - 2 * k
        rows.append((k, catalan(k + 1) * (even_scheme_size(rest) if rest else 1)))
    return rows


def mu(prefix: tuple[int, ...] | str, k: int) -> str:
    """Dyck word of a part-k top segment: u, then d exactly on the
    marked elements, then d."""
    if isinstance(prefix, str):
        prefix = tuple(int(ch) for ch in prefix)
    if len(prefix) != 2 * k or set(prefix) != set(range(1, 2 * k + 1)):
        raise ValueError(f"prefix must arrange 1..{2 * k}")
    marked = marked_elements(k)
    word = "u" + "".join("d" if x in marked else "u" for x in prefix) + "d"
    if not is_dyck_word(word):
        raise ValueError(f"prefix {prefix} is not a part-{k} top segment")
    return word


def mu_inverse(word: str) -> tuple[int, ...]:
    """Top segment of a Dyck word: marked elements fill the d positions
    in ascending order, the rest fill the u positions likewise."""
    if not is_dyck_word(word) or len(word) < 2:
        raise ValueError(f"not a Dyck word: {word!r}")
    k = len(word) // 2 - 1
    inner = word[1:-1]
    marked = sorted(marked_elements(k))
    unmarked = sorted(set(range(1, 2 * k + 1)) - set(marked))
    out = []
    mi = ui = 0
    for ch in inner:
        if ch == "d":
            out.append(marked[mi])
            mi += 1
        else:
            out.append(unmarked[ui])
            ui += 1
    return tuple(out)
