"""Cardinality formulas for set-alternating domains.

Everything here works with the defining set A only; no domain is ever
materialized.  Counts are exact Python ints, so they stay correct far
beyond the range where enumeration is feasible.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable


def _norm(members: Iterable[int], n: int) -> int:
    """Pack {m in A : 2 <= m <= n-1} into a bitmask, bit m-2 for member m.

    Integer keys keep the memo compact when a scan touches every subset.
    """
    mask = 0
    for m in set(members):
        if 2 <= m <= n - 1:
            mask |= 1 << (m - 2)
    return mask


def _clip(mask: int, n: int) -> int:
    return mask & ((1 << max(n - 2, 0)) - 1)


@lru_cache(maxsize=None)
def _size(n: int, mask: int) -> int:
    if n <= 1:
        return 1
    if n == 2:
        return 2
    if not mask:
        return 1 << (n - 1)
    w = mask.bit_length() + 1  # largest member
    if w == n - 1:
        return 2 * _size(n - 1, _clip(mask ^ (1 << (w - 2)), n - 1))
    rest = mask ^ (1 << (w - 2))
    total = 2 * _size(n - 1, _clip(mask, n - 1)) + _size(n - 1, _clip(rest, n - 1))
    for j in range(w - 1, n - 1):
        total -= _size(j, _clip(rest, j))
    return total


def size_recursive(members: Iterable[int], n: int) -> int:
    """|D_A(n)| by recursion on the largest element of A."""
    if n < 1:
        raise ValueError("n must be positive")
    return _size(n, _norm(members, n))


def size_single_closed(k: int, n: int, anchored: bool = False) -> int:
    """|D_{{k}}(n)| in closed form: 5*2^(n-3) - 2^(k-2).

    With anchored=True the singleton is n-k instead, i.e. k counts down
    from the top alternative.  Outside 2 <= k <= n-1 the set normalizes
    to empty and the count is 2^(n-1); the formula itself already agrees
    with that at k = n-1.
    """
    if anchored:
        k = n - k
    if n < 3 or not 2 <= k <= n - 1:
        return 1 << (n - 1)
    return 5 * (1 << (n - 3)) - (1 << (k - 2))


def half_set(n: int) -> frozenset[int]:
    """The lower-half positions {2, ..., n/2}; n must be even."""
    if n % 2:
        raise ValueError("half_set needs even n")
    return frozenset(range(2, n // 2 + 1))


def size_half_set(n: int) -> int:
    """|D_A(n)| for even n with A = {2, ..., n/2}, in closed form."""
    if n % 2:
        raise ValueError("size_half_set needs even n")
    if n == 2:
        return 2
    h = n // 2
    total = 1 << (n - 1)
    for i in range(1, h):
        for j in range(1, h):
            total += comb(i + j - 2, i - 1) << (n - i - j - 2)
    return total


def size_suffix_set(k: int, n: int) -> int:
    """|D_A(n)| with A = {k, k+1, ..., n-1}: always 2^(n-1)."""
    if k < 2 or k > n - 1:
        raise ValueError("suffix must start inside {2..n-1}")
    return 1 << (n - 1)


def fib_common_size(n: int) -> int:
    """Size of the common part of all set-alternating domains on n."""
    if n < 1:
        raise ValueError("n must be positive")
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


@lru_cache(maxsize=None)
def _w(m: int) -> int:
    # convolution over the length of the first return to the diagonal
    if m == 0:
        return 1
    return sum(catalan(k + 1) * _w(m - k) for k in range(1, m + 1))


def even_scheme_size(n: int) -> int:
    """|D_{A_n}(n)| where A_n is the full set of even positions."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    if n % 2 == 0:
        return _w(n // 2)
    return 2 * even_scheme_size(n - 1)


def even_scheme_size_is_odd(n: int) -> bool:
    """Parity of even_scheme_size: odd exactly at n = 1 and n = 2^t, t > 1."""
    if n == 1:
        return True
    if n < 4:
        return False
    return n & (n - 1) == 0


def growth_report(n_max: int) -> list[tuple[int, int, float]]:
    """(n, a(n), a(n)/a(n-2)) rows; the ratio tends to 2 + 2*sqrt(2)."""
    rows = []
    for n in range(3, n_max + 1):
        rows.append((n, even_scheme_size(n), even_scheme_size(n) / even_scheme_size(n - 2)))
    return rows
