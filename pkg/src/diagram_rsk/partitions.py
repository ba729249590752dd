"""Integer partitions: containment, box moves, hook counts, and index sets.

Partitions are plain tuples of weakly decreasing positive ints; () is the
empty partition. All functions treat them as immutable values.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

Partition = tuple[int, ...]

EMPTY: Partition = ()


def validate_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize to a tuple, stripping trailing zeros; reject bad shapes."""
    p = tuple(int(v) for v in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, v in enumerate(p):
        if v <= 0:
            raise ValueError(f"partition parts must be positive, got {v} in {p}")
        if i and p[i - 1] < v:
            raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the text form: comma-separated parts, '-' for the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition text {text!r}") from None
    return validate_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(v) for v in p) if p else "-"


def contains(mu: Partition, lam: Partition) -> bool:
    """True when mu fits inside lam componentwise (missing parts read as 0)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def boxes_added(mu: Partition, lam: Partition) -> int:
    """Number of boxes of the skew shape lam/mu; requires mu inside lam."""
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    return sum(lam) - sum(mu)


def addable_boxes(lam: Partition) -> list[tuple[int, Partition]]:
    """All (row, result) pairs obtained by adding one box to lam; rows 1-based."""
    out = []
    for r in range(1, len(lam) + 1):
        if r == 1 or lam[r - 2] > lam[r - 1]:
            out.append((r, lam[: r - 1] + (lam[r - 1] + 1,) + lam[r:]))
    out.append((len(lam) + 1, lam + (1,)))
    return out


def removable_boxes(lam: Partition) -> list[tuple[int, Partition]]:
    """All (row, result) pairs obtained by removing one box from lam."""
    out = []
    for r in range(1, len(lam) + 1):
        if r == len(lam) or lam[r - 1] > lam[r]:
            smaller = lam[: r - 1] + (lam[r - 1] - 1,) + lam[r:]
            out.append((r, validate_partition(smaller)))
    return out


def union(mu: Partition, nu: Partition) -> Partition:
    """Componentwise maximum."""
    n = max(len(mu), len(nu))
    mu_ = mu + (0,) * (n - len(mu))
    nu_ = nu + (0,) * (n - len(nu))
    return tuple(max(a, b) for a, b in zip(mu_, nu_))


def intersection(mu: Partition, nu: Partition) -> Partition:
    """Componentwise minimum."""
    return validate_partition(min(a, b) for a, b in zip(mu, nu))


def f_lambda(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook-length formula."""
    n = sum(lam)
    if n == 0:
        return 1
    cols = [0] * lam[0]
    for v in lam:
        for j in range(v):
            cols[j] += 1
    hooks = 1
    for i, v in enumerate(lam):
        for j in range(v):
            hooks *= (v - j) + (cols[j] - i) - 1
    return math.factorial(n) // hooks


def star(lam: Partition) -> Partition:
    """Drop the first part."""
    return lam[1:]


def bar(lam: Partition, n: int) -> Partition:
    """Prepend the part n - |lam|; inverse of star on partitions of n."""
    first = n - sum(lam)
    if lam and first < lam[0]:
        raise ValueError(f"bar({lam}, {n}) is not weakly decreasing")
    if first < 0:
        raise ValueError(f"bar({lam}, {n}): first part would be negative")
    if first == 0:
        return lam  # only hit when lam is empty and n = 0
    return (first,) + lam


def in_lambda_nk(lam: Partition, n: int, k: int) -> bool:
    """Membership test: lam is a partition of n with at most k boxes below row 1."""
    if sum(lam) != n:
        return False
    first = lam[0] if lam else 0
    return sum(lam) - first <= k


def partitions_of(m: int) -> Iterator[Partition]:
    """All partitions of m, in lexicographically descending order."""
    if m == 0:
        yield EMPTY
        return

    def rec(remaining: int, cap: int, prefix: Partition) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - first, first, prefix + (first,))

    yield from rec(m, m, EMPTY)


def enumerate_gamma(k: int) -> list[Partition]:
    """All partitions with at most k boxes, ordered by size then lex descending."""
    return [p for size in range(k + 1) for p in partitions_of(size)]
