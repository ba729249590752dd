"""Set-partition diagrams on two rows of k vertices.

A diagram is a set partition of {1,...,k, 1',...,k'}. Internally vertices
carry standard one-row labels: vertex j keeps j and vertex j' becomes
2k - j + 1, so the bottom row is read right to left. The standard
representation joins consecutive members of each block by an arc, which is
what the insertion machinery consumes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import combinations, permutations
from typing import Iterator, Optional


class ResourceLimitError(ValueError):
    """Raised when an exhaustive enumeration exceeds the configured limit."""


FAMILIES = ("A", "S", "B", "R", "P", "T", "PR", "half_A")

# Default exhaustive-enumeration bounds, overridable with force=True.
ENUM_LIMITS = {
    "A": 5, "P": 5, "half_A": 5,
    "B": 7, "T": 7,
    "R": 6, "PR": 7,
    "S": 8,
}


@dataclass(frozen=True)
class SetPartitionDiagram:
    """Canonical form: blocks of standard labels, each sorted, ordered by min."""

    k: int
    blocks: tuple[tuple[int, ...], ...]
    half: bool = False

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        seen: set[int] = set()
        prev = None
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError(f"block {block} is not sorted")
            if prev is not None and block[0] < prev:
                raise ValueError("blocks are not ordered by minimum")
            prev = block[0]
            seen.update(block)
        if seen != set(range(1, 2 * self.k + 1)) or sum(map(len, self.blocks)) != 2 * self.k:
            raise ValueError(f"blocks do not partition 1..{2 * self.k}")
        if self.half:
            if self.k < 1:
                raise ValueError("half flag needs k >= 1")
            if self.k + 1 not in self._block_of(self.k):
                raise ValueError(f"half diagram requires {self.k} and {self.k + 1} in one block")

    def _block_of(self, v: int) -> tuple[int, ...]:
        for block in self.blocks:
            if v in block:
                return block
        raise ValueError(f"vertex {v} not found")

    @classmethod
    def from_standard_blocks(cls, k, blocks, half=False) -> "SetPartitionDiagram":
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return cls(k, canon, half)

    @classmethod
    def from_primed_blocks(cls, k, blocks, half=False) -> "SetPartitionDiagram":
        """Build from blocks over {1..k, "1'".."k'"} as in two-row pictures."""
        std_blocks = []
        for block in blocks:
            std = []
            for v in block:
                if isinstance(v, str):
                    if not v.endswith("'"):
                        raise ValueError(f"bad primed vertex {v!r}")
                    j = int(v[:-1])
                    if not 1 <= j <= k:
                        raise ValueError(f"primed vertex {v!r} out of range 1..{k}")
                    std.append(2 * k - j + 1)
                else:
                    if not 1 <= v <= k:
                        raise ValueError(f"vertex {v} out of range 1..{k}")
                    std.append(v)
            std_blocks.append(std)
        return cls.from_standard_blocks(k, std_blocks, half)

    def to_primed_blocks(self) -> list[list]:
        """Blocks in original coordinates: ints on top, "j'" strings below."""
        out = []
        for block in self.blocks:
            out.append([v if v <= self.k else f"{2 * self.k - v + 1}'" for v in block])
        return out

    def to_text(self) -> str:
        return " | ".join(" ".join(str(v) for v in block) for block in self.to_primed_blocks())

    def to_json(self) -> dict:
        return {"k": self.k, "half": self.half, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict) -> "SetPartitionDiagram":
        return cls.from_standard_blocks(obj["k"], obj["blocks"], obj.get("half", False))


_TOKEN = re.compile(r"\S+")


def parse_diagram(text: str, half: bool = False) -> SetPartitionDiagram:
    """Parse "1 3 4' | 2 1' | 4 3' 2'"; k is inferred from the labels."""
    raw_blocks: list[list[tuple[int, bool]]] = [[]]
    top_max = 0
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok == "|":
            if not raw_blocks[-1]:
                raise ValueError(f"column {m.start() + 1}: empty block")
            raw_blocks.append([])
            continue
        primed = tok.endswith("'")
        body = tok[:-1] if primed else tok
        if not body.isdigit() or int(body) < 1:
            raise ValueError(f"column {m.start() + 1}: bad vertex token {tok!r}")
        j = int(body)
        top_max = max(top_max, j)
        raw_blocks[-1].append((j, primed))
    if raw_blocks == [[]]:
        raise ValueError("empty diagram text")
    k = top_max
    blocks = [[f"{j}'" if primed else j for j, primed in blk] for blk in raw_blocks]
    return SetPartitionDiagram.from_primed_blocks(k, blocks, half)


def identity_diagram(k: int) -> SetPartitionDiagram:
    return SetPartitionDiagram.from_standard_blocks(k, [(i, 2 * k + 1 - i) for i in range(1, k + 1)])


def singletons_diagram(k: int) -> SetPartitionDiagram:
    return SetPartitionDiagram.from_standard_blocks(k, [(v,) for v in range(1, 2 * k + 1)])


def standard_edges(d: SetPartitionDiagram) -> frozenset[tuple[int, int]]:
    """Nearest-neighbor arcs of the one-row representation."""
    edges = set()
    for block in d.blocks:
        for u, v in zip(block, block[1:]):
            edges.add((u, v))
    return frozenset(edges)


@dataclass(frozen=True)
class InsertionSequence:
    """Edge-label schedule read off a diagram's one-row representation.

    slots[s] is the entry at doubled index s + 1, so the slots alternate
    half-integer (deletion) and integer (insertion) positions
    1/2, 1, 3/2, ..., 2k. A slot holds an edge label or None.
    """

    k: int
    slots: tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.slots) != 4 * self.k:
            raise ValueError(f"expected {4 * self.k} slots, got {len(self.slots)}")
        inserted: dict[int, int] = {}
        deleted: dict[int, int] = {}
        for s, label in enumerate(self.slots):
            if label is None:
                continue
            if not 1 <= label <= 2 * self.k - 1:
                raise ValueError(f"edge label {label} out of range")
            book = inserted if s % 2 == 1 else deleted
            if label in book:
                raise ValueError(f"label {label} repeated")
            book[label] = s
        if set(inserted) != set(deleted):
            raise ValueError("unmatched insertion/deletion labels")
        for label, s_ins in inserted.items():
            s_del = deleted[label]
            if s_ins >= s_del:
                raise ValueError(f"label {label} deleted before inserted")
            # deletion slot s_del is vertex (s_del + 2) / 2; the label rule
            # forces label = 2k + 1 - right endpoint
            right = (s_del + 2) // 2
            if label != 2 * self.k + 1 - right:
                raise ValueError(f"label {label} inconsistent with right endpoint {right}")

    def insertion_at(self, j: int) -> Optional[int]:
        """Entry at integer index j (vertex j as a left endpoint)."""
        return self.slots[2 * j - 1]

    def deletion_at(self, j: int) -> Optional[int]:
        """Entry at index j - 1/2 (vertex j as a right endpoint)."""
        return self.slots[2 * j - 2]


def insertion_sequence(d: SetPartitionDiagram) -> InsertionSequence:
    slots: list[Optional[int]] = [None] * (4 * d.k)
    for u, v in standard_edges(d):
        label = 2 * d.k + 1 - v
        slots[2 * u - 1] = label
        slots[2 * v - 2] = label
    return InsertionSequence(d.k, tuple(slots))


def diagram_from_insertion_sequence(seq: InsertionSequence, half: bool = False) -> SetPartitionDiagram:
    """Rebuild the diagram whose one-row edges are scheduled by seq."""
    k = seq.k
    parent = list(range(2 * k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j in range(1, 2 * k + 1):
        label = seq.insertion_at(j)
        if label is not None:
            right = 2 * k + 1 - label
            parent[find(j)] = find(right)
    groups: dict[int, list[int]] = {}
    for v in range(1, 2 * k + 1):
        groups.setdefault(find(v), []).append(v)
    return SetPartitionDiagram.from_standard_blocks(k, groups.values(), half)


def propagating_number(d: SetPartitionDiagram) -> int:
    """Number of blocks meeting both the top row and the bottom row."""
    return sum(1 for b in d.blocks if b[0] <= d.k < b[-1])


def compose(d1: SetPartitionDiagram, d2: SetPartitionDiagram) -> tuple[SetPartitionDiagram, int]:
    """Stack d1 over d2; return the induced diagram and the number of
    connected components removed from the middle row."""
    if d1.k != d2.k or d1.half != d2.half:
        raise ValueError("diagrams must share k and the half flag")
    k = d1.k
    # nodes: 1..k top, k+1..2k middle, 2k+1..3k bottom
    parent = list(range(3 * k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def join(a, b):
        parent[find(a)] = find(b)

    for block in d1.blocks:
        nodes = [v if v <= k else k + (2 * k - v + 1) for v in block]
        for a, b in zip(nodes, nodes[1:]):
            join(a, b)
    for block in d2.blocks:
        nodes = [k + v if v <= k else 2 * k + (2 * k - v + 1) for v in block]
        for a, b in zip(nodes, nodes[1:]):
            join(a, b)

    groups: dict[int, list[int]] = {}
    for node in range(1, 3 * k + 1):
        groups.setdefault(find(node), []).append(node)
    blocks = []
    removed = 0
    for nodes in groups.values():
        outer = [n for n in nodes if n <= k or n > 2 * k]
        if not outer:
            removed += 1
            continue
        block = [n if n <= k else 2 * k + 1 - (n - 2 * k) for n in outer]
        blocks.append(block)
    return SetPartitionDiagram.from_standard_blocks(k, blocks, d1.half), removed


def flip(d: SetPartitionDiagram) -> SetPartitionDiagram:
    """Reflect over the horizontal axis: standard label v becomes 2k + 1 - v."""
    m = 2 * d.k + 1
    return SetPartitionDiagram.from_standard_blocks(
        d.k, [[m - v for v in block] for block in d.blocks], d.half
    )


def is_planar(d: SetPartitionDiagram) -> bool:
    """No two one-row arcs (a,b), (c,d) interleave as a < c < b < d."""
    edges = sorted(standard_edges(d))
    for i, (a, b) in enumerate(edges):
        for c, dd in edges[i + 1:]:
            if c >= b:
                break
            if a < c < b < dd:
                return False
    return True


def is_permutation(d: SetPartitionDiagram) -> bool:
    return propagating_number(d) == d.k


def is_brauer(d: SetPartitionDiagram) -> bool:
    return all(len(b) == 2 for b in d.blocks)


def is_rook(d: SetPartitionDiagram) -> bool:
    k = d.k
    return all(
        sum(1 for v in b if v <= k) <= 1 and sum(1 for v in b if v > k) <= 1
        for b in d.blocks
    )


def is_temperley_lieb(d: SetPartitionDiagram) -> bool:
    return is_brauer(d) and is_planar(d)


def is_planar_rook(d: SetPartitionDiagram) -> bool:
    return is_rook(d) and is_planar(d)


def in_ideal(d: SetPartitionDiagram, t: int) -> bool:
    return propagating_number(d) <= t


def _set_partitions(n: int) -> Iterator[list[list[int]]]:
    """Set partitions of {1..n} in restricted-growth-string order."""
    if n == 0:
        yield []
        return
    assign = [0] * n

    def rec(i: int, nblocks: int) -> Iterator[list[list[int]]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for v, b in enumerate(assign):
                blocks[b].append(v + 1)
            yield blocks
            return
        for b in range(nblocks + 1):
            assign[i] = b
            yield from rec(i + 1, max(nblocks, b + 1))

    yield from rec(0, 0)


def _perfect_matchings(vertices: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for sub in _perfect_matchings(remaining):
            yield [(first, partner)] + sub


def enumerate_diagrams(k: int, family: str = "A", force: bool = False) -> Iterator[SetPartitionDiagram]:
    """Yield every member of the family exactly once, in a deterministic order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not force and k > ENUM_LIMITS[family]:
        raise ResourceLimitError(
            f"enumerating {family} at k={k} exceeds the default limit "
            f"{ENUM_LIMITS[family]}; pass force=True to override"
        )
    if family in ("A", "P", "half_A"):
        for blocks in _set_partitions(2 * k):
            d = SetPartitionDiagram.from_standard_blocks(k, blocks)
            if family == "P" and not is_planar(d):
                continue
            if family == "half_A":
                if k + 1 not in d._block_of(k):
                    continue
                d = replace(d, half=True)
            yield d
    elif family == "S":
        for perm in permutations(range(1, k + 1)):
            yield SetPartitionDiagram.from_standard_blocks(
                k, [(i, 2 * k + 1 - perm[i - 1]) for i in range(1, k + 1)]
            )
    elif family in ("B", "T"):
        for pairs in _perfect_matchings(list(range(1, 2 * k + 1))):
            d = SetPartitionDiagram.from_standard_blocks(k, pairs)
            if family == "T" and not is_planar(d):
                continue
            yield d
    elif family in ("R", "PR"):
        bottoms = list(range(k + 1, 2 * k + 1))
        for size in range(k + 1):
            for tops in combinations(range(1, k + 1), size):
                for bots in combinations(bottoms, size):
                    for image in permutations(bots):
                        paired = set(tops) | set(bots)
                        blocks = [list(p) for p in zip(tops, image)]
                        blocks += [[v] for v in range(1, 2 * k + 1) if v not in paired]
                        d = SetPartitionDiagram.from_standard_blocks(k, blocks)
                        if family == "PR" and not is_planar(d):
                            continue
                        yield d
