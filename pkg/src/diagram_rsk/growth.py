"""Growth diagrams: the local-rule realization of diagram insertion.

A diagram on k vertices per row becomes a triangular grid over the lattice
points {(i, j) : 0 <= i, j, i + j <= 2k}. The unit cell in column i and
row j gets an X exactly when vertex i is the left endpoint of the edge
labeled j in the one-row representation. Bottom-row and left-column points
are labeled with the empty partition and the interior is filled by three
local rules; the staircase boundary then carries the same pair of
vacillating tableaux that insertion produces, and the rules invert, so the
whole construction runs backwards from a boundary pair to the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bijections import VacillatingTableau
from .diagrams import SetPartitionDiagram, standard_edges
from .partitions import (
    Partition,
    boxes_added,
    contains,
    format_partition,
    intersection,
    union,
    validate_partition,
)


@dataclass(frozen=True)
class GrowthDiagram:
    """Triangular grid of partition labels plus the X-marked cells."""

    k2: int
    xmarks: frozenset[tuple[int, int]]
    labels: dict[tuple[int, int], Partition]

    def __post_init__(self):
        cols = [i for i, _ in self.xmarks]
        rows = [j for _, j in self.xmarks]
        if len(set(cols)) != len(cols) or len(set(rows)) != len(rows):
            raise ValueError("at most one X per column and per row")
        for i, j in self.xmarks:
            if not (1 <= i and 1 <= j and i + j <= self.k2):
                raise ValueError(f"X at ({i}, {j}) outside the grid")
        for point in self.labels:
            i, j = point
            if not (0 <= i and 0 <= j and i + j <= self.k2):
                raise ValueError(f"label at {point} outside the grid")

    def points(self):
        for s in range(self.k2 + 1):
            for i in range(s + 1):
                yield (i, s - i)

    def to_json(self) -> dict:
        return {
            "k2": self.k2,
            "xmarks": [list(x) for x in sorted(self.xmarks)],
            "labels": [
                [i, j, list(self.labels[(i, j)])]
                for (i, j) in sorted(self.labels)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GrowthDiagram":
        labels = {
            (i, j): validate_partition(parts) for i, j, parts in obj["labels"]
        }
        return cls(obj["k2"], frozenset(tuple(x) for x in obj["xmarks"]), labels)


def build_xmarks(d: SetPartitionDiagram) -> GrowthDiagram:
    """Grid for d with boundary labels only: X at (i, j) when vertex i is
    the left endpoint of the edge labeled j."""
    k2 = 2 * d.k
    xmarks = set()
    for u, v in standard_edges(d):
        xmarks.add((u, 2 * d.k + 1 - v))
    labels: dict[tuple[int, int], Partition] = {}
    for i in range(k2 + 1):
        labels[(i, 0)] = ()
        labels[(0, i)] = ()
    return GrowthDiagram(k2, frozenset(xmarks), labels)


def local_rule(lam: Partition, mu: Partition, nu: Partition, has_x: bool) -> Partition:
    """Forward rule for one cell: lam bottom-left, mu bottom-right, nu
    top-left; returns the top-right label."""
    if mu != nu:
        if has_x:
            raise ValueError("an X cell requires equal corner labels")
        return union(mu, nu)
    if lam != mu:
        if has_x:
            raise ValueError("an X cell requires equal corner labels")
        if not contains(lam, mu) or boxes_added(lam, mu) != 1:
            raise ValueError(f"corners {lam} -> {mu} must differ by one box")
        row = _box_row(lam, mu)
        return _add_box_in_row(mu, row + 1)
    if not has_x:
        return lam
    first = lam[0] + 1 if lam else 1
    return (first,) + lam[1:]


def _box_row(small: Partition, big: Partition) -> int:
    for r in range(len(big)):
        if big[r] != (small[r] if r < len(small) else 0):
            return r + 1
    raise ValueError(f"{big} / {small} is not a single box")


def _add_box_in_row(p: Partition, row: int) -> Partition:
    parts = list(p) + [0] * (row - len(p))
    parts[row - 1] += 1
    return validate_partition(parts)


def inverse_local_rule(mu: Partition, nu: Partition, rho: Partition) -> tuple[Partition, bool]:
    """Recover (bottom-left label, X present) from the other three corners."""
    if mu != nu:
        lam, has_x = intersection(mu, nu), False
    elif rho == mu:
        lam, has_x = mu, False
    else:
        if not contains(mu, rho) or boxes_added(mu, rho) != 1:
            raise ValueError(f"top-right {rho} must cover {mu} by one box")
        row = _box_row(mu, rho)
        if row == 1:
            lam, has_x = mu, True
        else:
            lam = _remove_box_in_row(mu, row - 1)
            has_x = False
    if local_rule(lam, mu, nu, has_x) != rho:
        raise ValueError(f"corners mu={mu}, nu={nu}, rho={rho} are not in the forward image")
    return lam, has_x


def _remove_box_in_row(p: Partition, row: int) -> Partition:
    if row > len(p):
        raise ValueError(f"{p} has no box in row {row}")
    parts = list(p)
    parts[row - 1] -= 1
    return validate_partition(parts)


def forward_fill(g: GrowthDiagram) -> GrowthDiagram:
    """Label every lattice point, sweeping anti-diagonals away from the origin."""
    labels = dict(g.labels)
    for s in range(2, g.k2 + 1):
        for i in range(1, s):
            j = s - i
            labels[(i, j)] = local_rule(
                labels[(i - 1, j - 1)],
                labels[(i, j - 1)],
                labels[(i - 1, j)],
                (i, j) in g.xmarks,
            )
    return GrowthDiagram(g.k2, g.xmarks, labels)


def _p_points(k2: int):
    """Staircase from (2k, 0) to (k, k): left one, up one, alternating."""
    for t in range(k2 + 1):
        m = t // 2
        yield (k2 - m, m) if t % 2 == 0 else (k2 - m - 1, m)


def _q_points(k2: int):
    """Staircase from (0, 2k) to (k, k): down one, right one, alternating."""
    for t in range(k2 + 1):
        m = t // 2
        yield (m, k2 - m) if t % 2 == 0 else (m, k2 - m - 1)


def staircase_paths(g: GrowthDiagram) -> tuple[VacillatingTableau, VacillatingTableau]:
    """Read (P, Q) off the two boundary staircases of a filled grid."""
    if g.k2 % 2:
        raise ValueError("grid parameter must be even")
    p = VacillatingTableau(tuple(g.labels[pt] for pt in _p_points(g.k2)))
    q = VacillatingTableau(tuple(g.labels[pt] for pt in _q_points(g.k2)))
    return p, q


def reconstruct(p: VacillatingTableau, q: VacillatingTableau, half: bool = False) -> SetPartitionDiagram:
    """Rebuild the diagram from a boundary pair by running the rules backwards."""
    if p.coords != "gamma" or q.coords != "gamma":
        raise ValueError("both tableaux must be in gamma form")
    if p.k2 != q.k2 or p.k2 % 2:
        raise ValueError("paths must have equal even doubled length")
    if p.final_shape != q.final_shape:
        raise ValueError(f"final shapes differ: {p.final_shape} vs {q.final_shape}")
    k2 = p.k2
    k = k2 // 2
    labels: dict[tuple[int, int], Partition] = {}
    for pt, shape in zip(_p_points(k2), p.steps):
        labels[pt] = shape
    for pt, shape in zip(_q_points(k2), q.steps):
        labels[pt] = shape
    xmarks = set()
    for s in range(k2, 1, -1):
        for i in range(1, s):
            j = s - i
            try:
                lam, has_x = inverse_local_rule(
                    labels[(i, j - 1)], labels[(i - 1, j)], labels[(i, j)]
                )
            except ValueError as exc:
                raise ValueError(f"cell ({i}, {j}): {exc}") from None
            labels[(i - 1, j - 1)] = lam
            if has_x:
                xmarks.add((i, j))
    for i in range(k2 + 1):
        assert labels[(i, 0)] == () and labels[(0, i)] == ()
    parent = list(range(2 * k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in xmarks:
        right = 2 * k + 1 - j
        if not i < right:
            raise ValueError(f"X at ({i}, {j}) does not describe an edge")
        parent[find(i)] = find(right)
    groups: dict[int, list[int]] = {}
    for v in range(1, 2 * k + 1):
        groups.setdefault(find(v), []).append(v)
    return SetPartitionDiagram.from_standard_blocks(k, groups.values(), half)


def render_text(g: GrowthDiagram) -> str:
    """ASCII picture: label rows top to bottom with X cells in between."""
    width = max((len(format_partition(p)) for p in g.labels.values()), default=1)
    colw = width + 2
    lines = []
    for j in range(g.k2, -1, -1):
        cells = [
            (format_partition(g.labels[(i, j)]) if (i, j) in g.labels else "").ljust(colw)
            for i in range(g.k2 - j + 1)
        ]
        lines.append(("".join(cells)).rstrip())
        if 1 <= j <= g.k2 - 1:
            marks = [" " * colw] * (g.k2 - j)
            for i in range(1, g.k2 - j + 1):
                if (i, j) in g.xmarks:
                    marks[i - 1] = " " * (colw - 1) + "X"
            lines.append(("".join(marks)).rstrip())
    return "\n".join(line for line in lines) + "\n"
