"""Standard tableaux and the four primitive moves.

The moves are row insertion (bumping), row uninsertion, sliding deletion,
and the reverse slide. Insertion bumps the smallest entry greater than the
incoming value into the next row; sliding deletion repeatedly swaps the
doomed entry with the smaller of its below/right neighbors until it sits in
a corner, then removes it. Each move returns a new tableau; entries need
not be contiguous, only distinct.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .partitions import Partition


@dataclass(frozen=True)
class StandardTableau:
    """Partition-shaped filling with rows and columns strictly increasing."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        seen: set[int] = set()
        prev_len = None
        for r, row in enumerate(self.rows):
            if not row:
                raise ValueError("empty row in tableau")
            if prev_len is not None and len(row) > prev_len:
                raise ValueError(f"row lengths must weakly decrease: {self.rows}")
            prev_len = len(row)
            for c, v in enumerate(row):
                if v <= 0:
                    raise ValueError(f"entries must be positive, got {v}")
                if v in seen:
                    raise ValueError(f"duplicate entry {v}")
                seen.add(v)
                if c and row[c - 1] >= v:
                    raise ValueError(f"row {r + 1} is not increasing: {row}")
                if r and self.rows[r - 1][c] >= v:
                    raise ValueError(f"column {c + 1} is not increasing")

    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    def entries(self) -> frozenset[int]:
        return frozenset(v for row in self.rows for v in row)

    def find(self, x: int) -> tuple[int, int]:
        """1-based (row, column) of entry x."""
        for r, row in enumerate(self.rows):
            pos = bisect_left(row, x)
            if pos < len(row) and row[pos] == x:
                return r + 1, pos + 1
        raise ValueError(f"{x} is not an entry of the tableau")

    def is_corner(self, cell: tuple[int, int]) -> bool:
        """True when cell is at the end of both its row and its column."""
        r, c = cell
        if not (1 <= r <= len(self.rows)) or c != len(self.rows[r - 1]):
            return False
        return r == len(self.rows) or len(self.rows[r]) < c

    def to_text(self) -> str:
        if not self.rows:
            return "-"
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "StandardTableau":
        text = text.strip()
        if text in ("", "-"):
            return cls()
        try:
            rows = tuple(
                tuple(int(tok) for tok in chunk.split(","))
                for chunk in text.split("/")
            )
        except ValueError:
            raise ValueError(f"bad tableau text {text!r}") from None
        return cls(rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


EMPTY_TABLEAU = StandardTableau()


def _mutable(t: StandardTableau) -> list[list[int]]:
    return [list(row) for row in t.rows]


def _freeze(rows: list[list[int]]) -> StandardTableau:
    return StandardTableau(tuple(tuple(row) for row in rows))


def rsk_insert(t: StandardTableau, x: int) -> tuple[StandardTableau, tuple[tuple[int, int], ...]]:
    """Row-insert x into t.

    Returns the new tableau and the bumping path: the 1-based cells where a
    value was displaced, ending with the newly created cell.
    """
    if x in t.entries():
        raise ValueError(f"{x} is already an entry of the tableau")
    rows = _mutable(t)
    path = []
    val = x
    for r, row in enumerate(rows):
        pos = bisect_right(row, val)
        path.append((r + 1, pos + 1))
        if pos == len(row):
            row.append(val)
            return _freeze(rows), tuple(path)
        val, row[pos] = row[pos], val
    rows.append([val])
    path.append((len(rows), 1))
    return _freeze(rows), tuple(path)


def rsk_uninsert(t: StandardTableau, corner: tuple[int, int]) -> tuple[StandardTableau, int]:
    """Undo a row insertion whose bumping path ended at the given corner."""
    if not t.is_corner(corner):
        raise ValueError(f"{corner} is not a corner of shape {t.shape()}")
    rows = _mutable(t)
    r0 = corner[0] - 1
    val = rows[r0].pop()
    if not rows[r0]:
        rows.pop()
    for r in range(r0 - 1, -1, -1):
        row = rows[r]
        pos = bisect_left(row, val) - 1
        # the entry directly above the vacated cell is smaller, so pos >= 0
        val, row[pos] = row[pos], val
    return _freeze(rows), val


def jdt_delete(t: StandardTableau, x: int) -> StandardTableau:
    """Remove the entry x by sliding it to a corner, then deleting it."""
    r, c = t.find(x)
    rows = _mutable(t)
    i, j = r - 1, c - 1
    while True:
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        if below is None and right is None:
            break
        if right is None or (below is not None and below < right):
            rows[i][j] = below
            i += 1
        else:
            rows[i][j] = right
            j += 1
    rows[i].pop()
    if not rows[i]:
        rows.pop()
    return _freeze(rows)


def jdt_reverse(t: StandardTableau, target_box: tuple[int, int], x: int) -> StandardTableau:
    """Undo a sliding deletion that vacated target_box.

    Places x at target_box and migrates it up/left, swapping with the larger
    of the neighbors above and to the left until the filling is standard.
    """
    if x in t.entries():
        raise ValueError(f"{x} is already an entry of the tableau")
    r, c = target_box
    shape = t.shape()
    rows = _mutable(t)
    if r == len(rows) + 1 and c == 1:
        rows.append([x])
    elif 1 <= r <= len(rows) and c == len(rows[r - 1]) + 1 and (r == 1 or len(rows[r - 2]) >= c):
        rows[r - 1].append(x)
    else:
        raise ValueError(f"{target_box} is not an addable box of shape {shape}")
    i, j = r - 1, c - 1
    while True:
        above = rows[i - 1][j] if i > 0 else None
        left = rows[i][j - 1] if j > 0 else None
        best = max(v for v in (above, left) if v is not None) if (above is not None or left is not None) else None
        if best is None or best < x:
            break
        if above == best:
            rows[i][j] = above
            i -= 1
        else:
            rows[i][j] = left
            j -= 1
        rows[i][j] = x
    return _freeze(rows)
