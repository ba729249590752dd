"""The two central correspondences.

Delete-insert turns a sequence of values from 1..n into a standard tableau
plus a vacillating tableau: each value is first slid out of the current
tableau, then row-inserted back. Diagram insertion turns a set-partition
diagram into a pair (P, Q) of vacillating tableaux by replaying its
insertion sequence: deletions at half steps, insertions at integer steps.
Both maps are invertible and the inverses are implemented here.

Vacillating tableaux come in two coordinate systems. The small form
("gamma") starts at the empty partition, drops at most one box on each
half step and adds at most one box on each integer step. The large form
("lambda", for a fixed n) starts at the single row (n) and moves exactly
one box per half step; the two forms are exchanged pointwise by dropping
or prepending the first part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    InsertionSequence,
    SetPartitionDiagram,
    diagram_from_insertion_sequence,
    insertion_sequence,
)
from .partitions import Partition, bar, contains, format_partition, parse_partition, star, validate_partition
from .tableaux import EMPTY_TABLEAU, StandardTableau, jdt_delete, jdt_reverse, rsk_insert, rsk_uninsert

GAMMA = "gamma"
LAMBDA = "lambda"


@dataclass(frozen=True)
class VacillatingTableau:
    """A half-integer-indexed chain of partitions of length 2k.

    steps[t] is the shape at doubled index t, so a chain of length 2k has
    2k + 1 entries indexed 0, 1/2, 1, ..., k.
    """

    steps: tuple[Partition, ...]
    coords: str = GAMMA
    n: int | None = None

    def __post_init__(self):
        if self.coords not in (GAMMA, LAMBDA):
            raise ValueError(f"bad coords {self.coords!r}")
        if len(self.steps) % 2 == 0:
            raise ValueError("a vacillating tableau has an odd number of entries")
        if self.coords == GAMMA:
            if self.n is not None:
                raise ValueError("gamma form does not carry n")
            if self.steps[0] != ():
                raise ValueError("gamma form must start at the empty partition")
            self._check_steps(drop=(0, 1), add=(0, 1))
        else:
            n = self.n
            if n is None:
                raise ValueError("lambda form requires n")
            if self.steps[0] != ((n,) if n else ()):
                raise ValueError(f"lambda form must start at the single row ({n})")
            if n < 2 * (self.k2 // 2):
                raise ValueError(f"lambda form needs n >= 2k, got n={n}, 2k={self.k2}")
            self._check_steps(drop=(1,), add=(1,))

    def _check_steps(self, drop, add):
        for t in range(len(self.steps) - 1):
            a, b = self.steps[t], self.steps[t + 1]
            if t % 2 == 0:
                if not contains(b, a) or sum(a) - sum(b) not in drop:
                    raise ValueError(f"bad half step at doubled index {t} -> {t + 1}: {a} -> {b}")
            else:
                if not contains(a, b) or sum(b) - sum(a) not in add:
                    raise ValueError(f"bad integer step at doubled index {t} -> {t + 1}: {a} -> {b}")

    @property
    def k2(self) -> int:
        """Doubled length: number of half steps."""
        return len(self.steps) - 1

    @property
    def final_shape(self) -> Partition:
        return self.steps[-1]

    def to_gamma(self) -> "VacillatingTableau":
        if self.coords == GAMMA:
            return self
        return VacillatingTableau(tuple(star(p) for p in self.steps))

    def to_lambda(self, n: int) -> "VacillatingTableau":
        if self.coords == LAMBDA:
            if n != self.n:
                raise ValueError(f"already in lambda form with n={self.n}")
            return self
        if n < self.k2:
            raise ValueError(f"need n >= 2k = {self.k2}")
        steps = tuple(
            bar(p, n if t % 2 == 0 else n - 1) for t, p in enumerate(self.steps)
        )
        return VacillatingTableau(steps, LAMBDA, n)

    def to_text(self) -> str:
        return ";".join(format_partition(p) for p in self.steps)

    @classmethod
    def from_text(cls, text: str, coords: str = GAMMA, n: int | None = None) -> "VacillatingTableau":
        steps = []
        for tok in text.strip().split(";"):
            tok = tok.strip()
            if tok.startswith("(") and tok.endswith(")"):
                tok = tok[1:-1]
            steps.append(parse_partition(tok))
        return cls(tuple(steps), coords, n)

    def to_json(self) -> dict:
        out = {"coords": self.coords, "steps": [list(p) for p in self.steps]}
        if self.n is not None:
            out["n"] = self.n
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "VacillatingTableau":
        steps = tuple(validate_partition(p) for p in obj["steps"])
        return cls(steps, obj.get("coords", GAMMA), obj.get("n"))


def _box_diff(small: Partition, big: Partition) -> tuple[int, int]:
    """1-based (row, column) of the single box of big / small."""
    if not contains(small, big) or sum(big) - sum(small) != 1:
        raise ValueError(f"{big} / {small} is not a single box")
    for r in range(len(big)):
        s = small[r] if r < len(small) else 0
        if big[r] != s:
            return r + 1, big[r]
    raise AssertionError("unreachable")


def di_insert(values, n: int) -> tuple[StandardTableau, VacillatingTableau]:
    """Delete-insert a sequence of k values from 1..n.

    Starting from the single-row tableau 1..n, each value is slid out and
    then row-inserted back. Returns the final tableau and the chain of
    shapes as a lambda-form vacillating tableau; both end at the same shape.
    """
    values = tuple(values)
    k = len(values)
    if n < 2 * k:
        raise ValueError(f"need n >= 2k, got n={n}, k={k}")
    for x in values:
        if not 1 <= x <= n:
            raise ValueError(f"sequence entry {x} out of range 1..{n}")
    t = StandardTableau((tuple(range(1, n + 1)),)) if n else EMPTY_TABLEAU
    shapes = [t.shape()]
    for x in values:
        t = jdt_delete(t, x)
        shapes.append(t.shape())
        t, _ = rsk_insert(t, x)
        shapes.append(t.shape())
    return t, VacillatingTableau(tuple(shapes), LAMBDA, n)


def di_invert(t: StandardTableau, p: VacillatingTableau, n: int) -> tuple[int, ...]:
    """Recover the sequence with di_insert(seq, n) == (t, p)."""
    if p.coords != LAMBDA or p.n != n:
        raise ValueError("p must be in lambda form for the given n")
    if t.shape() != p.final_shape:
        raise ValueError(f"tableau shape {t.shape()} != final path shape {p.final_shape}")
    if t.entries() != frozenset(range(1, n + 1)):
        raise ValueError(f"tableau entries must be exactly 1..{n}")
    k = p.k2 // 2
    cur = t
    seq = []
    for j in range(k - 1, -1, -1):
        lam_full, lam_half, lam_next = p.steps[2 * j], p.steps[2 * j + 1], p.steps[2 * j + 2]
        cur, x = rsk_uninsert(cur, _box_diff(lam_half, lam_next))
        cur = jdt_reverse(cur, _box_diff(lam_half, lam_full), x)
        seq.append(x)
    assert cur.rows == ((tuple(range(1, n + 1)),) if n else ())
    return tuple(reversed(seq))


def vac_insert(d: SetPartitionDiagram) -> tuple[VacillatingTableau, VacillatingTableau]:
    """Insert a diagram, producing its pair (P, Q) of vacillating tableaux.

    The insertion sequence is replayed from the empty tableau: half slots
    delete an edge label, integer slots row-insert one. Q collects the
    shapes over the first k vertices; P collects the rest, read backwards,
    so both chains end at the common middle shape.
    """
    t = EMPTY_TABLEAU
    shapes: list[Partition] = [()]
    for idx, label in enumerate(insertion_sequence(d).slots):
        if label is not None:
            if idx % 2 == 0:
                # deletions always hit the current maximum, sitting in a corner
                assert t.is_corner(t.find(label)), "sliding deletion expected a corner"
                t = jdt_delete(t, label)
            else:
                t, _ = rsk_insert(t, label)
        shapes.append(t.shape())
    mid = 2 * d.k
    q = VacillatingTableau(tuple(shapes[: mid + 1]))
    p = VacillatingTableau(tuple(shapes[mid:][::-1]))
    return p, q


def vac_invert(
    p: VacillatingTableau, q: VacillatingTableau, half: bool = False
) -> SetPartitionDiagram:
    """Recover the diagram with vac_insert(d) == (p, q).

    Walks the combined shape chain downward from the far end, undoing row
    insertions at integer steps and re-placing deleted labels at half steps.
    """
    if p.coords != GAMMA or q.coords != GAMMA:
        raise ValueError("both tableaux must be in gamma form")
    if p.k2 != q.k2:
        raise ValueError(f"length mismatch: {p.k2} vs {q.k2}")
    if p.final_shape != q.final_shape:
        raise ValueError(f"final shapes differ: {p.final_shape} vs {q.final_shape}")
    k = p.k2 // 2
    full = list(q.steps) + list(reversed(p.steps))[1:]
    slots: list[int | None] = [None] * (4 * k)
    t = EMPTY_TABLEAU
    for i in range(2 * k - 1, -1, -1):
        lam_i, lam_half, lam_next = full[2 * i], full[2 * i + 1], full[2 * i + 2]
        if lam_next != lam_half:
            t, x = rsk_uninsert(t, _box_diff(lam_half, lam_next))
            slots[2 * i + 1] = x
        if lam_i != lam_half:
            label = 2 * k - i
            t = jdt_reverse(t, _box_diff(lam_half, lam_i), label)
            slots[2 * i] = label
    assert not t.rows
    return diagram_from_insertion_sequence(InsertionSequence(k, tuple(slots)), half)
