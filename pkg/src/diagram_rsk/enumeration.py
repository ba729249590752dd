"""Count sequences, Bratteli diagrams, and exhaustive identity verifiers.

Every verifier runs the actual bijection over an exhaustively enumerated
family and buckets the results by shape, then compares the bucket sizes
against the dimension counts coming from Bratteli path counting or closed
forms. Reports are plain dicts ready for JSON output:

    {identity, k, n?, t?, family?, lhs, rhs,
     per_shape: [{shape, f?, m, contribution}], pass}

All arithmetic is exact; counts are Python ints throughout.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import bijections, diagrams
from .diagrams import ResourceLimitError, SetPartitionDiagram
from .partitions import (
    Partition,
    addable_boxes,
    bar,
    enumerate_gamma,
    f_lambda,
    format_partition,
    partitions_of,
    removable_boxes,
)


def bell(n: int) -> int:
    """Bell number via the triangle recurrence."""
    if n < 0:
        raise ValueError("bell needs a nonnegative argument")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan needs a nonnegative argument")
    return math.comb(2 * n, n) // (n + 1)


def odd_double_factorial(n: int) -> int:
    """Product of the odd numbers 2n-1, 2n-3, ..., 3, 1; equals 1 at n = 0."""
    out = 1
    for v in range(2 * n - 1, 0, -2):
        out *= v
    return out


def binomial(n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def _doubled(k) -> int:
    """Normalize an integer or half-integer k to its doubled value."""
    doubled = Fraction(k) * 2
    if doubled.denominator != 1 or doubled < 0:
        raise ValueError(f"k must be a nonnegative integer or half-integer, got {k!r}")
    return int(doubled)


def _format_k(k2: int) -> str:
    return str(k2 // 2) if k2 % 2 == 0 else f"{k2}/2"


BRATTELI_FAMILIES = ("A", "B", "T", "R", "PR")


@dataclass
class BratteliDiagram:
    """Leveled graph of shapes with per-vertex path counts from the top.

    levels[i] lists the shapes at level i; edges[i] joins levels i and
    i + 1 by index pairs. m_level marks the level whose counts are the
    dimension counts (the last level except for the rook family, whose
    diagram continues through its mirrored deletion phase).
    """

    family: str
    level_labels: list[str]
    levels: list[list[Partition]]
    edges: list[list[tuple[int, int]]]
    path_counts: list[list[int]]
    m_level: int

    def counts_at(self, level: int) -> dict[Partition, int]:
        return dict(zip(self.levels[level], self.path_counts[level]))


def _grow_level(shapes: Sequence[Partition], moves: Iterable[str]) -> tuple[list[Partition], list[tuple[int, int]]]:
    """One level transition; moves is a subset of {'stay', 'add', 'remove'}."""
    nxt: list[Partition] = []
    index: dict[Partition, int] = {}
    edges: list[tuple[int, int]] = []

    def touch(shape: Partition) -> int:
        if shape not in index:
            index[shape] = len(nxt)
            nxt.append(shape)
        return index[shape]

    for i, shape in enumerate(shapes):
        targets = []
        if "stay" in moves:
            targets.append(shape)
        if "remove" in moves:
            targets.extend(t for _, t in removable_boxes(shape))
        if "add" in moves:
            targets.extend(t for _, t in addable_boxes(shape))
        for t in targets:
            edges.append((i, touch(t)))
    order = sorted(range(len(nxt)), key=lambda i: (sum(nxt[i]), tuple(-v for v in nxt[i])))
    rank = {old: new for new, old in enumerate(order)}
    nxt_sorted = [nxt[i] for i in order]
    edges = sorted((a, rank[b]) for a, b in edges)
    return nxt_sorted, edges


def _one_row_only(shapes_edges):
    shapes, edges = shapes_edges
    keep = [i for i, s in enumerate(shapes) if len(s) <= 1]
    rank = {old: new for new, old in enumerate(keep)}
    return [shapes[i] for i in keep], [(a, rank[b]) for a, b in edges if b in rank]


def build_bratteli(k, family: str = "A", force: bool = False) -> BratteliDiagram:
    """Construct the leveled shape graph for the family at level k.

    A supports half-integer k (levels 0, 1/2, ..., k); B, T, and PR are
    built level by level from their step rules; R is built by inserting
    every rook diagram and collecting the observed integer-level shapes.
    """
    if family not in BRATTELI_FAMILIES:
        raise ValueError(f"unknown Bratteli family {family!r}; expected one of {BRATTELI_FAMILIES}")
    if family == "A":
        k2 = _doubled(k)
        levels = [[()]]
        labels = ["0"]
        edges = []
        for step in range(1, k2 + 1):
            moves = ("stay", "remove") if step % 2 == 1 else ("stay", "add")
            nxt, es = _grow_level(levels[-1], moves)
            levels.append(nxt)
            edges.append(es)
            labels.append(_format_k(step))
    elif family in ("B", "T", "PR"):
        kk = _doubled(k)
        if kk % 2:
            raise ValueError(f"family {family} needs integer k")
        kk //= 2
        levels = [[()]]
        labels = ["0"]
        edges = []
        moves = ("add", "remove") if family in ("B", "T") else ("stay", "add")
        for step in range(1, kk + 1):
            nxt, es = _grow_level(levels[-1], moves)
            if family in ("T", "PR"):
                nxt, es = _one_row_only((nxt, es))
            levels.append(nxt)
            edges.append(es)
            labels.append(str(step))
    else:  # R: filter the shape chains of actual rook-diagram insertions
        kk = _doubled(k)
        if kk % 2:
            raise ValueError("family R needs integer k")
        kk //= 2
        seen_levels: list[dict[Partition, None]] = [dict() for _ in range(2 * kk + 1)]
        seen_edges: list[set[tuple[Partition, Partition]]] = [set() for _ in range(2 * kk)]
        for d in diagrams.enumerate_diagrams(kk, "R", force=force):
            p, q = bijections.vac_insert(d)
            chain = [q.steps[2 * i] for i in range(kk + 1)]
            chain += [p.steps[2 * (kk - i)] for i in range(1, kk + 1)]
            for lvl, shape in enumerate(chain):
                seen_levels[lvl][shape] = None
            for lvl in range(2 * kk):
                seen_edges[lvl].add((chain[lvl], chain[lvl + 1]))
        levels = [
            sorted(lv, key=lambda s: (sum(s), tuple(-v for v in s)))
            for lv in seen_levels
        ]
        labels = [str(i) for i in range(2 * kk + 1)]
        edges = []
        for lvl in range(2 * kk):
            index = {s: i for i, s in enumerate(levels[lvl + 1])}
            src = {s: i for i, s in enumerate(levels[lvl])}
            edges.append(sorted((src[a], index[b]) for a, b in seen_edges[lvl]))
        counts = _count_paths(levels, edges)
        return BratteliDiagram("R", labels, levels, edges, counts, kk)
    counts = _count_paths(levels, edges)
    return BratteliDiagram(family, labels, levels, edges, counts, len(levels) - 1)


def _count_paths(levels, edges) -> list[list[int]]:
    counts = [[1]]
    for lvl, es in enumerate(edges):
        nxt = [0] * len(levels[lvl + 1])
        for a, b in es:
            nxt[b] += counts[lvl][a]
        counts.append(nxt)
    return counts


def m_k_lambda(k, lam: Partition, family: str = "A", force: bool = False) -> int:
    """Dimension count: number of paths from the top of the family's
    Bratteli diagram down to lam."""
    bd = build_bratteli(k, family, force=force)
    return bd.counts_at(bd.m_level).get(tuple(lam), 0)


def bratteli_dot(bd: BratteliDiagram) -> str:
    """DOT rendering with one rank per level."""
    lines = ["digraph bratteli {", "  rankdir=TB;"]
    for lvl, shapes in enumerate(bd.levels):
        names = []
        for i, shape in enumerate(shapes):
            name = f"n{lvl}_{i}"
            names.append(name)
            label = f"{format_partition(shape)} ({bd.path_counts[lvl][i]})"
            lines.append(f'  {name} [label="{label}"];')
        lines.append("  { rank=same; " + "; ".join(names) + "; }")
    for lvl, es in enumerate(bd.edges):
        for a, b in es:
            lines.append(f"  n{lvl}_{a} -> n{lvl + 1}_{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bratteli_to_json(bd: BratteliDiagram) -> dict:
    return {
        "family": bd.family,
        "levels": [
            {
                "level": bd.level_labels[lvl],
                "vertices": [
                    {"shape": format_partition(s), "count": c}
                    for s, c in zip(bd.levels[lvl], bd.path_counts[lvl])
                ],
            }
            for lvl in range(len(bd.levels))
        ],
        "edges": [
            {"from_level": lvl, "pairs": [list(e) for e in es]}
            for lvl, es in enumerate(bd.edges)
        ],
        "m_level": bd.m_level,
    }


# ---------------------------------------------------------------------------
# exhaustive verifiers


def _insert_shape_pairs(chunk: list[SetPartitionDiagram]):
    counts: Counter = Counter()
    pairs = set()
    for d in chunk:
        p, q = bijections.vac_insert(d)
        counts[p.final_shape] += 1
        pairs.add((p.steps, q.steps))
    return counts, pairs


def _di_shape_pairs(args):
    seqs, n = args
    counts: Counter = Counter()
    pairs = set()
    for seq in seqs:
        t, p = bijections.di_insert(seq, n)
        counts[p.final_shape] += 1
        pairs.add((t.rows, p.steps))
    return counts, pairs


def _fanout(func, items, workers: int, extra=None):
    """Map func over chunks of items, merging (Counter, set) results."""
    items = list(items)
    if workers <= 1 or len(items) < 2 * workers:
        return func(items if extra is None else (items, extra))
    chunk = (len(items) + workers - 1) // workers
    chunks = [items[i: i + chunk] for i in range(0, len(items), chunk)]
    if extra is not None:
        chunks = [(c, extra) for c in chunks]
    counts: Counter = Counter()
    pairs: set = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for sub_counts, sub_pairs in pool.map(func, chunks):
            counts.update(sub_counts)
            pairs.update(sub_pairs)
    return counts, pairs


def _report(identity: str, k, per_shape: list[dict], lhs: int, rhs: int,
            ok: bool, **extra) -> dict:
    report = {"identity": identity, "k": k}
    report.update(extra)
    report.update({"lhs": lhs, "rhs": rhs, "per_shape": per_shape, "pass": bool(ok)})
    return report


def verify_bell(k: int, workers: int = 1, force: bool = False) -> dict:
    """Bucket all diagrams on k vertices by final shape; every bucket must
    hold exactly (m^shape)^2 members and the bijection must be injective."""
    if not force and k > 4:
        raise ResourceLimitError(f"verify_bell at k={k} needs force=True (limit 4)")
    ds = list(diagrams.enumerate_diagrams(k, "A", force=force))
    counts, pairs = _fanout(_insert_shape_pairs, ds, workers)
    m = build_bratteli(k, "A").counts_at(2 * k)
    per_shape = []
    ok = len(pairs) == len(ds)
    for shape in enumerate_gamma(k):
        expected = m.get(shape, 0) ** 2
        got = counts.get(shape, 0)
        ok = ok and expected == got
        if expected or got:
            per_shape.append({
                "shape": format_partition(shape),
                "m": m.get(shape, 0),
                "contribution": got,
            })
    rhs = sum(v * v for v in m.values())
    lhs = bell(2 * k)
    ok = ok and lhs == len(ds) == rhs
    return _report("bell", k, per_shape, lhs, rhs, ok)


def verify_nk(n: int, k: int, workers: int = 1, force: bool = False) -> dict:
    """Bucket all n^k sequences by the shape of their delete-insert image;
    each bucket must hold f^shape * m^shape members, injectively."""
    if not force and (k > 4 or n ** k > 500_000):
        raise ResourceLimitError(f"verify_nk at n={n}, k={k} needs force=True")
    seqs = list(product(range(1, n + 1), repeat=k))
    counts, pairs = _fanout(_di_shape_pairs, seqs, workers, extra=n)
    m = build_bratteli(k, "A").counts_at(2 * k)
    per_shape = []
    ok = len(pairs) == len(seqs)
    rhs = 0
    for gamma in enumerate_gamma(k):
        shape = bar(gamma, n)
        f = f_lambda(shape)
        mm = m.get(gamma, 0)
        rhs += f * mm
        got = counts.get(shape, 0)
        ok = ok and got == f * mm
        per_shape.append({
            "shape": format_partition(shape),
            "f": f,
            "m": mm,
            "contribution": f * mm,
        })
    lhs = n ** k
    ok = ok and lhs == rhs
    return _report("nk", k, per_shape, lhs, rhs, ok, n=n)


def verify_odd_bell(k: int, workers: int = 1, force: bool = False) -> dict:
    """Half-diagram analogue: the shape just before the middle equals the
    one just after, and truncated paths bucket as squares of the half-level
    path counts."""
    if not force and k > 4:
        raise ResourceLimitError(f"verify_odd_bell at k={k} needs force=True (limit 4)")
    ds = list(diagrams.enumerate_diagrams(k, "half_A", force=force))
    counts: Counter = Counter()
    pairs = set()
    ok = True
    for d in ds:
        p, q = bijections.vac_insert(d)
        ok = ok and q.steps[2 * k - 1] == p.steps[2 * k - 1]
        counts[q.steps[2 * k - 1]] += 1
        pairs.add((p.steps[: 2 * k], q.steps[: 2 * k]))
    m = build_bratteli(k, "A").counts_at(2 * k - 1)
    per_shape = []
    for shape in enumerate_gamma(k - 1):
        expected = m.get(shape, 0) ** 2
        got = counts.get(shape, 0)
        ok = ok and expected == got
        if expected or got:
            per_shape.append({
                "shape": format_partition(shape),
                "m": m.get(shape, 0),
                "contribution": got,
            })
    lhs = bell(2 * k - 1)
    rhs = sum(v * v for v in m.values())
    ok = ok and len(pairs) == len(ds) and lhs == len(ds) == rhs
    return _report("odd-bell", k, per_shape, lhs, rhs, ok)


def verify_ideal(k: int, t: int, workers: int = 1, force: bool = False) -> dict:
    """Diagrams with propagating number t are counted by the squared path
    counts of the size-t shapes; the final shape size must equal pn."""
    if not force and k > 4:
        raise ResourceLimitError(f"verify_ideal at k={k} needs force=True (limit 4)")
    counts: Counter = Counter()
    lhs = 0
    ok = True
    for d in diagrams.enumerate_diagrams(k, "A", force=force):
        p, _ = bijections.vac_insert(d)
        pn = diagrams.propagating_number(d)
        ok = ok and sum(p.final_shape) == pn
        counts[p.final_shape] += 1
        if pn == t:
            lhs += 1
    m = build_bratteli(k, "A").counts_at(2 * k)
    per_shape = []
    rhs = 0
    for shape in enumerate_gamma(k):
        if sum(shape) != t:
            continue
        mm = m.get(shape, 0)
        rhs += mm * mm
        got = counts.get(shape, 0)
        ok = ok and got == mm * mm
        per_shape.append({
            "shape": format_partition(shape),
            "m": mm,
            "contribution": got,
        })
    ok = ok and lhs == rhs
    return _report("ideal", k, per_shape, lhs, rhs, ok, t=t)


def _tl_dimension(k2: int, size: int) -> int:
    half = k2 // 2
    return binomial(k2, half - size) - binomial(k2, half - size - 1)


def verify_catalan(k, workers: int = 1, force: bool = False) -> dict:
    """Planar diagrams produce one-row paths only and bucket as squares of
    the one-row dimension counts; supports half-integer k."""
    k2 = _doubled(k)
    if not force and k2 > 8:
        raise ResourceLimitError(f"verify_catalan at k={k} needs force=True (limit 4)")
    if k2 % 2 == 0:
        kk = k2 // 2
        ds = list(diagrams.enumerate_diagrams(kk, "A", force=force))
        final_index = 2 * kk
    else:
        kk = (k2 + 1) // 2
        ds = list(diagrams.enumerate_diagrams(kk, "half_A", force=force))
        final_index = 2 * kk - 1
    counts: Counter = Counter()
    planar_total = 0
    ok = True
    for d in ds:
        p, q = bijections.vac_insert(d)
        one_row = all(len(s) <= 1 for s in p.steps) and all(len(s) <= 1 for s in q.steps)
        planar = diagrams.is_planar(d)
        ok = ok and planar == one_row
        if planar:
            planar_total += 1
            counts[q.steps[final_index]] += 1
    per_shape = []
    rhs = 0
    for size in range(k2 // 2 + 1):
        shape = (size,) if size else ()
        dim = _tl_dimension(k2, size)
        rhs += dim * dim
        got = counts.get(shape, 0)
        ok = ok and got == dim * dim
        per_shape.append({
            "shape": format_partition(shape),
            "m": dim,
            "contribution": got,
        })
    lhs = planar_total
    ok = ok and lhs == rhs == catalan(k2)
    k_out = k2 // 2 if k2 % 2 == 0 else k2 / 2
    return _report("catalan", k_out, per_shape, lhs, rhs, ok)


def verify_binomial(k: int, workers: int = 1, force: bool = False) -> dict:
    """Planar rook diagrams bucket as squared binomials; the total is the
    central binomial coefficient."""
    if not force and k > 5:
        raise ResourceLimitError(f"verify_binomial at k={k} needs force=True (limit 5)")
    ds = list(diagrams.enumerate_diagrams(k, "PR", force=force))
    counts, pairs = _fanout(_insert_shape_pairs, ds, workers)
    per_shape = []
    rhs = 0
    ok = len(pairs) == len(ds)
    for size in range(k + 1):
        shape = (size,) if size else ()
        c = binomial(k, size)
        rhs += c * c
        got = counts.get(shape, 0)
        ok = ok and got == c * c
        per_shape.append({
            "shape": format_partition(shape),
            "m": c,
            "contribution": got,
        })
    lhs = binomial(2 * k, k)
    ok = ok and lhs == len(ds) == rhs
    return _report("binomial", k, per_shape, lhs, rhs, ok)


def _family_dimensions(k: int, family: str, force: bool) -> dict[Partition, int]:
    if family == "A":
        return build_bratteli(k, "A").counts_at(2 * k)
    if family == "S":
        return {lam: f_lambda(lam) for lam in partitions_of(k)}
    if family in ("B", "T", "PR"):
        bd = build_bratteli(k, family)
        return bd.counts_at(bd.m_level)
    if family == "R":
        bd = build_bratteli(k, "R", force=force)
        return bd.counts_at(bd.m_level)
    raise ValueError(f"no dimension table for family {family!r}")


def verify_symmetric(k: int, family: str = "A", workers: int = 1, force: bool = False) -> dict:
    """Flip-fixed diagrams are counted by the sum of the dimension counts,
    and a diagram is flip-fixed exactly when its two paths coincide."""
    if not force and k > 4:
        raise ResourceLimitError(f"verify_symmetric at k={k} needs force=True (limit 4)")
    counts: Counter = Counter()
    total = 0
    sym_total = 0
    ok = True
    for d in diagrams.enumerate_diagrams(k, family, force=force):
        total += 1
        p, q = bijections.vac_insert(d)
        symmetric = diagrams.flip(d) == d
        ok = ok and symmetric == (p == q)
        if symmetric:
            sym_total += 1
            counts[p.final_shape] += 1
    dims = _family_dimensions(k, family, force)
    per_shape = []
    rhs = 0
    for shape in enumerate_gamma(k):
        dim = dims.get(shape, 0)
        got = counts.get(shape, 0)
        if not dim and not got:
            continue
        rhs += dim
        ok = ok and got == dim
        per_shape.append({
            "shape": format_partition(shape),
            "m": dim,
            "contribution": got,
        })
    lhs = sym_total
    ok = ok and lhs == rhs
    return _report("symmetric", k, per_shape, lhs, rhs, ok, family=family, total=total)


VERIFIERS = {
    "nk": verify_nk,
    "bell": verify_bell,
    "odd-bell": verify_odd_bell,
    "ideal": verify_ideal,
    "catalan": verify_catalan,
    "binomial": verify_binomial,
    "symmetric": verify_symmetric,
}
