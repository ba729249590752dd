from fractions import Fraction

import pytest

from diagram_rsk.diagrams import ResourceLimitError, enumerate_diagrams, flip
from diagram_rsk.enumeration import (
    bell,
    binomial,
    bratteli_dot,
    bratteli_to_json,
    build_bratteli,
    catalan,
    m_k_lambda,
    odd_double_factorial,
    verify_bell,
    verify_binomial,
    verify_catalan,
    verify_ideal,
    verify_nk,
    verify_odd_bell,
    verify_symmetric,
)
from diagram_rsk.partitions import f_lambda, partitions_of


def test_count_sequences():
    assert [bell(n) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    assert bell(10) == 115975
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [odd_double_factorial(n) for n in range(5)] == [1, 1, 3, 15, 105]
    assert binomial(6, 3) == 20
    assert binomial(4, -1) == 0 and binomial(4, 5) == 0
    with pytest.raises(ValueError):
        bell(-1)


def test_bratteli_a_level_counts():
    bd = build_bratteli(3, "A")
    assert bd.level_labels == ["0", "1/2", "1", "3/2", "2", "5/2", "3"]
    assert bd.counts_at(6) == {
        (): 5, (1,): 10, (2,): 6, (1, 1): 6, (3,): 1, (2, 1): 2, (1, 1, 1): 1,
    }
    assert bd.counts_at(5) == {(): 5, (1,): 5, (2,): 1, (1, 1): 1}
    assert bd.counts_at(2) == {(): 1, (1,): 1}


def test_bratteli_a_half_integer():
    bd = build_bratteli(Fraction(5, 2), "A")
    assert bd.level_labels[-1] == "5/2"
    assert bd.counts_at(5) == {(): 5, (1,): 5, (2,): 1, (1, 1): 1}
    bd = build_bratteli(2.5, "A")
    assert bd.counts_at(5) == {(): 5, (1,): 5, (2,): 1, (1, 1): 1}


def test_bratteli_counts_match_cardinalities():
    assert sum(v * v for v in build_bratteli(4, "A").counts_at(8).values()) == bell(8)
    bd = build_bratteli(3, "B")
    assert sum(v * v for v in bd.counts_at(3).values()) == odd_double_factorial(3)
    bd = build_bratteli(4, "T")
    assert sum(v * v for v in bd.counts_at(4).values()) == catalan(4)
    bd = build_bratteli(3, "PR")
    assert bd.counts_at(3) == {(): 1, (1,): 3, (2,): 3, (3,): 1}
    assert sum(v * v for v in bd.counts_at(3).values()) == binomial(6, 3)


def test_bratteli_rook_family():
    bd = build_bratteli(3, "R")
    assert bd.m_level == 3
    mid = bd.counts_at(3)
    for lam, count in mid.items():
        assert count == binomial(3, sum(lam)) * f_lambda(lam)
    assert sum(v * v for v in mid.values()) == 34
    # the full diagram continues through the deletion phase back to empty
    assert bd.level_labels[-1] == "6"
    assert bd.counts_at(6) == {(): 34}


def test_m_k_lambda_examples():
    assert m_k_lambda(3, (1,), "A") == 10
    assert m_k_lambda(0, (), "A") == 1
    assert m_k_lambda(3, (4, 4), "A") == 0
    assert m_k_lambda(3, (2, 1), "B") == 2
    assert m_k_lambda(3, (2,), "PR") == 3


def test_m_cross_check_symmetric_diagrams():
    counts: dict = {}
    for d in enumerate_diagrams(3, "A"):
        if flip(d) == d:
            from diagram_rsk.bijections import vac_insert

            p, q = vac_insert(d)
            counts[p.final_shape] = counts.get(p.final_shape, 0) + 1
    for lam, c in counts.items():
        assert c == m_k_lambda(3, lam, "A")


def test_bratteli_dot_and_json():
    bd = build_bratteli(1, "A")
    dot = bratteli_dot(bd)
    assert dot.startswith("digraph bratteli {")
    assert dot.rstrip().endswith("}")
    assert dot.count("->") == sum(len(es) for es in bd.edges)
    # every edge endpoint is a declared node
    import re

    nodes = set(re.findall(r"(n\d+_\d+) \[", dot))
    for a, b in re.findall(r"(n\d+_\d+) -> (n\d+_\d+)", dot):
        assert a in nodes and b in nodes
    obj = bratteli_to_json(bd)
    assert obj["family"] == "A"
    assert obj["levels"][0] == {"level": "0", "vertices": [{"shape": "-", "count": 1}]}


def test_verify_bell_k3():
    report = verify_bell(3)
    assert report["pass"] and report["lhs"] == report["rhs"] == 203
    assert [row["contribution"] for row in report["per_shape"]] == [25, 100, 36, 36, 1, 4, 1]
    assert [row["m"] for row in report["per_shape"]] == [5, 10, 6, 6, 1, 2, 1]


def test_verify_bell_and_odd_bell_k4():
    report = verify_bell(4)
    assert report["pass"] and report["lhs"] == report["rhs"] == 4140
    report = verify_odd_bell(4)
    assert report["pass"] and report["lhs"] == report["rhs"] == 877


def test_verify_ideal_k4_all_t():
    total = 0
    for t in range(5):
        report = verify_ideal(4, t)
        assert report["pass"], report
        total += report["lhs"]
    assert total == 4140


def test_verify_nk_6_3():
    report = verify_nk(6, 3)
    assert report["pass"] and report["lhs"] == report["rhs"] == 216
    rows = {row["shape"]: (row["f"], row["m"]) for row in report["per_shape"]}
    assert rows["6"] == (1, 5)
    assert rows["4,2"] == (9, 6)
    assert rows["3,2,1"] == (16, 2)
    assert sum(f * m for f, m in rows.values()) == 216


def test_verify_odd_bell_k3():
    report = verify_odd_bell(3)
    assert report["pass"] and report["lhs"] == report["rhs"] == 52
    assert [row["contribution"] for row in report["per_shape"]] == [25, 25, 1, 1]


def test_verify_ideal_k3_all_t():
    sizes = {}
    for t in range(4):
        report = verify_ideal(3, t)
        assert report["pass"], report
        sizes[t] = report["lhs"]
    assert sizes == {0: 25, 1: 100, 2: 72, 3: 6}
    assert sum(sizes.values()) == 203


def test_verify_catalan_integer_and_half():
    report = verify_catalan(3)
    assert report["pass"] and report["lhs"] == report["rhs"] == 132
    report = verify_catalan(Fraction(5, 2))
    assert report["pass"] and report["lhs"] == 42
    report = verify_catalan(Fraction(3, 2))
    assert report["pass"] and report["lhs"] == 5
    report = verify_catalan(2)
    assert report["pass"] and report["lhs"] == 14


def test_verify_binomial():
    for k in (1, 2, 3, 4):
        report = verify_binomial(k)
        assert report["pass"]
        assert report["lhs"] == binomial(2 * k, k)
        assert report["rhs"] == sum(binomial(k, s) ** 2 for s in range(k + 1))
    report = verify_binomial(6, force=True)
    assert report["pass"] and report["lhs"] == 924


def test_verify_symmetric_families():
    report = verify_symmetric(3)
    assert report["pass"] and report["lhs"] == 31
    report = verify_symmetric(4, family="S")
    assert report["pass"]
    assert report["lhs"] == 10 == sum(f_lambda(p) for p in partitions_of(4))
    for family in ("B", "T", "R", "PR"):
        report = verify_symmetric(3, family=family)
        assert report["pass"], (family, report)


def test_symmetric_count_restricted_to_ideals():
    # flip-fixed diagrams with propagating number <= t are counted by the
    # partial sums of the dimension counts
    from diagram_rsk.bijections import vac_insert
    from diagram_rsk.diagrams import propagating_number

    m = build_bratteli(3, "A").counts_at(6)
    for t in range(4):
        observed = sum(
            1
            for d in enumerate_diagrams(3, "A")
            if flip(d) == d and propagating_number(d) <= t
        )
        expected = sum(v for lam, v in m.items() if sum(lam) <= t)
        assert observed == expected


def test_verify_workers_agree():
    serial = verify_bell(2, workers=1)
    parallel = verify_bell(2, workers=2)
    assert serial == parallel
    assert verify_nk(4, 2, workers=2) == verify_nk(4, 2, workers=1)


def test_verify_limits():
    with pytest.raises(ResourceLimitError):
        verify_bell(5)
    with pytest.raises(ResourceLimitError):
        verify_nk(9, 5)


def test_report_shape_matches_schema():
    report = verify_bell(2)
    assert set(report) == {"identity", "k", "lhs", "rhs", "per_shape", "pass"}
    for row in report["per_shape"]:
        assert set(row) == {"shape", "m", "contribution"}
    report = verify_nk(4, 2)
    for row in report["per_shape"]:
        assert set(row) == {"shape", "f", "m", "contribution"}
