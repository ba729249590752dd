from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from diagram_rsk.bijections import (
    VacillatingTableau,
    di_insert,
    di_invert,
    vac_insert,
    vac_invert,
)
from diagram_rsk.diagrams import (
    enumerate_diagrams,
    flip,
    identity_diagram,
    insertion_sequence,
    is_planar,
    parse_diagram,
    propagating_number,
    singletons_diagram,
)
from diagram_rsk.tableaux import StandardTableau

EXAMPLE = parse_diagram("1 3 4' | 2 1' | 4 3' 2'")


class TestVacillatingTableau:
    def test_gamma_validation(self):
        VacillatingTableau(((), (), (1,)))
        with pytest.raises(ValueError):
            VacillatingTableau(((1,), (), (1,)))  # must start empty
        with pytest.raises(ValueError):
            VacillatingTableau(((), (1,), (1,)))  # half step cannot add
        with pytest.raises(ValueError):
            VacillatingTableau(((), (), (2, 1)))  # integer step adds two boxes
        with pytest.raises(ValueError):
            VacillatingTableau(((), ()))  # even length

    def test_lambda_validation(self):
        VacillatingTableau(((6,), (5,), (5, 1)), coords="lambda", n=6)
        with pytest.raises(ValueError):
            VacillatingTableau(((6,), (6,), (6, 1)), coords="lambda", n=6)
        with pytest.raises(ValueError):
            VacillatingTableau(((5, 1), (5,), (5, 1)), coords="lambda", n=6)
        with pytest.raises(ValueError):
            # n = 2 but the path has k = 2, violating n >= 2k
            VacillatingTableau(((2,), (1,), (2,), (1,), (1, 1)), coords="lambda", n=2)

    def test_text_and_json_round_trip(self):
        vt = VacillatingTableau(((), (), (1,), (1,), (1, 1)))
        assert vt.to_text() == "-;-;1;1;1,1"
        assert VacillatingTableau.from_text("-;-;1;1;1,1") == vt
        assert VacillatingTableau.from_json(vt.to_json()) == vt
        lam = vt.to_lambda(6)
        assert lam.steps == ((6,), (5,), (5, 1), (4, 1), (4, 1, 1))
        assert lam.to_gamma() == vt
        assert VacillatingTableau.from_text("(6);(5);(5,1)", coords="lambda", n=6).steps == (
            (6,), (5,), (5, 1))

    def test_k2_and_final_shape(self):
        vt = VacillatingTableau(((), (), (1,)))
        assert vt.k2 == 2
        assert vt.final_shape == (1,)


class TestDeleteInsert:
    def test_worked_example(self):
        t, p = di_insert((2, 4, 3), 6)
        assert t.rows == ((1, 2, 3, 6), (4,), (5,))
        assert p.steps == ((6,), (5,), (5, 1), (4, 1), (4, 2), (4, 1), (4, 1, 1))
        assert p.coords == "lambda" and p.n == 6
        assert t.shape() == (4, 1, 1) == p.final_shape

    def test_k1_hand_executed(self):
        t, p = di_insert((1,), 2)
        assert t.rows == ((1,), (2,))
        assert p.steps == ((2,), (1,), (1, 1))
        assert di_invert(t, p, 2) == (1,)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            di_insert((1, 2, 3), 4)  # n < 2k
        with pytest.raises(ValueError):
            di_insert((0, 1), 4)
        with pytest.raises(ValueError):
            di_insert((5,), 4)

    def test_invert_worked_example(self):
        t = StandardTableau(((1, 2, 3, 6), (4,), (5,)))
        p = VacillatingTableau(
            ((6,), (5,), (5, 1), (4, 1), (4, 2), (4, 1), (4, 1, 1)), coords="lambda", n=6
        )
        assert di_invert(t, p, 6) == (2, 4, 3)

    def test_invert_rejects_mismatch(self):
        t, p = di_insert((2, 4, 3), 6)
        other = VacillatingTableau(((6,), (5,), (5, 1)), coords="lambda", n=6)
        with pytest.raises(ValueError):
            di_invert(t, other, 6)
        with pytest.raises(ValueError):
            di_invert(t, p.to_gamma(), 6)

    def test_k1_exhaustive_round_trip(self):
        for x in range(1, 7):
            t, p = di_insert((x,), 6)
            assert di_invert(t, p, 6) == (x,)

    def test_full_round_trip_and_injectivity_n6_k3(self):
        seen = set()
        for seq in product(range(1, 7), repeat=3):
            t, p = di_insert(seq, 6)
            assert di_invert(t, p, 6) == seq
            seen.add((t.rows, p.steps))
        assert len(seen) == 216


class TestDiagramInsertion:
    def test_worked_example(self):
        p, q = vac_insert(EXAMPLE)
        assert q.steps == ((), (), (1,), (1,), (1, 1), (1,), (2,), (2,), (2, 1))
        assert p.steps == ((), (), (1,), (1,), (2,), (1,), (2,), (2,), (2, 1))
        assert vac_invert(p, q) == EXAMPLE

    def test_identity_and_singletons(self):
        p, q = vac_insert(identity_diagram(1))
        assert p.steps == q.steps == ((), (), (1,))
        p, q = vac_insert(singletons_diagram(1))
        assert p.steps == q.steps == ((), (), ())
        assert vac_invert(p, q) == singletons_diagram(1)

    def test_invert_all_empty(self):
        vt = VacillatingTableau(((),) * 5)
        assert vac_invert(vt, vt) == singletons_diagram(2)

    def test_invert_validation(self):
        good = VacillatingTableau(((), (), (1,)))
        with pytest.raises(ValueError):
            vac_invert(good, VacillatingTableau(((), (), ())))  # final shapes differ
        with pytest.raises(ValueError):
            vac_invert(good, VacillatingTableau(((), (), (1,), (1,), (1,))))  # lengths differ
        with pytest.raises(ValueError):
            vac_invert(good.to_lambda(4), good.to_lambda(4))

    def test_round_trip_exhaustive_a3(self):
        count = 0
        for d in enumerate_diagrams(3, "A"):
            p, q = vac_insert(d)
            assert vac_invert(p, q) == d
            count += 1
        assert count == 203

    def test_round_trip_half_family(self):
        for d in enumerate_diagrams(2, "half_A"):
            p, q = vac_insert(d)
            assert vac_invert(p, q, half=True) == d

    def test_final_shape_size_is_propagating_number(self):
        for k in (1, 2, 3):
            for d in enumerate_diagrams(k, "A"):
                p, q = vac_insert(d)
                assert sum(p.final_shape) == propagating_number(d)
                assert p.final_shape == q.final_shape

    def test_planarity_iff_one_row_paths(self):
        for d in enumerate_diagrams(3, "A"):
            p, q = vac_insert(d)
            one_row = all(len(s) <= 1 for s in p.steps + q.steps)
            assert one_row == is_planar(d)

    def test_flip_swaps_the_pair_a3(self):
        for d in enumerate_diagrams(3, "A"):
            p, q = vac_insert(d)
            fp, fq = vac_insert(flip(d))
            assert (fp, fq) == (q, p)

    def test_symmetric_iff_equal_pair_a3(self):
        for d in enumerate_diagrams(3, "A"):
            p, q = vac_insert(d)
            assert (flip(d) == d) == (p == q)

    def test_permutations_reduce_to_classical_rsk(self):
        for d in enumerate_diagrams(3, "S"):
            word = [insertion_sequence(d).insertion_at(j) for j in range(1, 4)]
            p_ref, q_ref = reference_rsk(word)
            p, q = vac_insert(d)
            assert chain_to_tableau(dedupe(p.steps)) == p_ref
            assert chain_to_tableau(dedupe(q.steps)) == q_ref

    def test_brauer_paths_oscillate(self):
        for d in enumerate_diagrams(3, "B"):
            p, q = vac_insert(d)
            for steps in (p.steps, q.steps):
                for j in range(2, len(steps), 2):
                    assert abs(sum(steps[j]) - sum(steps[j - 2])) == 1

    def test_half_diagrams_repeat_the_middle_shape(self):
        for d in enumerate_diagrams(3, "half_A"):
            p, q = vac_insert(d)
            assert q.steps[5] == p.steps[5]  # shapes at 2.5 and 3.5 agree

    def test_degenerate_sizes(self):
        from diagram_rsk.diagrams import SetPartitionDiagram

        t, p = di_insert((), 5)
        assert t.rows == ((1, 2, 3, 4, 5),) and p.steps == ((5,),)
        assert di_invert(t, p, 5) == ()
        t, p = di_insert((), 0)
        assert t.rows == () and di_invert(t, p, 0) == ()
        d0 = SetPartitionDiagram.from_standard_blocks(0, [])
        pp, qq = vac_insert(d0)
        assert pp.steps == qq.steps == ((),)
        assert vac_invert(pp, qq) == d0


def dedupe(steps):
    out = [steps[0]]
    for s in steps[1:]:
        if s != out[-1]:
            out.append(s)
    return out


def chain_to_tableau(chain):
    """Turn a saturated chain of shapes into the tableau whose entry m sits
    in the box added at step m."""
    rows: list[list[int]] = []
    for m in range(1, len(chain)):
        prev, cur = chain[m - 1], chain[m]
        for r in range(len(cur)):
            p = prev[r] if r < len(prev) else 0
            if cur[r] != p:
                if r == len(rows):
                    rows.append([])
                rows[r].append(m)
                break
    return tuple(tuple(r) for r in rows)


def reference_rsk(word):
    """Textbook row insertion, written independently of the library."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            bigger = [i for i, v in enumerate(row) if v > x]
            if not bigger:
                row.append(x)
                q_rows[r].append(step)
                break
            i = bigger[0]
            row[i], x = x, row[i]
            r += 1
    return tuple(tuple(r) for r in p_rows), tuple(tuple(r) for r in q_rows)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(enumerate_diagrams(4, "A"))))
def test_round_trip_random_a4(d):
    p, q = vac_insert(d)
    assert vac_invert(p, q) == d
