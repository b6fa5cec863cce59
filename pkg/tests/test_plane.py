import itertools
import time

import pytest

from powerchoice.plane import AffinePlane, latin_square, plane_check, plane_for_order


def test_ag22_counts():
    P = plane_for_order(2)
    assert P.num_points == 4
    assert len(list(P.lines())) == 6
    assert len(P.classes) == 3 and all(len(c) == 2 for c in P.classes)


@pytest.mark.parametrize("q", [3, 4])
def test_counts(q):
    P = plane_for_order(q)
    assert P.num_points == q * q
    assert len(list(P.lines())) == q * q + q
    assert len(P.classes) == q + 1


def test_class_layout():
    P = plane_for_order(3)
    # vertical lines x = c and horizontal lines y = b
    assert P.classes[0][1] == (3, 4, 5)
    assert P.classes[1][2] == (2, 5, 8)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_axioms_pass(q):
    reports = plane_check(plane_for_order(q))
    assert [r.claim for r in reports] == ["plane.line_size", "plane.unique_line_per_pair",
                                          "plane.parallel_disjoint", "plane.crossing_meet_once",
                                          "plane.prime_power_order"]
    assert all(r.passed for r in reports)


def test_gf8_is_fast():
    start = time.perf_counter()
    assert all(r.passed for r in plane_check(plane_for_order(8)))
    assert time.perf_counter() - start < 1.0


def test_mutated_line_is_cited():
    P = plane_for_order(3)
    classes = [list(c) for c in P.classes]
    classes[2][1] = classes[2][1][1:]
    bad = AffinePlane(None, 3, tuple(tuple(c) for c in classes))
    reports = {r.claim: r for r in plane_check(bad)}
    size = reports["plane.line_size"]
    assert size.status == "fail"
    assert size.witnesses == [{"class": 2, "index": 1, "size": 2}]
    assert reports["plane.unique_line_per_pair"].status == "fail"


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_one_line_per_class_through_each_point(q):
    P = plane_for_order(q)
    for p in range(q * q):
        through = [sum(p in line for line in cls) for cls in P.classes]
        assert through == [1] * (q + 1)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_latin_squares_mutually_orthogonal(q):
    P = plane_for_order(q)
    squares = [latin_square(P, 1, 2, h) for h in range(3, q + 1)] + [latin_square(P, 1, 2, 0)]
    for sq in squares:
        for row in sq:
            assert sorted(row) == list(range(q))
        for col in zip(*sq):
            assert sorted(col) == list(range(q))
    for s1, s2 in itertools.combinations(squares, 2):
        pairs = {(s1[r][c], s2[r][c]) for r in range(q) for c in range(q)}
        assert len(pairs) == q * q
