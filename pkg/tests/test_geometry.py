from fractions import Fraction

import pytest

from gcsets import (
    Line,
    NodeSet,
    classify_lines,
    incident,
    intersect_lines,
    line_through,
    maximal_lines,
    node,
    node_set,
    principal_lattice,
)


def test_line_through_examples():
    assert line_through(node(0, 0), node(1, 1)) == Line(1, -1, 0)
    assert line_through(node(0, 1), node(0, 2)) == Line(1, 0, 0)
    assert line_through(node("1/2", 0), node(0, "1/3")) == Line(2, 3, -1)


def test_line_through_is_symmetric():
    pairs = [
        (node(0, 0), node(1, 1)),
        (node("1/2", "-3"), node("2/7", "1/5")),
        (node(-4, 2), node(-4, 9)),
    ]
    for p, q in pairs:
        assert line_through(p, q) == line_through(q, p)


def test_line_through_identical_points():
    with pytest.raises(ValueError):
        line_through(node(1, 2), node(1, 2))


def test_incident_examples():
    assert incident(Line(1, -1, 0), node(2, 2))
    assert not incident(Line(1, -1, 0), node(2, 3))
    assert incident(Line(2, 3, -1), node("1/2", 0))


def test_line_canonical_form_enforced():
    with pytest.raises(ValueError):
        Line(0, 0, 3)
    with pytest.raises(ValueError):
        Line(2, 4, 6)  # gcd not 1
    with pytest.raises(ValueError):
        Line(-1, 2, 3)  # sign not normalized
    assert Line.from_coefficients(-2, -4, 6) == Line(1, 2, -3)
    assert Line.from_coefficients(0, "-1/3", "1/6") == Line(0, 2, -1)


def test_intersect_lines():
    assert intersect_lines(Line(1, 0, 0), Line(0, 1, 0)) == node(0, 0)
    assert intersect_lines(Line(1, 1, -2), Line(1, 1, 0)) is None
    p = intersect_lines(Line(2, 3, -1), Line(1, -1, 0))
    assert p == node("1/5", "1/5")


def test_node_set_rejects_duplicates():
    with pytest.raises(ValueError):
        node_set(2, [(0, 0), (1, 1), (0, 0)])


def test_node_set_rejects_negative_degree():
    with pytest.raises(ValueError):
        NodeSet(-1, (node(0, 0),))


def test_classify_lines_principal_lattice_n2(lattice2):
    cls = classify_lines(lattice2)
    three = cls.with_count(3)
    assert sorted(e.line for e in three) == [Line(0, 1, 0), Line(1, 0, 0), Line(1, 1, -2)]
    assert len(cls.with_count(2)) == 6
    assert cls.max_count == 3


def test_classify_lines_chung_yao_n3(cy3):
    cls = classify_lines(cy3)
    assert len(cls.with_count(4)) == 5
    assert not cls.with_count(3)


def test_classify_three_collinear():
    points = node_set(1, [(0, 0), (1, 1), (2, 2)])
    cls = classify_lines(points)
    assert len(cls.with_count(3)) == 1
    assert cls.with_count(3)[0].line == Line(1, -1, 0)


def test_classify_requires_two_nodes():
    with pytest.raises(ValueError):
        classify_lines(node_set(1, [(0, 0)]))


def test_maximal_lines_lattice3(lattice3):
    assert sorted(maximal_lines(lattice3)) == [
        Line(0, 1, 0),
        Line(1, 0, 0),
        Line(1, 1, -3),
    ]


def test_maximal_lines_chung_yao_generators(cy3):
    # every generating line of a Chung-Yao set is maximal
    assert len(maximal_lines(cy3)) == 5


def test_maximal_lines_generic_six_points():
    # six nodes with no 3 collinear have no 3-node line at degree 2
    from oracles import max_collinear

    points = node_set(2, [(0, 0), (1, 0), (0, 1), (2, 3), (3, 1), ("1/2", "7/2")])
    assert max_collinear(points.nodes) == 2
    assert maximal_lines(points) == ()


def test_incidence_lists_are_complete(lattice3):
    cls = classify_lines(lattice3)
    for entry in cls.entries:
        for i, p in enumerate(lattice3.nodes):
            assert (entry.line.value_at(p) == 0) == (i in entry.nodes)


def test_affine_invariance_of_incidence(lattice3):
    from gcsets import affine_map, affine_map_line

    mat = ((2, "1/3"), (0, "-1"))
    shift = ("5/2", 1)
    mapped = affine_map(lattice3, mat, shift)
    for entry in classify_lines(lattice3).entries:
        image = affine_map_line(entry.line, mat, shift)
        hits = tuple(
            i for i, p in enumerate(mapped.nodes) if image.value_at(p) == 0
        )
        assert hits == entry.nodes
