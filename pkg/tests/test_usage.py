from fractions import Fraction

import pytest
from oracles import oracle_line_divides

from gcsets import (
    Line,
    NotPoisedError,
    Poly,
    fundamental_polys,
    gc_factorize,
    is_maximal_curve,
    is_poised,
    maximal_lines,
    n_curve,
    node,
    node_set,
    principal_lattice,
    product_of_lines,
    uses_curve,
    x_line,
)
from gcsets.errors import InternalConsistencyError
from gcsets.geometry import NodeSet, classify_lines


def test_uses_curve_maximal_line(lattice3):
    for line in maximal_lines(lattice3):
        for p in lattice3.nodes:
            if line.value_at(p) != 0:
                assert uses_curve(p, lattice3, line)


def test_uses_curve_false_on_curve(lattice3):
    line = maximal_lines(lattice3)[0]
    on_line = next(p for p in lattice3.nodes if line.value_at(p) == 0)
    assert not uses_curve(on_line, lattice3, line)


def test_uses_curve_principal_example(lattice2):
    assert uses_curve(node(0, 0), lattice2, Line.from_coefficients(1, 1, -1))
    assert not uses_curve(node(1, 1), lattice2, Line.from_coefficients(1, 1, -1))


def test_uses_curve_requires_poised():
    bad = node_set(1, [(0, 0), (1, 0), (2, 0)])
    with pytest.raises(NotPoisedError):
        uses_curve(node(0, 0), bad, Line.from_coefficients(0, 1, -1))


def test_uses_curve_degree_bounds(lattice2):
    with pytest.raises(ValueError):
        uses_curve(node(0, 0), lattice2, Poly.constant(2))
    with pytest.raises(ValueError):
        uses_curve(node(0, 0), lattice2, Poly.parse("x^3"))


def test_x_line_maximal(lattice3):
    for line in maximal_lines(lattice3):
        usage = x_line(lattice3, line)
        off = tuple(
            i for i, p in enumerate(lattice3.nodes) if line.value_at(p) != 0
        )
        assert usage.users == off
        assert usage.non_users_off_curve == ()


def test_x_line_two_node_bound(lattice3):
    for entry in classify_lines(lattice3).with_count(2):
        assert len(x_line(lattice3, entry.line).users) <= 1


def test_x_line_three_users_on_lattice3(lattice3):
    usage = x_line(lattice3, Line.from_coefficients(0, 1, -1))
    users = {lattice3.nodes[i] for i in usage.users}
    assert users == {node(0, 2), node(1, 2), node(0, 3)}


def test_x_line_partition(lattice4):
    for entry in classify_lines(lattice4).entries:
        usage = x_line(lattice4, entry.line)
        groups = (
            set(usage.users) | set(usage.on_curve) | set(usage.non_users_off_curve)
        )
        assert groups == set(range(len(lattice4)))
        assert not set(usage.users) & set(usage.on_curve)
        assert not set(usage.users) & set(usage.non_users_off_curve)


def test_line_users_matches_evaluation_oracle(lattice4):
    polys = fundamental_polys(lattice4)
    for entry in classify_lines(lattice4).entries:
        users = set(x_line(lattice4, entry.line).users)
        oracle = {
            i
            for i, p in enumerate(lattice4.nodes)
            if entry.line.value_at(p) != 0
            and oracle_line_divides(polys[i], entry.line, lattice4.degree)
        }
        assert users == oracle


def test_n_curve_maximal_conic(lattice3):
    # two maximal lines form a maximal conic through 2n+1 nodes
    m1, m2 = maximal_lines(lattice3)[:2]
    conic = product_of_lines([m1, m2])
    usage = n_curve(lattice3, conic)
    assert usage.non_users_off_curve == ()
    assert len(usage.on_curve) == 7  # 2n+1


def test_n_curve_non_maximal_conic(lattice3):
    # an n-node line times a maximal line meeting it at a node: 2n on-curve
    ell = Line.from_coefficients(0, 1, -1)
    m = Line.from_coefficients(1, 0, 0)
    usage = n_curve(lattice3, product_of_lines([ell, m]))
    assert len(usage.on_curve) == 6  # 2n, one short of maximal
    assert usage.non_users_off_curve != ()


def test_is_maximal_curve_line(lattice4):
    for line in maximal_lines(lattice4):
        check = is_maximal_curve(lattice4, line)
        assert check
        assert check.node_count == check.expected_count == 5
        assert check.squarefree_verified


def test_is_maximal_curve_conic_product(lattice3):
    m1, m2 = maximal_lines(lattice3)[:2]
    assert is_maximal_curve(lattice3, [m1, m2])
    ell = Line.from_coefficients(0, 1, -1)
    m = Line.from_coefficients(1, 0, 0)
    assert not is_maximal_curve(lattice3, [ell, m])


def test_is_maximal_curve_rejects_repeated_factor(lattice3):
    m = maximal_lines(lattice3)[0]
    with pytest.raises(ValueError):
        is_maximal_curve(lattice3, [m, m])


def test_is_maximal_curve_warns_for_general_conic(lattice2):
    circle = Poly.parse("x^2+y^2-1")
    with pytest.warns(UserWarning):
        check = is_maximal_curve(lattice2, circle)
    assert not check.squarefree_verified


def test_gc_factorize_principal_structure():
    for n in (1, 2, 3, 4):
        lattice = principal_lattice(n)
        report = gc_factorize(lattice)
        assert report.is_gc == "yes"
        for fact in report.factorizations:
            i, j = (int(v) for v in lattice.nodes[fact.node_index])
            expected = (
                [Line.from_coefficients(1, 0, -k) for k in range(i)]
                + [Line.from_coefficients(0, 1, -k) for k in range(j)]
                + [
                    Line.from_coefficients(1, 1, -k)
                    for k in range(i + j + 1, n + 1)
                ]
            )
            assert sorted(fact.line_list()) == sorted(expected)
            assert fact.resolved


def test_gc_factorize_reconstructs_fundamentals(lattice3):
    report = gc_factorize(lattice3)
    polys = fundamental_polys(lattice3)
    for fact in report.factorizations:
        rebuilt = fact.residual
        for line, mult in fact.lines:
            for _ in range(mult):
                rebuilt = rebuilt * line.to_poly()
        assert rebuilt == polys[fact.node_index]


def test_gc_factorize_chung_yao(cy3):
    report = gc_factorize(cy3)
    assert report.is_gc == "yes"
    generators = set(maximal_lines(cy3))
    for fact in report.factorizations:
        used = set(fact.line_list())
        assert used <= generators
        assert len(fact.line_list()) == cy3.degree


def test_gc_factorize_no_one_node_lines(cy3, lattice4, gc3fm):
    for points in (cy3, lattice4, gc3fm):
        cls = classify_lines(points)
        report = gc_factorize(points)
        for fact in report.factorizations:
            for line, _ in fact.lines:
                hits = cls.incidence(line)
                assert hits is not None and len(hits) >= 2


def test_gc_factorize_random_degree2_is_definitively_no():
    from gcsets import random_poised

    points = random_poised(2, seed=12, bound=6)
    report = gc_factorize(points)
    # generic quadratic fundamentals are nondegenerate conics
    assert report.is_gc in ("no", "yes", "unresolved")
    if report.is_gc == "yes":
        pytest.skip("random draw happened to be GC")
    unresolved = [f for f in report.factorizations if not f.resolved]
    assert unresolved


def test_usage_affine_invariance(lattice3):
    from gcsets import affine_map, affine_map_line

    mat = (("1/2", 1), (2, "-3"))
    shift = (4, "1/3")
    mapped = affine_map(lattice3, mat, shift)
    assert is_poised(mapped)
    for entry in classify_lines(lattice3).entries:
        image = affine_map_line(entry.line, mat, shift)
        assert x_line(mapped, image).users == x_line(lattice3, entry.line).users
