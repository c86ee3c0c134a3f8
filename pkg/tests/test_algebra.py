from fractions import Fraction

import pytest

from gcsets import (
    Line,
    Poly,
    d_nk,
    dim_pi,
    divide_by_linear,
    divide_poly,
    line_through,
    node,
    poly_eval,
)
from gcsets.algebra import integer_coeff_vector, line_divides, monomial_index, monomials


def test_dim_pi_values():
    assert dim_pi(2) == 6
    assert dim_pi(0) == 1
    assert dim_pi(5) == 21


def test_dim_pi_rejects_negative():
    with pytest.raises(ValueError):
        dim_pi(-1)


def test_d_nk_values():
    assert d_nk(4, 1) == 5  # maximal line: n+1 nodes
    assert d_nk(5, 2) == 11  # maximal conic: 2n+1 nodes
    assert d_nk(3, 3) == 9  # maximal cubic: 3n nodes


@pytest.mark.parametrize("n,k", [(3, 0), (3, 4), (0, 1), (2, 3)])
def test_d_nk_rejects_out_of_range(n, k):
    with pytest.raises(ValueError):
        d_nk(n, k)


def test_dimension_difference_identity():
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert dim_pi(n) - dim_pi(n - k) == d_nk(n, k)


def test_monomial_order_is_graded_lex():
    order = list(monomials(3))
    assert order == [
        (0, 0),
        (1, 0),
        (0, 1),
        (2, 0),
        (1, 1),
        (0, 2),
        (3, 0),
        (2, 1),
        (1, 2),
        (0, 3),
    ]
    for pos, (i, j) in enumerate(order):
        assert monomial_index(i, j) == pos


def test_poly_eval_examples():
    assert poly_eval(Poly.parse("x+y-2"), node(1, 1)) == 0
    assert poly_eval(Poly.parse("x^2+y^2"), node("1/2", "1/2")) == Fraction(1, 2)
    half_shifted = Fraction(1, 2) * (Poly.parse("x+y-1") * Poly.parse("x+y-2"))
    assert poly_eval(half_shifted, node(0, 0)) == 1


def test_poly_mul_examples():
    assert Poly.parse("x-y") * Poly.parse("x+y") == Poly.parse("x^2-y^2")
    p = Poly.parse("3*x^2*y - 1/2*y + 7")
    assert p * Poly.constant(1) == p
    assert Poly.parse("x+y-1") * Poly.parse("x+y-2") == Poly.parse(
        "x^2+2*x*y+y^2-3*x-3*y+2"
    )


def test_poly_equality_ignores_padding():
    p = Poly.parse("x+y")
    assert p.pad_to(4) == p
    assert hash(p.pad_to(4)) == hash(p)
    assert Poly.zero(3) == Poly.zero(0)


def test_poly_effective_degree_and_trim():
    p = Poly.parse("x*y + 1").pad_to(5)
    assert p.effective_degree() == 2
    assert p.trimmed().max_degree == 2
    assert Poly.zero(4).effective_degree() == 0


def test_divide_by_linear_examples():
    x_minus_y = line_through(node(0, 0), node(1, 1))
    assert divide_by_linear(Poly.parse("x^2-y^2"), x_minus_y) == Poly.parse("x+y")
    assert divide_by_linear(Poly.parse("x^2+y^2"), x_minus_y) is None
    p = Fraction(1, 2) * (Poly.parse("x+y-1") * Poly.parse("x+y-2"))
    ell = Line.from_coefficients(1, 1, -1)
    quotient = divide_by_linear(p, ell)
    assert quotient == Fraction(1, 2) * Poly.parse("x+y-2")
    # reconstruct bit-exactly
    assert ell.to_poly() * quotient == p


def test_divide_by_vertical_and_horizontal_lines():
    vertical = Line.from_coefficients(1, 0, -2)  # x = 2
    p = vertical.to_poly() * Poly.parse("y^2 - x + 3")
    assert divide_by_linear(p, vertical) == Poly.parse("y^2 - x + 3")
    horizontal = Line.from_coefficients(0, 1, 5)
    q = horizontal.to_poly() * Poly.parse("x^3 - 1/7")
    assert divide_by_linear(q, horizontal) == Poly.parse("x^3 - 1/7")
    assert divide_by_linear(Poly.parse("x^2+1"), vertical) is None


def test_divide_by_linear_degenerate_line():
    class Fake:
        a = b = 0
        c = 1

    with pytest.raises(ValueError):
        divide_by_linear(Poly.parse("x"), Fake())


def test_divide_by_linear_zero_polynomial():
    line = Line.from_coefficients(1, -1, 0)
    assert divide_by_linear(Poly.zero(3), line) == Poly.zero(0)


def test_divide_poly_examples():
    assert divide_poly(Poly.parse("x^2-y^2"), Poly.parse("x-y"), 1) == Poly.parse("x+y")
    circle = Poly.parse("x^2+y^2-1")
    product = circle * Poly.parse("x+y")
    assert divide_poly(product, circle, 1) == Poly.parse("x+y")
    assert divide_poly(Poly.parse("x^3"), circle, 1) is None


def test_divide_poly_errors():
    with pytest.raises(ValueError):
        divide_poly(Poly.parse("x^2"), Poly.constant(3), 2)
    with pytest.raises(ValueError):
        divide_poly(Poly.parse("x^3"), Poly.parse("x"), 1)  # 1 + 1 < 3


def test_divide_routes_agree():
    p = Poly.parse("x^3 - 2*x^2*y + x*y^2 - x^2 + 2*x*y - y^2")
    for coeffs in [(1, -1, 0), (1, 0, -1), (0, 1, 2), (2, 3, -1)]:
        line = Line.from_coefficients(*coeffs)
        slow = divide_poly(p, line.to_poly(), p.effective_degree() - 1)
        fast = divide_by_linear(p, line)
        assert (slow is None) == (fast is None)
        if slow is not None:
            assert slow == fast


def test_integer_fast_path_matches_rational_division():
    polys = [
        Poly.parse("x^2-y^2"),
        Poly.parse("1/2*x^2 + x*y + 1/2*y^2 - 3/2*x - 3/2*y + 1"),
        Poly.parse("x^3 + y^3"),
        Line.from_coefficients(3, -2, 1).to_poly() * Poly.parse("x*y - 1/3"),
    ]
    lines = [
        Line.from_coefficients(1, 1, -1),
        Line.from_coefficients(1, -1, 0),
        Line.from_coefficients(3, -2, 1),
        Line.from_coefficients(1, 0, 4),
        Line.from_coefficients(0, 1, -7),
    ]
    for p in polys:
        vec = integer_coeff_vector(p)
        for line in lines:
            fast = line_divides(vec, p.max_degree, line.a, line.b, line.c)
            slow = divide_by_linear(p, line) is not None
            assert fast == slow, f"{p} vs {line}"


def test_parse_round_trip_via_str():
    samples = ["x^2 - y^2", "1/2*x*y + 3", "-x + 2/3", "x^3*y^2 - 7*x - 1/5"]
    for text in samples:
        p = Poly.parse(text)
        assert Poly.parse(str(p).replace(" ", "")) == p
