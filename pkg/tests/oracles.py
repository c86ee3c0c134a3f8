"""Independent brute-force oracles used to cross-check the library.

Deliberately naive and written against different algorithms than the
production code: rank by rational Gauss-Jordan (the library uses
fraction-free integer elimination), collinearity by cross products (the
library canonicalizes lines), divisibility by evaluation at degree+1 points
of the line (the library runs long division / linear solves).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def oracle_rank(rows) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [v / pv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def oracle_monomials(degree: int):
    # plain nested loops, a different order than the library's graded-lex
    return [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]


def oracle_vandermonde(nodes, degree: int):
    monos = oracle_monomials(degree)
    return [[p.x**i * p.y**j for (i, j) in monos] for p in nodes]


def oracle_node_rank(nodes, degree: int) -> int:
    return oracle_rank(oracle_vandermonde(nodes, degree))


def oracle_is_independent(nodes, degree: int) -> bool:
    return oracle_node_rank(nodes, degree) == len(nodes)


def max_collinear(nodes) -> int:
    if len(nodes) < 2:
        return len(nodes)
    best = 2
    for i, j in combinations(range(len(nodes)), 2):
        a, b = nodes[i], nodes[j]
        count = 2
        for k in range(len(nodes)):
            if k in (i, j):
                continue
            c = nodes[k]
            if (b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x):
                count += 1
        best = max(best, count)
    return best


def oracle_nullspace(rows, ncols):
    m = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [v / pv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    basis = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -m[r][free]
        basis.append(vec)
    return basis


def max_conic_incidence(nodes) -> int:
    """Most nodes on a single conic, found by scanning all 5-subsets."""
    if len(nodes) < 5:
        return len(nodes)
    monos = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    best = 0
    for subset in combinations(range(len(nodes)), 5):
        rows = [[nodes[i].x**a * nodes[i].y**b for (a, b) in monos] for i in subset]
        basis = oracle_nullspace(rows, 6)
        if not basis:
            continue
        common = 0
        for p in nodes:
            vals = [
                sum(c * p.x**a * p.y**b for c, (a, b) in zip(vec, monos))
                for vec in basis
            ]
            if all(v == 0 for v in vals):
                common += 1
        best = max(best, common)
    return best


def oracle_line_divides(poly, line, degree: int) -> bool:
    """Vanishing at degree+1 distinct points of the line is equivalent to
    divisibility for polynomials of total degree <= degree."""
    a, b, c = Fraction(line.a), Fraction(line.b), Fraction(line.c)
    points = []
    t = 0
    while len(points) < degree + 1:
        if b != 0:
            points.append((Fraction(t), (-a * t - c) / b))
        else:
            points.append((-c / a, Fraction(t)))
        t += 1
    return all(poly.eval(x, y) == 0 for x, y in points)
