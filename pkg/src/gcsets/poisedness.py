"""Poisedness, independence, and fundamental polynomials.

A node set of degree ``n`` determines an evaluation (Vandermonde) matrix:
one row per node, one column per monomial of Pi_n in graded-lex order.
Poisedness is a nonzero determinant; a node is independent of the others
exactly when its evaluation row lies outside their span, which is also the
solvability criterion for its fundamental polynomial.

Rank and determinant go through fraction-free integer elimination after
clearing denominators, so every verdict here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import _linalg
from .algebra import Poly, dim_pi, monomials, rational
from .errors import NotPoisedError
from .geometry import Node, NodeSet, classify_lines

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class VandermondeMatrix:
    """Evaluation matrix of a node set over Pi_degree."""

    degree: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return dim_pi(self.degree)


def _evaluation_row(point: Node, degree: int) -> tuple[Fraction, ...]:
    x, y = point
    xpow = [_ONE]
    ypow = [_ONE]
    for _ in range(degree):
        xpow.append(xpow[-1] * x)
        ypow.append(ypow[-1] * y)
    return tuple(xpow[i] * ypow[j] for i, j in monomials(degree))


def vandermonde(points: NodeSet) -> VandermondeMatrix:
    """Evaluation matrix: entry (i, j) is the j-th monomial at node i."""
    return VandermondeMatrix(
        points.degree,
        tuple(_evaluation_row(p, points.degree) for p in points.nodes),
    )


def rank_det(matrix: VandermondeMatrix) -> tuple[int, Fraction | None]:
    """Exact rank, and the exact determinant when the matrix is square."""
    rows = matrix.rows
    if not rows:
        return 0, None
    int_rows, scales = _linalg.clear_row_denominators(rows)
    rank, det = _linalg.bareiss_rank_det(int_rows)
    if len(rows) != matrix.column_count:
        return rank, None
    assert det is not None
    scale = 1
    for s in scales:
        scale *= s
    return rank, Fraction(det, scale)


@lru_cache(maxsize=4096)
def is_poised(points: NodeSet) -> bool:
    """Whether interpolation on the set is unisolvent at its degree."""
    if len(points) != dim_pi(points.degree):
        return False
    _, det = rank_det(vandermonde(points))
    return det != 0


@lru_cache(maxsize=4096)
def is_independent(points: NodeSet) -> bool:
    """Whether every node possesses a fundamental polynomial."""
    if len(points) == 0:
        return True
    matrix = vandermonde(points)
    rank, _ = rank_det(matrix)
    return rank == len(points)


@lru_cache(maxsize=256)
def _redundancy_flags(points: NodeSet) -> tuple[bool, ...]:
    """Per node: True when its row is spanned by the other rows (and hence
    the node has no fundamental polynomial)."""
    rows = vandermonde(points).rows
    return tuple(_linalg.redundant_rows(rows))


def has_fundamental(point: Node, points: NodeSet) -> bool:
    """Rank-criterion test, cheaper than producing the polynomial."""
    idx = points.index(point)
    return not _redundancy_flags(points)[idx]


@lru_cache(maxsize=256)
def fundamental_polys(points: NodeSet) -> tuple[Poly, ...]:
    """All fundamental polynomials of a poised set, solved exactly at once.

    Row-reducing the evaluation matrix against the identity yields every
    coefficient vector in one elimination pass.
    """
    n = points.degree
    size = len(points)
    if size != dim_pi(n):
        raise NotPoisedError(f"{size} nodes cannot be {n}-poised (need {dim_pi(n)})")
    rows = vandermonde(points).rows
    aug = [list(rows[i]) + [_ONE if j == i else _ZERO for j in range(size)] for i in range(size)]
    red, pivots = _linalg.rref(aug)
    if pivots != list(range(size)):
        raise NotPoisedError("node set is not poised (singular evaluation matrix)")
    cols = []
    for i in range(size):
        cols.append(Poly(n, tuple(red[r][size + i] for r in range(size))))
    return tuple(cols)


def fundamental_poly(point: Node, points: NodeSet) -> Poly | None:
    """The polynomial taking value 1 at ``point`` and 0 at every other node.

    For a poised set this is the unique fundamental polynomial.  For a
    general set, one solution of the interpolation system is returned when
    it is solvable, otherwise ``None``.
    """
    idx = points.index(point)
    n = points.degree
    if len(points) == dim_pi(n):
        try:
            return fundamental_polys(points)[idx]
        except NotPoisedError:
            pass
    rows = [list(r) for r in vandermonde(points).rows]
    rhs = [_ONE if i == idx else _ZERO for i in range(len(points))]
    sol = _linalg.solve_linear(rows, rhs)
    if sol is None:
        return None
    return Poly(n, tuple(sol))


def is_essentially_dependent(points: NodeSet) -> bool:
    """True when no node of the set has a fundamental polynomial."""
    if len(points) == 0:
        raise ValueError("essential dependence is undefined for an empty set")
    return all(_redundancy_flags(points))


def curves_through(nodes: Sequence[Node], degree: int) -> list[Poly]:
    """Basis of all curves of the given degree through all listed nodes.

    Each basis element vanishes exactly (in exact arithmetic) on every input
    node; the list is empty when no such curve exists.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    rows = [list(_evaluation_row(p, degree)) for p in nodes]
    basis = _linalg.nullspace(rows, dim_pi(degree))
    return [Poly(degree, tuple(vec)) for vec in basis]


@dataclass(frozen=True)
class DependenceWitness:
    """Structured evidence that a node set is dependent.

    ``kind`` is one of ``collinear_n_plus_2``, ``conic_2n_plus_2``,
    ``cubic_3n`` or ``none``.  The cubic detector only certifies the
    necessary condition (a cubic through all 3n nodes), hence ``partial``.
    """

    kind: str
    node_indices: tuple[int, ...]
    line: object | None = None
    curve: Poly | None = None
    partial: bool = False


def dependence_witness(points: NodeSet) -> DependenceWitness:
    """Search for the structural cause of dependence.

    Order: a line through at least n+2 nodes; a conic (possibly reducible)
    through at least 2n+2 nodes; for a set of exactly 3n nodes, a cubic
    through all of them (necessary condition only).  Raises on an
    independent input.
    """
    if is_independent(points):
        raise ValueError("dependence_witness called on an independent set")
    n = points.degree
    nodes = points.nodes
    if len(nodes) >= 2:
        for entry in classify_lines(points).entries:
            if entry.count >= n + 2:
                return DependenceWitness(
                    kind="collinear_n_plus_2", node_indices=entry.nodes, line=entry.line
                )
    if len(nodes) >= 5:
        for subset in combinations(range(len(nodes)), 5):
            basis = curves_through([nodes[i] for i in subset], 2)
            if not basis:
                continue
            common = [
                i
                for i, p in enumerate(nodes)
                if all(q.eval(p.x, p.y) == 0 for q in basis)
            ]
            if len(common) >= 2 * n + 2:
                conic = basis[0]
                hits = tuple(
                    i for i, p in enumerate(nodes) if conic.eval(p.x, p.y) == 0
                )
                return DependenceWitness(
                    kind="conic_2n_plus_2", node_indices=hits, curve=conic
                )
    if len(nodes) == 3 * n:
        basis = curves_through(list(nodes), 3)
        if basis:
            return DependenceWitness(
                kind="cubic_3n",
                node_indices=tuple(range(len(nodes))),
                curve=basis[0],
                partial=True,
            )
    return DependenceWitness(kind="none", node_indices=())
