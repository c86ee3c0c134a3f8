"""Which nodes use which lines and curves.

A node of a poised set *uses* a curve when the curve divides the node's
fundamental polynomial.  This module computes the user set of a line
(``x_line``), the complementary set of nodes that neither lie on nor use a
curve (``n_curve``), maximality of curves with the equivalence cross-checks,
and the GC factorization of all fundamental polynomials into node-pair
lines.

Divisibility by a line has two independent routes: exact univariate long
division (the fast path, done in premultiplied integer arithmetic) and the
linear-solve route shared with higher-degree divisors.  ``uses_curve`` runs
the linear-solve route and, for lines, asserts agreement with the fast path.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import (
    Poly,
    divide_by_linear,
    divide_poly,
    d_nk,
    integer_coeff_vector,
    line_divides,
)
from .errors import InternalConsistencyError, NotPoisedError
from .geometry import Line, Node, NodeSet, classify_lines
from .poisedness import fundamental_polys, is_poised


def _require_poised(points: NodeSet) -> None:
    if not is_poised(points):
        raise NotPoisedError("operation requires a poised node set")


@lru_cache(maxsize=256)
def _int_fundamentals(points: NodeSet) -> tuple[tuple[int, ...], ...]:
    """Fundamental polynomials rescaled to integer coefficient vectors.

    Divisibility by a line is invariant under scaling, so the integer forms
    feed the fast long-division test.
    """
    return tuple(integer_coeff_vector(p) for p in fundamental_polys(points))


def line_users(points: NodeSet, line: Line) -> tuple[int, ...]:
    """Indices of the nodes whose fundamental polynomial the line divides.

    Nodes on the line are never users (their fundamental polynomial is 1
    there while the line vanishes), so they are skipped outright.
    """
    _require_poised(points)
    n = points.degree
    vectors = _int_fundamentals(points)
    out = []
    for i, p in enumerate(points.nodes):
        if line.value_at(p) == 0:
            continue
        if line_divides(vectors[i], n, line.a, line.b, line.c):
            out.append(i)
    return tuple(out)


def uses_curve(point: Node, points: NodeSet, curve) -> bool:
    """Whether the node uses the curve (the curve divides its fundamental).

    ``curve`` may be a Line or a Poly of degree 1..n.  Runs the
    linear-solve divisibility test; for lines the long-division fast path
    must agree, and a disagreement is raised as an internal error.
    """
    _require_poised(points)
    idx = points.index(point)
    q = curve.to_poly() if isinstance(curve, Line) else curve
    k = q.effective_degree()
    n = points.degree
    if not 1 <= k <= n:
        raise ValueError(f"curve degree must be between 1 and {n}, got {k}")
    if q.eval(point.x, point.y) == 0:
        return False
    p_star = fundamental_polys(points)[idx]
    quotient = divide_poly(p_star, q, n - k)
    result = quotient is not None
    if k == 1:
        line = Line.from_coefficients(q.coeff(1, 0), q.coeff(0, 1), q.coeff(0, 0))
        fast = divide_by_linear(p_star, line) is not None
        if fast != result:
            raise InternalConsistencyError(
                f"divisibility routes disagree for node {point} and line {line}"
            )
    return result


@dataclass(frozen=True)
class UsageSet:
    """Partition of a poised set relative to one line or curve.

    ``users`` use the curve, ``on_curve`` lie on it, and
    ``non_users_off_curve`` do neither (the set N_q).
    """

    target: object  # Line or Poly
    users: tuple[int, ...]
    on_curve: tuple[int, ...]
    non_users_off_curve: tuple[int, ...]

    @property
    def user_count(self) -> int:
        return len(self.users)


def x_line(points: NodeSet, line: Line) -> UsageSet:
    """The users of a line, with the full partition of the node set."""
    users = line_users(points, line)
    on = tuple(i for i, p in enumerate(points.nodes) if line.value_at(p) == 0)
    taken = set(users) | set(on)
    rest = tuple(i for i in range(len(points)) if i not in taken)
    return UsageSet(line, users, on, rest)


def n_curve(points: NodeSet, curve) -> UsageSet:
    """Partition relative to an arbitrary curve of degree 1..n."""
    _require_poised(points)
    q = curve.to_poly() if isinstance(curve, Line) else curve
    k = q.effective_degree()
    n = points.degree
    if not 1 <= k <= n:
        raise ValueError(f"curve degree must be between 1 and {n}, got {k}")
    if k == 1:
        return x_line(
            points, Line.from_coefficients(q.coeff(1, 0), q.coeff(0, 1), q.coeff(0, 0))
        )
    fundamentals = fundamental_polys(points)
    users = []
    on = []
    rest = []
    for i, p in enumerate(points.nodes):
        if q.eval(p.x, p.y) == 0:
            on.append(i)
        elif divide_poly(fundamentals[i], q, n - k) is not None:
            users.append(i)
        else:
            rest.append(i)
    return UsageSet(q, tuple(users), tuple(on), tuple(rest))


def product_of_lines(lines: Sequence[Line]) -> Poly:
    """The polynomial product of the given lines."""
    if not lines:
        return Poly.constant(1)
    result = lines[0].to_poly()
    for line in lines[1:]:
        result = result * line.to_poly()
    return result


@dataclass(frozen=True)
class MaximalCurveCheck:
    """Outcome of a maximality test, with the equivalence evidence."""

    is_maximal: bool
    degree: int
    node_count: int
    expected_count: int
    squarefree_verified: bool

    def __bool__(self) -> bool:
        return self.is_maximal


def is_maximal_curve(points: NodeSet, curve) -> MaximalCurveCheck:
    """Whether the curve passes through the maximal number d(n, k) of nodes.

    Accepts a Line, an explicit line product (sequence of Lines, whose
    squarefree-ness is verified by pairwise distinctness), or a general
    Poly (whose squarefree-ness is trusted, with a warning).  Whenever the
    maximality verdict is reached, the two equivalent characterizations are
    recomputed (no node off the curve fails to use it; the residual set is
    poised at the reduced degree) and any mismatch raises
    InternalConsistencyError.
    """
    _require_poised(points)
    squarefree_verified = True
    if isinstance(curve, Line):
        q = curve.to_poly()
    elif isinstance(curve, Poly):
        q = curve
        if q.effective_degree() > 1:
            squarefree_verified = False
            warnings.warn(
                "squarefree-ness of a general curve is assumed, not verified",
                stacklevel=2,
            )
    else:
        lines = list(curve)
        if len(set(lines)) != len(lines):
            raise ValueError("line product has a repeated factor (not squarefree)")
        q = product_of_lines(lines)
    k = q.effective_degree()
    n = points.degree
    if not 1 <= k <= n:
        raise ValueError(f"curve degree must be between 1 and {n}, got {k}")
    on = [i for i, p in enumerate(points.nodes) if q.eval(p.x, p.y) == 0]
    expected = d_nk(n, k)
    maximal = len(on) == expected
    usage = n_curve(points, q)
    if maximal != (len(usage.non_users_off_curve) == 0):
        raise InternalConsistencyError(
            "maximal-curve equivalence violated: node count vs empty N_q"
        )
    residual = NodeSet(n - k, tuple(p for i, p in enumerate(points.nodes) if i not in set(on)))
    if maximal != is_poised(residual):
        raise InternalConsistencyError(
            "maximal-curve equivalence violated: node count vs residual poisedness"
        )
    return MaximalCurveCheck(maximal, k, len(on), expected, squarefree_verified)


@dataclass(frozen=True)
class NodeFactorization:
    """Factor lines peeled from one node's fundamental polynomial.

    ``lines`` pairs each canonical line with its multiplicity; ``residual``
    is what remains after peeling every divisor among the node-pair lines.
    The node is resolved when the residual is a nonzero constant, in which
    case constant * product(lines) reconstructs the fundamental exactly.
    """

    node_index: int
    lines: tuple[tuple[Line, int], ...]
    residual: Poly

    @property
    def resolved(self) -> bool:
        return self.residual.effective_degree() == 0

    def line_list(self) -> tuple[Line, ...]:
        flat: list[Line] = []
        for line, mult in self.lines:
            flat.extend([line] * mult)
        return tuple(flat)


@dataclass(frozen=True)
class GCReport:
    """Tri-state GC classification with the per-node factorizations.

    ``is_gc`` is ``"yes"`` when every fundamental polynomial factors
    completely into node-pair lines, ``"no"`` when some residual is a
    nondegenerate conic (provably not a product of linear factors over any
    field), and ``"unresolved"`` otherwise: a nonconstant residual might
    still split into lines through at most one node, which this method
    cannot rule out.
    """

    is_gc: str
    factorizations: tuple[NodeFactorization, ...]


def _is_nondegenerate_conic(q: Poly) -> bool:
    if q.effective_degree() != 2:
        return False
    # det of the symmetric matrix of the quadratic form, times 8
    a = 2 * q.coeff(2, 0)
    b = q.coeff(1, 1)
    c = 2 * q.coeff(0, 2)
    d = q.coeff(1, 0)
    e = q.coeff(0, 1)
    f = 2 * q.coeff(0, 0)
    det = a * (c * f - e * e) - b * (b * f - e * d) + d * (b * e - c * d)
    return det != 0


@lru_cache(maxsize=128)
def gc_factorize(points: NodeSet) -> GCReport:
    """Peel node-pair lines off every fundamental polynomial.

    Candidate factors are exactly the canonical lines through at least two
    nodes, peeled with multiplicity in canonical order (the outcome is
    order-free since linear factors are unique up to scalars).
    """
    _require_poised(points)
    n = points.degree
    candidates = [e.line for e in classify_lines(points).entries]
    fundamentals = fundamental_polys(points)
    vectors = _int_fundamentals(points)
    results = []
    all_resolved = True
    definitely_not = False
    for i, p in enumerate(points.nodes):
        divisors = [
            line
            for line in candidates
            if line.value_at(p) != 0
            and line_divides(vectors[i], n, line.a, line.b, line.c)
        ]
        quotient = fundamentals[i]
        peeled: list[tuple[Line, int]] = []
        for line in divisors:
            mult = 0
            while True:
                reduced = divide_by_linear(quotient, line)
                if reduced is None:
                    break
                quotient = reduced
                mult += 1
            if mult:
                peeled.append((line, mult))
        residual = quotient.trimmed()
        fact = NodeFactorization(i, tuple(peeled), residual)
        results.append(fact)
        if not fact.resolved:
            all_resolved = False
            if _is_nondegenerate_conic(residual):
                definitely_not = True
    verdict = "yes" if all_resolved else ("no" if definitely_not else "unresolved")
    return GCReport(verdict, tuple(results))
