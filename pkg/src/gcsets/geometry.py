"""Planar nodes, canonical lines, and k-node-line classification.

Nodes have exact rational coordinates.  Lines are stored as integer triples
``(a, b, c)`` for ``a*x + b*y + c = 0``, normalized so that equal lines have
equal triples: denominators cleared, gcd divided out, first nonzero
coefficient positive.  Deduplication is therefore a plain tuple comparison.

Only lines through at least two nodes are ever enumerated; a line through
fewer nodes must be supplied explicitly by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterator, NamedTuple, Sequence

from .algebra import Poly, rational


class Node(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def node(x, y) -> Node:
    """Build a node, coercing coordinates to exact rationals."""
    return Node(rational(x), rational(y))


@dataclass(frozen=True, order=True)
class Line:
    """Canonical integer line ``a*x + b*y + c = 0``."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate line: a and b both zero")
        if gcd(gcd(abs(self.a), abs(self.b)), abs(self.c)) != 1:
            raise ValueError("line coefficients not in lowest terms")
        first = self.a if self.a != 0 else self.b
        if first < 0:
            raise ValueError("line not sign-normalized")

    @classmethod
    def from_coefficients(cls, a, b, c) -> "Line":
        """Canonicalize arbitrary rational coefficients."""
        a, b, c = rational(a), rational(b), rational(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a and b both zero")
        mult = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * mult), int(b * mult), int(c * mult)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        ia, ib, ic = ia // g, ib // g, ic // g
        first = ia if ia != 0 else ib
        if first < 0:
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    def value_at(self, point) -> Fraction:
        x, y = point
        return self.a * rational(x) + self.b * rational(y) + self.c

    def to_poly(self) -> Poly:
        return Poly.from_coeffs(1, (self.c, self.a, self.b))

    def __str__(self) -> str:
        return f"{self.a}x{self.b:+}y{self.c:+}=0"


def line_through(p: Node, q: Node) -> Line:
    """Canonical line joining two distinct nodes."""
    if p == q:
        raise ValueError(f"identical points: {p}")
    a = p.y - q.y
    b = q.x - p.x
    c = p.x * q.y - q.x * p.y
    return Line.from_coefficients(a, b, c)


def incident(line: Line, point) -> bool:
    """Exact test whether the point satisfies the line equation."""
    return line.value_at(point) == 0


def intersect_lines(l1: Line, l2: Line) -> Node | None:
    """Intersection point of two lines, or ``None`` when parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return Node(x, y)


@dataclass(frozen=True)
class NodeSet:
    """Distinct planar nodes together with the interpolation degree."""

    degree: int
    nodes: tuple[Node, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("nodes must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[Node]:
        return iter(self.nodes)

    def __getitem__(self, i: int) -> Node:
        return self.nodes[i]

    def index(self, point: Node) -> int:
        return self.nodes.index(point)


def node_set(degree: int, points: Sequence) -> NodeSet:
    """Build a NodeSet from any (x, y) pairs."""
    return NodeSet(degree, tuple(node(x, y) for x, y in points))


class LineIncidence(NamedTuple):
    line: Line
    nodes: tuple[int, ...]  # indices into the NodeSet, ascending

    @property
    def count(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class LineClassification:
    """Every line through at least two nodes, with its full incidence list."""

    entries: tuple[LineIncidence, ...]

    def with_count(self, k: int) -> tuple[LineIncidence, ...]:
        """The k-node lines."""
        return tuple(e for e in self.entries if e.count == k)

    def with_count_at_least(self, k: int) -> tuple[LineIncidence, ...]:
        return tuple(e for e in self.entries if e.count >= k)

    def incidence(self, line: Line) -> tuple[int, ...] | None:
        for e in self.entries:
            if e.line == line:
                return e.nodes
        return None

    @property
    def lines(self) -> tuple[Line, ...]:
        return tuple(e.line for e in self.entries)

    @property
    def max_count(self) -> int:
        return max((e.count for e in self.entries), default=0)


@lru_cache(maxsize=256)
def classify_lines(points: NodeSet) -> LineClassification:
    """Classify all lines determined by node pairs by their node count.

    Enumerates every pair, deduplicates through the canonical form, then
    rescans each distinct line for its full incidence list.  At desk scale
    this is at most a few hundred pairs, so no spatial index is needed.
    """
    if len(points) < 2:
        raise ValueError("need at least two nodes to classify lines")
    seen: dict[Line, None] = {}
    nodes = points.nodes
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            seen.setdefault(line_through(nodes[i], nodes[j]), None)
    entries = []
    for line in seen:
        hits = tuple(i for i, p in enumerate(nodes) if line.value_at(p) == 0)
        entries.append(LineIncidence(line, hits))
    entries.sort(key=lambda e: (e.line.a, e.line.b, e.line.c))
    return LineClassification(tuple(entries))


def maximal_lines(points: NodeSet) -> tuple[Line, ...]:
    """All lines through exactly degree+1 nodes."""
    if len(points) < 2:
        return ()
    wanted = points.degree + 1
    return tuple(e.line for e in classify_lines(points).with_count(wanted))


def line_nodes(points: NodeSet, line: Line) -> tuple[int, ...]:
    """Indices of the nodes lying on an arbitrary given line."""
    return tuple(i for i, p in enumerate(points.nodes) if line.value_at(p) == 0)
