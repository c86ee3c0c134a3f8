"""Generators for classical poised and GC node-set families.

All generators are deterministic given their seed, validate their own
postconditions exactly (poisedness, maximal-line counts, GC status), and
retry on degenerate random draws up to a fixed budget.  Coordinates are
bounded-height rationals so integer growth in exact elimination stays
manageable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import dim_pi
from .errors import GenerationError
from .geometry import (
    Line,
    Node,
    NodeSet,
    classify_lines,
    incident,
    intersect_lines,
    line_through,
    node,
)
from .poisedness import is_poised
from .usage import gc_factorize

RETRY_BUDGET = 1000

FAMILIES = (
    "principal",
    "chung_yao",
    "berzolari_radon",
    "random_poised",
    "gc3_four_maximal",
)


@dataclass(frozen=True)
class GeneratorConfig:
    """Recipe for one generated node set.

    ``bound`` caps numerator and denominator magnitudes of random
    coordinates.  ``affine`` post-composes a seeded random invertible affine
    map, which preserves poisedness, GC status and all usage relations.
    """

    family: str
    degree: int = 3
    seed: int = 0
    bound: int = 10
    affine: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")


def principal_lattice(n: int) -> NodeSet:
    """The triangular integer lattice {(i, j) : i + j <= n}."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    nodes = []
    for j in range(n + 1):
        for i in range(n - j + 1):
            nodes.append(node(i, j))
    return NodeSet(n, tuple(nodes))


def chung_yao(lines: Sequence[Line]) -> NodeSet:
    """Pairwise intersections of n+2 lines in general position.

    Validates exactly: no two lines parallel, no three concurrent; offending
    index pairs/triples are reported.
    """
    lines = list(lines)
    if len(lines) < 3:
        raise ValueError("need at least 3 lines")
    n = len(lines) - 2
    points: dict[tuple[int, int], Node] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = intersect_lines(lines[i], lines[j])
            if p is None:
                raise ValueError(f"lines {i} and {j} are parallel")
            points[(i, j)] = p
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            for k in range(j + 1, len(lines)):
                if incident(lines[k], points[(i, j)]):
                    raise ValueError(f"lines {i}, {j}, {k} are concurrent")
    return NodeSet(n, tuple(points[key] for key in sorted(points)))


def _random_fraction(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _random_line(rng: random.Random, bound: int) -> Line:
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        if a == 0 and b == 0:
            continue
        return Line.from_coefficients(a, b, rng.randint(-bound, bound))


def random_lines_general_position(
    count: int, seed: int = 0, bound: int = 10
) -> list[Line]:
    """Seeded random lines, pairwise non-parallel and never three concurrent."""
    rng = random.Random(seed)
    chosen: list[Line] = []
    meets: list[Node] = []
    for _ in range(RETRY_BUDGET):
        if len(chosen) == count:
            return chosen
        cand = _random_line(rng, bound)
        if cand in chosen:
            continue
        if any(incident(cand, q) for q in meets):
            continue  # would make three lines concurrent
        new_meets = [intersect_lines(line, cand) for line in chosen]
        if any(p is None for p in new_meets):
            continue  # parallel pair
        chosen.append(cand)
        meets.extend(new_meets)  # type: ignore[arg-type]
    if len(chosen) == count:
        return chosen
    raise GenerationError(f"could not draw {count} lines in general position")


def _random_point_on(
    line: Line, rng: random.Random, bound: int, avoid: set[Node], off_lines: Sequence[Line]
) -> Node:
    for _ in range(RETRY_BUDGET):
        t = _random_fraction(rng, bound)
        if line.b != 0:
            p = Node(t, Fraction(-(line.a * t + line.c), line.b))
        else:
            p = Node(Fraction(-line.c, line.a), t)
        if p in avoid:
            continue
        if any(incident(other, p) for other in off_lines):
            continue
        return p
    raise GenerationError(f"no admissible point found on {line}")


def berzolari_radon(
    lines: Sequence[Line],
    seed: int = 0,
    bound: int = 10,
    prescribed: Sequence[Sequence[Node]] | None = None,
) -> NodeSet:
    """Layered construction: line j carries n+2-j fresh nodes off lines 1..j-1.

    With ``prescribed`` node lists (one per line, validated against the
    layer counts) the construction is deterministic; otherwise nodes are
    picked at random with the given seed.  The result is checked to be
    poised.
    """
    lines = list(lines)
    n = len(lines) - 1
    if n < 1:
        raise ValueError("need at least 2 lines")
    if len(set(lines)) != len(lines):
        raise ValueError("lines must be pairwise distinct")
    nodes: list[Node] = []
    for j, line in enumerate(lines):
        wanted = n + 1 - j
        earlier = lines[:j]
        if prescribed is not None:
            layer = list(prescribed[j])
            if len(layer) != wanted:
                raise ValueError(f"line {j} needs exactly {wanted} nodes")
            for p in layer:
                if not incident(line, p):
                    raise ValueError(f"{p} is not on line {j}")
                if any(incident(e, p) for e in earlier):
                    raise ValueError(f"{p} lies on an earlier line")
                if p in nodes:
                    raise ValueError(f"duplicate node {p}")
                nodes.append(p)
        else:
            rng = random.Random(seed * 1_000_003 + j)
            for _ in range(wanted):
                p = _random_point_on(line, rng, bound, set(nodes), earlier)
                nodes.append(p)
    result = NodeSet(n, tuple(nodes))
    if not is_poised(result):
        raise GenerationError("Berzolari-Radon draw is not poised")
    return result


def random_poised(n: int, seed: int = 0, bound: int = 10) -> NodeSet:
    """Rejection-sample dim_pi(n) bounded-height rational nodes until poised."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    rng = random.Random(seed)
    size = dim_pi(n)
    for _ in range(RETRY_BUDGET):
        seen: set[Node] = set()
        while len(seen) < size:
            seen.add(Node(_random_fraction(rng, bound), _random_fraction(rng, bound)))
        candidate = NodeSet(n, tuple(sorted(seen)))
        if is_poised(candidate):
            return candidate
    raise GenerationError(f"no poised set of degree {n} found within budget")


def gc3_four_maximal(seed: int = 0, bound: int = 10) -> NodeSet:
    """A GC_3 set with exactly 4 maximal lines and engineered 3-node lines.

    Six nodes are the intersections of four general-position lines; one
    extra "free" node sits on each line.  The free nodes are placed so that
    one 3-node line passes through an intersection node and two free nodes,
    and another passes through three free nodes, making both usage patterns
    observable.  All postconditions (poisedness, GC, exactly four maximal
    lines, the two 3-node lines) are validated exactly; degenerate draws
    are retried.
    """
    rng = random.Random(seed)
    for attempt in range(RETRY_BUDGET):
        sub_seed = rng.randint(0, 2**62)
        try:
            maximal = random_lines_general_position(4, sub_seed, bound)
        except GenerationError:
            continue
        m1, m2, m3, m4 = maximal
        inter: dict[tuple[int, int], Node] = {}
        for i in range(4):
            for j in range(i + 1, 4):
                p = intersect_lines(maximal[i], maximal[j])
                assert p is not None
                inter[(i, j)] = p
        corners = list(inter.values())
        sub_rng = random.Random(sub_seed * 2 + 1)
        try:
            f4 = _random_point_on(m4, sub_rng, bound, set(corners), [m1, m2, m3])
            type_a = line_through(inter[(0, 1)], f4)
            f3 = intersect_lines(type_a, m3)
            if f3 is None or f3 in corners or f3 == f4:
                continue
            if any(incident(m, f3) for m in (m1, m2, m4)):
                continue
            f1 = _random_point_on(
                m1, sub_rng, bound, set(corners) | {f3, f4}, [m2, m3, m4]
            )
            type_b = line_through(f1, f3)
            f2 = intersect_lines(type_b, m2)
            if f2 is None or f2 in corners or f2 in (f1, f3, f4):
                continue
            if any(incident(m, f2) for m in (m1, m3, m4)):
                continue
        except GenerationError:
            continue
        nodes = tuple(corners) + (f1, f2, f3, f4)
        if len(set(nodes)) != 10:
            continue
        candidate = NodeSet(3, nodes)
        classification = classify_lines(candidate)
        four_node = classification.with_count(4)
        if sorted(e.line for e in four_node) != sorted(maximal):
            continue
        a_hits = classification.incidence(type_a)
        b_hits = classification.incidence(type_b)
        if a_hits is None or len(a_hits) != 3:
            continue
        if b_hits is None or len(b_hits) != 3:
            continue
        if not is_poised(candidate):
            continue
        if gc_factorize(candidate).is_gc != "yes":
            continue
        return candidate
    raise GenerationError("no valid GC_3 set with 4 maximal lines within budget")


def affine_map(
    points: NodeSet,
    matrix: Sequence[Sequence],
    translation: Sequence = (0, 0),
) -> NodeSet:
    """Image of the set under an invertible affine map; degree is kept.

    Poisedness, GC status, line incidence counts and usage index sets are
    all invariant under such maps.
    """
    (a, b), (c, d) = matrix
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    tx, ty = (Fraction(v) for v in translation)
    if a * d - b * c == 0:
        raise ValueError("affine map requires an invertible matrix")
    mapped = tuple(
        Node(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty) for p in points.nodes
    )
    return NodeSet(points.degree, mapped)


def affine_map_line(
    line: Line, matrix: Sequence[Sequence], translation: Sequence = (0, 0)
) -> Line:
    """Image of a line under the same affine map applied to node sets."""
    (a, b), (c, d) = matrix
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    tx, ty = (Fraction(v) for v in translation)
    det = a * d - b * c
    if det == 0:
        raise ValueError("affine map requires an invertible matrix")
    # substitute the inverse map into the line equation
    ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
    na = line.a * ia + line.b * ic
    nb = line.a * ib + line.b * id_
    nc = line.c - na * tx - nb * ty
    return Line.from_coefficients(na, nb, nc)


def random_affine(seed: int = 0, bound: int = 6) -> tuple[tuple, tuple]:
    """Seeded random invertible matrix and translation with small entries."""
    rng = random.Random(seed)
    while True:
        mat = (
            (_random_fraction(rng, bound), _random_fraction(rng, bound)),
            (_random_fraction(rng, bound), _random_fraction(rng, bound)),
        )
        if mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] != 0:
            break
    translation = (_random_fraction(rng, bound), _random_fraction(rng, bound))
    return mat, translation


def generate(config: GeneratorConfig, lines: Sequence[Line] | None = None) -> NodeSet:
    """Build the node set described by a GeneratorConfig.

    ``lines`` overrides the seeded random generating lines for the
    Chung-Yao and Berzolari-Radon families.
    """
    if config.family == "principal":
        result = principal_lattice(config.degree)
    elif config.family == "chung_yao":
        chosen = (
            list(lines)
            if lines is not None
            else random_lines_general_position(
                config.degree + 2, config.seed, config.bound
            )
        )
        result = chung_yao(chosen)
        if result.degree != config.degree:
            raise ValueError(
                f"{len(chosen)} lines give degree {result.degree}, expected {config.degree}"
            )
    elif config.family == "berzolari_radon":
        chosen = (
            list(lines)
            if lines is not None
            else random_lines_general_position(
                config.degree + 1, config.seed, config.bound
            )
        )
        result = berzolari_radon(chosen, config.seed, config.bound)
    elif config.family == "random_poised":
        result = random_poised(config.degree, config.seed, config.bound)
    elif config.family == "gc3_four_maximal":
        if config.degree != 3:
            raise ValueError("gc3_four_maximal generates degree-3 sets only")
        result = gc3_four_maximal(config.seed, config.bound)
    else:  # pragma: no cover - guarded by GeneratorConfig
        raise ValueError(config.family)
    if config.affine:
        mat, shift = random_affine(config.seed * 1_000_003 + 389)
        result = affine_map(result, mat, shift)
    return result
