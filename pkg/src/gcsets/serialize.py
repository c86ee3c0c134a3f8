"""JSON wire formats.

Rationals serialize as ``"p/q"`` (or ``"p"`` for integers).  Node sets,
lines and polynomials use the schemas::

    {"degree": n, "nodes": [{"x": "1/2", "y": "-3"}, ...]}
    {"a": "2", "b": "3", "c": "-1"}
    {"degree": n, "coeffs": ["...", ...]}        # graded-lex order

Dumps are canonical (sorted keys, fixed separators) so that byte-identical
inputs yield byte-identical outputs and fingerprints are stable.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .algebra import Poly, rational
from .geometry import Line, Node, NodeSet
from .poisedness import DependenceWitness
from .usage import GCReport, NodeFactorization, UsageSet


def rational_to_str(value: Fraction) -> str:
    return str(value)


def rational_from(value) -> Fraction:
    if isinstance(value, float):
        raise ValueError("floating point input is not accepted; use 'p/q' strings")
    return rational(value)


def node_to_dict(p: Node) -> dict:
    return {"x": str(p.x), "y": str(p.y)}


def node_from_dict(data: dict) -> Node:
    return Node(rational_from(data["x"]), rational_from(data["y"]))


def node_set_to_dict(points: NodeSet) -> dict:
    return {"degree": points.degree, "nodes": [node_to_dict(p) for p in points.nodes]}


def node_set_from_dict(data: dict) -> NodeSet:
    return NodeSet(int(data["degree"]), tuple(node_from_dict(d) for d in data["nodes"]))


def line_to_dict(line: Line) -> dict:
    return {"a": str(line.a), "b": str(line.b), "c": str(line.c)}


def line_from_dict(data: dict) -> Line:
    return Line.from_coefficients(
        rational_from(data["a"]), rational_from(data["b"]), rational_from(data["c"])
    )


def poly_to_dict(p: Poly) -> dict:
    return {"degree": p.max_degree, "coeffs": [str(c) for c in p.coeffs]}


def poly_from_dict(data: dict) -> Poly:
    return Poly.from_coeffs(int(data["degree"]), [rational_from(c) for c in data["coeffs"]])


def usage_set_to_dict(usage: UsageSet) -> dict:
    if isinstance(usage.target, Line):
        target = {"line": line_to_dict(usage.target)}
    else:
        target = {"curve": poly_to_dict(usage.target)}
    return {
        **target,
        "users": list(usage.users),
        "on_curve": list(usage.on_curve),
        "non_users_off_curve": list(usage.non_users_off_curve),
    }


def gc_report_to_dict(report: GCReport) -> dict:
    return {
        "is_gc": report.is_gc,
        "nodes": [
            {
                "node_index": f.node_index,
                "lines": [
                    {"line": line_to_dict(line), "multiplicity": mult}
                    for line, mult in f.lines
                ],
                "residual": poly_to_dict(f.residual),
                "resolved": f.resolved,
            }
            for f in report.factorizations
        ],
    }


def witness_to_dict(witness: DependenceWitness) -> dict:
    out: dict = {"kind": witness.kind, "node_indices": list(witness.node_indices)}
    if witness.line is not None:
        out["line"] = line_to_dict(witness.line)
    if witness.curve is not None:
        out["curve"] = poly_to_dict(witness.curve)
    if witness.partial:
        out["partial"] = True
    return out


def canonical_dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def pretty_dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def fingerprint(points: NodeSet) -> str:
    """Stable hash of the canonical node-set JSON."""
    blob = canonical_dumps(node_set_to_dict(points)).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _factorization_from_dict(data: dict) -> NodeFactorization:
    return NodeFactorization(
        data["node_index"],
        tuple((line_from_dict(d["line"]), d["multiplicity"]) for d in data["lines"]),
        poly_from_dict(data["residual"]),
    )
