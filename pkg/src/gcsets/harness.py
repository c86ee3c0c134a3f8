"""Machine-checks of the line-usage statements on concrete node sets.

Every check recomputes usage sets from first principles (exact divisibility
of exactly-solved fundamental polynomials); none assumes the statement it
verifies, so a malformed generator or a genuine counterexample shows up as
a ``fail`` verdict carrying a witness from which the run can be reproduced.

Checks whose statements are conditional on the Gasca-Maeztu conjecture are
restricted to degrees up to 5, where the conjecture is known to hold,
unless ``assume_gm`` is set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt
from typing import Sequence

from .constructions import GeneratorConfig, generate
from .errors import NotPoisedError, PreconditionError
from .geometry import (
    Line,
    LineIncidence,
    NodeSet,
    classify_lines,
    intersect_lines,
    line_nodes,
    line_through,
)
from .poisedness import (
    curves_through,
    dependence_witness,
    is_independent,
    is_poised,
)
from .serialize import (
    fingerprint,
    line_to_dict,
    node_set_to_dict,
    poly_to_dict,
    witness_to_dict,
)
from .usage import GCReport, gc_factorize, line_users, x_line
from .algebra import divide_poly

GM_VERIFIED_MAX_DEGREE = 5

CHECK_NAMES = ("nline", "nline-poised", "n1line", "usage-indep", "conjecture", "structure")


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one checked statement on one concrete set.

    A ``fail`` verdict always embeds the full node set in its witness, so
    re-running the same check on the embedded set reproduces the failure.
    """

    statement_id: str
    set_fingerprint: str
    status: str  # pass | fail | inapplicable
    witness: dict

    def to_dict(self) -> dict:
        return {
            "statement_id": self.statement_id,
            "set_fingerprint": self.set_fingerprint,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class ConjectureRecord:
    """Observed usage of one k-node line, matched against the conjectured
    binomial form |X_l| = C(s, 2) with 2k-n-1 <= s <= k.

    ``s_candidates`` lists every s with C(s, 2) equal to the observed usage
    (0 and 1 are indistinguishable when the usage is 0).  Nothing is
    asserted; deviations are reported as findings by the caller.
    """

    line: Line
    k: int
    usage: int
    s_candidates: tuple[int, ...]
    in_bounds: bool
    per_maximal_counts: tuple[int, ...]
    counts_consistent: bool

    def to_dict(self) -> dict:
        return {
            "line": line_to_dict(self.line),
            "k": self.k,
            "usage": self.usage,
            "s_candidates": list(self.s_candidates),
            "in_bounds": self.in_bounds,
            "per_maximal_counts": list(self.per_maximal_counts),
            "counts_consistent": self.counts_consistent,
        }


def _require_poised(points: NodeSet) -> None:
    if not is_poised(points):
        raise NotPoisedError("check requires a poised node set")


def _require_gc(
    points: NodeSet, assume_gm: bool = False, degree_bounded: bool = True
) -> GCReport:
    if degree_bounded and points.degree > GM_VERIFIED_MAX_DEGREE and not assume_gm:
        raise PreconditionError(
            f"degree {points.degree} exceeds the verified Gasca-Maeztu range "
            f"(<= {GM_VERIFIED_MAX_DEGREE}); pass assume_gm to proceed"
        )
    report = gc_factorize(points)
    if report.is_gc != "yes":
        raise PreconditionError(f"GC status not established: {report.is_gc}")
    return report


def _maximal_entries(points: NodeSet) -> list[LineIncidence]:
    if len(points) < 2:
        return []
    return list(classify_lines(points).with_count(points.degree + 1))


def _meets_at_node(m: Line, line: Line, points: NodeSet):
    """The node where two lines meet, or None when they miss the node set."""
    p = intersect_lines(m, line)
    if p is None or p not in points.nodes:
        return None
    return p


def _case_i_witness(
    points: NodeSet, entry: LineIncidence, users: Sequence[int], maximals
) -> dict | None:
    """A maximal line missing the given line inside X, with the exact
    complement structure X_l = X minus (l union M0)."""
    user_set = set(users)
    on_line = set(entry.nodes)
    for m in maximals:
        if _meets_at_node(m.line, entry.line, points) is not None:
            continue
        expected = set(range(len(points))) - on_line - set(m.nodes)
        if user_set == expected:
            return {"maximal_line": line_to_dict(m.line)}
    return None


def _case_ii_witness(
    points: NodeSet, entry: LineIncidence, users: Sequence[int], maximals
) -> dict | None:
    """Two maximal lines meeting the given line at a common node, with
    X_l = X minus (l union M' union M'')."""
    user_set = set(users)
    on_line = set(entry.nodes)
    for mi, mj in combinations(maximals, 2):
        p = intersect_lines(mi.line, mj.line)
        if p is None or p not in points.nodes or entry.line.value_at(p) != 0:
            continue
        expected = set(range(len(points))) - on_line - set(mi.nodes) - set(mj.nodes)
        if user_set == expected:
            return {
                "maximal_line_1": line_to_dict(mi.line),
                "maximal_line_2": line_to_dict(mj.line),
            }
    return None


def _per_maximal_count_problems(
    points: NodeSet,
    entry: LineIncidence,
    users: Sequence[int],
    maximals,
    s_values: Sequence[int],
) -> list[dict]:
    """Check |M intersect X_l| against the expected 0 / s-1 dichotomy."""
    problems = []
    user_set = set(users)
    node_set = set(points.nodes)
    for m in maximals:
        p = intersect_lines(m.line, entry.line)
        misses = p is None or p not in node_set
        # the second maximal line must differ from both M and the queried line
        shared = (
            not misses
            and any(
                other.line != m.line
                and other.line != entry.line
                and other.line.value_at(p) == 0
                for other in maximals
            )
        )
        actual = len(user_set & set(m.nodes))
        if misses or shared:
            expected_counts = {0}
        else:
            expected_counts = {s - 1 for s in s_values if s >= 1}
        if actual not in expected_counts:
            problems.append(
                {
                    "kind": "per-maximal-count",
                    "maximal_line": line_to_dict(m.line),
                    "actual": actual,
                    "expected": sorted(expected_counts),
                }
            )
    # second-maximal-line consistency: an unused-by maximal line meeting l
    # at a node forces a second maximal line through that node
    if user_set:
        for m in maximals:
            p = intersect_lines(m.line, entry.line)
            if p is None or p not in node_set:
                continue
            if user_set & set(m.nodes):
                continue
            if not any(
                other.line != m.line and other.line.value_at(p) == 0
                for other in maximals
            ):
                problems.append(
                    {
                        "kind": "missing-second-maximal",
                        "maximal_line": line_to_dict(m.line),
                    }
                )
    return problems


def check_nline_theorem(points: NodeSet, assume_gm: bool = False) -> list[TheoremVerdict]:
    """Usage of every n-node line of a GC_n set: exactly C(n,2) or C(n-1,2)
    users, with the corresponding maximal-line structure and per-maximal
    intersection counts."""
    _require_poised(points)
    _require_gc(points, assume_gm)
    n = points.degree
    fp = fingerprint(points)
    cls = classify_lines(points)
    n_lines = cls.with_count(n)
    if not n_lines:
        return [
            TheoremVerdict(
                "n-node-line-usage", fp, "inapplicable", {"reason": f"no {n}-node line"}
            )
        ]
    maximals = _maximal_entries(points)
    upper, lower = comb(n, 2), comb(n - 1, 2)
    verdicts = []
    for entry in n_lines:
        users = line_users(points, entry.line)
        usage = len(users)
        witness: dict = {
            "line": line_to_dict(entry.line),
            "usage": usage,
            "users": list(users),
            "allowed": sorted({upper, lower}),
        }
        problems: list[dict] = []
        s_values: list[int] = []
        if usage not in (upper, lower):
            problems.append({"kind": "usage-count", "actual": usage})
        else:
            if usage == upper:
                found = _case_i_witness(points, entry, users, maximals)
                if found is None:
                    problems.append({"kind": "case-i-structure"})
                else:
                    witness["case"] = "i"
                    witness.update(found)
                s_values.append(n)
            if usage == lower and not witness.get("case"):
                found = _case_ii_witness(points, entry, users, maximals)
                if found is None:
                    problems.append({"kind": "case-ii-structure"})
                else:
                    witness["case"] = "ii"
                    witness.update(found)
                    problems = [p for p in problems if p["kind"] != "case-i-structure"]
                s_values.append(n - 1)
        if not problems:
            problems.extend(
                _per_maximal_count_problems(points, entry, users, maximals, s_values)
            )
        if problems:
            witness["problems"] = problems
            witness["node_set"] = node_set_to_dict(points)
            verdicts.append(TheoremVerdict("n-node-line-usage", fp, "fail", witness))
        else:
            verdicts.append(TheoremVerdict("n-node-line-usage", fp, "pass", witness))
    return verdicts


def check_nline_poised(points: NodeSet) -> list[TheoremVerdict]:
    """Usage bounds and structure for n-node lines of a general poised set."""
    _require_poised(points)
    n = points.degree
    fp = fingerprint(points)
    cls = classify_lines(points)
    n_lines = cls.with_count(n)
    if not n_lines:
        return [
            TheoremVerdict(
                "n-node-line-poised", fp, "inapplicable", {"reason": f"no {n}-node line"}
            )
        ]
    maximals = _maximal_entries(points)
    verdicts = []
    for entry in n_lines:
        usage_info = x_line(points, entry.line)
        users = usage_info.users
        usage = len(users)
        witness: dict = {
            "line": line_to_dict(entry.line),
            "usage": usage,
            "bound": comb(n, 2),
        }
        problems: list[dict] = []
        if usage > comb(n, 2):
            problems.append({"kind": "bound-exceeded", "actual": usage})
        elif usage >= comb(n - 1, 2) + 1:
            witness["case"] = "large-usage"
            if usage != comb(n, 2):
                problems.append({"kind": "forced-value", "expected": comb(n, 2)})
            else:
                found = _case_i_witness(points, entry, users, maximals)
                if found is None:
                    problems.append({"kind": "case-i-structure"})
                else:
                    witness.update(found)
                sub = NodeSet(n - 2, tuple(points.nodes[i] for i in users))
                if not is_poised(sub):
                    problems.append({"kind": "users-not-poised", "degree": n - 2})
        elif comb(n - 2, 2) + 2 <= usage <= comb(n - 1, 2):
            witness["case"] = "middle-usage"
            if usage != comb(n - 1, 2):
                problems.append({"kind": "forced-value", "expected": comb(n - 1, 2)})
            else:
                problems.extend(_middle_case_structure(points, entry, usage_info, witness))
        if problems:
            witness["problems"] = problems
            witness["node_set"] = node_set_to_dict(points)
            verdicts.append(TheoremVerdict("n-node-line-poised", fp, "fail", witness))
        else:
            verdicts.append(TheoremVerdict("n-node-line-poised", fp, "pass", witness))
    return verdicts


def _middle_case_structure(points, entry, usage_info, witness) -> list[dict]:
    """Structure forced when an n-node line has C(n-1,2) users: the non-users
    off the line fill a conic, with the reducible split carrying n nodes on
    each component."""
    n = points.degree
    problems: list[dict] = []
    users = usage_info.users
    off = usage_info.non_users_off_curve
    sub = NodeSet(n - 3, tuple(points.nodes[i] for i in users))
    if not is_poised(sub):
        problems.append({"kind": "users-not-poised", "degree": n - 3})
    if len(off) != 2 * n:
        problems.append({"kind": "n-ell-size", "actual": len(off), "expected": 2 * n})
        return problems
    basis = curves_through([points.nodes[i] for i in off], 2)
    if not basis:
        problems.append({"kind": "no-conic-through-n-ell"})
        return problems
    beta = basis[0]
    witness["conic"] = poly_to_dict(beta)
    on_beta = {i for i, p in enumerate(points.nodes) if beta.eval(p.x, p.y) == 0}
    expected_users = set(range(len(points))) - on_beta - set(entry.nodes)
    if set(users) != expected_users:
        problems.append({"kind": "complement-structure"})
    extras = on_beta - set(off)
    if len(extras) > 1 or any(i not in entry.nodes for i in extras):
        problems.append({"kind": "conic-extra-node", "extras": sorted(extras)})
    for cand in classify_lines(points).with_count_at_least(2):
        if not set(cand.nodes) & set(off):
            continue
        quotient = divide_poly(beta, cand.line.to_poly(), 1)
        if quotient is None:
            continue
        second = Line.from_coefficients(
            quotient.coeff(1, 0), quotient.coeff(0, 1), quotient.coeff(0, 0)
        )
        witness["conic_factors"] = [line_to_dict(cand.line), line_to_dict(second)]
        for component in (cand.line, second):
            off_l = [
                i
                for i in line_nodes(points, component)
                if i not in entry.nodes
            ]
            if len(off_l) != n:
                problems.append(
                    {
                        "kind": "reducible-component-count",
                        "component": line_to_dict(component),
                        "actual": len(off_l),
                        "expected": n,
                    }
                )
        break
    return problems


def check_n_minus_1_line(points: NodeSet) -> list[TheoremVerdict]:
    """Usage bound for (n-1)-node lines, and the maximal-plus-n-node-line
    decomposition of the non-users when the usage is large."""
    _require_poised(points)
    n = points.degree
    fp = fingerprint(points)
    cls = classify_lines(points)
    target = cls.with_count(n - 1)
    if not target:
        return [
            TheoremVerdict(
                "n-minus-1-node-line",
                fp,
                "inapplicable",
                {"reason": f"no {n - 1}-node line"},
            )
        ]
    verdicts = []
    for entry in target:
        usage_info = x_line(points, entry.line)
        usage = len(usage_info.users)
        witness: dict = {
            "line": line_to_dict(entry.line),
            "usage": usage,
            "bound": comb(n - 1, 2),
        }
        problems: list[dict] = []
        if usage > comb(n - 1, 2):
            problems.append({"kind": "bound-exceeded", "actual": usage})
        elif usage >= comb(n - 2, 2) + 3:
            witness["case"] = "structured"
            off = usage_info.non_users_off_curve
            sub = NodeSet(n - 3, tuple(points.nodes[i] for i in usage_info.users))
            if usage != comb(n - 1, 2):
                problems.append({"kind": "forced-value", "expected": comb(n - 1, 2)})
            if not is_poised(sub):
                problems.append({"kind": "users-not-poised", "degree": n - 3})
            if len(off) != 2 * n + 1:
                problems.append(
                    {"kind": "n-ell-size", "actual": len(off), "expected": 2 * n + 1}
                )
            else:
                problems.extend(_n_minus_1_decomposition(points, entry, off, witness))
        if problems:
            witness["problems"] = problems
            witness["node_set"] = node_set_to_dict(points)
            verdicts.append(TheoremVerdict("n-minus-1-node-line", fp, "fail", witness))
        else:
            verdicts.append(TheoremVerdict("n-minus-1-node-line", fp, "pass", witness))
    return verdicts


def _n_minus_1_decomposition(points, entry, off, witness) -> list[dict]:
    n = points.degree
    off_set = set(off)
    for m in _maximal_entries(points):
        if not set(m.nodes) <= off_set:
            continue
        rest = sorted(off_set - set(m.nodes))
        if len(rest) != n:
            continue
        rest_nodes = [points.nodes[i] for i in rest]
        second = line_through(rest_nodes[0], rest_nodes[1])
        if not all(second.value_at(p) == 0 for p in rest_nodes):
            continue
        hits = set(line_nodes(points, second))
        extras = hits - set(rest)
        if len(extras) > 1 or not extras <= set(m.nodes):
            continue
        witness["maximal_line"] = line_to_dict(m.line)
        witness["n_node_line"] = line_to_dict(second)
        return []
    return [{"kind": "no-maximal-plus-n-line-decomposition"}]


def check_usage_independence(points: NodeSet) -> list[TheoremVerdict]:
    """For every k-node line of a GC set, the users form a
    (k-2)-independent set within the binomial and collinearity bounds, and
    each user admits a (k-2)-fundamental divisor built from its own factor
    lines."""
    _require_poised(points)
    gc_report = _require_gc(points, degree_bounded=False)
    fp = fingerprint(points)
    cls = classify_lines(points)
    verdicts = []
    for entry in cls.entries:
        k = entry.count
        if k < 2:
            continue
        users = line_users(points, entry.line)
        user_nodes = tuple(points.nodes[i] for i in users)
        witness: dict = {
            "line": line_to_dict(entry.line),
            "k": k,
            "usage": len(users),
        }
        problems: list[dict] = []
        if not is_independent(NodeSet(k - 2, user_nodes)):
            problems.append({"kind": "not-independent", "degree": k - 2})
        if len(users) > comb(k, 2):
            problems.append({"kind": "usage-bound", "bound": comb(k, 2)})
        if len(user_nodes) >= 2:
            most = classify_lines(NodeSet(0, user_nodes)).max_count
            if most > k - 1:
                problems.append({"kind": "collinearity-bound", "actual": most})
        divisors_found = []
        for idx, point in zip(users, user_nodes):
            factor_lines = gc_report.factorizations[idx].line_list()
            found = False
            for combo in combinations(factor_lines, k - 2):
                values = [
                    (other, [line.value_at(q) for line in combo])
                    for other, q in zip(users, user_nodes)
                ]
                ok = True
                for other, vals in values:
                    product_zero = any(v == 0 for v in vals)
                    if other == idx and product_zero:
                        ok = False
                        break
                    if other != idx and not product_zero:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            divisors_found.append(found)
        witness["fundamental_divisor_found"] = divisors_found
        if problems:
            witness["problems"] = problems
            witness["node_set"] = node_set_to_dict(points)
            verdicts.append(TheoremVerdict("usage-independence", fp, "fail", witness))
        else:
            verdicts.append(TheoremVerdict("usage-independence", fp, "pass", witness))
    if not verdicts:
        verdicts.append(
            TheoremVerdict(
                "usage-independence", fp, "inapplicable", {"reason": "no 2+-node line"}
            )
        )
    return verdicts


def _binomial_preimages(usage: int) -> tuple[int, ...]:
    if usage == 0:
        return (0, 1)
    s = (1 + isqrt(1 + 8 * usage)) // 2
    return (s,) if comb(s, 2) == usage else ()


def check_conjecture(points: NodeSet, assume_gm: bool = False) -> list[ConjectureRecord]:
    """Record the usage of every k-node line against the conjectured
    binomial pattern.  Purely observational: nothing is asserted."""
    _require_poised(points)
    _require_gc(points, assume_gm)
    n = points.degree
    cls = classify_lines(points)
    maximals = _maximal_entries(points)
    records = []
    for entry in cls.entries:
        k = entry.count
        users = line_users(points, entry.line)
        usage = len(users)
        user_set = set(users)
        s_candidates = _binomial_preimages(usage)
        in_bounds = any(2 * k - n - 1 <= s <= k for s in s_candidates)
        allowed = {s for s in s_candidates if 2 * k - n - 1 <= s <= k}
        per_counts = []
        consistent = True
        node_points = set(points.nodes)
        for m in maximals:
            actual = len(user_set & set(m.nodes))
            per_counts.append(actual)
            p = intersect_lines(m.line, entry.line)
            misses = p is None or p not in node_points
            shared = (
                not misses
                and any(
                    o.line != m.line
                    and o.line != entry.line
                    and o.line.value_at(p) == 0
                    for o in maximals
                )
            )
            if misses or shared:
                if actual != 0:
                    consistent = False
            else:
                if actual not in {s - 1 for s in allowed if s >= 1}:
                    consistent = False
        records.append(
            ConjectureRecord(
                entry.line,
                k,
                usage,
                s_candidates,
                in_bounds,
                tuple(per_counts),
                consistent,
            )
        )
    return records


def conjecture_verdicts(points: NodeSet, assume_gm: bool = False) -> list[TheoremVerdict]:
    """Wrap conjecture records: one fail finding per deviating line, or a
    single pass verdict when every line fits the pattern."""
    fp = fingerprint(points)
    records = check_conjecture(points, assume_gm)
    if not records:
        return [
            TheoremVerdict(
                "k-node-line-conjecture", fp, "inapplicable", {"reason": "no lines"}
            )
        ]
    verdicts = []
    for record in records:
        if not (record.in_bounds and record.counts_consistent):
            verdicts.append(
                TheoremVerdict(
                    "k-node-line-conjecture",
                    fp,
                    "fail",
                    {
                        "record": record.to_dict(),
                        "node_set": node_set_to_dict(points),
                    },
                )
            )
    if not verdicts:
        verdicts.append(
            TheoremVerdict(
                "k-node-line-conjecture",
                fp,
                "pass",
                {"lines_checked": len(records)},
            )
        )
    return verdicts


def check_structure_theorems(
    points: NodeSet, assume_gm: bool = False
) -> list[TheoremVerdict]:
    """Maximal-line structure of GC sets: at least one maximal line, at
    least three, and every node uses at least one of them."""
    _require_poised(points)
    gc_report = _require_gc(points, assume_gm)
    fp = fingerprint(points)
    maximals = _maximal_entries(points)
    maximal_lines = {m.line for m in maximals}
    verdicts = []

    def verdict(statement: str, ok: bool, extra: dict) -> TheoremVerdict:
        witness = dict(extra)
        if not ok:
            witness["node_set"] = node_set_to_dict(points)
        return TheoremVerdict(statement, fp, "pass" if ok else "fail", witness)

    verdicts.append(
        verdict("gm-maximal-line-exists", len(maximals) >= 1, {"count": len(maximals)})
    )
    verdicts.append(
        verdict("three-maximal-lines", len(maximals) >= 3, {"count": len(maximals)})
    )
    uses_maximal = []
    for fact in gc_report.factorizations:
        used = {line for line, _ in fact.lines}
        uses_maximal.append(bool(used & maximal_lines))
    verdicts.append(
        verdict(
            "nodes-use-maximal-line",
            all(uses_maximal),
            {"nodes_missing": [i for i, ok in enumerate(uses_maximal) if not ok]},
        )
    )
    return verdicts


def analyze(points: NodeSet) -> dict:
    """Full structural report: poisedness, GC status, line classification,
    usage and non-user sets of every node line, and per-node used lines.
    Non-poised inputs get a reduced report with a dependence witness when
    the set is dependent."""
    report: dict = {
        "fingerprint": fingerprint(points),
        "degree": points.degree,
        "node_count": len(points),
    }
    poised = is_poised(points)
    report["poised"] = poised
    if not poised:
        independent = is_independent(points)
        report["independent"] = independent
        if not independent:
            report["dependence_witness"] = witness_to_dict(dependence_witness(points))
        return report
    gc_report = gc_factorize(points)
    report["gc"] = gc_report.is_gc
    cls = classify_lines(points)
    maximals = _maximal_entries(points)
    report["maximal_lines"] = [line_to_dict(m.line) for m in maximals]
    lines = []
    for entry in cls.entries:
        usage_info = x_line(points, entry.line)
        lines.append(
            {
                "line": line_to_dict(entry.line),
                "node_count": entry.count,
                "nodes": list(entry.nodes),
                "users": list(usage_info.users),
                "non_users_off_line": list(usage_info.non_users_off_curve),
            }
        )
    report["lines"] = lines
    report["node_usage"] = [
        {
            "node_index": fact.node_index,
            "factor_lines": [
                {"line": line_to_dict(line), "multiplicity": mult}
                for line, mult in fact.lines
            ],
            "resolved": fact.resolved,
        }
        for fact in gc_report.factorizations
    ]
    return report


def run_check(name: str, points: NodeSet, assume_gm: bool = False) -> list[TheoremVerdict]:
    """Dispatch one named check; unknown names raise ValueError."""
    if name == "nline":
        return check_nline_theorem(points, assume_gm)
    if name == "nline-poised":
        return check_nline_poised(points)
    if name == "n1line":
        return check_n_minus_1_line(points)
    if name == "usage-indep":
        return check_usage_independence(points)
    if name == "conjecture":
        return conjecture_verdicts(points, assume_gm)
    if name == "structure":
        return check_structure_theorems(points, assume_gm)
    raise ValueError(f"unknown check {name!r}; choose from {CHECK_NAMES + ('all',)}")


def expand_checks(names: Sequence[str]) -> list[str]:
    out: list[str] = []
    for name in names:
        if name == "all":
            out.extend(CHECK_NAMES)
        elif name in CHECK_NAMES:
            out.append(name)
        else:
            raise ValueError(f"unknown check {name!r}")
    return list(dict.fromkeys(out))


def verify_set(
    points: NodeSet, checks: Sequence[str], assume_gm: bool = False
) -> list[TheoremVerdict]:
    """Run the selected checks, mapping precondition violations to
    inapplicable verdicts so corpus runs keep going."""
    verdicts: list[TheoremVerdict] = []
    fp = fingerprint(points)
    for name in expand_checks(checks):
        try:
            verdicts.extend(run_check(name, points, assume_gm))
        except PreconditionError as exc:
            verdicts.append(
                TheoremVerdict(name, fp, "inapplicable", {"reason": str(exc)})
            )
    return verdicts


def corpus_run(
    configs: Sequence[GeneratorConfig],
    checks: Sequence[str],
    assume_gm: bool = False,
) -> dict:
    """Generate every configured set, run the selected checks, aggregate.

    Deterministic for fixed seeds; items are sorted by fingerprint and every
    fail verdict carries its reproduction witness.
    """
    items = []
    tally = {"pass": 0, "fail": 0, "inapplicable": 0}
    for config in configs:
        points = generate(config)
        verdicts = verify_set(points, checks, assume_gm)
        for v in verdicts:
            tally[v.status] += 1
        items.append(
            {
                "generator": {
                    "family": config.family,
                    "degree": config.degree,
                    "seed": config.seed,
                    "bound": config.bound,
                    "affine": config.affine,
                },
                "fingerprint": fingerprint(points),
                "verdicts": [v.to_dict() for v in verdicts],
            }
        )
    items.sort(key=lambda item: item["fingerprint"])
    return {
        "config": {"checks": list(checks), "assume_gm": assume_gm},
        "items": items,
        "summary": tally,
    }
