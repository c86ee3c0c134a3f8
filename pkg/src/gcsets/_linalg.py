"""Exact linear algebra kernels over the rationals.

Everything here is pure and exact.  A matrix is a sequence of equal-length
rows.  Rank and determinant go through fraction-free (Bareiss) elimination
on integer matrices obtained by clearing each row's denominators; general
solving and null spaces use rational Gauss-Jordan elimination with
:class:`fractions.Fraction` entries.

These kernels are internal plumbing; the public poisedness API wraps them.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def clear_row_denominators(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[list[list[int]], list[int]]:
    """Scale each row to integers; return the integer rows and the scales."""
    out: list[list[int]] = []
    scales: list[int] = []
    for row in rows:
        mult = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * mult) for f in row])
        scales.append(mult)
    return out, scales


def bareiss_rank_det(rows: Sequence[Sequence[int]]) -> tuple[int, int | None]:
    """Fraction-free elimination on an integer matrix.

    Returns ``(rank, det)`` where ``det`` is the exact determinant for a
    square input and ``None`` otherwise.  All intermediate divisions are
    exact (each entry is a minor of the input), so no precision is lost.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        pivval = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            factor = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (pivval * row_i[j] - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = pivval
        rank += 1
        r += 1
    det: int | None = None
    if nrows == ncols:
        det = sign * prev if rank == nrows and nrows > 0 else (1 if nrows == 0 else 0)
    return rank, det


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    int_rows, _ = clear_row_denominators(rows)
    rank, _ = bareiss_rank_det(int_rows)
    return rank


def rational_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    if not rows:
        return ONE
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("determinant requires a square matrix")
    int_rows, scales = clear_row_denominators(rows)
    _, det = bareiss_rank_det(int_rows)
    assert det is not None
    scale = 1
    for s in scales:
        scale *= s
    return Fraction(det, scale)


def rref(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the matrix and its pivot columns."""
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        if inv != 1:
            m[r] = [v / inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                row_i = m[i]
                row_r = m[r]
                for j in range(c, ncols):
                    row_i[j] -= factor * row_r[j]
        pivots.append(c)
        r += 1
    return m, pivots


def solve_linear(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """One exact solution of ``A x = b`` with free variables set to zero.

    Returns ``None`` when the system is inconsistent.
    """
    nrows = len(rows)
    if nrows == 0:
        return None
    ncols = len(rows[0])
    aug = [list(rows[i]) + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    sol = [ZERO] * ncols
    for r, c in enumerate(pivots):
        sol[c] = red[r][ncols]
    return sol


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space of a rational matrix.

    ``ncols`` must be given explicitly so an empty row list (no constraints)
    still yields the full standard basis.
    """
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, c in enumerate(pivots):
            vec[c] = -red[r][free]
        basis.append(vec)
    return basis


def redundant_rows(rows: Sequence[Sequence[Fraction]]) -> list[bool]:
    """For each row, whether it lies in the span of the other rows.

    A row is redundant exactly when some left-null-space vector is nonzero
    at its index, so one null-space computation answers the question for
    every row at once.
    """
    nrows = len(rows)
    if nrows == 0:
        return []
    transpose = [[rows[i][j] for i in range(nrows)] for j in range(len(rows[0]))]
    left_null = nullspace(transpose, nrows)
    flags = [False] * nrows
    for vec in left_null:
        for i, v in enumerate(vec):
            if v != 0:
                flags[i] = True
    return flags
