"""Exact bivariate polynomial arithmetic.

Polynomials live in the space of bivariate polynomials of total degree at
most ``n``, whose dimension is ``dim_pi(n) = C(n+2, 2)``.  Coefficients are
arbitrary-precision rationals (:class:`fractions.Fraction`), so equality,
vanishing and divisibility are decided exactly; there is no floating point
anywhere in this module.

Coefficients are stored densely in graded-lexicographic order: monomials
sorted by total degree, and within one degree by descending x-power::

    1;  x, y;  x^2, x*y, y^2;  x^3, x^2*y, x*y^2, y^3;  ...

The monomial ``x^i y^j`` sits at index ``T(i+j) + j`` with ``T(d) = d(d+1)/2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from ._linalg import solve_linear

if TYPE_CHECKING:  # pragma: no cover
    from .geometry import Line

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational(value: int | str | Fraction) -> Fraction:
    """Coerce ``value`` to an exact rational; accepts ``"p/q"`` strings."""
    return value if isinstance(value, Fraction) else Fraction(value)


def dim_pi(n: int) -> int:
    """Dimension C(n+2, 2) of the polynomials of total degree at most n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return comb(n + 2, 2)


def d_nk(n: int, k: int) -> int:
    """Node count dim_pi(n) - dim_pi(n-k) of a maximal degree-k curve.

    Equals ``k(2n+3-k)/2``: n+1 for a line, 2n+1 for a conic, 3n for a cubic.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return k * (2 * n + 3 - k) // 2


def monomials(n: int) -> Iterator[tuple[int, int]]:
    """Exponent pairs (i, j) of Pi_n in graded-lexicographic order."""
    for d in range(n + 1):
        for j in range(d + 1):
            yield (d - j, j)


def monomial_index(i: int, j: int) -> int:
    """Position of x^i y^j in the graded-lexicographic order."""
    d = i + j
    return d * (d + 1) // 2 + j


@dataclass(frozen=True, eq=False)
class Poly:
    """Dense bivariate polynomial of total degree at most ``max_degree``.

    Instances are immutable; all arithmetic returns new polynomials.
    Equality is mathematical: two polynomials with different ``max_degree``
    are equal when their nonzero coefficients agree.
    """

    max_degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        expected = dim_pi(self.max_degree)
        if len(self.coeffs) != expected:
            raise ValueError(
                f"expected {expected} coefficients for degree {self.max_degree}, "
                f"got {len(self.coeffs)}"
            )

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, max_degree: int = 0) -> "Poly":
        return cls(max_degree, (_ZERO,) * dim_pi(max_degree))

    @classmethod
    def constant(cls, value: int | str | Fraction) -> "Poly":
        return cls(0, (rational(value),))

    @classmethod
    def from_coeffs(cls, max_degree: int, coeffs: Iterable) -> "Poly":
        return cls(max_degree, tuple(rational(c) for c in coeffs))

    @classmethod
    def from_terms(
        cls, terms: dict[tuple[int, int], int | str | Fraction], max_degree: int | None = None
    ) -> "Poly":
        degree = max((i + j for (i, j) in terms), default=0)
        if max_degree is not None:
            if max_degree < degree:
                raise ValueError("max_degree smaller than the terms' degree")
            degree = max_degree
        vec = [_ZERO] * dim_pi(degree)
        for (i, j), c in terms.items():
            vec[monomial_index(i, j)] += rational(c)
        return cls(degree, tuple(vec))

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse expressions like ``"1/2*x^2*y - 3*y + 2"``."""
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty polynomial expression")
        chunks = [t for t in re.split(r"(?=[+-])", compact) if t and t not in "+-"]
        terms: dict[tuple[int, int], Fraction] = {}
        for chunk in chunks:
            sign = _ONE
            if chunk[0] == "+":
                chunk = chunk[1:]
            elif chunk[0] == "-":
                sign = -_ONE
                chunk = chunk[1:]
            coeff = sign
            i = j = 0
            for factor in chunk.split("*"):
                if not factor:
                    raise ValueError(f"malformed term in {text!r}")
                if factor[0] in "xy":
                    var, _, exp = factor.partition("^")
                    power = int(exp) if exp else 1
                    if var == "x":
                        i += power
                    elif var == "y":
                        j += power
                    else:
                        raise ValueError(f"unknown variable {var!r}")
                else:
                    coeff *= Fraction(factor)
            terms[(i, j)] = terms.get((i, j), _ZERO) + coeff
        return cls.from_terms(terms)

    # -- inspection --------------------------------------------------------

    def coeff(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0 or i + j > self.max_degree:
            return _ZERO
        return self.coeffs[monomial_index(i, j)]

    def terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Nonzero terms as ((i, j), coefficient) in graded-lex order."""
        for (i, j), c in zip(monomials(self.max_degree), self.coeffs):
            if c != 0:
                yield (i, j), c

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def effective_degree(self) -> int:
        """Total degree of the highest nonzero term (0 for the zero polynomial)."""
        deg = 0
        for (i, j), c in zip(monomials(self.max_degree), self.coeffs):
            if c != 0:
                deg = i + j
        return deg

    def trimmed(self) -> "Poly":
        """Equal polynomial with ``max_degree`` shrunk to the effective degree."""
        deg = self.effective_degree()
        if deg == self.max_degree:
            return self
        return Poly(deg, self.coeffs[: dim_pi(deg)])

    def pad_to(self, max_degree: int) -> "Poly":
        if max_degree < self.max_degree:
            return self.trimmed().pad_to(max_degree)
        if max_degree == self.max_degree:
            return self
        extra = dim_pi(max_degree) - dim_pi(self.max_degree)
        return Poly(max_degree, self.coeffs + (_ZERO,) * extra)

    # -- algebra -----------------------------------------------------------

    def eval(self, x, y) -> Fraction:
        """Exact value at the point (x, y)."""
        x = rational(x)
        y = rational(y)
        n = self.max_degree
        xpow = [_ONE]
        ypow = [_ONE]
        for _ in range(n):
            xpow.append(xpow[-1] * x)
            ypow.append(ypow[-1] * y)
        total = _ZERO
        for (i, j), c in zip(monomials(n), self.coeffs):
            if c != 0:
                total += c * xpow[i] * ypow[j]
        return total

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(self.max_degree, other.max_degree)
        a = self.pad_to(n)
        b = other.pad_to(n)
        return Poly(n, tuple(u + v for u, v in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.max_degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            n = self.max_degree + other.max_degree
            vec = [_ZERO] * dim_pi(n)
            for (i1, j1), c1 in self.terms():
                for (i2, j2), c2 in other.terms():
                    vec[monomial_index(i1 + i2, j1 + j2)] += c1 * c2
            return Poly(n, tuple(vec))
        return Poly(self.max_degree, tuple(c * rational(other) for c in self.coeffs))

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.trimmed().coeffs == other.trimmed().coeffs

    def __hash__(self) -> int:
        return hash(self.trimmed().coeffs)

    def __str__(self) -> str:
        parts: list[str] = []
        for (i, j), c in self.terms():
            mono = "*".join(
                ([] if i == 0 else [f"x^{i}" if i > 1 else "x"])
                + ([] if j == 0 else [f"y^{j}" if j > 1 else "y"])
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        head = parts[0].replace("+ ", "", 1).replace("- ", "-", 1)
        return " ".join([head] + parts[1:])

    __repr__ = __str__


def poly_eval(p: Poly, point) -> Fraction:
    """Exact value of ``p`` at a point given as any (x, y) pair."""
    x, y = point
    return p.eval(x, y)


def _main_variable_lists(p: Poly, main: str) -> list[list[Fraction]]:
    """Coefficient lists by power of the chosen main variable.

    Entry ``[k][t]`` is the coefficient of ``main^k other^t``.
    """
    n = p.max_degree
    out = [[_ZERO] * (n - k + 1) for k in range(n + 1)]
    for (i, j), c in p.terms():
        k, t = (i, j) if main == "x" else (j, i)
        out[k][t] = c
    return out


def divide_by_linear(p: Poly, line) -> Poly | None:
    """Exact quotient ``r`` with ``p = line * r``, or ``None`` if not divisible.

    Performs univariate long division in the variable whose coefficient in
    the line is nonzero; the remainder test is an exact equality, so the
    answer is certified either way.  ``line`` is anything with integer or
    rational attributes ``a``, ``b``, ``c`` describing ``a*x + b*y + c``.
    """
    a = rational(line.a)
    b = rational(line.b)
    c = rational(line.c)
    if a == 0 and b == 0:
        raise ValueError("degenerate line: x and y coefficients both zero")
    n = p.max_degree
    if p.is_zero():
        return Poly.zero(max(n - 1, 0))
    if n == 0:
        return None
    # Divisor seen as  lead*main + (slope*other + c).
    if b != 0:
        main, lead, slope = "y", b, a
    else:
        main, lead, slope = "x", a, b
    plist = _main_variable_lists(p, main)
    # quotient[k] has other-degree at most n-1-k
    quotient = [[_ZERO] * (n - k) for k in range(n)]
    for k in range(n, 0, -1):
        src = plist[k]
        prev = quotient[k] if k < n else []
        target = quotient[k - 1]
        for t in range(len(target)):
            val = src[t] if t < len(src) else _ZERO
            if t < len(prev):
                val -= c * prev[t]
            if 0 <= t - 1 < len(prev):
                val -= slope * prev[t - 1]
            target[t] = val / lead
    remainder_src = plist[0]
    r0 = quotient[0] if n >= 1 else []
    for t in range(n + 1):
        val = remainder_src[t] if t < len(remainder_src) else _ZERO
        if t < len(r0):
            val -= c * r0[t]
        if 0 <= t - 1 < len(r0):
            val -= slope * r0[t - 1]
        if val != 0:
            return None
    terms: dict[tuple[int, int], Fraction] = {}
    for k in range(n):
        for t, val in enumerate(quotient[k]):
            if val != 0:
                terms[(t, k) if main == "y" else (k, t)] = val
    result = Poly.from_terms(terms, max_degree=n - 1)
    return result


def line_divides(int_coeffs: Sequence[int], max_degree: int, a: int, b: int, c: int) -> bool:
    """Fast exact divisibility of an integer-coefficient polynomial by a line.

    ``int_coeffs`` is a graded-lex vector scaled to integers.  The long
    division is premultiplied by ``lead**n`` so every intermediate value
    stays an integer; only the zero-remainder verdict is produced.
    """
    n = max_degree
    if all(v == 0 for v in int_coeffs):
        return True
    if n == 0:
        return False
    if b != 0:
        main_is_y, lead, slope = True, b, a
    else:
        main_is_y, lead, slope = False, a, b
    plist: list[list[int]] = [[0] * (n - k + 1) for k in range(n + 1)]
    idx = 0
    for d in range(n + 1):
        for j in range(d + 1):
            v = int_coeffs[idx]
            idx += 1
            if v:
                k, t = (j, d - j) if main_is_y else (d - j, j)
                plist[k][t] = v
    premult = lead**n
    quotient = [[0] * (n - k) for k in range(n)]
    for k in range(n, 0, -1):
        src = plist[k]
        prev = quotient[k] if k < n else []
        target = quotient[k - 1]
        for t in range(len(target)):
            val = premult * src[t] if t < len(src) else 0
            if t < len(prev):
                val -= c * prev[t]
            if 0 <= t - 1 < len(prev):
                val -= slope * prev[t - 1]
            target[t] = val // lead
    r0 = quotient[0]
    rem_src = plist[0]
    for t in range(n + 1):
        val = premult * rem_src[t] if t < len(rem_src) else 0
        if t < len(r0):
            val -= c * r0[t]
        if 0 <= t - 1 < len(r0):
            val -= slope * r0[t - 1]
        if val:
            return False
    return True


def integer_coeff_vector(p: Poly) -> tuple[int, ...]:
    """The coefficient vector scaled by the common denominator, as integers."""
    mult = lcm(*(c.denominator for c in p.coeffs))
    return tuple(int(c * mult) for c in p.coeffs)


def divide_poly(p: Poly, q: Poly, target_degree: int) -> Poly | None:
    """Exact quotient ``r`` in Pi_target with ``q * r = p``, else ``None``.

    Divisibility is decided by solving the linear system in the unknown
    coefficients of ``r``; this is variable-order-free and works for any
    divisor degree, which keeps lines and higher curves on one code path.
    """
    dq = q.effective_degree()
    if dq < 1:
        raise ValueError("divisor must have degree at least 1")
    if target_degree < 0:
        raise ValueError("target_degree must be non-negative")
    if dq + target_degree < p.effective_degree():
        raise ValueError(
            "inconsistent degrees: deg(q) + target_degree < effective degree of p"
        )
    big = dq + target_degree
    nrows = dim_pi(big)
    cols = dim_pi(target_degree)
    matrix = [[_ZERO] * cols for _ in range(nrows)]
    for col, (i, j) in enumerate(monomials(target_degree)):
        for (qi, qj), qc in q.terms():
            matrix[monomial_index(qi + i, qj + j)][col] = qc
    rhs = list(p.pad_to(big).coeffs)
    sol = solve_linear(matrix, rhs)
    if sol is None:
        return None
    return Poly(target_degree, tuple(sol))
