# motzkin/recurrence.py
"""
Second-order linear recurrences W(1, b, h, k):

    W_0 = 1,  W_1 = b,  W_n = h W_(n-1) - k W_(n-2)

their generating function (1 + (b - h)t) / (1 - ht + kt^2), the closed-form
transport of (b, h, k) under the interpolated Invert and Binomial
operators, the polynomial family P_n(h, k, x) and its divisibility property.

Also home of the exact univariate ``Polynomial`` used by the orthogonal
module.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from motzkin.config_motzkin import DEFAULT_ORDER
from motzkin.exact_series import (
    ScalarLike,
    TruncatedSeries,
    as_scalar,
    format_scalar,
    reciprocal,
)
from motzkin.transform_group import (
    UnitSequence,
    binomial_interp,
    eta,
    invert_interp,
    lambda_extract,
)

logger = logging.getLogger(__name__)


class RecurrenceError(ValueError):
    """Raised for recurrence requests outside an operation's domain."""


class PolynomialError(ArithmeticError):
    """Raised on division by the zero polynomial and degenerate interpolation."""


# ----------------------- Polynomial -----------------------

@dataclass(frozen=True, slots=True)
class Polynomial:
    """Dense polynomial in x, ascending coefficients, trailing zeros stripped."""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [as_scalar(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def of(cls, values: Iterable[ScalarLike]) -> "Polynomial":
        return cls(tuple(values))

    @classmethod
    def constant(cls, c: ScalarLike) -> "Polynomial":
        return cls((c,))

    @classmethod
    def linear(cls, c0: ScalarLike, c1: ScalarLike = 1) -> "Polynomial":
        """c0 + c1 x."""
        return cls((c0, c1))

    @classmethod
    def interpolate(cls, points: Sequence[Tuple[ScalarLike, ScalarLike]]) -> "Polynomial":
        """The unique polynomial of degree < len(points) through the points (Lagrange form)."""
        xs = [as_scalar(p[0]) for p in points]
        ys = [as_scalar(p[1]) for p in points]
        if len(set(xs)) != len(xs):
            raise PolynomialError("interpolation nodes must be distinct")
        result = cls()
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            if yi == 0:
                continue
            basis = cls.constant(1)
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j != i:
                    basis = basis * cls.linear(-xj)
                    denom *= xi - xj
            result = result + basis * (yi / denom)
        return result

    # --- Views ---
    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def evaluate(self, x: ScalarLike) -> Fraction:
        x = as_scalar(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            var = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            mag = format_scalar(abs(c))
            body = mag if not var else (var if abs(c) == 1 else f"{mag}*{var}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # --- Arithmetic ---
    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            s = as_scalar(other)
            return Polynomial(tuple(s * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise PolynomialError("negative polynomial power")
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Long division in Q[x]."""
        if divisor.is_zero():
            raise PolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        quot = [Fraction(0)] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] / lead
            if q:
                quot[i - dd] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= q * c
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dd] if dd > 0 else ()))


# ----------------------- Recurrence Parameters -----------------------

@dataclass(frozen=True, slots=True)
class RecParams:
    """The triple (b, h, k) naming W(1, b, h, k)."""
    b: Fraction
    h: Fraction
    k: Fraction

    def __post_init__(self) -> None:
        for name in ("b", "h", "k"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def __str__(self) -> str:
        return f"W(1, {format_scalar(self.b)}, {format_scalar(self.h)}, {format_scalar(self.k)})"


def fibonacci(h: ScalarLike, k: ScalarLike) -> RecParams:
    """F(h, k) = W(1, h, h, k)."""
    return RecParams(h, h, k)


def w_generate(p: RecParams, n_terms: int) -> UnitSequence:
    """The first n_terms of W(1, b, h, k)."""
    if n_terms < 1:
        raise RecurrenceError("n_terms must be at least 1")
    terms: List[Fraction] = [Fraction(1), p.b]
    while len(terms) < n_terms:
        terms.append(p.h * terms[-1] - p.k * terms[-2])
    return UnitSequence(tuple(terms[:n_terms]))


def w_series(p: RecParams, order: int) -> TruncatedSeries:
    """The generating function (1 + (b - h)t) / (1 - ht + kt^2) mod t^order."""
    num = TruncatedSeries.from_coeffs([1, p.b - p.h], order)
    den = TruncatedSeries.from_coeffs([1, -p.h, p.k], order)
    return num * reciprocal(den)


def w_from_lambda(p: RecParams, n_terms: int) -> UnitSequence:
    """W(1, b, h, k) read back through λ: t times the generating function."""
    gf = w_series(p, n_terms)
    return lambda_extract(TruncatedSeries((Fraction(0),) + gf.coeffs))


# ----------------------- Parameter Transport -----------------------

def map_invert(p: RecParams, x: ScalarLike) -> RecParams:
    """I^(x) W(1, b, h, k) = W(1, b + x, h + x, (h - b)x + k)."""
    x = as_scalar(x)
    return RecParams(p.b + x, p.h + x, (p.h - p.b) * x + p.k)


def map_binomial(p: RecParams, y: ScalarLike) -> RecParams:
    """L^(y) W(1, b, h, k) = W(1, b + y, h + 2y, y^2 + hy + k)."""
    y = as_scalar(y)
    return RecParams(p.b + y, p.h + 2 * y, y * y + p.h * y + p.k)


def map_combined(p: RecParams, x: ScalarLike, y: ScalarLike) -> RecParams:
    """C^(x,y) = I^(x) ∘ L^(y) = L^(y) ∘ I^(x), in closed form."""
    x, y = as_scalar(x), as_scalar(y)
    return RecParams(
        p.b + y + x,
        p.h + x + 2 * y,
        y * y + p.h * y + p.k + (p.h - p.b) * x + x * y,
    )


# ----------------------- Polynomial Family -----------------------

def p_poly(h: ScalarLike, k: ScalarLike, n: int) -> Polynomial:
    """P_n(h, k, x): P_-1 = 0, P_0 = 1, P_n = (x + h) P_(n-1) - k P_(n-2)."""
    if n < -1:
        raise RecurrenceError("P_n is defined for n >= -1")
    if n == -1:
        return Polynomial()
    return _p_family(as_scalar(h), as_scalar(k), n)


@lru_cache(maxsize=2048)
def _p_family(h: Fraction, k: Fraction, n: int) -> Polynomial:
    if n == 0:
        return Polynomial.constant(1)
    prev = _p_family(h, k, n - 2) if n >= 2 else Polynomial()
    return Polynomial.linear(h) * _p_family(h, k, n - 1) - prev * k


def divides(m: int, n: int, h: ScalarLike, k: ScalarLike) -> bool:
    """True iff P_(m-1)(h, k, x) divides P_(n-1)(h, k, x) exactly in Q[x]."""
    if m < 1 or n < 1:
        raise RecurrenceError("divides needs m, n >= 1")
    _, rem = divmod(p_poly(h, k, n - 1), p_poly(h, k, m - 1))
    return rem.is_zero()


@lru_cache(maxsize=4096)
def _reverted(p: RecParams, n_terms: int) -> UnitSequence:
    return eta(w_generate(p, n_terms))


def eta_transport_check(p: RecParams, x: ScalarLike, n_terms: int = DEFAULT_ORDER) -> bool:
    """
    Checks, term by term, the two Revert transport identities

        I^(x)(η W(1,b,h,k)) = η W(1, b - x, h - 2x, x^2 - hx + k)
        L^(x)(η W(1,b,h,k)) = η W(1, b - x, h - x, (b - h)x + k)
    """
    if n_terms < 2:
        raise RecurrenceError("eta_transport_check needs at least 2 terms")
    x = as_scalar(x)
    reverted = _reverted(p, n_terms)
    invert_side = _reverted(RecParams(p.b - x, p.h - 2 * x, x * x - p.h * x + p.k), n_terms)
    binomial_side = _reverted(RecParams(p.b - x, p.h - x, (p.b - p.h) * x + p.k), n_terms)
    ok_invert = invert_interp(reverted, x) == invert_side
    ok_binomial = binomial_interp(reverted, x) == binomial_side
    if not (ok_invert and ok_binomial):
        logger.debug("eta transport failed for %s, x=%s (invert=%s, binomial=%s)",
                     p, x, ok_invert, ok_binomial)
    return ok_invert and ok_binomial


# ----------------------- Binet Form -----------------------

def rational_sqrt(q: ScalarLike) -> Fraction | None:
    """The non-negative rational square root of q, or None if q is not a square."""
    q = as_scalar(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def binet_terms(h: ScalarLike, k: ScalarLike, n_terms: int) -> List[Fraction]:
    """
    F(h, k) terms from the closed form (a1^(n+1) - a2^(n+1)) / (a1 - a2),
    a1, a2 the roots of z^2 - hz + k. Requires distinct rational roots.
    """
    h, k = as_scalar(h), as_scalar(k)
    root = rational_sqrt(h * h - 4 * k)
    if root is None or root == 0:
        raise RecurrenceError(f"z^2 - {h}z + {k} has no distinct rational roots")
    a1, a2 = (h + root) / 2, (h - root) / 2
    return [(a1 ** (n + 1) - a2 ** (n + 1)) / (a1 - a2) for n in range(n_terms)]
