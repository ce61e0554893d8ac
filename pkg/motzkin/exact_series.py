# motzkin/exact_series.py
"""
Exact truncated formal power series over the rationals.

Every other module of the toolkit builds on the handful of kernels defined
here: ring arithmetic, reciprocal, composition, square root, compositional
inverse and the Lagrange inversion coefficient. Coefficients are
``fractions.Fraction`` values, so every identity checked elsewhere is an
exact equality.

A series carries its own truncation order N: it stands for
c_0 + c_1 t + ... + c_{N-1} t^{N-1} (mod t^N). Operations never extend the
order silently; binary operations require equal orders.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

# ----------------------- Scalars -----------------------

# The coefficient field. Fraction keeps every value reduced with a positive
# denominator.
ExactScalar = Fraction

ScalarLike = Union[int, Fraction, str]

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class SeriesError(ValueError):
    """Raised on order mismatches, non-units and malformed series inputs."""


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerces an int, Fraction or "p/q" literal into an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise SeriesError(f"not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_LITERAL.match(value)
        if not match:
            raise SeriesError(f"unparseable rational {value!r} (expected 'p/q' or an integer)")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise SeriesError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise SeriesError(f"not a rational value: {value!r}")


def format_scalar(value: Fraction) -> str:
    """Prints p/q, or p alone when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalars(values: Iterable[Fraction]) -> str:
    return ",".join(format_scalar(v) for v in values)


def binom_rational(upper: ScalarLike, i: int) -> Fraction:
    """binom(upper, i) for rational upper, as a falling factorial over i!."""
    if i < 0:
        return Fraction(0)
    a = as_scalar(upper)
    acc = Fraction(1)
    for j in range(i):
        acc *= a - j
    return acc / math.factorial(i)


# ----------------------- Integer Kernels -----------------------

def _scaled(coeffs: Sequence[Fraction]) -> Tuple[List[int], int]:
    """Rewrites rationals over a common denominator: (numerators, denominator)."""
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _int_product(na: Sequence[int], nb: Sequence[int], order: int) -> List[int]:
    out = [0] * order
    for i in range(min(order, len(na))):
        ai = na[i]
        if not ai:
            continue
        for j in range(min(order - i, len(nb))):
            bj = nb[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _cauchy(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> Tuple[Fraction, ...]:
    """Truncated Cauchy product, accumulated in Python ints."""
    na, da = _scaled(a)
    nb, db = _scaled(b)
    den = da * db
    return tuple(Fraction(v, den) for v in _int_product(na, nb, order))


# ----------------------- Series Type -----------------------

class SeriesOp(Enum):
    """Ring operations accepted by series_arith."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_{N-1} t^{N-1} (mod t^N), N = len(coeffs)."""
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in self.coeffs))

    # --- Constructors ---
    @classmethod
    def from_coeffs(cls, values: Iterable[ScalarLike], order: int | None = None) -> "TruncatedSeries":
        """Builds a series, zero-padding or cutting the values to ``order``."""
        coeffs = [as_scalar(v) for v in values]
        if order is None:
            return cls(tuple(coeffs))
        if order < 0:
            raise SeriesError("order must be non-negative")
        coeffs = coeffs[:order] + [Fraction(0)] * max(0, order - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series t."""
        return cls.from_coeffs([0, 1], order)

    # --- Views ---
    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self) -> str:
        return format_scalars(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot truncate order {self.order} up to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def extend(self, order: int) -> "TruncatedSeries":
        """Zero-pads to a larger order. Only valid where the caller knows the tail."""
        return TruncatedSeries.from_coeffs(self.coeffs, order)

    def derivative(self) -> "TruncatedSeries":
        """d/dt, keeping the order; the unknown top coefficient is set to zero."""
        body = [(i + 1) * c for i, c in enumerate(self.coeffs[1:])]
        return TruncatedSeries.from_coeffs(body, self.order)

    def scale(self, factor: ScalarLike) -> "TruncatedSeries":
        s = as_scalar(factor)
        return TruncatedSeries(tuple(s * c for c in self.coeffs))

    # --- Operators ---
    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_arith(self, other, SeriesOp.ADD)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_arith(self, other, SeriesOp.SUB)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_arith(self, other, SeriesOp.MUL)

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return reciprocal(self) ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


# ----------------------- Core Operations -----------------------

def series_arith(f: TruncatedSeries, g: TruncatedSeries, op: SeriesOp) -> TruncatedSeries:
    """add / sub coefficientwise, mul as the Cauchy product mod t^order."""
    if f.order != g.order:
        raise SeriesError(f"order mismatch: {f.order} != {g.order}")
    if op is SeriesOp.ADD:
        return TruncatedSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))
    if op is SeriesOp.SUB:
        return TruncatedSeries(tuple(a - b for a, b in zip(f.coeffs, g.coeffs)))
    return TruncatedSeries(_cauchy(f.coeffs, g.coeffs, f.order))


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """g with f*g = 1 (mod t^order)."""
    if f.order == 0:
        return f
    c = f.coeffs
    if c[0] == 0:
        raise SeriesError("not a unit: constant term is zero")
    inv0 = 1 / c[0]
    out = [inv0]
    for n in range(1, f.order):
        acc = Fraction(0)
        for i in range(1, n + 1):
            if c[i]:
                acc += c[i] * out[n - i]
        out.append(-acc * inv0)
    return TruncatedSeries(tuple(out))


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g(t)) mod t^order by Horner evaluation; g must have zero constant term."""
    if f.order != g.order:
        raise SeriesError(f"order mismatch: {f.order} != {g.order}")
    if f.order == 0:
        return f
    if g.coeffs[0] != 0:
        raise SeriesError("composition requires zero constant term")
    # Horner over numerators: after each step acc / (df * scale) is the partial value.
    order = f.order
    nf, df = _scaled(f.coeffs)
    ng, dg = _scaled(g.coeffs)
    acc = [0] * order
    acc[0] = nf[-1]
    scale = 1
    for c in reversed(nf[:-1]):
        scale *= dg
        acc = _int_product(acc, ng, order)
        acc[0] += c * scale
    den = df * scale
    return TruncatedSeries(tuple(Fraction(v, den) for v in acc))


def sqrt_series(f: TruncatedSeries) -> TruncatedSeries:
    """The square root with constant term 1, by Newton iteration g <- (g + f/g)/2."""
    if f.order == 0:
        return f
    if f.coeffs[0] != 1:
        raise SeriesError("sqrt_series requires constant term 1; normalize before calling")
    g = TruncatedSeries.one(1)
    prec = 1
    half = Fraction(1, 2)
    while prec < f.order:
        prec = min(2 * prec, f.order)
        g = g.extend(prec)
        g = (g + f.truncate(prec) * reciprocal(g)).scale(half)
        logger.debug("sqrt_series: precision %d reached", prec)
    return g


def _require_lambda_shape(f: TruncatedSeries, what: str) -> None:
    if f.order < 2:
        raise SeriesError(f"{what} needs order >= 2, got {f.order}")
    if f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise SeriesError(f"{what} requires c0 = 0 and c1 = 1 (got c0={f.coeffs[0]}, c1={f.coeffs[1]})")


def comp_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """
    The compositional inverse g, f(g) = g(f) = t (mod t^order).

    Newton iteration g <- g - (f(g) - t)/f'(g) with precision doubling;
    each step doubles the number of correct coefficients.
    """
    _require_lambda_shape(f, "comp_inverse")
    g = TruncatedSeries.variable(2)
    prec = 2
    while prec < f.order:
        prec = min(2 * prec, f.order)
        fp = f.truncate(prec)
        g = g.extend(prec)
        residual = compose(fp, g) - TruncatedSeries.variable(prec)
        slope = compose(fp.derivative(), g)
        g = g - residual * reciprocal(slope)
        logger.debug("comp_inverse: precision %d reached", prec)
    return g


def lagrange_coefficient(t_of_u: TruncatedSeries, n: int) -> Fraction:
    """
    b_n = [u^n] (u / t(u))^(n+1) / (n+1), the coefficient of t^(n+1) in the
    inverse series of t(u).
    """
    _require_lambda_shape(t_of_u, "lagrange_coefficient")
    if n < 0:
        raise SeriesError("index must be non-negative")
    if n + 1 >= t_of_u.order:
        raise SeriesError(f"insufficient order {t_of_u.order} for coefficient {n} (need > {n + 1})")
    quotient = TruncatedSeries(t_of_u.coeffs[1:])
    base = reciprocal(quotient).truncate(n + 1)
    return (base ** (n + 1))[n] / (n + 1)
