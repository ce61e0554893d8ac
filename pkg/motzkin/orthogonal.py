# motzkin/orthogonal.py
"""
The orthogonal-polynomial side of the moments: the explicit family P_n(x),
its coefficients, Dickson polynomials of the second kind, the moment
functional V with V[x^n] = mu_n(h, k), and the orthogonality and Catalan
identities.

Under the canonical moments (mu_1 = h) the orthogonal family is generated
with (x - h):  Q_n = (x - h) Q_(n-1) - k Q_(n-2).  The (x + h) family
P_n(h, k, x) of the recurrence module is orthogonal under mu(-h, k). Both
pairings are exposed.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List

from motzkin.exact_series import ScalarLike, as_scalar
from motzkin.moments import MomentError, MomentRequest, catalan, mu_lagrange, mu_recur
from motzkin.recurrence import Polynomial

logger = logging.getLogger(__name__)


# ----------------------- Moment Functional -----------------------

@dataclass(slots=True)
class MomentFunctional:
    """V with V[x^j] = mu_j(h, k); the moment cache only ever grows."""
    h: Fraction
    k: Fraction
    moment_cache: List[Fraction] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.h = as_scalar(self.h)
        self.k = as_scalar(self.k)
        if self.k == 0:
            raise MomentError("moment functional undefined: k = 0")

    def ensure(self, n: int) -> None:
        """Materializes mu_0..mu_n."""
        if len(self.moment_cache) > n:
            return
        self.moment_cache = mu_recur(MomentRequest(self.h, self.k, n))
        logger.debug("moment cache for (h, k)=(%s, %s) extended to n=%d", self.h, self.k, n)

    def moment(self, j: int) -> Fraction:
        self.ensure(j)
        return self.moment_cache[j]


def apply_functional(functional: MomentFunctional, p: Polynomial) -> Fraction:
    """V[p] = Σ_j coeff_j(p) mu_j(h, k)."""
    if p.is_zero():
        return Fraction(0)
    functional.ensure(p.degree)
    mu = functional.moment_cache
    return sum((c * mu[j] for j, c in enumerate(p.coeffs)), Fraction(0))


# ----------------------- Polynomial Families -----------------------

def p_explicit(n: int, h: ScalarLike, k: ScalarLike) -> Polynomial:
    """P_n(x) = Σ_l binom(n - l, l) (h + x)^(n - 2l) (-k)^l."""
    if n < 0:
        raise ValueError("P_n needs n >= 0")
    h, k = as_scalar(h), as_scalar(k)
    shift = Polynomial.linear(h)
    result = Polynomial()
    for l in range(n // 2 + 1):
        result = result + shift ** (n - 2 * l) * (math.comb(n - l, l) * (-k) ** l)
    return result


def p_coefficient(n: int, j: int, h: ScalarLike, k: ScalarLike) -> Fraction:
    """Coefficient of x^j in P_n: Σ_l binom(n-l, l) binom(n-2l, j) h^(n-2l-j) (-k)^l."""
    h, k = as_scalar(h), as_scalar(k)
    acc = Fraction(0)
    for l in range(n // 2 + 1):
        if j > n - 2 * l:
            continue
        acc += math.comb(n - l, l) * math.comb(n - 2 * l, j) * h ** (n - 2 * l - j) * (-k) ** l
    return acc


def dickson_e(n: int, k: ScalarLike) -> Polynomial:
    """Dickson polynomial of the second kind, E_n(x, k) = Σ_i binom(n-i, i) (-k)^i x^(n-2i)."""
    if n < 0:
        raise ValueError("E_n needs n >= 0")
    k = as_scalar(k)
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n // 2 + 1):
        coeffs[n - 2 * i] = math.comb(n - i, i) * (-k) ** i
    return Polynomial(tuple(coeffs))


def orthogonal_family(n: int, h: ScalarLike, k: ScalarLike) -> Polynomial:
    """Q_-1 = 0, Q_0 = 1, Q_n = (x - h) Q_(n-1) - k Q_(n-2): orthogonal under mu(h, k)."""
    h, k = as_scalar(h), as_scalar(k)
    if k == 0:
        raise MomentError("orthogonal family undefined: k = 0")
    if n < 0:
        raise ValueError("Q_n needs n >= 0")
    prev, cur = Polynomial(), Polynomial.constant(1)
    step = Polynomial.linear(-h)
    for _ in range(n):
        prev, cur = cur, step * cur - prev * k
    return cur


# ----------------------- Orthogonality Checks -----------------------

class Pairing(Enum):
    """Which polynomial family is paired with the canonical mu(h, k)."""
    CANONICAL = "canonical"   # (x - h) family
    SHIFTED = "shifted"       # (x + h) family, orthogonal under mu(-h, k) instead


@dataclass(frozen=True, slots=True)
class DeltaCheck:
    """Outcome of V[poly] = expected, with the exact residual V[poly] - expected."""
    passed: bool
    value: Fraction
    expected: Fraction

    @property
    def residual(self) -> Fraction:
        return self.value - self.expected

    def __bool__(self) -> bool:
        return self.passed


def delta_relation_check(n: int, h: ScalarLike, k: ScalarLike,
                         pairing: Pairing = Pairing.CANONICAL) -> DeltaCheck:
    """V_mu(h,k)[family_n] == δ(n, 0)."""
    h, k = as_scalar(h), as_scalar(k)
    functional = MomentFunctional(h, k)
    poly = orthogonal_family(n, h, k) if pairing is Pairing.CANONICAL else p_explicit(n, h, k)
    value = apply_functional(functional, poly)
    expected = Fraction(1 if n == 0 else 0)
    return DeltaCheck(passed=value == expected, value=value, expected=expected)


def printed_double_sum(n: int, h: ScalarLike, k: ScalarLike) -> Fraction:
    """
    Σ_j P_j^(n)(h, k) Σ_p j! (-h)^(j-2p+2) k^(p-1) / (p! (j-2p+2)! (p-1)!)

    evaluated literally: (x + h) coefficients against the trinomial moments
    with -h. The two sign swaps cancel, so this equals δ(n, 0).
    """
    h, k = as_scalar(h), as_scalar(k)
    return sum((p_coefficient(n, j, h, k) * mu_lagrange(j, -h, k) for j in range(n + 1)), Fraction(0))


# ----------------------- Catalan Identity -----------------------

def catalan_identity(m: int, k: ScalarLike) -> Fraction:
    """Σ_{i=0}^m binom(2m - i, i) (-k)^i k^(m-i) C_(m-i); equals δ(m, 0)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    k = as_scalar(k)
    return sum((math.comb(2 * m - i, i) * (-k) ** i * k ** (m - i) * catalan(m - i) for i in range(m + 1)),
               Fraction(0))


def catalan_identity_core(m: int) -> int:
    """The k-free core Σ_i binom(2m - i, i) (-1)^i C_(m-i); the full sum is k^m times this."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return sum((-1) ** i * math.comb(2 * m - i, i) * (math.comb(2 * (m - i), m - i) // (m - i + 1))
               for i in range(m + 1))
