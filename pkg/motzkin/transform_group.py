# motzkin/transform_group.py
"""
The group S of sequences with leading term 1 under the product
A • B = λ^-1(λ(A) ∘ λ(B)), where λ(A) = Σ a_n t^(n+1).

Operators: Revert (eta, the group inverse), the sign flip epsilon, left and
right multiplication, and the interpolated Invert / Binomial operators.
Invert and Binomial each have a definition-formula route and a group-product
route; the two must agree, which is how the left/right multiplication
identities are checked.

Transforms preserve length. λ raises the series order by one, so a route
through composition keeps every one of the N input terms valid.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, List, Tuple

from motzkin.exact_series import (
    ScalarLike,
    SeriesError,
    TruncatedSeries,
    as_scalar,
    comp_inverse,
    compose,
    format_scalars,
    reciprocal,
)

logger = logging.getLogger(__name__)


class SequenceError(ValueError):
    """Raised for sequences outside S, length mismatches and bad pipelines."""


# ----------------------- Data Types & Enums -----------------------

@dataclass(frozen=True, slots=True)
class UnitSequence:
    """A finite prefix a_0..a_{N-1} of a sequence with a_0 = 1."""
    terms: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        try:
            terms = tuple(as_scalar(v) for v in self.terms)
        except SeriesError as exc:
            raise SequenceError(str(exc)) from exc
        if not terms:
            raise SequenceError("a unit sequence needs at least one term")
        if terms[0] != 1:
            raise SequenceError(f"a0 must be 1, got {terms[0]}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, values: Iterable[ScalarLike]) -> "UnitSequence":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> Fraction:
        return self.terms[n]

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return format_scalars(self.terms)


class Route(Enum):
    """How an interpolated operator is evaluated."""
    FORMULA = "formula"      # I: A/(1 - xtA);  L: binomial sum
    GROUP = "group"          # I: X(x) • A;     L: A • X(y)
    EXPONENTIAL = "egf"      # L only: exp(yt) times the exponential gf of A


def _same_length(*seqs: UnitSequence) -> int:
    lengths = {len(s) for s in seqs}
    if len(lengths) != 1:
        raise SequenceError(f"length mismatch: {sorted(lengths)}")
    return lengths.pop()


# ----------------------- Embedding -----------------------

def lambda_embed(a: UnitSequence) -> TruncatedSeries:
    """λ(A) = Σ a_n t^(n+1), of order len(A) + 1."""
    return TruncatedSeries((Fraction(0),) + a.terms)


def lambda_extract(f: TruncatedSeries) -> UnitSequence:
    """Inverse of lambda_embed: a_n = c_(n+1)."""
    if f.order < 2 or f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise SequenceError("not in λ(S): need c0 = 0 and c1 = 1")
    return UnitSequence(f.coeffs[1:])


def geometric(x: ScalarLike, n_terms: int) -> UnitSequence:
    """X(x) = (1, x, x^2, ...)."""
    x = as_scalar(x)
    return UnitSequence(tuple(x ** i for i in range(n_terms)))


def identity(n_terms: int) -> UnitSequence:
    """X(0) = (1, 0, 0, ...), the neutral element."""
    return geometric(0, n_terms)


# ----------------------- Group Operations -----------------------

def bullet(a: UnitSequence, b: UnitSequence) -> UnitSequence:
    """A • B = λ^-1(λ(A) ∘ λ(B))."""
    _same_length(a, b)
    return lambda_extract(compose(lambda_embed(a), lambda_embed(b)))


def left_multiply(a: UnitSequence, b: UnitSequence) -> UnitSequence:
    """ℒ_A(B) = A • B."""
    return bullet(a, b)


def right_multiply(a: UnitSequence, b: UnitSequence) -> UnitSequence:
    """ℛ_A(B) = B • A."""
    return bullet(b, a)


def eta(a: UnitSequence) -> UnitSequence:
    """Revert: the group inverse, via the compositional inverse of λ(A)."""
    return lambda_extract(comp_inverse(lambda_embed(a)))


def epsilon(a: UnitSequence) -> UnitSequence:
    """(-1)^n a_n."""
    return UnitSequence(tuple(-v if n % 2 else v for n, v in enumerate(a.terms)))


def gamma(a: UnitSequence) -> UnitSequence:
    """γ = η ∘ ε, an involution."""
    return eta(epsilon(a))


# ----------------------- Interpolated Operators -----------------------

def invert_interp(a: UnitSequence, x: ScalarLike, route: Route = Route.FORMULA) -> UnitSequence:
    """I^(x)(A): generating function A(t) / (1 - x t A(t))."""
    x = as_scalar(x)
    n = len(a)
    if route is Route.GROUP:
        return bullet(geometric(x, n), a)
    if route is not Route.FORMULA:
        raise SequenceError(f"invert_interp has no {route.value} route")
    gf = TruncatedSeries(a.terms)
    xt = TruncatedSeries.from_coeffs([0, x], n)
    return UnitSequence((gf * reciprocal(TruncatedSeries.one(n) - xt * gf)).coeffs)


def binomial_interp(a: UnitSequence, y: ScalarLike, route: Route = Route.FORMULA) -> UnitSequence:
    """L^(y)(A): l_n = Σ_j binom(n, j) y^(n-j) a_j."""
    y = as_scalar(y)
    n = len(a)
    if route is Route.GROUP:
        return bullet(a, geometric(y, n))
    if route is Route.EXPONENTIAL:
        fact = [math.factorial(i) for i in range(n)]
        egf_a = TruncatedSeries(tuple(v / fact[i] for i, v in enumerate(a.terms)))
        egf_exp = TruncatedSeries(tuple(y ** i / fact[i] for i in range(n)))
        prod = egf_a * egf_exp
        return UnitSequence(tuple(c * fact[i] for i, c in enumerate(prod.coeffs)))
    ypow = [y ** i for i in range(n)]
    out: List[Fraction] = []
    for m in range(n):
        acc = Fraction(0)
        for j in range(m + 1):
            if a.terms[j]:
                acc += math.comb(m, j) * ypow[m - j] * a.terms[j]
        out.append(acc)
    return UnitSequence(tuple(out))


def invert(a: UnitSequence) -> UnitSequence:
    """The classical Invert transform, I^(1)."""
    return invert_interp(a, 1)


def binomial(a: UnitSequence) -> UnitSequence:
    """The classical Binomial transform, L^(1)."""
    return binomial_interp(a, 1)


# ----------------------- Pipelines -----------------------

TransformFunc = Callable[[UnitSequence], UnitSequence]


@dataclass(frozen=True)
class Transform:
    """One named stage of a transform pipeline."""
    name: str
    func: TransformFunc

    def apply(self, seq: UnitSequence) -> UnitSequence:
        return self.func(seq)


def _make_stage(token: str) -> Transform:
    name, _, arg = token.strip().partition(":")
    name = name.strip().lower()
    if name in ("invert", "binomial"):
        if not arg:
            raise SequenceError(f"stage {name!r} needs a parameter, e.g. {name}:1")
        try:
            value = as_scalar(arg)
        except SeriesError as exc:
            raise SequenceError(f"stage {token.strip()!r}: {exc}") from exc
        op = invert_interp if name == "invert" else binomial_interp
        return Transform(name=f"{name}({value})", func=lambda seq: op(seq, value))
    if arg:
        raise SequenceError(f"stage {name!r} takes no parameter")
    simple = {"eta": eta, "epsilon": epsilon, "gamma": gamma}
    if name not in simple:
        raise SequenceError(f"unknown stage {name!r} (expected invert:x, binomial:y, eta, epsilon, gamma)")
    return Transform(name=name, func=simple[name])


def parse_pipeline(text: str) -> List[Transform]:
    """Parses "invert:x|binomial:y|eta|epsilon" into stages applied left to right."""
    tokens = [t for t in text.split("|") if t.strip()]
    if not tokens:
        raise SequenceError("empty pipeline")
    return [_make_stage(t) for t in tokens]


def apply_pipeline(seq: UnitSequence, stages: Iterable[Transform]) -> UnitSequence:
    for stage in stages:
        seq = stage.apply(seq)
        logger.debug("pipeline stage %s -> %s", stage.name, seq)
    return seq
