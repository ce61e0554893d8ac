# motzkin/moments.py
"""
Generalized Motzkin numbers mu_n(h, k), the moments of the functional that
orthogonalizes the (x - h, k) three-term recurrence family.

Sign convention: mu_1 = h, and mu_n(1, 1) are the Motzkin numbers. This is
the convention of the generating function

    mu(t) = (1 - ht - sqrt((1 - ht)^2 - 4kt^2)) / (2kt^2),

of the J-fraction with diagonal 1 - ht, of the recurrence
(n + 2) mu_n = h(2n + 1) mu_(n-1) - (h^2 - 4k)(n - 1) mu_(n-2) and of the
path weights (East = h, NorthEast = 1, SouthEast = k). Formulas derived by
Lagrange inversion of t = u / (1 - hu + ku^2) naturally produce mu_n(-h, k);
they are stated here with h in place of -h.

Five analytic routes are provided and must agree exactly; the weighted path
enumeration is the ground-truth oracle.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from motzkin.config_motzkin import PATH_ENUMERATION_BOUND
from motzkin.exact_series import (
    ScalarLike,
    TruncatedSeries,
    as_scalar,
    binom_rational,
    reciprocal,
    sqrt_series,
)
from motzkin.recurrence import Polynomial

logger = logging.getLogger(__name__)


class MomentError(ValueError):
    """Raised when a moment request is outside the functional's domain."""


class PathBoundError(MomentError):
    """Raised when brute-force path enumeration is asked for too long a path."""


def _require_nonzero_k(k: Fraction) -> None:
    if k == 0:
        raise MomentError("moment functional undefined: k = 0")


# ----------------------- Data Types & Enums -----------------------

@dataclass(frozen=True, slots=True)
class MomentRequest:
    """mu_0..mu_n_max of the functional with parameters (h, k)."""
    h: Fraction
    k: Fraction
    n_max: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "h", as_scalar(self.h))
        object.__setattr__(self, "k", as_scalar(self.k))
        _require_nonzero_k(self.k)
        if self.n_max < 0:
            raise MomentError(f"n_max must be non-negative, got {self.n_max}")


class MomentMethod(Enum):
    """The independent routes to mu_n(h, k)."""
    GF = "gf"
    CFRAC = "cfrac"
    CLOSED = "closed"
    RECUR = "recur"
    LAGRANGE = "lagrange"
    PATHS = "paths"


class Step(Enum):
    """Motzkin path steps, encoded by their listing letter."""
    EAST = "H"
    NORTH_EAST = "U"
    SOUTH_EAST = "D"

    @property
    def rise(self) -> int:
        return {"H": 0, "U": 1, "D": -1}[self.value]


@dataclass(frozen=True, slots=True)
class MotzkinPath:
    """A lattice path (0,0) -> (n,0) that never dips below the axis."""
    steps: Tuple[Step, ...]

    def __post_init__(self) -> None:
        height = 0
        for step in self.steps:
            height += step.rise
            if height < 0:
                raise MomentError(f"path {self.as_udh()} dips below the axis")
        if height != 0:
            raise MomentError(f"path {self.as_udh()} ends at height {height}")

    def census(self) -> Tuple[int, int]:
        """(#East, #SouthEast)."""
        return self.steps.count(Step.EAST), self.steps.count(Step.SOUTH_EAST)

    def weight(self, h: ScalarLike, k: ScalarLike) -> Fraction:
        east, down = self.census()
        return as_scalar(h) ** east * as_scalar(k) ** down

    def as_udh(self) -> str:
        return "".join(step.value for step in self.steps)

    def monomial(self) -> str:
        return _monomial(*self.census())


def _monomial(east: int, down: int) -> str:
    parts = []
    for sym, e in (("h", east), ("k", down)):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(f"{sym}^{e}")
    return "*".join(parts) if parts else "1"


# ----------------------- Analytic Routes -----------------------

def mu_gf_series(req: MomentRequest) -> List[Fraction]:
    """Expands (1 - ht - sqrt(1 - 2ht + (h^2 - 4k)t^2)) / (2kt^2)."""
    h, k = req.h, req.k
    order = req.n_max + 3
    root = sqrt_series(TruncatedSeries.from_coeffs([1, -2 * h, h * h - 4 * k], order))
    numerator = TruncatedSeries.from_coeffs([1, -h], order) - root
    if numerator[0] != 0 or numerator[1] != 0:
        raise MomentError("numerator of the moment generating function is not divisible by t^2")
    return [numerator[n + 2] / (2 * k) for n in range(req.n_max + 1)]


def cfrac_required_depth(n_max: int) -> int:
    return n_max // 2 + 1


def mu_cfrac(req: MomentRequest, depth: int | None = None) -> List[Fraction]:
    """
    Evaluates 1 / (1 - ht - kt^2 / (1 - ht - kt^2 / ( ... (1 - ht)))) with
    ``depth`` partial numerators kt^2, as a series. Depth d fixes every
    coefficient through t^(2d+1).
    """
    required = cfrac_required_depth(req.n_max)
    if depth is None:
        depth = required
    if depth < required:
        raise MomentError(f"continued fraction depth {depth} too small for n_max={req.n_max}; "
                          f"need depth >= {required}")
    order = req.n_max + 1
    diagonal = TruncatedSeries.from_coeffs([1, -req.h], order)
    numerator = TruncatedSeries.from_coeffs([0, 0, req.k], order)
    tail = diagonal
    for _ in range(depth):
        tail = diagonal - numerator * reciprocal(tail)
    return list(reciprocal(tail).coeffs)


def mu_closed(n: int, h: ScalarLike, k: ScalarLike) -> Fraction:
    """
    Parity-split closed form: for n >= 1,

        mu_n = -1/(2k) Σ_j binom(1/2, n+2-j) binom(n+2-j, j) (-2h)^(n+2-2j) (h^2-4k)^j

    with j up to (n+1)/2 for odd n and (n+2)/2 for even n. The even top term
    j = (n+2)/2 is nonzero and required.
    """
    h, k = as_scalar(h), as_scalar(k)
    _require_nonzero_k(k)
    if n < 0:
        raise MomentError("moment index must be non-negative")
    if n == 0:
        return Fraction(1)
    top = (n + 1) // 2 if n % 2 else (n + 2) // 2
    disc = h * h - 4 * k
    acc = Fraction(0)
    for j in range(top + 1):
        i = n + 2 - j
        acc += binom_rational(Fraction(1, 2), i) * math.comb(i, j) * (-2 * h) ** (n + 2 - 2 * j) * disc ** j
    return -acc / (2 * k)


def mu_recur(req: MomentRequest) -> List[Fraction]:
    """
    mu_0 = 1, mu_1 = h, (n + 2) mu_n = h(2n + 1) mu_(n-1) - (h^2 - 4k)(n - 1) mu_(n-2).

    With integer h and k every term must come out integral.
    """
    h, k = req.h, req.k
    mu = [Fraction(1), h][: req.n_max + 1]
    disc = h * h - 4 * k
    for n in range(2, req.n_max + 1):
        mu.append((h * (2 * n + 1) * mu[n - 1] - disc * (n - 1) * mu[n - 2]) / (n + 2))
    if h.denominator == 1 and k.denominator == 1:
        bad = [n for n, v in enumerate(mu) if v.denominator != 1]
        if bad:
            logger.warning("non-integral moments at n=%s for (h, k)=(%s, %s)", bad, h, k)
            raise MomentError(f"recurrence produced non-integral moments at n={bad}")
    return mu


def mu_lagrange(n: int, h: ScalarLike, k: ScalarLike) -> Fraction:
    """
    Trinomial form from Lagrange inversion of t = u / (1 - hu + ku^2):

        mu_n = Σ_{p=1}^{floor((n+2)/2)} n! / (p! (n-2p+2)! (p-1)!) h^(n-2p+2) k^(p-1)
    """
    h, k = as_scalar(h), as_scalar(k)
    _require_nonzero_k(k)
    if n < 0:
        raise MomentError("moment index must be non-negative")
    acc = Fraction(0)
    for p in range(1, (n + 2) // 2 + 1):
        coeff = math.factorial(n) // (
            math.factorial(p) * math.factorial(n - 2 * p + 2) * math.factorial(p - 1)
        )
        acc += coeff * h ** (n - 2 * p + 2) * k ** (p - 1)
    return acc


def _multinomial(total: int, *parts: int) -> int:
    out = math.factorial(total)
    for part in parts:
        out //= math.factorial(part)
    return out


def mu_multinomial(n: int, h: ScalarLike, k: ScalarLike) -> Fraction:
    """The parity-split form Σ_j A_j h^(2j+1) (odd n) or Σ_j A_j h^(2j) (even n)."""
    h, k = as_scalar(h), as_scalar(k)
    _require_nonzero_k(k)
    if n < 0:
        raise MomentError("moment index must be non-negative")
    acc = Fraction(0)
    if n % 2:
        for j in range((n - 1) // 2 + 1):
            a_j = Fraction(_multinomial(n + 1, (n + 1) // 2 - j, 2 * j + 1, (n - 1) // 2 - j), n + 1)
            acc += a_j * k ** ((n - 1) // 2 - j) * h ** (2 * j + 1)
    else:
        for j in range(n // 2 + 1):
            a_j = Fraction(_multinomial(n + 1, n // 2 + 1 - j, 2 * j, n // 2 - j), n + 1)
            acc += a_j * k ** (n // 2 - j) * h ** (2 * j)
    return acc


def catalan(m: int) -> Fraction:
    """C_m = binom(2m + 1, m) / (2m + 1)."""
    if m < 0:
        raise MomentError("Catalan index must be non-negative")
    return Fraction(math.comb(2 * m + 1, m), 2 * m + 1)


# ----------------------- Path Oracle -----------------------

_STEP_ORDER = (Step.EAST, Step.NORTH_EAST, Step.SOUTH_EAST)


def _walk(n: int) -> Iterator[Tuple[Step, ...]]:
    """Depth-first Motzkin paths of length n, pruned on height, in H < U < D order."""

    def extend(prefix: Tuple[Step, ...], height: int) -> Iterator[Tuple[Step, ...]]:
        remaining = n - len(prefix)
        if remaining == 0:
            yield prefix
            return
        for step in _STEP_ORDER:
            new_height = height + step.rise
            if 0 <= new_height <= remaining - 1:
                yield from extend(prefix + (step,), new_height)

    return extend((), 0)


def _check_bound(n: int, bound: int) -> None:
    if n < 0:
        raise MomentError("path length must be non-negative")
    if n > bound:
        raise PathBoundError(f"path enumeration limited to n <= {bound}; "
                             f"use an analytic route (gf, cfrac, closed, recur, lagrange) for n={n}")


def enumerate_paths(n: int, bound: int = PATH_ENUMERATION_BOUND) -> Iterator[MotzkinPath]:
    _check_bound(n, bound)
    for steps in _walk(n):
        yield MotzkinPath(steps)


@lru_cache(maxsize=None)
def _completions(remaining: int, height: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """
    (#East, #SouthEast) census of the walks that finish a path from this
    height in ``remaining`` steps. Same traversal and pruning as ``_walk``,
    with each subtree counted once.
    """
    if remaining == 0:
        return (((0, 0), 1),)
    counts: Counter = Counter()
    for step in _STEP_ORDER:
        new_height = height + step.rise
        if 0 <= new_height <= remaining - 1:
            east, down = int(step is Step.EAST), int(step is Step.SOUTH_EAST)
            for (e, d), count in _completions(remaining - 1, new_height):
                counts[(e + east, d + down)] += count
    return tuple(counts.items())


@lru_cache(maxsize=None)
def _census(n: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    counts = dict(_completions(n, 0))
    logger.debug("counted %d Motzkin paths of length %d", sum(counts.values()), n)
    return tuple(sorted(counts.items()))


def path_census(n: int, bound: int = PATH_ENUMERATION_BOUND) -> Dict[Tuple[int, int], int]:
    """Number of paths of length n with a given (#East, #SouthEast)."""
    _check_bound(n, bound)
    return dict(_census(n))


def mu_paths(n: int, h: ScalarLike, k: ScalarLike, bound: int = PATH_ENUMERATION_BOUND) -> Fraction:
    """Σ over Motzkin paths of length n of h^#East k^#SouthEast."""
    h, k = as_scalar(h), as_scalar(k)
    return sum((count * h ** east * k ** down for (east, down), count in path_census(n, bound).items()),
               Fraction(0))


# ----------------------- Symbolic Form -----------------------

def mu_symbolic(n: int) -> Dict[Tuple[int, int], int]:
    """
    mu_n(h, k) as {(a, c): coefficient of h^a k^c}, recovered by exact
    interpolation: first in h at fixed k, then each h-coefficient in k.
    """
    if n < 0:
        raise MomentError("moment index must be non-negative")
    k_nodes = list(range(1, n // 2 + 2))
    h_nodes = list(range(0, n + 1))
    by_k: List[Polynomial] = []
    for kk in k_nodes:
        points = [(hh, mu_recur(MomentRequest(hh, kk, n))[n]) for hh in h_nodes]
        by_k.append(Polynomial.interpolate(points))
    result: Dict[Tuple[int, int], int] = {}
    for a in range(n + 1):
        in_k = Polynomial.interpolate([(kk, poly.coefficient(a)) for kk, poly in zip(k_nodes, by_k)])
        for c, value in enumerate(in_k.coeffs):
            if value:
                if value.denominator != 1:
                    raise MomentError(f"non-integral coefficient {value} of h^{a} k^{c} in mu_{n}")
                result[(a, c)] = value.numerator
    return result


def format_symbolic(terms: Dict[Tuple[int, int], int]) -> str:
    """Prints {(4,0): 1, (2,1): 6, (0,2): 2} as "h^4 + 6*h^2*k + 2*k^2"."""
    if not terms:
        return "0"
    parts = []
    for (a, c), coeff in sorted(terms.items(), key=lambda item: (-item[0][0], item[0][1])):
        mono = _monomial(a, c)
        if mono == "1":
            body = str(abs(coeff))
        else:
            body = mono if abs(coeff) == 1 else f"{abs(coeff)}*{mono}"
        parts.append(("-" if coeff < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ----------------------- Dispatch -----------------------

def mu_prefix(req: MomentRequest, method: MomentMethod) -> List[Fraction]:
    """mu_0..mu_n_max by one named route."""
    n_range = range(req.n_max + 1)
    if method is MomentMethod.GF:
        return mu_gf_series(req)
    if method is MomentMethod.CFRAC:
        return mu_cfrac(req)
    if method is MomentMethod.CLOSED:
        return [mu_closed(n, req.h, req.k) for n in n_range]
    if method is MomentMethod.RECUR:
        return mu_recur(req)
    if method is MomentMethod.LAGRANGE:
        return [mu_lagrange(n, req.h, req.k) for n in n_range]
    return [mu_paths(n, req.h, req.k) for n in n_range]


def all_routes(req: MomentRequest, include_paths: bool = True) -> Dict[MomentMethod, List[Fraction]]:
    """Every route's prefix; the path oracle is skipped past its bound."""
    out: Dict[MomentMethod, List[Fraction]] = {}
    for method in MomentMethod:
        if method is MomentMethod.PATHS and (not include_paths or req.n_max > PATH_ENUMERATION_BOUND):
            continue
        out[method] = mu_prefix(req, method)
    return out
