# motzkin/weight_numeric.py
"""
Floating-point side of the moment functional for k > 0: the weight

    omega(t) = sqrt(4k - (t - h)^2) / (2k pi)   on (h - 2 sqrt(k), h + 2 sqrt(k)),

adaptive quadrature of mu_n = ∫ t^n omega(t) dt, and CSV sample tables.
Nothing computed here flows back into the exact modules.
"""

from __future__ import annotations

import csv
import logging
import math
import warnings
from dataclasses import dataclass
from typing import List, Sequence, TextIO, Tuple

import numpy as np
from scipy import integrate

from motzkin.config_motzkin import (
    CSV_HEADER,
    CSV_SIGNIFICANT_DIGITS,
    QUAD_REL_TOL,
    QUAD_REL_TOL_RANGE,
    QUAD_SUBDIVISION_LIMIT,
)

logger = logging.getLogger(__name__)


class WeightError(ValueError):
    """Raised for weight requests outside k > 0 or with bad numeric settings."""


class QuadratureError(WeightError):
    """Raised when quadrature misses its tolerance; carries the best estimate."""

    def __init__(self, message: str, estimate: float, error_bound: float) -> None:
        super().__init__(f"{message} (estimate={estimate!r}, error bound={error_bound!r})")
        self.estimate = estimate
        self.error_bound = error_bound


# ----------------------- Data Types -----------------------

@dataclass(frozen=True, slots=True)
class WeightSpec:
    """Parameters of the weight; the support is derived from them."""
    h: float
    k: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.h) and math.isfinite(self.k)):
            raise WeightError("h and k must be finite")
        if self.k <= 0:
            raise WeightError(f"no absolutely continuous weight in scope for k={self.k} (need k > 0)")

    @property
    def radius(self) -> float:
        return 2.0 * math.sqrt(self.k)

    @property
    def support(self) -> Tuple[float, float]:
        return self.h - self.radius, self.h + self.radius


# ----------------------- Weight & Quadrature -----------------------

def omega(t: float, spec: WeightSpec) -> float:
    """The weight at t; 0 off the open support, continuous at t = h."""
    lo, hi = spec.support
    if not lo < t < hi:
        return 0.0
    return math.sqrt(max(0.0, 4.0 * spec.k - (t - spec.h) ** 2)) / (2.0 * spec.k * math.pi)


def quad_moment(n: int, spec: WeightSpec, rel_tol: float = QUAD_REL_TOL) -> float:
    """
    mu_n as ∫ t^n omega(t) dt. With t = h + 2 sqrt(k) sin(theta) the integrand
    becomes (h + 2 sqrt(k) sin(theta))^n 2 cos^2(theta) / pi on [-pi/2, pi/2],
    which removes the square-root endpoints. The two halves are folded onto
    [0, pi/2] so odd moments at h = 0 cancel exactly.
    """
    if n < 0:
        raise WeightError("moment index must be non-negative")
    lo_tol, hi_tol = QUAD_REL_TOL_RANGE
    if not lo_tol < rel_tol < hi_tol:
        raise WeightError(f"rel_tol {rel_tol} outside ({lo_tol}, {hi_tol})")
    h, radius = spec.h, spec.radius

    def integrand(theta: float) -> float:
        c, s = math.cos(theta), radius * math.sin(theta)
        return ((h + s) ** n + (h - s) ** n) * 2.0 * c * c / math.pi

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        result = integrate.quad(integrand, 0.0, math.pi / 2,
                                epsabs=rel_tol, epsrel=rel_tol,
                                limit=QUAD_SUBDIVISION_LIMIT, full_output=1)
    value, abserr = result[0], result[1]
    if len(result) > 3:
        raise QuadratureError(f"quadrature of mu_{n} did not converge: {result[3]}", value, abserr)
    if abserr > max(rel_tol * abs(value), rel_tol):
        raise QuadratureError(f"quadrature of mu_{n} missed tolerance {rel_tol}", value, abserr)
    logger.debug("quad mu_%d(h=%s, k=%s) = %r +/- %.3g", n, spec.h, spec.k, value, abserr)
    return value


# ----------------------- CSV -----------------------

def weight_csv(spec: WeightSpec, samples: int) -> List[Tuple[float, float]]:
    """Evenly spaced (t, omega(t)) rows over the closed support."""
    if samples < 2:
        raise WeightError("need at least 2 samples")
    lo, hi = spec.support
    return [(float(t), omega(float(t), spec)) for t in np.linspace(lo, hi, samples)]


def _fmt(value: float) -> str:
    return f"{value:.{CSV_SIGNIFICANT_DIGITS}g}"


def write_weight_csv(rows: Sequence[Tuple[float, float]], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for t, w in rows:
        writer.writerow([_fmt(t), _fmt(w)])
