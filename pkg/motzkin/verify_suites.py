# motzkin/verify_suites.py
"""
Property suites behind ``python -m motzkin verify``.

Each suite walks a fixed, lexicographically ordered grid (or a seeded random
sample for the group laws), tallies every identity per section and logs
PASSED/FAILED lines. Output is deterministic for a given suite and grid.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List

from motzkin.config_motzkin import (
    CATALAN_CORE_M,
    CATALAN_K_FORM_M,
    DEFAULT_ORDER,
    FULL_HK_GRID,
    FULL_MOMENT_N,
    PATH_ORACLE_N,
    SMALL_HK_GRID,
    SMALL_MOMENT_N,
    WEIGHT_GRID,
)
from motzkin.moments import (
    MomentMethod,
    MomentRequest,
    all_routes,
    catalan,
    mu_multinomial,
    mu_recur,
    mu_symbolic,
    path_census,
)
from motzkin.orthogonal import (
    MomentFunctional,
    Pairing,
    apply_functional,
    catalan_identity,
    catalan_identity_core,
    delta_relation_check,
    dickson_e,
    orthogonal_family,
    p_coefficient,
    p_explicit,
    printed_double_sum,
)
from motzkin.recurrence import (
    RecParams,
    binet_terms,
    divides,
    eta_transport_check,
    fibonacci,
    map_binomial,
    map_combined,
    map_invert,
    p_poly,
    rational_sqrt,
    w_from_lambda,
    w_generate,
)
from motzkin.transform_group import (
    Route,
    UnitSequence,
    binomial_interp,
    bullet,
    epsilon,
    eta,
    gamma,
    geometric,
    identity,
    invert_interp,
    left_multiply,
    right_multiply,
)
from motzkin.weight_numeric import WeightSpec, omega, quad_moment

logger = logging.getLogger(__name__)


class Suite(Enum):
    GROUP = "group"
    RECURRENCE = "recurrence"
    MOMENTS = "moments"
    ORTHOGONALITY = "orthogonality"
    CATALAN = "catalan"
    WEIGHT = "weight"


class Grid(Enum):
    SMALL = "small"
    FULL = "full"


# ----------------------- Report -----------------------

@dataclass(slots=True)
class SuiteReport:
    """Pass/fail tallies per section, in insertion order."""
    suite: str
    sections: Dict[str, List[int]] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    def check(self, section: str, label: str, ok: bool) -> bool:
        tally = self.sections.setdefault(section, [0, 0])
        if ok:
            tally[0] += 1
        else:
            tally[1] += 1
            self.failures.append(f"{section}: {label}")
            logger.error("%s / %s: FAILED", section, label)
        return ok

    @property
    def passed(self) -> int:
        return sum(p for p, _ in self.sections.values())

    @property
    def failed(self) -> int:
        return sum(f for _, f in self.sections.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self) -> List[str]:
        out = []
        for name, (p, f) in self.sections.items():
            out.append(f"{name}: {p} pass" + (f", {f} fail" if f else ""))
        for failure in self.failures:
            out.append(f"FAILED {failure}")
        out.append(f"{self.suite}: {self.passed} pass, {self.failed} fail")
        return out


# ----------------------- Group Laws -----------------------

def _random_sequence(rng: random.Random, n: int) -> UnitSequence:
    return UnitSequence((1,) + tuple(rng.randint(-3, 3) for _ in range(n - 1)))


def run_group_suite(grid: Grid) -> SuiteReport:
    report = SuiteReport(Suite.GROUP.value)
    n = DEFAULT_ORDER
    instances = 100 if grid is Grid.FULL else 10
    rng = random.Random(1729)
    for idx in range(instances):
        a, b, c = (_random_sequence(rng, n) for _ in range(3))
        x, y = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        label = f"instance {idx} (x={x}, y={y})"
        ea, eb = eta(a), eta(b)
        ab = bullet(a, b)
        ix = lambda s, v=x: invert_interp(s, v)
        ly = lambda s, v=y: binomial_interp(s, v)

        report.check("identity element", label, bullet(a, identity(n)) == a == bullet(identity(n), a))
        report.check("associativity", label, bullet(ab, c) == bullet(a, bullet(b, c)))
        report.check("group inverse", label, bullet(a, ea) == identity(n) == bullet(ea, a))
        report.check("eta anti-isomorphism", label, eta(ab) == bullet(eb, ea))
        report.check("epsilon isomorphism", label, epsilon(ab) == bullet(epsilon(a), epsilon(b)))
        report.check("involutions", label, eta(ea) == a and epsilon(epsilon(a)) == a)
        report.check("eta epsilon commute", label, eta(epsilon(a)) == epsilon(ea))
        report.check("left right commute", label,
                     left_multiply(a, right_multiply(b, c)) == right_multiply(b, left_multiply(a, c)))
        report.check("multiplication vs eta", label,
                     left_multiply(a, eb) == eta(left_multiply(b, ea))
                     and right_multiply(a, eb) == eta(right_multiply(b, ea)))
        report.check("geometric laws", label,
                     bullet(geometric(x, n), geometric(y, n)) == geometric(x + y, n)
                     and eta(geometric(x, n)) == geometric(-x, n) == epsilon(geometric(x, n)))
        report.check("invert routes agree", label, ix(a) == invert_interp(a, x, Route.GROUP))
        report.check("binomial routes agree", label,
                     ly(a) == binomial_interp(a, y, Route.GROUP) == binomial_interp(a, y, Route.EXPONENTIAL))
        report.check("invert inverse", label, invert_interp(ix(a), -x) == a)
        report.check("binomial inverse", label, binomial_interp(ly(a), -y) == a)
        report.check("invert additive", label, invert_interp(ix(a), y) == invert_interp(a, x + y))
        report.check("binomial additive", label, binomial_interp(ly(a), x) == binomial_interp(a, x + y))
        report.check("invert epsilon", label, ix(epsilon(a)) == epsilon(invert_interp(a, -x)))
        report.check("binomial epsilon", label, ly(epsilon(a)) == epsilon(binomial_interp(a, -y)))
        report.check("invert binomial commute", label, ix(ly(a)) == ly(ix(a)))
        report.check("invert eta", label, ix(ea) == eta(binomial_interp(a, -x)))
        report.check("eta invert", label, eta(ix(a)) == binomial_interp(ea, -x))
        report.check("gamma conjugation", label,
                     gamma(gamma(a)) == a
                     and gamma(ix(gamma(a))) == binomial_interp(a, x)
                     and gamma(ly(gamma(a))) == invert_interp(a, y))
    return report


# ----------------------- Recurrences -----------------------

def run_recurrence_suite(grid: Grid) -> SuiteReport:
    report = SuiteReport(Suite.RECURRENCE.value)
    span = range(-3, 4) if grid is Grid.FULL else range(-2, 3)
    shifts = range(-2, 3) if grid is Grid.FULL else range(-1, 2)
    n_terms = 30 if grid is Grid.FULL else 16
    for b in span:
        for h in span:
            for k in span:
                p = RecParams(b, h, k)
                w = w_generate(p, n_terms)
                label = str(p)
                report.check("generating function", label, w == w_from_lambda(p, n_terms))
                for x in shifts:
                    inv = invert_interp(w, x)
                    report.check("invert transport", f"{label}, x={x}", inv == w_generate(map_invert(p, x), n_terms))
                    report.check("binomial transport", f"{label}, y={x}",
                                 binomial_interp(w, x) == w_generate(map_binomial(p, x), n_terms))
                    report.check("eta transport", f"{label}, x={x}", eta_transport_check(p, x, n_terms))
                    for y in shifts:
                        combined = w_generate(map_combined(p, x, y), n_terms)
                        report.check("combined transport", f"{label}, x={x}, y={y}",
                                     combined == binomial_interp(inv, y)
                                     and map_combined(p, x, y) == map_binomial(map_invert(p, x), y)
                                     == map_invert(map_binomial(p, y), x))
    n_max = 40 if grid is Grid.FULL else 20
    for h in range(-2, 3):
        for k in range(-2, 3):
            for n in range(1, n_max + 1):
                for m in range(1, n + 1):
                    if n % m == 0:
                        report.check("divisibility", f"m={m}, n={n}, h={h}, k={k}", divides(m, n, h, k))
    for h in span:
        for k in span:
            root = rational_sqrt(h * h - 4 * k)
            if root:
                report.check("binet form", f"h={h}, k={k}",
                             list(w_generate(fibonacci(h, k), n_terms)) == binet_terms(h, k, n_terms))
    return report


# ----------------------- Moments -----------------------

def run_moments_suite(grid: Grid) -> SuiteReport:
    report = SuiteReport(Suite.MOMENTS.value)
    hk_grid = FULL_HK_GRID if grid is Grid.FULL else SMALL_HK_GRID
    n_max = FULL_MOMENT_N if grid is Grid.FULL else SMALL_MOMENT_N
    path_n = PATH_ORACLE_N if grid is Grid.FULL else 10
    bridge_terms = 20
    for h, k in hk_grid:
        label = f"h={h}, k={k}"
        routes = all_routes(MomentRequest(h, k, n_max), include_paths=False)
        reference = routes[MomentMethod.RECUR]
        report.check("five-route agreement", label, all(v == reference for v in routes.values()))
        report.check("multinomial form", label,
                     all(mu_multinomial(n, h, k) == reference[n] for n in range(n_max + 1)))
        oracle = all_routes(MomentRequest(h, k, path_n))[MomentMethod.PATHS]
        report.check("path oracle", label, oracle == reference[: path_n + 1])
        prefix = UnitSequence(tuple(mu_recur(MomentRequest(h, k, bridge_terms - 1))))
        for y in range(-2, 3):
            shifted = mu_recur(MomentRequest(h + y, k, bridge_terms - 1))
            report.check("shift covariance", f"{label}, y={y}", list(binomial_interp(prefix, y)) == shifted)
        revert = eta(w_generate(fibonacci(h, k), bridge_terms))
        report.check("revert bridge", label, list(revert) == mu_recur(MomentRequest(-h, k, bridge_terms - 1)))
        for x in range(-2, 3):
            lhs = invert_interp(prefix, x)
            rhs = eta(binomial_interp(w_generate(fibonacci(-h, k), bridge_terms), -x))
            report.check("invert of moments", f"{label}, x={x}", lhs == rhs)
    for (h, k) in hk_grid:
        if h == 0:
            mu = mu_recur(MomentRequest(0, k, n_max))
            report.check("odd vanishing", f"k={k}", all(mu[n] == 0 for n in range(1, n_max + 1, 2)))
            report.check("catalan moments", f"k={k}",
                         all(mu[2 * m] == k ** m * catalan(m) for m in range(n_max // 2 + 1)))
    for n in range(path_n + 1):
        symbolic = mu_symbolic(n)
        census = path_census(n)
        report.check("path census", f"n={n}",
                     symbolic == census and sum(symbolic.values()) == mu_recur(MomentRequest(1, 1, n))[n])
    return report


# ----------------------- Orthogonality -----------------------

def run_orthogonality_suite(grid: Grid) -> SuiteReport:
    report = SuiteReport(Suite.ORTHOGONALITY.value)
    hk_grid = FULL_HK_GRID if grid is Grid.FULL else SMALL_HK_GRID
    top = 12
    for h, k in hk_grid:
        label = f"h={h}, k={k}"
        functional = MomentFunctional(h, k)
        family = [orthogonal_family(n, h, k) for n in range(top + 1)]
        for n in range(top + 1):
            report.check("delta relation", f"{label}, n={n}", delta_relation_check(n, h, k).passed)
            report.check("norms", f"{label}, n={n}",
                         apply_functional(functional, family[n] * family[n]) == Fraction(k) ** n)
            report.check("printed double sum", f"{label}, n={n}",
                         printed_double_sum(n, h, k) == (1 if n == 0 else 0))
            report.check("family conventions", f"{label}, n={n}", family[n] == p_explicit(n, -h, k))
            for m in range(n):
                report.check("orthogonality", f"{label}, m={m}, n={n}",
                             apply_functional(functional, family[m] * family[n]) == 0)
        for n in range(21):
            report.check("explicit form", f"{label}, n={n}", p_explicit(n, h, k) == p_poly(h, k, n))
        for n in range(top + 1):
            poly = p_explicit(n, h, k)
            report.check("coefficient formula", f"{label}, n={n}",
                         all(p_coefficient(n, j, h, k) == poly.coefficient(j) for j in range(n + 1)))
        if h != 0:
            report.check("shifted pairing fails", label,
                         not delta_relation_check(1, h, k, Pairing.SHIFTED).passed)
    for k in sorted({k for _, k in hk_grid}):
        zero = MomentFunctional(0, k)
        for n in range(top + 1):
            report.check("dickson", f"k={k}, n={n}", dickson_e(n, k) == p_explicit(n, 0, k))
        for m in range(top // 2 + 1):
            report.check("dickson catalan relation", f"k={k}, m={m}",
                         apply_functional(zero, dickson_e(2 * m, k)) == (1 if m == 0 else 0))
    return report


# ----------------------- Catalan -----------------------

def run_catalan_suite(grid: Grid) -> SuiteReport:
    report = SuiteReport(Suite.CATALAN.value)
    for m in range(CATALAN_CORE_M + 1):
        report.check(f"m=0..{CATALAN_CORE_M}", f"m={m}", catalan_identity_core(m) == (1 if m == 0 else 0))
    k_values = [k for k in range(-3, 4) if k != 0]
    for k in k_values:
        for m in range(CATALAN_K_FORM_M + 1):
            report.check(f"k-form m=0..{CATALAN_K_FORM_M}", f"k={k}, m={m}",
                         catalan_identity(m, k) == (1 if m == 0 else 0))
    m_top = 12 if grid is Grid.FULL else 6
    for k in k_values:
        mu = mu_recur(MomentRequest(0, k, 2 * m_top))
        for m in range(m_top + 1):
            report.check("moments at h=0", f"k={k}, m={m}", mu[2 * m] / Fraction(k) ** m == catalan(m))
    return report


# ----------------------- Weight -----------------------

def run_weight_suite(grid: Grid) -> SuiteReport:
    report = SuiteReport(Suite.WEIGHT.value)
    top = 12
    for h, k in WEIGHT_GRID:
        spec = WeightSpec(float(h), float(k))
        exact = mu_recur(MomentRequest(h, k, top))
        label = f"h={h}, k={k}"
        report.check("normalization", label, abs(quad_moment(0, spec) - 1.0) <= 1e-10)
        for n in range(top + 1):
            value = quad_moment(n, spec)
            rel = abs(value - float(exact[n])) / max(1.0, abs(float(exact[n])))
            report.check("quadrature vs exact", f"{label}, n={n}", rel <= 1e-8)
        offsets = [spec.radius * i / 16 for i in range(16)]
        report.check("symmetry", label,
                     all(math.isclose(omega(h + s, spec), omega(h - s, spec), abs_tol=1e-12) for s in offsets))
        unit = WeightSpec(0.0, 1.0)
        root = math.sqrt(k)
        report.check("semicircle scaling", label,
                     all(math.isclose(omega(h + s, spec), omega(s / root, unit) / root, abs_tol=1e-12)
                         for s in offsets))
    return report


SUITES: Dict[Suite, Callable[[Grid], SuiteReport]] = {
    Suite.GROUP: run_group_suite,
    Suite.RECURRENCE: run_recurrence_suite,
    Suite.MOMENTS: run_moments_suite,
    Suite.ORTHOGONALITY: run_orthogonality_suite,
    Suite.CATALAN: run_catalan_suite,
    Suite.WEIGHT: run_weight_suite,
}


def run_suite(suite: Suite, grid: Grid = Grid.SMALL) -> SuiteReport:
    logger.info("--- Starting %s suite (%s grid) ---", suite.value, grid.value)
    report = SUITES[suite](grid)
    logger.info("%s suite: %s (%d pass, %d fail)", suite.value,
                "PASSED" if report.ok else "FAILED", report.passed, report.failed)
    return report
