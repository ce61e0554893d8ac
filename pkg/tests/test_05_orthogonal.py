# tests/test_05_orthogonal.py
from fractions import Fraction

import pytest

from motzkin.config_motzkin import SMALL_HK_GRID
from motzkin.moments import MomentError
from motzkin.orthogonal import (
    DeltaCheck,
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
from motzkin.recurrence import Polynomial, p_poly

TOP = 12


# --- Moment Functional ---

def test_functional_rejects_k_zero():
    with pytest.raises(MomentError, match="k = 0"):
        MomentFunctional(1, 0)


def test_functional_moments_and_cache():
    v = MomentFunctional(1, 1)
    assert v.moment(4) == 9
    assert len(v.moment_cache) == 5
    v.ensure(2)
    assert len(v.moment_cache) == 5
    assert apply_functional(v, Polynomial.of([1, 1, 1])) == 1 + 1 + 2
    assert apply_functional(v, Polynomial()) == 0


# --- Orthogonality ---

@pytest.mark.parametrize("h, k", SMALL_HK_GRID)
def test_orthogonality(h, k):
    v = MomentFunctional(h, k)
    family = [orthogonal_family(n, h, k) for n in range(TOP + 1)]
    for n in range(TOP + 1):
        assert apply_functional(v, family[n]) == (1 if n == 0 else 0)
        assert apply_functional(v, family[n] * family[n]) == Fraction(k) ** n
        for m in range(n):
            assert apply_functional(v, family[m] * family[n]) == 0, (m, n)


@pytest.mark.parametrize("h, k", SMALL_HK_GRID)
def test_delta_relation_pairings(h, k):
    for n in range(TOP + 1):
        check = delta_relation_check(n, h, k)
        assert check.passed and check.residual == 0
        # the (x + h) family is orthogonal under mu(-h, k)
        shifted = apply_functional(MomentFunctional(-h, k), p_explicit(n, h, k))
        assert shifted == (1 if n == 0 else 0)


def test_shifted_pairing_reports_residual():
    check = delta_relation_check(1, 2, 1, Pairing.SHIFTED)
    assert not check
    assert check.value == 4 and check.expected == 0 and check.residual == 4
    assert delta_relation_check(1, 0, 1, Pairing.SHIFTED).passed


def test_delta_check_truthiness():
    assert DeltaCheck(True, Fraction(0), Fraction(0))
    assert not DeltaCheck(False, Fraction(1), Fraction(0))


def test_family_rejects_bad_input():
    with pytest.raises(MomentError):
        orthogonal_family(2, 1, 0)
    with pytest.raises(ValueError):
        orthogonal_family(-1, 1, 1)
    with pytest.raises(ValueError):
        p_explicit(-1, 1, 1)


# --- Explicit Forms ---

@pytest.mark.parametrize("h, k", SMALL_HK_GRID)
def test_explicit_form_matches_recurrence(h, k):
    for n in range(21):
        assert p_explicit(n, h, k) == p_poly(h, k, n), n
        assert orthogonal_family(n, h, k) == p_explicit(n, -h, k), n


@pytest.mark.parametrize("h, k", [(1, 1), (-2, 3), (Fraction(1, 2), Fraction(-3, 4))])
def test_coefficient_formula(h, k):
    for n in range(TOP + 1):
        poly = p_explicit(n, h, k)
        assert [p_coefficient(n, j, h, k) for j in range(n + 1)] == [poly.coefficient(j) for j in range(n + 1)]
        assert p_coefficient(n, n + 1, h, k) == 0


def test_dickson_polynomials():
    assert dickson_e(0, 3) == Polynomial.constant(1)
    assert dickson_e(2, 3) == Polynomial.of([-3, 0, 1])
    assert dickson_e(4, 1) == Polynomial.of([1, 0, -3, 0, 1])
    for k in (-2, -1, 1, 2):
        v = MomentFunctional(0, k)
        for n in range(TOP + 1):
            assert dickson_e(n, k) == p_explicit(n, 0, k)
            assert apply_functional(v, dickson_e(n, k)) == (1 if n == 0 else 0)


@pytest.mark.parametrize("h, k", SMALL_HK_GRID)
def test_printed_double_sum_is_delta(h, k):
    assert [printed_double_sum(n, h, k) for n in range(TOP + 1)] == [1] + [0] * TOP


# --- Catalan Identity ---

def test_catalan_identity_core():
    assert [catalan_identity_core(m) for m in range(101)] == [1] + [0] * 100


@pytest.mark.parametrize("k", [-3, -2, -1, 1, 2, 3, Fraction(1, 2)])
def test_catalan_identity_k_form(k):
    assert [catalan_identity(m, k) for m in range(31)] == [1] + [0] * 30


def test_catalan_identity_rejects_negative_m():
    with pytest.raises(ValueError):
        catalan_identity(-1, 1)
    with pytest.raises(ValueError):
        catalan_identity_core(-1)
