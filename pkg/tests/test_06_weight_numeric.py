# tests/test_06_weight_numeric.py
import io
import math

import pytest

from motzkin import weight_numeric
from motzkin.config_motzkin import WEIGHT_GRID
from motzkin.moments import MomentRequest, mu_recur
from motzkin.weight_numeric import (
    QuadratureError,
    WeightError,
    WeightSpec,
    omega,
    quad_moment,
    weight_csv,
    write_weight_csv,
)


# --- WeightSpec ---

@pytest.mark.parametrize("k", [0.0, -1.0])
def test_weight_needs_positive_k(k):
    with pytest.raises(WeightError, match="k > 0"):
        WeightSpec(0.0, k)


def test_weight_needs_finite_parameters():
    with pytest.raises(WeightError):
        WeightSpec(math.nan, 1.0)
    with pytest.raises(WeightError):
        WeightSpec(0.0, math.inf)


def test_support():
    assert WeightSpec(1.0, 4.0).support == (-3.0, 5.0)
    assert WeightSpec(0.0, 1.0).radius == 2.0


# --- Weight Function ---

def test_omega_vanishes_off_support():
    spec = WeightSpec(1.0, 4.0)
    for t in (-3.0, 5.0, -10.0, 7.5):
        assert omega(t, spec) == 0.0


def test_omega_peak_and_symmetry():
    spec = WeightSpec(2.0, 2.0)
    assert omega(2.0, spec) == pytest.approx(1.0 / (math.pi * math.sqrt(2.0)))
    for s in (0.3, 1.0, 2.5):
        assert omega(2.0 + s, spec) == pytest.approx(omega(2.0 - s, spec), abs=1e-14)


@pytest.mark.parametrize("h, k", WEIGHT_GRID)
def test_semicircle_scaling(h, k):
    spec, unit = WeightSpec(h, k), WeightSpec(0.0, 1.0)
    root = math.sqrt(k)
    for i in range(-15, 16):
        s = spec.radius * i / 16
        assert omega(h + s, spec) == pytest.approx(omega(s / root, unit) / root, abs=1e-12)


# --- Quadrature ---

@pytest.mark.parametrize("h, k", WEIGHT_GRID)
def test_weight_is_normalized(h, k):
    assert quad_moment(0, WeightSpec(h, k)) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("h, k", WEIGHT_GRID)
def test_quadrature_matches_exact_moments(h, k):
    spec = WeightSpec(h, k)
    exact = mu_recur(MomentRequest(h, k, 12))
    for n in range(13):
        target = float(exact[n])
        assert abs(quad_moment(n, spec) - target) / max(1.0, abs(target)) <= 1e-8, n


def test_quadrature_argument_checks():
    spec = WeightSpec(0.0, 1.0)
    with pytest.raises(WeightError):
        quad_moment(-1, spec)
    with pytest.raises(WeightError, match="rel_tol"):
        quad_moment(2, spec, rel_tol=0.5)
    with pytest.raises(WeightError, match="rel_tol"):
        quad_moment(2, spec, rel_tol=1e-20)


def test_quadrature_failure_carries_estimate(monkeypatch):
    def unconverged(*args, **kwargs):
        return 0.25, 1e-3, {}, "the maximum number of subdivisions has been achieved"

    monkeypatch.setattr(weight_numeric.integrate, "quad", unconverged)
    with pytest.raises(QuadratureError) as info:
        quad_moment(2, WeightSpec(0.0, 1.0))
    assert info.value.estimate == 0.25
    assert info.value.error_bound == 1e-3
    assert isinstance(info.value, WeightError)


def test_quadrature_rejects_loose_error_bound(monkeypatch):
    monkeypatch.setattr(weight_numeric.integrate, "quad", lambda *a, **kw: (1.0, 1e-3, {}))
    with pytest.raises(QuadratureError, match="missed tolerance"):
        quad_moment(0, WeightSpec(0.0, 1.0))


# --- CSV ---

def test_weight_csv_rows():
    rows = weight_csv(WeightSpec(0.0, 1.0), 5)
    assert [t for t, _ in rows] == pytest.approx([-2.0, -1.0, 0.0, 1.0, 2.0])
    assert rows[0][1] == 0.0 and rows[-1][1] == 0.0
    assert rows[2][1] == pytest.approx(1.0 / math.pi)
    with pytest.raises(WeightError):
        weight_csv(WeightSpec(0.0, 1.0), 1)


def test_write_weight_csv():
    buffer = io.StringIO()
    write_weight_csv([(-2.0, 0.0), (0.0, 1.0 / math.pi)], buffer)
    lines = buffer.getvalue().splitlines()
    assert lines[0] == "t,omega"
    assert lines[1] == "-2,0"
    assert lines[2] == "0,0.318309886184"
