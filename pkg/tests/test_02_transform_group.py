# tests/test_02_transform_group.py
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkin.exact_series import TruncatedSeries
from motzkin.transform_group import (
    Route,
    SequenceError,
    UnitSequence,
    apply_pipeline,
    binomial,
    binomial_interp,
    bullet,
    epsilon,
    eta,
    gamma,
    geometric,
    identity,
    invert,
    invert_interp,
    lambda_embed,
    lambda_extract,
    left_multiply,
    parse_pipeline,
    right_multiply,
)
from tests.strategies import rational_unit_sequences, rationals, small_ints, unit_sequences

MOTZKIN = UnitSequence.of([1, 1, 2, 4, 9, 21])

# The group laws run at the full default order.
group_settings = settings(max_examples=100, deadline=None)


# --- UnitSequence & Embedding ---

def test_unit_sequence_requires_leading_one():
    with pytest.raises(SequenceError, match="a0 must be 1"):
        UnitSequence.of([2, 1])
    with pytest.raises(SequenceError):
        UnitSequence.of([])
    with pytest.raises(SequenceError):
        UnitSequence.of(["1", "x"])


def test_unit_sequence_accepts_rational_literals():
    seq = UnitSequence.of(["1", "-1/2", 3])
    assert list(seq) == [1, Fraction(-1, 2), 3]
    assert str(seq) == "1,-1/2,3"


def test_lambda_round_trip_and_rejection():
    assert lambda_extract(lambda_embed(MOTZKIN)) == MOTZKIN
    with pytest.raises(SequenceError, match="not in"):
        lambda_extract(TruncatedSeries.from_coeffs([0, 2, 1]))


def test_length_mismatch_is_an_error():
    with pytest.raises(SequenceError, match="length mismatch"):
        bullet(geometric(1, 4), geometric(1, 5))


# --- Worked Examples ---

def test_invert_of_period_four_sequence():
    assert list(invert(UnitSequence.of([1, 0, -1, 0, 1, 0]))) == [1, 1, 0, -1, -1, 0]


def test_binomial_of_motzkin_is_catalan():
    assert list(binomial(MOTZKIN)) == [1, 2, 5, 14, 42, 132]


def test_geometric_product_adds_parameters():
    assert bullet(geometric(1, 8), geometric(1, 8)) == geometric(2, 8)


def test_eta_of_fibonacci_like_sequence_gives_signed_motzkin():
    assert list(eta(UnitSequence.of([1, 1, 0, -1, -1, 0]))) == [1, -1, 2, -4, 9, -21]


def test_identity_is_x_of_zero():
    assert list(identity(4)) == [1, 0, 0, 0]


def test_invert_has_no_exponential_route():
    with pytest.raises(SequenceError):
        invert_interp(MOTZKIN, 1, Route.EXPONENTIAL)


# --- Group Laws ---

@group_settings
@given(unit_sequences(), unit_sequences(), unit_sequences())
def test_associativity(a, b, c):
    assert bullet(bullet(a, b), c) == bullet(a, bullet(b, c))


@group_settings
@given(unit_sequences())
def test_identity_and_inverse(a):
    e = identity(len(a))
    assert bullet(a, e) == a == bullet(e, a)
    assert bullet(a, eta(a)) == e == bullet(eta(a), a)


@group_settings
@given(unit_sequences(), unit_sequences())
def test_eta_and_epsilon_homomorphisms(a, b):
    assert eta(bullet(a, b)) == bullet(eta(b), eta(a))
    assert epsilon(bullet(a, b)) == bullet(epsilon(a), epsilon(b))
    assert eta(eta(a)) == a
    assert epsilon(epsilon(a)) == a
    assert eta(epsilon(a)) == epsilon(eta(a))


@group_settings
@given(unit_sequences(), unit_sequences(), unit_sequences())
def test_left_and_right_multiplication(a, b, c):
    assert left_multiply(a, right_multiply(b, c)) == right_multiply(b, left_multiply(a, c))
    # eta conjugates left multiplication by A into right multiplication by A^-1
    assert eta(left_multiply(a, c)) == right_multiply(eta(a), eta(c))


@group_settings
@given(small_ints, small_ints)
def test_geometric_sequences(x, y):
    n = 32
    assert bullet(geometric(x, n), geometric(y, n)) == geometric(x + y, n)
    assert eta(geometric(x, n)) == geometric(-x, n) == epsilon(geometric(x, n))


@group_settings
@given(unit_sequences(), small_ints, small_ints)
def test_dual_implementations_agree(a, x, y):
    assert invert_interp(a, x, Route.FORMULA) == invert_interp(a, x, Route.GROUP)
    assert binomial_interp(a, y, Route.FORMULA) == binomial_interp(a, y, Route.GROUP)
    assert binomial_interp(a, y, Route.FORMULA) == binomial_interp(a, y, Route.EXPONENTIAL)


@group_settings
@given(unit_sequences(), small_ints, small_ints)
def test_interpolated_operators(a, x, y):
    ix, ly = invert_interp(a, x), binomial_interp(a, y)
    assert invert_interp(ix, -x) == a
    assert binomial_interp(ly, -y) == a
    assert invert_interp(ix, y) == invert_interp(a, x + y)
    assert binomial_interp(ly, x) == binomial_interp(a, x + y)
    assert invert_interp(ly, x) == binomial_interp(ix, y)
    assert invert_interp(epsilon(a), x) == epsilon(invert_interp(a, -x))
    assert binomial_interp(epsilon(a), y) == epsilon(binomial_interp(a, -y))
    assert invert_interp(eta(a), x) == eta(binomial_interp(a, -x))
    assert eta(invert_interp(a, x)) == binomial_interp(eta(a), -x)


@group_settings
@given(unit_sequences(), small_ints)
def test_gamma_conjugates_invert_into_binomial(a, x):
    assert gamma(gamma(a)) == a
    assert gamma(invert_interp(gamma(a), x)) == binomial_interp(a, x)
    assert gamma(binomial_interp(gamma(a), x)) == invert_interp(a, x)


@settings(deadline=None)
@given(rational_unit_sequences(), rationals)
def test_rational_parameters(a, x):
    assert invert_interp(a, x) == invert_interp(a, x, Route.GROUP)
    assert binomial_interp(a, x, Route.EXPONENTIAL) == binomial_interp(a, x, Route.GROUP)


# --- Pipelines ---

def test_pipeline_stages_apply_left_to_right():
    stages = parse_pipeline("invert:1|binomial:-1/2|eta")
    assert [s.name for s in stages] == ["invert(1)", "binomial(-1/2)", "eta"]
    seq = UnitSequence.of([1, 0, -1, 0, 1, 0])
    expected = eta(binomial_interp(invert(seq), Fraction(-1, 2)))
    assert apply_pipeline(seq, stages) == expected


def test_pipeline_inverse_stages_cancel():
    assert apply_pipeline(MOTZKIN, parse_pipeline("invert:2|binomial:1|binomial:-1|invert:-2")) == MOTZKIN
    assert apply_pipeline(MOTZKIN, parse_pipeline(" eta | epsilon | gamma ")) == MOTZKIN


@pytest.mark.parametrize("text", ["", "|", "revert", "invert", "eta:1", "binomial:1.5"])
def test_pipeline_rejects_bad_stages(text):
    with pytest.raises(SequenceError):
        parse_pipeline(text)


@given(st.sampled_from(["invert:1", "binomial:1", "eta", "epsilon", "gamma"]))
def test_pipeline_preserves_length(stage):
    assert len(apply_pipeline(MOTZKIN, parse_pipeline(stage))) == len(MOTZKIN)
