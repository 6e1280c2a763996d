from fractions import Fraction

import pytest
from hypothesis import given

from rglat.errors import IndeterminateFormError, PreconditionViolation
from rglat.rank import NEG_INF, POS_INF, Rank, RankInterval, format_fraction, parse_fraction
from strategies import rationals


def test_total_order_with_infinities():
    assert NEG_INF < Rank(Fraction(-10**9)) < Rank(0) < Rank("3/2") < POS_INF
    assert not POS_INF < POS_INF
    assert NEG_INF <= NEG_INF


def test_finite_arithmetic_is_exact():
    assert Rank("1/3") + Rank("1/6") == Rank("1/2")
    assert Rank("1/3") - Rank("1/6") == Rank("1/6")
    assert Rank(1) / 3 == Rank("1/3")


def test_infinite_absorption():
    assert POS_INF + Rank(5) == POS_INF
    assert Rank(5) + NEG_INF == NEG_INF
    assert NEG_INF - Rank(100) == NEG_INF
    assert -POS_INF == NEG_INF
    assert POS_INF / 7 == POS_INF


def test_indeterminate_form_is_an_error():
    with pytest.raises(IndeterminateFormError):
        POS_INF + NEG_INF
    with pytest.raises(IndeterminateFormError):
        POS_INF - POS_INF


def test_fraction_accessor_rejects_infinities():
    assert Rank("7/3").fraction == Fraction(7, 3)
    with pytest.raises(PreconditionViolation):
        POS_INF.fraction


@given(a=rationals(), b=rationals())
def test_addition_matches_fractions(a, b):
    assert (Rank(a) + Rank(b)).fraction == a + b
    assert (Rank(a) - Rank(b)).fraction == a - b


@given(a=rationals())
def test_json_round_trip(a):
    assert Rank.from_json(Rank(a).to_json()) == Rank(a)


def test_json_round_trip_infinities():
    assert Rank.from_json(POS_INF.to_json()) is POS_INF
    assert Rank.from_json(NEG_INF.to_json()) is NEG_INF


def test_fraction_strings_are_explicit():
    assert format_fraction(Fraction(2)) == "2/1"
    assert parse_fraction("2/1") == 2
    assert parse_fraction("2") == 2


def test_rank_interval_validation():
    ri = RankInterval(0, POS_INF)
    assert ri.contains(Rank(10**6))
    assert not ri.is_bounded
    assert RankInterval("0", "2").is_bounded
    with pytest.raises(PreconditionViolation):
        RankInterval(1, 0)
