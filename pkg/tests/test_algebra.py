from fractions import Fraction as F

import pytest
from hypothesis import given

from fuzzysim.algebra import (ONE, ZERO, DegreeError, TNorm, baaz_delta, degree,
                              format_degree, residuum, tnorm)

from .strategies import degrees

KINDS = list(TNorm)


def test_tnorm_examples():
    assert tnorm(TNorm.GOEDEL, F("0.3"), F("0.7")) == F("0.3")
    assert tnorm(TNorm.LUKASIEWICZ, F("0.6"), F("0.8")) == F("0.4")
    assert tnorm(TNorm.PRODUCT, F("0.6"), F("0.8")) == F("0.48")


def test_residuum_examples():
    assert residuum(TNorm.GOEDEL, F("0.7"), F("0.3")) == F("0.3")
    assert residuum(TNorm.LUKASIEWICZ, F("0.7"), F("0.3")) == F("0.6")
    assert residuum(TNorm.PRODUCT, F("0.8"), F("0.4")) == F("0.5")


@pytest.mark.parametrize("kind", KINDS)
@given(a=degrees)
def test_neutral_and_reflexive_residuum(kind, a):
    assert tnorm(kind, ONE, a) == a
    assert tnorm(kind, a, ZERO) == ZERO
    assert residuum(kind, a, a) == ONE


def test_baaz_delta():
    assert baaz_delta(ONE) == ONE
    assert baaz_delta(F("0.999")) == ZERO
    assert baaz_delta(ZERO) == ZERO


@pytest.mark.parametrize("kind", KINDS)
@given(a=degrees, b=degrees, c=degrees)
def test_tnorm_laws(kind, a, b, c):
    t = lambda x, y: tnorm(kind, x, y)  # noqa: E731
    assert t(a, b) == t(b, a)
    assert t(a, t(b, c)) == t(t(a, b), c)
    if a <= b:
        assert t(a, c) <= t(b, c)
    assert ZERO <= t(a, b) <= min(a, b)


@pytest.mark.parametrize("kind", KINDS)
@given(a=degrees, b=degrees, z=degrees)
def test_adjunction(kind, a, b, z):
    assert (tnorm(kind, z, a) <= b) == (z <= residuum(kind, a, b))


@pytest.mark.parametrize("kind", KINDS)
@given(a=degrees, a2=degrees, b=degrees)
def test_residuum_monotonicity(kind, a, a2, b):
    lo, hi = sorted((a, a2))
    assert residuum(kind, hi, b) <= residuum(kind, lo, b)
    assert residuum(kind, b, lo) <= residuum(kind, b, hi)
    assert (residuum(kind, a, b) == ONE) == (a <= b)


@pytest.mark.parametrize("text,value", [
    ("0.7", F(7, 10)), ("7/10", F(7, 10)), ("1", ONE), ("0", ZERO), (" 0.25 ", F(1, 4)),
])
def test_degree_parsing(text, value):
    assert degree(text) == value


@pytest.mark.parametrize("bad", ["1.2", "-0.1", "abc", "1/0", 0.5, True])
def test_degree_rejects(bad):
    with pytest.raises(DegreeError):
        degree(bad)


@given(d=degrees)
def test_format_round_trip(d):
    assert degree(format_degree(d)) == d


def test_format_prefers_decimals():
    assert format_degree(F(9, 20)) == "0.45"
    assert format_degree(F(1, 3)) == "1/3"
    assert format_degree(ONE) == "1"


def test_tnorm_names():
    assert TNorm.parse("Godel") is TNorm.GOEDEL
    assert TNorm.parse("lukasiewicz") is TNorm.LUKASIEWICZ
    with pytest.raises(ValueError):
        TNorm.parse("hamacher")
