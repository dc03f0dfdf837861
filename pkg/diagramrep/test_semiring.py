"""Tests for the coefficient semirings."""

import pickle
from fractions import Fraction

import pytest

from .semiring import (
    BOOLEAN,
    INTEGER,
    NATURAL,
    NEG_INF,
    RATIONAL,
    TROPICAL,
    IntegerModRing,
    get_semiring,
    integer_mod,
    semiring_laws_check,
)


@pytest.mark.parametrize(
    "semiring",
    [BOOLEAN, NATURAL, INTEGER, RATIONAL, TROPICAL, integer_mod(2), integer_mod(4), integer_mod(8)],
    ids=lambda s: s.name,
)
def test_laws_hold(semiring):
    report = semiring_laws_check(semiring, samples=500, seed=3)
    assert report.passed, report.violations
    assert report.characteristic_confirmed
    assert report.cases > 0


def test_flags():
    assert BOOLEAN.is_idempotent and TROPICAL.is_idempotent
    assert not INTEGER.is_idempotent
    assert INTEGER.characteristic == 0 and RATIONAL.characteristic == 0
    assert integer_mod(8).characteristic == 8
    assert integer_mod(8).truncation_depth == 2


def test_embed_natural():
    assert BOOLEAN.embed_natural(5) == 1
    assert BOOLEAN.embed_natural(0) == 0
    assert INTEGER.embed_natural(8) == 8
    assert integer_mod(4).embed_natural(4) == 0
    assert TROPICAL.embed_natural(3) == 0
    assert TROPICAL.embed_natural(0) is NEG_INF
    assert RATIONAL.embed_natural(2) == Fraction(2)


def test_tropical_arithmetic():
    assert TROPICAL.add(3, 5) == 5
    assert TROPICAL.add(NEG_INF, 2) == 2
    assert TROPICAL.mul(3, 5) == 8
    assert TROPICAL.mul(NEG_INF, 5) is NEG_INF
    assert TROPICAL.format(NEG_INF) == "-inf"
    assert TROPICAL.to_json(NEG_INF) is None
    assert TROPICAL.from_json(None) is NEG_INF


def test_negative_infinity_survives_pickling():
    assert pickle.loads(pickle.dumps(NEG_INF)) is NEG_INF
    assert pickle.loads(pickle.dumps(TROPICAL)) == TROPICAL


@pytest.mark.parametrize(
    "selector, expected",
    [
        ("boolean", BOOLEAN),
        ("Bool", BOOLEAN),
        ("nat", NATURAL),
        ("int", INTEGER),
        ("rational", RATIONAL),
        ("tropical", TROPICAL),
        ("mod:2^3", IntegerModRing(8)),
        ("mod:4", IntegerModRing(4)),
    ],
)
def test_get_semiring(selector, expected):
    assert get_semiring(selector) == expected


def test_get_semiring_rejects_unknown():
    with pytest.raises(ValueError, match="Unknown semiring"):
        get_semiring("complex")
    with pytest.raises(ValueError, match="power of two"):
        get_semiring("mod:6")


def test_coerce():
    assert BOOLEAN.coerce(True) == 1
    assert RATIONAL.coerce("3/4") == Fraction(3, 4)
    assert integer_mod(4).coerce(-1) == 3
    with pytest.raises(ValueError):
        BOOLEAN.coerce(2)
    with pytest.raises(ValueError):
        TROPICAL.coerce(-3)
