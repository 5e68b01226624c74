"""Exact rational helpers: conversion, parsing, formatting, integer roots."""

from fractions import Fraction

import pytest

from effvec.rationals import (
    format_rational,
    nth_root_exact,
    nth_root_floor,
    parse_rational,
    rationalize,
)


class TestRationalize:
    def test_int(self):
        assert rationalize(3) == Fraction(3)

    def test_fraction_passthrough(self):
        assert rationalize(Fraction(2, 7)) == Fraction(2, 7)

    def test_float_is_exact_dyadic(self):
        assert rationalize(0.5) == Fraction(1, 2)
        assert rationalize(0.1) == Fraction(0.1)  # dyadic, not 1/10

    def test_string(self):
        assert rationalize("2/7") == Fraction(2, 7)

    def test_bool_rejected(self):
        with pytest.raises(TypeError):
            rationalize(True)


class TestParseFormat:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("3/4", Fraction(3, 4)),
            ("5", Fraction(5)),
            ("0.25", Fraction(1, 4)),
            ("2e-1", Fraction(1, 5)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_rational("one half")

    def test_format_round_trip(self):
        for value in (Fraction(3, 4), Fraction(-2), Fraction(7), Fraction(1, 10**12)):
            assert parse_rational(format_rational(value)) == value

    def test_format_integers_bare(self):
        assert format_rational(Fraction(4)) == "4"
        assert format_rational(Fraction(1, 3)) == "1/3"


class TestRoots:
    def test_floor_root_exact(self):
        assert nth_root_floor(64, 3) == 4
        assert nth_root_floor(10**24, 2) == 10**12

    def test_floor_root_rounds_down(self):
        assert nth_root_floor(63, 3) == 3
        assert nth_root_floor(2**100 - 1, 100) == 1

    def test_exact_root_hit(self):
        assert nth_root_exact(Fraction(8, 27), 3) == Fraction(2, 3)

    def test_exact_root_miss(self):
        assert nth_root_exact(Fraction(2), 2) is None

    def test_unit_root(self):
        assert nth_root_exact(Fraction(1), 7) == Fraction(1)
