from fractions import Fraction

import pytest
from hypothesis import given

from tautring import CharClass, parse_class
from tautring.errors import ClassIndexError, ParseError

from conftest import classes

e, p1 = CharClass.euler(2), CharClass.pontryagin(2, 1)


def test_monomial():
    assert parse_class("e*p1", 2) == e * p1


def test_euler_square_normalizes():
    assert parse_class("e^2", 2) == CharClass.pontryagin(2, 2)


def test_cp2_table_entry():
    assert parse_class("7*p1 - 7*e", 2) == 7 * p1 - 7 * e


def test_parentheses_rationals_and_unary_minus():
    assert parse_class("13*(p1^2 + e^2 - 2*e*p1)", 2) == 13 * (p1 ** 2 + e ** 2 - 2 * e * p1)
    assert parse_class(" 3/4 * e - -p1 ", 2) == e * Fraction(3, 4) + p1
    assert parse_class("0", 3) == CharClass.zero(3)


@pytest.mark.parametrize("text, position", [("e*", 2), ("(e", 2), ("e^x", 2), ("", 0), ("e p1", 2)])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_class(text, 2)
    assert info.value.position == position


def test_index_out_of_range():
    with pytest.raises(ClassIndexError) as info:
        parse_class("e + p3", 2)
    assert info.value.index == 3
    assert info.value.position == 4
    with pytest.raises(ClassIndexError):
        parse_class("p0", 2)


@given(classes())
def test_render_then_parse(c):
    assert parse_class(c.to_text(), c.n) == c
