from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcalc.fields import Field, QQ, is_prime

F5 = Field(5)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
f5_elems = st.integers(min_value=0, max_value=4)


def test_field_parse_and_str():
    assert Field.parse("Q") == QQ
    assert Field.parse("F7") == Field(7)
    with pytest.raises(ValueError):
        Field.parse("F6")
    assert str(QQ) == "Q"
    assert str(F5) == "F5"


def test_of_accepts_ratio_strings():
    assert QQ.of("3/4") == Fraction(3, 4)
    assert QQ.of("-2") == Fraction(-2)
    assert F5.of("3/4") == (3 * pow(4, -1, 5)) % 5


def test_bad_field_characteristic():
    with pytest.raises(ValueError):
        Field(4)
    assert is_prime(2) and is_prime(31)
    assert not is_prime(1) and not is_prime(9)


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    f = QQ
    assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero()
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one()


@given(f5_elems, f5_elems, f5_elems)
def test_prime_field_laws(a, b, c):
    f = F5
    assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero()
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one()


@given(rationals)
def test_to_str_round_trips(a):
    assert QQ.of(QQ.to_str(a)) == a
