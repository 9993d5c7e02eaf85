from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from algebra.field import FieldSpec
from utils.errors import InputError


def test_parse_spellings():
    assert FieldSpec.parse('q') == FieldSpec.rationals()
    assert FieldSpec.parse('p:7') == FieldSpec.prime(7)
    assert FieldSpec.parse(' P:3 ').label == 'p:3'


@pytest.mark.parametrize('text', ['p:4', 'p:x', 'r', 'p:1'])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        FieldSpec.parse(text)


def test_rational_scalars(qq):
    assert qq('3/6') == qq(Fraction(1, 2))
    assert qq.to_json(qq('-2/4')) == '-1/2'
    assert qq.render(qq(3)) == '3'


def test_prime_scalars(f5):
    assert f5(7) == f5(2)
    assert f5('1/2') == f5(3)
    assert f5.to_json(f5(-1)) == 4
    assert len(f5.elements()) == 5


def test_zero_denominator_mod_p(f3):
    with pytest.raises(InputError):
        f3('1/3')


def test_rationals_cannot_be_listed(qq):
    with pytest.raises(InputError):
        qq.elements()


def test_reduce_into_prime_field(qq, f7):
    assert qq.reduce(qq('1/2'), f7) == f7(4)


@given(st.integers(-50, 50), st.integers(1, 50))
def test_rational_key_matches_fraction(num, den):
    qq = FieldSpec.rationals()
    assert qq.key(qq.fraction(num, den)) == Fraction(num, den)


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_prime_field_arithmetic(a, b):
    f7 = FieldSpec.prime(7)
    assert f7.to_int(f7(a) * f7(b)) == (a * b) % 7
