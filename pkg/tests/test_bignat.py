import math

import pytest
from hypothesis import given, strategies as st

from firstdigit.bignat import MAX_FACTOR, BigNat, bignat_add, bignat_mul_small

small = st.integers(min_value=0, max_value=2**62)
factor = st.integers(min_value=1, max_value=MAX_FACTOR)


def test_add_examples():
    assert str(bignat_add(BigNat("999"), BigNat("1"))) == "1000"
    assert str(BigNat(0) + BigNat(0)) == "0"
    assert str(BigNat("12586269025") + BigNat("7778742049")) == "20365011074"


def test_mul_examples():
    assert str(bignat_mul_small(BigNat("120"), 6)) == "720"
    assert str(bignat_mul_small(BigNat(0), 7)) == "0"
    assert str(BigNat("999999") * MAX_FACTOR) == "999999000000"


def test_canonical_zero():
    for z in (BigNat(), BigNat("0"), BigNat("000"), BigNat(0)):
        assert z.digits == (0,)
        assert z.is_zero() and z.num_digits() == 1
    assert BigNat("007").digits == (7,)


@pytest.mark.parametrize("s", [0, -1, MAX_FACTOR + 1])
def test_mul_rejects_factor_out_of_range(s):
    with pytest.raises(ValueError):
        bignat_mul_small(BigNat(5), s)


def test_rejects_bad_input():
    with pytest.raises(TypeError):
        bignat_mul_small(BigNat(5), 2.0)
    with pytest.raises(ValueError):
        BigNat(-3)
    with pytest.raises(ValueError):
        BigNat("12a")
    with pytest.raises(TypeError):
        BigNat(True)


def test_huge_int_roundtrip():
    v = math.factorial(3000)
    assert int(BigNat(v)) == v
    assert BigNat(v).num_digits() == 9131


@given(small, small)
def test_add_matches_int(a, b):
    assert int(BigNat(a) + BigNat(b)) == a + b


@given(small, factor)
def test_mul_matches_int(a, s):
    assert int(bignat_mul_small(BigNat(a), s)) == a * s


@given(small, small)
def test_add_commutes(a, b):
    assert BigNat(a) + BigNat(b) == BigNat(b) + BigNat(a)


@given(small, small, small)
def test_add_associates(a, b, c):
    x, y, z = BigNat(a), BigNat(b), BigNat(c)
    assert (x + y) + z == x + (y + z)


@given(small, small, factor)
def test_mul_distributes(a, b, s):
    x, y = BigNat(a), BigNat(b)
    assert (x + y) * s == x * s + y * s


@given(st.integers(min_value=0, max_value=10**80))
def test_digits_and_prefix(v):
    b = BigNat(v)
    assert "".join(map(str, b.digits)) == str(v)
    assert b.prefix(5) == int(str(v)[:5])
    assert hash(b) == hash(BigNat(str(v)))
