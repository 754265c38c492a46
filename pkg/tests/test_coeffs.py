from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gmacheck.coeffs import ZZ, QQ, FP, DomainError, parse_domain, xgcd


def test_parse_domain():
    assert parse_domain("zz") is ZZ
    assert parse_domain("qq") is QQ
    assert parse_domain("fp:5").characteristic == 5
    assert parse_domain("fp:5") is FP(5)
    with pytest.raises(DomainError):
        parse_domain("fp:4")
    with pytest.raises(DomainError):
        parse_domain("fp:2")  # odd primes only
    with pytest.raises(DomainError):
        parse_domain("gf:5")


def test_names():
    assert ZZ.name == "zz"
    assert QQ.name == "qq"
    assert FP(7).name == "fp:7"
    assert not ZZ.is_field
    assert QQ.is_field and FP(5).is_field
    assert ZZ.characteristic == 0 and FP(5).characteristic == 5


def test_fp_arithmetic():
    F = FP(5)
    assert F.add(3, 4) == 2
    assert F.mul(3, 4) == 2
    assert F.neg(2) == 3
    assert F.inv(2) == 3  # 2*3 = 6 = 1
    assert F.inv(4) == 4
    with pytest.raises(DomainError):
        F.inv(0)


def test_qq_parse():
    assert QQ.parse_coeff("3/4") == Fraction(3, 4)
    assert QQ.parse_coeff("-2") == Fraction(-2)
    assert ZZ.parse_coeff("-17") == -17
    assert FP(5).parse_coeff("3") == 3


def test_zz_divmod_reduce():
    # floor-style: residues land in [0, b) for positive b
    q, r = ZZ.divmod_reduce(7, 3)
    assert (q, r) == (2, 1)
    q, r = ZZ.divmod_reduce(-7, 3)
    assert (q, r) == (-3, 2)
    q, r = QQ.divmod_reduce(Fraction(7), Fraction(3))
    assert r == 0 and q == Fraction(7, 3)


@given(st.integers(-200, 200), st.integers(1, 50))
def test_zz_divmod_reduce_range(a, b):
    q, r = ZZ.divmod_reduce(a, b)
    assert a == q * b + r
    assert 0 <= r < b


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == abs(__import__("math").gcd(a, b))
    assert x * a + y * b == g


@given(st.integers(0, 4), st.integers(1, 4))
def test_fp_field_laws(a, b):
    F = FP(5)
    assert F.mul(a, F.inv(b)) == F.mul(F.inv(b), a)
    assert F.mul(b, F.inv(b)) == 1
    assert F.sub(a, a) == 0
