"""
계수체 테스트 - F_p, F_p[s], F_p(s)
"""
import random

import pytest

from gbverify.core.coefficients import (
    PrimeField,
    PrimeFieldElement,
    RationalFunction,
    RationalFunctionField,
    UnivariatePolynomial,
    check_prime,
    symmetric_residue,
    unipoly_gcd,
)
from gbverify.core.errors import FieldDivisionByZero, IncompatibleFieldError, InvalidRingError


def _unipoly(rng: random.Random, p: int, max_deg: int = 3) -> UnivariatePolynomial:
    return UnivariatePolynomial(tuple(rng.randrange(p) for _ in range(rng.randint(1, max_deg + 1))), p)


def _rational(rng: random.Random, p: int) -> RationalFunction:
    den = _unipoly(rng, p, 2)
    while den.is_zero():
        den = _unipoly(rng, p, 2)
    return RationalFunction.make(_unipoly(rng, p), den)


def test_prime_field_element_arithmetic():
    a, b = PrimeFieldElement(3, 7), PrimeFieldElement(5, 7)
    assert a + b == PrimeFieldElement(1, 7)
    assert a * b == PrimeFieldElement(1, 7)
    assert a - b == PrimeFieldElement(5, 7)
    assert a.inverse() == PrimeFieldElement(5, 7)
    assert a / b == a * b.inverse()
    assert a ** 6 == PrimeFieldElement(1, 7)
    assert a ** -1 == a.inverse()
    assert 2 * a == PrimeFieldElement(6, 7)
    assert int(PrimeFieldElement(-1, 7)) == 6
    assert str(PrimeFieldElement(6, 7)) == "-1"


def test_prime_element_with_int_operands():
    a = PrimeFieldElement(3, 7)
    assert 1 / a == a.inverse() == PrimeFieldElement(5, 7)
    assert 2 / a == PrimeFieldElement(3, 7)
    assert a * (1 / a) == 1
    assert a == 3 and a == 10 and a == -4
    assert a != 4
    assert PrimeFieldElement(6, 7) == -1
    assert PrimeFieldElement(1, 5) != PrimeFieldElement(1, 7)
    assert len({PrimeFieldElement(2, 7), PrimeFieldElement(9, 7), 2}) == 1
    with pytest.raises(ZeroDivisionError):
        1 / PrimeFieldElement(0, 7)


def test_division_by_zero():
    with pytest.raises(FieldDivisionByZero):
        PrimeFieldElement(0, 5).inverse()
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElement(2, 5) / 0
    with pytest.raises(FieldDivisionByZero):
        PrimeField(5).inv(0)
    with pytest.raises(FieldDivisionByZero):
        RationalFunctionField(5).zero.inverse()


def test_mixed_moduli_rejected():
    with pytest.raises(IncompatibleFieldError):
        PrimeFieldElement(1, 5) + PrimeFieldElement(1, 7)
    with pytest.raises(IncompatibleFieldError):
        RationalFunction.from_int(1, 5) + RationalFunction.from_int(1, 7)


@pytest.mark.parametrize("p", [4, 1, 0, -3, 4294967311])
def test_check_prime_rejects(p):
    with pytest.raises(InvalidRingError):
        check_prime(p)


def test_check_prime_accepts_largest_supported():
    assert check_prime(2147483647) == 2147483647


def test_symmetric_residue():
    assert symmetric_residue(4, 5) == -1
    assert symmetric_residue(2, 5) == 2
    assert symmetric_residue(1, 2) == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 101])
def test_prime_field_axioms(p):
    F = PrimeField(p)
    rng = random.Random(1000 + p)
    for _ in range(1000):
        a, b, c = (F.from_int(rng.randrange(-3 * p, 3 * p)) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == F.zero
        assert F.sub(a, b) == F.add(a, F.neg(b))
        if a:
            assert F.mul(a, F.inv(a)) == F.one
        assert F.pow(a, p) == a


@pytest.mark.parametrize("p", [3, 5])
def test_rational_function_field_axioms(p):
    F = RationalFunctionField(p)
    rng = random.Random(2000 + p)
    for _ in range(1000):
        a, b, c = (_rational(rng, p) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert F.is_zero(a - a)
        if not a.is_zero():
            assert (a * a.inverse()).is_one()
            assert (a / a).is_one()
        # 정규형: 분모 monic, 기약
        assert a.den.lc == 1
        assert unipoly_gcd(a.num, a.den).is_one() or a.num.is_zero()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rational_frobenius_is_pth_power(p):
    rng = random.Random(3000 + p)
    for _ in range(200):
        a, b = _rational(rng, p), _rational(rng, p)
        assert a.frobenius(p) == a ** p
        assert (a + b) ** p == a ** p + b ** p


def test_unipoly_formatting_uses_symmetric_coefficients():
    assert str(UnivariatePolynomial((1, 2, 1), 5)) == "s^2 + 2*s + 1"
    assert str(UnivariatePolynomial((1, 2, 1), 3)) == "s^2 - s + 1"
    assert str(UnivariatePolynomial((), 3)) == "0"


def test_unipoly_divmod_and_gcd():
    p = 7
    s = UnivariatePolynomial.generator(p)
    one = UnivariatePolynomial.constant(1, p)
    a = (s + one) * (s - one)
    b = (s + one) * (s + one)
    assert unipoly_gcd(a, b) == s + one
    q, r = a.divmod(s - one)
    assert q == s + one and r.is_zero()
    assert (s ** 2 + one)(3) == 10 % p


def test_rational_normalization():
    p = 5
    s = UnivariatePolynomial.generator(p)
    one = UnivariatePolynomial.constant(1, p)
    r = RationalFunction.make(s * s - one, (s - one).scale(2))
    assert r.den.is_one()
    assert r.num == (s + one).scale(pow(2, -1, p))
    assert str(RationalFunction.make(s, s + one)) == "(s)/(s + 1)"
    with pytest.raises(FieldDivisionByZero):
        RationalFunction.make(s, UnivariatePolynomial((), p))


def test_rational_field_format():
    F = RationalFunctionField(3)
    s = F.generator()
    assert F.format(-s) == (True, "s")
    assert F.format(s * 2) == (True, "s")
    assert F.format(s + 1) == (False, "(s + 1)")
    assert F.format(F.one) == (False, "")
    assert F.format(s / (s + 1)) == (False, "(s)/(s + 1)")
