"""
아이디얼 연산 테스트 - 소속, 몫, 포화, 교집합, 소거, Frobenius
"""
import random

import pytest

from gbverify.core.errors import (
    IncompatibleRingError,
    InvalidBracketPowerError,
    PreconditionError,
    UnsupportedEliminationError,
)
from gbverify.core.idealops import (
    Ideal,
    colon_element,
    colon_ideal,
    eliminate,
    frobenius_power,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_power_of,
    maximal_ideal,
    membership,
    membership_certificate,
    saturation_steps,
    saturation_steps_ideal,
    unit_ideal,
)
from gbverify.core.polyring import Polynomial, RingSpec, format_poly, monomial_lcm, parse_poly
from tests.conftest import random_monomial, random_nonzero_poly, random_poly


@pytest.fixture
def f5_xy():
    return RingSpec.create(5, ("x", "y"), "lex")


def _ideal(ring, *texts):
    return Ideal.parse(ring, texts)


def _basis(ideal):
    return [format_poly(g) for g in ideal.reduced_gb()]


def test_membership_independent_of_order():
    lex = RingSpec.create(7, ("x", "y"), "lex")
    grevlex = lex.with_order("grevlex")
    rng = random.Random(31)
    for _ in range(200):
        gens = [random_nonzero_poly(rng, lex, max_deg=2, max_terms=3) for _ in range(2)]
        I_lex = Ideal(lex, gens)
        I_grevlex = Ideal(grevlex, [Polynomial(grevlex, g.terms) for g in gens])
        member = random_poly(rng, lex, 1, 2) * gens[0] + random_poly(rng, lex, 1, 2) * gens[1]
        other = random_poly(rng, lex, 3, 4)
        assert membership(member, I_lex)
        assert membership(Polynomial(grevlex, member.terms), I_grevlex)
        assert membership(other, I_lex) == membership(Polynomial(grevlex, other.terms), I_grevlex)


def test_membership_certificate_reconstructs(f5_grevlex):
    rng = random.Random(32)
    for _ in range(40):
        gens = [random_nonzero_poly(rng, f5_grevlex, max_deg=2, max_terms=3) for _ in range(3)]
        I = Ideal(f5_grevlex, gens)
        f = sum((random_poly(rng, f5_grevlex, 1, 2) * g for g in gens), f5_grevlex.zero())
        cofactors = membership_certificate(f, I)
        assert cofactors is not None
        total = f5_grevlex.zero()
        for c, g in zip(cofactors, I.generators):
            total = total + c * g
        assert total == f


def test_membership_certificate_non_member(f5_xy):
    I = _ideal(f5_xy, "x^2", "y^2")
    assert membership_certificate(parse_poly("x*y", f5_xy), I) is None
    with pytest.raises(IncompatibleRingError):
        membership(parse_poly("x", RingSpec.create(7, ("x", "y"))), I)


def test_ideal_predicates(f5_xy):
    I = _ideal(f5_xy, "x^2", "x*y")
    assert ideal_contains(maximal_ideal(f5_xy), I)
    assert not ideal_contains(I, maximal_ideal(f5_xy))
    assert unit_ideal(f5_xy).is_unit()
    assert not I.is_unit()
    assert Ideal(f5_xy, [f5_xy.zero()]).is_zero()
    assert ideal_equal(_ideal(f5_xy, "x + y", "y"), _ideal(f5_xy, "x", "y"))


def test_sum_product_power(f5_xy):
    I = _ideal(f5_xy, "x")
    J = _ideal(f5_xy, "y")
    assert ideal_equal(ideal_sum(I, J), maximal_ideal(f5_xy))
    assert _basis(ideal_product(I, J)) == ["x*y"]
    assert _basis(ideal_power(maximal_ideal(f5_xy), 2)) == ["x^2", "x*y", "y^2"]
    assert ideal_power(I, 0).is_unit()
    with pytest.raises(PreconditionError):
        ideal_power(I, -1)


def test_intersection_monomial_ideals(f5_xy):
    assert _basis(intersect(_ideal(f5_xy, "x"), _ideal(f5_xy, "y"))) == ["x*y"]
    meet = intersect(_ideal(f5_xy, "x^2", "y"), _ideal(f5_xy, "x", "y^2"))
    assert _basis(meet) == ["x^2", "x*y", "y^2"]
    assert intersect(_ideal(f5_xy, "x"), Ideal(f5_xy)).is_zero()


def _random_ideal(rng, ring, count=2, max_deg=2):
    return Ideal(ring, [random_nonzero_poly(rng, ring, max_deg, 2) for _ in range(count)])


def test_intersection_in_three_variables(f5_grevlex):
    rng = random.Random(35)
    for _ in range(10):
        I = _random_ideal(rng, f5_grevlex)
        J = _random_ideal(rng, f5_grevlex)
        meet = intersect(I, J)
        assert meet.ring == f5_grevlex
        assert ideal_contains(I, meet) and ideal_contains(J, meet)


@pytest.mark.parametrize("cases", [20, pytest.param(200, marks=pytest.mark.slow)])
def test_intersection_laws(cases):
    ring = RingSpec.create(5, ("x", "y"), "grevlex")
    rng = random.Random(33)
    for _ in range(cases):
        I = _random_ideal(rng, ring)
        J = _random_ideal(rng, ring)
        meet = intersect(I, J)
        assert ideal_contains(I, meet)
        assert ideal_contains(J, meet)
        assert ideal_contains(meet, ideal_product(I, J))
        assert ideal_equal(meet, intersect(J, I))


@pytest.mark.parametrize("cases", [20, pytest.param(200, marks=pytest.mark.slow)])
def test_intersection_of_principal_monomial_ideals(f5_grevlex, cases):
    rng = random.Random(37)
    for _ in range(cases):
        a, b = (random_monomial(rng, 3, 4) for _ in range(2))
        meet = intersect(Ideal(f5_grevlex, [f5_grevlex.monomial(a)]), Ideal(f5_grevlex, [f5_grevlex.monomial(b)]))
        assert meet.reduced_gb() == (f5_grevlex.monomial(monomial_lcm(a, b)),)


def test_colon_examples(f5_xy):
    I = _ideal(f5_xy, "x^2", "x*y")
    assert ideal_equal(colon_element(I, parse_poly("x", f5_xy)), maximal_ideal(f5_xy))
    assert _basis(colon_element(I, parse_poly("y", f5_xy))) == ["x"]
    assert colon_element(I, f5_xy.constant(3)) is I
    with pytest.raises(PreconditionError):
        colon_element(I, f5_xy.zero())
    assert colon_ideal(I, Ideal(f5_xy)).is_unit()
    assert _basis(colon_ideal(I, _ideal(f5_xy, "x", "y"))) == ["x"]


def test_colon_over_rational_functions(rational_ring):
    I = _ideal(rational_ring, "s*x^2 + x*y")
    quotient = colon_element(I, parse_poly("x", rational_ring))
    assert ideal_equal(quotient, _ideal(rational_ring, "s*x + y"))
    assert _basis(quotient) == ["x + (1)/(s)*y"]


@pytest.mark.parametrize("cases", [20, pytest.param(200, marks=pytest.mark.slow)])
def test_colon_and_saturation_laws(cases):
    ring = RingSpec.create(5, ("x", "y"), "grevlex")
    rng = random.Random(34)
    for _ in range(cases):
        I = _random_ideal(rng, ring)
        u = random_nonzero_poly(rng, ring, 1, 2)
        quotient = colon_element(I, u)
        assert ideal_contains(quotient, I)
        assert all(membership(u * g, I) for g in quotient.generators)
        sat, steps = saturation_steps(I, u)
        assert steps >= 1
        assert ideal_contains(sat, quotient)
        # 포화 아이디얼은 u 에 대한 몫으로 더 커지지 않습니다
        assert ideal_equal(colon_element(sat, u), sat)


@pytest.mark.parametrize("cases", [20, pytest.param(200, marks=pytest.mark.slow)])
def test_iterated_colon_is_colon_by_square(cases):
    ring = RingSpec.create(5, ("x", "y"), "grevlex")
    rng = random.Random(38)
    for _ in range(cases):
        I = _random_ideal(rng, ring)
        u = random_nonzero_poly(rng, ring, 1, 2)
        assert ideal_equal(colon_element(colon_element(I, u), u), colon_element(I, u ** 2))


def test_saturation_steps(f5_xy):
    I = _ideal(f5_xy, "x^2", "x*y")
    sat, steps = saturation_steps(I, parse_poly("y", f5_xy))
    assert _basis(sat) == ["x"]
    assert steps == 2
    sat, _ = saturation_steps(I, parse_poly("x", f5_xy))
    assert sat.is_unit()
    sat, steps = saturation_steps_ideal(I, maximal_ideal(f5_xy))
    assert _basis(sat) == ["x"]
    sat, steps = saturation_steps_ideal(I, Ideal(f5_xy))
    assert sat.is_unit()
    assert steps == 0


def test_eliminate_twisted_cubic():
    ring = RingSpec.create(5, ("t", "x", "y"), "lex")
    I = _ideal(ring, "x - t^2", "y - t^3")
    elim = eliminate(I, ["x", "y"])
    assert elim.ring.variables == ("x", "y")
    assert _basis(elim) == ["x^3 - y^2"]
    with pytest.raises(UnsupportedEliminationError):
        eliminate(I, ["t", "y"])
    with pytest.raises(UnsupportedEliminationError):
        eliminate(Ideal(ring.with_order("grevlex"), []), ["x", "y"])


def test_frobenius_power(construction_ring):
    I = _ideal(construction_ring, "x + s*y", "x*y - 1")
    same = Ideal(construction_ring, I.reduced_gb())
    assert ideal_equal(frobenius_power(I, 3), frobenius_power(same, 3))
    assert ideal_equal(frobenius_power(I, 9), frobenius_power(frobenius_power(I, 3), 3))
    assert [format_poly(g) for g in frobenius_power(I, 3).generators] == ["s^3*y^3 + x^3", "x^3*y^3 - 1"]
    for bad in (1, 6, 5, 0):
        with pytest.raises(InvalidBracketPowerError):
            frobenius_power(I, bad)


@pytest.mark.parametrize("cases", [20, pytest.param(100, marks=pytest.mark.slow)])
def test_frobenius_power_independent_of_generators(cases):
    ring = RingSpec.create(3, ("x", "y"), "grevlex")
    rng = random.Random(36)
    for _ in range(cases):
        g1, g2 = (random_nonzero_poly(rng, ring, 2, 3) for _ in range(2))
        # 가역 변환 (g1, g2) -> (g1 + a g2, c g2) 는 같은 아이디얼을 생성합니다
        a = random_poly(rng, ring, 1, 2)
        c = ring.constant(rng.randrange(1, 3))
        I = Ideal(ring, [g1, g2])
        other = Ideal(ring, [g1 + a * g2, c * g2])
        assert ideal_equal(frobenius_power(I, 3), frobenius_power(other, 3))


def test_is_power_of():
    assert is_power_of(27, 3)
    assert is_power_of(3, 3)
    assert not is_power_of(1, 3)
    assert not is_power_of(18, 3)


@pytest.mark.parametrize("cases", [20, pytest.param(100, marks=pytest.mark.slow)])
def test_frobenius_power_of_reduced_basis(cases):
    ring = RingSpec.create(3, ("x", "y"), "grevlex")
    rng = random.Random(39)
    for _ in range(cases):
        I = _random_ideal(rng, ring, count=rng.randint(1, 3))
        reduced = Ideal(ring, I.reduced_gb())
        assert ideal_equal(frobenius_power(I, 3), frobenius_power(reduced, 3))


@pytest.mark.parametrize("cases", [20, pytest.param(100, marks=pytest.mark.slow)])
def test_frobenius_maps_certificate_into_bracket_power(cases):
    ring = RingSpec.create(3, ("x", "y"), "grevlex")
    rng = random.Random(40)
    for _ in range(cases):
        I = _random_ideal(rng, ring)
        f = sum((random_poly(rng, ring, 1, 2) * g for g in I.generators), ring.zero())
        cofactors = membership_certificate(f, I)
        assert cofactors is not None
        # f = Σ c_i g_i 이면 f^q = Σ c_i^q g_i^q 이고 g_i^q 가 I^[q] 의 생성원입니다
        lifted = sum(
            (c.frobenius(3) * g.frobenius(3) for c, g in zip(cofactors, I.generators)), ring.zero()
        )
        assert f ** 3 == lifted
        assert membership(f ** 3, frobenius_power(I, 3))
