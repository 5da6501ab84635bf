"""
Gröbner 기저 테스트 - 나눗셈, S-다항식, Buchberger, 기약 기저, 인증서
sympy 의 groebner(modulus=p) 를 기준값으로 사용합니다.
"""
import random

import pytest
import sympy

from gbverify.core.errors import CertificateError, PolynomialParseError, PreconditionError
from gbverify.core.groebner import (
    STRATEGIES,
    SpolyCertificate,
    buchberger,
    check_certificate,
    check_certificate_up_to_sign,
    divide,
    format_certificate,
    is_groebner,
    parse_certificate,
    reduce_basis,
    s_polynomial,
)
from gbverify.core.polyring import RingSpec, format_poly, parse_poly
from tests.conftest import random_nonzero_poly, random_poly


def _to_sympy(f, symbols):
    expr = sympy.Integer(0)
    for mono, c in f.terms:
        term = sympy.Integer(c)
        for sym, e in zip(symbols, mono):
            term *= sym ** e
        expr += term
    return expr


def _sympy_basis(gens, ring):
    symbols = sympy.symbols(ring.variables)
    G = sympy.groebner(
        [_to_sympy(g, symbols) for g in gens], *symbols, modulus=ring.characteristic, order=ring.order.kind
    )
    return {format_poly(parse_poly(str(expr), ring)) for expr in G.exprs}


def test_division_contract(f5_lex, f5_grevlex):
    rng = random.Random(21)
    for case in range(500):
        ring = f5_lex if case % 2 else f5_grevlex
        key = ring.key
        f = random_poly(rng, ring, max_deg=4, max_terms=5)
        divisors = [random_nonzero_poly(rng, ring, max_deg=2, max_terms=3) for _ in range(rng.randint(1, 3))]
        result = divide(f, divisors)
        total = result.remainder
        for q, g in zip(result.quotients, divisors):
            total = total + q * g
            if q and f:
                assert key((q * g).leading_monomial()) <= key(f.leading_monomial())
        assert total == f
        lms = [g.leading_monomial() for g in divisors]
        for mono, _ in result.remainder.terms:
            assert not any(all(a <= b for a, b in zip(lm, mono)) for lm in lms)


def test_divide_by_empty_list(f5_lex):
    f = parse_poly("x + y", f5_lex)
    assert divide(f, []).remainder == f
    with pytest.raises(PreconditionError):
        divide(f, [f5_lex.zero()])


def test_s_polynomial_cancels_leading_terms(f5_lex, f5_grevlex):
    rng = random.Random(22)
    for case in range(500):
        ring = f5_lex if case % 2 else f5_grevlex
        key = ring.key
        f = random_nonzero_poly(rng, ring)
        g = random_nonzero_poly(rng, ring)
        s = s_polynomial(f, g)
        lcm = tuple(max(a, b) for a, b in zip(f.leading_monomial(), g.leading_monomial()))
        if s:
            assert key(s.leading_monomial()) < key(lcm)
        assert s == -s_polynomial(g, f)


def test_s_polynomial_monic_convention(f5_lex):
    f = parse_poly("2*x^2 + y", f5_lex)
    g = parse_poly("x*y + 1", f5_lex)
    # y * x^2 + y^2/2 - (x^2 y + x) = 3 y^2 - x
    assert s_polynomial(f, g) == parse_poly("3*y^2 - x", f5_lex)


def test_reduced_basis_is_unique(f5_lex, f5_grevlex):
    rng = random.Random(23)
    for case in range(100):
        ring = f5_grevlex if case % 3 else f5_lex
        gens = [random_nonzero_poly(rng, ring, max_deg=2, max_terms=3) for _ in range(rng.randint(1, 3))]
        expected = buchberger(gens).elements
        shuffled = gens[:]
        rng.shuffle(shuffled)
        strategy = STRATEGIES[case % len(STRATEGIES)]
        other = buchberger(
            shuffled, strategy=strategy, seed=case, product_criterion=bool(case % 2), chain_criterion=bool(case % 5)
        )
        assert other.elements == expected
        assert other.reduced
        assert is_groebner(expected)
        for g in expected:
            assert g.leading_coefficient() == 1


def test_against_sympy_grevlex(f5_grevlex):
    rng = random.Random(24)
    for _ in range(40):
        gens = [random_nonzero_poly(rng, f5_grevlex, max_deg=3, max_terms=3) for _ in range(rng.randint(2, 3))]
        ours = {format_poly(g) for g in buchberger(gens).elements}
        assert ours == _sympy_basis(gens, f5_grevlex)


def test_against_sympy_lex():
    ring = RingSpec.create(7, ("x", "y"), "lex")
    rng = random.Random(25)
    for _ in range(20):
        gens = [random_nonzero_poly(rng, ring, max_deg=3, max_terms=3) for _ in range(2)]
        ours = {format_poly(g) for g in buchberger(gens).elements}
        assert ours == _sympy_basis(gens, ring)


def test_unit_and_zero_ideal(f5_lex):
    gb = buchberger([parse_poly("x*y - 1", f5_lex), parse_poly("x", f5_lex)])
    assert [format_poly(g) for g in gb] == ["1"]
    empty = buchberger([f5_lex.zero()], ring=f5_lex)
    assert len(empty) == 0
    with pytest.raises(PreconditionError):
        buchberger([])
    with pytest.raises(ValueError):
        buchberger([parse_poly("x", f5_lex)], strategy="sugar")


def test_tracked_combinations(f5_grevlex):
    rng = random.Random(26)
    for _ in range(30):
        gens = [random_nonzero_poly(rng, f5_grevlex, max_deg=2, max_terms=3) for _ in range(3)]
        gb = buchberger(gens, track=True)
        assert gb.elements == buchberger(gens).elements
        for g, combo in zip(gb.elements, gb.combinations):
            total = f5_grevlex.zero()
            for c, h in zip(combo, gb.generators):
                total = total + c * h
            assert total == g


def test_is_groebner_detects_missing_element(f5_lex):
    G = [parse_poly("x^2 + y", f5_lex), parse_poly("x*y", f5_lex)]
    assert not is_groebner(G)
    assert is_groebner(buchberger(G).elements)


@pytest.fixture
def xy_ring():
    return RingSpec.create(5, ("x", "y"), "lex")


def test_certificate_exact(xy_ring):
    G = [parse_poly("x - y", xy_ring), parse_poly("y", xy_ring)]
    # S(G0, G1) = y (x - y) - x y = -y^2 = -y * G1
    assert s_polynomial(G[0], G[1]) == parse_poly("-y^2", xy_ring)
    cert = SpolyCertificate((0, 1), {1: parse_poly("-y", xy_ring)})
    assert check_certificate(G, cert)
    assert check_certificate_up_to_sign(G, cert) == 1
    assert check_certificate_up_to_sign(G, cert.negated()) == -1
    wrong = SpolyCertificate((0, 1), {1: parse_poly("x", xy_ring)})
    assert check_certificate_up_to_sign(G, wrong) is None


def test_certificate_rejects_degree_violation(xy_ring):
    G = [parse_poly("x - y", xy_ring), parse_poly("y", xy_ring)]
    # 합은 맞지만 y * G0 의 선도단항식 xy 가 lm(S) = y^2 보다 큽니다
    cert = SpolyCertificate((0, 1), {0: parse_poly("y", xy_ring), 1: parse_poly("-x", xy_ring)})
    assert not check_certificate(G, cert)


def test_certificate_index_out_of_range(xy_ring):
    G = [parse_poly("x - y", xy_ring), parse_poly("y", xy_ring)]
    with pytest.raises(CertificateError):
        check_certificate(G, SpolyCertificate((0, 1), {5: parse_poly("y", xy_ring)}))
    with pytest.raises(CertificateError):
        check_certificate(G, SpolyCertificate((0, 2), {}))


def test_certificate_text_format(xy_ring):
    cert = parse_certificate("S 0 1 : 1 -y ; 0 0", xy_ring)
    assert cert.pair == (0, 1)
    assert format_certificate(cert) == "S 0 1 : 1 -y"
    again = parse_certificate(format_certificate(cert), xy_ring)
    assert again.coefficients == {1: parse_poly("-y", xy_ring)}
    assert format_certificate(SpolyCertificate((2, 3), {})) == "S 2 3 :"


def test_certificate_parse_errors(xy_ring):
    with pytest.raises(PolynomialParseError) as info:
        parse_certificate("S 0 1 : 1 x + * y", xy_ring)
    assert info.value.position == 14
    with pytest.raises(PolynomialParseError) as info:
        parse_certificate("T 0 1 : 1 x", xy_ring)
    assert info.value.position == 0


def test_new_element_replaces_pending_pair(f5_lex):
    # xy 를 추가하면 (x^2, y^2) 쌍은 (x^2, xy), (y^2, xy) 로 대체됩니다
    gens = [parse_poly(t, f5_lex) for t in ("x^2", "y^2", "x*y")]
    gb = buchberger(gens, product_criterion=False)
    assert gb.stats["chain"] >= 1
    assert [str(g) for g in gb.elements] == ["x^2", "x*y", "y^2"]


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_criteria_do_not_change_the_basis(f5_grevlex, strategy):
    rng = random.Random(29)
    for case in range(30):
        gens = [random_nonzero_poly(rng, f5_grevlex, max_deg=3, max_terms=3) for _ in range(3)]
        plain = buchberger(gens, strategy=strategy, seed=case, product_criterion=False, chain_criterion=False)
        pruned = buchberger(gens, strategy=strategy, seed=case, reduce=False)
        assert is_groebner(pruned.elements)
        assert reduce_basis(pruned).elements == plain.elements
