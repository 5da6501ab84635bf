"""
공통 픽스처와 무작위 다항식 생성기
"""
import random

import pytest

from gbverify.core.polyring import Polynomial, RingSpec


def random_monomial(rng: random.Random, nvars: int, max_deg: int):
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_deg)):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_poly(rng: random.Random, ring: RingSpec, max_deg: int = 3, max_terms: int = 4) -> Polynomial:
    p = ring.characteristic
    terms = [
        (random_monomial(rng, ring.nvars, max_deg), rng.randrange(1, p))
        for _ in range(rng.randint(1, max_terms))
    ]
    return Polynomial(ring, terms)


def random_nonzero_poly(rng: random.Random, ring: RingSpec, max_deg: int = 3, max_terms: int = 4) -> Polynomial:
    while True:
        f = random_poly(rng, ring, max_deg, max_terms)
        if not f.is_zero():
            return f


@pytest.fixture
def f5_lex():
    return RingSpec.create(5, ("x", "y", "z"), "lex")


@pytest.fixture
def f5_grevlex():
    return RingSpec.create(5, ("x", "y", "z"), "grevlex")


@pytest.fixture
def construction_ring():
    """F_3[s, x, y], lex s > x > y"""
    return RingSpec.create(3, ("s", "x", "y"), "lex")


@pytest.fixture
def rational_ring():
    """F_3(s)[x, y], lex x > y"""
    return RingSpec.create(3, ("x", "y"), "lex", parameter="s")
