"""
유한 길이 몫 계산 - 포화를 통한 H^0_m, 계단(staircase) 세기로 길이 계산,
상대 중복도(relative multiplicity) 유한-q 추정, 결합 소 아이디얼 증인 검사
"""
from __future__ import annotations

import itertools
import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InvalidBracketPowerError, PreconditionError
from .idealops import (
    Ideal,
    colon_element,
    frobenius_power,
    ideal_contains,
    ideal_equal,
    ideal_sum,
    intersect,
    is_power_of,
    membership,
    saturation_steps_ideal,
)
from .polyring import Monomial, Polynomial, RingSpec, monomial_divides, monomial_mul

logger = logging.getLogger(__name__)

INFINITE = math.inf

Length = Union[int, float]


@dataclass(frozen=True)
class QuotientPair:
    """U/J (J ⊆ U, 같은 환). 생성 시 포함 관계를 확인합니다."""

    U: Ideal
    J: Ideal

    def __post_init__(self):
        if self.U.ring != self.J.ring:
            raise PreconditionError("U 와 J 는 같은 환의 아이디얼이어야 합니다")
        if not ideal_contains(self.U, self.J):
            raise PreconditionError("J ⊆ U 가 성립하지 않습니다")

    @property
    def ring(self) -> RingSpec:
        return self.U.ring


@dataclass(frozen=True)
class StaircaseDiff:
    """lt(U) 와 lt(J) 의 단항식 아이디얼 차집합. count 가 INFINITE 면 무한"""

    lt_j: Tuple[Monomial, ...]
    lt_u: Tuple[Monomial, ...]
    count: Length
    monomials: Tuple[Monomial, ...] = ()

    @property
    def finite(self) -> bool:
        return self.count != INFINITE


def leading_monomial_ideal(I: Ideal) -> Tuple[Monomial, ...]:
    """기약 Gröbner 기저의 선도단항식 = lt(I) 의 극소 생성원"""
    return tuple(g.leading_monomial() for g in I.reduced_gb())


def _in_monomial_ideal(m: Monomial, gens: Sequence[Monomial]) -> bool:
    return any(monomial_divides(v, m) for v in gens)


def staircase_diff(lt_u: Sequence[Monomial], lt_j: Sequence[Monomial]) -> StaircaseDiff:
    """
    lt(U) \\ lt(J) 를 셉니다. 각 극소 생성원 u 에 대해 (lt(J) : u) 가 모든 변수의
    순수 거듭제곱을 포함할 때만 유한하며, 그 거듭제곱들이 열거 상자를 정합니다.
    """
    found = set()
    for u in lt_u:
        colon = [tuple(max(a - b, 0) for a, b in zip(v, u)) for v in lt_j]
        if any(not any(w) for w in colon):
            continue  # u ∈ lt(J)
        bounds = []
        for i in range(len(u)):
            pure = [w[i] for w in colon if w[i] and not any(w[k] for k in range(len(w)) if k != i)]
            if not pure:
                return StaircaseDiff(tuple(lt_j), tuple(lt_u), INFINITE)
            bounds.append(min(pure))
        for w in itertools.product(*(range(b) for b in bounds)):
            m = monomial_mul(u, w)
            if not _in_monomial_ideal(m, lt_j):
                found.add(m)
    return StaircaseDiff(tuple(lt_j), tuple(lt_u), len(found), tuple(sorted(found, reverse=True)))


def length_quotient(pair: QuotientPair) -> Length:
    """dim_k U/J (유한하지 않으면 INFINITE)"""
    return staircase_diff(leading_monomial_ideal(pair.U), leading_monomial_ideal(pair.J)).count


def _check_max_ideal(max_ideal: Ideal) -> None:
    ring = max_ideal.ring
    covered = set()
    for g in max_ideal.generators:
        if not (g.is_monomial() and sum(g.leading_monomial()) == 1):
            raise PreconditionError(f"극대 아이디얼의 생성원 {g} 는 변수여야 합니다")
        covered.add(g.leading_monomial().index(1))
    if len(covered) != ring.nvars:
        raise PreconditionError("극대 아이디얼은 환의 모든 변수를 포함해야 합니다")


def h0_submodule_steps(pair: QuotientPair, max_ideal: Ideal) -> Tuple[Ideal, int]:
    """H^0_m(U/J) = ((J : m^∞) ∩ U)/J 의 분자 U' 와 포화 단계 수"""
    _check_max_ideal(max_ideal)
    if max_ideal.ring != pair.ring:
        raise PreconditionError("극대 아이디얼의 환이 다릅니다")
    sat, steps = saturation_steps_ideal(pair.J, max_ideal)
    if pair.U.is_unit():
        return sat, steps
    return intersect(sat, pair.U), steps


def h0_submodule(pair: QuotientPair, max_ideal: Ideal) -> Ideal:
    return h0_submodule_steps(pair, max_ideal)[0]


def h0_length(U: Ideal, J: Ideal, max_ideal: Ideal) -> int:
    """len H^0_m(U/J) (구성상 항상 유한)"""
    numerator = h0_submodule(QuotientPair(U, J), max_ideal)
    length = length_quotient(QuotientPair(numerator, J))
    if length == INFINITE:
        raise PreconditionError("H^0_m 의 길이가 유한하지 않습니다 (극대 아이디얼을 확인하세요)")
    return length


# ---------------------------------------------------------------------------
# 상대 중복도
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RjjRow:
    q: int
    length: int
    normalized: Fraction


def rjj_estimate(
    j_gens: Sequence[Polynomial],
    i_gens: Sequence[Polynomial],
    max_ideal: Ideal,
    d: int,
    q_list: Sequence[int],
    relations: Sequence[Polynomial] = (),
    budget: Optional[float] = None,
    known: Optional[Mapping[int, int]] = None,
) -> List[RjjRow]:
    """
    각 q 에 대해 len H^0_m(I^[q]/J^[q]) 와 그 값 / q^d 를 계산합니다.
    relations 는 초곡면 R = A/(relations) 에서 작업할 때 두 괄호 거듭제곱 모두에 더해집니다.
    budget(초)을 넘기면 남은 q 는 계산하지 않습니다.
    known 은 호출자가 이미 구한 길이 (q -> 길이) 로, 해당 q 는 다시 계산하지 않습니다.
    """
    ring = max_ideal.ring
    p = ring.characteristic
    if d < 1:
        raise PreconditionError(f"d={d} 는 1 이상이어야 합니다")
    for q in q_list:
        if not is_power_of(q, p):
            raise InvalidBracketPowerError(f"q={q} 는 표수 {p} 의 거듭제곱이 아닙니다")
    J = Ideal(ring, j_gens)
    I = Ideal(ring, i_gens)
    rel = Ideal(ring, relations)
    rows = []
    started = time.monotonic()
    for q in sorted(q_list):
        if budget and rows and time.monotonic() - started > budget:
            logger.warning("시간 예산 %.0fs 초과: q >= %d 는 건너뜁니다", budget, q)
            break
        if known and q in known:
            length = known[q]
        else:
            Jq = ideal_sum(frobenius_power(J, q), rel)
            Iq = ideal_sum(frobenius_power(I, q), rel)
            length = h0_length(Iq, Jq, max_ideal)
        rows.append(RjjRow(q, length, Fraction(length, q ** d)))
        logger.info("rjj q=%d: length=%d", q, length)
    return rows


# ---------------------------------------------------------------------------
# 결합 소 아이디얼 증인
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AssWitness:
    colon: Ideal
    matches: bool


def ass_witness(J: Ideal, z: Polynomial, candidate: Ideal) -> AssWitness:
    """(J : z) 와 그것이 candidate 와 같은지"""
    if z.is_zero():
        raise PreconditionError("증인 z 는 0 이 아니어야 합니다")
    colon = colon_element(J, z)
    return AssWitness(colon, ideal_equal(colon, candidate))


def witness_ring(p: int) -> RingSpec:
    """C = F_p(s)[x, y], lex x > y"""
    return RingSpec.create(p, ("x", "y"), "lex", parameter="s")


def _check_odd_prime_power(p: int, q: int) -> None:
    if p % 2 == 0:
        raise PreconditionError(f"p={p} 는 홀수 소수여야 합니다")
    if not is_power_of(q, p):
        raise InvalidBracketPowerError(f"q={q} 는 {p} 의 거듭제곱이 아닙니다")


def minprime_witness(p: int, q: int) -> bool:
    """
    x^q y^((p-1)q) ∉ c = (x^(pq), y^(pq), xy(x-y)) C 이면 True.
    (x, y) ∈ Ass(I^[q]/J^[q]) 의 국소화 논증에서 계산 가능한 핵심 부분입니다.
    """
    _check_odd_prime_power(p, q)
    C = witness_ring(p)
    x, y = C.gens()
    c = Ideal(C, [x ** (p * q), y ** (p * q), x * y * (x - y)])
    return not membership(x ** q * y ** ((p - 1) * q), c)


def minprime_witness_full(p: int, q: int) -> bool:
    """같은 원소가 (x^(pq), y^(pq), g) C 에도 속하지 않으면 True (교차 검증)"""
    _check_odd_prime_power(p, q)
    C = witness_ring(p)
    x, y = C.gens()
    g = C.poly("x*y*(x - y)*(x + y - s*y)")
    full = Ideal(C, [x ** (p * q), y ** (p * q), g])
    return not membership(x ** q * y ** ((p - 1) * q), full)
