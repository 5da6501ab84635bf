"""
아이디얼 연산 - 소속 판정, 합/곱/거듭제곱, Frobenius 괄호 거듭제곱,
소거, 교집합, 몫(colon), 포화, 상등

몫 아이디얼은 syzygy 대신 교집합 (r 트릭) 후 u 로 정확히 나누는 방식으로 계산합니다:
  a = r I B + (1 - r) u B,  a ∩ A = I ∩ (u),  (I : u) = (I ∩ (u)) / u
"""
from __future__ import annotations

import logging
import threading
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import (
    IncompatibleRingError,
    InternalConsistencyError,
    InvalidBracketPowerError,
    PreconditionError,
    UnsupportedEliminationError,
)
from .groebner import STRATEGIES, GroebnerBasis, buchberger, divide
from .polyring import Polynomial, RingSpec, parse_poly

logger = logging.getLogger(__name__)

_default_strategy = "normal"


def set_default_strategy(name: str) -> None:
    """Ideal 이 Gröbner 기저를 계산할 때 쓰는 기본 선택 전략"""
    global _default_strategy
    if name not in STRATEGIES:
        raise ValueError(f"알 수 없는 선택 전략: {name!r}")
    _default_strategy = name


class Ideal:
    """
    생성원 목록 + 지연 계산/캐시되는 기약 Gröbner 기저.
    영 생성원은 버리며, 영 아이디얼은 빈 목록입니다.
    """

    def __init__(self, ring: RingSpec, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring is not ring and g.ring != ring:
                raise IncompatibleRingError(f"생성원 {g} 의 환이 {ring} 이 아닙니다")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb: Optional[GroebnerBasis] = None
        self._tracked: Optional[GroebnerBasis] = None
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, ring: RingSpec, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [parse_poly(t, ring) for t in texts])

    # -- Gröbner 기저 캐시 -----------------------------------------------------

    def groebner_basis(self) -> GroebnerBasis:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(self.generators, ring=self.ring, strategy=_default_strategy)
        return self._gb

    def tracked_basis(self) -> GroebnerBasis:
        """조합 인증서가 붙은 기약 Gröbner 기저 (소속 인증서용)"""
        if self._tracked is None:
            with self._lock:
                if self._tracked is None:
                    self._tracked = buchberger(
                        self.generators, ring=self.ring, strategy=_default_strategy, track=True
                    )
                    if self._gb is None:
                        self._gb = self._tracked
        return self._tracked

    def reduced_gb(self) -> Tuple[Polynomial, ...]:
        return self.groebner_basis().elements

    # -- 질의 ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        gb = self.reduced_gb()
        return len(gb) == 1 and gb[0].is_constant()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.groebner_basis().normal_form(f)

    def __contains__(self, f: Polynomial) -> bool:
        return membership(f, self)

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power(self, n)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def unit_ideal(ring: RingSpec) -> Ideal:
    return Ideal(ring, [ring.one()])


def maximal_ideal(ring: RingSpec) -> Ideal:
    """모든 변수로 생성된 극대 아이디얼"""
    return Ideal(ring, ring.gens())


def _check_same(I: Ideal, J: Ideal) -> RingSpec:
    if I.ring is not J.ring and I.ring != J.ring:
        raise IncompatibleRingError(f"서로 다른 환의 아이디얼입니다: {I.ring} / {J.ring}")
    return I.ring


def _dedupe(polys: Iterable[Polynomial]) -> List[Polynomial]:
    seen = set()
    out = []
    for f in polys:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# 소속 / 상등 / 포함
# ---------------------------------------------------------------------------

def membership(f: Polynomial, I: Ideal) -> bool:
    """f ∈ I  ⇔  기약 Gröbner 기저에 대한 나머지가 0"""
    if f.ring is not I.ring and f.ring != I.ring:
        raise IncompatibleRingError(f"{f} 와 아이디얼의 환이 다릅니다")
    return I.groebner_basis().contains(f)


def membership_certificate(f: Polynomial, I: Ideal) -> Optional[Tuple[Polynomial, ...]]:
    """
    f ∈ I 이면 f = Σ c_i * I.generators[i] 를 만족하는 (c_i) 를, 아니면 None.
    나눗셈 몫과 Gröbner 기저의 조합 인증서를 합성합니다.
    """
    if f.ring is not I.ring and f.ring != I.ring:
        raise IncompatibleRingError(f"{f} 와 아이디얼의 환이 다릅니다")
    ring = I.ring
    gb = I.tracked_basis()
    result = gb.reduce(f)
    if not result.remainder.is_zero():
        return None
    cofactors = [ring.zero()] * len(I.generators)
    for q, combo in zip(result.quotients, gb.combinations):
        if q.is_zero():
            continue
        for t, c in enumerate(combo):
            if not c.is_zero():
                cofactors[t] = cofactors[t] + q * c
    return tuple(cofactors)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """기약 Gröbner 기저가 정확히 같으면 True"""
    _check_same(I, J)
    return I.reduced_gb() == J.reduced_gb()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J ⊆ I"""
    _check_same(I, J)
    gb = I.groebner_basis()
    return all(gb.contains(g) for g in J.generators)


# ---------------------------------------------------------------------------
# 합 / 곱 / 거듭제곱 / Frobenius
# ---------------------------------------------------------------------------

def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_same(I, J)
    return Ideal(ring, _dedupe(I.generators + J.generators))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    ring = _check_same(I, J)
    return Ideal(ring, _dedupe(f * g for f in I.generators for g in J.generators))


def ideal_power(I: Ideal, n: int) -> Ideal:
    """I^n, I^0 = (1)"""
    if n < 0:
        raise PreconditionError("아이디얼의 거듭제곱 지수는 0 이상이어야 합니다")
    result = unit_ideal(I.ring)
    for _ in range(n):
        result = ideal_product(result, I)
    return result


def is_power_of(q: int, p: int) -> bool:
    """q = p^e (e >= 1)"""
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def frobenius_power(I: Ideal, q: int) -> Ideal:
    """I^[q] = (g^q : g ∈ 생성원)"""
    p = I.ring.characteristic
    if not isinstance(q, int) or not is_power_of(q, p):
        raise InvalidBracketPowerError(f"q={q} 는 표수 {p} 의 거듭제곱(p^e, e>=1)이 아닙니다")
    return Ideal(I.ring, [g.frobenius(q) for g in I.generators])


# ---------------------------------------------------------------------------
# 소거 / 교집합 / 몫 / 포화
# ---------------------------------------------------------------------------

def eliminate(I: Ideal, keep: Sequence[str]) -> Ideal:
    """
    I ∩ k[keep]. 환의 순서는 lex 이고 소거할 변수들이 우선순위의 접두사여야 합니다.
    결과는 keep 변수만 가진 부분환의 아이디얼입니다.
    """
    ring = I.ring
    keep = list(keep)
    sub = ring.subring(keep)
    dropped = [v for v in ring.order.priority if v not in keep]
    if dropped and ring.order.kind != "lex":
        raise UnsupportedEliminationError(f"소거에는 lex 순서가 필요합니다 ({ring.order})")
    if set(ring.order.priority[: len(dropped)]) != set(dropped):
        raise UnsupportedEliminationError(
            f"소거 변수 {dropped} 가 우선순위 {ring.order.priority} 의 접두사가 아닙니다"
        )
    kept = [g for g in I.reduced_gb() if not any(g.involves(v) for v in dropped)]
    return Ideal(sub, [g.to_ring(sub) for g in kept])


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J = (r I + (1 - r) J) ∩ A, r 은 최고 우선순위의 새 lex 변수"""
    ring = _check_same(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    big, r_name = ring.adjoin_variable("r")
    r = big.var(r_name)
    one_minus_r = big.one() - r
    a = Ideal(
        big,
        [r * g.to_ring(big) for g in I.generators]
        + [one_minus_r * h.to_ring(big) for h in J.generators],
    )
    elim = eliminate(a, ring.variables)
    return Ideal(ring, [g.to_ring(ring) for g in elim.generators])


def colon_element(I: Ideal, u: Polynomial) -> Ideal:
    """(I : u) = {a : a u ∈ I}"""
    ring = I.ring
    if u.ring is not ring and u.ring != ring:
        raise IncompatibleRingError(f"{u} 와 아이디얼의 환이 다릅니다")
    if u.is_zero():
        raise PreconditionError("영다항식에 대한 몫 아이디얼은 계산하지 않습니다")
    if u.is_constant() or I.is_zero():
        return I
    inter = intersect(I, Ideal(ring, [u]))
    quotients = []
    for g in inter.generators:
        result = divide(g, [u])
        if not result.remainder.is_zero():
            raise InternalConsistencyError(f"I ∩ (u) 의 생성원 {g} 가 u = {u} 로 나누어떨어지지 않습니다")
        quotients.append(result.quotients[0])
    return Ideal(ring, quotients)


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = ∩_j (I : g_j). J = 0 이면 관례상 단위 아이디얼"""
    ring = _check_same(I, J)
    if J.is_zero():
        logger.warning("영 아이디얼에 대한 몫: 단위 아이디얼을 반환합니다")
        return unit_ideal(ring)
    result: Optional[Ideal] = None
    for g in J.generators:
        c = colon_element(I, g)
        result = c if result is None else intersect(result, c)
    return result


def saturation_steps(I: Ideal, u: Polynomial) -> Tuple[Ideal, int]:
    """(I : u^∞) 와 수렴까지 계산한 몫 연산 횟수"""
    current, steps = I, 0
    while True:
        nxt = colon_element(current, u)
        steps += 1
        if ideal_equal(nxt, current):
            logger.debug("포화 수렴: %d 단계", steps)
            return current, steps
        current = nxt


def saturation_steps_ideal(I: Ideal, J: Ideal) -> Tuple[Ideal, int]:
    """(I : J^∞) 와 몫 연산 횟수"""
    if J.is_zero():
        return unit_ideal(I.ring), 0
    current, steps = I, 0
    while True:
        nxt = colon_ideal(current, J)
        steps += 1
        if ideal_equal(nxt, current):
            logger.debug("포화 수렴: %d 단계", steps)
            return current, steps
        current = nxt


def saturate(I: Ideal, u: Polynomial) -> Ideal:
    return saturation_steps(I, u)[0]


def saturate_ideal(I: Ideal, J: Ideal) -> Ideal:
    return saturation_steps_ideal(I, J)[0]
