"""
Gröbner 기저 - 다변수 나눗셈, S-다항식, Buchberger 알고리즘, 기약 기저, 검증/인증서

S-다항식은 두 입력을 선도계수 1(monic)로 정규화한 뒤 만듭니다.
단항식 순서는 다항식이 속한 RingSpec 에 들어 있습니다.
"""
from __future__ import annotations

import heapq
import logging
import random
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    CertificateError,
    IncompatibleRingError,
    PolynomialParseError,
    PreconditionError,
    UndefinedLeadingTermError,
)
from .polyring import (
    Monomial,
    Polynomial,
    RingSpec,
    _merge,
    format_poly,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    parse_poly,
)

logger = logging.getLogger(__name__)

STRATEGIES = ("normal", "first", "random")


@dataclass(frozen=True)
class DivisionResult:
    """f = Σ quotients[i] * divisors[i] + remainder"""

    quotients: Tuple[Polynomial, ...]
    remainder: Polynomial


@dataclass(frozen=True)
class SpolyCertificate:
    """S(G_j, G_k) = Σ coefficients[i] * G_i 의 표현"""

    pair: Tuple[int, int]
    coefficients: Dict[int, Polynomial] = field(default_factory=dict)

    def negated(self) -> "SpolyCertificate":
        return SpolyCertificate(self.pair, {i: -a for i, a in self.coefficients.items()})

    def dense(self, size: int, ring: RingSpec) -> List[Polynomial]:
        return [self.coefficients.get(i, ring.zero()) for i in range(size)]


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Gröbner 기저. reduced=True 이면 각 원소가 monic 이고 서로 약분되지 않으며
    선도단항식 내림차순으로 정렬되어 있습니다 (이 순서에 대해 유일).
    combinations 가 있으면 elements[i] = Σ combinations[i][t] * generators[t].
    """

    elements: Tuple[Polynomial, ...]
    ring: RingSpec
    reduced: bool = False
    generators: Tuple[Polynomial, ...] = ()
    combinations: Optional[Tuple[Tuple[Polynomial, ...], ...]] = None
    stats: Dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def order(self):
        return self.ring.order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial() for g in self.elements]

    def reduce(self, f: Polynomial) -> DivisionResult:
        return divide(f, self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return divide(f, self.elements).remainder

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


# ---------------------------------------------------------------------------
# S-다항식 / 나눗셈
# ---------------------------------------------------------------------------

def _same_ring(polys: Sequence[Polynomial], ring: Optional[RingSpec] = None) -> Optional[RingSpec]:
    for f in polys:
        if ring is None:
            ring = f.ring
        elif f.ring is not ring and f.ring != ring:
            raise IncompatibleRingError(f"서로 다른 환의 다항식입니다: {ring} / {f.ring}")
    return ring


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) = (L/lm f) * f/lc(f) - (L/lm g) * g/lc(g), L = lcm(lm f, lm g)"""
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise UndefinedLeadingTermError("영다항식의 S-다항식은 정의되지 않습니다")
    ring = f.ring
    F = ring.field
    (mf, cf), (mg, cg) = f.terms[0], g.terms[0]
    lcm = monomial_lcm(mf, mg)
    uf = tuple([a - b for a, b in zip(lcm, mf)])
    ug = tuple([a - b for a, b in zip(lcm, mg)])
    a = f.mul_term(F.inv(cf), uf)
    b = g.mul_term(F.inv(cg), ug)
    # 선도항은 정확히 상쇄됩니다
    return Polynomial._raw(ring, _merge(ring, a.terms[1:], b.terms[1:], True))


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> DivisionResult:
    """
    다변수 나눗셈. 현재 선도항을 나누는 첫 번째 나눗수를 사용합니다.
    나눗수 목록이 비어 있으면 나머지는 f 입니다.
    """
    ring = f.ring
    _same_ring(divisors, ring)
    F = ring.field
    lead = []
    for g in divisors:
        if g.is_zero():
            raise PreconditionError("나눗수에 영다항식이 있습니다")
        m, c = g.terms[0]
        lead.append((m, F.inv(c), g.terms[1:]))
    mul = F.mul
    quots: List[List] = [[] for _ in divisors]
    rem = []
    p = f.terms
    start = 0
    while start < len(p):
        m, c = p[start]
        for i, (lm, inv_lc, tail) in enumerate(lead):
            if monomial_divides(lm, m):
                qm = tuple([a - b for a, b in zip(m, lm)])
                qc = mul(c, inv_lc)
                quots[i].append((qm, qc))
                shifted = tuple([(monomial_mul(tm, qm), mul(qc, tc)) for tm, tc in tail])
                p = _merge(ring, p[start + 1:], shifted, True)
                start = 0
                break
        else:
            rem.append((m, c))
            start += 1
    return DivisionResult(
        tuple(Polynomial._raw(ring, tuple(q)) for q in quots),
        Polynomial._raw(ring, tuple(rem)),
    )


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _combine(ring: RingSpec, parts: Sequence[Tuple[Polynomial, Sequence[Polynomial]]], size: int):
    """Σ c * vec (c 는 다항식) - 추적 모드에서 조합 벡터 계산"""
    out = [ring.zero()] * size
    for c, vec in parts:
        if c.is_zero():
            continue
        for t in range(size):
            if not vec[t].is_zero():
                out[t] = out[t] + c * vec[t]
    return out


class _Run:
    """Buchberger 한 번의 실행 상태"""

    def __init__(self, ring: RingSpec, generators: Sequence[Polynomial], strategy: str,
                 product_criterion: bool, chain_criterion: bool, track: bool, seed: int):
        if strategy not in STRATEGIES:
            raise ValueError(f"알 수 없는 선택 전략: {strategy!r}")
        self.ring = ring
        self.generators = tuple(generators)
        self.strategy = strategy
        self.product_criterion = product_criterion
        self.chain_criterion = chain_criterion
        self.track = track
        self.rng = random.Random(seed)
        self.basis: List[Polynomial] = []
        self.lms: List[Monomial] = []
        self.combos: List[List[Polynomial]] = []
        # 대기 중인 쌍. queue 에는 이미 처리되거나 지워진 쌍이 남아 있을 수 있습니다
        self.pairs: Dict[Tuple[int, int], Monomial] = {}
        self.queue: List[Tuple[tuple, Tuple[int, int]]] = []
        self.stats = {"pairs": 0, "product": 0, "chain": 0, "zero": 0, "added": 0}

    def _push(self, i: int, j: int, lcm: Monomial) -> None:
        self.pairs[(i, j)] = lcm
        if self.strategy == "normal":
            heapq.heappush(self.queue, ((sum(lcm), self.ring.key(lcm), j, i), (i, j)))
        elif self.strategy == "first":
            heapq.heappush(self.queue, ((j, i), (i, j)))

    def _drop_redundant(self, lm: Monomial) -> None:
        """
        새 선도단항식 lm 이 lcm(i, j) 를 나누고 lcm(i, new), lcm(j, new) 가 모두
        lcm(i, j) 와 다르면 (i, j) 는 (i, new), (j, new) 로 대체됩니다.
        """
        for (i, j), lcm in list(self.pairs.items()):
            if (
                monomial_divides(lm, lcm)
                and monomial_lcm(self.lms[i], lm) != lcm
                and monomial_lcm(self.lms[j], lm) != lcm
            ):
                del self.pairs[(i, j)]
                self.stats["chain"] += 1

    def add(self, poly: Polynomial, combo: Optional[List[Polynomial]]):
        F = self.ring.field
        inv = F.inv(poly.terms[0][1])
        poly = poly.scale(inv)
        n = len(self.basis)
        lm = poly.terms[0][0]
        if self.chain_criterion:
            self._drop_redundant(lm)
        for k in range(n):
            self._push(k, n, monomial_lcm(self.lms[k], lm))
        self.basis.append(poly)
        self.lms.append(lm)
        if self.track:
            self.combos.append([c.scale(inv) for c in combo])

    def select(self) -> Tuple[int, int]:
        if self.strategy == "random":
            return self.rng.choice(sorted(self.pairs))
        while True:
            _, ij = heapq.heappop(self.queue)
            if ij in self.pairs:
                return ij

    def chain(self, i: int, j: int, lcm: Monomial) -> bool:
        """lm_k | lcm(i, j) 이고 (i,k), (j,k) 가 이미 처리된 k 가 있으면 생략 가능"""
        for k, lm in enumerate(self.lms):
            if k == i or k == j or not monomial_divides(lm, lcm):
                continue
            if (min(i, k), max(i, k)) in self.pairs or (min(j, k), max(j, k)) in self.pairs:
                continue
            return True
        return False

    def run(self) -> None:
        ring = self.ring
        size = len(self.generators)
        for t, g in enumerate(self.generators):
            combo = None
            if self.track:
                combo = [ring.one() if u == t else ring.zero() for u in range(size)]
            self.add(g, combo)
        while self.pairs:
            i, j = self.select()
            lcm = self.pairs.pop((i, j))
            self.stats["pairs"] += 1
            if self.product_criterion and _coprime(self.lms[i], self.lms[j]):
                self.stats["product"] += 1
                continue
            if self.chain_criterion and self.chain(i, j, lcm):
                self.stats["chain"] += 1
                continue
            s = s_polynomial(self.basis[i], self.basis[j])
            result = divide(s, self.basis)
            r = result.remainder
            if r.is_zero():
                self.stats["zero"] += 1
                continue
            combo = None
            if self.track:
                ui = ring.monomial(tuple(a - b for a, b in zip(lcm, self.lms[i])))
                uj = ring.monomial(tuple(a - b for a, b in zip(lcm, self.lms[j])))
                parts = [(ui, self.combos[i]), (-uj, self.combos[j])]
                parts += [(-q, self.combos[k]) for k, q in enumerate(result.quotients)]
                combo = _combine(ring, parts, size)
            self.stats["added"] += 1
            self.add(r, combo)
        logger.debug("Buchberger 완료: %s (기저 %d개)", self.stats, len(self.basis))


def buchberger(
    generators: Sequence[Polynomial],
    *,
    ring: Optional[RingSpec] = None,
    strategy: str = "normal",
    product_criterion: bool = True,
    chain_criterion: bool = True,
    track: bool = False,
    seed: int = 0,
    reduce: bool = True,
) -> GroebnerBasis:
    """
    Buchberger 알고리즘. 영 생성원은 버리고, 빈 입력은 영 아이디얼의 빈 기저입니다.
    track=True 이면 각 원소를 입력 생성원의 조합으로 기록합니다.
    """
    ring = _same_ring(generators, ring)
    if ring is None:
        raise PreconditionError("빈 생성원 목록에는 ring 인자가 필요합니다")
    gens = tuple(g for g in generators if not g.is_zero())
    run = _Run(ring, gens, strategy, product_criterion, chain_criterion, track, seed)
    run.run()
    gb = GroebnerBasis(
        tuple(run.basis),
        ring,
        reduced=False,
        generators=gens,
        combinations=tuple(tuple(c) for c in run.combos) if track else None,
        stats=dict(run.stats),
    )
    return reduce_basis(gb) if reduce else gb


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """S-다항식 성질을 만족하는 기저를 유일한 기약 Gröbner 기저로"""
    ring = gb.ring
    key = ring.key
    track = gb.combinations is not None
    size = len(gb.generators)
    items = [(g, gb.combinations[i] if track else None) for i, g in enumerate(gb.elements) if g]

    # 최소화: 선도단항식이 작은 것부터, 이미 남긴 것으로 나뉘면 버림
    items.sort(key=lambda it: key(it[0].leading_monomial()))
    minimal = []
    for g, combo in items:
        lm = g.leading_monomial()
        if all(not monomial_divides(h.leading_monomial(), lm) for h, _ in minimal):
            minimal.append((g, combo))

    reduced = []
    for i, (g, combo) in enumerate(minimal):
        others = [h for k, (h, _) in enumerate(minimal) if k != i]
        result = divide(g, others)
        r = result.remainder
        inv = ring.field.inv(r.leading_coefficient())
        new_combo = None
        if track:
            other_combos = [c for k, (_, c) in enumerate(minimal) if k != i]
            parts = [(ring.one(), combo)] + [(-q, c) for q, c in zip(result.quotients, other_combos)]
            new_combo = tuple(c.scale(inv) for c in _combine(ring, parts, size))
        reduced.append((r.scale(inv), new_combo))

    reduced.sort(key=lambda it: key(it[0].leading_monomial()), reverse=True)
    return GroebnerBasis(
        tuple(g for g, _ in reduced),
        ring,
        reduced=True,
        generators=gb.generators,
        combinations=tuple(c for _, c in reduced) if track else None,
        stats=dict(gb.stats),
    )


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """모든 S-다항식이 G 로 나누어 나머지 0 이면 True"""
    G = list(G)
    if not G:
        return True
    _same_ring(G)
    if any(g.is_zero() for g in G):
        raise PreconditionError("is_groebner 의 원소는 0이 아니어야 합니다")
    for j in range(len(G)):
        for k in range(j + 1, len(G)):
            if G[j].is_monomial() and G[k].is_monomial():
                continue
            if not divide(s_polynomial(G[j], G[k]), G).remainder.is_zero():
                logger.debug("S(%d, %d) 의 나머지가 0이 아닙니다", j, k)
                return False
    return True


# ---------------------------------------------------------------------------
# 인증서
# ---------------------------------------------------------------------------

def check_certificate(G: Sequence[Polynomial], cert: SpolyCertificate) -> bool:
    """
    S(G_j, G_k) = Σ a_i G_i 가 정확히 성립하고, 0 이 아닌 모든 a_i 에 대해
    lm(S) >= lm(a_i G_i) 이면 True
    """
    n = len(G)
    j, k = cert.pair
    indices = [j, k] + list(cert.coefficients)
    if any(not (0 <= i < n) for i in indices):
        raise CertificateError(f"인증서 인덱스가 범위를 벗어납니다: {cert.pair} / {sorted(cert.coefficients)} (n={n})")
    ring = _same_ring(G)
    s = s_polynomial(G[j], G[k])
    total = ring.zero()
    products = []
    for i, a in sorted(cert.coefficients.items()):
        if a.is_zero():
            continue
        prod = a * G[i]
        products.append(prod)
        total = total + prod
    if total != s:
        return False
    if not products:
        return True
    if s.is_zero():
        return False
    key = ring.key
    lm_s = key(s.leading_monomial())
    return all(key(prod.leading_monomial()) <= lm_s for prod in products)


def check_certificate_up_to_sign(G: Sequence[Polynomial], cert: SpolyCertificate) -> Optional[int]:
    """인증서가 그대로 성립하면 +1, 부호를 뒤집어 성립하면 -1, 아니면 None"""
    if check_certificate(G, cert):
        return 1
    if check_certificate(G, cert.negated()):
        return -1
    return None


_CERT_HEAD = re.compile(r"\s*S\s+(\d+)\s+(\d+)\s*:(.*)$")


def parse_certificate(line: str, ring: RingSpec) -> SpolyCertificate:
    """`S j k : i1 <poly> ; i2 <poly> ; ...` 형식의 한 줄을 파싱"""
    m = _CERT_HEAD.match(line)
    if not m:
        raise PolynomialParseError("인증서는 'S j k :' 로 시작해야 합니다", 0)
    j, k = int(m.group(1)), int(m.group(2))
    body = m.group(3)
    offset = m.start(3)
    coefficients: Dict[int, Polynomial] = {}
    for chunk in body.split(";"):
        if chunk.strip():
            im = re.match(r"\s*(\d+)\s+(.*\S)\s*$", chunk)
            if not im:
                raise PolynomialParseError("항목은 '<index> <poly>' 형식이어야 합니다", offset)
            try:
                poly = parse_poly(im.group(2), ring)
            except PolynomialParseError as exc:
                raise PolynomialParseError(exc.message, offset + im.start(2) + exc.position) from exc
            i = int(im.group(1))
            coefficients[i] = coefficients[i] + poly if i in coefficients else poly
        offset += len(chunk) + 1
    return SpolyCertificate((j, k), coefficients)


def format_certificate(cert: SpolyCertificate) -> str:
    j, k = cert.pair
    items = [f"{i} {format_poly(a)}" for i, a in sorted(cert.coefficients.items()) if a]
    return f"S {j} {k} : " + " ; ".join(items) if items else f"S {j} {k} :"
