"""
Example 검증 - R = A/(g), J = (x^p, y^p), I = (x, y)^p, q = p^e, n = pq

R 의 아이디얼은 g 를 더한 A 의 아이디얼로 다룹니다:
  J^[q] = (x^pq, y^pq, g) = e,  I^[q] = (x^q, y^q)^p + (g),  z = f
"""
from __future__ import annotations

import logging
import time
from fractions import Fraction
from typing import Optional

from ..core.cohomology import ass_witness, h0_length, minprime_witness, minprime_witness_full, rjj_estimate
from ..core.idealops import Ideal, ideal_power, ideal_sum, membership
from .construction import verify_construction
from .objects import build_construction_objects
from .params import ExampleParams
from .report import VerificationReport

logger = logging.getLogger(__name__)

RJJ_DIMENSION = 2


def verify_example(params: ExampleParams, budget: Optional[float] = None) -> VerificationReport:
    """budget: rjj 표의 q 격자에 쓸 시간(초). 넘기면 나머지 q 는 건너뜁니다."""
    p, q, n = params.p, params.q, params.n
    objs = build_construction_objects(params.construction())
    A = objs.ring
    x, y = A.var("x"), A.var("y")
    g, z, m = objs.g, objs.f, objs.max_ideal
    Jq = objs.e
    Iq = ideal_sum(ideal_power(Ideal(A, [x ** q, y ** q]), p), Ideal(A, [g]))
    report = VerificationReport("example", params.as_dict())
    started = time.perf_counter()

    # (a) Construction 조건과 항목들
    sub = verify_construction(params.construction(), objs)
    report.add("a", f"Construction (p={p}, m={params.m_param}) 전부 통과", "pass",
               "pass" if sub.passed else "fail", sub.passed,
               claims=len(sub.claims), failed=",".join(sub.failed_claims()) or "none")

    # (b) z ∉ J^[q]
    in_j = membership(z, Jq)
    report.add("b", "z ∉ J^[q]", False, in_j, not in_j)

    # (c) z ∈ I^[q]
    in_i = membership(z, Iq)
    report.add("c", "z ∈ I^[q]", True, in_i, in_i)

    # (c') 단항식별 경로: x^j y^(pq+1-j) ∈ I^[q], 2 <= j <= pq-1
    monos = [x ** j * y ** (n + 1 - j) for j in range(2, n)]
    inside = sum(1 for u in monos if membership(u, Iq))
    report.add("c'", "x^j y^(pq+1-j) ∈ I^[q] (2 <= j <= pq-1)", f"{len(monos)}/{len(monos)}",
               f"{inside}/{len(monos)}", inside == len(monos))

    # (d) (J^[q] : z) = m
    witness = ass_witness(Jq, z, m)
    report.add("d", "(J^[q] : z) = (s, x, y)", True, witness.matches, witness.matches,
               colon_size=len(witness.colon.reduced_gb()))

    # (e) x^q y^((p-1)q) ∉ (x^pq, y^pq, xy(x-y)), (x^pq, y^pq, g) in F_p(s)[x,y]
    outside = minprime_witness(p, q)
    outside_full = minprime_witness_full(p, q)
    report.add("e", "x^q y^((p-1)q) ∉ c, (x^pq, y^pq, g) (F_p(s)[x,y])", "True/True",
               f"{outside}/{outside_full}", outside and outside_full)

    # m 과 (x, y) 가 같은 q 에서 모두 결합 소 아이디얼
    critical = witness.matches and outside
    report.add("critical", "m, (x, y) ∈ Ass(I^[q]/J^[q])", True, critical, critical)

    # (f) len H^0_m(I^[q]/J^[q]) = 1
    length = h0_length(Iq, Jq, m)
    report.add("f", "len H^0_m(I^[q]/J^[q]) = 1", 1, length, length == 1)

    # (g) q = p, ..., p^e 에서 길이 1, 정규화 값 1/q^2. q = p^e 행은 (f) 의 길이를 씁니다
    q_list = [p ** k for k in range(1, params.e + 1)]
    rows = rjj_estimate(
        [x ** p, y ** p],
        [x ** i * y ** (p - i) for i in range(p + 1)],
        m,
        RJJ_DIMENSION,
        q_list,
        relations=[g],
        budget=budget,
        known={q: length},
    )
    table = " ".join(f"({r.q}, {r.length}, {r.normalized})" for r in rows)
    expected = " ".join(f"({qq}, 1, 1/{qq ** RJJ_DIMENSION})" for qq in q_list)
    rows_ok = bool(rows) and all(r.length == 1 and r.normalized == Fraction(1, r.q ** RJJ_DIMENSION) for r in rows)
    report.add("g", "rjj 표: 길이 1, 정규화 값 1/q^2", expected, table, rows_ok,
               computed_rows=len(rows), requested_rows=len(q_list))
    if len(rows) < len(q_list):
        report.notes.append(f"시간 예산으로 q 격자를 {len(rows)}/{len(q_list)} 까지만 계산했습니다")

    report.timings["construction"] = sub.timings.get("total", 0.0)
    report.timings["total"] = time.perf_counter() - started
    logger.info("Example %s: %s (%.2fs)", report.param_label(),
                "통과" if report.passed else f"실패 {report.failed_claims()}", report.timings["total"])
    return report
