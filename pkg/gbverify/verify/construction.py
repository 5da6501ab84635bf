"""
Construction 검증 - 항목 (1)~(7), G 기저, F 기저와 교차 경로 (5'), 포함 관계 점검
"""
from __future__ import annotations

import logging
import time
from typing import Optional

from ..core.cohomology import QuotientPair, h0_submodule, length_quotient
from ..core.errors import InternalConsistencyError
from ..core.groebner import divide, is_groebner
from ..core.idealops import (
    Ideal,
    colon_element,
    eliminate,
    ideal_contains,
    ideal_equal,
    membership,
    saturation_steps,
    saturation_steps_ideal,
    unit_ideal,
)
from ..core.polyring import format_monomial
from .objects import ConstructionObjects, build_construction_objects
from .params import ConstructionParams
from .report import VerificationReport

logger = logging.getLogger(__name__)


def listed_elimination_ideal(objs: ConstructionObjects) -> Ideal:
    """h ∩ (s) = (s y^n, s x^3 y^4 (x,y)^(n-5), s f, s x^n, s g)"""
    A, n = objs.ring, objs.n
    s, x, y = A.gens()
    gens = [s * y ** n, s * objs.f, s * x ** n, s * objs.g]
    gens += [s * x ** (3 + i) * y ** (4 + n - 5 - i) for i in range(n - 4)]
    return Ideal(A, gens)


def f_route_colon(objs: ConstructionObjects) -> Ideal:
    """F 중 선도항에 r 이 없는 원소들 (= h ∩ (s) 의 생성원) 을 s 로 나눈 아이디얼"""
    A = objs.ring
    r_index = objs.big_ring.index["r"]
    s = A.var("s")
    quotients = []
    for u in objs.F:
        if u.leading_monomial()[r_index]:
            continue
        result = divide(u.to_ring(A), [s])
        if not result.remainder.is_zero():
            raise InternalConsistencyError(f"F 원소 {u} 가 s 로 나누어떨어지지 않습니다")
        quotients.append(result.quotients[0])
    return Ideal(A, quotients)


def _flags(*values: bool) -> str:
    return " ".join("true" if v else "false" for v in values)


def _basis_text(I: Ideal) -> str:
    return "(" + ", ".join(str(g) for g in I.reduced_gb()) + ")"


def verify_construction(
    params: ConstructionParams, objects: Optional[ConstructionObjects] = None
) -> VerificationReport:
    objs = objects or build_construction_objects(params)
    A, n = objs.ring, objs.n
    e, h, f, m = objs.e, objs.h, objs.f, objs.max_ideal
    s, x, y = A.gens()
    report = VerificationReport("construction", params.as_dict())
    started = time.perf_counter()

    # (1) b ⊆ e
    members = [u for u in objs.b.generators if membership(u, e)]
    total = len(objs.b.generators)
    report.add("1", "b = (x,y)^(n+2) ⊆ e", f"{total}/{total}", f"{len(members)}/{total}", len(members) == total)

    # (2) sf ∈ e
    sf = membership(s * f, e)
    report.add("2", "sf ∈ e", True, sf, sf)

    # (3) xf, yf ∈ e
    xf, yf = membership(x * f, e), membership(y * f, e)
    report.add("3", "xf, yf ∈ e", "true true", _flags(xf, yf), xf and yf)

    # (4) f ∉ e, 나눗셈 결과 f, (e : f) = m
    f_in = membership(f, e)
    remainder_is_f = divide(f, objs.G).remainder == f
    colon_f = colon_element(e, f)
    colon_is_m = ideal_equal(colon_f, m)
    report.add(
        "4",
        "f ∉ e, divide(f, G) = f, (e : f) = m",
        "false, f, (s, x, y)",
        f"{_flags(f_in)}, {'f' if remainder_is_f else 'other'}, {_basis_text(colon_f)}",
        not f_in and remainder_is_f and colon_is_m,
        leading_term_f=format_monomial(A, f.leading_monomial()),
    )

    # G 는 e 의 Gröbner 기저
    g_ok = is_groebner(objs.G)
    g_gen = ideal_equal(Ideal(A, objs.G), e)
    report.add("G", "G 는 e 의 Gröbner 기저", "true true", _flags(g_ok, g_gen),
               g_ok and g_gen, size=len(objs.G))

    # (5) F 는 a 의 Gröbner 기저, 소거 결과, (h : s) = h
    F_ideal = Ideal(objs.big_ring, objs.F)
    f_gen = ideal_equal(F_ideal, objs.a)
    f_gb = is_groebner(objs.F)
    elim = eliminate(objs.a, A.variables)
    elim_ok = ideal_equal(elim, listed_elimination_ideal(objs))
    colon_s = colon_element(h, s)
    saturated = ideal_equal(colon_s, h)
    report.add(
        "5",
        "(F) = a, F 는 Gröbner 기저, a ∩ A = h ∩ (s), (h : s) = h",
        "true true true true",
        _flags(f_gen, f_gb, elim_ok, saturated),
        f_gen and f_gb and elim_ok and saturated,
        size=len(objs.F),
        elimination_size=len(elim.generators),
    )

    # (5') 두 경로의 (h : s) 비교
    route = f_route_colon(objs)
    cross = ideal_equal(route, colon_s)
    report.add("5'", "(h : s) 를 F 경로로 계산해도 같음", True, cross, cross)

    # 포함 관계 점검
    contained = ideal_contains(h, e)
    differ = not ideal_equal(e, h)
    report.add("sanity", "e ⊆ h, e ≠ h", "true true", _flags(contained, differ),
               contained and differ)

    # (6) e : s^∞ = e : m^∞ = h
    sat_s, steps_s = saturation_steps(e, s)
    sat_m, steps_m = saturation_steps_ideal(e, m)
    six = ideal_equal(sat_s, h) and ideal_equal(sat_m, h)
    report.add("6", "e : s^∞ = e : m^∞ = h", True, six, six, steps_s=steps_s, steps_m=steps_m)

    # (7) H^0_m(A/e) ≅ A/m
    numerator = h0_submodule(QuotientPair(unit_ideal(A), e), m)
    length = length_quotient(QuotientPair(numerator, e))
    seven = ideal_equal(numerator, h) and length == 1
    report.add("7", "H^0_m(A/e) = h/e, 길이 1", "h, 1",
               f"{'h' if ideal_equal(numerator, h) else 'other'}, {length}", seven)

    report.timings["total"] = time.perf_counter() - started
    logger.info("Construction %s: %s (%.2fs)", report.param_label(),
                "통과" if report.passed else f"실패 {report.failed_claims()}", report.timings["total"])
    return report
