"""
gbverify MCP Server
Gröbner 기저 커널과 검증 하네스를 MCP 도구로 노출합니다.
"""
import asyncio
from typing import List, Optional

from fastmcp import FastMCP

from .config import load_settings, setup_logging
from .core.idealops import Ideal
from .core.polyring import format_poly, parse_poly
from .services.service_manager import ServiceManager
from .verify import parse_pairs

# FastMCP 서버 초기화
mcp = FastMCP("gbverify", dependencies=["python-dotenv"])

# 전역 서비스 매니저
service_manager: Optional[ServiceManager] = None


async def _services() -> ServiceManager:
    global service_manager
    if not service_manager:
        service_manager = ServiceManager()
        await service_manager.initialize()
    return service_manager


def _ideal(algebra, ring, generators: List[str]) -> Ideal:
    return algebra.parse_ideal_text("\n".join(generators), ring)


def _polys(polys) -> List[str]:
    return [format_poly(f) for f in polys]


@mcp.tool()
async def groebner_basis(ring: dict, generators: List[str]) -> dict:
    """
    기약 Gröbner 기저를 계산합니다.

    Args:
        ring: {"characteristic": 3, "parameters": [], "variables": ["s", "x", "y"], "order": "lex"}
        generators: 생성원 다항식 문자열 목록

    Returns:
        dict: {"success": bool, "basis": [str], "count": int}
    """
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        I = _ideal(sm.algebra, R, generators)
        gb = await asyncio.to_thread(sm.algebra.groebner_basis, I)
        return {"success": True, "basis": _polys(gb.elements), "count": len(gb)}
    except Exception as e:
        return {"success": False, "basis": [], "count": 0, "error": str(e)}


@mcp.tool()
async def normal_form(ring: dict, generators: List[str], poly: str) -> dict:
    """poly 를 아이디얼의 Gröbner 기저로 나눈 나머지"""
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        I = _ideal(sm.algebra, R, generators)
        r = await asyncio.to_thread(sm.algebra.normal_form, I, parse_poly(poly, R))
        return {"success": True, "remainder": format_poly(r)}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def ideal_membership(ring: dict, generators: List[str], poly: str, certificate: bool = False) -> dict:
    """
    poly 가 아이디얼에 속하는지 판정합니다.

    Returns:
        dict: {"success": bool, "member": bool, "cofactors": [str] | None}
            cofactors[i] 는 0 이 아닌 생성원들 중 i 번째의 계수입니다.
    """
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        I = _ideal(sm.algebra, R, generators)
        member, cofactors = await asyncio.to_thread(sm.algebra.membership, I, parse_poly(poly, R), certificate)
        return {
            "success": True,
            "member": member,
            "cofactors": _polys(cofactors) if cofactors is not None else None,
        }
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def ideal_colon(ring: dict, generators: List[str], by: List[str]) -> dict:
    """(I : (by)) 의 기약 Gröbner 기저"""
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        result = await asyncio.to_thread(sm.algebra.colon, _ideal(sm.algebra, R, generators), _ideal(sm.algebra, R, by))
        return {"success": True, "basis": _polys(result.reduced_gb())}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def ideal_saturation(ring: dict, generators: List[str], by: List[str]) -> dict:
    """(I : (by)^∞) 의 기약 Gröbner 기저와 반복 횟수"""
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        result, steps = await asyncio.to_thread(
            sm.algebra.saturation, _ideal(sm.algebra, R, generators), _ideal(sm.algebra, R, by)
        )
        return {"success": True, "basis": _polys(result.reduced_gb()), "steps": steps}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def ideal_intersection(ring: dict, generators_a: List[str], generators_b: List[str]) -> dict:
    """두 아이디얼의 교집합"""
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        result = await asyncio.to_thread(
            sm.algebra.intersection, _ideal(sm.algebra, R, generators_a), _ideal(sm.algebra, R, generators_b)
        )
        return {"success": True, "basis": _polys(result.reduced_gb())}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def frobenius_power(ring: dict, generators: List[str], q: int) -> dict:
    """I^[q] 의 생성원 (q 는 표수의 거듭제곱)"""
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        result = sm.algebra.frobenius(_ideal(sm.algebra, R, generators), q)
        return {"success": True, "generators": _polys(result.generators)}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def h0_length(
    ring: dict, generators_u: List[str], generators_j: List[str], max_ideal: Optional[List[str]] = None
) -> dict:
    """len H^0_m(U/J). max_ideal 을 생략하면 모든 변수로 생성된 아이디얼"""
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        m = _ideal(sm.algebra, R, max_ideal) if max_ideal else None
        length = await asyncio.to_thread(
            sm.algebra.h0_length, _ideal(sm.algebra, R, generators_u), _ideal(sm.algebra, R, generators_j), m
        )
        return {"success": True, "length": length}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def relative_multiplicity(
    ring: dict,
    j_generators: List[str],
    i_generators: List[str],
    d: int,
    q_list: List[int],
    relations: Optional[List[str]] = None,
) -> dict:
    """
    q 마다 len H^0_m(I^[q]/J^[q]) 와 그 값 / q^d 를 계산합니다 (유한 q 값만).

    Returns:
        dict: {"success": bool, "rows": [{"q": int, "length": int, "normalized": "a/b"}]}
    """
    try:
        sm = await _services()
        R = sm.algebra.ring_from_mapping(ring)
        rel = _ideal(sm.algebra, R, relations) if relations else None
        rows = await asyncio.to_thread(
            sm.algebra.rjj,
            _ideal(sm.algebra, R, j_generators),
            _ideal(sm.algebra, R, i_generators),
            d,
            q_list,
            None,
            rel,
            sm.settings.budget,
        )
        return {
            "success": True,
            "rows": [{"q": r.q, "length": r.length, "normalized": f"{r.normalized.numerator}/{r.normalized.denominator}"}
                     for r in rows],
            "truncated": len(rows) < len(q_list),
        }
    except Exception as e:
        return {"success": False, "rows": [], "error": str(e)}


@mcp.tool()
async def verify_construction(p: int, m: int) -> dict:
    """Construction 항목 (1)~(7) 과 G/F 기저 검증"""
    try:
        sm = await _services()
        reports = await asyncio.to_thread(sm.verification.run_construction, [(p, m)])
        return {"success": True, "report": reports[0].to_dict()}
    except Exception as e:
        return {"success": False, "error": str(e)}


@mcp.tool()
async def verify_example(p: int, e: int) -> dict:
    """Example (q = p^e) 검증"""
    try:
        sm = await _services()
        reports = await asyncio.to_thread(sm.verification.run_example, [(p, e)])
        return {"success": True, "report": reports[0].to_dict()}
    except Exception as exc:
        return {"success": False, "error": str(exc)}


@mcp.tool()
async def check_certificates(p: int, m: int, pairs: Optional[str] = None) -> dict:
    """S-다항식 인증서 확인. pairs 예: "0,1;0,2" (생략하면 전부)"""
    try:
        sm = await _services()
        chosen = parse_pairs(pairs) if pairs else None
        report = await asyncio.to_thread(sm.verification.run_certificates, p, m, chosen)
        return {"success": True, "report": report.to_dict()}
    except Exception as e:
        return {"success": False, "error": str(e)}


def main() -> None:
    setup_logging(load_settings().log_level)
    mcp.run()


if __name__ == "__main__":
    main()
