"""
S-다항식 인증서 모음

F (a 의 Gröbner 기저) 에 대해서는 짧은 닫힌 형태가 있는 쌍만 담습니다.
G (e 의 Gröbner 기저) 는 S(G_0, G_k) 전부를 담으며, S(x^n, g) 는 x^n 의 계수를 -xy 로 씁니다.
모든 인증서는 전역 부호 ±1 까지 확인합니다.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.errors import InvalidParamsError
from ..core.groebner import (
    SpolyCertificate,
    check_certificate_up_to_sign,
    divide,
    format_certificate,
    is_groebner,
    s_polynomial,
)
from ..core.polyring import Polynomial, RingSpec
from .objects import ConstructionObjects, build_construction_objects
from .params import ConstructionParams
from .report import VerificationReport

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

# x^n 의 계수 부호를 -xy 로 바로잡은 G 인증서 쌍
CORRECTED_G_PAIRS = frozenset({(0, 1)})


def f_certificates(big: RingSpec, n: int) -> Dict[Pair, SpolyCertificate]:
    """F 기저 쌍 (0,1), (0,2), (0,4), (0,5), (0,6), (0,i) 8<=i<=n+4, (2,4), (6,7)"""
    s, x, y = (big.var(v) for v in ("s", "x", "y"))
    one = big.one()
    last = n + 4
    corpus = {
        (0, 1): SpolyCertificate((0, 1), {6: -one}),
        (0, 2): SpolyCertificate((0, 2), {0: x * y ** 3, 5: one}),
        (0, 4): SpolyCertificate((0, 4), {last: -one}),
        (0, 5): SpolyCertificate((0, 5), {0: s * x * y ** 3 + x ** 3 * y - x * y ** 3, 5: -one}),
        (0, 6): SpolyCertificate((0, 6), {6: -one}),
        (2, 4): SpolyCertificate((2, 4), {4: -(x * y ** 2), last: -(x ** 2 * y) + x * y ** 2}),
        (6, 7): SpolyCertificate((6, 7), {7: y, last: -(x ** 2)}),
    }
    for i in range(8, last + 1):
        corpus[(0, i)] = SpolyCertificate((0, i), {i: -one})
    return dict(sorted(corpus.items()))


def g_certificates(ring: RingSpec, n: int) -> Dict[Pair, SpolyCertificate]:
    """G 기저 쌍 (0, k), 1 <= k <= n-1. G_(n+1-i) = x^i y^(n+2-i)"""
    s, x, y = ring.gens()
    one = ring.one()
    corpus = {
        (0, 1): SpolyCertificate((0, 1), {2: 1 - s, 1: -(x * y)}),
        (0, 2): SpolyCertificate((0, 2), {3: 1 - s, 1: -(y ** 2)}),
        (0, n - 2): SpolyCertificate((0, n - 2), {n - 1: x ** 2 - s * x ** 2, n - 3: -one}),
        (0, n - 1): SpolyCertificate((0, n - 1), {n - 1: x * y - s * x * y, n - 2: -one}),
    }
    for i in range(4, n - 1):
        k = n + 1 - i
        corpus[(0, k)] = SpolyCertificate((0, k), {n + 2 - i: 1 - s, n - i: -one})
    return dict(sorted(corpus.items()))


def parse_pairs(text: str) -> List[Pair]:
    """'0,1;0,2;6,7' -> [(0, 1), (0, 2), (6, 7)]"""
    pairs = []
    for chunk in text.replace(" ", "").split(";"):
        if not chunk:
            continue
        try:
            j, k = (int(v) for v in chunk.split(","))
        except ValueError as exc:
            raise InvalidParamsError(f"인증서 쌍 형식이 올바르지 않습니다: {chunk!r} (예: 0,1)") from exc
        pairs.append((j, k))
    return pairs


def corpus_text(params: ConstructionParams) -> str:
    """인증서 모음을 `S j k : i <poly> ; ...` 형식으로"""
    objs = build_construction_objects(params)
    lines = [f"# F certificates p={params.p} m={params.m} (ring r,s,x,y lex)"]
    lines += [format_certificate(c) for c in f_certificates(objs.big_ring, objs.n).values()]
    lines.append(f"# G certificates p={params.p} m={params.m} (ring s,x,y lex)")
    lines += [format_certificate(c) for c in g_certificates(objs.ring, objs.n).values()]
    return "\n".join(lines) + "\n"


def _sign_label(sign: Optional[int]) -> str:
    return {1: "+1", -1: "-1"}.get(sign, "none")


def _check_family(
    report: VerificationReport,
    label: str,
    basis: Sequence[Polynomial],
    certs: Iterable[SpolyCertificate],
    reduce_to_zero: bool = False,
) -> None:
    for cert in certs:
        j, k = cert.pair
        sign = check_certificate_up_to_sign(basis, cert)
        witness = {"sign": _sign_label(sign)}
        passed = sign is not None
        if reduce_to_zero:
            remainder = divide(s_polynomial(basis[j], basis[k]), basis).remainder
            witness["remainder_zero"] = "true" if remainder.is_zero() else "false"
            passed = passed and remainder.is_zero()
        if label == "G" and cert.pair in CORRECTED_G_PAIRS:
            witness["corrected"] = "x^n cofactor -xy"
        report.add(
            f"{label}.S{j},{k}",
            f"S({label}_{j}, {label}_{k}) 표현 확인",
            "identity up to sign",
            f"sign {witness['sign']}",
            passed,
            **witness,
        )


def check_spoly_certificates(
    params: ConstructionParams,
    pairs: Optional[Sequence[Pair]] = None,
    objects: Optional[ConstructionObjects] = None,
) -> VerificationReport:
    """
    F 인증서 (pairs 가 없으면 전부) 와 G 인증서 전부를 확인합니다.
    G 에 대해서는 S(G_0, G_k) 가 G 로 나누어 0 이 되는지도 봅니다.
    """
    objs = objects or build_construction_objects(params)
    n = objs.n
    f_corpus = f_certificates(objs.big_ring, n)
    if pairs is None:
        chosen = list(f_corpus.values())
    else:
        unknown = [pair for pair in pairs if tuple(pair) not in f_corpus]
        if unknown:
            raise InvalidParamsError(f"인증서 모음에 없는 쌍: {unknown} (가능한 쌍: {sorted(f_corpus)})")
        chosen = [f_corpus[tuple(pair)] for pair in pairs]

    report = VerificationReport("certificates", params.as_dict())
    _check_family(report, "F", objs.F, chosen)
    _check_family(report, "G", objs.G, g_certificates(objs.ring, n).values(), reduce_to_zero=True)
    f_ok = is_groebner(objs.F)
    report.add("F.basis", "F 는 Gröbner 기저", True, f_ok, f_ok, size=len(objs.F))
    report.notes.append("S(x^n, g): 항등식은 x^n 의 계수가 +(xy) 가 아니라 -(xy) 일 때 성립합니다")
    logger.info("인증서 확인 %s: %s", report.param_label(), "통과" if report.passed else "실패")
    return report


def check_certificate_list(
    params: ConstructionParams,
    certs: Sequence[SpolyCertificate],
    basis: str = "F",
    objects: Optional[ConstructionObjects] = None,
) -> VerificationReport:
    """파일에서 읽은 인증서를 F 또는 G 에 대해 확인합니다."""
    if basis not in ("F", "G"):
        raise InvalidParamsError(f"basis 는 F 또는 G 여야 합니다: {basis!r}")
    objs = objects or build_construction_objects(params)
    report = VerificationReport("certificates", params.as_dict())
    _check_family(report, basis, objs.F if basis == "F" else objs.G, certs)
    if not certs:
        report.notes.append("확인할 인증서가 없습니다")
    return report
