"""
대수 서비스 - ring/ideal/인증서 파일 형식과 커널 연산 (CLI 하위 명령과 MCP 도구가 공유)

ring 파일 (`#` 주석, 한 줄에 `key = value`):
    characteristic = 3
    parameters = s          # 비워 두면 F_p, 최대 1개
    variables = s, x, y
    order = lex             # lex | grevlex
    priority = s, x, y      # 선택, 기본값은 variables 순서

ideal 파일: 한 줄에 다항식 하나, `#` 주석과 빈 줄은 무시
인증서 파일: 한 줄에 `S j k : i <poly> ; ...`
"""
import os
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.cohomology import RjjRow, h0_length, rjj_estimate
from ..core.errors import FileFormatError, GbVerifyError, InvalidRingError
from ..core.groebner import GroebnerBasis, SpolyCertificate, parse_certificate
from ..core.idealops import (
    Ideal,
    colon_ideal,
    frobenius_power,
    intersect,
    maximal_ideal,
    membership_certificate,
    saturation_steps_ideal,
)
from ..core.polyring import Polynomial, RingSpec, format_poly, parse_poly
from .base_service import BaseService

RING_KEYS = ("characteristic", "parameters", "variables", "order", "priority")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _names(value: Any) -> List[str]:
    if value is None:
        return []
    if isinstance(value, str):
        return [v.strip() for v in value.split(",") if v.strip()]
    return [str(v).strip() for v in value]


class AlgebraService(BaseService):
    """파일 입출력과 아이디얼 연산"""

    def __init__(self):
        super().__init__("algebra")

    # -- ring ------------------------------------------------------------------

    def ring_from_mapping(self, data: Mapping[str, Any], path: str = "") -> RingSpec:
        """ring 파일과 같은 키의 매핑 -> RingSpec"""
        unknown = set(data) - set(RING_KEYS)
        if unknown:
            raise FileFormatError(f"알 수 없는 키: {sorted(unknown)}", path)
        for key in ("characteristic", "variables"):
            if key not in data:
                raise FileFormatError(f"필수 키 {key!r} 가 없습니다", path)
        try:
            p = int(data["characteristic"])
        except (TypeError, ValueError) as exc:
            raise FileFormatError(f"characteristic={data['characteristic']!r} 는 정수여야 합니다", path) from exc
        params = _names(data.get("parameters"))
        if len(params) > 1:
            raise FileFormatError(f"계수 파라미터는 최대 1개입니다: {params}", path)
        variables = _names(data["variables"])
        if not variables:
            raise FileFormatError("variables 가 비어 있습니다", path)
        order = str(data.get("order", "lex")).strip()
        priority = _names(data.get("priority")) or None
        try:
            return RingSpec.create(p, variables, order, params[0] if params else None, priority)
        except (InvalidRingError, ValueError) as exc:
            raise FileFormatError(str(exc), path) from exc

    def parse_ring_text(self, text: str, path: str = "") -> RingSpec:
        data: Dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = _strip_comment(raw)
            if not line:
                continue
            if "=" not in line:
                raise FileFormatError("`key = value` 형식이어야 합니다", path, lineno)
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in RING_KEYS:
                raise FileFormatError(f"알 수 없는 키: {key!r}", path, lineno)
            if key in data:
                raise FileFormatError(f"키 {key!r} 가 중복됩니다", path, lineno)
            data[key] = value
        return self.ring_from_mapping(data, path)

    def read_ring(self, path: str) -> RingSpec:
        return self.parse_ring_text(self._read(path), path)

    def format_ring(self, ring: RingSpec) -> str:
        lines = [
            f"characteristic = {ring.characteristic}",
            f"parameters = {ring.parameter or ''}".rstrip(),
            f"variables = {', '.join(ring.variables)}",
            f"order = {ring.order.kind}",
        ]
        if ring.order.priority != ring.variables:
            lines.append(f"priority = {', '.join(ring.order.priority)}")
        return "\n".join(lines) + "\n"

    def ring_to_mapping(self, ring: RingSpec) -> Dict[str, Any]:
        return {
            "characteristic": ring.characteristic,
            "parameters": [ring.parameter] if ring.parameter else [],
            "variables": list(ring.variables),
            "order": ring.order.kind,
            "priority": list(ring.order.priority),
        }

    # -- ideal / 인증서 -----------------------------------------------------------

    def parse_polys(self, lines: Sequence[str], ring: RingSpec, path: str = "") -> List[Polynomial]:
        polys = []
        for lineno, raw in enumerate(lines, 1):
            line = _strip_comment(raw)
            if not line:
                continue
            try:
                polys.append(parse_poly(line, ring))
            except GbVerifyError as exc:
                raise FileFormatError(str(exc), path, lineno) from exc
        return polys

    def parse_ideal_text(self, text: str, ring: RingSpec, path: str = "") -> Ideal:
        return Ideal(ring, self.parse_polys(text.splitlines(), ring, path))

    def read_ideal(self, path: str, ring: RingSpec) -> Ideal:
        return self.parse_ideal_text(self._read(path), ring, path)

    def format_polys(self, polys: Sequence[Polynomial]) -> str:
        return "".join(format_poly(f) + "\n" for f in polys)

    def read_certificates(self, path: str, ring: RingSpec) -> List[SpolyCertificate]:
        certs = []
        for lineno, raw in enumerate(self._read(path).splitlines(), 1):
            line = _strip_comment(raw)
            if not line:
                continue
            try:
                certs.append(parse_certificate(line, ring))
            except GbVerifyError as exc:
                raise FileFormatError(str(exc), path, lineno) from exc
        return certs

    def resolve_by(self, ring: RingSpec, by: str) -> Ideal:
        """`--by` 인자: 존재하는 파일이면 ideal 파일, 아니면 다항식 하나"""
        if os.path.isfile(by):
            return self.read_ideal(by, ring)
        return Ideal(ring, [parse_poly(by, ring)])

    def _read(self, path: str) -> str:
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise FileFormatError(f"파일을 읽을 수 없습니다: {exc.strerror}", path) from exc

    # -- 연산 ------------------------------------------------------------------

    def groebner_basis(self, ideal: Ideal) -> GroebnerBasis:
        gb, _ = self.run_timed("Gröbner 기저", ideal.groebner_basis)
        return gb

    def normal_form(self, ideal: Ideal, f: Polynomial) -> Polynomial:
        return ideal.normal_form(f)

    def membership(
        self, ideal: Ideal, f: Polynomial, certificate: bool = False
    ) -> Tuple[bool, Optional[Tuple[Polynomial, ...]]]:
        if not certificate:
            return f in ideal, None
        cofactors = membership_certificate(f, ideal)
        return cofactors is not None, cofactors

    def colon(self, ideal: Ideal, by: Ideal) -> Ideal:
        result, _ = self.run_timed("몫 아이디얼", lambda: colon_ideal(ideal, by))
        return result

    def saturation(self, ideal: Ideal, by: Ideal) -> Tuple[Ideal, int]:
        result, _ = self.run_timed("포화", lambda: saturation_steps_ideal(ideal, by))
        return result

    def intersection(self, a: Ideal, b: Ideal) -> Ideal:
        result, _ = self.run_timed("교집합", lambda: intersect(a, b))
        return result

    def frobenius(self, ideal: Ideal, q: int) -> Ideal:
        return frobenius_power(ideal, q)

    def h0_length(self, U: Ideal, J: Ideal, max_ideal: Optional[Ideal] = None) -> int:
        m = max_ideal if max_ideal is not None else maximal_ideal(U.ring)
        result, _ = self.run_timed("H^0 길이", lambda: h0_length(U, J, m))
        return result

    def rjj(
        self,
        J: Ideal,
        I: Ideal,
        d: int,
        q_list: Sequence[int],
        max_ideal: Optional[Ideal] = None,
        relations: Optional[Ideal] = None,
        budget: Optional[float] = None,
    ) -> List[RjjRow]:
        m = max_ideal if max_ideal is not None else maximal_ideal(J.ring)
        rel = relations.generators if relations is not None else ()
        rows, _ = self.run_timed(
            "rjj 표", lambda: rjj_estimate(J.generators, I.generators, m, d, q_list, rel, budget)
        )
        if len(rows) < len(q_list):
            self.logger.warning(f"시간 예산 {budget}s 로 q 격자 {len(rows)}/{len(q_list)} 만 계산했습니다")
        return rows
