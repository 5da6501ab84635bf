"""
검증 서비스 - 하네스 실행, 독립적인 파라미터 점은 프로세스 풀로 분산
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

from ..core.groebner import SpolyCertificate
from ..core.idealops import set_default_strategy
from ..core.polyring import RingSpec
from ..verify import (
    ConstructionParams,
    ExampleParams,
    VerificationReport,
    build_construction_objects,
    check_certificate_list,
    check_spoly_certificates,
    verify_construction,
    verify_example,
)
from .base_service import BaseService


def _construction_point(p: int, m: int, strategy: str) -> VerificationReport:
    set_default_strategy(strategy)
    return verify_construction(ConstructionParams(p, m))


def _example_point(p: int, e: int, strategy: str, budget: Optional[float]) -> VerificationReport:
    set_default_strategy(strategy)
    return verify_example(ExampleParams(p, e), budget=budget)


class VerificationService(BaseService):
    """Construction / Example / 인증서 하네스"""

    def __init__(self, workers: int = 1, budget: Optional[float] = None, strategy: str = "normal"):
        super().__init__("verification")
        self.workers = workers
        self.budget = budget
        self.strategy = strategy
        self._pool: Optional[ProcessPoolExecutor] = None

    def _fan_out(self, fn: Callable, points: Sequence[Tuple]) -> List[VerificationReport]:
        if self.workers > 1 and len(points) > 1:
            if self._pool is None:
                self._pool = ProcessPoolExecutor(max_workers=self.workers)
                self.logger.info(f"프로세스 풀 시작 (workers={self.workers})")
            reports = list(self._pool.map(fn, *zip(*points)))
        else:
            reports = [fn(*point) for point in points]
        return sorted(reports, key=lambda r: r.sort_key())

    def run_construction(self, points: Sequence[Tuple[int, int]]) -> List[VerificationReport]:
        """points: (p, m) 목록. 파라미터 검증은 실행 전에 모두 끝냅니다."""
        for p, m in points:
            ConstructionParams(p, m)
        reports, _ = self.run_timed(
            f"Construction {list(points)}",
            lambda: self._fan_out(_construction_point, [(p, m, self.strategy) for p, m in points]),
        )
        return reports

    def run_example(self, points: Sequence[Tuple[int, int]]) -> List[VerificationReport]:
        """points: (p, e) 목록"""
        for p, e in points:
            ExampleParams(p, e)
        reports, _ = self.run_timed(
            f"Example {list(points)}",
            lambda: self._fan_out(_example_point, [(p, e, self.strategy, self.budget) for p, e in points]),
        )
        return reports

    def run_certificates(self, p: int, m: int, pairs=None) -> VerificationReport:
        report, _ = self.run_timed(
            f"인증서 (p={p}, m={m})", lambda: check_spoly_certificates(ConstructionParams(p, m), pairs)
        )
        return report

    def run_certificate_list(
        self, p: int, m: int, read: Callable[[RingSpec], List[SpolyCertificate]], basis: str = "F"
    ) -> VerificationReport:
        """read(ring) 으로 인증서를 읽어 확인합니다. F 는 r,s,x,y 환, G 는 s,x,y 환입니다."""
        params = ConstructionParams(p, m)
        objs = build_construction_objects(params)
        certs = read(objs.big_ring if basis == "F" else objs.ring)
        report, _ = self.run_timed(
            f"인증서 파일 {len(certs)} 개 ({basis}, p={p}, m={m})",
            lambda: check_certificate_list(params, certs, basis, objs),
        )
        return report

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None
