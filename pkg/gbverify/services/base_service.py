"""
서비스 공통 기반 - 이름 붙은 로거와 시간 측정 실행
"""
import logging
import time
from typing import Callable, Tuple, TypeVar

T = TypeVar("T")


class BaseService:
    """모든 서비스의 기반 클래스"""

    def __init__(self, name: str):
        self.name = name
        self.logger = logging.getLogger(f"gbverify.{name}")

    def run_timed(self, label: str, fn: Callable[[], T]) -> Tuple[T, float]:
        """fn() 을 실행하고 (결과, 걸린 초) 를 돌려줍니다."""
        started = time.perf_counter()
        try:
            result = fn()
        except Exception as e:
            self.logger.error(f"{label} 실패: {e}")
            raise
        elapsed = time.perf_counter() - started
        self.logger.info(f"{label} 완료 ({elapsed:.2f}s)")
        return result, elapsed
