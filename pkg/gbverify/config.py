"""
설정 - .env / 환경 변수에서 읽는 실행 설정
"""
import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from .core.errors import ConfigError

# 환경 변수 로드
load_dotenv()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
PAIR_STRATEGIES = ("normal", "first", "random")


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    time_budget: float = 300.0  # 0 이면 제한 없음
    workers: int = 1
    pair_strategy: str = "normal"

    @property
    def budget(self) -> Optional[float]:
        return self.time_budget or None

    def override(self, **changes) -> "Settings":
        """None 이 아닌 값만 덮어쓴 새 설정 (CLI 플래그용)"""
        updates = {k: v for k, v in changes.items() if v is not None}
        return validate(replace(self, **updates)) if updates else self


def validate(settings: Settings) -> Settings:
    if settings.log_level not in LOG_LEVELS:
        raise ConfigError(f"GBVERIFY_LOG_LEVEL={settings.log_level!r} 는 {LOG_LEVELS} 중 하나여야 합니다")
    if settings.time_budget < 0:
        raise ConfigError(f"GBVERIFY_TIME_BUDGET={settings.time_budget} 는 0 이상이어야 합니다")
    if settings.workers < 1:
        raise ConfigError(f"GBVERIFY_WORKERS={settings.workers} 는 1 이상이어야 합니다")
    if settings.pair_strategy not in PAIR_STRATEGIES:
        raise ConfigError(f"GBVERIFY_PAIR_STRATEGY={settings.pair_strategy!r} 는 {PAIR_STRATEGIES} 중 하나여야 합니다")
    return settings


def _number(name: str, default: str, kind):
    raw = os.getenv(name, default)
    try:
        return kind(raw)
    except ValueError as exc:
        raise ConfigError(f"{name}={raw!r} 는 숫자여야 합니다") from exc


def load_settings() -> Settings:
    """환경 변수에서 설정을 읽습니다."""
    return validate(
        Settings(
            log_level=os.getenv("GBVERIFY_LOG_LEVEL", "WARNING").upper(),
            time_budget=_number("GBVERIFY_TIME_BUDGET", "300", float),
            workers=_number("GBVERIFY_WORKERS", "1", int),
            pair_strategy=os.getenv("GBVERIFY_PAIR_STRATEGY", "normal").lower(),
        )
    )


def setup_logging(level: str = "WARNING") -> None:
    """진입점(CLI, 서버)에서만 호출합니다."""
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING), format=LOG_FORMAT, force=True)
