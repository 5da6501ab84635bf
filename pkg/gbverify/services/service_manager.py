"""
서비스 매니저 - 모든 서비스의 생명주기 관리
"""
import logging
from typing import Optional

from ..config import Settings, load_settings
from ..core.idealops import set_default_strategy
from .algebra_service import AlgebraService
from .verification_service import VerificationService

logger = logging.getLogger("gbverify.services")


class ServiceManager:
    """모든 서비스를 관리하는 매니저 클래스"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings
        self.algebra: Optional[AlgebraService] = None
        self.verification: Optional[VerificationService] = None
        self._initialized = False

    def initialize_sync(self) -> None:
        if self._initialized:
            return
        try:
            if self.settings is None:
                self.settings = load_settings()
            set_default_strategy(self.settings.pair_strategy)
            self.algebra = AlgebraService()
            self.verification = VerificationService(
                workers=self.settings.workers,
                budget=self.settings.budget,
                strategy=self.settings.pair_strategy,
            )
            self._initialized = True
            logger.info("✅ 모든 서비스가 초기화되었습니다.")
        except Exception as e:
            logger.error(f"❌ 서비스 초기화 실패: {e}")
            raise

    async def initialize(self) -> None:
        """모든 서비스를 초기화합니다."""
        self.initialize_sync()

    def cleanup_sync(self) -> None:
        if self.verification:
            self.verification.close()
        self._initialized = False
        logger.info("✅ 모든 서비스가 정리되었습니다.")

    async def cleanup(self) -> None:
        """리소스를 정리합니다."""
        self.cleanup_sync()
