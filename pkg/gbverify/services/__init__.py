from .algebra_service import AlgebraService
from .base_service import BaseService
from .service_manager import ServiceManager
from .verification_service import VerificationService

__all__ = ["AlgebraService", "BaseService", "ServiceManager", "VerificationService"]
