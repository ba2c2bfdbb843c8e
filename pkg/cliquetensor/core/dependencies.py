"""
Dependency injection for cliquetensor commands.
"""
from typing import Optional

from cliquetensor.core.config import RunConfig, settings
from cliquetensor.core.logging import get_logger
from cliquetensor.services.scan_service import ScanService
from cliquetensor.services.spectral_service import SpectralService
from cliquetensor.services.verification_service import VerificationService

logger = get_logger(__name__)


class ServiceContainer:
    """Lazily built services sharing one RunConfig."""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or settings
        self._spectral_service: Optional[SpectralService] = None
        self._scan_service: Optional[ScanService] = None
        self._verification_service: Optional[VerificationService] = None

    @property
    def spectral_service(self) -> SpectralService:
        """Get spectral service instance."""
        if self._spectral_service is None:
            logger.info("Initializing spectral service")
            self._spectral_service = SpectralService(self.config.solver)
        return self._spectral_service

    @property
    def scan_service(self) -> ScanService:
        """Get scan service instance."""
        if self._scan_service is None:
            logger.info("Initializing scan service")
            self._scan_service = ScanService(self.config.solver, self.config.scan)
        return self._scan_service

    @property
    def verification_service(self) -> VerificationService:
        """Get verification service instance."""
        if self._verification_service is None:
            logger.info("Initializing verification service")
            self._verification_service = VerificationService(self.spectral_service)
        return self._verification_service
