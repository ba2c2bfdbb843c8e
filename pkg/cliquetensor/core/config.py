"""
Configuration management for cliquetensor.
"""
from functools import lru_cache
from typing import Optional, Tuple, Type

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class _InitOnlySettings(BaseSettings):
    """Settings populated from constructor arguments only (no env, no dotenv)."""

    model_config = SettingsConfigDict(extra="ignore", validate_default=True)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


class SolverSettings(_InitOnlySettings):
    """Power iteration settings."""
    tol: float = Field(default=1e-10, gt=0)
    max_iters: int = Field(default=100_000, ge=1)
    shift: float = Field(default=1.0, ge=0)


class ScanSettings(_InitOnlySettings):
    """Exhaustive scan settings."""
    tie_tol: float = Field(default=1e-9, ge=0)
    threads: int = Field(default=1, ge=1)
    prune: bool = True
    chunk_size: int = Field(default=4096, ge=1)
    progress: bool = False


class OutputSettings(_InitOnlySettings):
    """Where command documents are written."""
    path: Optional[str] = None
    csv_path: Optional[str] = None


class LoggingSettings(_InitOnlySettings):
    """Diagnostics settings; logs always go to standard error."""
    level: str = "WARNING"
    file: Optional[str] = None


class Settings(_InitOnlySettings):
    """Main settings, one instance per CLI invocation (the RunConfig)."""
    app_name: str = "cliquetensor"
    app_version: str = "1.0.0"
    app_description: str = "t-clique spectral radius, kK_{r+1}-freeness and extremal graph scans"

    solver: SolverSettings = SolverSettings()
    scan: ScanSettings = ScanSettings()
    output: OutputSettings = OutputSettings()
    logging: LoggingSettings = LoggingSettings()


RunConfig = Settings


@lru_cache()
def get_settings() -> Settings:
    """Get cached default settings instance."""
    return Settings()


# Global default settings instance
settings = get_settings()
