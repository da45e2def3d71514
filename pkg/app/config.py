"""
Configuration module for the app.

Settings are read from environment variables prefixed with ``IDEALLAB_``.
No configuration file is consulted; command-line flags override these values.
"""

from loguru import logger
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(env_prefix="IDEALLAB_", case_sensitive=False)

    # Execution
    THREADS: int = 1
    LOG_LEVEL: str = "WARNING"

    # Bounded search on the localized polynomial ring
    MONLOC_DEGREE_BOUND: int = 4
    MONLOC_MAX_TERMS: int = 2

    # Default verification scopes
    SCOPE_ZMOD_MAX: int = 100
    SCOPE_PROD_MAX: int = 12
    SCOPE_INT_MAX: int = 500
    SCOPE_LOCAL_EXPONENT_MAX: int = 5

    # Integer factorization
    TRIAL_DIVISION_BOUND: int = 10**6
    RHO_SEED: int = 20200611


# Instanciar configuración
settings = Settings()


def validate_config() -> bool:
    """Validate that the configured values are usable."""
    if settings.THREADS < 1:
        logger.error(f"IDEALLAB_THREADS must be positive, got {settings.THREADS}")
        return False

    if settings.MONLOC_DEGREE_BOUND < 1 or settings.MONLOC_MAX_TERMS < 1:
        logger.error("MonLoc search bounds must be positive")
        return False

    for name in ("SCOPE_ZMOD_MAX", "SCOPE_PROD_MAX", "SCOPE_INT_MAX"):
        if getattr(settings, name) < 2:
            logger.error(f"{name} must be at least 2")
            return False

    return True
