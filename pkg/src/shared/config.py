"""
Configuration settings for sp6flags.
"""
from typing import List

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    # Application settings
    APP_NAME: str = "sp6flags"
    DEBUG: bool = False
    HOST: str = "127.0.0.1"
    PORT: int = 8000

    # CORS settings
    CORS_ORIGINS: List[str] = ["*"]

    # Logging settings
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_FILE: str = ""

    # Arithmetic settings
    FACTOR_BIT_BOUND: int = 64  # numerator/denominator bound for square classes

    # Randomized checks
    RANDOM_WORD_LENGTH: int = 12
    DEFAULT_SEED: int = 42
    DEFAULT_TRIALS: int = 100

    # Census settings
    CENSUS_WORKERS: int = 1
    CENSUS_CHUNK_SIZE: int = 200_000
    CENSUS_POINT_BUDGET: int = 3 ** 14
    CENSUS_EXTENDED_BUDGET: int = 5 ** 14
    CENSUS_SAMPLE_FRACTION: float = 0.01

    # Model settings (for pydantic)
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )


# Create settings instance
settings = Settings()


def get_settings() -> Settings:
    """Return the settings instance."""
    return settings
