"""Process-level settings using Pydantic for validation."""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


# BaseSettings: auto-loads fields from PQAC_* environment variables and an optional .env file
class Settings(BaseSettings):
    """Defaults the CLI falls back to when a run config or flag does not say otherwise."""

    model_config = SettingsConfigDict(
        env_prefix="PQAC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    output_directory: str = "runs"
    log_level: str = "INFO"
    workers: int = 1


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Uses LRU cache to ensure singleton pattern.
    """
    return Settings()
