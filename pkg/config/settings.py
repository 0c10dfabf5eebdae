from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from typing import Optional
import os


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix REPDIGIT_)."""

    model_config = SettingsConfigDict(
        env_prefix="REPDIGIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Search Configuration
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    small_base_limit: int = Field(default=100, ge=2)
    small_threshold: int = Field(default=1000, ge=2)
    large_threshold: int = Field(default=10000, ge=2)

    # Arithmetic budgets
    trial_division_limit: int = Field(default=2_000_000, ge=2)
    oracle_census_limit: int = Field(default=100_000_000, ge=5)

    # Logging Configuration
    log_level: str = Field(default="WARNING")
    log_file: Optional[str] = Field(default=None)

    def default_threshold(self, g: int) -> int:
        """Threshold B separating the small and large search phases for base g."""
        return self.small_threshold if g <= self.small_base_limit else self.large_threshold


# Global settings instance
settings = Settings()
