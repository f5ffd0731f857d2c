"""Runtime configuration using environment variables"""

from typing import Final

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS: Final[frozenset[str]] = frozenset(
    {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"}
)


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="POLYLOG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Precision (cases may demand more guard digits than this)
    guard_digits: int = 2

    # Sweeps
    default_primes: str = "5..50"
    max_prime: int = 997
    jobs: int = 1
    report_timings: bool = True

    # Identity suite
    identity_max_n: int = 25
    identity_max_s: int = 3

    # Special-constant cache (entries are per prime)
    constants_cache_size: int = 128

    # Logging
    log_level: str = "WARNING"

    @field_validator("guard_digits")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"guard_digits must be >= 0, got {value}")
        return value

    @field_validator("jobs", "identity_max_n", "identity_max_s", "constants_cache_size")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"value must be >= 1, got {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level '{value}'")
        return level


settings = Settings()
