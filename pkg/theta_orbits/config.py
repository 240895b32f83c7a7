import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from theta_orbits.errors import ParameterError

logger = logging.getLogger(__name__)

ENV_PREFIX = "THETA_ORBITS_"


class Settings(BaseModel):
    """
    Tolerances, seeds and truncation limits shared by the library and the CLI.

    Values come from built-in defaults, then from the environment (a `.env`
    file is honoured), then from explicit CLI flags.
    """

    seed: int = Field(default=0, ge=0)
    rank_rtol: float = Field(default=1e-8, gt=0)
    rank_gap: float = Field(default=10.0, gt=1)
    residual_tol: float = Field(default=1e-12, gt=0)
    certify_tol: float = Field(default=1e-10, gt=0)
    dmax: int = Field(default=6, ge=0)
    window: int = Field(default=3, ge=1)
    max_terms: int = Field(default=2_000_000, ge=1)
    max_redraws: int = Field(default=8, ge=1)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value}")
        return value


_ENV_FIELDS = {
    "SEED": "seed",
    "LOG_LEVEL": "log_level",
    "DMAX": "dmax",
    "WINDOW": "window",
    "MAX_TERMS": "max_terms",
}


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """Read settings from the environment once per process."""
    load_dotenv()
    values = {}
    for suffix, field in _ENV_FIELDS.items():
        raw = os.getenv(ENV_PREFIX + suffix)
        if raw is not None and raw.strip():
            values[field] = raw.strip()
    try:
        settings = Settings(**values)
    except ValidationError as exc:
        raise ParameterError(f"invalid {ENV_PREFIX}* environment: {exc}") from exc
    logger.debug("loaded settings %s", settings.model_dump())
    return settings
