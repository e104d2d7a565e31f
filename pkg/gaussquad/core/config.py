from functools import lru_cache
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

ROOT_DIR = Path(__file__).resolve().parents[2]
ENV_PATH = ROOT_DIR / ".env"

load_dotenv(ENV_PATH)


class SolverSettings(BaseSettings):
    """Library defaults, overridable through GAUSSQUAD_* variables or .env."""

    model_config = SettingsConfigDict(env_prefix="GAUSSQUAD_", extra="ignore")

    max_iterations: int = Field(default=40, ge=5, description="Iteration guard per node")
    min_terms: int = Field(default=20, ge=1, description="Minimum Taylor terms per evaluation")
    cf_depth: int = Field(default=500, ge=10, description="Base depth cap for continued fractions")
    hermite_normalization: Literal["mu1", "mu0"] = Field(
        default="mu1", description="Moment used to fix the Hermite weight normalization"
    )
    laguerre_confirmations: int = Field(
        default=1, ge=0, description="Extra iterations after the Laguerre stop criterion fires"
    )
    taylor_disc_fraction: float = Field(
        default=0.3, gt=0.0, lt=1.0,
        description="Largest Laguerre Taylor step as a fraction of the distance to z = 0",
    )
    default_digits: int = Field(default=16, ge=8, description="Working digits when none are given")


@lru_cache(maxsize=1)
def get_settings() -> SolverSettings:
    return SolverSettings()
