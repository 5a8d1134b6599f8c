from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Core settings for the bws-inference toolkit.

    Uses pydantic-settings to load from ``BWS_``-prefixed environment
    variables or a .env file.
    """
    pydantic_mode: Literal["strict", "lax"] = "strict"
    log_level: str = "INFO"

    # Reproducibility and bootstrap sizes
    default_seed: int = 0
    bootstrap_replicates: int = 1000
    changepoint_replicates: int = 500
    workers: int = 1

    # Numerical knobs
    quadrature_nodes: int = 64
    max_exact_popsize: int = 2000
    selection_bound: float = 5.0
    log10_popsize_min: float = 0.0
    log10_popsize_max: float = 7.0
    optimizer_tol: float = 1e-4
    max_sweeps: int = 50
    density_floor: float = 1e-300
    boundary_eps: float = 1e-9

    # Corpus ingestion
    min_tokens: int = 100

    model_config = SettingsConfigDict(
        env_prefix="BWS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

# Single, reusable instance of the settings
settings = Settings()
