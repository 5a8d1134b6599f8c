"""Run configurations for the batch commands.

Every command validates its arguments into one of these models; the dumped
model (after defaults) is embedded in the command's output for provenance.
"""

from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bws_core.schemas.results import SCHEMA_VERSION
from bws_core.settings import settings

__all__ = [
    "OutputFormat",
    "BootstrapInit",
    "Containment",
    "GTestMode",
    "RunConfig",
    "SimulateConfig",
    "FitConfig",
    "ChangepointConfig",
    "EllipseConfig",
    "GTestConfig",
    "SweepConfig",
]


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class BootstrapInit(str, Enum):
    """Initial frequency of bootstrap replicate series."""

    OBSERVED_START = "observed_start"
    UNIFORM = "uniform"


class Containment(str, Enum):
    """How an ellipse is tested against the selection region."""

    BBOX = "bbox"
    EXACT = "exact"


class GTestMode(str, Enum):
    GOODNESS_OF_FIT = "goodness_of_fit"
    INDEPENDENCE = "independence"


class RunConfig(BaseModel):
    """Fields shared by every command."""

    schema_version: int = SCHEMA_VERSION
    seed: int = Field(default_factory=lambda: settings.default_seed, ge=0)
    workers: int = Field(default_factory=lambda: settings.workers, ge=1)
    out: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON

    model_config = ConfigDict(
        extra="forbid" if settings.pydantic_mode == "strict" else "allow",
        use_enum_values=True,
    )


class SimulateConfig(RunConfig):
    x0: float = Field(ge=0.0, le=1.0)
    popsize: float = Field(gt=0)
    selstrength: float = 0.0
    schedule: Optional[str] = None
    generations: int = Field(ge=1)
    generation_time: float = Field(default=1.0, gt=0)
    start_time: float = 0.0
    format: OutputFormat = OutputFormat.CSV


class FitConfig(RunConfig):
    inputs: List[str]
    counts: bool = False
    bin_widths: List[int] = Field(default_factory=lambda: [10, 20, 40])
    origin_year: Optional[int] = None
    generation_time: Optional[float] = Field(default=None, gt=0)
    replicates: int = Field(default_factory=lambda: settings.bootstrap_replicates, ge=0)
    bootstrap_init: BootstrapInit = BootstrapInit.OBSERVED_START
    min_tokens: int = Field(default_factory=lambda: settings.min_tokens, ge=0)

    @field_validator("bin_widths")
    @classmethod
    def _positive_widths(cls, widths: List[int]) -> List[int]:
        if not widths or min(widths) < 1:
            raise ValueError("bin widths must be positive integers")
        return widths


class ChangepointConfig(RunConfig):
    inputs: List[str] = Field(default_factory=list)
    counts: bool = False
    manifest: Optional[str] = None
    word_set: Optional[str] = None
    bin_width: int = Field(default=5, ge=1)
    origin_year: Optional[int] = None
    generation_time: Optional[float] = Field(default=None, gt=0)
    replicates: int = Field(
        default_factory=lambda: settings.changepoint_replicates, ge=0
    )
    p_threshold: float = Field(default=0.05, gt=0.0, lt=1.0)
    max_depth: int = Field(default=3, ge=1)
    equalize: bool = False
    token_weighted: bool = False
    min_tokens: int = Field(default_factory=lambda: settings.min_tokens, ge=0)


class EllipseConfig(RunConfig):
    inputs: List[str]
    p_threshold: float = Field(default=0.05, gt=0.0, lt=1.0)
    containment: Containment = Containment.BBOX
    format: OutputFormat = OutputFormat.CSV


class GTestConfig(RunConfig):
    counts: List[List[int]] = Field(
        default_factory=lambda: [[9, 2, 8], [7, 4, 23]]
    )
    mode: GTestMode = GTestMode.GOODNESS_OF_FIT


class SweepConfig(RunConfig):
    popsize: int = Field(default=50, ge=1)
    selstrengths: List[float] = Field(default_factory=lambda: [0.0, 0.5])
    generations: int = Field(default=1, ge=1)
    grid_points: int = Field(default=21, ge=2)
    format: OutputFormat = OutputFormat.CSV
