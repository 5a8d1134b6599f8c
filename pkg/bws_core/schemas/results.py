from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bws_core.schemas.params import WfParams
from bws_core.settings import settings

__all__ = [
    "SCHEMA_VERSION",
    "FitResult",
    "ChangePointNode",
    "ChangePointRow",
    "RegionClass",
    "EllipseSummary",
    "ContingencyTable",
    "GTestResult",
    "DistanceRow",
    "UsageScreen",
    "ItemError",
    "FitReport",
    "ChangepointReport",
    "EllipseReport",
    "GTestReport",
    "SweepReport",
]

SCHEMA_VERSION = 1

_EXTRA = "forbid" if settings.pydantic_mode == "strict" else "allow"


# ---------------------------------------------------------------------------
# Inference --------------------------------------------------------------------
# ---------------------------------------------------------------------------

class FitResult(BaseModel):
    """Selection and drift fits of one series plus the bootstrap test of drift."""

    label: str = ""
    bin_width: Optional[int] = None
    n_points: int = 0
    sel_fit: WfParams
    drift_fit: WfParams
    loglik_sel: float
    loglik_drift: float
    likelihood_ratio: float = Field(alias="lambda")
    p_value: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    p_value_raw: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    exceed_count: int = 0
    replicates: int = 0
    failed_replicates: int = 0
    generation_time: float = Field(gt=0)
    seed: int = 0
    converged: bool = True

    model_config = ConfigDict(extra=_EXTRA, populate_by_name=True)

    @field_validator("likelihood_ratio")
    @classmethod
    def _nested(cls, value: float) -> float:
        if value < -1e-6:
            raise ValueError(f"likelihood ratio {value} is negative beyond tolerance")
        return value


class ChangePointNode(BaseModel):
    """A scanned segment: best split, its bootstrap p-value and optional sub-splits."""

    start_time: float
    end_time: float
    n_points: int
    depth: int = 0
    split_time: float
    before: WfParams
    after: WfParams
    constant: WfParams
    loglik_split: float
    loglik_const: float
    likelihood_ratio: float = Field(alias="lambda")
    p_value: Optional[float] = None
    p_value_raw: Optional[float] = None
    exceed_count: int = 0
    replicates: int = 0
    failed_replicates: int = 0
    significant: bool = False
    children: List["ChangePointNode"] = Field(default_factory=list)

    model_config = ConfigDict(extra=_EXTRA, populate_by_name=True)


class ChangePointRow(BaseModel):
    """A significant split flattened to the columns of a change-point table."""

    split_time: float
    popsize_before: float
    selstrength_before: float
    popsize_after: float
    selstrength_after: float
    p_value: Optional[float] = None
    p_value_raw: Optional[float] = None
    depth: int = 0

    model_config = ConfigDict(extra=_EXTRA)


# ---------------------------------------------------------------------------
# Analysis ---------------------------------------------------------------------
# ---------------------------------------------------------------------------

class RegionClass(str, Enum):
    """Position of a verb's ellipse relative to the region of likely selection."""

    IRREGULARISING = "irregularising"
    INCONCLUSIVE = "inconclusive"
    NON_IRREGULARISING = "non_irregularising"


class EllipseSummary(BaseModel):
    """One-standard-deviation ellipse of (s, 1 - p) over several binnings."""

    label: str = ""
    center: Tuple[float, float]
    axes: Tuple[float, float]
    angle: float
    n_binnings: int

    model_config = ConfigDict(extra=_EXTRA)

    @field_validator("axes")
    @classmethod
    def _nonnegative(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        if min(value) < 0:
            raise ValueError("semi-axes must be nonnegative")
        return value


class ContingencyTable(BaseModel):
    """Counts of verbs per behaviour class; rows are verb sets."""

    row_labels: List[str] = Field(
        default_factory=lambda: ["alveolar_stop", "baseline"]
    )
    col_labels: List[str] = Field(
        default_factory=lambda: [c.value for c in RegionClass]
    )
    counts: List[List[int]]

    model_config = ConfigDict(extra=_EXTRA)

    @field_validator("counts")
    @classmethod
    def _rectangular(cls, counts: List[List[int]]) -> List[List[int]]:
        if not counts or len({len(r) for r in counts}) != 1:
            raise ValueError("counts must be a non-empty rectangular table")
        if any(c < 0 for r in counts for c in r):
            raise ValueError("counts must be nonnegative")
        return counts


class GTestResult(BaseModel):
    statistic: float = Field(ge=0.0)
    dof: int
    p_value: float = Field(ge=0.0, le=1.0)
    mode: str
    counts: List[List[int]]

    model_config = ConfigDict(extra=_EXTRA)


class DistanceRow(BaseModel):
    """Approximation error of the BwS and normal transitions at one start frequency."""

    x0: float
    s: float
    tv_bws: float
    tv_normal: float

    model_config = ConfigDict(extra=_EXTRA)


class UsageScreen(BaseModel):
    """Outcome of the minimum-usage inclusion check for one word."""

    word: str
    max_frequency: float
    max_bin_start: Optional[int] = None
    passed: bool

    model_config = ConfigDict(extra=_EXTRA)


# ---------------------------------------------------------------------------
# Reports ------------------------------------------------------------------------
# ---------------------------------------------------------------------------

class ItemError(BaseModel):
    """A per-item failure recorded instead of aborting the run."""

    item: str
    error: str

    model_config = ConfigDict(extra=_EXTRA)


class FitReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    config: Dict[str, Any] = Field(default_factory=dict)
    results: List[FitResult] = Field(default_factory=list)
    errors: List[ItemError] = Field(default_factory=list)

    model_config = ConfigDict(extra=_EXTRA)


class ChangepointReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    config: Dict[str, Any] = Field(default_factory=dict)
    label: str = ""
    tree: Optional[ChangePointNode] = None
    change_points: List[ChangePointRow] = Field(default_factory=list)
    usage: List[UsageScreen] = Field(default_factory=list)
    errors: List[ItemError] = Field(default_factory=list)

    model_config = ConfigDict(extra=_EXTRA)


class EllipseReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    config: Dict[str, Any] = Field(default_factory=dict)
    ellipses: List[EllipseSummary] = Field(default_factory=list)
    classes: Dict[str, RegionClass] = Field(default_factory=dict)
    errors: List[ItemError] = Field(default_factory=list)

    model_config = ConfigDict(extra=_EXTRA)


class GTestReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    config: Dict[str, Any] = Field(default_factory=dict)
    result: Optional[GTestResult] = None
    errors: List[ItemError] = Field(default_factory=list)

    model_config = ConfigDict(extra=_EXTRA)


class SweepReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    config: Dict[str, Any] = Field(default_factory=dict)
    rows: List[DistanceRow] = Field(default_factory=list)

    model_config = ConfigDict(extra=_EXTRA)


ChangePointNode.model_rebuild()
