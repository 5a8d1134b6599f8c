from .params import WfParams
from .series import BinSpec, CountRow, TimePoint, TimeSeries, VariantCounts
from .results import (
    SCHEMA_VERSION,
    ChangePointNode,
    ChangePointRow,
    ChangepointReport,
    ContingencyTable,
    DistanceRow,
    EllipseReport,
    EllipseSummary,
    FitReport,
    GTestReport,
    SweepReport,
    FitResult,
    GTestResult,
    ItemError,
    RegionClass,
    UsageScreen,
)

__all__ = [
    "WfParams",
    "TimePoint",
    "TimeSeries",
    "CountRow",
    "VariantCounts",
    "BinSpec",
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
