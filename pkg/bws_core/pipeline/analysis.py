"""``bws analyze``: ellipses and region classes, G-test, approximation sweep."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Tuple

import pandas as pd

from bws_core.analysis.ellipse import classify_region, ellipse_from_fits
from bws_core.analysis.gtest import g_test
from bws_core.analysis.sweep import distance_sweep
from bws_core.exceptions import BwsError
from bws_core.pipeline.fitting import ITEM_ERRORS
from bws_core.schemas import (
    ContingencyTable,
    EllipseReport,
    GTestReport,
    ItemError,
    RegionClass,
    SweepReport,
)
from bws_core.schemas.config import EllipseConfig, GTestConfig, SweepConfig
from bws_core.storage.files import read_fit_report
from bws_core.utils.logger import get_logger

__all__ = [
    "ELLIPSE_COLUMNS",
    "SWEEP_COLUMNS",
    "run_ellipses",
    "ellipse_frame",
    "run_gtest",
    "run_sweep",
    "sweep_frame",
]

logger = get_logger(__name__)

ELLIPSE_COLUMNS = ["label", "cx", "cy", "ax1", "ax2", "angle", "class"]
SWEEP_COLUMNS = ["x0", "s", "tv_bws", "tv_normal"]


def _collect(config: EllipseConfig, report: EllipseReport) -> Dict[str, Dict[Tuple[str, int], Tuple[float, float]]]:
    """``label -> binning -> (s, p)`` where a binning is (file, bin width)."""
    pairs: Dict[str, Dict[Tuple[str, int], Tuple[float, float]]] = defaultdict(dict)
    for path in config.inputs:
        try:
            fits = read_fit_report(path)
        except ITEM_ERRORS as exc:
            report.errors.append(ItemError(item=path, error=str(exc)))
            continue
        for r in fits.results:
            p = r.p_value if r.p_value is not None else r.p_value_raw
            if p is None:
                report.errors.append(ItemError(item=f"{r.label}@{r.bin_width}", error="fit has no p-value"))
                continue
            pairs[r.label][(path, r.bin_width or 0)] = (r.sel_fit.selstrength, p)
    return pairs


def run_ellipses(config: EllipseConfig) -> EllipseReport:
    """One ellipse and class per label; every label must appear in every binning."""
    report = EllipseReport(config=config.model_dump(mode="json"))
    pairs = _collect(config, report)
    binnings = set().union(*(set(b) for b in pairs.values())) if pairs else set()
    for label in sorted(pairs):
        missing = binnings - set(pairs[label])
        if missing:
            detail = ", ".join(f"{p}@{w}" for p, w in sorted(missing))
            report.errors.append(ItemError(item=label, error=f"missing from binnings: {detail}"))
            continue
        summary = ellipse_from_fits([pairs[label][b] for b in sorted(pairs[label])], label=label)
        report.ellipses.append(summary)
        report.classes[label] = classify_region(summary, config.p_threshold, config.containment)
    logger.info("classified %d ellipses (%d errors)", len(report.ellipses), len(report.errors))
    return report


def ellipse_frame(report: EllipseReport) -> pd.DataFrame:
    rows = [
        {
            "label": e.label,
            "cx": e.center[0],
            "cy": e.center[1],
            "ax1": e.axes[0],
            "ax2": e.axes[1],
            "angle": e.angle,
            "class": RegionClass(report.classes[e.label]).value,
        }
        for e in report.ellipses
    ]
    return pd.DataFrame(rows, columns=ELLIPSE_COLUMNS)


def run_gtest(config: GTestConfig) -> GTestReport:
    report = GTestReport(config=config.model_dump(mode="json"))
    try:
        report.result = g_test(ContingencyTable(counts=config.counts), config.mode)
    except (BwsError, ValueError) as exc:
        report.errors.append(ItemError(item="table", error=str(exc)))
    return report


def run_sweep(config: SweepConfig) -> SweepReport:
    rows = distance_sweep(
        popsize=config.popsize,
        selstrengths=config.selstrengths,
        k=config.generations,
        grid_points=config.grid_points,
    )
    return SweepReport(config=config.model_dump(mode="json"), rows=rows)


def sweep_frame(report: SweepReport) -> pd.DataFrame:
    return pd.DataFrame([r.model_dump() for r in report.rows], columns=SWEEP_COLUMNS)
