"""Variability ellipses of (s, 1 - p) across binnings and their classification."""

from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np

from bws_core.schemas import EllipseSummary, RegionClass
from bws_core.schemas.config import Containment

__all__ = [
    "ellipse_from_fits",
    "classify_region",
]

_BOUNDARY_SAMPLES = 720


def _normalise_angle(theta: float) -> float:
    """Map an axis direction to (-pi/2, pi/2]."""
    while theta <= -math.pi / 2:
        theta += math.pi
    while theta > math.pi / 2:
        theta -= math.pi
    return theta


def ellipse_from_fits(fits: Sequence[Tuple[float, float]], label: str = "") -> EllipseSummary:
    """One-standard-deviation ellipse of the points ``(s, 1 - p)``.

    Semi-axes are the square roots of the sample covariance eigenvalues
    (divisor n - 1), major axis first; the angle is that of the major axis.
    A single pair gives a zero-size ellipse.
    """
    pts = np.array([(s, 1.0 - p) for s, p in fits], dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        raise ValueError("at least one (s, p) pair is needed")
    center = pts.mean(axis=0)
    if len(pts) < 2:
        return EllipseSummary(
            label=label, center=tuple(center), axes=(0.0, 0.0), angle=0.0, n_binnings=len(pts)
        )
    cov = np.cov(pts, rowvar=False, ddof=1)
    eigvals, eigvecs = np.linalg.eigh(cov)
    eigvals = np.clip(eigvals, 0.0, None)
    major = eigvecs[:, 1]
    angle = _normalise_angle(math.atan2(major[1], major[0])) if eigvals[1] > 0 else 0.0
    return EllipseSummary(
        label=label,
        center=(float(center[0]), float(center[1])),
        axes=(float(math.sqrt(eigvals[1])), float(math.sqrt(eigvals[0]))),
        angle=angle,
        n_binnings=len(pts),
    )


def _half_widths(summary: EllipseSummary) -> Tuple[float, float]:
    a, b = summary.axes
    c, s = math.cos(summary.angle), math.sin(summary.angle)
    return math.hypot(a * c, b * s), math.hypot(a * s, b * c)


def classify_region(
    summary: EllipseSummary,
    p_threshold: float = 0.05,
    containment: str = Containment.BBOX,
) -> RegionClass:
    """Place an ellipse relative to the region ``{s > 0, 1 - p > 1 - p_threshold}``.

    ``bbox`` compares the rotated ellipse's bounding box with the region;
    ``exact`` samples the ellipse outline, which can only turn a bbox
    "inconclusive" into "non_irregularising".
    """
    cx, cy = summary.center
    floor = 1.0 - p_threshold
    hx, hy = _half_widths(summary)

    if cx - hx > 0.0 and cy - hy > floor:
        return RegionClass.IRREGULARISING
    if cx + hx <= 0.0 or cy + hy <= floor:
        return RegionClass.NON_IRREGULARISING
    if Containment(containment) is Containment.BBOX:
        return RegionClass.INCONCLUSIVE

    a, b = summary.axes
    phi = np.linspace(0.0, 2.0 * math.pi, _BOUNDARY_SAMPLES, endpoint=False)
    c, s = math.cos(summary.angle), math.sin(summary.angle)
    xs = np.append(cx + a * c * np.cos(phi) - b * s * np.sin(phi), cx)
    ys = np.append(cy + a * s * np.cos(phi) + b * c * np.sin(phi), cy)
    inside = (xs > 0.0) & (ys > floor)
    return RegionClass.INCONCLUSIVE if inside.any() else RegionClass.NON_IRREGULARISING
