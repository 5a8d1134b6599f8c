from __future__ import annotations

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from bws_core.settings import settings

__all__ = [
    "TimePoint",
    "TimeSeries",
    "CountRow",
    "VariantCounts",
    "BinSpec",
]

_MODEL_CONFIG = ConfigDict(
    frozen=True,
    extra="forbid" if settings.pydantic_mode == "strict" else "allow",
)


class TimePoint(BaseModel):
    """One observation: a variant frequency at a time, with the bin's token total."""

    time: float
    frequency: float = Field(ge=0.0, le=1.0)
    tokens: Optional[int] = Field(default=None, ge=0)

    model_config = _MODEL_CONFIG


class TimeSeries(BaseModel):
    """Ordered frequency observations of a single variant (or word set)."""

    label: str = ""
    points: List[TimePoint] = Field(default_factory=list)

    model_config = _MODEL_CONFIG

    @field_validator("points")
    @classmethod
    def _strictly_increasing(cls, points: List[TimePoint]) -> List[TimePoint]:
        for prev, cur in zip(points, points[1:]):
            if not cur.time > prev.time:
                raise ValueError(
                    f"times must be strictly increasing ({prev.time} then {cur.time})"
                )
        return points

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_arrays(
        cls,
        times,
        frequencies,
        tokens=None,
        *,
        label: str = "",
    ) -> "TimeSeries":
        times = list(times)
        frequencies = list(frequencies)
        if len(times) != len(frequencies):
            raise ValueError("times and frequencies differ in length")
        if tokens is None:
            tokens = [None] * len(times)
        points = [
            TimePoint(
                time=float(t),
                frequency=float(x),
                tokens=None if n is None else int(n),
            )
            for t, x, n in zip(times, frequencies, tokens)
        ]
        return cls(label=label, points=points)

    # ------------------------------------------------------------------
    # Array views
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.points)

    @property
    def times(self) -> np.ndarray:
        return np.array([p.time for p in self.points], dtype=float)

    @property
    def frequencies(self) -> np.ndarray:
        return np.array([p.frequency for p in self.points], dtype=float)

    @property
    def tokens(self) -> Optional[np.ndarray]:
        """Token totals, or ``None`` unless every point carries one."""
        if any(p.tokens is None for p in self.points):
            return None
        return np.array([p.tokens for p in self.points], dtype=np.int64)

    # ------------------------------------------------------------------
    # Derived series
    # ------------------------------------------------------------------

    def slice(self, start: int, stop: Optional[int] = None) -> "TimeSeries":
        return TimeSeries(label=self.label, points=self.points[start:stop])

    def with_frequencies(self, frequencies, tokens=None) -> "TimeSeries":
        """Same times, new frequencies; tokens are kept unless replaced."""
        frequencies = list(frequencies)
        if len(frequencies) != len(self.points):
            raise ValueError("frequencies do not match the series length")
        if tokens is None:
            tokens = [p.tokens for p in self.points]
        return TimeSeries(
            label=self.label,
            points=[
                TimePoint(time=p.time, frequency=float(x), tokens=None if n is None else int(n))
                for p, x, n in zip(self.points, frequencies, tokens)
            ],
        )

    def reversed(self) -> "TimeSeries":
        """Time-reversed series, reflected about the first observation time."""
        if not self.points:
            return self
        t_first = self.points[0].time
        t_last = self.points[-1].time
        return TimeSeries(
            label=self.label,
            points=[
                TimePoint(
                    time=t_first + (t_last - p.time),
                    frequency=p.frequency,
                    tokens=p.tokens,
                )
                for p in reversed(self.points)
            ],
        )


class CountRow(BaseModel):
    """Annual token counts of the focal variant and its competitor."""

    year: int
    count_focal: int = Field(ge=0)
    count_other: int = Field(ge=0)

    model_config = _MODEL_CONFIG

    @property
    def total(self) -> int:
        return self.count_focal + self.count_other


class VariantCounts(BaseModel):
    """Per-year counts of one variant pair."""

    word: str
    rows: List[CountRow] = Field(default_factory=list)

    model_config = _MODEL_CONFIG

    @model_validator(mode="after")
    def _unique_years(self) -> "VariantCounts":
        years = [r.year for r in self.rows]
        if len(set(years)) != len(years):
            raise ValueError(f"duplicate years in counts for '{self.word}'")
        return self


class BinSpec(BaseModel):
    """Bin width in years and alignment; ``origin_year`` defaults to the first data year."""

    width_years: int = Field(ge=1)
    origin_year: Optional[int] = None

    model_config = _MODEL_CONFIG
