from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bws_core.settings import settings

__all__ = [
    "WfParams",
]


class WfParams(BaseModel):
    """Wright-Fisher parameters: effective population size and selection strength."""

    popsize: float = Field(gt=0)
    selstrength: float = 0.0

    model_config = ConfigDict(
        frozen=True,
        extra="forbid" if settings.pydantic_mode == "strict" else "allow",
    )

    @field_validator("popsize", "selstrength")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("parameters must be finite")
        return value

    @property
    def integer_popsize(self) -> int:
        """Population size used by the exact model and by simulation."""
        return max(1, int(round(self.popsize)))
