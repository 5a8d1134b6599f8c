"""Word-set averages and sampling-error equalisation."""

from __future__ import annotations

from typing import Optional, Sequence

import pandas as pd

from bws_core.exceptions import EmptySeriesError, MissingTokensError
from bws_core.schemas import TimeSeries
from bws_core.settings import settings
from bws_core.wf.rng import make_rng

__all__ = [
    "aggregate_word_set",
    "equalize_sampling",
]


def aggregate_word_set(
    series_list: Sequence[TimeSeries],
    *,
    label: str = "",
    token_weighted: bool = False,
) -> TimeSeries:
    """Average the members' frequencies bin by bin.

    A word missing from a bin is left out of that bin's mean; token counts of
    the contributors are summed. With ``token_weighted`` each frequency is
    weighted by its token count.
    """
    rows = []
    for s in sorted(series_list, key=lambda s: s.label):
        for p in s.points:
            rows.append((p.time, p.frequency, p.tokens))
    if not rows:
        raise EmptySeriesError(f"word set '{label}' has no observations")
    frame = pd.DataFrame(rows, columns=["time", "frequency", "tokens"])
    has_tokens = frame["tokens"].notna().all()
    if token_weighted and not has_tokens:
        raise MissingTokensError("token-weighted averaging needs token counts on every point")

    grouped = frame.groupby("time", sort=True)
    if token_weighted:
        weighted = (frame["frequency"] * frame["tokens"]).groupby(frame["time"]).sum()
        freq = weighted / grouped["tokens"].sum()
    else:
        freq = grouped["frequency"].mean()
    tokens = grouped["tokens"].sum().astype("int64") if has_tokens else None
    return TimeSeries.from_arrays(
        freq.index.to_numpy(dtype=float),
        freq.clip(0.0, 1.0).to_numpy(dtype=float),
        None if tokens is None else tokens.to_numpy(),
        label=label,
    )


def equalize_sampling(
    series: TimeSeries, seed: Optional[int] = None, *, stream: int = 0
) -> TimeSeries:
    """Downsample every point to the smallest token count in the series.

    A point with ``n`` tokens and frequency ``x`` is replaced by a
    hypergeometric draw of ``n_min`` tokens from ``round(x * n)`` focal and
    ``n - round(x * n)`` other tokens. Draws come from ``make_rng(seed, stream)``.
    """
    tokens = series.tokens
    if tokens is None:
        raise MissingTokensError(f"series '{series.label}' lacks token counts")
    if len(series) == 0:
        return series
    seed = settings.default_seed if seed is None else seed
    rng = make_rng(seed, stream)
    n_min = int(tokens.min())
    if n_min == 0:
        raise MissingTokensError(f"series '{series.label}' has a point with zero tokens")

    freqs = series.frequencies.copy()
    for i, (x, n) in enumerate(zip(series.frequencies, tokens)):
        if n == n_min:
            continue
        good = int(round(x * n))
        freqs[i] = rng.hypergeometric(good, int(n) - good, n_min) / n_min
    return series.with_frequencies(freqs, tokens=[n_min] * len(series))
