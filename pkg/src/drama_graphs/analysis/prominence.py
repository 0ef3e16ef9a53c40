# ABOUTME: Rolling share of spoken lines per character over the settings of a play.
# ABOUTME: Lines of multi-speaker settings are split equally among the speakers.

from collections.abc import Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from drama_graphs.analysis.ranking import AnalysisError, CharacterPredicate
from drama_graphs.models import Setting


class ProminenceSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    setting: int
    act: int
    fraction: float = Field(ge=0.0, le=1.0)


class ProminenceSeries(BaseModel):
    model_config = ConfigDict(frozen=True)

    character: str
    samples: tuple[ProminenceSample, ...]


def _line_matrix(settings: Sequence[Setting], characters: list[str]) -> np.ndarray:
    column = {c: i for i, c in enumerate(characters)}
    lines = np.zeros((len(settings), len(characters)))
    for row, setting in enumerate(settings):
        share = setting.n_lines / len(setting.speaker)
        for speaker in setting.speaker:
            lines[row, column[speaker]] += share
    return lines


def prominence_timeseries(
    settings: Sequence[Setting],
    window: int,
    keep: CharacterPredicate | None = None,
) -> list[ProminenceSeries]:
    """Fraction of the lines spoken within the last `window` settings, per speaker.

    Positions whose window holds no lines are skipped. `keep` drops characters after
    the fractions are computed, so kept fractions may sum to less than one.

    Raises:
        AnalysisError: If `window` is smaller than one.
    """
    if window < 1:
        raise AnalysisError(f"window must be at least 1, got {window}")

    characters = sorted({c for s in settings for c in s.speaker})
    lines = _line_matrix(settings, characters)

    cumulative = np.vstack([np.zeros((1, len(characters))), np.cumsum(lines, axis=0)])
    ends = np.arange(1, len(settings) + 1)
    starts = np.maximum(ends - window, 0)
    windowed = np.clip(cumulative[ends] - cumulative[starts], 0.0, None)
    totals = windowed.sum(axis=1)

    positions = np.flatnonzero(totals > 0)
    fractions = windowed[positions] / totals[positions, None]

    series = []
    for column, character in enumerate(characters):
        if keep is not None and not keep(character):
            continue
        samples = tuple(
            ProminenceSample(
                setting=settings[position].setting,
                act=settings[position].act,
                fraction=min(1.0, float(fractions[row, column])),
            )
            for row, position in enumerate(positions)
        )
        series.append(ProminenceSeries(character=character, samples=samples))
    return series


def act_starts(settings: Sequence[Setting]) -> dict[int, int]:
    """First setting number of every act, for marking act boundaries."""
    starts: dict[int, int] = {}
    for setting in settings:
        starts.setdefault(setting.act, setting.setting)
    return starts


def timeseries_rows(series: Sequence[ProminenceSeries]) -> list[dict[str, Any]]:
    """Long-format rows ordered by setting, then character."""
    rows = [
        {"setting": s.setting, "act": s.act, "node": item.character, "fraction": s.fraction}
        for item in series
        for s in item.samples
    ]
    return sorted(rows, key=lambda row: (row["setting"], row["node"]))
