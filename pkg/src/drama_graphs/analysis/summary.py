# ABOUTME: Corpus overview: spoken lines and number of speaking characters per play.

from collections.abc import Mapping, Sequence

from pydantic import BaseModel, ConfigDict

from drama_graphs.analysis.ranking import AnalysisError
from drama_graphs.models import Setting


class PlaySummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    play_name: str
    play_type: str
    n_lines: int
    n_speakers: int


def corpus_summary(
    plays: Mapping[str, Sequence[Setting]], playtypes: Mapping[str, str]
) -> list[PlaySummary]:
    """One row per play, sorted by play name.

    Raises:
        AnalysisError: If a play has no entry in the play-type metadata.
    """
    missing = sorted(play for play in plays if play not in playtypes)
    if missing:
        raise AnalysisError(f"plays missing from play-type metadata: {missing}")

    return [
        PlaySummary(
            play_name=play,
            play_type=playtypes[play],
            n_lines=sum(s.n_lines for s in plays[play]),
            n_speakers=len({c for s in plays[play] for c in s.speaker}),
        )
        for play in sorted(plays)
    ]
