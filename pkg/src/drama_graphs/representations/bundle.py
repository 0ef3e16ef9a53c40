# ABOUTME: Builds every representation of one play from its setting table in a single pass.
# ABOUTME: The bundle is what graphdata export, degree ranking and DOT drawing consume.

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict

from drama_graphs.models import Setting
from drama_graphs.representations.clique import CliqueExpansion, build_ce
from drama_graphs.representations.descriptors import Aggregation
from drama_graphs.representations.hypergraph import (
    Hypergraph,
    SpeechHypergraph,
    build_hg,
    build_hg_speech,
)
from drama_graphs.representations.star import (
    SpeechStarExpansion,
    StarExpansion,
    build_se,
    build_se_speech,
)


class PlayRepresentations(BaseModel):
    model_config = ConfigDict(frozen=True)

    play: str
    ce_scene: CliqueExpansion
    ce_group: CliqueExpansion
    se_scene: StarExpansion
    se_group: StarExpansion
    se_speech: SpeechStarExpansion
    hg_scene: Hypergraph
    hg_group: Hypergraph
    hg_speech: SpeechHypergraph

    def clique(self, aggregation: Aggregation) -> CliqueExpansion:
        return self.ce_scene if aggregation == Aggregation.SCENE else self.ce_group

    def star(self, aggregation: Aggregation) -> StarExpansion:
        return self.se_scene if aggregation == Aggregation.SCENE else self.se_group

    def hypergraph(self, aggregation: Aggregation) -> Hypergraph:
        return self.hg_scene if aggregation == Aggregation.SCENE else self.hg_group


def build_representations(play: str, settings: Sequence[Setting]) -> PlayRepresentations:
    """Clique expansions, star expansions and hypergraphs at every granularity."""
    return PlayRepresentations(
        play=play,
        ce_scene=build_ce(settings, Aggregation.SCENE),
        ce_group=build_ce(settings, Aggregation.GROUP),
        se_scene=build_se(settings, Aggregation.SCENE),
        se_group=build_se(settings, Aggregation.GROUP),
        se_speech=build_se_speech(settings),
        hg_scene=build_hg(settings, Aggregation.SCENE),
        hg_group=build_hg(settings, Aggregation.GROUP),
        hg_speech=build_hg_speech(settings),
    )
