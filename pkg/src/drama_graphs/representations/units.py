# ABOUTME: Groups settings into text units (scenes or stage groups) in play order.
# ABOUTME: Text units become multi-edges, bipartite nodes, or hyperedges downstream.

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict

from drama_graphs.models import CharacterSet, Setting
from drama_graphs.representations.descriptors import Aggregation, DescriptorError, TextUnitId


class TextUnit(BaseModel):
    """A scene or stage group together with the settings it contains."""

    model_config = ConfigDict(frozen=True)

    index: int
    act: int
    scene: int
    stagegroup: int | None = None
    settings: tuple[Setting, ...]

    @property
    def unit_id(self) -> TextUnitId:
        return TextUnitId(act=self.act, scene=self.scene, stagegroup=self.stagegroup)

    @property
    def members(self) -> CharacterSet:
        return tuple(sorted({c for s in self.settings for c in s.onstage}))

    @property
    def n_tokens(self) -> int:
        return sum(s.n_tokens for s in self.settings)

    @property
    def n_lines(self) -> int:
        return sum(s.n_lines for s in self.settings)


def text_units(settings: Sequence[Setting], aggregation: Aggregation) -> list[TextUnit]:
    """Partition settings into units; act and scene of a unit come from its first setting."""
    if aggregation == Aggregation.SPEECH:
        raise DescriptorError("speech-level representations are built per setting, not per unit")

    grouped: dict[tuple[int, ...], list[Setting]] = {}
    for setting in settings:
        key = (
            (setting.act, setting.scene)
            if aggregation == Aggregation.SCENE
            else (setting.stagegroup,)
        )
        grouped.setdefault(key, []).append(setting)

    units = []
    for index, members in enumerate(grouped.values(), start=1):
        first = members[0]
        units.append(
            TextUnit(
                index=index,
                act=first.act,
                scene=first.scene,
                stagegroup=first.stagegroup if aggregation == Aggregation.GROUP else None,
                settings=tuple(members),
            )
        )
    return units


def character_nodes(settings: Sequence[Setting]) -> CharacterSet:
    """Every character that is on stage in some setting, sorted."""
    return tuple(sorted({c for s in settings for c in s.onstage}))
