# ABOUTME: Star expansions: bipartite character/text-unit graphs, undirected and directed.
# ABOUTME: The directed variant links speakers to stage groups and stage groups to listeners.

from collections.abc import Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict

from drama_graphs.models import Setting
from drama_graphs.representations.descriptors import Aggregation
from drama_graphs.representations.units import character_nodes, text_units


class NodeType(str, Enum):
    CHARACTER = "character"
    TEXT_UNIT = "text_unit"


class EdgeType(str, Enum):
    ACTIVE = "active"
    PASSIVE = "passive"


class TypedNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: str
    node_type: NodeType


class StarEdge(BaseModel):
    """Presence of a character in a text unit, weighted by what they say there."""

    model_config = ConfigDict(frozen=True)

    node1: str
    node2: str
    n_lines: int
    n_tokens: int


class DirectedStarEdge(BaseModel):
    """One speaker-to-unit or unit-to-listener edge of a single setting."""

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    key: int
    n_lines: int
    n_tokens: int
    edge_index: int
    edge_type: EdgeType


class WeightedDirectedStarEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    n_lines: int
    n_tokens: int
    edge_type: EdgeType


class StarExpansion(BaseModel):
    model_config = ConfigDict(frozen=True)

    aggregation: Aggregation
    nodes: tuple[TypedNode, ...]
    edges: tuple[StarEdge, ...]


class SpeechStarExpansion(BaseModel):
    """Directed star expansion at speech-act level, as multi-edges and aggregated."""

    model_config = ConfigDict(frozen=True)

    nodes: tuple[TypedNode, ...]
    multi_edges: tuple[DirectedStarEdge, ...]
    edges: tuple[WeightedDirectedStarEdge, ...]


def _typed_nodes(settings: Sequence[Setting], unit_ids: list[str]) -> tuple[TypedNode, ...]:
    characters = [
        TypedNode(node=c, node_type=NodeType.CHARACTER) for c in character_nodes(settings)
    ]
    units = [TypedNode(node=u, node_type=NodeType.TEXT_UNIT) for u in unit_ids]
    return tuple(characters + units)


def _group_unit_ids(settings: Sequence[Setting]) -> dict[int, str]:
    """Stage group number to the id of its text unit (act and scene of its first setting)."""
    return {
        unit.stagegroup: str(unit.unit_id)
        for unit in text_units(settings, Aggregation.GROUP)
        if unit.stagegroup is not None
    }


def build_se(settings: Sequence[Setting], aggregation: Aggregation) -> StarExpansion:
    """Link every character to every text unit whose onstage set contains them.

    Edge weights are the lines and tokens the character speaks in the unit (0 for
    silent presence).
    """
    units = text_units(settings, aggregation)
    edges: list[StarEdge] = []

    for unit in units:
        unit_id = str(unit.unit_id)
        for character in unit.members:
            spoken = [s for s in unit.settings if character in s.speaker]
            edges.append(
                StarEdge(
                    node1=character,
                    node2=unit_id,
                    n_lines=sum(s.n_lines for s in spoken),
                    n_tokens=sum(s.n_tokens for s in spoken),
                )
            )

    return StarExpansion(
        aggregation=aggregation,
        nodes=_typed_nodes(settings, [str(u.unit_id) for u in units]),
        edges=tuple(edges),
    )


def build_se_speech(settings: Sequence[Setting]) -> SpeechStarExpansion:
    """Directed edges per setting.

    Speakers point to the stage group (active), the stage group to its listeners (passive).
    """
    multi_edges: list[DirectedStarEdge] = []
    keys: dict[tuple[str, str], int] = {}

    def add(source: str, target: str, setting: Setting, edge_type: EdgeType) -> None:
        key = keys.get((source, target), 0)
        keys[(source, target)] = key + 1
        multi_edges.append(
            DirectedStarEdge(
                source=source,
                target=target,
                key=key,
                n_lines=setting.n_lines,
                n_tokens=setting.n_tokens,
                edge_index=setting.setting,
                edge_type=edge_type,
            )
        )

    group_ids = _group_unit_ids(settings)
    for setting in settings:
        unit_id = group_ids[setting.stagegroup]
        for speaker in setting.speaker:
            add(speaker, unit_id, setting, EdgeType.ACTIVE)
        for listener in setting.listeners:
            add(unit_id, listener, setting, EdgeType.PASSIVE)

    totals: dict[tuple[str, str, EdgeType], list[int]] = {}
    for edge in multi_edges:
        n_lines, n_tokens = totals.setdefault((edge.source, edge.target, edge.edge_type), [0, 0])
        totals[(edge.source, edge.target, edge.edge_type)] = [
            n_lines + edge.n_lines,
            n_tokens + edge.n_tokens,
        ]

    edges = tuple(
        WeightedDirectedStarEdge(
            source=source, target=target, n_lines=n_lines, n_tokens=n_tokens, edge_type=edge_type
        )
        for (source, target, edge_type), (n_lines, n_tokens) in totals.items()
    )

    return SpeechStarExpansion(
        nodes=_typed_nodes(settings, list(group_ids.values())),
        multi_edges=tuple(multi_edges),
        edges=edges,
    )
