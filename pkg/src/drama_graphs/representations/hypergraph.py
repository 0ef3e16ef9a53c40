# ABOUTME: Hypergraphs whose hyperedges are the onstage sets of scenes, stage groups or settings.
# ABOUTME: Carries edge-specific node weights and global node weights.

from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from drama_graphs.models import CharacterId, CharacterSet, Setting
from drama_graphs.representations.descriptors import Aggregation
from drama_graphs.representations.units import character_nodes, text_units


class NodeWeights(BaseModel):
    """Lines and tokens a character speaks, and hears or speaks while on stage."""

    model_config = ConfigDict(frozen=True)

    n_tokens_onstage: int = 0
    n_tokens_speaker: int = 0
    n_lines_onstage: int = 0
    n_lines_speaker: int = 0

    def __add__(self, other: "NodeWeights") -> "NodeWeights":
        return NodeWeights(
            n_tokens_onstage=self.n_tokens_onstage + other.n_tokens_onstage,
            n_tokens_speaker=self.n_tokens_speaker + other.n_tokens_speaker,
            n_lines_onstage=self.n_lines_onstage + other.n_lines_onstage,
            n_lines_speaker=self.n_lines_speaker + other.n_lines_speaker,
        )


class MemberWeights(NodeWeights):
    node: CharacterId


class HyperEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    members: CharacterSet
    act: int
    scene: int
    stagegroup: int | None = None
    n_tokens: int
    n_lines: int
    member_weights: tuple[MemberWeights, ...]

    @property
    def cardinality(self) -> int:
        return len(self.members)


class Hypergraph(BaseModel):
    """Character nodes with global weights and hyperedges in play order."""

    model_config = ConfigDict(frozen=True)

    aggregation: Aggregation
    nodes: dict[CharacterId, NodeWeights]
    edges: tuple[HyperEdge, ...]

    @model_validator(mode="after")
    def _members_are_nodes(self) -> "Hypergraph":
        for edge in self.edges:
            missing = set(edge.members) - set(self.nodes)
            if missing:
                raise ValueError(f"hyperedge members missing from nodes: {sorted(missing)}")
        return self


class DirectedHyperEdge(BaseModel):
    """Information flow from speakers to everyone on stage, for one setting or a run of them."""

    model_config = ConfigDict(frozen=True)

    act: int
    scene: int
    stagegroup: int
    setting: int | None = None
    source: CharacterSet
    target_context: CharacterSet
    n_tokens: int
    n_lines: int

    @model_validator(mode="after")
    def _source_in_context(self) -> "DirectedHyperEdge":
        if not set(self.source) <= set(self.target_context):
            raise ValueError("hyperedge source must be contained in its target context")
        return self

    @property
    def listeners(self) -> CharacterSet:
        return tuple(c for c in self.target_context if c not in self.source)


class SpeechHypergraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    multi_edges: tuple[DirectedHyperEdge, ...]
    edges: tuple[DirectedHyperEdge, ...]


def _setting_weights(setting: Setting, character: str) -> NodeWeights:
    if character not in setting.onstage:
        return NodeWeights()
    spoke = character in setting.speaker
    return NodeWeights(
        n_tokens_onstage=setting.n_tokens,
        n_tokens_speaker=setting.n_tokens if spoke else 0,
        n_lines_onstage=setting.n_lines,
        n_lines_speaker=setting.n_lines if spoke else 0,
    )


def node_weights(settings: Iterable[Setting], character: str) -> NodeWeights:
    """Accumulate a character's weights over the given settings."""
    total = NodeWeights()
    for setting in settings:
        total = total + _setting_weights(setting, character)
    return total


def build_hg(settings: Sequence[Setting], aggregation: Aggregation) -> Hypergraph:
    """One hyperedge per scene or stage group, members being everyone on stage in it."""
    edges: list[HyperEdge] = []
    for unit in text_units(settings, aggregation):
        member_weights = tuple(
            MemberWeights(node=c, **node_weights(unit.settings, c).model_dump())
            for c in unit.members
        )
        edges.append(
            HyperEdge(
                members=unit.members,
                act=unit.act,
                scene=unit.scene,
                stagegroup=unit.stagegroup,
                n_tokens=unit.n_tokens,
                n_lines=unit.n_lines,
                member_weights=member_weights,
            )
        )

    nodes = {c: node_weights(settings, c) for c in character_nodes(settings)}
    return Hypergraph(aggregation=aggregation, nodes=nodes, edges=tuple(edges))


def build_hg_speech(settings: Sequence[Setting]) -> SpeechHypergraph:
    """Directed hyperedges per setting, and aggregated over consecutive identical flows."""
    multi_edges = tuple(
        DirectedHyperEdge(
            act=s.act,
            scene=s.scene,
            stagegroup=s.stagegroup,
            setting=s.setting,
            source=s.speaker,
            target_context=s.onstage,
            n_tokens=s.n_tokens,
            n_lines=s.n_lines,
        )
        for s in settings
    )

    edges: list[DirectedHyperEdge] = []
    for edge in multi_edges:
        last = edges[-1] if edges else None
        if last and (last.source, last.target_context) == (edge.source, edge.target_context):
            edges[-1] = last.model_copy(
                update={
                    "n_tokens": last.n_tokens + edge.n_tokens,
                    "n_lines": last.n_lines + edge.n_lines,
                }
            )
        else:
            edges.append(edge.model_copy(update={"setting": None}))

    return SpeechHypergraph(multi_edges=multi_edges, edges=tuple(edges))
