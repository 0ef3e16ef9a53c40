# ABOUTME: Degree-based character rankings for every graph and hypergraph representation.
# ABOUTME: Includes cardinality-filtered hypergraph rankings and named-character allowlists.

from collections.abc import Callable, Iterable, Mapping
from enum import Enum
from pathlib import Path
from typing import Literal, Self

import networkx as nx
import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field
from scipy.stats import rankdata

from drama_graphs.representations import (
    Aggregation,
    DescriptorError,
    Hypergraph,
    Model,
    NodeType,
    PlayRepresentations,
    ReprDescriptor,
    to_networkx,
)

log = structlog.get_logger()

DegreeWeight = Literal["lines", "tokens"]
CharacterPredicate = Callable[[str], bool]

_WEIGHT_ATTRIBUTE: dict[str, str] = {"lines": "n_lines", "tokens": "n_tokens"}


class AnalysisError(ValueError):
    """Raised when an analysis is undefined for its inputs."""


class RankEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: str
    score: int | float
    rank: int = Field(ge=1)
    fractional_rank: float = Field(ge=1)


class RankTable(BaseModel):
    """Characters ordered by score, highest first.

    `rank` is ordinal with a lexicographic tie-break (for display); `fractional_rank`
    averages over ties (for correlations).
    """

    model_config = ConfigDict(frozen=True)

    representation: str
    entries: tuple[RankEntry, ...]

    @classmethod
    def from_scores(cls, representation: str, scores: Mapping[str, int | float]) -> Self:
        nodes = sorted(scores, key=lambda node: (-scores[node], node))
        values = np.array([scores[node] for node in nodes], dtype=float)
        fractional = rankdata(-values, method="average") if len(nodes) else np.array([])
        entries = tuple(
            RankEntry(node=node, score=scores[node], rank=index, fractional_rank=float(frac))
            for index, (node, frac) in enumerate(zip(nodes, fractional, strict=True), start=1)
        )
        return cls(representation=representation, entries=entries)

    @property
    def scores(self) -> dict[str, int | float]:
        return {e.node: e.score for e in self.entries}

    @property
    def nodes(self) -> set[str]:
        return {e.node for e in self.entries}

    def fractional_ranks(self, nodes: Iterable[str]) -> np.ndarray:
        lookup = {e.node: e.fractional_rank for e in self.entries}
        return np.array([lookup[node] for node in nodes], dtype=float)

    def restrict(self, predicate: CharacterPredicate) -> "RankTable":
        """Keep matching characters and rank them among themselves."""
        kept = {node: score for node, score in self.scores.items() if predicate(node)}
        return RankTable.from_scores(self.representation, kept)


class FilterMode(str, Enum):
    AT_MOST = "at_most"
    AT_LEAST = "at_least"


class CardinalityFilter(BaseModel):
    """Keeps hyperedges of cardinality at most or at least `threshold`."""

    model_config = ConfigDict(frozen=True)

    threshold: int = Field(ge=1)
    mode: FilterMode

    def admits(self, cardinality: int) -> bool:
        if self.mode == FilterMode.AT_MOST:
            return cardinality <= self.threshold
        return cardinality >= self.threshold

    def __str__(self) -> str:
        return f"{self.mode.value}-{self.threshold}"


def _graph_degrees(
    reprs: PlayRepresentations, descriptor: ReprDescriptor, weight: DegreeWeight
) -> dict[str, int | float]:
    graph = to_networkx(reprs, descriptor)
    attribute = _WEIGHT_ATTRIBUTE[weight] if descriptor.is_weighted else None

    characters = [
        node
        for node, node_type in graph.nodes(data="node_type", default=NodeType.CHARACTER.value)
        if node_type == NodeType.CHARACTER.value
    ]
    # in- plus out-degree for directed views
    degrees = nx.degree(graph, characters, weight=attribute)
    return {node: degree for node, degree in degrees}


def _hypergraph_degrees(
    hg: Hypergraph,
    weighted: bool,
    weight: DegreeWeight,
    edge_filter: CardinalityFilter | None = None,
    own_speech: bool = False,
) -> dict[str, int | float]:
    scores: dict[str, int | float] = dict.fromkeys(hg.nodes, 0)
    for edge in hg.edges:
        if edge_filter is not None and not edge_filter.admits(edge.cardinality):
            continue
        for member in edge.member_weights:
            if not weighted:
                scores[member.node] += 1
            elif own_speech:
                scores[member.node] += (
                    member.n_lines_speaker if weight == "lines" else member.n_tokens_speaker
                )
            else:
                scores[member.node] += edge.n_lines if weight == "lines" else edge.n_tokens
    return scores


def degree_ranking(
    reprs: PlayRepresentations,
    descriptor: ReprDescriptor,
    weight: DegreeWeight = "lines",
    own_speech: bool = False,
) -> RankTable:
    """Rank the characters of a play by their degree in one representation.

    Text-unit nodes of star expansions are not ranked. Directed degrees add in- and
    out-edges. Weighted hypergraph degrees sum incident hyperedge weights, or with
    `own_speech` the character's own spoken lines within each hyperedge.

    Raises:
        DescriptorError: For speech-level hypergraphs, which have no degree.
    """
    if descriptor.model == Model.HG:
        if descriptor.aggregation == Aggregation.SPEECH:
            raise DescriptorError(f"no degree defined for {descriptor}")
        scores = _hypergraph_degrees(
            reprs.hypergraph(descriptor.aggregation),
            weighted=descriptor.is_weighted,
            weight=weight,
            own_speech=own_speech,
        )
    else:
        scores = _graph_degrees(reprs, descriptor, weight)

    table = RankTable.from_scores(str(descriptor), scores)
    log.debug("degree_ranking", play=reprs.play, representation=str(descriptor), nodes=len(scores))
    return table


def filtered_hg_ranking(
    hg: Hypergraph, edge_filter: CardinalityFilter, weight: DegreeWeight = "lines"
) -> RankTable:
    """Weighted hypergraph degree counting only hyperedges the filter admits."""
    scores = _hypergraph_degrees(hg, weighted=True, weight=weight, edge_filter=edge_filter)
    return RankTable.from_scores(f"hg-{hg.aggregation.value}-mw-{edge_filter}", scores)


def named_character_filter(allowlist: Iterable[str]) -> CharacterPredicate:
    """Predicate accepting only the listed characters (with or without leading `#`)."""
    allowed = frozenset(name if name.startswith("#") else f"#{name}" for name in allowlist)
    return lambda node: node in allowed


def load_allowlist(path: Path) -> list[str]:
    """One character id per line; blank lines are ignored."""
    names = [line.strip() for line in path.read_text(encoding="utf-8").splitlines()]
    return [name for name in names if name]


def rank_table_rows(table: RankTable) -> list[dict[str, int | float | str]]:
    return [entry.model_dump() for entry in table.entries]
