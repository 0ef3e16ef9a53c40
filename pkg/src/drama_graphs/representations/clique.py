# ABOUTME: Clique expansions: character co-occurrence multigraphs per scene or stage group.
# ABOUTME: Also collapses multi-edges into count-weighted simple edges.

from collections.abc import Iterable, Sequence
from itertools import combinations

from pydantic import BaseModel, ConfigDict

from drama_graphs.models import CharacterSet, Setting
from drama_graphs.representations.descriptors import Aggregation
from drama_graphs.representations.units import character_nodes, text_units


class CliqueEdge(BaseModel):
    """One co-occurrence of a character pair in one text unit."""

    model_config = ConfigDict(frozen=True)

    node1: str
    node2: str
    key: int
    act: int
    scene: int
    stagegroup: int | None = None
    n_tokens: int
    n_lines: int
    edge_index: int


class CountEdge(BaseModel):
    """A character pair with its multi-edges collapsed into counts and sums."""

    model_config = ConfigDict(frozen=True)

    node1: str
    node2: str
    count: int
    n_tokens: int
    n_lines: int


class CliqueExpansion(BaseModel):
    """Nodes and ordered multi-edges of a clique expansion."""

    model_config = ConfigDict(frozen=True)

    aggregation: Aggregation
    nodes: CharacterSet
    edges: tuple[CliqueEdge, ...]


def build_ce(settings: Sequence[Setting], aggregation: Aggregation) -> CliqueExpansion:
    """One multi-edge per character pair per text unit in which both are on stage.

    Edges are ordered by text unit, then by pair; `key` numbers the multi-edges of a pair.
    """
    edges: list[CliqueEdge] = []
    keys: dict[tuple[str, str], int] = {}

    for unit in text_units(settings, aggregation):
        for node1, node2 in combinations(unit.members, 2):
            key = keys.get((node1, node2), 0)
            keys[(node1, node2)] = key + 1
            edges.append(
                CliqueEdge(
                    node1=node1,
                    node2=node2,
                    key=key,
                    act=unit.act,
                    scene=unit.scene,
                    stagegroup=unit.stagegroup,
                    n_tokens=unit.n_tokens,
                    n_lines=unit.n_lines,
                    edge_index=unit.index,
                )
            )

    return CliqueExpansion(
        aggregation=aggregation, nodes=character_nodes(settings), edges=tuple(edges)
    )


def collapse_multigraph(edges: Iterable[CliqueEdge]) -> list[CountEdge]:
    """Collapse multi-edges into one row per pair, sorted by pair."""
    totals: dict[tuple[str, str], list[int]] = {}
    for edge in edges:
        count, n_tokens, n_lines = totals.setdefault((edge.node1, edge.node2), [0, 0, 0])
        totals[(edge.node1, edge.node2)] = [
            count + 1,
            n_tokens + edge.n_tokens,
            n_lines + edge.n_lines,
        ]

    return [
        CountEdge(node1=node1, node2=node2, count=count, n_tokens=n_tokens, n_lines=n_lines)
        for (node1, node2), (count, n_tokens, n_lines) in sorted(totals.items())
    ]
