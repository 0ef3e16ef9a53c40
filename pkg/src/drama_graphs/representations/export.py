# ABOUTME: Flattens a play's representations into the nineteen graphdata tables.
# ABOUTME: File names follow `{play}_{descriptor}.{edges|nodes|node-weights}.csv`.

from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict

from drama_graphs.models import Setting
from drama_graphs.representations.bundle import PlayRepresentations, build_representations
from drama_graphs.representations.clique import CliqueExpansion, collapse_multigraph
from drama_graphs.representations.descriptors import Aggregation
from drama_graphs.representations.hypergraph import DirectedHyperEdge, Hypergraph
from drama_graphs.representations.star import StarExpansion
from drama_graphs.services import tables
from drama_graphs.services.csv_io import CsvSchema

Rows = list[dict[str, Any]]


class GraphTable(BaseModel):
    """One graphdata file: its name, schema and rows."""

    model_config = ConfigDict(frozen=True)

    filename: str
    csv_schema: CsvSchema
    rows: Rows


def graphdata_filename(play: str, stem: str, kind: str) -> str:
    return f"{play}_{stem}.{kind}.csv"


def _ce_mw_rows(ce: CliqueExpansion) -> Rows:
    exclude = {"stagegroup"} if ce.aggregation == Aggregation.SCENE else set()
    return [edge.model_dump(exclude=exclude) for edge in ce.edges]


def _se_rows(se: StarExpansion) -> Rows:
    return [edge.model_dump() for edge in se.edges]


def _hg_edge_rows(hg: Hypergraph) -> Rows:
    rows = []
    for edge in hg.edges:
        row: dict[str, Any] = {"act": edge.act, "scene": edge.scene}
        if hg.aggregation == Aggregation.GROUP:
            row["stagegroup"] = edge.stagegroup
        row |= {"onstage": edge.members, "n_tokens": edge.n_tokens, "n_lines": edge.n_lines}
        rows.append(row)
    return rows


def _hg_node_weight_rows(hg: Hypergraph) -> Rows:
    rows = []
    for edge in hg.edges:
        for weights in edge.member_weights:
            rows.append(
                {"act": edge.act, "scene": edge.scene, "stagegroup": edge.stagegroup}
                | weights.model_dump()
            )
    return rows


def _hg_speech_rows(edges: Sequence[DirectedHyperEdge]) -> Rows:
    return [
        {
            "act": e.act,
            "scene": e.scene,
            "stagegroup": e.stagegroup,
            "setting": e.setting,
            "speaker": e.source,
            "onstage": e.target_context,
            "n_tokens": e.n_tokens,
            "n_lines": e.n_lines,
        }
        for e in edges
    ]


def graphdata_tables(reprs: PlayRepresentations) -> list[GraphTable]:
    """The nineteen graphdata tables of one play, in a fixed order."""
    play = reprs.play

    def table(stem: str, kind: str, schema: CsvSchema, rows: Rows) -> GraphTable:
        return GraphTable(
            filename=graphdata_filename(play, stem, kind), csv_schema=schema, rows=rows
        )

    hg_nodes = [
        {"node": node} | weights.model_dump() for node, weights in reprs.hg_group.nodes.items()
    ]

    return [
        table("ce", "nodes", tables.CE_NODES, [{"node": n} for n in reprs.ce_group.nodes]),
        table("ce-scene-mw", "edges", tables.CE_SCENE_MW, _ce_mw_rows(reprs.ce_scene)),
        table("ce-group-mw", "edges", tables.CE_GROUP_MW, _ce_mw_rows(reprs.ce_group)),
        table(
            "ce-scene-w",
            "edges",
            tables.CE_W,
            [e.model_dump() for e in collapse_multigraph(reprs.ce_scene.edges)],
        ),
        table(
            "ce-group-w",
            "edges",
            tables.CE_W,
            [e.model_dump() for e in collapse_multigraph(reprs.ce_group.edges)],
        ),
        table("se-scene", "nodes", tables.SE_NODES, [n.model_dump() for n in reprs.se_scene.nodes]),
        table("se-group", "nodes", tables.SE_NODES, [n.model_dump() for n in reprs.se_group.nodes]),
        table(
            "se-speech", "nodes", tables.SE_NODES, [n.model_dump() for n in reprs.se_speech.nodes]
        ),
        table("se-scene-w", "edges", tables.SE_W, _se_rows(reprs.se_scene)),
        table("se-group-w", "edges", tables.SE_W, _se_rows(reprs.se_group)),
        table(
            "se-speech-mwd",
            "edges",
            tables.SE_SPEECH_MWD,
            [e.model_dump() for e in reprs.se_speech.multi_edges],
        ),
        table(
            "se-speech-wd",
            "edges",
            tables.SE_SPEECH_WD,
            [e.model_dump() for e in reprs.se_speech.edges],
        ),
        table("hg", "nodes", tables.HG_NODES, hg_nodes),
        table("hg-scene-mw", "edges", tables.HG_SCENE_MW, _hg_edge_rows(reprs.hg_scene)),
        table("hg-group-mw", "edges", tables.HG_GROUP_MW, _hg_edge_rows(reprs.hg_group)),
        table(
            "hg-scene-mw",
            "node-weights",
            tables.HG_SCENE_NODE_WEIGHTS,
            _hg_node_weight_rows(reprs.hg_scene),
        ),
        table(
            "hg-group-mw",
            "node-weights",
            tables.HG_GROUP_NODE_WEIGHTS,
            _hg_node_weight_rows(reprs.hg_group),
        ),
        table(
            "hg-speech-mwd",
            "edges",
            tables.HG_SPEECH_MWD,
            _hg_speech_rows(reprs.hg_speech.multi_edges),
        ),
        table("hg-speech-wd", "edges", tables.HG_SPEECH_WD, _hg_speech_rows(reprs.hg_speech.edges)),
    ]


def build_all(play: str, settings: Sequence[Setting]) -> dict[str, GraphTable]:
    """Build every representation of a play and key its graphdata tables by file name."""
    return {t.filename: t for t in graphdata_tables(build_representations(play, settings))}
