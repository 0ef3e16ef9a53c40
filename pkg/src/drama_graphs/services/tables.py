# ABOUTME: Column schemas of every emitted table and converters for the per-play data files.
# ABOUTME: Covers cast, raw and agg tables plus graphdata, metadata and analysis outputs.

from collections.abc import Iterable, Sequence
from typing import Any

from drama_graphs.models import CastEntry, RawEvent, Setting, parse_characters
from drama_graphs.services.csv_io import CsvSchema

CAST = CsvSchema(name="cast", columns=("xml:id", "corresp"))
RAW = CsvSchema(
    name="raw",
    columns=(
        "tag",
        "type",
        "n",
        "text",
        "xml:id",
        "who",
        "lemma",
        "ana",
        "part",
        "rendition",
        "prev",
        "act",
        "scene",
        "onstage",
        "stagegroup_raw",
        "speaker",
    ),
)
AGG = CsvSchema(
    name="agg",
    columns=(
        "act",
        "scene",
        "stagegroup",
        "stagegroup_raw",
        "setting",
        "onstage",
        "speaker",
        "n_lines",
        "n_tokens",
    ),
)

CE_NODES = CsvSchema(name="ce.nodes", columns=("node",))
CE_SCENE_MW = CsvSchema(
    name="ce-scene-mw",
    columns=("node1", "node2", "key", "act", "scene", "n_tokens", "n_lines", "edge_index"),
)
CE_GROUP_MW = CsvSchema(
    name="ce-group-mw",
    columns=(
        "node1",
        "node2",
        "key",
        "act",
        "scene",
        "stagegroup",
        "n_tokens",
        "n_lines",
        "edge_index",
    ),
)
CE_W = CsvSchema(name="ce-w", columns=("node1", "node2", "count", "n_tokens", "n_lines"))

SE_NODES = CsvSchema(name="se.nodes", columns=("node", "node_type"))
SE_W = CsvSchema(name="se-w", columns=("node1", "node2", "n_lines", "n_tokens"))
SE_SPEECH_MWD = CsvSchema(
    name="se-speech-mwd",
    columns=("source", "target", "key", "n_lines", "n_tokens", "edge_index", "edge_type"),
)
SE_SPEECH_WD = CsvSchema(
    name="se-speech-wd", columns=("source", "target", "n_lines", "n_tokens", "edge_type")
)

_WEIGHT_COLUMNS = ("n_tokens_speaker", "n_lines_speaker", "n_tokens_onstage", "n_lines_onstage")

HG_NODES = CsvSchema(
    name="hg.nodes",
    columns=("node", "n_tokens_onstage", "n_tokens_speaker", "n_lines_onstage", "n_lines_speaker"),
)
HG_SCENE_MW = CsvSchema(
    name="hg-scene-mw", columns=("act", "scene", "onstage", "n_tokens", "n_lines")
)
HG_GROUP_MW = CsvSchema(
    name="hg-group-mw", columns=("act", "scene", "stagegroup", "onstage", "n_tokens", "n_lines")
)
HG_SCENE_NODE_WEIGHTS = CsvSchema(
    name="hg-scene-mw.node-weights", columns=("act", "scene", "node", *_WEIGHT_COLUMNS)
)
HG_GROUP_NODE_WEIGHTS = CsvSchema(
    name="hg-group-mw.node-weights",
    columns=("act", "scene", "stagegroup", "node", *_WEIGHT_COLUMNS),
)
HG_SPEECH_MWD = CsvSchema(
    name="hg-speech-mwd",
    columns=("act", "scene", "stagegroup", "setting", "speaker", "onstage", "n_tokens", "n_lines"),
)
HG_SPEECH_WD = CsvSchema(
    name="hg-speech-wd",
    columns=("act", "scene", "stagegroup", "speaker", "onstage", "n_tokens", "n_lines"),
)

PLAYTYPES = CsvSchema(name="playtypes", columns=("play_name", "play_type"))
RANKING = CsvSchema(name="ranking", columns=("node", "score", "rank", "fractional_rank"))
TIMESERIES = CsvSchema(name="timeseries", columns=("setting", "act", "node", "fraction"))
ACT_STARTS = CsvSchema(name="act_starts", columns=("act", "setting"))
SUMMARY = CsvSchema(name="summary", columns=("play_name", "play_type", "n_lines", "n_speakers"))


def correlation_schema(labels: Sequence[str]) -> CsvSchema:
    """Square matrix with a leading row label column."""
    return CsvSchema(name="correlation", columns=("representation", *labels))


def _optional(value: str) -> str | None:
    return value or None


def cast_rows(entries: Iterable[CastEntry]) -> list[dict[str, Any]]:
    return [{"xml:id": e.xml_id, "corresp": e.corresp} for e in entries]


def cast_from_rows(rows: Iterable[dict[str, str]]) -> list[CastEntry]:
    return [CastEntry(xml_id=r["xml:id"], corresp=_optional(r["corresp"])) for r in rows]


def event_rows(events: Iterable[RawEvent]) -> list[dict[str, Any]]:
    return [
        {
            "tag": e.tag,
            "type": e.type_attr,
            "n": e.n,
            "text": e.text,
            "xml:id": e.xml_id,
            "who": e.who,
            "lemma": e.lemma,
            "ana": e.ana,
            "part": e.part,
            "rendition": e.rendition,
            "prev": e.prev,
            "act": e.act,
            "scene": e.scene,
            "onstage": e.onstage,
            "stagegroup_raw": e.stagegroup_raw,
            "speaker": e.speaker,
        }
        for e in events
    ]


def events_from_rows(rows: Iterable[dict[str, str]]) -> list[RawEvent]:
    """Rebuild raw events from `raw.csv` rows."""
    return [
        RawEvent(
            tag=r["tag"],
            type_attr=_optional(r["type"]),
            n=_optional(r["n"]),
            text=_optional(r["text"]),
            xml_id=_optional(r["xml:id"]),
            who=parse_characters(r["who"]) or None,
            lemma=_optional(r["lemma"]),
            ana=_optional(r["ana"]),
            part=_optional(r["part"]),
            rendition=_optional(r["rendition"]),
            prev=_optional(r["prev"]),
            act=int(r["act"]),
            scene=int(r["scene"]),
            onstage=parse_characters(r["onstage"]),
            stagegroup_raw=int(r["stagegroup_raw"]),
            speaker=parse_characters(r["speaker"]),
        )
        for r in rows
    ]


def setting_rows(settings: Iterable[Setting]) -> list[dict[str, Any]]:
    return [s.model_dump() for s in settings]


def settings_from_rows(rows: Iterable[dict[str, str]]) -> list[Setting]:
    """Rebuild settings from `agg.csv` rows."""
    return [
        Setting(
            act=int(r["act"]),
            scene=int(r["scene"]),
            stagegroup=int(r["stagegroup"]),
            stagegroup_raw=int(r["stagegroup_raw"]),
            setting=int(r["setting"]),
            onstage=parse_characters(r["onstage"]),
            speaker=parse_characters(r["speaker"]),
            n_lines=int(r["n_lines"]),
            n_tokens=int(r["n_tokens"]),
        )
        for r in rows
    ]
