# ABOUTME: End-to-end corpus pipeline: extract, aggregate, build, and analyze every play.
# ABOUTME: Plays run independently (optionally in a process pool); failures are reported per play.

import json
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Literal

import structlog
from pydantic import BaseModel, ConfigDict, Field

from drama_graphs.aggregation import aggregate_settings
from drama_graphs.analysis import (
    AnalysisError,
    CardinalityFilter,
    CorrMatrix,
    RankTable,
    act_starts,
    corpus_residuals,
    corpus_summary,
    corr_matrix_rows,
    correlation_matrix,
    degree_ranking,
    filtered_hg_ranking,
    load_allowlist,
    named_character_filter,
    prominence_timeseries,
    rank_table_rows,
    timeseries_rows,
)
from drama_graphs.analysis.ranking import CharacterPredicate
from drama_graphs.config import Settings, get_settings
from drama_graphs.models import CastEntry, FlushPolicy, ParseWarning, RawEvent, Setting
from drama_graphs.representations import (
    RANKED_REPRESENTATIONS,
    PlayRepresentations,
    build_representations,
    graphdata_tables,
    parse_descriptor,
    to_networkx,
    write_dot,
)
from drama_graphs.services import tables
from drama_graphs.services.csv_io import read_csv, write_table
from drama_graphs.services.layout import CorpusLayout
from drama_graphs.tei import TOY_SUFFIX, TeiBodyParser, parse_cast, play_name
from drama_graphs.toy import parse_toy, toy_to_events
from drama_graphs.utils.playtypes import PLAY_TYPES, write_playtypes

log = structlog.get_logger()

HYPERGRAPH_RANKINGS: tuple[str, ...] = ("hg-scene-mb", "hg-scene-mw", "hg-group-mb", "hg-group-mw")

DEFAULT_CARDINALITY_FILTERS = tuple(
    CardinalityFilter(threshold=threshold, mode=mode)
    for mode in ("at_most", "at_least")
    for threshold in range(1, 7)
)


class PipelineConfig(BaseModel):
    """Everything that influences the pipeline's outputs."""

    model_config = ConfigDict(frozen=True)

    plays: list[str] | None = None
    flush_policy: FlushPolicy = Field(default_factory=FlushPolicy.for_tei)
    degree_weight: Literal["lines", "tokens"] = "lines"
    timeseries_window: int = Field(default=50, ge=1)
    named_characters_file: Path | None = None
    workers: int = Field(default=1, ge=1)
    write_dot: bool = False
    cardinality_filters: tuple[CardinalityFilter, ...] = DEFAULT_CARDINALITY_FILTERS

    @classmethod
    def from_settings(cls, settings: Settings | None = None, **overrides: Any) -> "PipelineConfig":
        settings = settings or get_settings()
        values: dict[str, Any] = {
            "flush_policy": FlushPolicy(
                flush_on_scene_start=settings.flush_on_scene_start,
                restore_speaker=settings.restore_speaker,
            ),
            "degree_weight": settings.degree_weight,
            "timeseries_window": settings.timeseries_window,
            "named_characters_file": settings.named_characters_file,
            "workers": settings.workers,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def character_filter(self) -> CharacterPredicate | None:
        if self.named_characters_file is None:
            return None
        return named_character_filter(load_allowlist(self.named_characters_file))

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


class PlayReport(BaseModel):
    """Outcome of processing one play."""

    play: str
    ok: bool = True
    seconds: float = 0.0
    settings: int = 0
    files: int = 0
    warnings: list[str] = Field(default_factory=list)
    error: str | None = None
    correlation: CorrMatrix | None = None


class RunReport(BaseModel):
    plays: list[PlayReport] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def failed(self) -> list[PlayReport]:
        return [p for p in self.plays if not p.ok]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


# Stages


def select_raw_files(layout: CorpusLayout, plays: Sequence[str] | None = None) -> list[Path]:
    """Raw inputs, optionally restricted to the named plays.

    Raises:
        ValueError: If a requested play has no raw file.
    """
    files = {play_name(path): path for path in layout.raw_files()}
    if plays is None:
        return [files[name] for name in sorted(files)]
    missing = sorted(set(plays) - set(files))
    if missing:
        raise ValueError(f"no raw data for plays: {missing}")
    return [files[name] for name in sorted(set(plays))]


def extract_play(
    path: Path, layout: CorpusLayout, policy: FlushPolicy
) -> tuple[str, list[RawEvent], list[ParseWarning]]:
    """Parse one raw file and write its cast and raw tables."""
    play = play_name(path)
    data = path.read_bytes()

    if path.suffix == TOY_SUFFIX:
        script = parse_toy(data.decode("utf-8"))
        cast = [CastEntry(xml_id=c) for c in script.characters]
        events = toy_to_events(script)
        warnings: list[ParseWarning] = []
    else:
        cast = parse_cast(data)
        parser = TeiBodyParser(policy, cast=[c.xml_id for c in cast])
        events = parser.parse(data)
        warnings = parser.warnings

    write_table(layout.cast_path(play), tables.cast_rows(cast), tables.CAST)
    write_table(layout.raw_path(play), tables.event_rows(events), tables.RAW)
    log.info("play_extracted", play=play, events=len(events), warnings=len(warnings))
    return play, events, warnings


def load_events(play: str, layout: CorpusLayout) -> list[RawEvent]:
    return tables.events_from_rows(read_csv(layout.raw_path(play), tables.RAW))


def aggregate_play(
    play: str, layout: CorpusLayout, events: Sequence[RawEvent] | None = None
) -> list[Setting]:
    """Build and write the agg table of a play (from raw.csv unless events are given)."""
    if events is None:
        events = load_events(play, layout)
    settings = aggregate_settings(events)
    write_table(layout.agg_path(play), tables.setting_rows(settings), tables.AGG)
    log.info("play_aggregated", play=play, settings=len(settings))
    return settings


def load_settings(play: str, layout: CorpusLayout) -> list[Setting]:
    return tables.settings_from_rows(read_csv(layout.agg_path(play), tables.AGG))


def build_play(
    play: str,
    layout: CorpusLayout,
    settings: Sequence[Setting] | None = None,
    dot: bool = False,
) -> tuple[PlayRepresentations, int]:
    """Build every representation of a play and write its graphdata files.

    Returns the representations and the number of graphdata files written.
    """
    if settings is None:
        settings = load_settings(play, layout)
    reprs = build_representations(play, settings)

    graph_tables = graphdata_tables(reprs)
    for table in graph_tables:
        write_table(layout.graphdata_path(table.filename), table.rows, table.csv_schema)

    if dot:
        for label in RANKED_REPRESENTATIONS:
            write_dot(to_networkx(reprs, parse_descriptor(label)), layout.dot_path(play, label))

    log.info("play_built", play=play, files=len(graph_tables))
    return reprs, len(graph_tables)


def rank_play(
    reprs: PlayRepresentations,
    layout: CorpusLayout,
    weight: Literal["lines", "tokens"] = "lines",
    keep: CharacterPredicate | None = None,
    labels: Sequence[str] = (*RANKED_REPRESENTATIONS, *HYPERGRAPH_RANKINGS),
    own_speech: bool = False,
    filters: Sequence[CardinalityFilter] = (),
) -> dict[str, RankTable]:
    """Write degree rankings, by default for the compared graph representations and hypergraphs.

    Each cardinality filter adds a filtered `hg-group-mw` ranking.
    """
    rankings: dict[str, RankTable] = {}
    for label in labels:
        rankings[label] = degree_ranking(
            reprs, parse_descriptor(label), weight=weight, own_speech=own_speech
        )
    for edge_filter in filters:
        table = filtered_hg_ranking(reprs.hg_group, edge_filter, weight=weight)
        rankings[table.representation] = table

    for label, table in rankings.items():
        if keep is not None:
            table = rankings[label] = table.restrict(keep)
        write_table(layout.ranking_path(reprs.play, label), rank_table_rows(table), tables.RANKING)
    return rankings


def correlate_play(play: str, rankings: dict[str, RankTable], layout: CorpusLayout) -> CorrMatrix:
    """Spearman matrix over the compared graph representations."""
    matrix = correlation_matrix({label: rankings[label] for label in RANKED_REPRESENTATIONS})
    write_table(
        layout.correlation_path(play),
        corr_matrix_rows(matrix),
        tables.correlation_schema(matrix.labels),
    )
    return matrix


def write_residuals(matrices: dict[str, CorrMatrix], layout: CorpusLayout) -> None:
    for play, residual in corpus_residuals(matrices).items():
        write_table(
            layout.residual_path(play),
            corr_matrix_rows(residual),
            tables.correlation_schema(residual.labels),
        )


def timeseries_play(
    play: str,
    settings: Sequence[Setting],
    layout: CorpusLayout,
    window: int,
    keep: CharacterPredicate | None = None,
) -> int:
    series = prominence_timeseries(settings, window, keep=keep)
    rows = timeseries_rows(series)
    write_table(layout.timeseries_path(play), rows, tables.TIMESERIES)
    starts = [{"act": act, "setting": setting} for act, setting in act_starts(settings).items()]
    write_table(layout.act_starts_path(play), starts, tables.ACT_STARTS)
    return len(rows)


def write_summary(layout: CorpusLayout, plays: Sequence[str]) -> int:
    """Write summary.csv for the given plays.

    Raises:
        AnalysisError: If a play has no play type.
    """
    summary = corpus_summary({play: load_settings(play, layout) for play in plays}, PLAY_TYPES)
    write_table(layout.summary_path, [s.model_dump() for s in summary], tables.SUMMARY)
    return len(summary)


# Orchestration


def process_play(path: Path, root: Path, config: PipelineConfig) -> PlayReport:
    """Run every per-play stage; never raises."""
    layout = CorpusLayout(root)
    report = PlayReport(play=play_name(path))
    started = time.perf_counter()
    try:
        _, events, warnings = extract_play(path, layout, config.flush_policy)
        report.warnings = [f"{w.kind.value}: {w.character} {w.detail}".strip() for w in warnings]

        settings = aggregate_play(report.play, layout, events)
        report.settings = len(settings)

        reprs, report.files = build_play(report.play, layout, settings, dot=config.write_dot)

        keep = config.character_filter()
        rankings = rank_play(
            reprs, layout, config.degree_weight, keep, filters=config.cardinality_filters
        )
        try:
            report.correlation = correlate_play(report.play, rankings, layout)
        except AnalysisError as e:
            log.warning("correlation_skipped", play=report.play, reason=str(e))
            report.warnings.append(f"correlation skipped: {e}")

        timeseries_play(report.play, settings, layout, config.timeseries_window, keep)
    except Exception as e:
        log.exception("play_failed", play=report.play)
        report.ok = False
        report.error = f"{type(e).__name__}: {e}"

    report.seconds = round(time.perf_counter() - started, 3)
    return report


def run_pipeline(config: PipelineConfig, layout: CorpusLayout) -> RunReport:
    """Process the selected plays and write the corpus-level outputs.

    Output files are byte-identical across reruns on unchanged input.
    """
    layout.ensure()
    layout.run_config_path.write_text(config.to_json(), encoding="utf-8")
    write_playtypes(layout)

    paths = select_raw_files(layout, config.plays)
    log.info("pipeline_started", plays=len(paths), workers=config.workers)

    if config.workers > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(
                pool.map(process_play, paths, [layout.root] * len(paths), [config] * len(paths))
            )
    else:
        reports = [process_play(path, layout.root, config) for path in paths]

    run = RunReport(plays=reports)
    succeeded = [r.play for r in reports if r.ok]

    matrices = {r.play: r.correlation for r in reports if r.ok and r.correlation is not None}
    if matrices:
        write_residuals(matrices, layout)

    untyped = sorted(play for play in succeeded if play not in PLAY_TYPES)
    if untyped:
        log.warning("summary_skipped", plays_without_type=untyped)
        run.notes.append(f"summary skipped, plays without a play type: {untyped}")
    elif succeeded:
        write_summary(layout, succeeded)

    log.info(
        "pipeline_complete",
        plays=len(reports),
        failed=len(run.failed),
        seconds=round(sum(r.seconds for r in reports), 3),
    )
    return run
