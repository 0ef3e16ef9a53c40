# ABOUTME: CLI entry point for the drama graphs corpus pipeline.
# ABOUTME: One subcommand per pipeline stage, plus toy-drama inspection and TEI tag statistics.

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path

import structlog

from drama_graphs.config import get_settings

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def configure_logging() -> None:
    """Configure structlog for console or JSON output."""
    settings = get_settings()

    log_level = getattr(logging, settings.log_level.upper(), logging.INFO)

    if settings.log_format == "json":
        processors = [
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.add_log_level,
            structlog.processors.JSONRenderer(),
        ]
    else:
        processors = [
            structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M:%S"),
            structlog.processors.add_log_level,
            structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()),
        ]

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
    )


def _layout(args: argparse.Namespace):
    from drama_graphs.services.layout import CorpusLayout

    return CorpusLayout(args.root) if args.root else CorpusLayout(settings=get_settings())


def _config(args: argparse.Namespace):
    from drama_graphs.models import FlushPolicy
    from drama_graphs.pipeline import PipelineConfig

    no_flush = getattr(args, "no_flush", False)
    return PipelineConfig.from_settings(
        plays=args.plays,
        degree_weight=getattr(args, "weight", None),
        timeseries_window=getattr(args, "window", None),
        named_characters_file=getattr(args, "named", None),
        workers=getattr(args, "workers", None),
        write_dot=getattr(args, "dot", None) or None,
        flush_policy=(
            FlushPolicy(flush_on_scene_start=False, restore_speaker=True) if no_flush else None
        ),
    )


def _data_plays(args: argparse.Namespace, kind: str) -> list[str]:
    """Plays named on the command line, or every play with a `{kind}` table."""
    layout = _layout(args)
    available = layout.data_plays(kind)
    if args.plays is None:
        return available
    missing = sorted(set(args.plays) - set(available))
    if missing:
        raise ValueError(f"no {kind} table for plays: {missing}")
    return sorted(set(args.plays))


def _for_each_play(plays: list[str], step: Callable[[str], object], event: str) -> int:
    """Run a step per play, isolating failures."""
    log = structlog.get_logger()
    failed = []
    for play in plays:
        try:
            step(play)
        except Exception:
            log.exception(f"{event}_failed", play=play)
            failed.append(play)

    log.info(f"{event}_complete", plays=len(plays), failed=len(failed))
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_fetch(args: argparse.Namespace) -> int:
    """Download the corpus archive and expand it into rawdata/."""
    from drama_graphs.services.fetcher import FetchError, fetch_rawdata

    log = structlog.get_logger()
    try:
        count = fetch_rawdata(args.url, _layout(args), zip_path=args.zip, offline=args.offline)
    except FetchError:
        log.exception("cmd_fetch_failed")
        return EXIT_FAILURE

    log.info("cmd_fetch_complete", files=count)
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    """Parse raw TEI (or toy) files into cast and raw tables."""
    from drama_graphs.pipeline import extract_play, select_raw_files

    layout = _layout(args)
    layout.ensure()
    config = _config(args)
    paths = {p.name: p for p in select_raw_files(layout, args.plays)}

    def step(name: str) -> None:
        extract_play(paths[name], layout, config.flush_policy)

    return _for_each_play(sorted(paths), step, "cmd_extract")


def cmd_aggregate(args: argparse.Namespace) -> int:
    """Collapse raw tables into setting tables."""
    from drama_graphs.pipeline import aggregate_play

    layout = _layout(args)
    return _for_each_play(
        _data_plays(args, "raw"), lambda play: aggregate_play(play, layout), "cmd_aggregate"
    )


def cmd_build(args: argparse.Namespace) -> int:
    """Write the graphdata files of every selected play."""
    from drama_graphs.pipeline import build_play

    layout = _layout(args)
    layout.ensure()
    return _for_each_play(
        _data_plays(args, "agg"),
        lambda play: build_play(play, layout, dot=args.dot),
        "cmd_build",
    )


def _parse_filter(text: str):
    from drama_graphs.analysis import CardinalityFilter

    mode, _, threshold = text.partition(":")
    try:
        return CardinalityFilter(mode=mode, threshold=int(threshold))
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f"expected at_most:<s> or at_least:<s>, got {text!r}"
        ) from e


def cmd_rank(args: argparse.Namespace) -> int:
    """Write degree rankings per play and representation."""
    from drama_graphs.pipeline import HYPERGRAPH_RANKINGS, load_settings, rank_play
    from drama_graphs.representations import (
        RANKED_REPRESENTATIONS,
        build_representations,
        parse_descriptor,
    )

    layout = _layout(args)
    config = _config(args)
    labels = (
        [str(parse_descriptor(label)) for label in args.representation]
        if args.representation
        else [*RANKED_REPRESENTATIONS, *HYPERGRAPH_RANKINGS]
    )
    keep = config.character_filter()

    def step(play: str) -> None:
        reprs = build_representations(play, load_settings(play, layout))
        rank_play(
            reprs,
            layout,
            config.degree_weight,
            keep,
            labels=labels,
            own_speech=args.own_speech,
            filters=args.cardinality or (),
        )

    return _for_each_play(_data_plays(args, "agg"), step, "cmd_rank")


def cmd_correlate(args: argparse.Namespace) -> int:
    """Spearman matrices per play and their residuals against the corpus mean."""
    from drama_graphs.analysis import AnalysisError, CorrMatrix
    from drama_graphs.pipeline import correlate_play, load_settings, rank_play, write_residuals
    from drama_graphs.representations import RANKED_REPRESENTATIONS, build_representations

    log = structlog.get_logger()
    layout = _layout(args)
    config = _config(args)
    keep = config.character_filter()
    matrices: dict[str, CorrMatrix] = {}

    def step(play: str) -> None:
        reprs = build_representations(play, load_settings(play, layout))
        rankings = rank_play(reprs, layout, config.degree_weight, keep, RANKED_REPRESENTATIONS)
        matrices[play] = correlate_play(play, rankings, layout)

    status = _for_each_play(_data_plays(args, "agg"), step, "cmd_correlate")
    try:
        write_residuals(matrices, layout)
    except AnalysisError:
        log.exception("cmd_correlate_residuals_failed")
        return EXIT_FAILURE
    return status


def cmd_timeseries(args: argparse.Namespace) -> int:
    """Rolling share of spoken lines per character."""
    from drama_graphs.pipeline import load_settings, timeseries_play

    layout = _layout(args)
    config = _config(args)
    keep = config.character_filter()
    return _for_each_play(
        _data_plays(args, "agg"),
        lambda play: timeseries_play(
            play, load_settings(play, layout), layout, config.timeseries_window, keep
        ),
        "cmd_timeseries",
    )


def cmd_summary(args: argparse.Namespace) -> int:
    """Spoken lines and speaking characters per play, with play types."""
    from drama_graphs.analysis import AnalysisError
    from drama_graphs.pipeline import write_summary
    from drama_graphs.utils.playtypes import write_playtypes

    log = structlog.get_logger()
    layout = _layout(args)
    layout.ensure()
    write_playtypes(layout)
    try:
        rows = write_summary(layout, _data_plays(args, "agg"))
    except AnalysisError:
        log.exception("cmd_summary_failed")
        return EXIT_FAILURE

    log.info("cmd_summary_complete", plays=rows, path=str(layout.summary_path))
    return EXIT_OK


def cmd_toy(args: argparse.Namespace) -> int:
    """Parse a toy drama and report the size of each representation."""
    from drama_graphs.representations import Aggregation, build_representations, collapse_multigraph
    from drama_graphs.toy import ToyScriptError, parse_toy, render_toy, toy_to_settings

    log = structlog.get_logger()
    source = Path(args.script)
    text = source.read_text(encoding="utf-8") if source.is_file() else args.script

    try:
        script = parse_toy(text)
    except ToyScriptError as e:
        for issue in e.issues:
            log.error("toy_script_issue", position=issue.position, message=issue.message)
        return EXIT_FAILURE

    settings = toy_to_settings(script)
    reprs = build_representations(args.name, settings)
    hg = reprs.hypergraph(Aggregation.GROUP)
    ce = reprs.clique(Aggregation.GROUP)
    se = reprs.star(Aggregation.GROUP)

    print(f"\n=== Toy drama {render_toy(script)} ===\n")
    print(f"Settings: {len(settings)}")
    print(f"hg-group-mb: n={len(hg.nodes)}, m={len(hg.edges)}")
    print(f"ce-group-mb: n={len(ce.nodes)}, m={len(ce.edges)}")
    print(f"ce-group-b:  n={len(ce.nodes)}, m={len(collapse_multigraph(ce.edges))}")
    print(f"se-group-b:  n={len(se.nodes)}, m={len(se.edges)}")
    print()

    if args.write:
        layout = _layout(args).ensure()
        target = layout.rawdata / f"{args.name}.toy"
        target.write_text(render_toy(script) + "\n", encoding="utf-8")
        log.info("toy_script_written", path=str(target))

    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    """Element and attribute counts of a TEI document."""
    from drama_graphs.tei import TeiParseError, tag_statistics

    log = structlog.get_logger()
    try:
        stats = tag_statistics(Path(args.file).read_bytes())
    except (OSError, TeiParseError):
        log.exception("cmd_stats_failed", file=args.file)
        return EXIT_FAILURE

    print(f"\n=== Tag statistics: {args.file} ===\n")
    for tag, count in stats.tags.items():
        attributes = ", ".join(f"{a}={n}" for a, n in stats.attributes.get(tag, {}).items())
        print(f"  {tag}: {count}" + (f" ({attributes})" if attributes else ""))
    print()
    return EXIT_OK


def cmd_all(args: argparse.Namespace) -> int:
    """Run the whole pipeline, optionally fetching the corpus first."""
    from drama_graphs.pipeline import run_pipeline

    log = structlog.get_logger()
    if args.fetch or args.offline or args.zip:
        status = cmd_fetch(args)
        if status != EXIT_OK:
            return status

    report = run_pipeline(_config(args), _layout(args))
    for play in report.failed:
        log.error("play_failed", play=play.play, error=play.error)
    log.info(
        "cmd_all_complete",
        plays=len(report.plays),
        failed=len(report.failed),
        warnings=sum(len(p.warnings) for p in report.plays),
    )
    return report.exit_code


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser with subcommands."""
    parser = argparse.ArgumentParser(
        prog="drama_graphs",
        description="Graph and hypergraph representations of TEI-encoded plays",
    )
    parser.add_argument(
        "--root",
        type=Path,
        help="Corpus root folder. Defaults to CORPUS_ROOT.",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    def play_selection(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--plays", nargs="+", help="Restrict to these plays (default: all)")

    def fetch_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--url", type=str, help="Corpus archive URL")
        sub.add_argument("--zip", type=Path, help="Use a local ZIP archive instead of downloading")
        sub.add_argument(
            "--offline", action="store_true", help="Never download; use a ZIP already in rawdata/"
        )

    def weight_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--weight", choices=["lines", "tokens"], help="Edge weight used for weighted degrees"
        )
        sub.add_argument("--named", type=Path, help="File listing the characters to keep")

    def flush_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--no-flush",
            action="store_true",
            help="Keep characters on stage across scene starts",
        )

    # fetch command
    fetch_parser = subparsers.add_parser("fetch", help="Download the TEI corpus into rawdata/")
    fetch_options(fetch_parser)

    # extract command
    extract_parser = subparsers.add_parser("extract", help="Write cast and raw tables")
    play_selection(extract_parser)
    flush_option(extract_parser)

    # aggregate command
    aggregate_parser = subparsers.add_parser("aggregate", help="Write setting (agg) tables")
    play_selection(aggregate_parser)

    # build command
    build_parser = subparsers.add_parser("build", help="Write graphdata files")
    play_selection(build_parser)
    build_parser.add_argument("--dot", action="store_true", help="Also write DOT drawings")

    # rank command
    rank_parser = subparsers.add_parser("rank", help="Write degree rankings")
    play_selection(rank_parser)
    weight_option(rank_parser)
    rank_parser.add_argument(
        "--representation", nargs="+", help="Descriptors to rank, e.g. ce-group-mw"
    )
    rank_parser.add_argument(
        "--cardinality",
        type=_parse_filter,
        action="append",
        help="Add a filtered hg-group-mw ranking, e.g. at_most:1 (repeatable)",
    )
    rank_parser.add_argument(
        "--own-speech",
        action="store_true",
        help="Score weighted hypergraphs by the character's own spoken lines",
    )

    # correlate command
    correlate_parser = subparsers.add_parser("correlate", help="Write Spearman matrices")
    play_selection(correlate_parser)
    weight_option(correlate_parser)

    # timeseries command
    timeseries_parser = subparsers.add_parser("timeseries", help="Write prominence time series")
    play_selection(timeseries_parser)
    timeseries_parser.add_argument("--window", type=int, help="Window size in settings")
    timeseries_parser.add_argument("--named", type=Path, help="File listing the characters to keep")

    # summary command
    summary_parser = subparsers.add_parser("summary", help="Write the corpus summary")
    play_selection(summary_parser)

    # toy command
    toy_parser = subparsers.add_parser("toy", help="Inspect a toy drama")
    toy_parser.add_argument("script", help="Toy script text or path to a file containing it")
    toy_parser.add_argument("--name", default="toy", help="Play name for the script")
    toy_parser.add_argument(
        "--write", action="store_true", help="Save the script as rawdata/<name>.toy"
    )

    # stats command
    stats_parser = subparsers.add_parser("stats", help="Show tag statistics of a TEI file")
    stats_parser.add_argument("file", help="TEI XML file")

    # all command
    all_parser = subparsers.add_parser("all", help="Run the whole pipeline")
    play_selection(all_parser)
    weight_option(all_parser)
    fetch_options(all_parser)
    all_parser.add_argument("--fetch", action="store_true", help="Download the corpus first")
    all_parser.add_argument("--window", type=int, help="Time-series window size in settings")
    all_parser.add_argument("--workers", type=int, help="Number of worker processes")
    all_parser.add_argument("--dot", action="store_true", help="Also write DOT drawings")
    flush_option(all_parser)

    return parser


def main() -> int:
    """Main entry point."""
    configure_logging()

    parser = create_parser()
    args = parser.parse_args()

    commands = {
        "fetch": cmd_fetch,
        "extract": cmd_extract,
        "aggregate": cmd_aggregate,
        "build": cmd_build,
        "rank": cmd_rank,
        "correlate": cmd_correlate,
        "timeseries": cmd_timeseries,
        "summary": cmd_summary,
        "toy": cmd_toy,
        "stats": cmd_stats,
        "all": cmd_all,
    }

    handler = commands.get(args.command)
    if handler is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        return handler(args)
    except ValueError as e:
        # unknown plays, descriptors or invalid option values
        structlog.get_logger().error("usage_error", command=args.command, error=str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
