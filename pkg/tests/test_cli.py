# ABOUTME: Tests for CLI argument parsing and command dispatch.
# ABOUTME: Runs subcommands against a temporary corpus folder through main().

import argparse
from pathlib import Path
from unittest.mock import MagicMock, patch

import pytest

from drama_graphs.__main__ import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, _config, create_parser, main
from drama_graphs.analysis import CardinalityFilter
from drama_graphs.config import Settings
from drama_graphs.models import FlushPolicy
from drama_graphs.services import CorpusLayout
from tests.conftest import FIG6_SCRIPT


def _run(root: Path, *argv: str) -> int:
    with patch("sys.argv", ["drama_graphs", "--root", str(root), *argv]):
        return main()


class TestCreateParser:
    """Tests for argument parser creation."""

    def test_parser_creation(self) -> None:
        assert isinstance(create_parser(), argparse.ArgumentParser)

    def test_rank_options(self, tmp_path: Path) -> None:
        args = create_parser().parse_args(
            [
                "--root",
                str(tmp_path),
                "rank",
                "--cardinality",
                "at_most:1",
                "--cardinality",
                "at_least:4",
                "--own-speech",
                "--weight",
                "tokens",
            ]
        )

        assert args.command == "rank"
        assert args.root == tmp_path
        assert args.cardinality == [
            CardinalityFilter(mode="at_most", threshold=1),
            CardinalityFilter(mode="at_least", threshold=4),
        ]
        assert args.own_speech is True
        assert args.weight == "tokens"
        assert args.plays is None

    def test_bad_cardinality(self) -> None:
        with pytest.raises(SystemExit):
            create_parser().parse_args(["rank", "--cardinality", "exactly:2"])

    def test_all_options(self) -> None:
        args = create_parser().parse_args(
            ["all", "--offline", "--workers", "4", "--window", "5", "--plays", "hamlet"]
        )

        assert args.offline is True
        assert args.workers == 4
        assert args.window == 5
        assert args.plays == ["hamlet"]

    def test_no_flush_keeps_characters_across_scenes(self, mock_settings: Settings) -> None:
        parser = create_parser()
        plain = parser.parse_args(["all"])
        no_flush = parser.parse_args(["extract", "--no-flush"])

        with patch("drama_graphs.pipeline.get_settings", return_value=mock_settings):
            assert _config(plain).flush_policy == FlushPolicy.for_tei()
            assert _config(no_flush).flush_policy == FlushPolicy(
                flush_on_scene_start=False, restore_speaker=True
            )

    def test_toy_defaults(self) -> None:
        args = create_parser().parse_args(["toy", FIG6_SCRIPT])

        assert args.name == "toy"
        assert args.write is False


@patch("drama_graphs.__main__.configure_logging")
class TestMain:
    """Tests for dispatch through main()."""

    def test_no_command(self, _mock_logging: MagicMock) -> None:
        with patch("sys.argv", ["drama_graphs"]):
            assert main() == EXIT_USAGE

    def test_toy_reports_sizes(
        self, _mock_logging: MagicMock, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        assert _run(tmp_path, "toy", FIG6_SCRIPT) == EXIT_OK

        out = capsys.readouterr().out
        assert "Settings: 7" in out
        assert "hg-group-mb: n=5, m=7" in out
        assert "ce-group-mb: n=5, m=16" in out
        assert "ce-group-b:  n=5, m=10" in out
        assert "se-group-b:  n=12, m=16" in out

    def test_toy_write(self, _mock_logging: MagicMock, tmp_path: Path) -> None:
        assert _run(tmp_path, "toy", "|->A; A*; A->|", "--name", "mini", "--write") == EXIT_OK
        assert (tmp_path / "rawdata" / "mini.toy").read_text(encoding="utf-8") == "|->A; A*; A->|\n"

    def test_invalid_toy_script(self, _mock_logging: MagicMock, tmp_path: Path) -> None:
        assert _run(tmp_path, "toy", "|->A; B*|") == EXIT_FAILURE

    def test_unknown_play_is_usage_error(
        self, _mock_logging: MagicMock, layout: CorpusLayout
    ) -> None:
        assert _run(layout.root, "extract", "--plays", "hamlet") == EXIT_USAGE

    def test_stats(
        self,
        _mock_logging: MagicMock,
        romeo_file: Path,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        assert _run(tmp_path, "stats", str(romeo_file)) == EXIT_OK
        assert "sp: 5" in capsys.readouterr().out

    def test_stats_missing_file(self, _mock_logging: MagicMock, tmp_path: Path) -> None:
        assert _run(tmp_path, "stats", str(tmp_path / "absent.xml")) == EXIT_FAILURE

    def test_all_on_toy_drama(
        self, _mock_logging: MagicMock, layout: CorpusLayout, fig6_script: str
    ) -> None:
        (layout.rawdata / "fig6.toy").write_text(fig6_script + "\n", encoding="utf-8")

        assert _run(layout.root, "all") == EXIT_OK
        assert layout.agg_path("fig6").exists()
        assert layout.correlation_path("fig6").exists()
        assert layout.ranking_path("fig6", "hg-group-mw-at_most-1").exists()
        assert layout.ranking_path("fig6", "hg-group-mw-at_least-6").exists()

    def test_stages_one_by_one(
        self, _mock_logging: MagicMock, layout: CorpusLayout, romeo_file: Path
    ) -> None:
        for stage in ("extract", "aggregate", "build", "rank", "correlate", "timeseries"):
            assert _run(layout.root, stage) == EXIT_OK, stage
        assert _run(layout.root, "summary") == EXIT_OK

        assert layout.summary_path.exists()
        assert layout.ranking_path("romeo-and-juliet", "ce-group-mw").exists()
        assert layout.timeseries_path("romeo-and-juliet").exists()
