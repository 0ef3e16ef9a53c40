# ABOUTME: Pytest fixtures and configuration for drama graphs tests.
# ABOUTME: Provides mock settings, a corpus layout, toy dramas and TEI fixtures.

from pathlib import Path

import pytest

from drama_graphs.config import Settings
from drama_graphs.models import Setting
from drama_graphs.representations import PlayRepresentations, build_representations
from drama_graphs.services.layout import CorpusLayout
from drama_graphs.toy import parse_toy, toy_to_settings
from tests.builders import romeo_opening

FIG6_SCRIPT = "|->A; A*|->B; A*|->C; B*; A->| C*; B->| C*|->D; D*|->A,B,E; A*; A,B,C,D,E->|"


@pytest.fixture
def mock_settings(tmp_path: Path) -> Settings:
    """Create mock settings for testing."""
    return Settings(
        corpus_root=tmp_path,
        rawdata_url="https://example.com/corpus.zip",
        expected_play_count=2,
        fetch_timeout=5,
        fetch_retries=2,
        fetch_backoff_min=0,
        log_level="DEBUG",
    )


@pytest.fixture
def layout(tmp_path: Path) -> CorpusLayout:
    """Empty corpus folder structure below tmp_path."""
    return CorpusLayout(tmp_path).ensure()


@pytest.fixture
def fig6_script() -> str:
    """Five characters, seven scenes, seven stage groups with speech."""
    return FIG6_SCRIPT


@pytest.fixture
def fig6_settings() -> list[Setting]:
    return toy_to_settings(parse_toy(FIG6_SCRIPT))


@pytest.fixture
def fig6_reprs(fig6_settings: list[Setting]) -> PlayRepresentations:
    return build_representations("toy", fig6_settings)


@pytest.fixture
def romeo_xml() -> bytes:
    """Prologue and opening speeches of a Folger-style TEI play."""
    return romeo_opening()


@pytest.fixture
def romeo_file(layout: CorpusLayout, romeo_xml: bytes) -> Path:
    """The Romeo fixture placed in rawdata/ under its corpus file name."""
    path = layout.rawdata / "romeo-and-juliet_TEIsimple_FolgerShakespeare.xml"
    path.write_bytes(romeo_xml)
    return path
