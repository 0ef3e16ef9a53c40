# ABOUTME: Tests for configuration loading and validation.
# ABOUTME: Verifies Pydantic Settings defaults, environment overrides, and caching.

from pathlib import Path

import pytest

from drama_graphs.config import Settings, get_settings


class TestSettings:
    """Tests for Settings configuration class."""

    def test_settings_default_values(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Defaults follow the published corpus and the TEI flushing policy."""
        monkeypatch.delenv("CORPUS_ROOT", raising=False)
        settings = Settings(_env_file=None)

        assert settings.corpus_root == Path(".")
        assert settings.expected_play_count == 37
        assert settings.rawdata_url.endswith("_TEIsimple_FolgerShakespeare.zip")
        assert settings.flush_on_scene_start is True
        assert settings.restore_speaker is True
        assert settings.degree_weight == "lines"
        assert settings.timeseries_window == 50
        assert settings.workers == 1

    def test_settings_overridden_in_fixture(self, mock_settings: Settings, tmp_path: Path) -> None:
        """Fixture values replace the defaults."""
        assert mock_settings.corpus_root == tmp_path
        assert mock_settings.fetch_retries == 2
        assert mock_settings.fetch_backoff_min == 0

    def test_corpus_root_from_environment(
        self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        """CORPUS_ROOT selects the corpus folder."""
        monkeypatch.setenv("CORPUS_ROOT", str(tmp_path))
        settings = Settings(_env_file=None)
        assert settings.corpus_root == tmp_path

    def test_degree_weight_is_validated(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Only lines and tokens are accepted as degree weights."""
        monkeypatch.setenv("DEGREE_WEIGHT", "words")
        with pytest.raises(ValueError):
            Settings(_env_file=None)

    def test_paths_are_path_objects(self, mock_settings: Settings) -> None:
        """Path settings should be Path objects."""
        assert isinstance(mock_settings.corpus_root, Path)
        assert mock_settings.named_characters_file is None


class TestGetSettings:
    """Tests for the cached settings accessor."""

    def test_returns_cached_instance(self) -> None:
        """Repeated calls return the same object."""
        get_settings.cache_clear()
        try:
            assert get_settings() is get_settings()
        finally:
            get_settings.cache_clear()
