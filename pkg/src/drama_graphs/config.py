# ABOUTME: Centralized configuration using Pydantic Settings.
# ABOUTME: Loads corpus location, parsing policy, and analysis defaults from env and .env.

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Corpus
    corpus_root: Path = Path(".")
    rawdata_url: str = (
        "https://shakespeare.folger.edu/downloads/teisimple/"
        "shakespeares-works_TEIsimple_FolgerShakespeare.zip"
    )
    expected_play_count: int = 37

    # Download
    fetch_timeout: int = 60
    fetch_retries: int = 3
    fetch_backoff_min: float = 4.0
    user_agent: str = "drama-graphs/0.1 (+corpus pipeline)"

    # Parsing
    flush_on_scene_start: bool = True
    restore_speaker: bool = True

    # Analysis
    degree_weight: Literal["lines", "tokens"] = "lines"
    timeseries_window: int = 50
    named_characters_file: Path | None = None

    # Execution
    workers: int = 1

    # Logging
    log_level: str = "INFO"
    log_format: str = "console"  # "console" or "json"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Settings are loaded from environment variables and .env file.
    `CORPUS_ROOT` points at the folder holding rawdata/, data/, graphdata/ and metadata/.
    """
    return Settings()
