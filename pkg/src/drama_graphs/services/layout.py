# ABOUTME: Folder layout of a corpus: rawdata, data, graphdata, metadata and analysis outputs.
# ABOUTME: Resolves every per-play file path the pipeline reads or writes.

from pathlib import Path

import structlog

from drama_graphs.config import Settings, get_settings

log = structlog.get_logger()

RAW_SUFFIXES = (".xml", ".toy")


class CorpusLayout:
    """Paths below a corpus root."""

    def __init__(self, root: Path | None = None, settings: Settings | None = None) -> None:
        self.root = Path(root) if root is not None else (settings or get_settings()).corpus_root

    def ensure(self) -> "CorpusLayout":
        """Create the four data folders if they don't exist."""
        for folder in (self.rawdata, self.data, self.graphdata, self.metadata):
            folder.mkdir(parents=True, exist_ok=True)
        return self

    @property
    def rawdata(self) -> Path:
        return self.root / "rawdata"

    @property
    def data(self) -> Path:
        return self.root / "data"

    @property
    def graphdata(self) -> Path:
        return self.root / "graphdata"

    @property
    def metadata(self) -> Path:
        return self.root / "metadata"

    @property
    def playtypes_path(self) -> Path:
        return self.metadata / "playtypes.csv"

    @property
    def run_config_path(self) -> Path:
        return self.root / "run_config.json"

    @property
    def summary_path(self) -> Path:
        return self.root / "summary.csv"

    def raw_files(self) -> list[Path]:
        """TEI and toy-drama inputs in rawdata/, sorted by name."""
        if not self.rawdata.is_dir():
            log.warning("rawdata_missing", path=str(self.rawdata))
            return []
        return sorted(p for p in self.rawdata.iterdir() if p.suffix in RAW_SUFFIXES)

    def cast_path(self, play: str) -> Path:
        return self.data / f"{play}.cast.csv"

    def raw_path(self, play: str) -> Path:
        return self.data / f"{play}.raw.csv"

    def agg_path(self, play: str) -> Path:
        return self.data / f"{play}.agg.csv"

    def data_plays(self, kind: str = "agg") -> list[str]:
        """Plays that already have a `{play}.{kind}.csv` table."""
        if not self.data.is_dir():
            return []
        suffix = f".{kind}.csv"
        return sorted(p.name.removesuffix(suffix) for p in self.data.glob(f"*{suffix}"))

    def graphdata_path(self, filename: str) -> Path:
        return self.graphdata / filename

    def ranking_path(self, play: str, descriptor: str) -> Path:
        return self.root / "rankings" / f"{play}_{descriptor}.csv"

    def correlation_path(self, play: str) -> Path:
        return self.root / "correlations" / f"{play}.csv"

    def residual_path(self, play: str) -> Path:
        return self.root / "correlations" / "residuals" / f"{play}.csv"

    def timeseries_path(self, play: str) -> Path:
        return self.root / "timeseries" / f"{play}.csv"

    def act_starts_path(self, play: str) -> Path:
        return self.root / "timeseries" / f"{play}.acts.csv"

    def dot_path(self, play: str, descriptor: str) -> Path:
        return self.root / "dot" / f"{play}_{descriptor}.dot"
