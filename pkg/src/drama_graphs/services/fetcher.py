# ABOUTME: Downloads the TEI Simple corpus ZIP and expands it into rawdata/.
# ABOUTME: Uses httpx with tenacity retries; supports offline runs from a pre-placed archive.

import io
import zipfile
from pathlib import Path, PurePosixPath

import httpx
import structlog
from tenacity import (
    RetryError,
    Retrying,
    retry_if_exception_type,
    stop_after_attempt,
    wait_exponential,
)

from drama_graphs.config import Settings, get_settings
from drama_graphs.services.layout import CorpusLayout

log = structlog.get_logger()


class FetchError(ValueError):
    """Raised when the corpus cannot be downloaded or unpacked."""


class CorpusFetcher:
    """Fetches the raw corpus archive and unpacks its XML files."""

    def __init__(self, layout: CorpusLayout, settings: Settings | None = None) -> None:
        self.settings = settings or get_settings()
        self.layout = layout
        self._client: httpx.Client | None = None

    @property
    def client(self) -> httpx.Client:
        """Lazy-initialized HTTP client."""
        if self._client is None:
            self._client = httpx.Client(
                timeout=self.settings.fetch_timeout,
                headers={"User-Agent": self.settings.user_agent},
                follow_redirects=True,
            )
        return self._client

    def close(self) -> None:
        """Close the HTTP client."""
        if self._client is not None:
            self._client.close()
            self._client = None

    def __enter__(self) -> "CorpusFetcher":
        return self

    def __exit__(self, *args: object) -> None:
        self.close()

    def download(self, url: str) -> bytes:
        """GET an archive, retrying transient HTTP failures.

        Raises:
            FetchError: When every attempt failed.
        """
        backoff = self.settings.fetch_backoff_min
        retrying = Retrying(
            retry=retry_if_exception_type(httpx.HTTPError),
            stop=stop_after_attempt(self.settings.fetch_retries),
            wait=wait_exponential(multiplier=backoff, min=backoff, max=60),
            before_sleep=lambda retry_state: log.warning(
                "download_retry",
                url=url,
                attempt=retry_state.attempt_number,
                wait=retry_state.next_action.sleep if retry_state.next_action else None,
            ),
            reraise=True,
        )
        try:
            for attempt in retrying:
                with attempt:
                    log.info("downloading_corpus", url=url)
                    response = self.client.get(url)
                    response.raise_for_status()
                    return response.content
        except (httpx.HTTPError, RetryError) as e:
            log.error("download_failed", url=url, error=str(e))
            raise FetchError(f"could not download {url}: {e}") from e
        raise FetchError(f"could not download {url}")

    def extract(self, archive: bytes) -> int:
        """Expand the XML members of a ZIP archive flat into rawdata/.

        Raises:
            FetchError: If the archive is not a ZIP file or fails its CRC check.
        """
        try:
            with zipfile.ZipFile(io.BytesIO(archive)) as zf:
                corrupted = zf.testzip()
                if corrupted is not None:
                    raise FetchError(f"corrupted archive member: {corrupted}")
                members = [
                    info
                    for info in zf.infolist()
                    if not info.is_dir() and info.filename.lower().endswith(".xml")
                ]
                self.layout.rawdata.mkdir(parents=True, exist_ok=True)
                for info in members:
                    target = self.layout.rawdata / PurePosixPath(info.filename).name
                    target.write_bytes(zf.read(info))
        except (zipfile.BadZipFile, zipfile.LargeZipFile) as e:
            raise FetchError(f"cannot read corpus archive: {e}") from e

        count = len(members)
        if count != self.settings.expected_play_count:
            log.warning(
                "unexpected_play_count", expected=self.settings.expected_play_count, actual=count
            )
        log.info("corpus_extracted", files=count, path=str(self.layout.rawdata))
        return count

    def _local_archive(self) -> Path:
        archives = sorted(self.layout.rawdata.glob("*.zip")) if self.layout.rawdata.is_dir() else []
        if not archives:
            raise FetchError(f"offline mode needs a ZIP archive in {self.layout.rawdata}")
        return archives[0]

    def fetch_rawdata(
        self, url: str | None = None, zip_path: Path | None = None, offline: bool = False
    ) -> int:
        """Populate rawdata/ and return the number of XML files.

        Args:
            url: Archive URL. Defaults to the configured corpus URL.
            zip_path: Use this local archive instead of downloading.
            offline: Never touch the network; fall back to a ZIP already in rawdata/.
        """
        if zip_path is None and offline:
            zip_path = self._local_archive()

        if zip_path is not None:
            log.info("using_local_archive", path=str(zip_path))
            try:
                archive = Path(zip_path).read_bytes()
            except OSError as e:
                raise FetchError(f"cannot read {zip_path}: {e}") from e
        else:
            archive = self.download(url or self.settings.rawdata_url)

        return self.extract(archive)


def fetch_rawdata(
    url: str | None,
    layout: CorpusLayout,
    zip_path: Path | None = None,
    offline: bool = False,
    settings: Settings | None = None,
) -> int:
    """Download (or reuse) the corpus archive and expand it into `layout.rawdata`."""
    with CorpusFetcher(layout, settings) as fetcher:
        return fetcher.fetch_rawdata(url, zip_path=zip_path, offline=offline)
