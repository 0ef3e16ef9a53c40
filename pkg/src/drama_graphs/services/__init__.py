# ABOUTME: File and network services: CSV tables, corpus folder layout, corpus download.

from drama_graphs.services.csv_io import (
    CsvSchema,
    CsvSchemaError,
    read_csv,
    write_csv,
    write_table,
)
from drama_graphs.services.fetcher import CorpusFetcher, FetchError, fetch_rawdata
from drama_graphs.services.layout import CorpusLayout

__all__ = [
    "CorpusFetcher",
    "CorpusLayout",
    "CsvSchema",
    "CsvSchemaError",
    "FetchError",
    "fetch_rawdata",
    "read_csv",
    "write_csv",
    "write_table",
]
