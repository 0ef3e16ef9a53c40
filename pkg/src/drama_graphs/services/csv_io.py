# ABOUTME: Deterministic CSV writing and reading for every table the pipeline emits.
# ABOUTME: UTF-8, newline terminators, minimal quoting, optional leading comment lines.

import csv
from collections.abc import Iterable, Mapping, Sequence
from enum import Enum
from io import StringIO
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator

from drama_graphs.models import format_characters

Row = Mapping[str, Any]

COMMENT_PREFIX = "#"


class CsvSchemaError(ValueError):
    """Raised when a file header does not match the expected schema."""


class CsvSchema(BaseModel):
    """Ordered column names of one table kind."""

    model_config = ConfigDict(frozen=True)

    name: str
    columns: tuple[str, ...]

    @field_validator("columns")
    @classmethod
    def _unique_columns(cls, columns: tuple[str, ...]) -> tuple[str, ...]:
        if not columns:
            raise ValueError("schema needs at least one column")
        if len(set(columns)) != len(columns):
            raise ValueError(f"duplicate columns: {columns}")
        return columns


def serialize_value(value: Any) -> str:
    """Render one cell; character sets become space-separated id lists."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "True" if value else "False"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, tuple):
        return format_characters(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(
    rows: Iterable[Row],
    schema: CsvSchema,
    comments: Sequence[str] = (),
) -> bytes:
    """Serialize rows (mappings keyed by column name) in schema column order.

    Missing keys are written as empty cells; extra keys are ignored.
    """
    stream = StringIO()
    for comment in comments:
        stream.write(f"{COMMENT_PREFIX} {comment}\n")

    writer = csv.writer(
        stream, delimiter=",", quotechar='"', quoting=csv.QUOTE_MINIMAL, lineterminator="\n"
    )
    writer.writerow(schema.columns)
    for row in rows:
        writer.writerow([serialize_value(row.get(column)) for column in schema.columns])

    return stream.getvalue().encode("utf-8")


def read_csv(source: Path | bytes, schema: CsvSchema) -> list[dict[str, str]]:
    """Read rows written by `write_csv`, skipping comment lines before the header.

    Raises:
        CsvSchemaError: If the header differs from the schema's columns.
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    else:
        text = source.decode("utf-8")

    lines = text.splitlines(keepends=True)
    start = 0
    while start < len(lines) and lines[start].startswith(COMMENT_PREFIX):
        start += 1

    reader = csv.reader(StringIO("".join(lines[start:])))
    header = next(reader, None)
    if header is None or tuple(header) != schema.columns:
        raise CsvSchemaError(f"{schema.name}: expected header {schema.columns}, got {header}")

    return [dict(zip(schema.columns, record, strict=True)) for record in reader]


def write_table(
    path: Path, rows: Iterable[Row], schema: CsvSchema, comments: Sequence[str] = ()
) -> Path:
    """Write a table to disk, creating parent folders."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(write_csv(rows, schema, comments))
    return path
