# ABOUTME: TEI Simple ingestion: cast lists, annotated body events, and tag statistics.
# ABOUTME: Reconstructs who is on stage and who speaks at every point of a play.

from drama_graphs.tei.parser import (
    TAGS_OF_INTEREST,
    TEI_SUFFIX,
    TOY_SUFFIX,
    CastValidationError,
    TagStatistics,
    TeiBodyParser,
    TeiParseError,
    count_tokens_and_lines,
    parse_body,
    parse_cast,
    play_name,
    tag_statistics,
)

__all__ = [
    "TAGS_OF_INTEREST",
    "TEI_SUFFIX",
    "TOY_SUFFIX",
    "CastValidationError",
    "TagStatistics",
    "TeiBodyParser",
    "TeiParseError",
    "count_tokens_and_lines",
    "parse_body",
    "parse_cast",
    "play_name",
    "tag_statistics",
]
