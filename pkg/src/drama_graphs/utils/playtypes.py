# ABOUTME: Genre of each play in the Folger Shakespeare corpus.
# ABOUTME: Written to metadata/playtypes.csv and used by the corpus summary.

from collections import Counter

import structlog

from drama_graphs.services.csv_io import write_table
from drama_graphs.services.layout import CorpusLayout
from drama_graphs.services.tables import PLAYTYPES

log = structlog.get_logger()

COMEDY = "comedy"
HISTORY = "history"
TRAGEDY = "tragedy"

PLAY_TYPES: dict[str, str] = {
    # Comedies, including the romances and problem plays
    "alls-well-that-ends-well": COMEDY,
    "as-you-like-it": COMEDY,
    "the-comedy-of-errors": COMEDY,
    "cymbeline": COMEDY,
    "loves-labors-lost": COMEDY,
    "measure-for-measure": COMEDY,
    "the-merry-wives-of-windsor": COMEDY,
    "the-merchant-of-venice": COMEDY,
    "a-midsummer-nights-dream": COMEDY,
    "much-ado-about-nothing": COMEDY,
    "pericles": COMEDY,
    "the-taming-of-the-shrew": COMEDY,
    "the-tempest": COMEDY,
    "troilus-and-cressida": COMEDY,
    "twelfth-night": COMEDY,
    "the-two-gentlemen-of-verona": COMEDY,
    "the-winters-tale": COMEDY,
    # Histories
    "henry-iv-part-1": HISTORY,
    "henry-iv-part-2": HISTORY,
    "henry-v": HISTORY,
    "henry-vi-part-1": HISTORY,
    "henry-vi-part-2": HISTORY,
    "henry-vi-part-3": HISTORY,
    "henry-viii": HISTORY,
    "king-john": HISTORY,
    "richard-ii": HISTORY,
    "richard-iii": HISTORY,
    # Tragedies
    "antony-and-cleopatra": TRAGEDY,
    "coriolanus": TRAGEDY,
    "hamlet": TRAGEDY,
    "julius-caesar": TRAGEDY,
    "king-lear": TRAGEDY,
    "macbeth": TRAGEDY,
    "othello": TRAGEDY,
    "romeo-and-juliet": TRAGEDY,
    "timon-of-athens": TRAGEDY,
    "titus-andronicus": TRAGEDY,
}

PROVENANCE = "play types follow the First Folio grouping, with romances counted as comedies"


def play_type_counts(play_types: dict[str, str] | None = None) -> dict[str, int]:
    mapping = PLAY_TYPES if play_types is None else play_types
    return dict(sorted(Counter(mapping.values()).items()))


def write_playtypes(layout: CorpusLayout, play_types: dict[str, str] | None = None) -> int:
    """Write metadata/playtypes.csv sorted by play name; returns the number of rows."""
    mapping = PLAY_TYPES if play_types is None else play_types
    rows = [{"play_name": play, "play_type": kind} for play, kind in sorted(mapping.items())]
    write_table(layout.playtypes_path, rows, PLAYTYPES, comments=(PROVENANCE,))
    log.info("playtypes_written", rows=len(rows), counts=play_type_counts(mapping))
    return len(rows)
