# ABOUTME: Main package for the drama graphs corpus pipeline.
# ABOUTME: Exports settings and the core play data models.

from drama_graphs.config import get_settings
from drama_graphs.models import CastEntry, FlushPolicy, RawEvent, Setting

__all__ = [
    "get_settings",
    "CastEntry",
    "FlushPolicy",
    "RawEvent",
    "Setting",
]
