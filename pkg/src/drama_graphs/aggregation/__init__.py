# ABOUTME: Aggregation of raw events into settings (speech acts).
# ABOUTME: Exports the setting-table builder used by both TEI and toy pathways.

from drama_graphs.aggregation.settings import aggregate_settings

__all__ = ["aggregate_settings"]
