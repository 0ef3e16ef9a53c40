# ABOUTME: Toy-drama notation used to exercise the expansion operators on tiny plays.
# ABOUTME: Exports the parser, renderer, and conversions into raw events and settings.

from drama_graphs.toy.notation import (
    ToyEvent,
    ToyEventKind,
    ToyIssue,
    ToyScript,
    ToyScriptError,
    parse_toy,
    render_toy,
    toy_to_events,
    toy_to_settings,
)

__all__ = [
    "ToyEvent",
    "ToyEventKind",
    "ToyIssue",
    "ToyScript",
    "ToyScriptError",
    "parse_toy",
    "render_toy",
    "toy_to_events",
    "toy_to_settings",
]
