# ABOUTME: Tests for collapsing raw events into settings.
# ABOUTME: Checks the opening settings of the Romeo fixture and conservation of tokens and lines.

import pytest

from drama_graphs.aggregation import aggregate_settings
from drama_graphs.models import RawEvent, Setting
from drama_graphs.tei import count_tokens_and_lines, parse_body
from tests.builders import CHORUS, GREGORY, SAMPSON


def _event(tag: str, speaker: tuple[str, ...], stagegroup_raw: int = 1) -> RawEvent:
    return RawEvent(
        tag=tag,
        act=1,
        scene=1,
        onstage=("#A", "#B"),
        stagegroup_raw=stagegroup_raw,
        speaker=speaker,
    )


class TestAggregateSettings:
    """Tests for the setting table."""

    def test_opening_settings(self, romeo_xml: bytes) -> None:
        """Prologue plus the first four speeches give five settings."""
        settings = aggregate_settings(parse_body(romeo_xml))
        pair = (GREGORY, SAMPSON)

        assert [
            (s.act, s.scene, s.stagegroup, s.stagegroup_raw, s.setting, s.onstage, s.speaker)
            for s in settings
        ] == [
            (0, 0, 1, 1, 1, (CHORUS,), (CHORUS,)),
            (1, 1, 2, 3, 2, pair, (SAMPSON,)),
            (1, 1, 2, 3, 3, pair, (GREGORY,)),
            (1, 1, 2, 3, 4, pair, (SAMPSON,)),
            (1, 1, 2, 3, 5, pair, (GREGORY,)),
        ]
        assert [(s.n_lines, s.n_tokens) for s in settings] == [
            (14, 106),
            (1, 8),
            (1, 7),
            (1, 9),
            (2, 10),
        ]

    def test_conserves_tokens_and_lines(self, romeo_xml: bytes) -> None:
        events = parse_body(romeo_xml)
        settings = aggregate_settings(events)
        n_tokens, n_lines = count_tokens_and_lines([e for e in events if e.speaker])

        assert sum(s.n_tokens for s in settings) == n_tokens
        assert sum(s.n_lines for s in settings) == n_lines

    def test_speakers_are_on_stage(self, romeo_xml: bytes) -> None:
        for setting in aggregate_settings(parse_body(romeo_xml)):
            assert set(setting.speaker) <= set(setting.onstage)

    def test_no_events(self) -> None:
        assert aggregate_settings([]) == []

    def test_tokenless_lines_join_next_setting(self) -> None:
        """A line break without words is credited to the following setting of the scene."""
        events = [
            _event("lb", ("#A",)),
            _event("lb", ("#B",)),
            _event("w", ("#B",)),
        ]
        settings = aggregate_settings(events)

        assert len(settings) == 1
        assert settings[0].speaker == ("#B",)
        assert (settings[0].n_lines, settings[0].n_tokens) == (2, 1)

    def test_trailing_tokenless_lines_join_previous_setting(self) -> None:
        events = [
            _event("lb", ("#A",)),
            _event("w", ("#A",)),
            _event("lb", ("#B",)),
        ]
        settings = aggregate_settings(events)

        assert [(s.n_lines, s.n_tokens) for s in settings] == [(2, 1)]

    def test_merges_runs_split_by_tokenless_stretch(self) -> None:
        """Dropping an empty stretch re-establishes maximal settings."""
        events = [
            _event("w", ("#A",)),
            _event("lb", ("#B",)),
            _event("w", ("#A",)),
        ]
        settings = aggregate_settings(events)

        assert len(settings) == 1
        assert (settings[0].n_lines, settings[0].n_tokens) == (1, 2)

    def test_stagegroups_renumbered_consecutively(self) -> None:
        events = [
            _event("w", ("#A",), stagegroup_raw=4),
            _event("w", ("#A",), stagegroup_raw=9),
            _event("w", ("#B",), stagegroup_raw=9),
        ]
        settings = aggregate_settings(events)

        assert [(s.stagegroup, s.stagegroup_raw, s.setting) for s in settings] == [
            (1, 4, 1),
            (2, 9, 2),
            (2, 9, 3),
        ]

    def test_settings_validate_speakers(self) -> None:
        """A speaker who is not on stage cannot form a setting."""
        with pytest.raises(ValueError, match="not on stage"):
            Setting(
                act=1,
                scene=1,
                stagegroup=1,
                stagegroup_raw=1,
                setting=1,
                onstage=("#A",),
                speaker=("#B",),
                n_lines=1,
                n_tokens=1,
            )
