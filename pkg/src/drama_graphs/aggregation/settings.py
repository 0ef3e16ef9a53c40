# ABOUTME: Collapses annotated raw events into the per-setting table of a play.
# ABOUTME: A setting is a maximal spoken stretch with constant onstage set and speaker set.

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import groupby

import structlog

from drama_graphs.models import CharacterSet, RawEvent, Setting
from drama_graphs.tei.parser import count_tokens_and_lines

log = structlog.get_logger()

SPOKEN_TAGS = frozenset({"w", "lb"})

SettingKey = tuple[int, int, int, CharacterSet, CharacterSet]


@dataclass
class _Run:
    key: SettingKey
    n_tokens: int
    n_lines: int

    @property
    def scene_key(self) -> tuple[int, int]:
        return self.key[0], self.key[1]


def _setting_key(event: RawEvent) -> SettingKey:
    return event.act, event.scene, event.stagegroup_raw, event.onstage, event.speaker


def _spoken_runs(events: Sequence[RawEvent]) -> list[_Run]:
    spoken = (e for e in events if e.speaker and e.tag in SPOKEN_TAGS)
    runs = []
    for key, group in groupby(spoken, key=_setting_key):
        n_tokens, n_lines = count_tokens_and_lines(list(group))
        runs.append(_Run(key, n_tokens, n_lines))
    return runs


def _merge_runs(runs: list[_Run]) -> list[_Run]:
    """Drop tokenless runs, keep their lines, and re-establish maximality."""
    merged: list[_Run] = []
    pending: list[_Run] = []

    def attach_pending(target: _Run | None) -> None:
        for orphan in pending:
            if target is not None and target.scene_key == orphan.scene_key:
                target.n_lines += orphan.n_lines
            elif merged and merged[-1].scene_key == orphan.scene_key:
                merged[-1].n_lines += orphan.n_lines
            else:
                log.debug("orphan_lines_dropped", lines=orphan.n_lines, act=orphan.key[0])
        pending.clear()

    for run in runs:
        if run.n_tokens == 0:
            pending.append(run)
            continue
        attach_pending(run)
        if merged and merged[-1].key == run.key:
            merged[-1].n_tokens += run.n_tokens
            merged[-1].n_lines += run.n_lines
        else:
            merged.append(run)

    attach_pending(None)
    return merged


def aggregate_settings(events: Sequence[RawEvent]) -> list[Setting]:
    """Build the setting table from a play's raw events.

    Only stretches with at least one spoken token survive. Lines whose milestone falls into
    a tokenless stretch are credited to the neighbouring setting of the same scene, so
    line totals are conserved. Stage groups are renumbered consecutively from 1 over the
    groups that survive.
    """
    runs = _merge_runs(_spoken_runs(events))

    stagegroups: dict[int, int] = {}
    settings: list[Setting] = []
    for index, run in enumerate(runs, start=1):
        act, scene, stagegroup_raw, onstage, speaker = run.key
        stagegroup = stagegroups.setdefault(stagegroup_raw, len(stagegroups) + 1)
        settings.append(
            Setting(
                act=act,
                scene=scene,
                stagegroup=stagegroup,
                stagegroup_raw=stagegroup_raw,
                setting=index,
                onstage=onstage,
                speaker=speaker,
                n_lines=run.n_lines,
                n_tokens=run.n_tokens,
            )
        )

    log.debug("settings_aggregated", settings=len(settings), stagegroups=len(stagegroups))
    return settings
