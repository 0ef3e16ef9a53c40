# ABOUTME: Parser and renderer for the toy-drama micro-notation (`|->A; A*|...`).
# ABOUTME: Converts toy scripts into raw events so they share the TEI aggregation pathway.

import re
from enum import Enum

import structlog
from pydantic import BaseModel, ConfigDict, Field

from drama_graphs.aggregation.settings import aggregate_settings
from drama_graphs.models import RawEvent, Setting, sorted_characters

log = structlog.get_logger()

_CHARS = r"[A-Z](?:\s*,\s*[A-Z])*"
_ARROW = r"(?:->|→)"
ENTRY_RE = re.compile(rf"^\s*{_ARROW}\s*(?P<chars>{_CHARS})\s*$")
EXIT_RE = re.compile(rf"^\s*(?P<chars>{_CHARS})\s*{_ARROW}\s*$")
SPEECH_RE = re.compile(rf"^\s*(?P<chars>{_CHARS})\s*\*\s*$")


class ToyEventKind(str, Enum):
    """What happens in one activity."""

    ENTRY = "entry"
    EXIT = "exit"
    SPEECH = "speech"


class ToyEvent(BaseModel):
    """One activity: characters entering, exiting, or speaking together."""

    model_config = ConfigDict(frozen=True)

    kind: ToyEventKind
    characters: tuple[str, ...] = Field(min_length=1)

    def render(self) -> str:
        names = ",".join(self.characters)
        match self.kind:
            case ToyEventKind.ENTRY:
                return f"->{names}"
            case ToyEventKind.EXIT:
                return f"{names}->"
            case ToyEventKind.SPEECH:
                return f"{names}*"


class ToyScript(BaseModel):
    """A validated toy drama: scenes of activities."""

    model_config = ConfigDict(frozen=True)

    scenes: tuple[tuple[ToyEvent, ...], ...] = ()

    @property
    def characters(self) -> tuple[str, ...]:
        seen = {c for scene in self.scenes for event in scene for c in event.characters}
        return tuple(sorted(seen))


class ToyIssue(BaseModel):
    """A problem found at a character offset of the script text."""

    position: int
    message: str


class ToyScriptError(ValueError):
    """Raised with every syntax and validation issue of a toy script."""

    def __init__(self, issues: list[ToyIssue]) -> None:
        self.issues = issues
        super().__init__("; ".join(f"at {i.position}: {i.message}" for i in issues))


def _split(text: str, separator: str, offset: int = 0) -> list[tuple[int, str]]:
    parts = []
    start = 0
    for index, char in enumerate(text):
        if char == separator:
            parts.append((offset + start, text[start:index]))
            start = index + 1
    parts.append((offset + start, text[start:]))
    return parts


def _parse_activity(text: str) -> ToyEvent | None:
    for kind, pattern in (
        (ToyEventKind.ENTRY, ENTRY_RE),
        (ToyEventKind.EXIT, EXIT_RE),
        (ToyEventKind.SPEECH, SPEECH_RE),
    ):
        match = pattern.match(text)
        if match:
            characters = tuple(re.findall(r"[A-Z]", match.group("chars")))
            return ToyEvent(kind=kind, characters=characters)
    return None


def parse_toy(script_text: str) -> ToyScript:
    """Parse and validate a toy drama.

    `->A` is an entry, `A->` an exit, `A*` speech; `,` lists characters acting together,
    `;` separates activities and `|` separates scenes. Characters stay on stage across
    scene boundaries until they exit.

    Raises:
        ToyScriptError: With every syntax error and every speech/exit by an absent character.
    """
    segments = _split(script_text, "|")
    if segments and not segments[0][1].strip():
        segments.pop(0)
    if segments and not segments[-1][1].strip():
        segments.pop()

    issues: list[ToyIssue] = []
    onstage: set[str] = set()
    scenes: list[tuple[ToyEvent, ...]] = []

    for scene_number, (scene_offset, scene_text) in enumerate(segments, start=1):
        events: list[ToyEvent] = []
        for position, activity in _split(scene_text, ";", scene_offset):
            if not activity.strip():
                continue
            position += len(activity) - len(activity.lstrip())
            event = _parse_activity(activity)
            if event is None:
                message = f"cannot parse {activity.strip()!r}"
                issues.append(ToyIssue(position=position, message=message))
                continue
            if len(set(event.characters)) != len(event.characters):
                issues.append(ToyIssue(position=position, message="character listed twice"))
                continue

            if event.kind == ToyEventKind.ENTRY:
                for c in event.characters:
                    if c in onstage:
                        issues.append(
                            ToyIssue(
                                position=position,
                                message=(
                                    f"{c} enters in scene {scene_number} but is already on stage"
                                ),
                            )
                        )
                onstage.update(event.characters)
            elif event.kind == ToyEventKind.EXIT:
                for c in event.characters:
                    if c not in onstage:
                        issues.append(
                            ToyIssue(
                                position=position,
                                message=f"{c} exits in scene {scene_number} but is not on stage",
                            )
                        )
                onstage.difference_update(event.characters)
            else:
                for c in event.characters:
                    if c not in onstage:
                        issues.append(
                            ToyIssue(
                                position=position,
                                message=f"{c} speaks in scene {scene_number} but is not on stage",
                            )
                        )
            events.append(event)
        scenes.append(tuple(events))

    if issues:
        raise ToyScriptError(issues)

    return ToyScript(scenes=tuple(scenes))


def render_toy(script: ToyScript) -> str:
    """Render a script in canonical ASCII notation."""
    if not script.scenes:
        return ""
    body = "|".join("; ".join(event.render() for event in scene) for scene in script.scenes)
    return f"|{body}|"


def toy_to_events(script: ToyScript) -> list[RawEvent]:
    """Translate a script into raw events: one word and one line per speech."""
    events: list[RawEvent] = []
    onstage: frozenset[str] = frozenset()
    stagegroup_raw = 0

    def event(tag: str, scene: int, **fields: object) -> RawEvent:
        return RawEvent(
            tag=tag,
            act=1,
            scene=scene,
            onstage=sorted_characters(onstage),
            stagegroup_raw=stagegroup_raw,
            **fields,
        )

    for scene_number, scene in enumerate(script.scenes, start=1):
        events.append(event("div", scene_number, type_attr="scene", n=str(scene_number)))
        for activity in scene:
            refs = tuple(f"#{c}" for c in activity.characters)
            if activity.kind == ToyEventKind.SPEECH:
                events.append(event("sp", scene_number, who=refs, speaker=refs))
                events.append(event("lb", scene_number, speaker=refs))
                events.append(event("w", scene_number, text=activity.render(), speaker=refs))
                continue

            if activity.kind == ToyEventKind.ENTRY:
                updated = onstage | set(refs)
            else:
                updated = onstage - set(refs)
            if updated != onstage:
                onstage = updated
                stagegroup_raw += 1
            events.append(event("stage", scene_number, type_attr=activity.kind.value, who=refs))

    return events


def toy_to_settings(script: ToyScript) -> list[Setting]:
    """Settings of a toy drama, with unit line and token weights per speech."""
    settings = aggregate_settings(toy_to_events(script))
    log.debug("toy_settings_built", scenes=len(script.scenes), settings=len(settings))
    return settings
