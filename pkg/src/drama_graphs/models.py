# ABOUTME: Pydantic models shared across the parsing, aggregation and graph stages.
# ABOUTME: Defines cast entries, raw events, settings, and the character flushing policy.

from enum import Enum
from typing import Annotated, Self

from pydantic import BaseModel, ConfigDict, Field, StringConstraints, model_validator

CharacterId = Annotated[str, StringConstraints(min_length=1, pattern=r"^\S+$")]
"""Corpus-wide character identifier. References carry a leading `#`, cast entries do not."""

CharacterSet = tuple[CharacterId, ...]


def format_characters(characters: CharacterSet | None) -> str:
    """Serialize a character set as a whitespace-separated list."""
    return " ".join(characters) if characters else ""


def parse_characters(value: str | None) -> CharacterSet:
    """Inverse of format_characters; empty or missing values become the empty set."""
    return tuple(value.split()) if value else ()


def sorted_characters(characters: set[str] | CharacterSet) -> CharacterSet:
    """Canonical (lexicographic) order for onstage sets."""
    return tuple(sorted(characters))


class FlushPolicy(BaseModel):
    """How to compensate for missing exit stage directions."""

    model_config = ConfigDict(frozen=True)

    flush_on_scene_start: bool = True
    restore_speaker: bool = True

    @model_validator(mode="after")
    def _restore_when_flushing(self) -> Self:
        if self.flush_on_scene_start and not self.restore_speaker:
            raise ValueError("restore_speaker must be enabled when flushing at scene starts")
        return self

    @classmethod
    def for_tei(cls) -> "FlushPolicy":
        return cls(flush_on_scene_start=True, restore_speaker=True)

    @classmethod
    def for_toy(cls) -> "FlushPolicy":
        return cls(flush_on_scene_start=False, restore_speaker=False)


class CastEntry(BaseModel):
    """One `<castItem>` of a play."""

    model_config = ConfigDict(frozen=True)

    xml_id: CharacterId
    corresp: str | None = None


class WarningKind(str, Enum):
    """Categories of recoverable problems found while parsing."""

    EXIT_OF_ABSENT_CHARACTER = "exit_of_absent_character"
    UNKNOWN_CHARACTER = "unknown_character"
    DANGLING_CORRESP = "dangling_corresp"


class ParseWarning(BaseModel):
    """A non-fatal irregularity in the raw encoding."""

    model_config = ConfigDict(frozen=True)

    kind: WarningKind
    character: str
    xml_id: str | None = None
    detail: str = ""


class RawEvent(BaseModel):
    """One descendant of the TEI `<body>`, annotated with stage context."""

    model_config = ConfigDict(frozen=True)

    tag: str
    type_attr: str | None = None
    n: str | None = None
    text: str | None = None
    xml_id: str | None = None
    who: CharacterSet | None = None
    lemma: str | None = None
    ana: str | None = None
    part: str | None = None
    rendition: str | None = None
    prev: str | None = None
    act: int = Field(ge=0, le=6)
    scene: int = Field(ge=0)
    onstage: CharacterSet = ()
    stagegroup_raw: int = Field(ge=0)
    speaker: CharacterSet = ()

    @property
    def is_spoken(self) -> bool:
        """True for events that belong to a speech (words and line milestones)."""
        return bool(self.speaker)


class Setting(BaseModel):
    """A maximal stretch with constant onstage set and speaker set."""

    model_config = ConfigDict(frozen=True)

    act: int = Field(ge=0)
    scene: int = Field(ge=0)
    stagegroup: int = Field(ge=1)
    stagegroup_raw: int = Field(ge=0)
    setting: int = Field(ge=1)
    onstage: CharacterSet
    speaker: CharacterSet = Field(min_length=1)
    n_lines: int = Field(ge=0)
    n_tokens: int = Field(ge=1)

    @model_validator(mode="after")
    def _speaker_on_stage(self) -> Self:
        missing = set(self.speaker) - set(self.onstage)
        if missing:
            raise ValueError(f"speakers not on stage: {sorted(missing)}")
        return self

    @property
    def listeners(self) -> CharacterSet:
        """Characters on stage who do not speak in this setting."""
        speakers = set(self.speaker)
        return tuple(c for c in self.onstage if c not in speakers)
