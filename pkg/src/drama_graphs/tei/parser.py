# ABOUTME: TEI Simple parser for cast lists and annotated body events.
# ABOUTME: Tracks acts, scenes, characters on stage and speakers in document order.

import re
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import BinaryIO

import structlog
from lxml import etree
from pydantic import BaseModel, Field

from drama_graphs.models import (
    CastEntry,
    CharacterSet,
    FlushPolicy,
    ParseWarning,
    RawEvent,
    WarningKind,
    sorted_characters,
)

log = structlog.get_logger()

XML_NS = "http://www.w3.org/XML/1998/namespace"
XML_ID = f"{{{XML_NS}}}id"
TEI_SUFFIX = "_TEIsimple_FolgerShakespeare.xml"
TOY_SUFFIX = ".toy"

TAGS_OF_INTEREST = frozenset(
    {"sp", "speaker", "p", "lb", "w", "pc", "c", "stage", "div", "milestone"}
)
# Rows inside a speech that carry the speaker annotation
SPEAKER_ANNOTATED_TAGS = frozenset({"sp", "lb", "w", "pc"})
FLUSH_DIV_TYPES = frozenset({"act", "scene", "prologue", "epilogue", "induction"})
ENTRY_TYPES = frozenset({"entry", "entrance"})
EXIT_TYPES = frozenset({"exit"})
PASS_THROUGH_ATTRIBUTES = ("n", "lemma", "ana", "part", "rendition", "prev")


class TeiParseError(ValueError):
    """Raised when a document is not well-formed XML."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        column: int | None = None,
        offset: int | None = None,
    ) -> None:
        super().__init__(message)
        self.line = line
        self.column = column
        self.offset = offset


class CastValidationError(ValueError):
    """Raised when the cast list is internally inconsistent."""


class TagStatistics(BaseModel):
    """Element and attribute counts of one document."""

    tags: dict[str, int] = Field(default_factory=dict)
    attributes: dict[str, dict[str, int]] = Field(default_factory=dict)


def play_name(path: str | Path) -> str:
    """Derive the `{play}` placeholder from a raw file name."""
    name = Path(path).name
    if name.endswith(TEI_SUFFIX):
        return name[: -len(TEI_SUFFIX)]
    return Path(name).stem


def _read(xml_document: bytes | BinaryIO) -> bytes:
    if isinstance(xml_document, bytes | bytearray):
        return bytes(xml_document)
    return xml_document.read()


def _byte_offset(data: bytes, line: int, column: int) -> int:
    lines = data.split(b"\n")
    preceding = sum(len(chunk) + 1 for chunk in lines[: max(line - 1, 0)])
    return preceding + max(column - 1, 0)


def _parse_tree(data: bytes) -> etree._Element:
    # duplicate xml:ids reach cast validation instead of failing the parse
    parser = etree.XMLParser(
        resolve_entities=False, no_network=True, huge_tree=True, collect_ids=False
    )
    try:
        return etree.fromstring(data, parser)
    except etree.XMLSyntaxError as e:
        line, column = e.position
        offset = _byte_offset(data, line, column)
        raise TeiParseError(
            f"malformed XML at line {line}, column {column} (byte {offset}): {e.msg}",
            line=line,
            column=column,
            offset=offset,
        ) from e


def _localname(el: etree._Element) -> str:
    return etree.QName(el).localname


def _references(value: str | None) -> CharacterSet:
    """Split a `who` attribute into `#`-prefixed ids, first appearance wins."""
    if not value:
        return ()
    refs = [token if token.startswith("#") else f"#{token}" for token in value.split()]
    return tuple(dict.fromkeys(refs))


def _div_number(n: str | None, default: int) -> int:
    if n:
        match = re.search(r"(\d+)$", n)
        if match:
            return int(match.group(1))
    return default


def _is_redundant_wrapper(el: etree._Element) -> bool:
    """A div whose only element child is a div of the same type and number."""
    children = [child for child in el if isinstance(child.tag, str)]
    if len(children) != 1 or _localname(children[0]) != "div":
        return False
    inner = children[0]
    return inner.get("type") == el.get("type") and inner.get("n") == el.get("n")


def parse_cast(xml_document: bytes | BinaryIO) -> list[CastEntry]:
    """Extract one CastEntry per `<castItem>`, in document order.

    Raises:
        TeiParseError: If the document is malformed.
        CastValidationError: On duplicate ids or group links to unknown cast items.
    """
    root = _parse_tree(_read(xml_document))
    entries: list[CastEntry] = []
    seen: set[str] = set()

    for el in root.iter("{*}castItem"):
        xml_id = el.get(XML_ID)
        if not xml_id:
            log.debug("cast_item_without_id", line=el.sourceline)
            continue
        if xml_id in seen:
            raise CastValidationError(f"duplicate cast xml:id: {xml_id}")
        seen.add(xml_id)

        corresp = el.get("corresp")
        if corresp:
            corresp = " ".join(token.lstrip("#") for token in corresp.split())
        entries.append(CastEntry(xml_id=xml_id, corresp=corresp or None))

    dangling = [
        (entry.xml_id, group)
        for entry in entries
        if entry.corresp
        for group in entry.corresp.split()
        if group not in seen
    ]
    if dangling:
        listing = ", ".join(f"{member} -> {group}" for member, group in dangling)
        raise CastValidationError(f"corresp references unknown cast items: {listing}")

    log.debug("cast_parsed", entries=len(entries))
    return entries


class TeiBodyParser:
    """Walks a TEI `<body>` and annotates every interesting tag with stage context.

    The parser is single-use per call to `parse`; recoverable irregularities end up in
    `warnings` rather than aborting the parse.
    """

    def __init__(
        self,
        policy: FlushPolicy | None = None,
        cast: Iterable[str] | None = None,
        tags_of_interest: Iterable[str] = TAGS_OF_INTEREST,
    ) -> None:
        self.policy = policy or FlushPolicy.for_tei()
        self.known: set[str] | None = (
            {c if c.startswith("#") else f"#{c}" for c in cast} if cast is not None else None
        )
        self.tags_of_interest = frozenset(tags_of_interest)
        self.warnings: list[ParseWarning] = []
        self._reset()

    def _reset(self) -> None:
        self._events: list[RawEvent] = []
        self._act = 0
        self._last_act = 0
        self._scene = 0
        self._onstage: frozenset[str] = frozenset()
        self._onstage_key: CharacterSet = ()
        self._stagegroup_raw = 0
        self._speaker: CharacterSet = ()
        self._label_depth = 0
        self._stage_depth = 0
        self._reported_unknown: set[str] = set()

    def parse(self, xml_document: bytes | BinaryIO) -> list[RawEvent]:
        """Parse the body into RawEvents in document order."""
        root = _parse_tree(_read(xml_document))
        self.warnings = []
        self._reset()

        body = next(root.iter("{*}body"), None)
        if body is None:
            log.warning("tei_body_missing")
            return []

        for child in body:
            self._visit(child)

        log.debug(
            "body_parsed",
            events=len(self._events),
            stagegroups=self._stagegroup_raw,
            warnings=len(self.warnings),
        )
        return self._events

    def _visit(self, el: etree._Element) -> None:
        if not isinstance(el.tag, str):
            return

        tag = _localname(el)
        type_attr = el.get("type")

        if tag == "div":
            self._enter_div(el, type_attr)
        elif tag == "sp":
            self._enter_speech(el)
        elif tag == "stage":
            self._apply_stage_direction(el, type_attr)

        if tag in self.tags_of_interest and not (tag == "div" and _is_redundant_wrapper(el)):
            self._emit(el, tag, type_attr)

        if tag == "speaker":
            self._label_depth += 1
        elif tag == "stage":
            self._stage_depth += 1

        for child in el:
            self._visit(child)

        if tag == "speaker":
            self._label_depth -= 1
        elif tag == "stage":
            self._stage_depth -= 1
        elif tag == "sp":
            self._speaker = ()
        elif tag == "div":
            self._leave_div(type_attr)

    def _enter_div(self, el: etree._Element, type_attr: str | None) -> None:
        if type_attr == "act":
            self._act = min(max(_div_number(el.get("n"), self._last_act + 1), 1), 5)
            self._last_act = self._act
        elif type_attr == "scene":
            self._scene = _div_number(el.get("n"), self._scene + 1)

        if type_attr in FLUSH_DIV_TYPES and self.policy.flush_on_scene_start:
            self._set_onstage(frozenset())

    def _leave_div(self, type_attr: str | None) -> None:
        if type_attr == "act":
            # Anything between this act and the next (or after the last) belongs to the next slot
            self._act = min(self._last_act + 1, 6)
        elif type_attr == "scene":
            self._scene = 0

    def _enter_speech(self, el: etree._Element) -> None:
        who = _references(el.get("who"))
        self._check_known(who, el)
        self._speaker = who
        self._restore_speaker()

    def _restore_speaker(self) -> None:
        if not self.policy.restore_speaker:
            return
        missing = [c for c in self._speaker if c not in self._onstage]
        if missing:
            log.debug("speaker_restored", characters=missing, act=self._act, scene=self._scene)
            self._set_onstage(self._onstage | set(missing))

    def _apply_stage_direction(self, el: etree._Element, type_attr: str | None) -> None:
        kinds = set((type_attr or "").split())
        who = _references(el.get("who"))
        if not who or not kinds & (ENTRY_TYPES | EXIT_TYPES):
            return
        self._check_known(who, el)

        if kinds & EXIT_TYPES:
            for character in who:
                if character not in self._onstage:
                    self._warn(
                        WarningKind.EXIT_OF_ABSENT_CHARACTER,
                        character,
                        el,
                        f"act {self._act}, scene {self._scene}",
                    )
            self._set_onstage(self._onstage - set(who))
        if kinds & ENTRY_TYPES:
            self._set_onstage(self._onstage | set(who))

    def _check_known(self, who: CharacterSet, el: etree._Element) -> None:
        if self.known is None:
            return
        for character in who:
            if character not in self.known and character not in self._reported_unknown:
                self._reported_unknown.add(character)
                self._warn(WarningKind.UNKNOWN_CHARACTER, character, el, "not in cast list")

    def _warn(self, kind: WarningKind, character: str, el: etree._Element, detail: str) -> None:
        warning = ParseWarning(kind=kind, character=character, xml_id=el.get(XML_ID), detail=detail)
        self.warnings.append(warning)
        log.warning(kind.value, character=character, xml_id=warning.xml_id, detail=detail)

    def _set_onstage(self, onstage: frozenset[str]) -> None:
        if onstage != self._onstage:
            self._onstage = onstage
            self._onstage_key = sorted_characters(onstage)
            self._stagegroup_raw += 1

    def _emit(self, el: etree._Element, tag: str, type_attr: str | None) -> None:
        speaker: CharacterSet = ()
        if (
            self._speaker
            and tag in SPEAKER_ANNOTATED_TAGS
            and not self._label_depth
            and not self._stage_depth
        ):
            # Stage directions inside the speech may have sent the speaker off
            self._restore_speaker()
            speaker = self._speaker

        who = el.get("who")
        self._events.append(
            RawEvent(
                tag=tag,
                type_attr=type_attr,
                text=el.text if len(el) == 0 else None,
                xml_id=el.get(XML_ID),
                who=_references(who) if who else None,
                act=self._act,
                scene=self._scene,
                onstage=self._onstage_key,
                stagegroup_raw=self._stagegroup_raw,
                speaker=speaker,
                **{name: el.get(name) for name in PASS_THROUGH_ATTRIBUTES},
            )
        )


def parse_body(
    xml_document: bytes | BinaryIO,
    policy: FlushPolicy | None = None,
    cast: Iterable[str] | None = None,
) -> list[RawEvent]:
    """Parse a TEI Simple body into annotated RawEvents.

    Args:
        xml_document: Raw XML bytes or a binary stream.
        policy: Flushing policy. Defaults to flushing at scene starts with speaker restoration.
        cast: Known cast ids; unknown `who` references are reported as warnings.
    """
    return TeiBodyParser(policy, cast).parse(xml_document)


def count_tokens_and_lines(events: Sequence[RawEvent]) -> tuple[int, int]:
    """Count spoken tokens (`<w>` only) and line milestones (`<lb>`) in a range."""
    n_tokens = sum(1 for e in events if e.tag == "w")
    n_lines = sum(1 for e in events if e.tag == "lb")
    return n_tokens, n_lines


def tag_statistics(xml_document: bytes | BinaryIO) -> TagStatistics:
    """Count elements and attribute usage per tag across a whole document."""
    root = _parse_tree(_read(xml_document))
    tags: Counter[str] = Counter()
    attributes: defaultdict[str, Counter[str]] = defaultdict(Counter)

    for el in root.iter():
        if not isinstance(el.tag, str):
            continue
        tag = _localname(el)
        tags[tag] += 1
        for name in el.attrib:
            qname = etree.QName(name)
            label = f"xml:{qname.localname}" if qname.namespace == XML_NS else qname.localname
            attributes[tag][label] += 1

    return TagStatistics(
        tags=dict(sorted(tags.items())),
        attributes={tag: dict(sorted(c.items())) for tag, c in sorted(attributes.items())},
    )
