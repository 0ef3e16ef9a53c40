# ABOUTME: Builders for small TEI Simple documents used across the test suite.
# ABOUTME: Produces cast lists, speeches with one <w> per word and <lb> per line, stage directions.

import itertools
from collections.abc import Iterable, Sequence

from drama_graphs.models import RawEvent

TEI_NS = "http://www.tei-c.org/ns/1.0"
PUNCTUATION = ",.;:!?"

# Fourteen verse lines, 106 spoken words
PROLOGUE_LINES = [" ".join(["verse"] * 8)] * 13 + ["verse verse"]

ROMEO_CAST = [
    ("Chorus_Rom", None),
    ("SERVANTS.CAPULET_Rom", None),
    ("SERVANTS.CAPULET.Sampson_Rom", "SERVANTS.CAPULET_Rom"),
    ("SERVANTS.CAPULET.Gregory_Rom", "SERVANTS.CAPULET_Rom"),
]
SAMPSON = "#SERVANTS.CAPULET.Sampson_Rom"
GREGORY = "#SERVANTS.CAPULET.Gregory_Rom"
CHORUS = "#Chorus_Rom"


def _words(line: str, line_id: str) -> str:
    parts = []
    for index, token in enumerate(line.split()):
        word = token.rstrip(PUNCTUATION)
        punct = token[len(word) :]
        if index:
            parts.append("<c> </c>")
        parts.append(f'<w n="{line_id}" lemma="{word.lower()}">{word}</w>')
        if punct:
            parts.append(f'<pc n="{line_id}">{punct}</pc>')
    return "".join(parts)


def speech(sp_id: str, who: str, lines: Sequence[str], label: str | None = None) -> str:
    """A `<sp>` with a speaker label and one `<lb>` per verse line."""
    label = label or who.lstrip("#").split(".")[-1].split("_")[0].upper()
    body = "".join(
        f'<lb xml:id="ftln-{sp_id}-{i}" n="{sp_id}.{i}"/>{_words(line, f"{sp_id}.{i}")}'
        for i, line in enumerate(lines, start=1)
    )
    return (
        f'<sp xml:id="sp-{sp_id}" who="{who}">'
        f"<speaker><w>{label}</w></speaker>"
        f'<p xml:id="p-{sp_id}">{body}</p>'
        "</sp>"
    )


def stage(kind: str, who: Iterable[str], text: str = "") -> str:
    return f'<stage type="{kind}" who="{" ".join(who)}">{text}</stage>'


def tei_document(cast: Iterable[tuple[str, str | None]], body: str) -> bytes:
    """Wrap a cast list and body markup into a TEI document."""
    items = "".join(
        f'<castItem xml:id="{xml_id}"'
        + (f' corresp="#{corresp}"' if corresp else "")
        + f"><role>{xml_id}</role></castItem>"
        for xml_id, corresp in cast
    )
    return (
        f'<?xml version="1.0" encoding="UTF-8"?>'
        f'<TEI xmlns="{TEI_NS}">'
        f"<teiHeader><fileDesc><titleStmt><title>Test</title></titleStmt></fileDesc></teiHeader>"
        f"<text><front><div type=\"castList\"><castList>{items}</castList></div></front>"
        f"<body>{body}</body></text>"
        "</TEI>"
    ).encode("utf-8")


def romeo_opening() -> bytes:
    """Prologue and the first four speeches of the opening scene."""
    prologue = (
        '<div type="prologue">'
        + stage("entrance", [CHORUS], "Enter Chorus.")
        + speech("0001", CHORUS, PROLOGUE_LINES)
        + stage("exit", [CHORUS], "He exits.")
        + "</div>"
    )
    scene = (
        '<div type="act" n="1"><div type="scene" n="1">'
        + stage("entrance", [SAMPSON, GREGORY], "Enter Sampson and Gregory.")
        + speech("0015", SAMPSON, ["Gregory, on my word we'll not carry coals."])
        + speech("0016", GREGORY, ["No, for then we should be colliers."])
        + speech("0017", SAMPSON, ["I mean, an we be in choler, we'll draw."])
        + speech("0018", GREGORY, ["Ay, while you live, draw your neck out", "of collar."])
        + "</div></div>"
    )
    return tei_document(ROMEO_CAST, prologue + scene)


def check_raw_events(events: Sequence[RawEvent]) -> None:
    """Assert the context invariants every raw event table satisfies."""
    for event in events:
        assert 0 <= event.act <= 6
        assert set(event.speaker) <= set(event.onstage), event
    for before, after in itertools.pairwise(events):
        assert after.act >= before.act
        assert after.stagegroup_raw >= before.stagegroup_raw
        changed = after.onstage != before.onstage
        assert (after.stagegroup_raw != before.stagegroup_raw) == changed, after
