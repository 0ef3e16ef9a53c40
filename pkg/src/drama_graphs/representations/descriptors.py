# ABOUTME: Representation descriptors (`<model>-<aggregation>-<properties>`) and text unit ids.
# ABOUTME: Enumerates the eighteen supported graph and hypergraph representations.

from enum import Enum

from pydantic import BaseModel, ConfigDict


class DescriptorError(ValueError):
    """Raised for descriptors outside the supported representation set."""


class Model(str, Enum):
    """Semantic mapping."""

    CE = "ce"
    SE = "se"
    HG = "hg"


class Aggregation(str, Enum):
    """Granularity of the text units that become edges (or nodes)."""

    SCENE = "scene"
    GROUP = "group"
    SPEECH = "speech"


PROPERTY_ORDER = "mbwd"

REPRESENTATIONS: tuple[str, ...] = (
    "ce-scene-b",
    "ce-scene-mb",
    "ce-scene-mw",
    "ce-group-b",
    "ce-group-mb",
    "ce-group-mw",
    "se-scene-b",
    "se-scene-w",
    "se-group-b",
    "se-group-w",
    "se-speech-wd",
    "se-speech-mwd",
    "hg-scene-mb",
    "hg-scene-mw",
    "hg-group-mb",
    "hg-group-mw",
    "hg-speech-wd",
    "hg-speech-mwd",
)
# Count-weighted clique expansions ship as files but are views for plotting only
CONVENIENCE_REPRESENTATIONS: tuple[str, ...] = ("ce-scene-w", "ce-group-w")

# Representations compared in degree-ranking correlations
RANKED_REPRESENTATIONS: tuple[str, ...] = (
    "ce-scene-b",
    "ce-scene-mb",
    "ce-scene-mw",
    "ce-group-b",
    "ce-group-mb",
    "ce-group-mw",
    "se-scene-b",
    "se-scene-w",
    "se-group-b",
    "se-group-w",
    "se-speech-wd",
)


class ReprDescriptor(BaseModel):
    """A point in the taxonomy of semantic mapping, granularity, and expressivity."""

    model_config = ConfigDict(frozen=True)

    model: Model
    aggregation: Aggregation
    properties: str

    def __str__(self) -> str:
        return f"{self.model.value}-{self.aggregation.value}-{self.properties}"

    @property
    def is_multi(self) -> bool:
        return "m" in self.properties

    @property
    def is_weighted(self) -> bool:
        return "w" in self.properties

    @property
    def is_directed(self) -> bool:
        return "d" in self.properties


def parse_descriptor(text: str) -> ReprDescriptor:
    """Parse and validate a descriptor string such as `ce-group-mw`.

    Raises:
        DescriptorError: If the string is malformed or not a supported representation.
    """
    parts = text.strip().split("-")
    if len(parts) != 3:
        raise DescriptorError(f"expected <model>-<aggregation>-<properties>, got {text!r}")

    model, aggregation, properties = parts
    canonical = "".join(p for p in PROPERTY_ORDER if p in properties)
    if len(canonical) != len(properties):
        raise DescriptorError(f"unknown or repeated properties in {text!r}")

    label = f"{model}-{aggregation}-{canonical}"
    if label not in REPRESENTATIONS and label not in CONVENIENCE_REPRESENTATIONS:
        raise DescriptorError(f"unsupported representation: {text!r}")

    return ReprDescriptor(
        model=Model(model), aggregation=Aggregation(aggregation), properties=canonical
    )


def all_descriptors() -> list[ReprDescriptor]:
    """The eighteen representations, in table order."""
    return [parse_descriptor(label) for label in REPRESENTATIONS]


class TextUnitId(BaseModel):
    """Identifier of a scene (`A.SS`) or stage group (`A.SS.GGGG`) node."""

    model_config = ConfigDict(frozen=True)

    act: int
    scene: int
    stagegroup: int | None = None

    def __str__(self) -> str:
        if self.stagegroup is None:
            return f"{self.act}.{self.scene:02d}"
        return f"{self.act}.{self.scene:02d}.{self.stagegroup:04d}"
