# ABOUTME: Graph and hypergraph representations of a play built from its setting table.
# ABOUTME: Exports descriptors, builders, the per-play bundle, graphdata export and graph views.

from drama_graphs.representations.bundle import PlayRepresentations, build_representations
from drama_graphs.representations.clique import (
    CliqueEdge,
    CliqueExpansion,
    CountEdge,
    build_ce,
    collapse_multigraph,
)
from drama_graphs.representations.descriptors import (
    CONVENIENCE_REPRESENTATIONS,
    RANKED_REPRESENTATIONS,
    REPRESENTATIONS,
    Aggregation,
    DescriptorError,
    Model,
    ReprDescriptor,
    TextUnitId,
    all_descriptors,
    parse_descriptor,
)
from drama_graphs.representations.export import (
    GraphTable,
    build_all,
    graphdata_filename,
    graphdata_tables,
)
from drama_graphs.representations.graphs import to_networkx, write_dot
from drama_graphs.representations.hypergraph import (
    DirectedHyperEdge,
    HyperEdge,
    Hypergraph,
    MemberWeights,
    NodeWeights,
    SpeechHypergraph,
    build_hg,
    build_hg_speech,
    node_weights,
)
from drama_graphs.representations.star import (
    DirectedStarEdge,
    EdgeType,
    NodeType,
    SpeechStarExpansion,
    StarEdge,
    StarExpansion,
    TypedNode,
    WeightedDirectedStarEdge,
    build_se,
    build_se_speech,
)
from drama_graphs.representations.units import TextUnit, character_nodes, text_units

__all__ = [
    "CONVENIENCE_REPRESENTATIONS",
    "RANKED_REPRESENTATIONS",
    "REPRESENTATIONS",
    "Aggregation",
    "CliqueEdge",
    "CliqueExpansion",
    "CountEdge",
    "DescriptorError",
    "DirectedHyperEdge",
    "DirectedStarEdge",
    "EdgeType",
    "GraphTable",
    "HyperEdge",
    "Hypergraph",
    "MemberWeights",
    "Model",
    "NodeType",
    "NodeWeights",
    "PlayRepresentations",
    "ReprDescriptor",
    "SpeechHypergraph",
    "SpeechStarExpansion",
    "StarEdge",
    "StarExpansion",
    "TextUnit",
    "TextUnitId",
    "TypedNode",
    "WeightedDirectedStarEdge",
    "all_descriptors",
    "build_all",
    "build_ce",
    "build_hg",
    "build_hg_speech",
    "build_representations",
    "build_se",
    "build_se_speech",
    "character_nodes",
    "collapse_multigraph",
    "graphdata_filename",
    "graphdata_tables",
    "node_weights",
    "parse_descriptor",
    "text_units",
    "to_networkx",
    "write_dot",
]
