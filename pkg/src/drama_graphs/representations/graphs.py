# ABOUTME: networkx views of clique and star expansions, and DOT export for drawing them.
# ABOUTME: Edge attributes carry line and token weights; star nodes carry a bipartite flag.

from pathlib import Path

import networkx as nx
import structlog

from drama_graphs.representations.bundle import PlayRepresentations
from drama_graphs.representations.clique import collapse_multigraph
from drama_graphs.representations.descriptors import DescriptorError, Model, ReprDescriptor
from drama_graphs.representations.star import NodeType, TypedNode

log = structlog.get_logger()


def _add_typed_nodes(graph: nx.Graph, nodes: tuple[TypedNode, ...]) -> None:
    for node in nodes:
        graph.add_node(
            node.node,
            node_type=node.node_type.value,
            bipartite=0 if node.node_type == NodeType.CHARACTER else 1,
        )


def _clique_graph(reprs: PlayRepresentations, descriptor: ReprDescriptor) -> nx.Graph:
    ce = reprs.clique(descriptor.aggregation)
    if descriptor.is_multi:
        graph: nx.Graph = nx.MultiGraph()
        graph.add_nodes_from(ce.nodes)
        for edge in ce.edges:
            graph.add_edge(
                edge.node1,
                edge.node2,
                key=edge.key,
                n_lines=edge.n_lines,
                n_tokens=edge.n_tokens,
                edge_index=edge.edge_index,
            )
        return graph

    graph = nx.Graph()
    graph.add_nodes_from(ce.nodes)
    for edge in collapse_multigraph(ce.edges):
        graph.add_edge(
            edge.node1, edge.node2, count=edge.count, n_lines=edge.n_lines, n_tokens=edge.n_tokens
        )
    return graph


def _star_graph(reprs: PlayRepresentations, descriptor: ReprDescriptor) -> nx.Graph:
    if not descriptor.is_directed:
        se = reprs.star(descriptor.aggregation)
        graph = nx.Graph()
        _add_typed_nodes(graph, se.nodes)
        for edge in se.edges:
            graph.add_edge(edge.node1, edge.node2, n_lines=edge.n_lines, n_tokens=edge.n_tokens)
        return graph

    speech = reprs.se_speech
    if descriptor.is_multi:
        multi = nx.MultiDiGraph()
        _add_typed_nodes(multi, speech.nodes)
        for edge in speech.multi_edges:
            multi.add_edge(
                edge.source,
                edge.target,
                key=edge.key,
                n_lines=edge.n_lines,
                n_tokens=edge.n_tokens,
                edge_index=edge.edge_index,
                edge_type=edge.edge_type.value,
            )
        return multi

    directed = nx.DiGraph()
    _add_typed_nodes(directed, speech.nodes)
    for edge in speech.edges:
        directed.add_edge(
            edge.source,
            edge.target,
            n_lines=edge.n_lines,
            n_tokens=edge.n_tokens,
            edge_type=edge.edge_type.value,
        )
    return directed


def to_networkx(reprs: PlayRepresentations, descriptor: ReprDescriptor) -> nx.Graph:
    """Graph object for a clique or star expansion descriptor.

    Raises:
        DescriptorError: For hypergraph descriptors, which have no graph view.
    """
    if descriptor.model == Model.CE:
        return _clique_graph(reprs, descriptor)
    if descriptor.model == Model.SE:
        return _star_graph(reprs, descriptor)
    raise DescriptorError(f"no graph view for hypergraph representation {descriptor}")


def write_dot(graph: nx.Graph, path: Path) -> Path:
    """Write a graph in DOT format for rendering with graphviz."""
    path.parent.mkdir(parents=True, exist_ok=True)
    nx.nx_pydot.write_dot(graph, path)
    log.debug(
        "dot_written",
        path=str(path),
        nodes=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
    )
    return path
