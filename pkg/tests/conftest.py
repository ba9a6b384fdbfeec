import networkx as nx
import pytest

from pmdkit.graphs import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def atlas(max_nodes: int, connected: bool = True) -> list[Graph]:
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_nodes or (connected and not nx.is_connected(h)):
            continue
        out.append(Graph(h.number_of_nodes(), tuple(h.edges())))
    return out


@pytest.fixture(scope="session")
def small_connected():
    return atlas(6)
