from collections.abc import Mapping, Sequence

from impartial.graphs.canon import center_mirror_edge, undirected_adjacency
from impartial.graphs.core import Digraph, Graph, GraphError, components, is_forest

VertexMap = Sequence[int] | Mapping[int, int]


def sgn_map(sigma: VertexMap, f: Digraph, h: Digraph) -> int:
    """(-1) to the number of edges of f whose orientation sigma reverses in h."""
    h_edges = h.edge_set
    reversed_count = 0
    for u, v in f.edges:
        su, sv = sigma[u], sigma[v]
        if (su, sv) in h_edges:
            continue
        if (sv, su) in h_edges:
            reversed_count += 1
            continue
        raise ValueError(f"Map is not a homomorphism: edge {u}->{v} lands on non-edge {su}-{sv}")
    return -1 if reversed_count % 2 else 1


def is_odd(g: Graph) -> bool:
    """True iff some component of the forest has a mirror-bridge."""
    if not is_forest(g):
        raise GraphError("Oddness is only decided for forests")
    adj = undirected_adjacency(g)
    return any(center_mirror_edge(adj, comp) is not None for comp in components(g))
