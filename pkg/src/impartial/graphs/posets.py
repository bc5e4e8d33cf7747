import networkx as nx

from impartial.graphs.core import Digraph


def count_linear_extensions(d: Digraph) -> int:
    """Number of vertex orders in which every edge u->v has u before v.

    Subset DP: ways[S] counts orders of S that respect every edge inside S,
    where a vertex may be appended once all its predecessors are placed.
    """
    if not nx.is_directed_acyclic_graph(d.to_networkx()):
        raise ValueError("Linear extensions need an acyclic digraph")
    preds = [0] * d.n
    for u, v in d.edges:
        preds[v] |= 1 << u
    full = (1 << d.n) - 1
    ways = [0] * (full + 1)
    ways[0] = 1
    for placed in range(full):
        if not ways[placed]:
            continue
        for v in range(d.n):
            bit = 1 << v
            if not placed & bit and preds[v] & placed == preds[v]:
                ways[placed | bit] += ways[placed]
    return ways[full]
