from itertools import combinations

from impartial.graphs.canon import forest_iso_key
from impartial.graphs.core import Graph, GraphError, UndirectedGraph, is_forest


def _sorted_degrees(n: int, edges) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sorted(deg)


def enumerate_sub_F(h: Graph, f: UndirectedGraph) -> list[Graph]:
    """Spanning subgraphs of h whose underlying graph is isomorphic to f.

    Members keep h's orientations and come in the order of their sorted edge
    subsets.
    """
    if f.n != h.n:
        raise GraphError(f"Vertex counts differ: {h.n} vs {f.n}")
    if not is_forest(h) or not is_forest(f):
        raise GraphError("Sub_F enumeration needs forests")
    target = forest_iso_key(f)
    target_degrees = _sorted_degrees(f.n, f.edges)
    found = []
    for subset in combinations(h.edges, len(f.edges)):
        if _sorted_degrees(h.n, subset) != target_degrees:
            continue
        candidate = UndirectedGraph(h.n, subset)
        if forest_iso_key(candidate) == target:
            found.append(type(h)(h.n, subset))
    return found


def count_sub_F(h: Graph, f: UndirectedGraph) -> int:
    return len(enumerate_sub_F(h, f))
