"""Canonical forms for rooted and unrooted (di)trees and forests.

Codes are the bottom-up sorted-children encoding: a vertex is "(" followed by
the sorted codes of its children and ")". The direction-aware flavor prefixes
each child code with ">" when the edge points away from the parent and "<"
when it points toward it.
"""
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

from impartial.graphs.core import Digraph, Graph, GraphError, components, is_forest, is_tree, underlying

Flavor = Literal["undirected", "directed"]

LEAF = "()"

# vertex -> [(neighbor, marker)], marker seen from the vertex toward the neighbor
Adjacency = list[list[tuple[int, str]]]


@dataclass(frozen=True, order=True)
class RootedTreeCode:
    code: str
    flavor: Flavor = "undirected"


@dataclass(frozen=True)
class ForestIsoKey:
    parts: tuple[tuple[str, int], ...]
    flavor: Flavor = "undirected"


def marked_adjacency(g: Graph, flavor: Flavor = "undirected") -> Adjacency:
    if flavor == "directed" and not isinstance(g, Digraph):
        raise GraphError("Direction-aware codes need a digraph")
    directed = flavor == "directed"
    adj: Adjacency = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append((v, ">" if directed else ""))
        adj[v].append((u, "<" if directed else ""))
    return adj


def _blocked(u: int, v: int, cut: frozenset[tuple[int, int]]) -> bool:
    return (min(u, v), max(u, v)) in cut


def walk(adj: Adjacency, root: int, cut: frozenset[tuple[int, int]] = frozenset()) -> tuple[list[int], dict[int, int]]:
    """Preorder of the tree containing `root` (ignoring `cut` edges) and the parent map."""
    order = []
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w, _ in adj[v]:
            if w != parent[v] and w not in parent and not _blocked(v, w, cut):
                parent[w] = v
                stack.append(w)
    return order, parent


def subtree_codes(adj: Adjacency, root: int, cut: frozenset[tuple[int, int]] = frozenset()) -> dict[int, str]:
    """Rooted code of every vertex's subtree, with the tree hung from `root`."""
    order, parent = walk(adj, root, cut)
    codes: dict[int, str] = {}
    for v in reversed(order):
        children = sorted(
            marker + codes[w] for w, marker in adj[v] if parent.get(w) == v and w != parent[v]
        )
        codes[v] = "(" + "".join(children) + ")"
    return codes


def rooted_code(t: Graph, root: int, flavor: Flavor = "undirected") -> RootedTreeCode:
    if not is_tree(t):
        raise GraphError("rooted_code needs a tree")
    if not 0 <= root < t.n:
        raise GraphError(f"Root {root} is not a vertex")
    return RootedTreeCode(subtree_codes(marked_adjacency(t, flavor), root)[root], flavor)


def centroids(adj: Adjacency, vertices: list[int]) -> list[int]:
    order, parent = walk(adj, vertices[0])
    size = dict.fromkeys(order, 1)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    total = len(order)
    found = []
    for v in order:
        heaviest = total - size[v]
        for w, _ in adj[v]:
            if parent.get(w) == v:
                heaviest = max(heaviest, size[w])
        if 2 * heaviest <= total:
            found.append(v)
    return sorted(found)


def component_code(adj: Adjacency, vertices: list[int]) -> tuple[str, int]:
    """Unrooted code of the component: the smaller centroid-rooted code, and that root."""
    return min((subtree_codes(adj, c)[c], c) for c in centroids(adj, vertices))


def tree_code(t: Graph, flavor: Flavor = "undirected") -> RootedTreeCode:
    if not is_tree(t):
        raise GraphError("tree_code needs a tree")
    code, _ = component_code(marked_adjacency(t, flavor), list(range(t.n)))
    return RootedTreeCode(code, flavor)


def forest_iso_key(g: Graph, flavor: Flavor = "undirected") -> ForestIsoKey:
    if not is_forest(g):
        raise GraphError("forest_iso_key needs a forest")
    adj = marked_adjacency(g, flavor)
    parts = sorted((component_code(adj, comp)[0], len(comp)) for comp in components(g))
    return ForestIsoKey(tuple(parts), flavor)


def rooted_digraph_iso(a: Digraph, ra: int, b: Digraph, rb: int) -> bool:
    if a.n != b.n:
        if not (is_tree(a) and is_tree(b)):
            raise GraphError("rooted_digraph_iso needs trees")
        return False
    return rooted_code(a, ra, "directed") == rooted_code(b, rb, "directed")


def _match_rooted(adj1: Adjacency, r1: int, adj2: Adjacency, r2: int, mapping: dict[int, int],
                  cut1: frozenset = frozenset(), cut2: frozenset = frozenset()) -> None:
    codes1 = subtree_codes(adj1, r1, cut1)
    codes2 = subtree_codes(adj2, r2, cut2)
    _, parent1 = walk(adj1, r1, cut1)
    _, parent2 = walk(adj2, r2, cut2)
    stack = [(r1, r2)]
    while stack:
        v1, v2 = stack.pop()
        mapping[v1] = v2
        kids1 = sorted((m + codes1[w], w) for w, m in adj1[v1] if parent1.get(w) == v1 and w != parent1[v1])
        kids2 = sorted((m + codes2[w], w) for w, m in adj2[v2] if parent2.get(w) == v2 and w != parent2[v2])
        stack.extend((w1, w2) for (_, w1), (_, w2) in zip(kids1, kids2))


def rooted_isomorphism(adj1: Adjacency, r1: int, adj2: Adjacency, r2: int,
                       cut1: Iterable = (), cut2: Iterable = ()) -> dict[int, int]:
    """Vertex map between two rooted subtrees known to have equal codes."""
    mapping: dict[int, int] = {}
    _match_rooted(adj1, r1, adj2, r2, mapping, frozenset(cut1), frozenset(cut2))
    return mapping


def forest_isomorphism(g1: Graph, g2: Graph, flavor: Flavor = "undirected") -> list[int] | None:
    """An explicit isomorphism g1 -> g2 as a list (vertex i maps to result[i]), or None."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    if forest_iso_key(g1, flavor) != forest_iso_key(g2, flavor):
        return None
    adj1, adj2 = marked_adjacency(g1, flavor), marked_adjacency(g2, flavor)
    rooted1 = sorted(component_code(adj1, comp) for comp in components(g1))
    rooted2 = sorted(component_code(adj2, comp) for comp in components(g2))
    mapping: dict[int, int] = {}
    for (_, r1), (_, r2) in zip(rooted1, rooted2):
        _match_rooted(adj1, r1, adj2, r2, mapping)
    return [mapping[v] for v in range(g1.n)]


def leaf_strip_center(adj: Adjacency, vertices: list[int]) -> list[int]:
    """Repeatedly delete every leaf; return the one or two vertices left."""
    degree = {v: len(adj[v]) for v in vertices}
    remaining = len(vertices)
    layer = [v for v in vertices if degree[v] <= 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w, _ in adj[v]:
                if degree[w] > 0:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def center_mirror_edge(adj: Adjacency, vertices: list[int]) -> tuple[int, int] | None:
    """The mirror edge of the tree on `vertices`, if its central edge is one."""
    center = leaf_strip_center(adj, vertices)
    if len(center) != 2:
        return None
    u, v = center
    cut = frozenset({(u, v)})
    if subtree_codes(adj, u, cut)[u] != subtree_codes(adj, v, cut)[v]:
        return None
    return (u, v)


def undirected_adjacency(g: Graph) -> Adjacency:
    return marked_adjacency(underlying(g), "undirected")
