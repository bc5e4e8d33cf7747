"""Recursively bridge-mirrored trees: recognition, generation, and the odd automorphism.

A tree on one vertex is recursively bridge-mirrored (RBM). Taking two copies
of an RBM digraph, rooting both at the same vertex and joining the roots with
a directed edge gives another one.
"""
from impartial.graphs.canon import (
    Flavor,
    center_mirror_edge,
    marked_adjacency,
    rooted_digraph_iso,
    rooted_isomorphism,
    subtree_codes,
    tree_code,
    undirected_adjacency,
)
from impartial.graphs.core import Digraph, Graph, GraphError, UndirectedGraph, is_tree, underlying
from impartial.structure.branches import branch
from impartial.structure.cutting import recursive_cutting

MAX_GENERATION = 4


def _power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_rbm(d: Digraph) -> bool:
    if d.n == 1:
        return True
    if not _power_of_two(d.n) or not is_tree(d):
        return False
    bridge = center_mirror_edge(undirected_adjacency(d), list(range(d.n)))
    if bridge is None:
        return False
    u, v = bridge
    left, right = branch(d, v, u), branch(d, u, v)
    if not rooted_digraph_iso(left.subtree, left.local_root, right.subtree, right.local_root):
        return False
    return is_rbm(left.subtree)


def is_rbm_undirected(t: Graph) -> bool:
    if not is_tree(t):
        return False
    return not recursive_cutting(underlying(t)).final.edges


def odd_automorphism(t: Graph) -> list[int]:
    """The involution swapping the two half-branches; vertex i maps to result[i]."""
    if t.n < 2 or not is_rbm_undirected(t):
        raise GraphError("Odd automorphism needs a recursively bridge-mirrored tree with an edge")
    adj = undirected_adjacency(t)
    u, v = center_mirror_edge(adj, list(range(t.n)))
    cut = [(u, v)]
    half = rooted_isomorphism(adj, u, adj, v, cut, cut)
    tau = list(range(t.n))
    for x, y in half.items():
        tau[x] = y
        tau[y] = x
    return tau


def _double(g: Graph, root: int) -> Graph:
    shifted = tuple((a + g.n, b + g.n) for a, b in g.edges)
    return type(g)(2 * g.n, g.edges + shifted + ((root, root + g.n),))


def _generate(k: int, seed: Graph, flavor: Flavor) -> list[Graph]:
    if not 0 <= k <= MAX_GENERATION:
        raise ValueError(f"Generation k must be between 0 and {MAX_GENERATION}, got {k}")
    generation = [seed]
    for _ in range(k):
        seen: dict = {}
        for g in generation:
            adj = marked_adjacency(g, flavor)
            # roots with equal rooted codes lie in one automorphism orbit
            tried = set()
            for root in range(g.n):
                rooted = subtree_codes(adj, root)[root]
                if rooted in tried:
                    continue
                tried.add(rooted)
                doubled = _double(g, root)
                seen.setdefault(tree_code(doubled, flavor), doubled)
        generation = list(seen.values())
    return generation


def generate_rbm(k: int) -> list[Digraph]:
    """All RBM digraphs on 2**k vertices, one per direction-preserving isomorphism class."""
    return _generate(k, Digraph(1), "directed")


def generate_rbm_undirected(k: int) -> list[UndirectedGraph]:
    return _generate(k, UndirectedGraph(1), "undirected")
