"""Brute-force reference implementations for small inputs."""
from itertools import combinations, permutations, product

import networkx as nx

from impartial.graphs.core import Digraph, UndirectedGraph, is_forest


def _edge_key(g, directed):
    if directed:
        return set(g.edges)
    return {frozenset(e) for e in g.edges}


def _image(edges, perm, directed):
    if directed:
        return {(perm[u], perm[v]) for u, v in edges}
    return {frozenset((perm[u], perm[v])) for u, v in edges}


def isomorphic(g1, g2, directed=False) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    target = _edge_key(g2, directed)
    return any(_image(g1.edges, p, directed) == target for p in permutations(range(g1.n)))


def rooted_isomorphic(t1, r1, t2, r2, directed=False) -> bool:
    if t1.n != t2.n:
        return False
    target = _edge_key(t2, directed)
    return any(
        p[r1] == r2 and _image(t1.edges, p, directed) == target
        for p in permutations(range(t1.n))
    )


def automorphisms(g) -> list[tuple[int, ...]]:
    edges = {frozenset(e) for e in g.edges}
    return [p for p in permutations(range(g.n)) if _image(g.edges, p, False) == edges]


def has_odd_automorphism(g) -> bool:
    d = Digraph(g.n, g.edges)
    for p in automorphisms(g):
        reversed_edges = sum((p[v], p[u]) in d.edge_set for u, v in d.edges)
        if reversed_edges % 2:
            return True
    return False


def linear_extensions(d: Digraph) -> int:
    count = 0
    for order in permutations(range(d.n)):
        pos = {v: i for i, v in enumerate(order)}
        if all(pos[u] < pos[v] for u, v in d.edges):
            count += 1
    return count


def embeddings(h: Digraph, k: Digraph) -> int:
    """Injective direction-preserving maps h -> k (k given as a digraph)."""
    target = k.edge_set
    return sum(
        all((img[u], img[v]) in target for u, v in h.edges)
        for img in permutations(range(k.n), h.n)
    )


def orientations(g: UndirectedGraph):
    for flips in product((False, True), repeat=len(g.edges)):
        yield Digraph(g.n, tuple((v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips)))


def labeled_forests(n: int):
    pairs = list(combinations(range(n), 2))
    for size in range(n):
        for subset in combinations(pairs, size):
            g = UndirectedGraph(n, subset)
            if is_forest(g):
                yield g


def nonisomorphic_trees(n: int) -> list[UndirectedGraph]:
    if n == 1:
        return [UndirectedGraph(1)]
    return [
        UndirectedGraph(n, tuple(tuple(sorted(e)) for e in t.edges()))
        for t in nx.nonisomorphic_trees(n)
    ]


def dags(n: int):
    """Every DAG on n vertices whose edges point from lower to higher labels."""
    pairs = list(combinations(range(n), 2))
    for bits in product((False, True), repeat=len(pairs)):
        yield Digraph(n, tuple(p for p, b in zip(pairs, bits) if b))
