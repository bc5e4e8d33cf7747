from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx


class GraphError(ValueError):
    """Raised when a graph violates a structural precondition."""


Edge = tuple[int, int]


def _check_vertices(n: int, u: int, v: int) -> None:
    if u == v:
        raise GraphError(f"Self-loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"Edge ({u}, {v}) out of range for {n} vertices")


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            _check_vertices(self.n, u, v)
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise GraphError(f"Duplicate edge {pair[0]}-{pair[1]}")
            normalized.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def without(self, removed: Iterable[Edge]) -> "UndirectedGraph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return UndirectedGraph(self.n, tuple(e for e in self.edges if e not in drop))

    def with_edges(self, kept: Iterable[Edge]) -> "UndirectedGraph":
        return UndirectedGraph(self.n, tuple(kept))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {self.n}")
        seen = set()
        for u, v in self.edges:
            _check_vertices(self.n, u, v)
            pair = (min(u, v), max(u, v))
            if pair in seen:
                if (u, v) in self.edges and (v, u) in self.edges:
                    raise GraphError(f"Anti-parallel edges between {pair[0]} and {pair[1]}")
                raise GraphError(f"Duplicate edge {u}->{v}")
            seen.add(pair)
        object.__setattr__(self, "edges", tuple(sorted((u, v) for u, v in self.edges)))

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, self.edges)

    def out_neighbors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
        return out

    def in_neighbors(self) -> list[list[int]]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            inn[v].append(u)
        return inn

    def orientation(self, u: int, v: int) -> int:
        """+1 if u->v is an edge, -1 if v->u is, 0 otherwise."""
        edges = self.edge_set
        if (u, v) in edges:
            return 1
        if (v, u) in edges:
            return -1
        return 0

    def reversed(self) -> "Digraph":
        return Digraph(self.n, tuple((v, u) for u, v in self.edges))

    def restricted_to(self, pairs: Iterable[Edge]) -> "Digraph":
        """Keep the edges whose unordered pair is in `pairs`."""
        keep = {(min(u, v), max(u, v)) for u, v in pairs}
        return Digraph(self.n, tuple(e for e in self.edges if (min(e), max(e)) in keep))

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


Graph = UndirectedGraph | Digraph


def underlying(d: Graph) -> UndirectedGraph:
    if isinstance(d, UndirectedGraph):
        return d
    return d.underlying()


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the (weakly) connected components, ordered by minimum vertex."""
    parts = [sorted(c) for c in nx.connected_components(underlying(g).to_networkx())]
    return sorted(parts, key=lambda c: c[0])


def is_forest(g: Graph) -> bool:
    u = underlying(g)
    return len(u.edges) == u.n - len(components(u))


def is_tree(g: Graph) -> bool:
    u = underlying(g)
    return u.n >= 1 and len(u.edges) == u.n - 1 and is_forest(u)


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on `vertices`, relabelled 0..k-1 in sorted order.

    Returns the subgraph and the list mapping new labels to old ones.
    """
    old = sorted(vertices)
    index = {v: i for i, v in enumerate(old)}
    edges = tuple(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return type(g)(len(old), edges), old


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if type(a) is not type(b):
        raise GraphError("Cannot take the union of a graph and a digraph")
    shifted = tuple((u + a.n, v + a.n) for u, v in b.edges)
    return type(a)(a.n + b.n, a.edges + shifted)


def relabel(g: Graph, mapping: dict[int, int] | list[int]) -> Graph:
    """Apply a vertex permutation given as old -> new."""
    return type(g)(g.n, tuple((mapping[u], mapping[v]) for u, v in g.edges))
