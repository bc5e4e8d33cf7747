from dataclasses import dataclass

from impartial.graphs.canon import center_mirror_edge, undirected_adjacency, walk
from impartial.graphs.core import Edge, Graph, GraphError, induced, is_tree, underlying


@dataclass(frozen=True)
class Branch:
    """Component of T minus `cut_edge` that contains `root`.

    `subtree` is relabelled 0..k-1; its vertex j is `vertices[j]` in T.
    """

    vertices: tuple[int, ...]
    subtree: Graph
    root: int
    cut_edge: Edge

    @property
    def local_root(self) -> int:
        return self.vertices.index(self.root)

    def __len__(self) -> int:
        return len(self.vertices)


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError("Expected a tree")


def branch(t: Graph, u: int, v: int) -> Branch:
    if not underlying(t).has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    _require_tree(t)
    order, _ = walk(undirected_adjacency(t), v, frozenset({(min(u, v), max(u, v))}))
    subtree, old = induced(t, order)
    return Branch(tuple(old), subtree, v, (u, v))


def mirror_bridge(t: Graph) -> Edge | None:
    """The edge whose endpoint swap extends to an automorphism of the tree, if any."""
    _require_tree(t)
    return center_mirror_edge(undirected_adjacency(t), list(range(t.n)))


def half_branches(t: Graph) -> tuple[Branch, Branch]:
    bridge = mirror_bridge(t)
    if bridge is None:
        raise GraphError("Tree has no mirror-bridge")
    u, v = bridge
    return branch(t, v, u), branch(t, u, v)
