from collections import Counter
from dataclasses import dataclass

from impartial.graphs.canon import center_mirror_edge, undirected_adjacency
from impartial.graphs.core import Edge, Graph, GraphError, components, is_forest, underlying
from impartial.graphs.signs import is_odd
from impartial.graphs.subgraphs import enumerate_sub_F
from impartial.graphs.textio import format_graph


@dataclass(frozen=True)
class CutTrace:
    """Stages F_0, F_1, ... of recursive cutting.

    removed[i] holds the mirror-bridges deleted from stages[i]; the last entry is empty.
    """

    stages: tuple[Graph, ...]
    removed: tuple[tuple[Edge, ...], ...]

    @property
    def final(self) -> Graph:
        return self.stages[-1]

    def __len__(self) -> int:
        return len(self.stages)


@dataclass(frozen=True)
class MinMultiset:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(self.values)))

    def counts(self) -> Counter:
        return Counter(self.values)


def _mirror_bridges(g: Graph) -> list[Edge]:
    adj = undirected_adjacency(g)
    found = []
    for comp in components(g):
        edge = center_mirror_edge(adj, comp)
        if edge is not None:
            found.append(edge)
    return sorted(found)


def recursive_cutting(f: Graph) -> CutTrace:
    """Delete the mirror-bridge of every odd component until the forest is even.

    Digraph input keeps its orientations at every stage.
    """
    if not is_forest(f):
        raise GraphError("Recursive cutting needs a forest")
    stages = [f]
    removed = []
    while True:
        current = stages[-1]
        bridges = set(_mirror_bridges(current))
        if not bridges:
            removed.append(())
            break
        cut = tuple(e for e in current.edges if (min(e), max(e)) in bridges)
        removed.append(cut)
        stages.append(type(current)(current.n, tuple(e for e in current.edges if e not in cut)))
    return CutTrace(tuple(stages), tuple(removed))


def _edge_index(t: Graph, e: Edge) -> Edge:
    pair = (min(e), max(e))
    for edge in t.edges:
        if (min(edge), max(edge)) == pair:
            return edge
    raise GraphError(f"{e[0]}-{e[1]} is not an edge")


def cut_minus_edge(t: Graph, f: Edge) -> Graph:
    """T_f: delete f (keeping its endpoints), then cut recursively."""
    edge = _edge_index(t, f)
    return recursive_cutting(type(t)(t.n, tuple(e for e in t.edges if e != edge))).final


def s_set(t: Graph, f_sub: Graph) -> list[Edge]:
    """Edges of t lying in an odd number of subgraphs isomorphic to f_sub."""
    if f_sub.n != t.n:
        raise GraphError(f"Vertex counts differ: {t.n} vs {f_sub.n}")
    if not f_sub.edges:
        raise GraphError("S_F needs a subgraph with at least one edge")
    if is_odd(f_sub):
        raise GraphError("S_F needs an even subgraph")
    hits = Counter()
    for member in enumerate_sub_F(t, underlying(f_sub)):
        hits.update((min(e), max(e)) for e in member.edges)
    return sorted(_edge_index(t, e) for e, count in hits.items() if count % 2)


def min_multiset(g: Graph, f_sub: Graph) -> MinMultiset:
    """One entry per edge e of f_sub: the order of the smallest component of g minus e."""
    if not is_forest(g):
        raise GraphError("min_multiset needs a forest")
    values = []
    for e in f_sub.edges:
        edge = _edge_index(g, e)
        rest = type(g)(g.n, tuple(x for x in g.edges if x != edge))
        values.append(min(len(c) for c in components(rest)))
    return MinMultiset(tuple(values))


def format_trace(trace: CutTrace) -> str:
    blocks = []
    for stage, removed in zip(trace.stages, trace.removed):
        footer = "removed:"
        if removed:
            footer += " " + ", ".join(f"{u} {v}" for u, v in removed)
        blocks.append(format_graph(stage) + footer + "\n")
    return "---\n".join(blocks)
