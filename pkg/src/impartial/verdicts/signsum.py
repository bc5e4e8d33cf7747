from itertools import combinations

from impartial.graphs.canon import forest_isomorphism, forest_iso_key
from impartial.graphs.core import Digraph, GraphError, UndirectedGraph, is_forest
from impartial.graphs.signs import is_odd, sgn_map
from impartial.verdicts.records import SignSumWitness, Verdict


def spanning_classes(h: Digraph) -> list[list[Digraph]]:
    """Spanning subgraphs of h with at least one edge, grouped by isomorphism class.

    Each group is Sub_F(h) for its class, in sorted-edge-subset order.
    """
    groups: dict = {}
    for size in range(1, len(h.edges) + 1):
        for subset in combinations(h.edges, size):
            key = forest_iso_key(UndirectedGraph(h.n, subset))
            groups.setdefault(key, []).append(Digraph(h.n, subset))
    return list(groups.values())


def sign_sum(members: list[Digraph]) -> int:
    """Sum of sgn(F, F') over the members, with F the first one."""
    f = members[0]
    total = 0
    for other in members:
        sigma = forest_isomorphism(f.underlying(), other.underlying())
        total += sgn_map(sigma, f, other)
    return total


def sign_sum_check(h: Digraph) -> Verdict:
    """Impartial iff every even spanning class has a vanishing sign sum."""
    if not is_forest(h):
        raise GraphError("The sign-sum certificate needs a forest")
    for members in spanning_classes(h):
        if is_odd(members[0]):
            continue
        total = sign_sum(members)
        if total != 0:
            return Verdict(False, "sign-sum", SignSumWitness(members[0], total, len(members)))
    return Verdict(True, "sign-sum")
