"""Closed-form copy counts in transitive and uniformly random tournaments.

Both are exact; a non-integer expected count rules out impartiality.
"""
from fractions import Fraction
from math import factorial, prod

import networkx as nx

from impartial.graphs.core import Digraph, components, induced
from impartial.graphs.posets import count_linear_extensions


def multinomial(n: int, parts: list[int]) -> int:
    """n! / (p_1! ... p_k! (n - sum p)!)."""
    rest = n - sum(parts)
    if rest < 0 or any(p < 0 for p in parts):
        raise ValueError(f"Parts {parts} do not fit in {n}")
    return factorial(n) // (prod(factorial(p) for p in parts) * factorial(rest))


def _check_order(h: Digraph, n: int) -> None:
    if n < h.n:
        raise ValueError(f"Tournament order {n} is smaller than the digraph ({h.n} vertices)")


def transitive_count(h: Digraph, n: int) -> int:
    """Labeled copies of h in the transitive tournament on n vertices (0 if h has a cycle)."""
    _check_order(h, n)
    if not nx.is_directed_acyclic_graph(h.to_networkx()):
        return 0
    sizes, extensions = [], []
    for comp in components(h):
        sub, _ = induced(h, comp)
        sizes.append(len(comp))
        extensions.append(count_linear_extensions(sub))
    return multinomial(n, sizes) * prod(extensions)


def random_expected_count(h: Digraph, n: int) -> Fraction:
    """Expected labeled copies of h in a uniform random tournament on n vertices."""
    _check_order(h, n)
    sizes = [len(comp) for comp in components(h)]
    return Fraction(multinomial(n, sizes) * prod(factorial(s) for s in sizes), 2 ** len(h.edges))
