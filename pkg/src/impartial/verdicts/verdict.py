from math import comb

from impartial.graphs.core import Digraph, components, induced, is_forest
from impartial.structure.rbm import is_rbm
from impartial.verdicts.census import DEFAULT_SAMPLES, DEFAULT_SEED, CensusReport, census
from impartial.verdicts.records import ComponentWitness, CensusWitness, Verdict
from impartial.verdicts.signsum import sign_sum_check

# the census route enumerates exhaustively up to 6 vertices and samples above
ROUTE_EXACT_PAIR_LIMIT = 15


def _structural_rejection(h: Digraph) -> ComponentWitness | None:
    # cheapest check first across every component
    parts = [(comp, induced(h, comp)[0]) for comp in components(h)]
    for comp, sub in parts:
        if not is_forest(sub):
            return ComponentWitness(tuple(comp), "contains a cycle")
    for comp, _ in parts:
        size = len(comp)
        if size & (size - 1):
            return ComponentWitness(tuple(comp), f"order {size} is not a power of 2")
    for comp, sub in parts:
        if not is_rbm(sub):
            return ComponentWitness(tuple(comp), "not recursively bridge-mirrored")
    return None


def is_impartial(h: Digraph) -> Verdict:
    """Impartial iff every component is a recursively bridge-mirrored tree."""
    witness = _structural_rejection(h)
    return Verdict(witness is None, "structural", witness)


def census_verdict(report: CensusReport) -> Verdict:
    if report.is_constant:
        return Verdict(True, "census")
    low, high = min(report.distribution), max(report.distribution)
    witness = CensusWitness(report.example(low), low, report.example(high), high)
    return Verdict(False, "census", witness)


def census_route(h: Digraph, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, workers: int = 1) -> CensusReport:
    """Census at n = |V(h)|: exhaustive when feasible, sampled otherwise."""
    exact = comb(h.n, 2) <= ROUTE_EXACT_PAIR_LIMIT
    return census(h, h.n, samples=None if exact else samples, seed=seed, workers=workers)


def decide(h: Digraph, route: str = "structural", **census_options) -> Verdict:
    if route == "structural":
        return is_impartial(h)
    if route == "sign-sum":
        if not is_forest(h):
            return Verdict(False, "sign-sum", _structural_rejection(h))
        return sign_sum_check(h)
    if route == "census":
        return census_verdict(census_route(h, **census_options))
    raise ValueError(f"Unknown route: {route}")
