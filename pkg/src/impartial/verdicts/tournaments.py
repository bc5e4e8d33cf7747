from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, perm

import numpy as np

from impartial.graphs.core import Digraph


def pair_index(n: int) -> list[tuple[int, int]]:
    """Unordered pairs i<j in lexicographic order; bit k of `orient` belongs to pair k."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Tournament:
    """Orientation of the complete graph; bit k set means pair k = (i, j) points i -> j."""

    n: int
    orient: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Tournament order must be non-negative, got {self.n}")
        if not 0 <= self.orient < 1 << comb(self.n, 2):
            raise ValueError(f"Orientation {self.orient} out of range for {self.n} vertices")

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        return cls(n, (1 << comb(n, 2)) - 1)

    @classmethod
    def from_bits(cls, n: int, bits) -> "Tournament":
        return cls(n, sum(int(b) << k for k, b in enumerate(bits)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "Tournament":
        return cls.from_bits(n, rng.integers(0, 2, size=comb(n, 2)))

    def out_masks(self) -> list[int]:
        out = [0] * self.n
        for k, (i, j) in enumerate(pair_index(self.n)):
            if self.orient >> k & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        return out

    def to_digraph(self) -> Digraph:
        edges = []
        for k, (i, j) in enumerate(pair_index(self.n)):
            edges.append((i, j) if self.orient >> k & 1 else (j, i))
        return Digraph(self.n, tuple(edges))


@dataclass(frozen=True)
class _Plan:
    """Placement order of a pattern and, per step, the earlier steps it must beat or lose to."""

    order: tuple[int, ...]
    isolated: int
    beats: tuple[tuple[int, ...], ...]
    beaten_by: tuple[tuple[int, ...], ...]
    need_out: tuple[int, ...]
    need_in: tuple[int, ...]


def _placement_order(h: Digraph) -> tuple[list[int], list[int]]:
    """Non-isolated vertices in BFS order per component, then the isolated ones."""
    adj = h.underlying().adjacency()
    order, isolated, seen = [], [], set()
    for start in range(h.n):
        if start in seen:
            continue
        seen.add(start)
        if not adj[start]:
            isolated.append(start)
            continue
        queue = [start]
        for v in queue:
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order, isolated


@lru_cache(maxsize=64)
def _plan(h: Digraph) -> _Plan:
    order, isolated = _placement_order(h)
    position = {v: i for i, v in enumerate(order)}
    h_out, h_in = h.out_neighbors(), h.in_neighbors()
    return _Plan(
        order=tuple(order),
        isolated=len(isolated),
        beats=tuple(tuple(position[w] for w in h_out[v] if position[w] < i) for i, v in enumerate(order)),
        beaten_by=tuple(tuple(position[w] for w in h_in[v] if position[w] < i) for i, v in enumerate(order)),
        need_out=tuple(len(h_out[v]) for v in order),
        need_in=tuple(len(h_in[v]) for v in order),
    )


def _check_orders(h: Digraph, n: int) -> None:
    if h.n > n:
        raise ValueError(f"Digraph has {h.n} vertices, tournament only {n}")


def count_embeddings(h: Digraph, k: Tournament) -> int:
    """Injective maps V(h) -> V(k) sending every edge u->v of h onto an edge of k.

    Backtracks over the non-isolated vertices; each placed neighbour narrows the
    candidate mask, and a candidate must have enough in/out-degree in k.
    """
    _check_orders(h, k.n)
    plan = _plan(h)
    steps = len(plan.order)
    if not steps:
        return perm(k.n, plan.isolated)

    out = k.out_masks()
    inn = [0] * k.n
    for x in range(k.n):
        m = out[x]
        while m:
            low = m & -m
            inn[low.bit_length() - 1] |= 1 << x
            m ^= low
    out_deg = [m.bit_count() for m in out]
    in_deg = [m.bit_count() for m in inn]
    eligible = [
        sum(1 << x for x in range(k.n) if out_deg[x] >= need_out and in_deg[x] >= need_in)
        for need_out, need_in in zip(plan.need_out, plan.need_in)
    ]

    image = [0] * steps
    total = 0

    def extend(step: int, used: int) -> None:
        nonlocal total
        if step == steps:
            total += 1
            return
        cand = eligible[step] & ~used
        for p in plan.beats[step]:
            cand &= inn[image[p]]
        for p in plan.beaten_by[step]:
            cand &= out[image[p]]
        while cand:
            low = cand & -cand
            image[step] = low.bit_length() - 1
            extend(step + 1, used | low)
            cand ^= low

    extend(0, 0)
    return total * perm(k.n - steps, plan.isolated)


def _pack(column: np.ndarray) -> np.ndarray:
    """Bool lanes (a multiple of 64) as little-endian 64-bit words."""
    return np.packbits(column, bitorder="little").view("<u8")


def _lane_literals(n: int, orients: np.ndarray) -> dict[tuple[int, int], np.ndarray | bool]:
    """literal[x, y]: lanes whose tournament has x -> y; True/False when all lanes agree."""
    literal: dict[tuple[int, int], np.ndarray | bool] = {}
    for k, (i, j) in enumerate(pair_index(n)):
        column = ((orients >> k) & 1).astype(bool)
        if column.all():
            literal[i, j], literal[j, i] = True, False
        elif not column.any():
            literal[i, j], literal[j, i] = False, True
        else:
            word = _pack(column)
            literal[i, j], literal[j, i] = word, ~word
    return literal


def _add_lanes(planes: list[np.ndarray], word: np.ndarray) -> None:
    # bit-sliced increment: planes[j] holds bit j of every lane's count
    carry = word
    for j, plane in enumerate(planes):
        planes[j] = plane ^ carry
        carry = plane & carry
        if not carry.any():
            return


def count_embeddings_many(h: Digraph, n: int, orients) -> np.ndarray:
    """count_embeddings for many orientations of K_n at once, one count per orientation.

    Every orientation is a bit lane, so a partial map is checked against all of
    them with one AND per edge and per-lane counts live in bit-sliced counters.
    Pairs on which all lanes agree prune whole branches.
    """
    _check_orders(h, n)
    plan = _plan(h)
    steps = len(plan.order)
    lanes = len(orients)
    if not lanes:
        return np.zeros(0, dtype=np.int64)
    if not steps:
        return np.full(lanes, perm(n, plan.isolated), dtype=np.int64)

    dtype = np.int64 if comb(n, 2) < 63 else object
    values = np.asarray(orients, dtype=dtype)
    values = np.concatenate([values, np.full(-lanes % 64, values[0], dtype=dtype)])
    literal = _lane_literals(n, values)
    planes = [np.zeros(len(values) // 64, dtype="<u8") for _ in range(perm(n, steps).bit_length())]
    all_lanes = ~planes[0]
    image = [0] * steps

    def extend(step: int, used: int, acc: np.ndarray | None) -> None:
        last = step == steps - 1
        for x in range(n):
            if used >> x & 1:
                continue
            cur = acc
            alive = True
            needed = [literal[x, image[p]] for p in plan.beats[step]]
            needed += [literal[image[p], x] for p in plan.beaten_by[step]]
            for lit in needed:
                if lit is True:
                    continue
                if lit is False:
                    alive = False
                    break
                cur = lit if cur is None else cur & lit
            if not alive:
                continue
            if last:
                _add_lanes(planes, all_lanes if cur is None else cur)
                continue
            if cur is not acc and not cur.any():
                continue
            image[step] = x
            extend(step + 1, used | 1 << x, cur)

    extend(0, 0, None)
    counts = np.zeros(len(values), dtype=np.int64)
    for j, plane in enumerate(planes):
        counts += np.unpackbits(plane.view(np.uint8), bitorder="little").astype(np.int64) << j
    return counts[:lanes] * perm(n - steps, plan.isolated)
