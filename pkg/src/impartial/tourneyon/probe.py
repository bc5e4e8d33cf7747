"""Multi-start projected gradient search for extreme densities over step tourneyons."""
import json
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from impartial.graphs.canon import undirected_adjacency, walk
from impartial.graphs.core import Digraph, components, is_forest
from impartial.tourneyon.step import StepTourneyon

DEFAULT_BLOCKS = 3
DEFAULT_RESTARTS = 32
DEFAULT_ITERS = 2000
DEFAULT_STEP = 0.05
STEP_DECAY = 0.999
DEFAULT_SEED = 0
MAX_MAPS = 1 << 22  # block maps enumerated for digraphs with cycles


@dataclass(frozen=True)
class ProbeReport:
    direction: str
    best_value: float
    best_point: StepTourneyon
    blocks: int
    restarts: int
    iterations: int
    step: float
    seed: int
    gradient_norm_at_best: float
    best_restart: int = 0
    restart_values: tuple[float, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "best_value": self.best_value,
            "best_point": self.best_point.to_dict(),
            "blocks": self.blocks,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "step": self.step,
            "seed": self.seed,
            "gradient_norm_at_best": self.gradient_norm_at_best,
            "best_restart": self.best_restart,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def all_maps(vertices: int, blocks: int) -> np.ndarray:
    """Every map V -> [blocks] as rows of an (blocks**vertices, vertices) array."""
    if blocks ** vertices > MAX_MAPS:
        raise ValueError(
            f"{blocks}^{vertices} block maps exceed the limit of {MAX_MAPS}; "
            "use fewer blocks or a forest"
        )
    return np.array(list(product(range(blocks), repeat=vertices)), dtype=np.intp).reshape(-1, vertices)


def _exclusive_products(x: np.ndarray) -> np.ndarray:
    """out[:, k] = product of x[:, j] over j != k, without dividing."""
    ones = np.ones((x.shape[0], 1))
    before = np.cumprod(np.hstack([ones, x[:, :-1]]), axis=1)
    after = np.cumprod(np.hstack([ones, x[:, :0:-1]]), axis=1)[:, ::-1]
    return before * after


def density_and_gradient(h: Digraph, a: np.ndarray, b: np.ndarray, maps: np.ndarray | None = None):
    """t(h, W) and its gradient in a and in the free upper-triangle entries of b.

    The b-gradient is returned as an antisymmetric matrix D with D[i, j] the
    derivative along b_ij += s, b_ji -= s. Forests are handled by message
    passing unless `maps` is given; anything else sums over every block map.
    """
    if maps is None:
        if is_forest(h):
            return _forest_density_and_gradient(h, a, b)
        maps = all_maps(h.n, len(a))
    return _map_density_and_gradient(h, a, b, maps)


def _tree_sums(comp: list[int], a: np.ndarray, kernel: np.ndarray, adj, edges):
    """Z for one tree with dZ/da and dZ/db (b entries taken as independent)."""
    blocks = len(a)
    order, parent = walk(adj, comp[0])
    root = order[0]
    children: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)

    def pull(v: int, w: int, message: np.ndarray) -> np.ndarray:
        # what w's side contributes to each block of v
        return (kernel if (v, w) in edges else kernel.T) @ message

    up: dict[int, np.ndarray] = {}
    from_child: dict[int, np.ndarray] = {}
    for v in reversed(order):
        incoming = np.ones(blocks)
        for w in children[v]:
            from_child[w] = pull(v, w, up[w])
            incoming = incoming * from_child[w]
        up[v] = a * incoming

    down: dict[int, np.ndarray] = {}
    grad_a = np.zeros(blocks)
    grad_b = np.zeros((blocks, blocks))
    for v in order:
        rows = [from_child[w] for w in children[v]]
        if v != root:
            rows.append(pull(v, parent[v], down[v]))
        if not rows:
            grad_a += 1.0
            continue
        stacked = np.column_stack(rows)
        grad_a += stacked.prod(axis=1)
        others = _exclusive_products(stacked)
        for k, w in enumerate(children[v]):
            down[w] = a * others[:, k]
            if (v, w) in edges:
                grad_b += np.outer(down[w], up[w])
            else:
                grad_b += np.outer(up[w], down[w])
    return float(up[root].sum()), grad_a, grad_b


def _forest_density_and_gradient(h: Digraph, a: np.ndarray, b: np.ndarray):
    blocks = len(a)
    scale = 2.0 ** -len(h.edges)
    kernel = 1.0 + b
    adj = undirected_adjacency(h)
    parts = [_tree_sums(comp, a, kernel, adj, h.edge_set) for comp in components(h)]
    if not parts:
        return scale, np.zeros(blocks), np.zeros((blocks, blocks))
    sums = np.array([[z for z, _, _ in parts]])
    rest = _exclusive_products(sums)[0]
    grad_a = sum(r * ga for r, (_, ga, _) in zip(rest, parts))
    grad_b = sum(r * gb for r, (_, _, gb) in zip(rest, parts))
    np.fill_diagonal(grad_b, 0.0)
    value = scale * float(sums.prod())
    return value, scale * grad_a, scale * (grad_b - grad_b.T)


def _map_density_and_gradient(h: Digraph, a: np.ndarray, b: np.ndarray, maps: np.ndarray):
    blocks = len(a)
    scale = 2.0 ** -len(h.edges)
    weights = a[maps]
    weight_prod = weights.prod(axis=1)
    if h.edges:
        tails = np.array([u for u, _ in h.edges])
        heads = np.array([v for _, v in h.edges])
        factors = 1.0 + b[maps[:, tails], maps[:, heads]]
        factor_prod = factors.prod(axis=1)
    else:
        factor_prod = np.ones(len(maps))
    value = scale * float(np.dot(weight_prod, factor_prod))

    grad_a = np.zeros(blocks)
    weight_excl = _exclusive_products(weights)
    for v in range(h.n):
        np.add.at(grad_a, maps[:, v], factor_prod * weight_excl[:, v])

    grad_b = np.zeros((blocks, blocks))
    if h.edges:
        factor_excl = _exclusive_products(factors)
        for k, (u, v) in enumerate(h.edges):
            np.add.at(grad_b, (maps[:, u], maps[:, v]), weight_prod * factor_excl[:, k])
    np.fill_diagonal(grad_b, 0.0)
    return value, scale * grad_a, scale * (grad_b - grad_b.T)


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = 1}."""
    u = -np.sort(-v)
    cumulative = np.cumsum(u) - 1.0
    ranks = np.arange(1, len(v) + 1)
    active = u - cumulative / ranks > 0
    rho = ranks[active][-1]
    theta = cumulative[active][-1] / rho
    return np.maximum(v - theta, 0.0)


def _clean_bias(b: np.ndarray) -> np.ndarray:
    b = np.clip((b - b.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(b, 0.0)
    return b


def _run_restart(args) -> tuple[float, np.ndarray, np.ndarray, float]:
    h, blocks, iters, step, sign, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    maps = None if is_forest(h) else all_maps(h.n, blocks)
    weights = rng.exponential(size=blocks)
    a = weights / weights.sum()
    upper = np.triu(rng.uniform(-1.0, 1.0, size=(blocks, blocks)), 1)
    b = upper - upper.T

    best = None
    eta = step
    for _ in range(iters + 1):
        value, grad_a, grad_b = density_and_gradient(h, a, b, maps)
        if best is None or sign * value > sign * best[0]:
            best = (value, a.copy(), b.copy(), float(np.sqrt(grad_a @ grad_a + (grad_b * grad_b).sum() / 2)))
        a = project_simplex(a + sign * eta * grad_a)
        b = _clean_bias(b + sign * eta * grad_b)
        eta *= STEP_DECAY
    return best


def probe_extrema(
    h: Digraph,
    blocks: int = DEFAULT_BLOCKS,
    restarts: int = DEFAULT_RESTARTS,
    iters: int = DEFAULT_ITERS,
    step: float = DEFAULT_STEP,
    seed: int = DEFAULT_SEED,
    direction: str = "min",
    workers: int = 1,
    on_restart: Callable[[int, float], None] | None = None,
) -> ProbeReport:
    """Best density found over independently seeded restarts.

    Evidence only: the search is local, so a reported minimum is an upper
    bound on the true infimum.
    """
    if h.n < 1:
        raise ValueError("Cannot probe the empty digraph")
    if blocks < 2:
        raise ValueError(f"blocks must be at least 2, got {blocks}")
    if restarts < 1:
        raise ValueError(f"restarts must be at least 1, got {restarts}")
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    sign = 1.0 if direction == "max" else -1.0
    seeds = np.random.SeedSequence(seed).spawn(restarts)
    jobs = [(h, blocks, iters, step, sign, s) for s in seeds]

    if workers > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_restart, jobs))
    else:
        results = [_run_restart(job) for job in jobs]

    winner = 0
    for index, (value, *_rest) in enumerate(results):
        if on_restart:
            on_restart(index, value)
        if sign * value > sign * results[winner][0]:
            winner = index
    value, a, b, grad_norm = results[winner]
    return ProbeReport(
        direction=direction,
        best_value=value,
        best_point=StepTourneyon.from_arrays(a, b),
        blocks=blocks,
        restarts=restarts,
        iterations=iters,
        step=step,
        seed=seed,
        gradient_norm_at_best=grad_norm,
        best_restart=winner,
        restart_values=tuple(r[0] for r in results),
    )
