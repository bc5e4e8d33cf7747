"""Step tourneyons and the polynomial P(a; b) behind their digraph densities.

A step tourneyon splits [0, 1] into blocks of lengths a_1..a_n and takes the
value (1 + b_ij) / 2 on block (i, j). For a digraph H,

    P(a; b) = sum over maps pi: V(H) -> [n] of
              prod_v a_pi(v) * prod_{u->v} (1 + b_pi(u)pi(v))

and t(H, W) = 2^-|E(H)| * P(a; b).
"""
import json
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from numbers import Real

import numpy as np

from impartial.graphs.canon import walk, undirected_adjacency
from impartial.graphs.core import Digraph, components, is_forest

SUM_TOLERANCE = 1e-12

Matrix = Sequence[Sequence[Real]]


def check_bias(b: Matrix, size: int) -> None:
    if len(b) != size or any(len(row) != size for row in b):
        raise ValueError(f"Bias matrix must be {size}x{size}")
    for i in range(size):
        if b[i][i] != 0:
            raise ValueError(f"Bias diagonal must be zero, b[{i}][{i}] = {b[i][i]}")
        for j in range(i + 1, size):
            if b[i][j] != -b[j][i]:
                raise ValueError(f"Bias matrix is not antisymmetric at ({i}, {j})")


@dataclass(frozen=True)
class StepTourneyon:
    a: tuple[Real, ...]
    b: tuple[tuple[Real, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(tuple(row) for row in self.b))
        if not self.a:
            raise ValueError("A step tourneyon needs at least one block")
        if any(x < 0 for x in self.a):
            raise ValueError("Block weights must be non-negative")
        if abs(sum(self.a) - 1) > SUM_TOLERANCE:
            raise ValueError(f"Block weights must sum to 1, got {sum(self.a)}")
        check_bias(self.b, len(self.a))
        if any(abs(x) > 1 for row in self.b for x in row):
            raise ValueError("Bias entries must lie in [-1, 1]")

    @property
    def blocks(self) -> int:
        return len(self.a)

    def kernel(self, i: int, j: int) -> Real:
        return (1 + self.b[i][j]) / 2

    @classmethod
    def constant(cls, blocks: int = 1) -> "StepTourneyon":
        """W = 1/2 everywhere, split into equal rational blocks."""
        zero = tuple(tuple(Fraction(0) for _ in range(blocks)) for _ in range(blocks))
        return cls(tuple(Fraction(1, blocks) for _ in range(blocks)), zero)

    @classmethod
    def random(cls, blocks: int, rng: np.random.Generator) -> "StepTourneyon":
        """Weights from normalized exponentials, biases uniform on [-1, 1]."""
        weights = rng.exponential(size=blocks)
        upper = np.triu(rng.uniform(-1.0, 1.0, size=(blocks, blocks)), 1)
        a = weights / weights.sum()
        return cls(tuple(float(x) for x in a), tuple(tuple(float(x) for x in row) for row in upper - upper.T))

    @classmethod
    def from_arrays(cls, a: np.ndarray, b: np.ndarray) -> "StepTourneyon":
        return cls(tuple(float(x) for x in a), tuple(tuple(float(x) for x in row) for row in b))

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.array(self.a, dtype=float), np.array(self.b, dtype=float)

    def to_dict(self) -> dict:
        return {"a": [float(x) for x in self.a], "b": [[float(x) for x in row] for row in self.b]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "StepTourneyon":
        try:
            return cls(tuple(data["a"]), tuple(tuple(row) for row in data["b"]))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid tourneyon JSON: {e}") from None

    @classmethod
    def from_json(cls, text: str) -> "StepTourneyon":
        return cls.from_dict(json.loads(text))


def _edge_bias(b: Matrix, i: int, j: int, forward: bool) -> Real:
    return b[i][j] if forward else b[j][i]


def _p_tree(h: Digraph, a: Sequence[Real], b: Matrix) -> Real:
    n = len(a)
    adj = undirected_adjacency(h)
    edges = h.edge_set
    result = 1
    for comp in components(h):
        order, parent = walk(adj, comp[0])
        message = {}
        for v in reversed(order):
            weights = list(a)
            for w, _ in adj[v]:
                if parent.get(w) != v:
                    continue
                forward = (v, w) in edges
                child = message[w]
                for i in range(n):
                    weights[i] *= sum((1 + _edge_bias(b, i, j, forward)) * child[j] for j in range(n))
            message[v] = weights
        result *= sum(message[comp[0]])
    return result


def _p_naive(h: Digraph, a: Sequence[Real], b: Matrix) -> Real:
    total = 0
    for pi in product(range(len(a)), repeat=h.n):
        term = 1
        for v in range(h.n):
            term *= a[pi[v]]
        for u, v in h.edges:
            term *= 1 + b[pi[u]][pi[v]]
        total += term
    return total


def p_eval(h: Digraph, a: Sequence[Real], b: Matrix, method: str = "auto") -> Real:
    """P(a; b) for h, in whatever number type a and b carry (Fraction stays exact).

    Forests are summed by message passing over each tree; "naive" enumerates
    every map and works for any digraph.
    """
    check_bias(b, len(a))
    if method == "auto":
        method = "tree" if is_forest(h) else "naive"
    if method == "tree":
        return _p_tree(h, a, b)
    if method == "naive":
        return _p_naive(h, a, b)
    raise ValueError(f"Unknown evaluation method: {method}")


def t_density(h: Digraph, w: StepTourneyon) -> Real:
    return p_eval(h, w.a, w.b) / 2 ** len(h.edges)


def _random_rational_point(n: int, rng: np.random.Generator) -> tuple[list[Fraction], list[list[Fraction]]]:
    a = [Fraction(int(rng.integers(1, 1000)), int(rng.integers(1, 1000))) for _ in range(n)]
    b = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = Fraction(int(rng.integers(-1000, 1001)), 1000)
            b[j][i] = -b[i][j]
    return a, b


def identity_test(h: Digraph, trials: int = 100, tol: float = 1e-9, seed: int = 0, exact: bool = True) -> bool:
    """Check P(a; b) == (a_1 + ... + a_n)^|V(h)| at random points, n = |V(h)|.

    P is homogeneous in a, so unnormalized positive weights are fine.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    n = max(h.n, 1)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        if exact:
            a, b = _random_rational_point(n, rng)
            if p_eval(h, a, b) != sum(a) ** h.n:
                return False
        else:
            a = list(rng.exponential(size=n) + 1e-3)
            upper = np.triu(rng.uniform(-1.0, 1.0, size=(n, n)), 1)
            b = (upper - upper.T).tolist()
            expected = sum(a) ** h.n
            if abs(p_eval(h, a, b) - expected) > tol * max(1.0, abs(expected)):
                return False
    return True
