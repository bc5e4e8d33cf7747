import json
from collections import Counter
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from impartial.graphs.core import Digraph
from impartial.verdicts.tournaments import Tournament, count_embeddings, count_embeddings_many

EXACT_PAIR_LIMIT = 28  # 2**28 labeled tournaments on 8 vertices
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0
CHUNK_SIZE = 1 << 20  # orientations per work unit, one bit lane each
SAMPLE_CHUNK_SIZE = 4096

JSON_SAFE_INT = 1 << 53


@dataclass(frozen=True)
class CensusReport:
    n: int
    mode: str  # "exact" or "sampled"
    distribution: dict[int, int]
    seed: int | None = None
    samples: int | None = None
    examples: dict[int, int] = field(default_factory=dict, compare=False)

    @property
    def is_constant(self) -> bool:
        return len(self.distribution) == 1

    @property
    def total(self) -> int:
        return sum(self.distribution.values())

    def example(self, count: int) -> Tournament:
        return Tournament(self.n, self.examples[count])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "distribution": {str(c): _json_int(f) for c, f in self.distribution.items()},
            "constant": self.is_constant,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _json_int(value: int) -> int | str:
    return str(value) if abs(value) >= JSON_SAFE_INT else value


def _count_chunk(h: Digraph, n: int, orients: list[int]) -> tuple[Counter, dict[int, int]]:
    hist: Counter = Counter()
    first: dict[int, int] = {}
    for orient in orients:
        c = count_embeddings(h, Tournament(n, orient))
        hist[c] += 1
        first.setdefault(c, orient)
    return hist, first


def _count_range(args: tuple[Digraph, int, int, int]) -> tuple[Counter, dict[int, int]]:
    h, n, start, stop = args
    counts = count_embeddings_many(h, n, np.arange(start, stop, dtype=np.int64))
    values, first, freq = np.unique(counts, return_index=True, return_counts=True)
    hist = Counter({int(c): int(f) for c, f in zip(values, freq)})
    return hist, {int(c): start + int(i) for c, i in zip(values, first)}


def _count_list(args: tuple[Digraph, int, list[int]]) -> tuple[Counter, dict[int, int]]:
    h, n, orients = args
    return _count_chunk(h, n, orients)


def sample_orientations(n: int, samples: int, seed: int) -> list[int]:
    """The transitive tournament followed by samples-1 uniform draws."""
    rng = np.random.default_rng(seed)
    draws = [Tournament.transitive(n).orient]
    for _ in range(samples - 1):
        draws.append(Tournament.random(n, rng).orient)
    return draws


def census(
    h: Digraph,
    n: int,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    on_chunk: Callable[[int, int], None] | None = None,
) -> CensusReport:
    """Distribution of labeled-copy counts of h over tournaments on n vertices.

    With samples=None every labeled tournament is enumerated; otherwise the
    transitive tournament plus samples-1 seeded uniform draws are counted.
    """
    if n < h.n:
        raise ValueError(f"Tournament order {n} is smaller than the digraph ({h.n} vertices)")
    pairs = comb(n, 2)
    if samples is None:
        if pairs > EXACT_PAIR_LIMIT:
            raise ValueError(
                f"Exact census on {n} vertices needs 2^{pairs} tournaments; "
                f"the limit is 2^{EXACT_PAIR_LIMIT}. Use sampling instead."
            )
        total = 1 << pairs
        jobs = [(h, n, s, min(s + CHUNK_SIZE, total)) for s in range(0, total, CHUNK_SIZE)]
        worker = _count_range
    else:
        if samples < 1:
            raise ValueError(f"samples must be at least 1, got {samples}")
        orients = sample_orientations(n, samples, seed)
        jobs = [(h, n, orients[s:s + SAMPLE_CHUNK_SIZE]) for s in range(0, samples, SAMPLE_CHUNK_SIZE)]
        worker = _count_list

    hist: Counter = Counter()
    examples: dict[int, int] = {}
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(worker, jobs)
            for done, (part, first) in enumerate(results, start=1):
                _merge(hist, examples, part, first)
                if on_chunk:
                    on_chunk(done, len(jobs))
    else:
        for done, job in enumerate(jobs, start=1):
            _merge(hist, examples, *worker(job))
            if on_chunk:
                on_chunk(done, len(jobs))

    return CensusReport(
        n=n,
        mode="exact" if samples is None else "sampled",
        distribution=dict(sorted(hist.items())),
        seed=None if samples is None else seed,
        samples=samples,
        examples=examples,
    )


def _merge(hist: Counter, examples: dict[int, int], part: Counter, first: dict[int, int]) -> None:
    # chunks arrive in index order, so the earliest example wins
    hist.update(part)
    for count, orient in first.items():
        examples.setdefault(count, orient)
