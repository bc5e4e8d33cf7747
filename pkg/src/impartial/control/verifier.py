import os
import time

from impartial.graphs.core import Digraph, Graph, underlying
from impartial.graphs.signs import sgn_map
from impartial.graphs.canon import forest_isomorphism
from impartial.graphs.subgraphs import enumerate_sub_F
from impartial.structure.cutting import CutTrace, recursive_cutting
from impartial.structure.rbm import generate_rbm, generate_rbm_undirected
from impartial.tourneyon.probe import ProbeReport, probe_extrema
from impartial.tourneyon.step import StepTourneyon, identity_test, t_density
from impartial.verdicts.census import DEFAULT_SAMPLES, DEFAULT_SEED, CensusReport, census
from impartial.verdicts.records import Verdict
from impartial.verdicts.verdict import census_route, census_verdict, decide

THREADS_ENV = "IMPARTIAL_THREADS"


def resolve_workers(threads: int | None) -> int:
    """Worker count: IMPARTIAL_THREADS wins over the flag; 0 or None means all cores."""
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            threads = int(env)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if threads is None or threads <= 0:
        return os.cpu_count() or 1
    return threads


class Verifier:
    """Runs verdict routes, censuses, probes and generators, reporting progress."""

    def __init__(self, workers: int = 1, on_status=None, debug=False, on_debug=None):
        self.workers = workers
        self.on_status = on_status
        self.debug = debug
        self.on_debug = on_debug

    def _notify(self, message: str) -> None:
        if self.on_status:
            self.on_status(message)

    def _debug_callback(self, message: str) -> None:
        if self.debug and self.on_debug:
            self.on_debug(message)

    def recognize(self, h: Digraph, route: str = "structural", samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED) -> Verdict:
        self._notify(f"Deciding impartiality ({route} route)...")
        started = time.monotonic()
        if route == "census":
            report = self.census_at(h, samples=samples, seed=seed)
            verdict = census_verdict(report)
        else:
            verdict = decide(h, route)
        self._debug_callback(f"{route} route finished in {time.monotonic() - started:.3f}s")
        return verdict

    def census_at(self, h: Digraph, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> CensusReport:
        self._notify(f"Counting copies over tournaments on {h.n} vertices...")
        report = census_route(h, samples=samples, seed=seed, workers=self.workers)
        self._debug_callback(f"census mode={report.mode} tournaments={report.total}")
        return report

    def census(self, h: Digraph, n: int, samples: int | None = None, seed: int = DEFAULT_SEED) -> CensusReport:
        mode = "exhaustively" if samples is None else f"over {samples} samples"
        self._notify(f"Counting copies {mode} on {n} vertices...")
        return census(
            h, n, samples=samples, seed=seed, workers=self.workers,
            on_chunk=lambda done, total: self._debug_callback(f"chunk {done}/{total}"),
        )

    def probe(self, h: Digraph, direction: str = "min", **options) -> ProbeReport:
        self._notify(f"Searching step tourneyons for the {direction} density...")
        return probe_extrema(
            h, direction=direction, workers=self.workers,
            on_restart=lambda i, value: self._debug_callback(f"restart {i}: {value:.9f}"),
            **options,
        )

    def generate(self, k: int, undirected: bool = False) -> list[Graph]:
        self._notify(f"Generating trees on {2 ** k} vertices...")
        found = generate_rbm_undirected(k) if undirected else generate_rbm(k)
        self._debug_callback(f"generation {k}: {len(found)} classes")
        return found

    def cut(self, f: Graph) -> CutTrace:
        self._notify("Cutting mirror-bridges...")
        trace = recursive_cutting(f)
        self._debug_callback(f"{len(trace)} stages")
        return trace

    def subgraphs(self, h: Digraph, f: Graph) -> list[tuple[Digraph, int]]:
        """Members of Sub_F(h) with their sign against the first member."""
        self._notify("Enumerating subgraphs...")
        members = enumerate_sub_F(h, underlying(f))
        self._debug_callback(f"{len(members)} members")
        if not members:
            return []
        first = members[0]
        signed = []
        for m in members:
            sigma = forest_isomorphism(first.underlying(), m.underlying())
            signed.append((m, sgn_map(sigma, first, m)))
        return signed

    def density(self, h: Digraph, w: StepTourneyon):
        return t_density(h, w)

    def identity(self, h: Digraph, trials: int = 100, seed: int = 0, exact: bool = True, tol: float = 1e-9) -> bool:
        self._notify(f"Testing the polynomial identity at {trials} random points...")
        return identity_test(h, trials=trials, tol=tol, seed=seed, exact=exact)
