import pytest

from impartial.corpus.bundled import register_bundled
from impartial.corpus.registry import load_example
from impartial.graphs.core import Digraph, UndirectedGraph


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: exhaustive sweeps that take more than a few seconds"
    )


@pytest.fixture(autouse=True)
def _isolate_threads(monkeypatch):
    """Keep a developer's IMPARTIAL_THREADS out of the tests."""
    monkeypatch.delenv("IMPARTIAL_THREADS", raising=False)


@pytest.fixture(autouse=True, scope="session")
def _bundled_corpus():
    register_bundled()


# ── Graph factories ──


@pytest.fixture
def make_digraph():
    """Factory for Digraph from an edge list; n defaults to one past the largest vertex."""
    def _make(edges=(), n=None):
        edges = tuple(edges)
        if n is None:
            n = max((max(e) for e in edges), default=-1) + 1
        return Digraph(n, edges)
    return _make


@pytest.fixture
def make_graph():
    """Factory for UndirectedGraph, same conventions as make_digraph."""
    def _make(edges=(), n=None):
        edges = tuple(edges)
        if n is None:
            n = max((max(e) for e in edges), default=-1) + 1
        return UndirectedGraph(n, edges)
    return _make


@pytest.fixture
def example():
    """Load a bundled corpus example by name."""
    return load_example


@pytest.fixture
def path_graph(make_graph):
    def _make(n):
        return make_graph([(i, i + 1) for i in range(n - 1)], n=n)
    return _make
