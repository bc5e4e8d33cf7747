import pytest

from impartial.graphs.canon import tree_code
from impartial.graphs.core import Digraph, GraphError, UndirectedGraph
from impartial.structure.rbm import (
    generate_rbm,
    generate_rbm_undirected,
    is_rbm,
    is_rbm_undirected,
    odd_automorphism,
)
from tests import oracles


@pytest.mark.parametrize(
    "name", ["rbm-1", "rbm-2", "rbm-4", "rbm-8", "rbm-16", "intro-ex1", "intro-ex2", "pathaab", "pathbaa"]
)
def test_recognizes_rbm_examples(example, name):
    assert is_rbm(example(name))


@pytest.mark.parametrize("name", ["pathaa", "pathaaa", "pathaba", "directed-triangle", "transitive-triangle"])
def test_rejects_non_rbm_examples(example, name):
    assert not is_rbm(example(name))


def test_rejects_power_of_two_forest():
    assert not is_rbm(Digraph(4, ((0, 1), (2, 3))))


def test_undirected_recognition(example, path_graph):
    assert is_rbm_undirected(path_graph(8))
    assert is_rbm_undirected(UndirectedGraph(1))
    assert not is_rbm_undirected(path_graph(3))
    assert not is_rbm_undirected(example("sec5-mirror"))
    assert not is_rbm_undirected(UndirectedGraph(2))


def test_odd_automorphism_of_path(path_graph):
    assert odd_automorphism(path_graph(2)) == [1, 0]
    assert odd_automorphism(path_graph(8)) == [7, 6, 5, 4, 3, 2, 1, 0]


def test_odd_automorphism_needs_rbm(path_graph):
    with pytest.raises(GraphError):
        odd_automorphism(path_graph(3))
    with pytest.raises(GraphError):
        odd_automorphism(UndirectedGraph(1))


@pytest.mark.parametrize(("k", "count"), [(0, 1), (1, 1), (2, 2)])
def test_generation_counts(k, count):
    assert len(generate_rbm(k)) == count


def test_generation_order_at_four_vertices(example):
    first, second = generate_rbm(2)
    assert tree_code(first, "directed") == tree_code(example("pathbaa"), "directed")
    assert tree_code(second, "directed") == tree_code(example("pathaab"), "directed")


@pytest.mark.parametrize("k", [-1, 5])
def test_generation_bounds(k):
    with pytest.raises(ValueError, match="between 0 and 4"):
        generate_rbm(k)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_generated_digraphs_are_rbm_and_distinct(k):
    generated = generate_rbm(k)
    assert all(d.n == 2 ** k and is_rbm(d) for d in generated)
    assert len({tree_code(d, "directed") for d in generated}) == len(generated)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_generation_matches_brute_force(k):
    n = 2 ** k
    expected = {
        tree_code(d, "directed")
        for t in oracles.nonisomorphic_trees(n)
        for d in oracles.orientations(t)
        if is_rbm(d)
    }
    assert {tree_code(d, "directed") for d in generate_rbm(k)} == expected


@pytest.mark.parametrize("k", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_undirected_generation_matches_brute_force(k):
    expected = {tree_code(t) for t in oracles.nonisomorphic_trees(2 ** k) if is_rbm_undirected(t)}
    assert {tree_code(t) for t in generate_rbm_undirected(k)} == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_underlying_tree_of_rbm_digraph_is_rbm(k):
    for d in generate_rbm(k):
        assert is_rbm_undirected(d.underlying())
