import pytest

from impartial.corpus.bundled import EXAMPLES
from impartial.corpus.registry import (
    ExampleDefinition,
    get_example,
    list_examples,
    load_example,
    register_example,
)
from impartial.graphs.core import Digraph, UndirectedGraph
from impartial.structure.rbm import is_rbm


@pytest.mark.parametrize("definition", EXAMPLES, ids=lambda e: e.name)
def test_every_bundled_example_loads(definition):
    g = definition.load()
    expected = Digraph if definition.kind == "digraph" else UndirectedGraph
    assert isinstance(g, expected)


@pytest.mark.parametrize("definition", [e for e in EXAMPLES if e.impartial is not None], ids=lambda e: e.name)
def test_impartial_flags_match_structure(definition):
    assert is_rbm(definition.load()) is definition.impartial


def test_lookup():
    assert get_example("intro-ex1").filename == "intro-ex1.txt"
    assert get_example("missing") is None
    assert {e.name for e in list_examples()} >= {"intro-ex1", "sec4-H", "sec5-F", "sec7-G", "path8"}


def test_load_unknown_example():
    with pytest.raises(KeyError, match="Unknown corpus example"):
        load_example("missing")


def test_read_text_keeps_comments():
    assert get_example("intro-ex1").read_text().startswith("# ")


def test_register_replaces_by_name():
    original = get_example("pathaa")
    try:
        register_example(ExampleDefinition("pathaa", "override", "digraph", False))
        assert get_example("pathaa").description == "override"
    finally:
        register_example(original)
