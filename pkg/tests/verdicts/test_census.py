import json

import pytest

from impartial.graphs.core import Digraph
from impartial.verdicts import census as census_mod
from impartial.verdicts.census import CensusReport, census, sample_orientations
from impartial.verdicts.tournaments import Tournament, count_embeddings


def test_intro_example_is_constant(example):
    report = census(example("intro-ex1"), 4)
    assert report.distribution == {3: 64}
    assert report.is_constant
    assert report.mode == "exact"
    assert report.total == 64
    assert report.seed is None


def test_directed_path_distribution(example):
    report = census(example("pathaa"), 3)
    assert report.distribution == {1: 6, 3: 2}
    assert not report.is_constant


def test_single_vertex():
    assert census(Digraph(1), 1).distribution == {1: 1}
    assert census(Digraph(1), 2).distribution == {2: 2}


def test_examples_are_first_tournaments_with_each_count(example):
    h = example("pathaa")
    report = census(h, 3)
    for count in report.distribution:
        t = report.example(count)
        assert count_embeddings(h, t) == count
        earlier = [o for o in range(t.orient) if count_embeddings(h, Tournament(3, o)) == count]
        assert earlier == []


def test_report_json(example):
    payload = census(example("intro-ex1"), 4).to_json()
    assert '"distribution":{"3":64}' in payload
    assert json.loads(payload) == {
        "n": 4,
        "mode": "exact",
        "seed": None,
        "distribution": {"3": 64},
        "constant": True,
    }


def test_huge_frequencies_are_strings():
    report = CensusReport(8, "exact", {1: 1 << 60})
    assert report.to_dict()["distribution"] == {"1": str(1 << 60)}


def test_order_smaller_than_digraph(example):
    with pytest.raises(ValueError, match="smaller"):
        census(example("intro-ex1"), 3)


def test_exact_limit(example):
    with pytest.raises(ValueError, match="sampling"):
        census(example("pathaa"), 9)


def test_sample_count_must_be_positive(example):
    with pytest.raises(ValueError, match="at least 1"):
        census(example("pathaa"), 5, samples=0)


def test_sampled_census_includes_transitive(example):
    draws = sample_orientations(5, 10, seed=3)
    assert len(draws) == 10
    assert draws[0] == Tournament.transitive(5).orient
    assert draws == sample_orientations(5, 10, seed=3)

    report = census(example("pathaaa"), 5, samples=10, seed=3)
    assert report.mode == "sampled"
    assert report.total == 10
    assert report.seed == 3
    assert report.samples == 10


def test_sampled_census_of_impartial_digraph_is_constant(example):
    report = census(example("intro-ex2"), 8, samples=20, seed=1)
    assert report.is_constant
    assert report.total == 20


def test_chunking_does_not_change_result(example, monkeypatch):
    h = example("pathab")
    whole = census(h, 5)
    monkeypatch.setattr(census_mod, "CHUNK_SIZE", 7)
    chunks = []
    split = census(h, 5, on_chunk=lambda done, total: chunks.append((done, total)))
    assert split == whole
    assert split.examples == whole.examples
    assert chunks[-1] == (147, 147)


@pytest.mark.slow
def test_workers_do_not_change_result(example, monkeypatch):
    h = example("pathaba")
    serial = census(h, 6)
    monkeypatch.setattr(census_mod, "CHUNK_SIZE", 1024)
    parallel = census(h, 6, workers=2)
    assert parallel == serial
    assert parallel.examples == serial.examples


@pytest.mark.slow
def test_exact_census_on_eight_vertices(example):
    h = example("pathaa")
    report = census(h, 8)
    assert report.total == 1 << 28
    # mean over all tournaments is the random-tournament expectation 8*7*6/4
    assert sum(c * f for c, f in report.distribution.items()) == 84 * (1 << 28)
    assert min(report.distribution) == 56
    assert count_embeddings(h, report.example(max(report.distribution))) == max(report.distribution)
