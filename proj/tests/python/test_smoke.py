"""Smoke tests for the Python module against the bundled fixture assets."""

import json
import math
import os

import pytest

import scmpolar as sp

SOURCE_DIR = os.environ.get(
    "SCM_SOURCE_DIR", os.path.join(os.path.dirname(__file__), "..", ".."))
FIXTURES = os.path.join(SOURCE_DIR, "tests", "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope="module")
def space():
    space, report = sp.load_embeddings(fixture("mini.vec"))
    assert report.malformed == 0
    return space


@pytest.fixture(scope="module")
def subspace(space):
    entries, _, _ = sp.parse_lexicon(fixture("mini_lexicon.csv"))
    seeds = sp.build_seed_sets(entries)
    return sp.build_axes(space, seeds)


def test_loading_and_lookup(space):
    assert len(space) > 0
    assert space.dim == 10
    assert "friendly" in space
    vec = space.lookup("Friendly")
    assert vec is not None
    assert math.isclose(math.sqrt(sum(x * x for x in vec)), 1.0, abs_tol=1e-6)
    assert space.lookup("notaword") is None


def test_projection_and_classification(space, subspace):
    point = subspace.project(space.lookup("friendly"))
    assert point.warmth > 0
    cls = sp.classify_point(point)
    assert cls.quadrant in (sp.Quadrant.HC_HW, sp.Quadrant.LC_HW)
    assert sp.quadrant_name(sp.Quadrant.LC_LW) == "LC-LW"


def test_synthetic_axes_identity():
    space = sp.EmbeddingSpace.build(2, [
        ("wp", [1.0, 0.0]), ("wn", [-1.0, 0.0]),
        ("cp", [0.0, 1.0]), ("cn", [0.0, -1.0]),
    ])
    seeds = sp.SeedSets()
    seeds.warm_pos = ["wp"]
    seeds.warm_neg = ["wn"]
    seeds.comp_pos = ["cp"]
    seeds.comp_neg = ["cn"]
    sub = sp.build_axes(space, seeds)
    point = sub.project([1.0, 0.0])
    assert math.isclose(point.warmth, 0.5, abs_tol=1e-12)
    assert math.isclose(point.competence, 0.0, abs_tol=1e-12)


def test_lexicon_validation(space, subspace):
    entries, _, _ = sp.parse_lexicon(fixture("mini_lexicon.csv"))
    seeds = sp.build_seed_sets(entries)
    vset, removed_seed, removed_oov = sp.validation_set(entries, seeds, space)
    assert removed_oov == 0
    report = sp.evaluate_lexicon(subspace, space, vset)
    assert report.warmth_accuracy == 100.0
    assert report.competence_accuracy == 100.0


def test_corpus_and_clustering(space, subspace):
    groups = sp.load_corpus(fixture("mini_corpus.jsonl"))
    assert len(groups) == 6
    names = [g.name for g in groups]
    assert names == sorted(names)

    nomad = next(g for g in groups if g.name == "nomad")
    cluster = sp.summarize_group(
        space, subspace, nomad.name,
        [p.stereotype for p in nomad.pairs],
        ["swarthy", "black", "white"], 0.6)
    assert cluster.quadrant == sp.Quadrant.LC_HW
    assert cluster.representative == "cheerful"
    assert cluster.discarded_demographic == ["swarthy"]
    assert cluster.unresolved == []  # zzqx sits on the anti-stereotype side

    anti = sp.summarize_group(
        space, subspace, nomad.name,
        [p.antistereotype for p in nomad.pairs],
        ["swarthy", "black", "white"], 0.6)
    assert anti.unresolved == ["zzqx"]
    assert anti.discarded_outliers == ["settled"]


def test_fill_word_extraction():
    fill = sp.extract_fill_word(
        "Women are known for being overly BLANK.",
        "Women are known for being overly emotional.")
    assert fill == "emotional"
    assert sp.extract_fill_word("X BLANK", "X") is None


def test_antonyms_and_strategies(space, subspace):
    res = sp.AntonymResource.load(
        fixture("mini_antonyms.tsv"), fixture("mini_synonyms.tsv"),
        fixture("mini_lemmas.tsv"))
    assert res.antonym_set("frail") == {"strong", "sturdy"}
    assert res.lemma("caring") == "care"
    assert res.is_antonym_match("poor", "rich")

    pair = sp.classify_pair(res, space, subspace, "poor", "rich")
    assert pair.label == sp.StrategyLabel.DirectAntonym
    pair = sp.classify_pair(res, space, subspace, "poor", "affable")
    assert pair.label == sp.StrategyLabel.OppositeQuadrant
    assert sp.classify_pair(res, space, subspace, "poor", "zzqx") is None


def test_counter_generation(space, subspace):
    res = sp.AntonymResource.load(fixture("mini_antonyms.tsv"),
                                  fixture("mini_synonyms.tsv"))
    groups = sp.load_corpus(fixture("mini_corpus.jsonl"))
    keeper = next(g for g in groups if g.name == "lighthouse keeper")
    cluster = sp.summarize_group(
        space, subspace, keeper.name,
        [p.stereotype for p in keeper.pairs], [], 0.6)
    selection = sp.select_x_but_y(subspace, space, cluster)
    assert selection.ambivalent
    assert (selection.x_word, selection.y_word) == ("gentle", "frail")
    counter = sp.generate_counter(res, space, subspace, cluster, selection)
    assert counter.counter == "gentle and strong"
    assert counter.status == sp.CounterStatus.Ok


def test_run_pipeline(tmp_path):
    artifacts = sp.run_pipeline("validate", {
        "embeddings": fixture("mini.vec"),
        "lexicon": fixture("mini_lexicon.csv"),
        "output_dir": str(tmp_path),
    })
    assert "validate_report.json" in artifacts
    assert "manifest.json" in artifacts
    report = json.loads((tmp_path / "validate_report.json").read_text())
    assert report["warmth_accuracy"] == 100.0


def test_error_mapping(tmp_path):
    with pytest.raises(sp.ScmError):
        sp.load_embeddings(str(tmp_path / "missing.vec"))
