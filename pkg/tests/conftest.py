"""Shared fixtures: thesaurus databases, the planted corpus, trained models."""

from __future__ import annotations

import pytest

from lexigrow.embed import TrainConfig, build_cooccurrence, build_vocab, train
from lexigrow.wordnet import InformationContent, load_wordnet

from synth_corpus import make_corpus, planted_lexicon, planted_wndb_specs
from wndb_fixture import headache_specs, tree50_specs, write_wndb


@pytest.fixture(scope="session")
def headache_db(tmp_path_factory):
    """Four two-member synsets sharing the lemma "headache", plus spine."""
    directory = tmp_path_factory.mktemp("wndb_headache")
    offsets = write_wndb(directory, headache_specs())
    db = load_wordnet(directory)
    return db, offsets


@pytest.fixture(scope="session")
def headache_ic(headache_db):
    """Hand-assigned IC making worry > cephalalgia > concern > vexation."""
    _db, offsets = headache_db
    values = {"co_w": 9.0, "co_c": 8.0, "co_co": 7.0, "co_v": 6.0, "state": 1.0, "root": 0.0}
    return InformationContent(
        ic={(offsets[key], "n"): ic for key, ic in values.items()},
        source="fixture",
    )


@pytest.fixture(scope="session")
def tree50_db(tmp_path_factory):
    """50-synset tree: root, 7 branches, 42 leaves; two lemmas per synset."""
    directory = tmp_path_factory.mktemp("wndb_tree50")
    offsets = write_wndb(directory, tree50_specs())
    db = load_wordnet(directory)
    return db, offsets


@pytest.fixture(scope="session")
def planted_stream():
    return make_corpus()


@pytest.fixture(scope="session")
def planted_small_stream():
    """Smaller variant for grid sweeps, where 16 models get trained."""
    return make_corpus(docs_per_concept=30)


@pytest.fixture(scope="session")
def planted_db(tmp_path_factory):
    directory = tmp_path_factory.mktemp("wndb_planted")
    write_wndb(directory, planted_wndb_specs())
    return load_wordnet(directory)


@pytest.fixture(scope="session")
def planted_lex():
    return planted_lexicon()


@pytest.fixture(scope="session")
def tiny_model():
    """A small trained model over the planted corpus for query/evaluate tests."""
    stream = make_corpus(docs_per_concept=30)
    vocab = build_vocab(stream, min_count=5)
    config = TrainConfig(d=24, window=6, iterations=15, rng_seed=0)
    matrix = build_cooccurrence(stream, vocab, window=config.window)
    return train(matrix, config)


@pytest.fixture(scope="session")
def planted_model(planted_stream):
    """Trained on the full planted corpus; ranks every planted twin first."""
    vocab = build_vocab(planted_stream, min_count=5)
    config = TrainConfig(d=50, window=8, iterations=25, rng_seed=0)
    matrix = build_cooccurrence(planted_stream, vocab, window=config.window)
    return train(matrix, config)
