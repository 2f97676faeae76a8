"""End-to-end pipeline runs through the command-line entry point."""

from __future__ import annotations

import json

import pytest

from lexigrow.cli import main
from lexigrow.embed import load_model, load_vectors
from lexigrow.lexicon import load_assignments, load_lexicon

from synth_corpus import make_corpus, planted_pairs, planted_wndb_specs
from wndb_fixture import write_wndb

PLANTED_TERMS = {t for pair in planted_pairs() for t in pair}

TRAIN_FLAGS = ["--d", "16", "--window", "5", "--iterations", "10"]


@pytest.fixture(scope="module")
def cli_env(tmp_path_factory):
    """Raw corpus, concept TSV, and taxonomy dir, plus a run-through workspace.

    The corpus is the planted stream rendered one document per line; its
    tokens are already lowercase, long enough, and stem-stable, so the
    preprocess stage must reproduce it verbatim.
    """
    root = tmp_path_factory.mktemp("cli")
    stream = make_corpus(docs_per_concept=10)
    corpus = root / "corpus.txt"
    with open(corpus, "w", encoding="utf-8") as fh:
        for doc in stream.documents():
            fh.write(" ".join(doc) + "\n")
    tsv = root / "concepts.tsv"
    rows = []
    for k, (a, b) in enumerate(planted_pairs()):
        rows.append(f"C{k:03d}\tconcept{k}\t{a}")
        rows.append(f"C{k:03d}\tconcept{k}\t{b}")
    tsv.write_text("\n".join(rows) + "\n", encoding="utf-8")
    wndb = root / "wndb"
    wndb.mkdir()
    write_wndb(wndb, planted_wndb_specs())

    ws = root / "ws"
    assert main(["preprocess", "--workspace", str(ws), "--corpus", str(corpus)]) == 0
    assert main([
        "build-lexicon", "--workspace", str(ws),
        "--lexicon", str(tsv), "--min_freq", "10",
    ]) == 0
    assert main(["train", "--workspace", str(ws)] + TRAIN_FLAGS) == 0
    return {"root": root, "ws": ws, "corpus": corpus, "tsv": tsv, "wndb": wndb}


class TestPipelineArtifacts:
    def test_preprocess_reproduces_normalized_corpus(self, cli_env):
        written = (cli_env["ws"] / "stream.txt").read_bytes()
        assert written == cli_env["corpus"].read_bytes()

    def test_lexicon_artifact(self, cli_env):
        lex = load_lexicon(cli_env["ws"] / "lexicon.json")
        assert set(lex.concepts) == {f"C{k:03d}" for k in range(5)}
        assert lex.concepts["C000"] == frozenset({"syn0a", "syn0b"})
        assert lex.concept_names["C003"] == "concept3"

    def test_seed_artifact(self, cli_env):
        assignment = load_assignments(cli_env["ws"] / "seeds.json")
        assert assignment.mode == "leave-one-out"
        assert len(assignment.pairs) == 10
        assert {seed for _, seed, _ in assignment.pairs} == PLANTED_TERMS

    def test_train_artifacts(self, cli_env):
        model = load_model(cli_env["ws"] / "model.bin")
        assert model.d == 16
        assert model.config.iterations == 10
        vectors = load_vectors(cli_env["ws"] / "vectors.txt")
        assert vectors.matrix.shape == (len(model.vocab), 16)

    def test_query_tsv_output(self, cli_env, capsys):
        assert main(["query", "--workspace", str(cli_env["ws"]), "syn0a", "--n", "3"]) == 0
        out = capsys.readouterr().out
        lines = out.rstrip("\n").split("\n")
        assert len(lines) == 3
        for rank, line in enumerate(lines, start=1):
            seed, got_rank, term, score = line.split("\t")
            assert seed == "syn0a"
            assert int(got_rank) == rank
            assert term != "syn0a"
            assert -1.0 <= float(score) <= 1.0

    def test_query_json_output(self, cli_env, capsys):
        rc = main([
            "query", "--workspace", str(cli_env["ws"]),
            "syn1b", "--n", "2", "--format", "json",
        ])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["seed"] == "syn1b"
        assert [c["rank"] for c in payload["candidates"]] == [1, 2]

    def test_evaluate_writes_report(self, cli_env, capsys):
        assert main(["evaluate", "--workspace", str(cli_env["ws"]), "--n", "3"]) == 0
        payload = json.loads((cli_env["ws"] / "report.json").read_text(encoding="utf-8"))
        assert payload["n"] == 3
        assert payload["lists_generated"] == 10
        assert payload["total_concepts"] == 5
        assert set(payload["micro"]) == {"precision", "recall", "f"}
        assert "wrote" in capsys.readouterr().out

    def test_sweep_csv_rows(self, cli_env, capsys):
        rc = main([
            "sweep", "--workspace", str(cli_env["ws"]),
            "--d_values", "8,12", "--window_values", "3",
            "--n_values", "3", "--iterations", "5",
        ])
        assert rc == 0
        lines = (cli_env["ws"] / "sweep.csv").read_text(encoding="utf-8").strip().split("\n")
        assert lines[0].startswith("d,window,n,variant")
        assert len(lines) == 3
        assert lines[1].split(",")[:4] == ["8", "3", "3", "none"]
        assert lines[2].split(",")[:4] == ["12", "3", "3", "none"]


class TestAugmentStage:
    def test_variant_none_copies_stream(self, cli_env, capsys):
        ws = cli_env["ws"]
        assert main(["augment", "--workspace", str(ws)]) == 0
        assert (ws / "stream.none.txt").read_bytes() == (ws / "stream.txt").read_bytes()
        assert (ws / "insertions.none.jsonl").read_text(encoding="utf-8") == ""
        assert "variant=none" in capsys.readouterr().out

    def test_variant_syno_logs_every_seed_occurrence(self, cli_env, capsys):
        ws = cli_env["ws"]
        rc = main([
            "augment", "--workspace", str(ws),
            "--variant", "syno", "--wordnet", str(cli_env["wndb"]),
        ])
        assert rc == 0
        orig = (ws / "stream.txt").read_text(encoding="utf-8").split()
        occurrences = sum(1 for t in orig if t in PLANTED_TERMS)
        log_lines = [
            json.loads(line)
            for line in (ws / "insertions.syno.jsonl").read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        assert len(log_lines) == occurrences
        augmented = (ws / "stream.syno.txt").read_text(encoding="utf-8").split()
        inserted = sum(len(r["before"]) + len(r["after"]) for r in log_lines)
        assert len(augmented) == len(orig) + inserted
        assert inserted == occurrences  # one partner lemma per planted pair

    def test_variant_syno_without_taxonomy_is_config_error(self, cli_env, capsys):
        rc = main(["augment", "--workspace", str(cli_env["ws"]), "--variant", "syno"])
        assert rc == 2
        assert "wordnet" in capsys.readouterr().err


class TestRerunDeterminism:
    def test_train_artifacts_are_byte_identical(self, cli_env, capsys, tmp_path):
        ws = tmp_path / "ws2"
        assert main([
            "preprocess", "--workspace", str(ws), "--corpus", str(cli_env["corpus"]),
        ]) == 0
        assert main(["train", "--workspace", str(ws)] + TRAIN_FLAGS) == 0
        first_out = capsys.readouterr().out
        assert "matrix built" in first_out
        model_bytes = (ws / "model.bin").read_bytes()
        vector_bytes = (ws / "vectors.txt").read_bytes()
        matrices = sorted(ws.glob("cooc_*.bin"))
        assert len(matrices) == 1
        matrix_bytes = matrices[0].read_bytes()

        assert main(["train", "--workspace", str(ws)] + TRAIN_FLAGS) == 0
        assert "matrix cached" in capsys.readouterr().out
        assert (ws / "model.bin").read_bytes() == model_bytes
        assert (ws / "vectors.txt").read_bytes() == vector_bytes
        assert matrices[0].read_bytes() == matrix_bytes

    def test_cooccur_reports_cache_hit(self, cli_env, capsys):
        ws = str(cli_env["ws"])
        assert main(["cooccur", "--workspace", ws, "--window", "4"]) == 0
        assert capsys.readouterr().out.startswith("wrote ")
        assert main(["cooccur", "--workspace", ws, "--window", "4"]) == 0
        assert capsys.readouterr().out.startswith("cached ")

    def test_cache_keyed_on_parameters(self, cli_env, capsys):
        # same stream, different weighting: a cache hit here would be wrong
        ws = str(cli_env["ws"])
        assert main([
            "cooccur", "--workspace", ws, "--window", "4", "--weighting_mode", "unit",
        ]) == 0
        assert capsys.readouterr().out.startswith("wrote ")


class TestConfigPrecedence:
    def test_config_file_beats_default_and_flag_beats_config(self, cli_env, tmp_path):
        cfg = tmp_path / "lexigrow.ini"
        cfg.write_text(
            "[train]\nd = 12\nwindow = 4\niterations = 5\n", encoding="utf-8"
        )
        ws = str(cli_env["ws"])
        assert main([
            "train", "--workspace", ws, "--config", str(cfg),
            "--model", "model_cfg.bin", "--vectors", "vectors_cfg.txt",
        ]) == 0
        assert load_model(cli_env["ws"] / "model_cfg.bin").d == 12

        assert main([
            "train", "--workspace", ws, "--config", str(cfg), "--d", "8",
            "--model", "model_flag.bin", "--vectors", "vectors_flag.txt",
        ]) == 0
        model = load_model(cli_env["ws"] / "model_flag.bin")
        assert model.d == 8
        assert model.config.window == 4  # untouched keys still come from the file

    def test_workspace_from_environment(self, cli_env, tmp_path, monkeypatch):
        env_ws = tmp_path / "envws"
        monkeypatch.setenv("LEXIGROW_WORKSPACE", str(env_ws))
        assert main(["preprocess", "--corpus", str(cli_env["corpus"])]) == 0
        assert (env_ws / "stream.txt").is_file()

    def test_workspace_flag_beats_environment(self, cli_env, tmp_path, monkeypatch):
        monkeypatch.setenv("LEXIGROW_WORKSPACE", str(tmp_path / "ignored"))
        flag_ws = tmp_path / "flagged"
        assert main([
            "preprocess", "--workspace", str(flag_ws), "--corpus", str(cli_env["corpus"]),
        ]) == 0
        assert (flag_ws / "stream.txt").is_file()
        assert not (tmp_path / "ignored" / "stream.txt").is_file()

    def test_missing_config_file(self, cli_env, capsys):
        rc = main([
            "cooccur", "--workspace", str(cli_env["ws"]), "--config", "/no/such.ini",
        ])
        assert rc == 2
        assert "config" in capsys.readouterr().err


class TestExitCodes:
    def test_missing_required_option(self, tmp_path, capsys):
        assert main(["preprocess", "--workspace", str(tmp_path)]) == 2
        assert "required" in capsys.readouterr().err

    def test_missing_corpus_path(self, tmp_path, capsys):
        rc = main([
            "preprocess", "--workspace", str(tmp_path),
            "--corpus", str(tmp_path / "nope.txt"),
        ])
        assert rc == 3
        assert "input error" in capsys.readouterr().err

    def test_unparseable_flag_value(self, cli_env, capsys):
        rc = main(["cooccur", "--workspace", str(cli_env["ws"]), "--window", "wide"])
        assert rc == 2
        assert "--window" in capsys.readouterr().err

    def test_query_n_zero(self, cli_env, capsys):
        rc = main(["query", "--workspace", str(cli_env["ws"]), "syn0a", "--n", "0"])
        assert rc == 2

    def test_query_unknown_seed(self, cli_env, capsys):
        rc = main(["query", "--workspace", str(cli_env["ws"]), "zzzz"])
        assert rc == 5
        assert "zzzz" in capsys.readouterr().err

    def test_training_divergence(self, cli_env, capsys):
        rc = main([
            "train", "--workspace", str(cli_env["ws"]),
            "--learning_rate", "9999", "--iterations", "5",
            "--model", "model_diverged.bin",
        ])
        assert rc == 4
        assert "numeric failure" in capsys.readouterr().err
        assert not (cli_env["ws"] / "model_diverged.bin").is_file()

    def test_sweep_unknown_variant(self, cli_env, capsys):
        rc = main([
            "sweep", "--workspace", str(cli_env["ws"]), "--variants", "bogus",
        ])
        assert rc == 2
        assert "bogus" in capsys.readouterr().err

    def test_no_command_prints_help(self, capsys):
        assert main([]) == 2
        assert "command" in capsys.readouterr().err

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_version_flag(self, capsys):
        assert main(["--version"]) == 0
        assert capsys.readouterr().out.startswith("lexigrow ")
