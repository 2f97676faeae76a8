"""Command-line pipeline: preprocess, build-lexicon, augment, cooccur,
train, query, evaluate, sweep.

Stage boundaries are files inside a workspace directory, so later stages
resume from earlier artifacts without recomputation. Every option lives in
an INI config section and is overridable by a flag of the same name; the
workspace root may also come from LEXIGROW_WORKSPACE.

Exit codes: 0 success, 2 configuration error, 3 input/IO error, 4 numeric
failure, 5 seed not found.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import shutil
import sys
from pathlib import Path

from lexigrow import __version__
from lexigrow import augment as augment_mod
from lexigrow import corpus as corpus_mod
from lexigrow import embed as embed_mod
from lexigrow import evaluation as eval_mod
from lexigrow import lexicon as lexicon_mod
from lexigrow import query as query_mod
from lexigrow import wordnet as wordnet_mod
from lexigrow.augment import SPLIT_MODES
from lexigrow.config import ConfigFile, Option, resolve_options, workspace_dir
from lexigrow.embed import TrainConfig, VECTOR_MODES, WEIGHTING_MODES
from lexigrow.errors import (
    ConfigError,
    CorpusError,
    LexigrowError,
    QueryError,
    SeedNotFoundError,
    TrainingDivergedError,
)
from lexigrow.evaluation import VARIANTS, VARIANT_RELATIONS
from lexigrow.lexicon import SEED_MODES

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INPUT = 3
EXIT_NUMERIC = 4
EXIT_NOT_FOUND = 5

_TRAIN_OPTIONS = [
    Option("train", "d", "int", 400, "vector size"),
    Option("train", "window", "int", 30, "co-occurrence window"),
    Option("train", "iterations", "int", 50, "training iterations"),
    Option("train", "learning_rate", "float", 0.05, "initial learning rate"),
    Option("train", "x_max", "float", 100.0, "loss-weighting cutoff"),
    Option("train", "alpha", "float", 0.75, "loss-weighting exponent"),
    Option("train", "rng_seed", "int", 0, "training RNG seed"),
    Option("train", "weighting_mode", "str", "inverse-distance",
           "co-occurrence weighting", choices=WEIGHTING_MODES),
    Option("train", "min_count", "int", 5, "vocabulary frequency floor"),
    Option("train", "threads", "int", 1, "training threads (>1 drops bit-reproducibility)"),
    Option("train", "backend", "str", "auto", "kernel backend",
           choices=("auto", "cython", "python")),
    Option("train", "vector_mode", "str", "combined", "exported vector form",
           choices=VECTOR_MODES),
]


def _artifact(ws: Path, value: str) -> Path:
    """Workspace-relative unless the configured path is absolute."""
    p = Path(value)
    return p if p.is_absolute() else ws / p


def _echo(command: str, opts: dict) -> dict:
    options = {
        k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(opts.items())
    }
    return {"tool": f"lexigrow {__version__}", "command": command, "options": options}


def _write_meta(path: Path, echo: dict) -> None:
    with open(f"{path}.meta.json", "w", encoding="utf-8") as fh:
        json.dump(echo, fh, indent=1)
        fh.write("\n")


def _file_digest(path: Path) -> str:
    if not path.is_file():
        raise CorpusError(f"token stream not found: {path}")
    return hashlib.sha256(path.read_bytes()).hexdigest()[:16]


def _backend(name: str):
    return embed_mod.kernel_backend(None if name == "auto" else name)


PREPROCESS_OPTIONS = [
    Option("paths", "corpus", "str", required=True,
           help="corpus file (one document per line) or directory of .txt files"),
    Option("paths", "stream", "str", "stream.txt", "token stream artifact"),
    Option("corpus", "stopwords", "str", None, "extra stopword file, one word per line"),
    Option("corpus", "min_len", "int", 3, "minimum token length kept"),
]


def cmd_preprocess(args, cfg) -> int:
    opts = resolve_options(PREPROCESS_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    docs = list(corpus_mod.read_corpus(opts["corpus"]))
    stopwords = corpus_mod.StopwordSet()
    if opts["stopwords"]:
        extra = corpus_mod.load_stopword_file(opts["stopwords"])
        stopwords.domain = frozenset(stopwords.domain) | extra
    stream = corpus_mod.preprocess_corpus(docs, stopwords, min_len=opts["min_len"])
    out = _artifact(ws, opts["stream"])
    corpus_mod.write_token_stream(stream, out, config=_echo("preprocess", opts))
    print(
        f"wrote {out}: {stream.n_documents} documents, "
        f"{len(stream.tokens)} tokens, {len(set(stream.tokens))} distinct"
    )
    return EXIT_OK


BUILD_LEXICON_OPTIONS = [
    Option("paths", "lexicon", "str", required=True,
           help="ground-truth TSV: concept id, concept name, term"),
    Option("paths", "stream", "str", "stream.txt", "token stream artifact"),
    Option("paths", "lexicon_json", "str", "lexicon.json", "filtered lexicon artifact"),
    Option("paths", "seeds", "str", "seeds.json", "seed assignment artifact"),
    Option("lexicon", "header", "bool", False, "skip the first TSV line"),
    Option("lexicon", "min_freq", "int", 100, "corpus frequency floor for terms"),
    Option("lexicon", "min_terms", "int", 2, "minimum surviving terms per concept"),
    Option("lexicon", "drop_concept_name", "bool", True,
           "drop terms that stem to the concept name"),
    Option("lexicon", "seed_mode", "str", "leave-one-out", "seed selection",
           choices=SEED_MODES),
    Option("lexicon", "rng_seed", "int", None, "seed for seed_mode=random"),
]


def cmd_build_lexicon(args, cfg) -> int:
    opts = resolve_options(BUILD_LEXICON_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    entries = lexicon_mod.load_concepts(opts["lexicon"], header=opts["header"])
    stream = corpus_mod.read_token_stream(_artifact(ws, opts["stream"]))
    lex = lexicon_mod.build_ground_truth(
        entries,
        stream,
        min_freq=opts["min_freq"],
        min_terms=opts["min_terms"],
        drop_concept_name=opts["drop_concept_name"],
        provenance=str(opts["lexicon"]),
    )
    lex.validate(min_terms=opts["min_terms"])
    assignment = lexicon_mod.assign_seeds(
        lex, mode=opts["seed_mode"], rng_seed=opts["rng_seed"]
    )
    echo = _echo("build-lexicon", opts)
    lex_path = _artifact(ws, opts["lexicon_json"])
    seeds_path = _artifact(ws, opts["seeds"])
    lexicon_mod.save_lexicon(lex, lex_path, config=echo)
    lexicon_mod.save_assignments(assignment, seeds_path, config=echo)
    print(
        f"wrote {lex_path} ({len(lex.concepts)} concepts, {lex.total_terms} terms) "
        f"and {seeds_path} ({len(assignment.pairs)} seed pairs, {assignment.mode})"
    )
    return EXIT_OK


AUGMENT_OPTIONS = [
    Option("paths", "stream", "str", "stream.txt", "input token stream artifact"),
    Option("paths", "lexicon_json", "str", "lexicon.json", "filtered lexicon artifact"),
    Option("paths", "wordnet", "str", None, "taxonomy database directory"),
    Option("paths", "ic", "str", None,
           "information-content file (computed from the stream when unset)"),
    Option("paths", "augmented_stream", "str", None,
           "output stream (default stream.<variant>.txt)"),
    Option("paths", "insertion_log", "str", None,
           "output log (default insertions.<variant>.jsonl)"),
    Option("augment", "variant", "str", "none", "enrichment relation",
           choices=VARIANTS),
    Option("augment", "split_mode", "str", "contiguous", "half-split strategy",
           choices=SPLIT_MODES),
    Option("augment", "pos", "strlist", ("n",), "parts of speech, comma-separated"),
]


def cmd_augment(args, cfg) -> int:
    opts = resolve_options(AUGMENT_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    variant = opts["variant"]
    stream_path = _artifact(ws, opts["stream"])
    out = _artifact(ws, opts["augmented_stream"] or f"stream.{variant}.txt")
    log_path = _artifact(ws, opts["insertion_log"] or f"insertions.{variant}.jsonl")

    if variant == "none":
        if not stream_path.is_file():
            raise CorpusError(f"token stream not found: {stream_path}")
        shutil.copyfile(stream_path, out)
        augment_mod.write_insertion_log([], log_path)
        print(f"wrote {out} unchanged (variant=none) and empty {log_path}")
        return EXIT_OK

    if not opts["wordnet"]:
        raise ConfigError(f"[paths] wordnet is required for variant={variant}")
    stream = corpus_mod.read_token_stream(stream_path)
    db = wordnet_mod.load_wordnet(opts["wordnet"], pos_set=opts["pos"])
    ic_source = opts["ic"] if opts["ic"] else stream
    ic = wordnet_mod.information_content(db, ic_source)
    lex = lexicon_mod.load_lexicon(_artifact(ws, opts["lexicon_json"]))
    plans = augment_mod.build_plans(
        lex, db, ic, VARIANT_RELATIONS[variant],
        split_mode=opts["split_mode"], pos_set=opts["pos"],
    )
    augmented = augment_mod.augment_stream(stream, plans)
    corpus_mod.write_token_stream(augmented.tokens, out, config=_echo("augment", opts))
    augment_mod.write_insertion_log(augmented.insertion_log, log_path)
    inserted = sum(r.inserted_count for r in augmented.insertion_log)
    print(
        f"wrote {out}: {len(augmented.insertion_log)} seed occurrences augmented, "
        f"{inserted} tokens inserted; log at {log_path}"
    )
    return EXIT_OK


COOC_OPTIONS = [
    Option("paths", "stream", "str", "stream.txt", "input token stream artifact"),
    Option("paths", "cooccurrence", "str", None,
           "output matrix file (default derived from stream hash and parameters)"),
    Option("train", "window", "int", 30, "co-occurrence window"),
    Option("train", "weighting_mode", "str", "inverse-distance",
           "co-occurrence weighting", choices=WEIGHTING_MODES),
    Option("train", "min_count", "int", 5, "vocabulary frequency floor"),
    Option("train", "shards", "int", 1, "document shards to accumulate"),
    Option("train", "backend", "str", "auto", "kernel backend",
           choices=("auto", "cython", "python")),
]


def _matrix_cache_key(digest: str, opts: dict) -> dict:
    return {
        "stream_sha256": digest,
        "window": opts["window"],
        "weighting_mode": opts["weighting_mode"],
        "min_count": opts["min_count"],
    }


def _matrix_path(ws: Path, opts: dict, digest: str) -> Path:
    if opts.get("cooccurrence"):
        return _artifact(ws, opts["cooccurrence"])
    tag = "unit" if opts["weighting_mode"] == "unit" else "invd"
    return ws / f"cooc_{digest}_w{opts['window']}_{tag}_mc{opts['min_count']}.bin"


def _ensure_matrix(ws: Path, opts: dict, echo: dict):
    """Load the cached matrix when its sidecar matches, else build and save."""
    stream_path = _artifact(ws, opts["stream"])
    digest = _file_digest(stream_path)
    key = _matrix_cache_key(digest, opts)
    path = _matrix_path(ws, opts, digest)
    sidecar = Path(f"{path}.meta.json")
    if path.is_file() and sidecar.is_file():
        try:
            meta = json.loads(sidecar.read_text(encoding="utf-8")).get("meta", {})
        except json.JSONDecodeError:
            meta = None
        if meta and all(meta.get(k) == v for k, v in key.items()):
            return embed_mod.load_cooccurrence(path), path, True

    stream = corpus_mod.read_token_stream(stream_path)
    vocab = embed_mod.build_vocab(stream, min_count=opts["min_count"])
    matrix = embed_mod.build_cooccurrence(
        stream,
        vocab,
        window=opts["window"],
        weighting_mode=opts["weighting_mode"],
        shards=opts.get("shards", 1),
        backend=_backend(opts.get("backend", "auto")),
    )
    embed_mod.save_cooccurrence(path, matrix, extra_meta={**key, "echo": echo})
    return matrix, path, False


def cmd_cooccur(args, cfg) -> int:
    opts = resolve_options(COOC_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    matrix, path, cached = _ensure_matrix(ws, opts, _echo("cooccur", opts))
    state = "cached" if cached else "wrote"
    print(
        f"{state} {path}: {matrix.nnz} entries, vocabulary {len(matrix.vocab)}, "
        f"window {matrix.window}, {matrix.weighting_mode}"
    )
    return EXIT_OK


TRAIN_CMD_OPTIONS = [
    Option("paths", "stream", "str", "stream.txt", "input token stream artifact"),
    Option("paths", "cooccurrence", "str", None,
           "matrix cache file (default derived from stream hash and parameters)"),
    Option("paths", "model", "str", "model.bin", "binary model artifact"),
    Option("paths", "vectors", "str", "vectors.txt", "text vector artifact"),
    Option("train", "shards", "int", 1, "document shards to accumulate"),
] + _TRAIN_OPTIONS


def cmd_train(args, cfg) -> int:
    opts = resolve_options(TRAIN_CMD_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    echo = _echo("train", opts)
    matrix, cooc_path, cached = _ensure_matrix(ws, opts, echo)
    config = TrainConfig(
        d=opts["d"],
        window=opts["window"],
        iterations=opts["iterations"],
        learning_rate=opts["learning_rate"],
        x_max=opts["x_max"],
        alpha=opts["alpha"],
        rng_seed=opts["rng_seed"],
        weighting_mode=opts["weighting_mode"],
    )
    model = embed_mod.train(
        matrix, config, threads=opts["threads"], backend=_backend(opts["backend"])
    )
    model_path = _artifact(ws, opts["model"])
    vectors_path = _artifact(ws, opts["vectors"])
    embed_mod.save_model(model_path, model, extra_meta=echo)
    vectors = embed_mod.model_vectors(model, mode=opts["vector_mode"])
    embed_mod.save_vectors(vectors_path, vectors)
    _write_meta(vectors_path, echo)
    print(
        f"matrix {'cached' if cached else 'built'} at {cooc_path} ({matrix.nnz} entries); "
        f"trained {len(matrix.vocab)} x {config.d} vectors on {model.backend} backend, "
        f"loss {model.loss_history[0]:.6f} -> {model.loss_history[-1]:.6f}; "
        f"wrote {model_path} and {vectors_path}"
    )
    return EXIT_OK


QUERY_OPTIONS = [
    Option("paths", "vectors", "str", "vectors.txt", "text vector artifact"),
    Option("paths", "model", "str", None, "binary model artifact (overrides vectors)"),
    Option("query", "n", "int", 10, "candidate list size"),
    Option("query", "format", "str", "tsv", "output format", choices=("tsv", "json")),
    Option("query", "exclusions", "strlist", (), "terms to omit, comma-separated"),
    Option("train", "vector_mode", "str", "combined", "vector form for binary models",
           choices=VECTOR_MODES),
]


def _load_vectors(ws: Path, opts: dict) -> embed_mod.WordVectors:
    if opts.get("model"):
        model = embed_mod.load_model(_artifact(ws, opts["model"]))
        return embed_mod.model_vectors(model, mode=opts["vector_mode"])
    return embed_mod.load_vectors(_artifact(ws, opts["vectors"]))


def cmd_query(args, cfg) -> int:
    opts = resolve_options(QUERY_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    if opts["n"] < 1:
        raise ConfigError(f"[query] n must be >= 1, got {opts['n']}")
    vectors = _load_vectors(ws, opts)
    clist = query_mod.top_candidates(
        vectors, args.seed, n=opts["n"], exclusions=opts["exclusions"]
    )
    if opts["format"] == "json":
        print(query_mod.candidates_json(clist))
    else:
        sys.stdout.write(query_mod.candidates_tsv(clist))
    return EXIT_OK


EVALUATE_OPTIONS = [
    Option("paths", "vectors", "str", "vectors.txt", "text vector artifact"),
    Option("paths", "model", "str", None, "binary model artifact (overrides vectors)"),
    Option("paths", "lexicon_json", "str", "lexicon.json", "filtered lexicon artifact"),
    Option("paths", "seeds", "str", "seeds.json", "seed assignment artifact"),
    Option("paths", "report", "str", "report.json", "evaluation report artifact"),
    Option("eval", "n", "int", 10, "candidate list size"),
    Option("train", "vector_mode", "str", "combined", "vector form for binary models",
           choices=VECTOR_MODES),
]


def cmd_evaluate(args, cfg) -> int:
    opts = resolve_options(EVALUATE_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    if opts["n"] < 1:
        raise ConfigError(f"[eval] n must be >= 1, got {opts['n']}")
    vectors = _load_vectors(ws, opts)
    lex = lexicon_mod.load_lexicon(_artifact(ws, opts["lexicon_json"]))
    assignment = lexicon_mod.load_assignments(_artifact(ws, opts["seeds"]))
    report = eval_mod.evaluate(
        vectors, lex, assignment, n=opts["n"], config=_echo("evaluate", opts)
    )
    out = _artifact(ws, opts["report"])
    out.write_text(eval_mod.report_json(report) + "\n", encoding="utf-8")
    micro_p, micro_r, micro_f = report.micro
    macro_p, macro_r, macro_f = report.macro
    print(
        f"wrote {out}: micro P/R/F {micro_p:.4f}/{micro_r:.4f}/{micro_f:.4f}, "
        f"macro P/R/F {macro_p:.4f}/{macro_r:.4f}/{macro_f:.4f}, "
        f"MRR {report.mrr:.4f}, NumCon {report.num_con}/{report.total_concepts}, "
        f"{report.lists_generated} lists, {len(report.skipped)} seeds skipped"
    )
    return EXIT_OK


SWEEP_OPTIONS = [
    Option("paths", "stream", "str", "stream.txt", "input token stream artifact"),
    Option("paths", "lexicon_json", "str", "lexicon.json", "filtered lexicon artifact"),
    Option("paths", "seeds", "str", "seeds.json", "seed assignment artifact"),
    Option("paths", "wordnet", "str", None, "taxonomy directory (for enrichment variants)"),
    Option("paths", "ic", "str", None, "information-content file"),
    Option("paths", "sweep_csv", "str", "sweep.csv", "CSV report artifact"),
    Option("sweep", "d_values", "intlist", (100, 200, 300, 400), "vector sizes"),
    Option("sweep", "window_values", "intlist", (10, 20, 30, 40), "window sizes"),
    Option("sweep", "n_values", "intlist", (10,), "candidate list sizes"),
    Option("sweep", "variants", "strlist", ("none",), "enrichment variants"),
    Option("augment", "split_mode", "str", "contiguous", "half-split strategy",
           choices=SPLIT_MODES),
    Option("augment", "pos", "strlist", ("n",), "parts of speech"),
] + [o for o in _TRAIN_OPTIONS if o.key not in ("d", "window")]


def cmd_sweep(args, cfg) -> int:
    opts = resolve_options(SWEEP_OPTIONS, args, cfg)
    ws = workspace_dir(args, cfg)
    for variant in opts["variants"]:
        if variant not in VARIANTS:
            raise ConfigError(
                f"[sweep] variants: {variant!r} is not one of {', '.join(VARIANTS)}"
            )
    stream = corpus_mod.read_token_stream(_artifact(ws, opts["stream"]))
    lex = lexicon_mod.load_lexicon(_artifact(ws, opts["lexicon_json"]))
    assignment = lexicon_mod.load_assignments(_artifact(ws, opts["seeds"]))

    db = ic = None
    if any(v != "none" for v in opts["variants"]):
        if not opts["wordnet"]:
            raise ConfigError("[paths] wordnet is required for enrichment variants")
        db = wordnet_mod.load_wordnet(opts["wordnet"], pos_set=opts["pos"])
        ic = wordnet_mod.information_content(
            db, opts["ic"] if opts["ic"] else stream
        )

    base = TrainConfig(
        d=opts["d_values"][0],
        window=opts["window_values"][0],
        iterations=opts["iterations"],
        learning_rate=opts["learning_rate"],
        x_max=opts["x_max"],
        alpha=opts["alpha"],
        rng_seed=opts["rng_seed"],
        weighting_mode=opts["weighting_mode"],
    )
    grid = [
        (d, w, n, v)
        for v in opts["variants"]
        for d in opts["d_values"]
        for w in opts["window_values"]
        for n in opts["n_values"]
    ]
    points = eval_mod.sweep(
        stream,
        lex,
        assignment,
        grid,
        db=db,
        ic=ic,
        base_config=base,
        min_count=opts["min_count"],
        split_mode=opts["split_mode"],
        pos_set=opts["pos"],
        threads=opts["threads"],
        backend=_backend(opts["backend"]),
        vector_mode=opts["vector_mode"],
    )
    out = _artifact(ws, opts["sweep_csv"])
    out.write_text(eval_mod.sweep_csv(points), encoding="utf-8")
    _write_meta(out, _echo("sweep", opts))
    failures = 0
    for pt in points:
        label = f"d={pt.d} window={pt.window} n={pt.n} variant={pt.variant}"
        if pt.report is None:
            failures += 1
            print(f"{label}: ERROR {pt.error}", file=sys.stderr)
        else:
            print(f"{label}: macro F {pt.report.macro[2]:.4f}, MRR {pt.report.mrr:.4f}")
    print(f"wrote {out}: {len(points) - failures}/{len(points)} grid points")
    return EXIT_OK if failures < len(points) else EXIT_INPUT


COMMANDS = {
    "preprocess": (cmd_preprocess, PREPROCESS_OPTIONS, (),
                   "tokenize, normalize, and stem the corpus into a token stream"),
    "build-lexicon": (cmd_build_lexicon, BUILD_LEXICON_OPTIONS, (),
                      "filter the ground-truth lexicon and assign seed terms"),
    "augment": (cmd_augment, AUGMENT_OPTIONS, (),
                "insert ranked taxonomy neighbors around seed occurrences"),
    "cooccur": (cmd_cooccur, COOC_OPTIONS, (),
                "build (or reuse) the co-occurrence matrix"),
    "train": (cmd_train, TRAIN_CMD_OPTIONS, (),
              "train vectors on the stream's co-occurrence matrix"),
    "query": (cmd_query, QUERY_OPTIONS, ("seed",),
              "rank candidate synonyms for one seed term"),
    "evaluate": (cmd_evaluate, EVALUATE_OPTIONS, (),
                 "score candidate lists against the ground truth"),
    "sweep": (cmd_sweep, SWEEP_OPTIONS, (),
              "train and evaluate a (d, window, n, variant) grid"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, metavar="FILE",
                        help="INI configuration file")
    common.add_argument("--workspace", default=None, metavar="DIR",
                        help="artifact directory (also via LEXIGROW_WORKSPACE)")
    parser = argparse.ArgumentParser(
        prog="lexigrow",
        description="Discover layman synonyms with corpus-trained word vectors.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"lexigrow {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    for name, (func, options, positionals, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, parents=[common], allow_abbrev=False)
        for positional in positionals:
            p.add_argument(positional)
        for opt in options:
            p.add_argument(
                f"--{opt.key}",
                dest=opt.key,
                default=None,
                metavar=opt.kind.upper(),
                help=f"{opt.help} [{opt.section}] (default: {opt.default})",
            )
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    if getattr(args, "command", None) is None:
        parser.print_help(sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = ConfigFile.load(args.config) if args.config else None
        return args.func(args, cfg)
    except ConfigError as exc:
        print(f"lexigrow: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SeedNotFoundError as exc:
        print(f"lexigrow: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (TrainingDivergedError, QueryError) as exc:
        print(f"lexigrow: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (LexigrowError, OSError) as exc:
        print(f"lexigrow: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"lexigrow: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
