"""Co-occurrence accumulation and GloVe training.

The heavy loops live in a compiled extension (lexigrow._kernels) with a
pure-Python twin (lexigrow._kernels_py). Both produce bit-identical float64
results in sequential mode; the environment variable LEXIGROW_KERNELS
("cython", "python", or "auto") picks the backend at call time.
"""

from __future__ import annotations

import dataclasses
import json
import math
import os
import struct
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from lexigrow.corpus import TokenStream
from lexigrow.errors import (
    ConfigError,
    CorpusError,
    FormatError,
    SeedNotFoundError,
    TrainingDivergedError,
)

KERNEL_ENV_VAR = "LEXIGROW_KERNELS"
WEIGHTING_MODES = ("inverse-distance", "unit")
VECTOR_MODES = ("combined", "main")

MODEL_MAGIC = b"LXGM"
MODEL_VERSION = 1
COOC_RECORD = struct.Struct("<IId")


def kernel_backend(name: str | None = None):
    """Resolve a kernel backend module by name.

    None defers to the LEXIGROW_KERNELS environment variable; "auto" (the
    default) prefers the compiled extension and falls back to pure Python.
    """
    if name is None:
        name = os.environ.get(KERNEL_ENV_VAR, "auto").strip().lower() or "auto"
    if name == "python":
        from lexigrow import _kernels_py

        return _kernels_py
    if name == "cython":
        try:
            from lexigrow import _kernels
        except ImportError as exc:
            raise ConfigError(f"compiled kernels requested but not importable: {exc}")
        return _kernels
    if name == "auto":
        try:
            from lexigrow import _kernels

            return _kernels
        except ImportError:
            from lexigrow import _kernels_py

            return _kernels_py
    raise ConfigError(
        f"unknown kernel backend {name!r}; expected 'cython', 'python', or 'auto'"
    )


@dataclass(frozen=True)
class Vocabulary:
    """Dense word <-> index mapping ordered by descending frequency."""

    words: tuple[str, ...]
    frequencies: tuple[int, ...]
    min_count: int
    index: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.index:
            object.__setattr__(
                self, "index", {w: i for i, w in enumerate(self.words)}
            )

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def id_of(self, word: str) -> int:
        """Index of word, or -1 when out of vocabulary."""
        return self.index.get(word, -1)

    def word_of(self, idx: int) -> str:
        return self.words[idx]

    def validate(self) -> None:
        if len(self.words) != len(set(self.words)):
            raise CorpusError("vocabulary contains duplicate words")
        if len(self.frequencies) != len(self.words):
            raise CorpusError("vocabulary word/frequency length mismatch")
        for word, freq in zip(self.words, self.frequencies):
            if freq < self.min_count:
                raise CorpusError(
                    f"vocabulary word {word!r} has frequency {freq} "
                    f"below min_count {self.min_count}"
                )


def build_vocab(stream: TokenStream, min_count: int = 5) -> Vocabulary:
    """Index every token with frequency >= min_count.

    Order is descending frequency with lexicographic tie-break, so indices
    are stable across runs.
    """
    if min_count < 1:
        raise ValueError(f"min_count must be >= 1, got {min_count}")
    counts = Counter(stream.tokens)
    kept = [(w, c) for w, c in counts.items() if c >= min_count]
    if not kept:
        raise CorpusError(
            f"no token reaches min_count={min_count}; vocabulary would be empty"
        )
    kept.sort(key=lambda wc: (-wc[1], wc[0]))
    return Vocabulary(
        words=tuple(w for w, _ in kept),
        frequencies=tuple(c for _, c in kept),
        min_count=min_count,
    )


@dataclass
class CooccurrenceMatrix:
    """Sparse symmetric co-occurrence counts, stored canonically as i <= j."""

    entries: dict[tuple[int, int], float]
    window: int
    weighting_mode: str
    vocab: Vocabulary

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def get(self, i: int, j: int) -> float:
        if i > j:
            i, j = j, i
        return self.entries.get((i, j), 0.0)

    def row(self, i: int) -> dict[int, float]:
        """Full symmetric row for word index i (its co-occurrence vector)."""
        out: dict[int, float] = {}
        for (a, b), w in self.entries.items():
            if a == i:
                out[b] = w
            elif b == i:
                out[a] = w
        return out

    def items(self):
        """Canonical entries in sorted (i, j) order."""
        return sorted(self.entries.items())

    def validate(self) -> None:
        if self.window < 1:
            raise ValueError(f"window must be >= 1, got {self.window}")
        if self.weighting_mode not in WEIGHTING_MODES:
            raise ValueError(f"unknown weighting mode {self.weighting_mode!r}")
        size = len(self.vocab)
        for (i, j), w in self.entries.items():
            if not 0 <= i <= j < size:
                raise ValueError(f"entry ({i}, {j}) outside vocabulary of size {size}")
            if not (w > 0.0 and math.isfinite(w)):
                raise ValueError(f"entry ({i}, {j}) has invalid weight {w!r}")


def _shard_ranges(n_docs: int, shards: int) -> list[tuple[int, int]]:
    """Split n_docs into at most `shards` contiguous runs of documents."""
    shards = max(1, min(shards, n_docs))
    base, rem = divmod(n_docs, shards)
    ranges = []
    start = 0
    for s in range(shards):
        size = base + (1 if s < rem else 0)
        ranges.append((start, start + size))
        start += size
    return ranges


def build_cooccurrence(
    stream: TokenStream,
    vocab: Vocabulary,
    window: int,
    weighting_mode: str = "inverse-distance",
    shards: int = 1,
    backend=None,
) -> CooccurrenceMatrix:
    """Accumulate windowed co-occurrence weights over the stream.

    Each in-vocabulary pair within `window` positions of each other, inside
    one document, contributes 1/distance (inverse-distance mode) or 1 (unit
    mode). Out-of-vocabulary tokens still occupy positions, so distances
    stay faithful to the underlying text. Sharding splits on document
    boundaries and merges shard maps by summation in shard order.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if weighting_mode not in WEIGHTING_MODES:
        raise ValueError(
            f"unknown weighting mode {weighting_mode!r}; expected one of {WEIGHTING_MODES}"
        )
    if shards < 1:
        raise ValueError(f"shards must be >= 1, got {shards}")
    stream.validate()
    kern = kernel_backend(backend) if backend is None or isinstance(backend, str) else backend

    ids = np.fromiter(
        (vocab.id_of(t) for t in stream.tokens), dtype=np.int32, count=len(stream.tokens)
    )
    bounds = list(stream.doc_boundaries) + [len(stream.tokens)]
    unit = weighting_mode == "unit"

    entries: dict[tuple[int, int], float] = {}
    for lo, hi in _shard_ranges(stream.n_documents, shards):
        tok_lo, tok_hi = bounds[lo], bounds[hi]
        shard_bounds = np.asarray(
            [b - tok_lo for b in bounds[lo : hi + 1]], dtype=np.int64
        )
        si, sj, sw = kern.accumulate_cooccurrence(
            ids[tok_lo:tok_hi], shard_bounds, window, unit
        )
        if not entries:
            entries = {
                (int(a), int(b)): float(w) for a, b, w in zip(si, sj, sw)
            }
        else:
            for a, b, w in zip(si, sj, sw):
                key = (int(a), int(b))
                entries[key] = entries.get(key, 0.0) + float(w)
    return CooccurrenceMatrix(
        entries=entries, window=window, weighting_mode=weighting_mode, vocab=vocab
    )


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters for GloVe training.

    Defaults follow the reference implementation for everything the target
    setting leaves open (x_max, alpha, learning rate, iteration count); d
    and window carry the tuned values 400 and 30.
    """

    d: int = 400
    window: int = 30
    iterations: int = 50
    learning_rate: float = 0.05
    x_max: float = 100.0
    alpha: float = 0.75
    rng_seed: int = 0
    weighting_mode: str = "inverse-distance"

    def validate(self) -> None:
        if self.d < 1:
            raise ConfigError(f"vector size d must be >= 1, got {self.d}")
        if self.window < 1:
            raise ConfigError(f"window must be >= 1, got {self.window}")
        if self.iterations < 1:
            raise ConfigError(f"iterations must be >= 1, got {self.iterations}")
        if not self.learning_rate > 0:
            raise ConfigError(f"learning_rate must be > 0, got {self.learning_rate}")
        if not self.x_max > 0:
            raise ConfigError(f"x_max must be > 0, got {self.x_max}")
        if not 0.0 < self.alpha <= 1.0:
            raise ConfigError(f"alpha must be in (0, 1], got {self.alpha}")
        if self.weighting_mode not in WEIGHTING_MODES:
            raise ConfigError(
                f"unknown weighting mode {self.weighting_mode!r}; "
                f"expected one of {WEIGHTING_MODES}"
            )


@dataclass
class EmbeddingModel:
    """Trained GloVe parameters plus training metadata.

    Treated as immutable once training returns; query layers only read it.
    """

    vocab: Vocabulary
    W: np.ndarray
    Wt: np.ndarray
    b: np.ndarray
    bt: np.ndarray
    config: TrainConfig
    loss_history: tuple[float, ...]
    backend: str = ""

    @property
    def d(self) -> int:
        return self.W.shape[1]

    def validate(self) -> None:
        size = len(self.vocab)
        if self.W.shape != (size, self.d) or self.Wt.shape != (size, self.d):
            raise ValueError("vector array shapes do not match the vocabulary")
        if self.b.shape != (size,) or self.bt.shape != (size,):
            raise ValueError("bias array shapes do not match the vocabulary")
        if self.d < 1:
            raise ValueError("vector size must be >= 1")
        for arr in (self.W, self.Wt, self.b, self.bt):
            if not np.all(np.isfinite(arr)):
                raise ValueError("model contains non-finite values")


def _directed_entries(matrix: CooccurrenceMatrix):
    """Expand canonical entries into directed (i, j) training pairs.

    The mirrored (j, i) entry immediately follows its canonical twin, so the
    directed order is deterministic given the canonical order.
    """
    ei: list[int] = []
    ej: list[int] = []
    xs: list[float] = []
    for (i, j), x in matrix.items():
        ei.append(i)
        ej.append(j)
        xs.append(x)
        if i != j:
            ei.append(j)
            ej.append(i)
            xs.append(x)
    return (
        np.asarray(ei, dtype=np.int32),
        np.asarray(ej, dtype=np.int32),
        np.asarray(xs, dtype=np.float64),
    )


def weighting(x, x_max: float, alpha: float):
    """GloVe loss weight f(x) = (x / x_max)^alpha for x < x_max, else 1."""
    x = np.asarray(x, dtype=np.float64)
    return np.where(x < x_max, np.power(x / x_max, alpha), 1.0)


def train(
    matrix: CooccurrenceMatrix,
    config: TrainConfig,
    threads: int = 1,
    backend=None,
) -> EmbeddingModel:
    """Fit GloVe vectors to the matrix by AdaGrad stochastic updates.

    Minimizes sum over directed entries of f(X_ij) (w_i . wt_j + b_i + bt_j
    - log X_ij)^2. Parameters start uniform in [-0.5/d, 0.5/d] drawn from
    rng_seed; the entry visit order is reshuffled each iteration from the
    same generator. Sequential mode (threads=1) is bit-reproducible; with
    threads > 1 updates race benignly and only approximate determinism.
    """
    config.validate()
    if not matrix.entries:
        raise ValueError("cannot train on an empty co-occurrence matrix")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    kern = kernel_backend(backend) if backend is None or isinstance(backend, str) else backend

    ei, ej, xs = _directed_entries(matrix)
    fx = weighting(xs, config.x_max, config.alpha)
    logx = np.log(xs)

    size = len(matrix.vocab)
    d = config.d
    rng = np.random.default_rng(config.rng_seed)
    W = (rng.random((size, d)) - 0.5) / d
    Wt = (rng.random((size, d)) - 0.5) / d
    b = (rng.random(size) - 0.5) / d
    bt = (rng.random(size) - 0.5) / d
    gW = np.ones((size, d))
    gWt = np.ones((size, d))
    gb = np.ones(size)
    gbt = np.ones(size)

    parallel = threads > 1 and getattr(kern, "SUPPORTS_PARALLEL", False)
    history: list[float] = []
    for iteration in range(config.iterations):
        order = rng.permutation(len(xs)).astype(np.int64, copy=False)
        if parallel:
            cost = kern.train_epoch_parallel(
                W, Wt, b, bt, gW, gWt, gb, gbt, ei, ej, logx, fx, order,
                config.learning_rate, threads,
            )
        else:
            cost = kern.train_epoch(
                W, Wt, b, bt, gW, gWt, gb, gbt, ei, ej, logx, fx, order,
                config.learning_rate,
            )
        if not math.isfinite(cost):
            raise TrainingDivergedError(
                f"non-finite loss at iteration {iteration + 1}; "
                "the learning rate is probably too high"
            )
        history.append(cost / len(xs))

    model = EmbeddingModel(
        vocab=matrix.vocab,
        W=W,
        Wt=Wt,
        b=b,
        bt=bt,
        config=config,
        loss_history=tuple(history),
        backend=getattr(kern, "BACKEND_NAME", "unknown"),
    )
    model.validate()
    return model


def loss_and_gradient(model: EmbeddingModel, matrix: CooccurrenceMatrix, subset=None):
    """Exact loss and analytic gradients over directed entries.

    `subset` is an iterable of directed (i, j) pairs; None means the full
    directed expansion of the matrix. Returns (loss, grads) where grads
    holds dense arrays keyed "W", "Wt", "b", "bt". Exposed for validating
    the stochastic trainer against finite differences.
    """
    if subset is None:
        ei, ej, _ = _directed_entries(matrix)
        pairs = list(zip(ei.tolist(), ej.tolist()))
    else:
        pairs = [(int(i), int(j)) for i, j in subset]

    cfg = model.config
    loss = 0.0
    gW = np.zeros_like(model.W)
    gWt = np.zeros_like(model.Wt)
    gb = np.zeros_like(model.b)
    gbt = np.zeros_like(model.bt)
    for i, j in pairs:
        x = matrix.get(i, j)
        if x <= 0.0:
            raise ValueError(f"subset pair ({i}, {j}) has no co-occurrence entry")
        fx = float(weighting(x, cfg.x_max, cfg.alpha))
        diff = float(model.W[i] @ model.Wt[j]) + model.b[i] + model.bt[j] - math.log(x)
        loss += fx * diff * diff
        scale = 2.0 * fx * diff
        gW[i] += scale * model.Wt[j]
        gWt[j] += scale * model.W[i]
        gb[i] += scale
        gbt[j] += scale
    return loss, {"W": gW, "Wt": gWt, "b": gb, "bt": gbt}


def combined_vector(model: EmbeddingModel, word: str, mode: str = "combined") -> np.ndarray:
    """Vector for one word: w + wt (combined, the default) or w alone."""
    if mode not in VECTOR_MODES:
        raise ValueError(f"unknown vector mode {mode!r}; expected one of {VECTOR_MODES}")
    idx = model.vocab.id_of(word)
    if idx < 0:
        raise SeedNotFoundError(f"word {word!r} is not in the model vocabulary")
    if mode == "combined":
        return model.W[idx] + model.Wt[idx]
    return model.W[idx].copy()


@dataclass
class WordVectors:
    """Plain word -> vector table, the query layer's input."""

    words: tuple[str, ...]
    matrix: np.ndarray
    index: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {w: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    @property
    def d(self) -> int:
        return self.matrix.shape[1]

    def vector(self, word: str) -> np.ndarray:
        idx = self.index.get(word)
        if idx is None:
            raise SeedNotFoundError(f"word {word!r} has no vector")
        return self.matrix[idx]


def model_vectors(model: EmbeddingModel, mode: str = "combined") -> WordVectors:
    """Collapse a model into one vector per word."""
    if mode not in VECTOR_MODES:
        raise ValueError(f"unknown vector mode {mode!r}; expected one of {VECTOR_MODES}")
    matrix = model.W + model.Wt if mode == "combined" else model.W.copy()
    return WordVectors(words=model.vocab.words, matrix=matrix)


def save_vectors(path, vectors: WordVectors) -> None:
    """Write the text vector format: one `word v1 v2 ... vd` line per word.

    Values are printed with repr, the shortest string that parses back to
    the same float64, so the text round trip is exact.
    """
    with open(path, "w", encoding="utf-8") as fh:
        for i, word in enumerate(vectors.words):
            row = " ".join(repr(float(v)) for v in vectors.matrix[i])
            fh.write(f"{word} {row}\n")


def load_vectors(path) -> WordVectors:
    """Read the text vector format back into a WordVectors table."""
    words: list[str] = []
    rows: list[list[float]] = []
    d = -1
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split(" ")
            if len(parts) < 2:
                raise FormatError(f"{path}:{lineno}: expected `word v1 ... vd`")
            try:
                row = [float(p) for p in parts[1:]]
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-numeric vector component")
            if d < 0:
                d = len(row)
            elif len(row) != d:
                raise FormatError(
                    f"{path}:{lineno}: vector has {len(row)} components, expected {d}"
                )
            words.append(parts[0])
            rows.append(row)
    if not words:
        raise FormatError(f"{path}: no vectors found")
    if len(set(words)) != len(words):
        raise FormatError(f"{path}: duplicate words")
    return WordVectors(words=tuple(words), matrix=np.asarray(rows, dtype=np.float64))


def save_model(path, model: EmbeddingModel, extra_meta: dict | None = None) -> None:
    """Write the binary model format (bit-exact round trip).

    Layout: 4-byte magic, little-endian uint32 version, uint32 header
    length, UTF-8 JSON header, then the W, Wt, b, bt float64 arrays raw in
    little-endian C order.
    """
    header = {
        "words": list(model.vocab.words),
        "frequencies": list(model.vocab.frequencies),
        "min_count": model.vocab.min_count,
        "config": dataclasses.asdict(model.config),
        "loss_history": list(model.loss_history),
        "backend": model.backend,
        "d": model.d,
    }
    if extra_meta:
        header["meta"] = extra_meta
    blob = json.dumps(header).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(MODEL_MAGIC)
        fh.write(struct.pack("<I", MODEL_VERSION))
        fh.write(struct.pack("<I", len(blob)))
        fh.write(blob)
        for arr in (model.W, model.Wt, model.b, model.bt):
            fh.write(np.ascontiguousarray(arr, dtype="<f8").tobytes())


def load_model(path) -> EmbeddingModel:
    """Read the binary model format, validating magic, version, and length."""
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != MODEL_MAGIC:
        raise FormatError(f"{path}: not a model file (bad magic)")
    version = struct.unpack_from("<I", data, 4)[0]
    if version != MODEL_VERSION:
        raise FormatError(
            f"{path}: unsupported model version {version}, expected {MODEL_VERSION}"
        )
    header_len = struct.unpack_from("<I", data, 8)[0]
    if len(data) < 12 + header_len:
        raise FormatError(f"{path}: truncated header")
    try:
        header = json.loads(data[12 : 12 + header_len].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: unreadable header: {exc}")
    try:
        words = tuple(header["words"])
        vocab = Vocabulary(
            words=words,
            frequencies=tuple(header["frequencies"]),
            min_count=header["min_count"],
        )
        config = TrainConfig(**header["config"])
        loss_history = tuple(header["loss_history"])
        backend_name = header.get("backend", "")
        d = header["d"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{path}: malformed header: {exc}")

    size = len(vocab)
    offset = 12 + header_len
    expected = 8 * (2 * size * d + 2 * size)
    if len(data) - offset < expected:
        raise FormatError(f"{path}: truncated model arrays")
    if len(data) - offset > expected:
        raise FormatError(f"{path}: trailing bytes after model arrays")

    def take(count, shape):
        nonlocal offset
        arr = np.frombuffer(data, dtype="<f8", count=count, offset=offset)
        offset += 8 * count
        return arr.reshape(shape).copy()

    W = take(size * d, (size, d))
    Wt = take(size * d, (size, d))
    b = take(size, (size,))
    bt = take(size, (size,))
    model = EmbeddingModel(
        vocab=vocab, W=W, Wt=Wt, b=b, bt=bt,
        config=config, loss_history=loss_history, backend=backend_name,
    )
    model.validate()
    return model


def _cooc_sidecar_path(path) -> str:
    return f"{path}.meta.json"


def save_cooccurrence(path, matrix: CooccurrenceMatrix, extra_meta: dict | None = None) -> None:
    """Write fixed-width binary records plus a JSON sidecar.

    Each record is `<IId`: two little-endian uint32 word indices (canonical
    i <= j) and one float64 weight. The sidecar `<path>.meta.json` carries
    the vocabulary and build parameters needed to reload the matrix.
    """
    items = matrix.items()
    with open(path, "wb") as fh:
        for (i, j), w in items:
            fh.write(COOC_RECORD.pack(i, j, w))
    sidecar = {
        "format": "cooccurrence",
        "version": 1,
        "window": matrix.window,
        "weighting_mode": matrix.weighting_mode,
        "records": len(items),
        "vocab": {
            "words": list(matrix.vocab.words),
            "frequencies": list(matrix.vocab.frequencies),
            "min_count": matrix.vocab.min_count,
        },
    }
    if extra_meta:
        sidecar["meta"] = extra_meta
    with open(_cooc_sidecar_path(path), "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=1)
        fh.write("\n")


def load_cooccurrence(path) -> CooccurrenceMatrix:
    """Read a binary co-occurrence file and its sidecar back."""
    sidecar_path = _cooc_sidecar_path(path)
    try:
        with open(sidecar_path, encoding="utf-8") as fh:
            sidecar = json.load(fh)
    except FileNotFoundError:
        raise FormatError(f"{sidecar_path}: sidecar not found")
    except json.JSONDecodeError as exc:
        raise FormatError(f"{sidecar_path}: unreadable sidecar: {exc}")
    try:
        if sidecar["format"] != "cooccurrence" or sidecar["version"] != 1:
            raise FormatError(
                f"{sidecar_path}: unsupported format "
                f"{sidecar.get('format')!r} v{sidecar.get('version')!r}"
            )
        window = sidecar["window"]
        weighting_mode = sidecar["weighting_mode"]
        records = sidecar["records"]
        vocab = Vocabulary(
            words=tuple(sidecar["vocab"]["words"]),
            frequencies=tuple(sidecar["vocab"]["frequencies"]),
            min_count=sidecar["vocab"]["min_count"],
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{sidecar_path}: malformed sidecar: {exc}")

    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) % COOC_RECORD.size != 0:
        raise FormatError(f"{path}: truncated record data")
    if len(blob) // COOC_RECORD.size != records:
        raise FormatError(
            f"{path}: {len(blob) // COOC_RECORD.size} records on disk, "
            f"sidecar declares {records}"
        )
    size = len(vocab)
    entries: dict[tuple[int, int], float] = {}
    for n, (i, j, w) in enumerate(COOC_RECORD.iter_unpack(blob), start=1):
        if not i <= j < size:
            raise FormatError(f"{path}: record {n} has invalid indices ({i}, {j})")
        if not (w > 0.0 and math.isfinite(w)):
            raise FormatError(f"{path}: record {n} has invalid weight {w!r}")
        if (i, j) in entries:
            raise FormatError(f"{path}: record {n} duplicates entry ({i}, {j})")
        entries[(i, j)] = w
    matrix = CooccurrenceMatrix(
        entries=entries, window=window, weighting_mode=weighting_mode, vocab=vocab
    )
    matrix.validate()
    return matrix
