#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on one synthetic workload.

Both hot paths are timed on identical inputs: windowed co-occurrence
accumulation over a Zipf-distributed token stream, then full training for a
few iterations. Results are checked for bit parity before speedups are
reported, since the fallback exists to be interchangeable, not approximate.

Run from a checkout with the extension built:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --tokens 200000 --d 50 --iterations 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lexigrow.corpus import TokenStream
from lexigrow.embed import (
    TrainConfig,
    build_cooccurrence,
    build_vocab,
    kernel_backend,
    train,
)
from lexigrow.errors import ConfigError


def synthetic_stream(n_tokens: int, vocab_size: int, doc_len: int, rng_seed: int) -> TokenStream:
    rng = np.random.default_rng(rng_seed)
    weights = 1.0 / np.arange(1.0, vocab_size + 1.0)
    weights /= weights.sum()
    ids = rng.choice(vocab_size, size=n_tokens, p=weights)
    tokens = [f"w{int(i):05d}" for i in ids]
    return TokenStream(tokens=tokens, doc_boundaries=list(range(0, n_tokens, doc_len)))


def timed(fn, repeats: int):
    """Best wall time over ``repeats`` runs, plus the last result."""
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(
        description="benchmark the compiled kernels against the pure-Python fallback"
    )
    parser.add_argument("--tokens", type=int, default=50_000, help="stream length")
    parser.add_argument("--vocab", type=int, default=800, help="distinct word count")
    parser.add_argument("--doc-len", type=int, default=200, help="tokens per document")
    parser.add_argument("--window", type=int, default=8, help="co-occurrence window")
    parser.add_argument("--d", type=int, default=50, help="vector size")
    parser.add_argument("--iterations", type=int, default=3, help="training iterations")
    parser.add_argument("--repeats", type=int, default=3,
                        help="best-of repeats for the co-occurrence timing")
    args = parser.parse_args()

    try:
        kernel_backend("cython")
    except ConfigError as exc:
        print(f"cannot benchmark: {exc}")
        print("build the extension first: pip install -e . --no-build-isolation")
        return 1

    stream = synthetic_stream(args.tokens, args.vocab, args.doc_len, rng_seed=0)
    vocab = build_vocab(stream, min_count=5)
    config = TrainConfig(
        d=args.d, window=args.window, iterations=args.iterations, rng_seed=0
    )
    print(
        f"{len(stream.tokens)} tokens, vocabulary {len(vocab)}, "
        f"window {args.window}, d={args.d}, {args.iterations} iterations"
    )

    results = {}
    for backend in ("cython", "python"):
        t_cooc, matrix = timed(
            lambda b=backend: build_cooccurrence(
                stream, vocab, window=args.window, backend=b
            ),
            args.repeats,
        )
        t_train, model = timed(lambda b=backend, m=matrix: train(m, config, backend=b), 1)
        results[backend] = (t_cooc, t_train, matrix, model)
        print(
            f"{backend:>7}: cooccurrence {t_cooc:8.4f} s   "
            f"train {t_train:8.4f} s ({t_train / args.iterations:.4f} s/iteration)"
        )

    fast, slow = results["cython"], results["python"]
    matrix_parity = fast[2].entries == slow[2].entries
    model_parity = (
        np.array_equal(fast[3].W, slow[3].W)
        and np.array_equal(fast[3].Wt, slow[3].Wt)
        and fast[3].loss_history == slow[3].loss_history
    )
    print(
        f"parity: matrices {'identical' if matrix_parity else 'DIFFER'}, "
        f"models {'identical' if model_parity else 'DIFFER'}"
    )
    print(
        f"speedup: cooccurrence x{slow[0] / fast[0]:.1f}, "
        f"train x{slow[1] / fast[1]:.1f}"
    )
    return 0 if (matrix_parity and model_parity) else 1


if __name__ == "__main__":
    raise SystemExit(main())
