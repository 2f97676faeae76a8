"""Cosine ranking of vocabulary words against a seed vector."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from lexigrow.embed import WordVectors
from lexigrow.errors import SeedNotFoundError, ZeroVectorError


@dataclass(frozen=True)
class CandidateList:
    """Top-n words by cosine similarity to a seed, best first."""

    seed: str
    candidates: tuple[tuple[str, float], ...]
    n: int

    def terms(self) -> tuple[str, ...]:
        return tuple(t for t, _ in self.candidates)

    def validate(self) -> None:
        if len(self.candidates) > self.n:
            raise ValueError(f"{len(self.candidates)} candidates exceed n={self.n}")
        prev = 1.0
        for term, score in self.candidates:
            if term == self.seed:
                raise ValueError(f"seed {self.seed!r} appears as its own candidate")
            if not -1.0 <= score <= 1.0:
                raise ValueError(f"score {score!r} for {term!r} outside [-1, 1]")
            if score > prev:
                raise ValueError("candidate scores are not non-increasing")
            prev = score


def cosine(v1, v2) -> float:
    """Cosine similarity (v1 . v2) / (|v1| |v2|), clamped into [-1, 1]."""
    v1 = np.asarray(v1, dtype=np.float64)
    v2 = np.asarray(v2, dtype=np.float64)
    if v1.shape != v2.shape:
        raise ValueError(f"dimension mismatch: {v1.shape} vs {v2.shape}")
    n1 = math.sqrt(float(v1 @ v1))
    n2 = math.sqrt(float(v2 @ v2))
    if n1 == 0.0 or n2 == 0.0:
        raise ZeroVectorError("cosine similarity is undefined for a zero vector")
    return min(1.0, max(-1.0, float(v1 @ v2) / (n1 * n2)))


def top_candidates(
    vectors: WordVectors,
    seed: str,
    n: int = 10,
    exclusions=(),
) -> CandidateList:
    """Score every word against the seed and keep the best n.

    The seed itself and any exclusions are never scored; words with a zero
    vector are skipped. Ties break lexicographically so results are
    deterministic.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if seed not in vectors:
        raise SeedNotFoundError(f"seed {seed!r} is not in the vector table")
    seed_vec = vectors.vector(seed)
    seed_norm = math.sqrt(float(seed_vec @ seed_vec))
    if seed_norm == 0.0:
        raise ZeroVectorError(f"seed {seed!r} has a zero vector")

    skip = set(exclusions)
    skip.add(seed)
    norms = np.sqrt(np.einsum("ij,ij->i", vectors.matrix, vectors.matrix))
    dots = vectors.matrix @ seed_vec

    scored: list[tuple[float, str]] = []
    for idx, word in enumerate(vectors.words):
        if word in skip or norms[idx] == 0.0:
            continue
        score = min(1.0, max(-1.0, float(dots[idx]) / (float(norms[idx]) * seed_norm)))
        scored.append((-score, word))
    scored.sort()
    top = tuple((word, -neg) for neg, word in scored[:n])
    result = CandidateList(seed=seed, candidates=top, n=n)
    result.validate()
    return result


def candidates_tsv(clist: CandidateList) -> str:
    """TSV rendering: `seed <tab> rank <tab> term <tab> score` per line."""
    lines = [
        f"{clist.seed}\t{rank}\t{term}\t{score!r}"
        for rank, (term, score) in enumerate(clist.candidates, start=1)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def candidates_json(clist: CandidateList) -> str:
    """JSON rendering with 1-based ranks."""
    payload = {
        "seed": clist.seed,
        "n": clist.n,
        "candidates": [
            {"rank": rank, "term": term, "score": score}
            for rank, (term, score) in enumerate(clist.candidates, start=1)
        ],
    }
    return json.dumps(payload, indent=1)
