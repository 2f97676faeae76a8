"""Synthetic corpus with planted synonym pairs.

Documents come in twins: the second of each pair is the first with every
occurrence of one planted word swapped for its partner. The two words
therefore see exactly the same context distribution without ever co-occurring
with each other, which is the situation distributional similarity is supposed
to recover.

Token names end in digits or bare letters so the stemmer leaves them alone;
the generator asserts this, keeping surface forms and stems interchangeable
everywhere in the tests.
"""

from __future__ import annotations

import numpy as np

from lexigrow.corpus import TokenStream
from lexigrow.lexicon import GroundTruthLexicon
from lexigrow.snowball import stem

from wndb_fixture import SynsetSpec

N_CONCEPTS = 5
FILLERS_PER_CONCEPT = 8
SHARED_FILLERS = 10


def planted_pairs() -> list[tuple[str, str]]:
    return [(f"syn{k}a", f"syn{k}b") for k in range(N_CONCEPTS)]


def planted_lexicon() -> GroundTruthLexicon:
    concepts = {}
    names = {}
    surfaces = {}
    for k, (a, b) in enumerate(planted_pairs()):
        cui = f"C{k:03d}"
        concepts[cui] = frozenset({a, b})
        names[cui] = f"planted concept {k}"
        surfaces[cui] = {a: [a], b: [b]}
    return GroundTruthLexicon(
        concepts=concepts, concept_names=names, surfaces=surfaces, provenance="planted"
    )


def planted_wndb_specs() -> list[SynsetSpec]:
    """One synset per planted pair, all under a shared root."""
    specs = [SynsetSpec("root", ["entity"])]
    for k, (a, b) in enumerate(planted_pairs()):
        specs.append(SynsetSpec(f"pair{k}", [a, b], hypernyms=["root"]))
    return specs


def make_corpus(docs_per_concept: int = 110, slots: int = 6, rng_seed: int = 13) -> TokenStream:
    """Build the stream; ~48 tokens per document, two documents per draw.

    ``docs_per_concept`` counts twin pairs, so the total document count is
    2 * docs_per_concept * N_CONCEPTS.
    """
    rng = np.random.default_rng(rng_seed)
    shared = [f"com{j}" for j in range(SHARED_FILLERS)]
    tokens: list[str] = []
    boundaries: list[int] = []
    for k, (a, b) in enumerate(planted_pairs()):
        fillers = [f"c{k}fil{j}" for j in range(FILLERS_PER_CONCEPT)]
        for _ in range(docs_per_concept):
            doc: list[str] = []
            for _slot in range(slots):
                doc.extend(rng.choice(fillers, size=4).tolist())
                doc.append(a)
                doc.extend(rng.choice(shared, size=3).tolist())
            twin = [b if t == a else t for t in doc]
            for d in (doc, twin):
                boundaries.append(len(tokens))
                tokens.extend(d)
    for t in set(tokens):
        assert stem(t) == t, f"fixture token {t!r} is not stem-stable"
    stream = TokenStream(tokens=tokens, doc_boundaries=boundaries)
    stream.validate()
    return stream
