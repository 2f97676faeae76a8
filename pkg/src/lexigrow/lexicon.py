"""Concept/term tables, ground-truth filtering, and seed assignment.

The ground truth keeps, per concept, the stemmed unigram terms that are
frequent in the reference corpus; surface forms are retained alongside each
stem because thesaurus lookups later need unstemmed words.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import TokenStream, tokenize
from .errors import LexiconError
from .snowball import stem

__all__ = [
    "ConceptEntry",
    "GroundTruthLexicon",
    "SeedAssignment",
    "load_concepts",
    "build_ground_truth",
    "assign_seeds",
    "save_lexicon",
    "load_lexicon",
]

SEED_MODES = ("leave-one-out", "first-term", "random")


@dataclass
class ConceptEntry:
    """One concept with its raw layman terms, in first-seen order."""

    cui: str
    concept_name: str
    terms: list[str] = field(default_factory=list)


@dataclass
class GroundTruthLexicon:
    """Stemmed, frequency-filtered term sets keyed by concept id.

    ``surfaces[cui][stem]`` lists the raw terms that collapsed onto ``stem``,
    sorted; ``concept_names[cui]`` is the concept's display name.
    """

    concepts: dict[str, frozenset[str]]
    concept_names: dict[str, str]
    surfaces: dict[str, dict[str, list[str]]]
    provenance: str = ""

    @property
    def total_terms(self) -> int:
        return sum(len(t) for t in self.concepts.values())

    def validate(self, min_terms: int = 2) -> None:
        for cui, terms in self.concepts.items():
            if len(terms) < min_terms:
                raise LexiconError(f"concept {cui} has {len(terms)} terms, need {min_terms}")
            for t in terms:
                if any(c.isspace() for c in t):
                    raise LexiconError(f"concept {cui} term {t!r} is not a single token")


@dataclass
class SeedAssignment:
    """Seed/target splits: one (cui, seed, targets) triple per evaluation unit."""

    pairs: list[tuple[str, str, frozenset[str]]]
    mode: str = "leave-one-out"

    def validate(self) -> None:
        for cui, seed, targets in self.pairs:
            if seed in targets:
                raise LexiconError(f"concept {cui}: seed {seed!r} appears in its own targets")
            if not targets:
                raise LexiconError(f"concept {cui}: empty target set for seed {seed!r}")


def load_concepts(path: "str | Path", header: bool = False) -> list[ConceptEntry]:
    """Read a `cui \\t concept_name \\t term` table, one term per row.

    Rows sharing a cui are grouped; duplicate (cui, term) rows collapse.
    """
    path = Path(path)
    if not path.is_file():
        raise LexiconError(f"concept table not found: {path}")
    entries: dict[str, ConceptEntry] = {}
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if header and lineno == 1:
                continue
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3 or not parts[0] or not parts[2]:
                raise LexiconError(f"{path.name}:{lineno}: expected cui<TAB>concept_name<TAB>term")
            cui, name, term = parts
            entry = entries.get(cui)
            if entry is None:
                entry = entries[cui] = ConceptEntry(cui=cui, concept_name=name)
            if (cui, term) not in seen:
                seen.add((cui, term))
                entry.terms.append(term)
    return list(entries.values())


def _concept_name_stem(name: str) -> "str | None":
    # Only a single-token concept name can collide with unigram term stems.
    toks = tokenize(name)
    return stem(toks[0]) if len(toks) == 1 else None


def build_ground_truth(
    entries: Iterable[ConceptEntry],
    corpus: TokenStream,
    min_freq: int = 100,
    min_terms: int = 2,
    drop_concept_name: bool = True,
    provenance: str = "",
) -> GroundTruthLexicon:
    """Apply the ground-truth filters to raw concept entries.

    Per concept: multi-word terms are dropped, survivors are stemmed and
    deduplicated, stems equal to the stemmed concept name are dropped (when
    ``drop_concept_name``), stems with corpus frequency <= ``min_freq`` are
    dropped, and finally concepts left with fewer than ``min_terms`` stems
    are dropped entirely.
    """
    if min_freq < 0:
        raise ValueError("min_freq must be >= 0")
    if min_terms < 2:
        raise ValueError("min_terms must be >= 2")
    freq = Counter(corpus.tokens)
    concepts: dict[str, frozenset[str]] = {}
    names: dict[str, str] = {}
    surfaces: dict[str, dict[str, list[str]]] = {}
    for entry in entries:
        name_stem = _concept_name_stem(entry.concept_name) if drop_concept_name else None
        kept: dict[str, list[str]] = {}
        for raw in entry.terms:
            term = raw.strip().lower()
            if not term or any(c.isspace() for c in term):
                continue
            s = stem(term)
            if name_stem is not None and s == name_stem:
                continue
            if freq[s] <= min_freq:
                continue
            kept.setdefault(s, []).append(term)
        if len(kept) < min_terms:
            continue
        concepts[entry.cui] = frozenset(kept)
        names[entry.cui] = entry.concept_name
        surfaces[entry.cui] = {s: sorted(raws) for s, raws in kept.items()}
    return GroundTruthLexicon(
        concepts=concepts, concept_names=names, surfaces=surfaces, provenance=provenance
    )


def assign_seeds(
    lexicon: GroundTruthLexicon,
    mode: str = "leave-one-out",
    rng_seed: "int | None" = None,
) -> SeedAssignment:
    """Split each concept's terms into seed and targets.

    leave-one-out emits one pair per term (every term serves as seed once),
    first-term seeds each concept with its lexicographically first stem, and
    random picks one seeded-random seed per concept (``rng_seed`` required).
    """
    if mode not in SEED_MODES:
        raise ValueError(f"unknown seed mode {mode!r}; expected one of {SEED_MODES}")
    if mode == "random" and rng_seed is None:
        raise ValueError("random seed mode requires rng_seed")
    rng = random.Random(rng_seed)
    pairs: list[tuple[str, str, frozenset[str]]] = []
    for cui in sorted(lexicon.concepts):
        terms = sorted(lexicon.concepts[cui])
        if mode == "leave-one-out":
            seeds: Sequence[str] = terms
        elif mode == "first-term":
            seeds = terms[:1]
        else:
            seeds = [rng.choice(terms)]
        for seed in seeds:
            pairs.append((cui, seed, frozenset(t for t in terms if t != seed)))
    assignment = SeedAssignment(pairs=pairs, mode=mode)
    assignment.validate()
    return assignment


def save_lexicon(lexicon: GroundTruthLexicon, path: "str | Path", config: "dict | None" = None) -> None:
    doc = {
        "provenance": lexicon.provenance,
        "concepts": {
            cui: {
                "concept": lexicon.concept_names.get(cui, ""),
                "terms": sorted(lexicon.concepts[cui]),
                "surfaces": lexicon.surfaces.get(cui, {}),
            }
            for cui in sorted(lexicon.concepts)
        },
    }
    if config is not None:
        doc["config"] = config
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_lexicon(path: "str | Path") -> GroundTruthLexicon:
    path = Path(path)
    if not path.is_file():
        raise LexiconError(f"lexicon file not found: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        concepts = {
            cui: frozenset(body["terms"]) for cui, body in doc["concepts"].items()
        }
        names = {cui: body.get("concept", "") for cui, body in doc["concepts"].items()}
        surfaces = {
            cui: {s: list(raws) for s, raws in body.get("surfaces", {}).items()}
            for cui, body in doc["concepts"].items()
        }
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise LexiconError(f"malformed lexicon file {path}: {exc}") from None
    return GroundTruthLexicon(
        concepts=concepts,
        concept_names=names,
        surfaces=surfaces,
        provenance=doc.get("provenance", ""),
    )


def save_assignments(assignment: SeedAssignment, path: "str | Path", config: "dict | None" = None) -> None:
    doc = {
        "mode": assignment.mode,
        "pairs": [
            {"concept": cui, "seed": seed, "targets": sorted(targets)}
            for cui, seed, targets in assignment.pairs
        ],
    }
    if config is not None:
        doc["config"] = config
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_assignments(path: "str | Path") -> SeedAssignment:
    path = Path(path)
    if not path.is_file():
        raise LexiconError(f"seed assignment file not found: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        pairs = [
            (row["concept"], row["seed"], frozenset(row["targets"]))
            for row in doc["pairs"]
        ]
        assignment = SeedAssignment(pairs=pairs, mode=doc["mode"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise LexiconError(f"malformed seed assignment file {path}: {exc}") from None
    assignment.validate()
    return assignment
