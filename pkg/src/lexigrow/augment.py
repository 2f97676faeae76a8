"""Stream augmentation: inject ranked relational terms around seed occurrences.

For each seed, related lemmas are ranked by Resnik similarity (descending,
ties lexicographic) and split into halves; every occurrence of the seed in
the stream gets the first half inserted immediately before it and the second
half immediately after. The insertion log makes the rewrite exactly
reversible.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .corpus import TokenStream
from .errors import AugmentError
from .lexicon import GroundTruthLexicon
from .snowball import stem
from .wordnet import InformationContent, WordNetDb, related_lemmas, resnik

__all__ = [
    "AugmentationPlan",
    "AugmentedStream",
    "build_plan",
    "build_plans",
    "augment_stream",
    "remove_insertions",
    "write_insertion_log",
    "read_insertion_log",
    "SPLIT_MODES",
]

SPLIT_MODES = ("contiguous", "round-robin")


@dataclass
class AugmentationPlan:
    """Ranked relational lemmas for one seed, split into insertion halves.

    ``ranked`` holds (lemma, similarity) pairs in insertion order; ``x1`` and
    ``x2`` are the surface-form halves (stemming happens at insertion time).
    """

    seed: str
    relation: str
    ranked: list[tuple[str, float]]
    x1: list[str]
    x2: list[str]
    split_mode: str = "contiguous"

    def validate(self) -> None:
        lemmas = [lemma for lemma, _ in self.ranked]
        if sorted(self.x1 + self.x2) != sorted(lemmas):
            raise AugmentError(f"plan for {self.seed!r}: halves do not partition the ranking")
        if set(self.x1) & set(self.x2):
            raise AugmentError(f"plan for {self.seed!r}: halves overlap")
        if len(self.x1) - len(self.x2) not in (0, 1):
            raise AugmentError(f"plan for {self.seed!r}: halves unbalanced")


@dataclass
class InsertionRecord:
    """One seed occurrence: where the insertion landed and what went in."""

    position: int            # seed token index in the original stream
    augmented_start: int     # index of the first inserted token in the output
    seed: str                # matched plan key (stemmed seed)
    before: list[str]
    after: list[str]

    @property
    def inserted_count(self) -> int:
        return len(self.before) + len(self.after)


@dataclass
class AugmentedStream:
    tokens: TokenStream
    insertion_log: list[InsertionRecord] = field(default_factory=list)


def _split(ranked: Sequence[str], mode: str) -> tuple[list[str], list[str]]:
    if mode == "contiguous":
        cut = (len(ranked) + 1) // 2
        return list(ranked[:cut]), list(ranked[cut:])
    x1 = list(ranked[0::2])
    x2 = list(ranked[1::2])
    return x1, x2


def build_plan(
    seed: str,
    relation: str,
    db: WordNetDb,
    ic: InformationContent,
    split_mode: str = "contiguous",
    pos_set: Sequence[str] = ("n",),
) -> AugmentationPlan:
    """Rank ``seed``'s related lemmas by similarity and split them.

    ``seed`` is an unstemmed surface lemma (the thesaurus knows nothing about
    stems). An unknown seed or an empty relation set yields a plan with empty
    halves, which makes augmentation the identity for that seed.
    """
    if split_mode not in SPLIT_MODES:
        raise ValueError(f"unknown split mode {split_mode!r}; expected one of {SPLIT_MODES}")
    lemmas = related_lemmas(db, seed, relation, pos_set)
    ranked = sorted(
        ((lemma, resnik(db, ic, seed, lemma, pos_set)) for lemma in lemmas),
        key=lambda pair: (-pair[1], pair[0]),
    )
    order = [lemma for lemma, _ in ranked]
    x1, x2 = _split(order, split_mode)
    plan = AugmentationPlan(
        seed=seed, relation=relation, ranked=ranked, x1=x1, x2=x2, split_mode=split_mode
    )
    plan.validate()
    return plan


def build_plans(
    lexicon: GroundTruthLexicon,
    db: WordNetDb,
    ic: InformationContent,
    relation: str,
    split_mode: str = "contiguous",
    pos_set: Sequence[str] = ("n",),
) -> dict[str, AugmentationPlan]:
    """One plan per seed STEM in the lexicon.

    A stem may cover several surface forms; their relational lemmas are
    unioned with similarity = max over the surfaces, so the plan is
    independent of surface enumeration order.
    """
    plans: dict[str, AugmentationPlan] = {}
    for cui in sorted(lexicon.concepts):
        for s in sorted(lexicon.concepts[cui]):
            if s in plans:
                continue
            surfaces = lexicon.surfaces.get(cui, {}).get(s, [s])
            best: dict[str, float] = {}
            for surface in surfaces:
                for lemma in related_lemmas(db, surface, relation, pos_set):
                    sim = resnik(db, ic, surface, lemma, pos_set)
                    if lemma not in best or sim > best[lemma]:
                        best[lemma] = sim
            ranked = sorted(best.items(), key=lambda pair: (-pair[1], pair[0]))
            order = [lemma for lemma, _ in ranked]
            x1, x2 = _split(order, split_mode)
            plan = AugmentationPlan(
                seed=s, relation=relation, ranked=ranked, x1=x1, x2=x2, split_mode=split_mode
            )
            plan.validate()
            plans[s] = plan
    return plans


def augment_stream(
    stream: TokenStream,
    plans: Mapping[str, AugmentationPlan],
    matcher: "Callable[[str], str] | None" = None,
) -> AugmentedStream:
    """Insert each matched seed's halves around every occurrence, single pass.

    ``matcher`` maps a token to its plan key. The default matches tokens that
    already equal a plan key (the pipeline's streams are stemmed) and falls
    back to stemming the token, so raw text views match too. Inserted tokens
    are stemmed and never re-matched.
    """

    def default_matcher(token: str) -> str:
        return token if token in plans else stem(token)

    match = matcher or default_matcher
    out_tokens: list[str] = []
    log: list[InsertionRecord] = []
    new_boundaries: list[int] = []
    spans = list(stream.document_spans())
    position = 0
    for start, end in spans:
        new_boundaries.append(len(out_tokens))
        for token in stream.tokens[start:end]:
            plan = plans.get(match(token))
            if plan is None or (not plan.x1 and not plan.x2):
                out_tokens.append(token)
            else:
                before = [stem(w) for w in plan.x1]
                after = [stem(w) for w in plan.x2]
                log.append(
                    InsertionRecord(
                        position=position,
                        augmented_start=len(out_tokens),
                        seed=plan.seed,
                        before=before,
                        after=after,
                    )
                )
                out_tokens.extend(before)
                out_tokens.append(token)
                out_tokens.extend(after)
            position += 1
    augmented = TokenStream(tokens=out_tokens, doc_boundaries=new_boundaries)
    augmented.validate()
    return AugmentedStream(tokens=augmented, insertion_log=log)


def remove_insertions(augmented: AugmentedStream) -> TokenStream:
    """Exact inverse of :func:`augment_stream` using the insertion log."""
    tokens = augmented.tokens.tokens
    records = sorted(augmented.insertion_log, key=lambda r: r.augmented_start)
    out: list[str] = []
    cursor = 0
    for rec in records:
        if rec.augmented_start < cursor:
            raise AugmentError("insertion log entries overlap")
        out.extend(tokens[cursor : rec.augmented_start])
        seed_at = rec.augmented_start + len(rec.before)
        inserted = tokens[rec.augmented_start : seed_at] + tokens[seed_at + 1 : seed_at + 1 + len(rec.after)]
        if inserted != rec.before + rec.after:
            raise AugmentError(f"augmented stream does not match log at {rec.augmented_start}")
        out.append(tokens[seed_at])
        cursor = seed_at + 1 + len(rec.after)
    out.extend(tokens[cursor:])

    # Boundaries shift back by the count of inserted tokens before each one.
    starts = [r.augmented_start for r in records]
    cumulative = [0]
    for rec in records:
        cumulative.append(cumulative[-1] + rec.inserted_count)
    boundaries = []
    for b in augmented.tokens.doc_boundaries:
        boundaries.append(b - cumulative[bisect_left(starts, b)])
    restored = TokenStream(tokens=out, doc_boundaries=boundaries)
    restored.validate()
    return restored


def write_insertion_log(log: Iterable[InsertionRecord], path: "str | Path") -> None:
    """JSON lines: one record per insertion."""
    with open(path, "w", encoding="utf-8") as fh:
        for rec in log:
            fh.write(
                json.dumps(
                    {
                        "position": rec.position,
                        "augmented_start": rec.augmented_start,
                        "seed": rec.seed,
                        "before": rec.before,
                        "after": rec.after,
                    },
                    sort_keys=True,
                )
            )
            fh.write("\n")


def read_insertion_log(path: "str | Path") -> list[InsertionRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
                records.append(
                    InsertionRecord(
                        position=doc["position"],
                        augmented_start=doc["augmented_start"],
                        seed=doc["seed"],
                        before=list(doc["before"]),
                        after=list(doc["after"]),
                    )
                )
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise AugmentError(f"{Path(path).name}:{lineno}: bad log record ({exc})") from None
    return records
