"""Scoring candidate lists against the ground-truth lexicon.

Denominator conventions, chosen to reproduce the worked 30/100, 30/75,
15/20, 15/25 example exactly:

- micro precision divides by candidates actually emitted (generated lists
  only; seeds without a vector produce no list and no denominator mass);
- micro recall divides by the target total over every assignment pair,
  including pairs whose seed never produced a list;
- macro precision divides by concepts attempted (at least one list);
- macro recall divides by all ground-truth concepts;
- MRR averages over generated lists, scoring 0 when a list has no true
  synonym.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field

from lexigrow.augment import augment_stream, build_plans
from lexigrow.corpus import TokenStream
from lexigrow.embed import (
    CooccurrenceMatrix,
    EmbeddingModel,
    TrainConfig,
    WordVectors,
    build_cooccurrence,
    build_vocab,
    model_vectors,
    train,
)
from lexigrow.errors import EvalError, LexigrowError, SeedNotFoundError, ZeroVectorError
from lexigrow.lexicon import GroundTruthLexicon, SeedAssignment
from lexigrow.query import CandidateList, top_candidates

VARIANTS = ("none", "syno", "hypo", "hyper")
VARIANT_RELATIONS = {"syno": "synonym", "hypo": "hyponym", "hyper": "hypernym"}

CSV_HEADER = "d,window,n,variant,P_micro,R_micro,F_micro,P_macro,R_macro,F_macro,MRR,NumCon"


@dataclass(frozen=True)
class EvalInput:
    """Assignments plus the candidate lists generated for them."""

    assignments: SeedAssignment
    candidate_lists: dict[tuple[str, str], CandidateList]
    total_concepts: int
    total_synonyms: int

    def pair_targets(self) -> dict[tuple[str, str], frozenset]:
        return {(cui, seed): targets for cui, seed, targets in self.assignments.pairs}

    def validate(self) -> None:
        keys = set(self.pair_targets())
        for pair in self.candidate_lists:
            if pair not in keys:
                raise EvalError(f"candidate list for unknown pair {pair!r}")
        attempted = {cui for cui, _ in self.candidate_lists}
        if self.total_concepts < len(attempted):
            raise EvalError(
                f"total_concepts={self.total_concepts} below the "
                f"{len(attempted)} concepts attempted"
            )
        if self.total_synonyms < 0:
            raise EvalError("total_synonyms must be >= 0")


def _f_score(p: float, r: float) -> float:
    if p + r == 0.0:
        return 0.0
    f = 2.0 * p * r / (p + r)
    # the harmonic mean lies in [min(p, r), max(p, r)]; clamp rounding drift
    # (p == r == 0.2 yields 0.20000000000000004 in floats) so it stays there
    return min(max(f, min(p, r)), max(p, r))


def _true_matches(clist: CandidateList, targets: frozenset) -> list[int]:
    """1-based ranks of true synonyms in the list, in rank order."""
    return [
        rank
        for rank, (term, _) in enumerate(clist.candidates, start=1)
        if term in targets
    ]


def micro_metrics(inp: EvalInput) -> tuple[float, float, float]:
    """Candidate-level precision, recall, and harmonic F.

    Each emitted candidate counts once per list it appears in, both in the
    precision denominator and (when it stem-matches a target of its pair)
    in the numerator.
    """
    targets = inp.pair_targets()
    found = 0
    emitted = 0
    for pair, clist in inp.candidate_lists.items():
        emitted += len(clist.candidates)
        found += len(_true_matches(clist, targets[pair]))
    precision = found / emitted if emitted else 0.0
    recall = found / inp.total_synonyms if inp.total_synonyms else 0.0
    return precision, recall, _f_score(precision, recall)


def macro_metrics(inp: EvalInput) -> tuple[float, float, float, int]:
    """Concept-level precision, recall, harmonic F, and the hit count.

    A concept is hit when any of its candidate lists contains at least one
    true synonym.
    """
    targets = inp.pair_targets()
    attempted = set()
    hit = set()
    for (cui, seed), clist in inp.candidate_lists.items():
        attempted.add(cui)
        if _true_matches(clist, targets[(cui, seed)]):
            hit.add(cui)
    num_con = len(hit)
    precision = num_con / len(attempted) if attempted else 0.0
    recall = num_con / inp.total_concepts if inp.total_concepts else 0.0
    return precision, recall, _f_score(precision, recall), num_con


def mrr(inp: EvalInput) -> float:
    """Mean reciprocal rank of the first true synonym per generated list."""
    if not inp.candidate_lists:
        return 0.0
    targets = inp.pair_targets()
    total = 0.0
    for pair, clist in inp.candidate_lists.items():
        ranks = _true_matches(clist, targets[pair])
        if ranks:
            total += 1.0 / ranks[0]
    return total / len(inp.candidate_lists)


@dataclass(frozen=True)
class EvalReport:
    """All metrics for one evaluation run, plus provenance."""

    micro: tuple[float, float, float]
    macro: tuple[float, float, float]
    mrr: float
    num_con: int
    n: int
    total_concepts: int
    total_synonyms: int
    lists_generated: int
    skipped: tuple[tuple[str, str, str], ...] = ()
    flags: tuple[str, ...] = ()
    config: dict = field(default_factory=dict)

    def validate(self) -> None:
        for name, (p, r, f) in (("micro", self.micro), ("macro", self.macro)):
            for label, value in (("P", p), ("R", r), ("F", f)):
                if not 0.0 <= value <= 1.0:
                    raise EvalError(f"{name} {label}={value!r} outside [0, 1]")
            if p > 0.0 and r > 0.0:
                if not min(p, r) <= f <= max(p, r):
                    raise EvalError(f"{name} F={f!r} outside [min(P,R), max(P,R)]")
        if not 0.0 <= self.mrr <= 1.0:
            raise EvalError(f"MRR={self.mrr!r} outside [0, 1]")
        if self.num_con > self.total_concepts:
            raise EvalError(
                f"num_con={self.num_con} exceeds total_concepts={self.total_concepts}"
            )


def report_from_input(inp: EvalInput, n: int, config: dict | None = None,
                      skipped=()) -> EvalReport:
    """Assemble the report for an already-built EvalInput."""
    inp.validate()
    micro = micro_metrics(inp)
    macro_p, macro_r, macro_f, num_con = macro_metrics(inp)
    flags = []
    emitted = sum(len(c.candidates) for c in inp.candidate_lists.values())
    if emitted == 0:
        flags.append("micro_precision_zero_denominator")
    if inp.total_synonyms == 0:
        flags.append("micro_recall_zero_denominator")
    if not inp.candidate_lists:
        flags.append("macro_precision_zero_denominator")
    if inp.total_concepts == 0:
        flags.append("macro_recall_zero_denominator")
    report = EvalReport(
        micro=micro,
        macro=(macro_p, macro_r, macro_f),
        mrr=mrr(inp),
        num_con=num_con,
        n=n,
        total_concepts=inp.total_concepts,
        total_synonyms=inp.total_synonyms,
        lists_generated=len(inp.candidate_lists),
        skipped=tuple(skipped),
        flags=tuple(flags),
        config=dict(config or {}),
    )
    report.validate()
    return report


def evaluate(
    model,
    lexicon: GroundTruthLexicon,
    assignments: SeedAssignment,
    n: int = 10,
    config: dict | None = None,
) -> EvalReport:
    """Generate a candidate list per assignment pair and score everything.

    `model` may be an EmbeddingModel or a WordVectors table. Seeds without
    a vector are skipped and logged; their concepts still count in the
    macro-recall and micro-recall denominators.
    """
    if not lexicon.concepts:
        raise EvalError("cannot evaluate against an empty lexicon")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    assignments.validate()
    vectors = model if isinstance(model, WordVectors) else model_vectors(model)

    lists: dict[tuple[str, str], CandidateList] = {}
    skipped: list[tuple[str, str, str]] = []
    for cui, seed, _targets in assignments.pairs:
        try:
            lists[(cui, seed)] = top_candidates(vectors, seed, n)
        except SeedNotFoundError:
            skipped.append((cui, seed, "seed not in vocabulary"))
        except ZeroVectorError:
            skipped.append((cui, seed, "seed vector is zero"))
    inp = EvalInput(
        assignments=assignments,
        candidate_lists=lists,
        total_concepts=len(lexicon.concepts),
        total_synonyms=sum(len(t) for _, _, t in assignments.pairs),
    )
    return report_from_input(inp, n=n, config=config, skipped=skipped)


def report_json(report: EvalReport) -> str:
    payload = dataclasses.asdict(report)
    payload["micro"] = dict(zip(("precision", "recall", "f"), report.micro))
    payload["macro"] = dict(zip(("precision", "recall", "f"), report.macro))
    payload["skipped"] = [
        {"concept": c, "seed": s, "reason": r} for c, s, r in report.skipped
    ]
    return json.dumps(payload, indent=1)


@dataclass(frozen=True)
class SweepPoint:
    """One grid point's outcome: a report, or the error that stopped it."""

    d: int
    window: int
    n: int
    variant: str
    report: EvalReport | None
    error: str | None = None


def sweep(
    stream: TokenStream,
    lexicon: GroundTruthLexicon,
    assignments: SeedAssignment,
    grid,
    db=None,
    ic=None,
    base_config: TrainConfig | None = None,
    min_count: int = 5,
    split_mode: str = "contiguous",
    pos_set=("n",),
    threads: int = 1,
    backend=None,
    vector_mode: str = "combined",
) -> list[SweepPoint]:
    """Train and evaluate every (d, window, n, variant) grid point.

    Streams, vocabularies, co-occurrence matrices, and trained vector
    tables are cached, so a point reuses the matrix of any earlier point
    with the same (variant, window) and the vectors of any earlier point
    with the same (variant, window, d). Failures are recorded per point
    and the sweep continues.
    """
    base = base_config or TrainConfig()
    stream_cache: dict[str, TokenStream] = {"none": stream}
    vocab_cache: dict[str, object] = {}
    matrix_cache: dict[tuple[str, int], CooccurrenceMatrix] = {}
    vector_cache: dict[tuple[str, int, int], WordVectors] = {}

    def variant_stream(variant: str) -> TokenStream:
        if variant not in stream_cache:
            if db is None or ic is None:
                raise EvalError(
                    f"variant {variant!r} needs a taxonomy database and "
                    "information content"
                )
            plans = build_plans(
                lexicon, db, ic, VARIANT_RELATIONS[variant],
                split_mode=split_mode, pos_set=pos_set,
            )
            stream_cache[variant] = augment_stream(stream, plans).tokens
        return stream_cache[variant]

    points: list[SweepPoint] = []
    for d, window, n, variant in grid:
        try:
            if variant not in VARIANTS:
                raise EvalError(
                    f"unknown variant {variant!r}; expected one of {VARIANTS}"
                )
            vstream = variant_stream(variant)
            if variant not in vocab_cache:
                vocab_cache[variant] = build_vocab(vstream, min_count=min_count)
            vocab = vocab_cache[variant]
            mkey = (variant, window)
            if mkey not in matrix_cache:
                matrix_cache[mkey] = build_cooccurrence(
                    vstream, vocab, window=window,
                    weighting_mode=base.weighting_mode, backend=backend,
                )
            vkey = (variant, window, d)
            if vkey not in vector_cache:
                config = dataclasses.replace(base, d=d, window=window)
                model = train(matrix_cache[mkey], config, threads=threads,
                              backend=backend)
                vector_cache[vkey] = model_vectors(model, mode=vector_mode)
            report = evaluate(
                vector_cache[vkey], lexicon, assignments, n=n,
                config={"d": d, "window": window, "n": n, "variant": variant},
            )
            points.append(SweepPoint(d, window, n, variant, report))
        except LexigrowError as exc:
            points.append(SweepPoint(d, window, n, variant, None, str(exc)))
        except ValueError as exc:
            points.append(SweepPoint(d, window, n, variant, None, str(exc)))
    return points


def sweep_csv(points) -> str:
    """CSV matrix of all successful sweep points, one row per point."""
    lines = [CSV_HEADER]
    for pt in points:
        if pt.report is None:
            continue
        r = pt.report
        cells = [
            str(pt.d), str(pt.window), str(pt.n), pt.variant,
            repr(r.micro[0]), repr(r.micro[1]), repr(r.micro[2]),
            repr(r.macro[0]), repr(r.macro[1]), repr(r.macro[2]),
            repr(r.mrr), str(r.num_con),
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
