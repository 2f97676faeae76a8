"""WNdb-format thesaurus: parsing, relation queries, information content, Resnik.

Reads the standard plain-text database layout (index.<pos> / data.<pos>) in
which a synset's id is the byte offset of its line in the data file; offsets
are verified against actual line positions during parsing. The hypernym graph
is validated acyclic per part of speech at load time.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import TokenStream
from .errors import WordNetError

__all__ = [
    "Synset",
    "WordNetDb",
    "InformationContent",
    "load_wordnet",
    "related_lemmas",
    "information_content",
    "resnik",
    "load_ic_file",
    "save_ic_file",
    "RELATIONS",
]

SynsetId = tuple[int, str]

POS_FILES = {
    "n": ("index.noun", "data.noun"),
    "v": ("index.verb", "data.verb"),
    "a": ("index.adj", "data.adj"),
    "r": ("index.adv", "data.adv"),
}
RELATIONS = ("synonym", "hyponym", "hypernym")

_HYPERNYM_SYMBOLS = ("@", "@i")
_HYPONYM_SYMBOLS = ("~", "~i")


@dataclass
class Synset:
    id: SynsetId
    lemmas: list[str]
    hypernym_ids: list[SynsetId] = field(default_factory=list)
    hyponym_ids: list[SynsetId] = field(default_factory=list)
    gloss: str = ""


@dataclass
class WordNetDb:
    synsets: dict[SynsetId, Synset]
    lemma_index: dict[str, dict[str, list[SynsetId]]]
    roots: list[SynsetId]
    _ancestors: dict[SynsetId, frozenset[SynsetId]] = field(default_factory=dict, repr=False)

    def synsets_of(self, lemma: str, pos_set: "Sequence[str] | None" = None) -> list[SynsetId]:
        by_pos = self.lemma_index.get(lemma, {})
        out: list[SynsetId] = []
        for pos in sorted(by_pos):
            if pos_set is None or pos in pos_set:
                out.extend(by_pos[pos])
        return out

    def ancestors(self, sid: SynsetId) -> frozenset[SynsetId]:
        """Transitive hypernym closure of ``sid`` (excluding itself); memoized."""
        cached = self._ancestors.get(sid)
        if cached is not None:
            return cached
        # Iterative post-order so deep chains never hit the recursion limit.
        stack = [(sid, False)]
        while stack:
            node, expanded = stack.pop()
            if node in self._ancestors:
                continue
            if expanded:
                acc: set[SynsetId] = set()
                for parent in self.synsets[node].hypernym_ids:
                    acc.add(parent)
                    acc.update(self._ancestors[parent])
                self._ancestors[node] = frozenset(acc)
            else:
                stack.append((node, True))
                for parent in self.synsets[node].hypernym_ids:
                    if parent not in self._ancestors:
                        stack.append((parent, False))
        return self._ancestors[sid]


@dataclass
class InformationContent:
    ic: dict[SynsetId, float]
    source: str = ""

    def get(self, sid: SynsetId) -> float:
        return self.ic.get(sid, 0.0)


def _norm_pos(ch: str) -> str:
    # Satellite adjectives ('s') live in the adjective file.
    return "a" if ch == "s" else ch


def _strip_marker(word: str) -> str:
    # Adjective entries may carry a syntactic marker: "beautiful(p)".
    if word.endswith(")") and "(" in word:
        return word[: word.rindex("(")]
    return word


def _parse_data_file(path: Path, pos: str) -> tuple[dict[SynsetId, Synset], dict[SynsetId, list[tuple[str, SynsetId]]]]:
    synsets: dict[SynsetId, Synset] = {}
    pointers: dict[SynsetId, list[tuple[str, SynsetId]]] = {}
    offset = 0
    with open(path, "rb") as fh:
        for raw in fh:
            line_at = offset
            offset += len(raw)
            if raw.startswith(b"  ") or not raw.strip():
                continue  # license header / padding
            try:
                line = raw.decode("utf-8").rstrip("\r\n")
                fields = line.split(" ")
                declared = int(fields[0])
                if declared != line_at:
                    raise WordNetError(
                        f"{path.name}:{line_at}: synset offset field says {declared}"
                    )
                w_cnt = int(fields[3], 16)
                pos_here = _norm_pos(fields[2])
                idx = 4
                lemmas = []
                for _ in range(w_cnt):
                    lemmas.append(_strip_marker(fields[idx]).lower())
                    idx += 2  # skip lex_id
                p_cnt = int(fields[idx])
                idx += 1
                ptrs: list[tuple[str, SynsetId]] = []
                for _ in range(p_cnt):
                    symbol = fields[idx]
                    target = (int(fields[idx + 1]), _norm_pos(fields[idx + 2]))
                    ptrs.append((symbol, target))
                    idx += 4  # symbol, offset, pos, source/target
                gloss = line.split("|", 1)[1].strip() if "|" in line else ""
                if not lemmas:
                    raise WordNetError(f"{path.name}:{line_at}: synset has no words")
            except WordNetError:
                raise
            except (ValueError, IndexError) as exc:
                raise WordNetError(f"{path.name}:{line_at}: malformed synset line ({exc})") from None
            sid = (line_at, pos_here if pos_here in POS_FILES else pos)
            synsets[sid] = Synset(id=sid, lemmas=lemmas, gloss=gloss)
            pointers[sid] = ptrs
    return synsets, pointers


def _parse_index_file(path: Path, pos: str) -> dict[str, list[int]]:
    index: dict[str, list[int]] = {}
    offset = 0
    with open(path, "rb") as fh:
        for raw in fh:
            line_at = offset
            offset += len(raw)
            if raw.startswith(b"  ") or not raw.strip():
                continue
            try:
                fields = raw.decode("utf-8").split()
                lemma = fields[0].lower()
                synset_cnt = int(fields[2])
                p_cnt = int(fields[3])
                offsets = [int(x) for x in fields[4 + p_cnt + 2:]]
                if len(offsets) != synset_cnt:
                    raise WordNetError(
                        f"{path.name}:{line_at}: expected {synset_cnt} offsets, found {len(offsets)}"
                    )
            except WordNetError:
                raise
            except (ValueError, IndexError) as exc:
                raise WordNetError(f"{path.name}:{line_at}: malformed index line ({exc})") from None
            index[lemma] = offsets
    return index


def _check_acyclic(synsets: dict[SynsetId, Synset]) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[SynsetId, int] = {}
    for start in synsets:
        if color.get(start, WHITE) != WHITE:
            continue
        stack = [(start, iter(synsets[start].hypernym_ids))]
        color[start] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for parent in it:
                state = color.get(parent, WHITE)
                if state == GRAY:
                    raise WordNetError(
                        f"hypernym cycle detected through synset {parent[0]} ({parent[1]})"
                    )
                if state == WHITE:
                    color[parent] = GRAY
                    stack.append((parent, iter(synsets[parent].hypernym_ids)))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()


def load_wordnet(directory: "str | Path", pos_set: "Sequence[str] | None" = None) -> WordNetDb:
    """Load index/data files for every requested POS present under ``directory``.

    Noun files are mandatory; other parts of speech load when their files
    exist (or when explicitly requested via ``pos_set``, in which case a
    missing file is an error).
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise WordNetError(f"database directory not found: {directory}")
    wanted = list(pos_set) if pos_set is not None else list(POS_FILES)
    if "n" not in wanted:
        wanted.insert(0, "n")

    synsets: dict[SynsetId, Synset] = {}
    pointers: dict[SynsetId, list[tuple[str, SynsetId]]] = {}
    indexes: dict[str, dict[str, list[int]]] = {}
    for pos in wanted:
        index_name, data_name = POS_FILES[pos]
        index_path, data_path = directory / index_name, directory / data_name
        if not data_path.is_file() or not index_path.is_file():
            if pos == "n" or pos_set is not None:
                raise WordNetError(f"missing database files for pos {pos!r} under {directory}")
            continue
        file_synsets, file_pointers = _parse_data_file(data_path, pos)
        synsets.update(file_synsets)
        pointers.update(file_pointers)
        indexes[pos] = _parse_index_file(index_path, pos)

    # Resolve the relations we model; anything else (antonyms, meronyms,
    # derivations) may point at parts of speech that were not loaded.
    for sid, ptrs in pointers.items():
        syn = synsets[sid]
        for symbol, target in ptrs:
            if symbol in _HYPERNYM_SYMBOLS or symbol in _HYPONYM_SYMBOLS:
                if target not in synsets:
                    raise WordNetError(
                        f"{POS_FILES[sid[1]][1]}:{sid[0]}: dangling {symbol} pointer to "
                        f"{target[0]} ({target[1]})"
                    )
                if symbol in _HYPERNYM_SYMBOLS:
                    syn.hypernym_ids.append(target)
                else:
                    syn.hyponym_ids.append(target)

    lemma_index: dict[str, dict[str, list[SynsetId]]] = {}
    for pos, index in indexes.items():
        for lemma, offsets in index.items():
            ids = []
            for off in offsets:
                sid = (off, pos)
                if sid not in synsets:
                    raise WordNetError(
                        f"{POS_FILES[pos][0]}: lemma {lemma!r} references missing synset {off}"
                    )
                ids.append(sid)
            lemma_index.setdefault(lemma, {})[pos] = ids
    # Data files are authoritative for membership; pick up any lemma the
    # index omitted so lemma_index stays consistent with synsets.
    for sid in sorted(synsets):
        for lemma in synsets[sid].lemmas:
            per_pos = lemma_index.setdefault(lemma, {}).setdefault(sid[1], [])
            if sid not in per_pos:
                per_pos.append(sid)

    _check_acyclic(synsets)
    roots = sorted(sid for sid, syn in synsets.items() if not syn.hypernym_ids)
    return WordNetDb(synsets=synsets, lemma_index=lemma_index, roots=roots)


def related_lemmas(
    db: WordNetDb,
    lemma: str,
    relation: str,
    pos_set: Sequence[str] = ("n",),
) -> set[str]:
    """Union of related lemmas over every sense of ``lemma`` within ``pos_set``.

    synonym: co-members of the lemma's synsets; hyponym: members of direct
    hyponym synsets; hypernym: members of the full transitive hypernym
    closure. The query lemma itself is never returned. Unknown lemmas yield
    the empty set.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}; expected one of {RELATIONS}")
    out: set[str] = set()
    for sid in db.synsets_of(lemma, pos_set):
        if relation == "synonym":
            out.update(db.synsets[sid].lemmas)
        elif relation == "hyponym":
            for child in db.synsets[sid].hyponym_ids:
                out.update(db.synsets[child].lemmas)
        else:
            for anc in db.ancestors(sid):
                out.update(db.synsets[anc].lemmas)
    out.discard(lemma)
    return out


def information_content(
    db: WordNetDb,
    source: "TokenStream | str | Path",
) -> InformationContent:
    """Build IC from a token stream, or load a precomputed IC file verbatim.

    Stream counting: each lemma's occurrence count is spread uniformly over
    its synsets; every non-root synset then receives add-one smoothing so
    unseen synsets keep finite IC; counts propagate to all transitive
    hypernyms; IC(s) = -log(count(s) / count(root of s)), hence IC(root) = 0.
    """
    if not isinstance(source, TokenStream):
        return load_ic_file(source)

    freq = Counter(source.tokens)
    n_senses = {lemma: len(db.synsets_of(lemma)) for lemma in db.lemma_index}
    raw_total = sum(freq[lemma] for lemma in db.lemma_index)
    if raw_total == 0:
        raise WordNetError("frequency source shares no lemmas with the database")

    root_set = set(db.roots)
    own: dict[SynsetId, float] = {sid: 0.0 for sid in db.synsets}
    for lemma, by_pos in db.lemma_index.items():
        count = freq[lemma]
        share = count / n_senses[lemma]
        for ids in by_pos.values():
            for sid in ids:
                own[sid] += share
    for sid in own:
        if sid not in root_set:
            own[sid] += 1.0

    total: dict[SynsetId, float] = {sid: 0.0 for sid in db.synsets}
    for sid, mass in own.items():
        total[sid] += mass
        for anc in db.ancestors(sid):
            total[anc] += mass

    ic: dict[SynsetId, float] = {}
    for sid in db.synsets:
        if sid in root_set:
            ic[sid] = 0.0
            continue
        norm = max(
            (total[a] for a in db.ancestors(sid) if a in root_set), default=total[sid]
        )
        ic[sid] = max(0.0, -math.log(total[sid] / norm))
    return InformationContent(ic=ic, source="stream")


def resnik(
    db: WordNetDb,
    ic: InformationContent,
    lemma_a: str,
    lemma_b: str,
    pos_set: "Sequence[str] | None" = None,
) -> float:
    """Max over sense pairs of IC(least common subsumer); 0 when unrelated."""
    best = 0.0
    ids_a = db.synsets_of(lemma_a, pos_set)
    ids_b = db.synsets_of(lemma_b, pos_set)
    for sa in ids_a:
        closure_a = db.ancestors(sa) | {sa}
        for sb in ids_b:
            common = closure_a & (db.ancestors(sb) | {sb})
            for c in common:
                value = ic.get(c)
                if value > best:
                    best = value
    return best


def load_ic_file(path: "str | Path") -> InformationContent:
    """Read `synset_offset pos ic_value` lines verbatim."""
    path = Path(path)
    if not path.is_file():
        raise WordNetError(f"IC file not found: {path}")
    ic: dict[SynsetId, float] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise WordNetError(f"{path.name}:{lineno}: expected `offset pos value`")
        try:
            ic[(int(parts[0]), _norm_pos(parts[1]))] = float(parts[2])
        except ValueError as exc:
            raise WordNetError(f"{path.name}:{lineno}: {exc}") from None
    return InformationContent(ic=ic, source=str(path))


def save_ic_file(ic: InformationContent, path: "str | Path") -> None:
    lines = [f"{sid[0]} {sid[1]} {value:.17g}" for sid, value in sorted(ic.ic.items())]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
