"""Writer for small WNdb-style thesaurus fixtures.

Renders index.<pos>/data.<pos> files in the plain-text database layout where
a synset's id is the byte offset of its line. Offsets are fixed-width
(8 digits), so line lengths are known before the offsets are: the writer
lays lines out with placeholder offsets, measures them, then renders again
with the real byte positions filled in.

Corruption hooks exist so error-path tests can produce cycles, dangling
pointers, and offset-field mismatches on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

HEADER = (
    "  1 This file is a generated test fixture in the WNdb text layout.\n"
    "  2 Lines indented by two spaces are skipped by the reader.\n"
)


@dataclass
class SynsetSpec:
    """One synset, identified by a symbolic key instead of a byte offset."""

    key: str
    lemmas: list[str]
    hypernyms: list[str] = field(default_factory=list)
    gloss: str = ""
    ss_type: str = "n"
    # Extra raw pointers appended verbatim: (symbol, target_key_or_offset, pos).
    extra_pointers: list[tuple[str, "str | int", str]] = field(default_factory=list)


def _pointer_rows(
    spec: SynsetSpec, children: dict[str, list[str]]
) -> list[tuple[str, "str | int", str]]:
    rows: list[tuple[str, "str | int", str]] = []
    for parent in spec.hypernyms:
        rows.append(("@", parent, "n"))
    for child in children.get(spec.key, []):
        rows.append(("~", child, "n"))
    rows.extend(spec.extra_pointers)
    return rows


def _render_data_line(
    spec: SynsetSpec,
    own_offset: int,
    pointer_rows: list[tuple[str, "str | int", str]],
    resolve,
    offset_width: int = 8,
) -> str:
    parts = [
        f"{own_offset:0{offset_width}d}",
        "07",
        spec.ss_type,
        f"{len(spec.lemmas):02x}",
    ]
    for lemma in spec.lemmas:
        parts.extend([lemma, "0"])
    parts.append(f"{len(pointer_rows):03d}")
    for symbol, target, pos in pointer_rows:
        parts.extend([symbol, f"{resolve(target):0{offset_width}d}", pos, "0000"])
    gloss = spec.gloss or f"fixture synset {spec.key}"
    parts.extend(["|", gloss])
    return " ".join(parts) + "\n"


def write_wndb(
    directory: "str | Path",
    specs: list[SynsetSpec],
    pos: str = "n",
    header: str = HEADER,
    offset_shift: "dict[str, int] | None" = None,
    index_count_bump: "dict[str, int] | None" = None,
) -> dict[str, int]:
    """Write data.<pos> and index.<pos> under ``directory``.

    Returns the mapping from synset key to assigned byte offset.
    ``offset_shift`` corrupts the declared offset field of the named synsets;
    ``index_count_bump`` corrupts the synset_cnt field of the named lemmas.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    names = {"n": ("index.noun", "data.noun"), "v": ("index.verb", "data.verb"),
             "a": ("index.adj", "data.adj"), "r": ("index.adv", "data.adv")}
    index_name, data_name = names[pos]

    children: dict[str, list[str]] = {}
    for spec in specs:
        for parent in spec.hypernyms:
            children.setdefault(parent, []).append(spec.key)

    # Pass 1: placeholder offsets fix every line's byte length.
    rows = [(spec, _pointer_rows(spec, children)) for spec in specs]
    lengths = [
        len(_render_data_line(spec, 0, ptrs, lambda _t: 0).encode("utf-8"))
        for spec, ptrs in rows
    ]
    offsets: dict[str, int] = {}
    at = len(header.encode("utf-8"))
    for (spec, _ptrs), length in zip(rows, lengths):
        offsets[spec.key] = at
        at += length

    def resolve(target: "str | int") -> int:
        return target if isinstance(target, int) else offsets[target]

    shift = offset_shift or {}
    data_text = header + "".join(
        _render_data_line(spec, offsets[spec.key] + shift.get(spec.key, 0), ptrs, resolve)
        for spec, ptrs in rows
    )
    (directory / data_name).write_text(data_text, encoding="utf-8")

    by_lemma: dict[str, list[str]] = {}
    for spec in specs:
        for lemma in spec.lemmas:
            by_lemma.setdefault(lemma.lower(), []).append(spec.key)
    bump = index_count_bump or {}
    index_lines = [header]
    for lemma in sorted(by_lemma):
        keys = by_lemma[lemma]
        symbols: list[str] = []
        for key in keys:
            spec = next(s for s in specs if s.key == key)
            for symbol, _t, _p in _pointer_rows(spec, children):
                if symbol not in symbols:
                    symbols.append(symbol)
        cnt = len(keys) + bump.get(lemma, 0)
        fields = [lemma, pos, str(cnt), str(len(symbols)), *symbols,
                  str(len(keys)), "0", *(f"{offsets[k]:08d}" for k in keys)]
        index_lines.append(" ".join(fields) + "\n")
    (directory / index_name).write_text("".join(index_lines), encoding="utf-8")
    return offsets


def headache_specs() -> list[SynsetSpec]:
    """Fixture families used in the worked augmentation example.

    Four two-member synsets share the lemma "headache", one per companion
    term, all under a common root, so each companion arrives with its own
    least-common-subsumer depth.
    """
    return [
        SynsetSpec("root", ["entity"]),
        SynsetSpec("state", ["state"], hypernyms=["root"]),
        SynsetSpec("co_w", ["headache", "worry"], hypernyms=["state"]),
        SynsetSpec("co_c", ["headache", "cephalalgia"], hypernyms=["state"]),
        SynsetSpec("co_co", ["headache", "concern"], hypernyms=["state"]),
        SynsetSpec("co_v", ["headache", "vexation"], hypernyms=["state"]),
    ]


def tree50_specs() -> list[SynsetSpec]:
    """A 50-synset tree: root, 7 branches, 42 leaves, two lemmas each."""
    specs = [SynsetSpec("root", ["entity", "thing"])]
    for b in range(7):
        specs.append(
            SynsetSpec(f"b{b}", [f"branch{b}", f"limb{b}"], hypernyms=["root"])
        )
    for leaf in range(42):
        b = leaf % 7
        specs.append(
            SynsetSpec(
                f"l{leaf}",
                [f"leaf{leaf}", f"frond{leaf}"],
                hypernyms=[f"b{b}"],
            )
        )
    return specs
