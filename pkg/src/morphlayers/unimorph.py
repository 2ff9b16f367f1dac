"""UniMorph-style three-column table files.

Files are UTF-8, Unix newlines, one ``lemma<TAB>form<TAB>tag`` record per
line, no header.  Blank lines separate inflection tables on write and are
ignored on read.  Tags are layered by default; ``mode="flat"`` accepts legacy
flat tags and converts them on the way in, preserving duplicate cells (legacy
data contains unverified variants).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable

from .features import (
    FeatureInventory,
    FeatureStructure,
    TagError,
    from_flat,
    parse_tag,
    serialize,
)


class UniMorphFormatError(ValueError):
    """A table file violates the three-column format."""


@dataclass(frozen=True)
class UniMorphEntry:
    lemma: str
    form: str
    tag: FeatureStructure


@dataclass(frozen=True)
class InflectionTable:
    """One lemma's (tag, form) cells, canonically ordered.

    In layered data no two cells share a tag; legacy variants may repeat a
    tag with different forms and are kept as separate cells.
    """

    lemma: str
    cells: tuple[tuple[FeatureStructure, str], ...]

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValueError(f"empty inflection table for {self.lemma!r}")

    def __len__(self) -> int:
        return len(self.cells)

    def forms(self) -> list[str]:
        return [form for _, form in self.cells]

    def tags(self) -> list[FeatureStructure]:
        return [tag for tag, _ in self.cells]

    def form_for(self, tag: FeatureStructure) -> str | None:
        for cell_tag, form in self.cells:
            if cell_tag == tag:
                return form
        return None


def make_table(
    lemma: str,
    cells: Iterable[tuple[FeatureStructure, str]],
    inventory: FeatureInventory | None = None,
) -> InflectionTable:
    """Build a table with cells sorted by canonical tag string, then form."""
    ordered = sorted(cells, key=lambda cell: (serialize(cell[0], inventory), cell[1]))
    return InflectionTable(lemma, tuple(ordered))


def read_unimorph(
    lines: IO[str] | Iterable[str],
    mode: str = "layered",
    inventory: FeatureInventory | None = None,
) -> list[UniMorphEntry]:
    """Read entries in file order; ``mode`` is ``"layered"`` or ``"flat"``."""
    if mode not in ("layered", "flat"):
        raise ValueError(f"unknown mode {mode!r}")
    convert = parse_tag if mode == "layered" else from_flat
    entries: list[UniMorphEntry] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise UniMorphFormatError(
                f"line {lineno}: expected 3 tab-separated fields, got {len(fields)}"
            )
        lemma, form, tag_text = fields
        if not lemma or not form:
            raise UniMorphFormatError(f"line {lineno}: empty lemma or form")
        try:
            tag = convert(tag_text, inventory)
        except TagError as exc:
            raise UniMorphFormatError(f"line {lineno}: {exc}") from exc
        entries.append(UniMorphEntry(lemma, form, tag))
    return entries


def write_unimorph(
    tables: Iterable[InflectionTable],
    stream: IO[str],
    inventory: FeatureInventory | None = None,
) -> None:
    """Write tables sorted by lemma, cells by canonical tag, blank-line separated."""
    ordered = sorted(tables, key=lambda t: t.lemma)
    for i, table in enumerate(ordered):
        if i:
            stream.write("\n")
        cells = sorted(table.cells, key=lambda cell: (serialize(cell[0], inventory), cell[1]))
        for tag, form in cells:
            stream.write(f"{table.lemma}\t{form}\t{serialize(tag, inventory)}\n")


def group_by_lemma(
    entries: Iterable[UniMorphEntry],
    allow_variants: bool = False,
    inventory: FeatureInventory | None = None,
) -> list[InflectionTable]:
    """Group entries into one table per lemma, in order of first appearance.

    Entry count is preserved.  A repeated (lemma, tag) cell is an error
    unless ``allow_variants`` is set (legacy mode).
    """
    by_lemma: dict[str, list[tuple[FeatureStructure, str]]] = {}
    seen: set[tuple[str, FeatureStructure]] = set()
    for entry in entries:
        if not allow_variants:
            key = (entry.lemma, entry.tag)
            if key in seen:
                raise UniMorphFormatError(
                    f"duplicate cell {serialize(entry.tag, inventory)} for lemma {entry.lemma!r}"
                )
            seen.add(key)
        by_lemma.setdefault(entry.lemma, []).append((entry.tag, entry.form))
    return [make_table(lemma, cells, inventory) for lemma, cells in by_lemma.items()]
