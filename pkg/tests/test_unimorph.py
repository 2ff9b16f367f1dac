"""Three-column table file reading, writing, and grouping."""

from __future__ import annotations

import io
import random

import pytest

from morphlayers import (
    FeatureStructure,
    UniMorphEntry,
    UniMorphFormatError,
    group_by_lemma,
    make_table,
    parse_tag,
    read_unimorph,
    serialize,
    write_unimorph,
)
from helpers import random_structure


def read_text(text: str, mode: str = "layered"):
    return read_unimorph(io.StringIO(text), mode)


class TestRead:
    def test_minimal_line(self):
        entries = read_text("L\tF\tV\n")
        assert entries == [UniMorphEntry("L", "F", FeatureStructure({"V"}))]

    def test_wrong_column_count_reports_line(self):
        with pytest.raises(UniMorphFormatError, match="line 2"):
            read_text("L\tF\tV\nL\tF\n")

    def test_tag_error_reports_line(self):
        with pytest.raises(UniMorphFormatError, match="line 1"):
            read_text("L\tF\tV;NOM(\n")

    def test_empty_fields_rejected(self):
        with pytest.raises(UniMorphFormatError, match="empty"):
            read_text("\tF\tV\n")

    def test_blank_lines_ignored(self):
        entries = read_text("A\tx\tV\n\n\nB\ty\tN\n")
        assert [e.lemma for e in entries] == ["A", "B"]

    def test_flat_mode_converts(self):
        entries = read_text("L\tF\tV;FUT;ARGNO1P;ARGAC2S\n", mode="flat")
        assert serialize(entries[0].tag) == "V;FUT;NOM(1;PL);ACC(2;SG)"

    def test_legacy_georgian_file(self):
        from importlib import resources

        text = resources.files("morphlayers").joinpath(
            "data/legacy_georgian_47.tsv"
        ).read_text("utf-8")
        entries = read_unimorph(text.splitlines(True), "flat")
        assert len(entries) == 3290
        assert len({e.lemma for e in entries}) == 47
        tables = group_by_lemma(entries, allow_variants=True)
        assert len(tables) == 47
        assert sum(len(t) for t in tables) == len(entries)


class TestWrite:
    def test_empty_list(self):
        buf = io.StringIO()
        write_unimorph([], buf)
        assert buf.getvalue() == ""

    def test_single_table_byte_round_trip(self):
        table = make_table("L", [(parse_tag("V;FUT;NOM(1;PL)"), "f")])
        buf = io.StringIO()
        write_unimorph([table], buf)
        assert buf.getvalue() == "L\tf\tV;FUT;NOM(1;PL)\n"
        buf2 = io.StringIO()
        write_unimorph(group_by_lemma(read_text(buf.getvalue())), buf2)
        assert buf2.getvalue() == buf.getvalue()

    def test_random_tables_round_trip(self):
        rng = random.Random(77)
        tables = []
        for i in range(100):
            cells = {}
            for _ in range(rng.randint(1, 8)):
                tag = random_structure(rng)
                cells[tag] = f"form{rng.randint(0, 999)}"
            tables.append(make_table(f"lemma{i:03d}", list(cells.items())))
        buf = io.StringIO()
        write_unimorph(tables, buf)
        buf.seek(0)
        recovered = group_by_lemma(read_unimorph(buf))
        assert {t.lemma: t for t in recovered} == {t.lemma: t for t in tables}


class TestGroup:
    def test_counts(self):
        entries = [
            UniMorphEntry("A", "x", parse_tag("V;PRS")),
            UniMorphEntry("A", "y", parse_tag("V;FUT")),
            UniMorphEntry("B", "z", parse_tag("V")),
        ]
        tables = group_by_lemma(entries)
        assert sorted((t.lemma, len(t)) for t in tables) == [("A", 2), ("B", 1)]
        assert sum(len(t) for t in tables) == len(entries)

    def test_empty_input(self):
        assert group_by_lemma([]) == []

    def test_duplicate_cell_rejected(self):
        entries = [
            UniMorphEntry("A", "x", parse_tag("V;PRS")),
            UniMorphEntry("A", "y", parse_tag("V;PRS")),
        ]
        with pytest.raises(UniMorphFormatError, match="V;PRS"):
            group_by_lemma(entries)
        assert len(group_by_lemma(entries, allow_variants=True)[0]) == 2

    def test_non_empty_table_invariant(self):
        with pytest.raises(ValueError, match="empty"):
            make_table("L", [])
