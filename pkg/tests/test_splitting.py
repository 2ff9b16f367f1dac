"""Instance sampling, split policies, and the instance file format."""

from __future__ import annotations

import io
import math

import pytest

from morphlayers import (
    ReinflectionInstance,
    SplitError,
    make_instances,
    make_table,
    parse_tag,
    read_instances,
    sample_lexicon,
    serialize,
    split_form,
    split_lemma,
    write_instances,
)
from morphlayers.georgian import generate_paradigms
from morphlayers.splitting import PARTS


def tiny_table(lemma="L", n=2):
    cells = [(parse_tag(f"V;NOM({p};SG)"), f"form{p}") for p in ("1", "2", "3")[:n]]
    return make_table(lemma, cells)


def synthetic_instances(n_lemmas, per_lemma):
    """Instances with distinct forms across lemmas, cheap to build in bulk."""
    instances = []
    for i in range(n_lemmas):
        source = parse_tag("V;PRS;NOM(1;SG)")
        for j in range(per_lemma):
            instances.append(
                ReinflectionInstance(
                    f"lemma{i}", source, f"src{i}", parse_tag(f"V;NOM({1 + j % 3};{'SG' if j % 2 else 'PL'})"),
                    f"form{i}_{j}",
                )
            )
    return instances


class TestMakeInstances:
    def test_two_cells_exhaustive(self):
        instances = make_instances([tiny_table()], seed=3, count=2)
        pairs = {(i.source_form, i.target_form) for i in instances}
        assert pairs == {("form1", "form2"), ("form2", "form1")}

    def test_deterministic(self):
        tables = [tiny_table("A", 3), tiny_table("B", 3)]
        assert make_instances(tables, 11, 8) == make_instances(tables, 11, 8)

    def test_count_exceeds_pairs(self):
        with pytest.raises(SplitError, match="only 2 pairs"):
            make_instances([tiny_table()], seed=0, count=3)

    def test_single_cell_table_rejected(self):
        with pytest.raises(SplitError, match="fewer than 2 cells"):
            make_instances([tiny_table(n=1)], seed=0, count=1)

    def test_tags_differ_within_instance(self):
        tables = generate_paradigms(sample_lexicon()[:3])
        for inst in make_instances(tables, 1, 500):
            assert inst.source_tag != inst.target_tag
            assert inst.lemma in {t.lemma for t in tables}

    def test_uniform_over_equal_tables(self):
        # Three equally sized tables must receive near-identical shares.
        big = generate_paradigms(sample_lexicon()[:3])
        tables = [make_table(t.lemma, t.cells[:80]) for t in big]
        draws = 10_000
        instances = make_instances(tables, seed=424, count=draws)
        expected = draws / 3
        sigma = math.sqrt(draws * (1 / 3) * (2 / 3))
        for table in tables:
            observed = sum(inst.lemma == table.lemma for inst in instances)
            assert abs(observed - expected) <= 3 * sigma


class TestSplitForm:
    def test_three_singletons(self):
        instances = synthetic_instances(1, 3)
        spec = split_form(instances, (1, 1, 1), seed=5)
        parts = spec.partition(instances)
        assert [len(parts[p]) for p in PARTS] == [1, 1, 1]

    def test_exact_sizes_and_disjoint_targets(self):
        instances = synthetic_instances(20, 700)
        spec = split_form(instances, (8000, 1000, 1000), seed=9)
        parts = spec.partition(instances)
        assert [len(parts[p]) for p in PARTS] == [8000, 1000, 1000]
        keys = {
            p: {(i.target_form, serialize(i.target_tag)) for i in parts[p]}
            for p in PARTS
        }
        assert not keys["train"] & keys["test"]
        assert not keys["train"] & keys["dev"]
        assert not keys["dev"] & keys["test"]

    def test_determinism(self):
        instances = synthetic_instances(5, 100)
        assert split_form(instances, (300, 50, 50), 7) == split_form(
            instances, (300, 50, 50), 7
        )

    def test_unsatisfiable(self):
        with pytest.raises(SplitError, match="unsatisfiable"):
            split_form(synthetic_instances(1, 5), (8, 1, 1), seed=0)

    def test_shared_target_stays_together(self):
        # Several instances map onto one (form, tag) target; they must land
        # in a single partition.
        source = parse_tag("V;PRS;NOM(1;SG)")
        target = parse_tag("V;FUT;NOM(1;SG)")
        shared = [
            ReinflectionInstance("L", source, f"s{i}", target, "shared")
            for i in range(3)
        ]
        fillers = synthetic_instances(4, 3)
        spec = split_form(shared + fillers, (3, 6, 3), seed=1)
        parts = {p for i, p in spec.assignment if i < 3}
        assert len(parts) == 1


class TestSplitLemma:
    def test_three_lemmas_one_each(self):
        instances = synthetic_instances(3, 1)
        spec = split_lemma(instances, (1, 1, 1), seed=2)
        parts = spec.partition(instances)
        lemma_sets = [{i.lemma for i in parts[p]} for p in PARTS]
        assert all(len(s) == 1 for s in lemma_sets)
        assert not (lemma_sets[0] & lemma_sets[1] or lemma_sets[0] & lemma_sets[2]
                    or lemma_sets[1] & lemma_sets[2])

    def test_exact_sizes_with_trimming(self):
        instances = synthetic_instances(15, 900)
        spec = split_lemma(instances, (8000, 1000, 1000), seed=3)
        parts = spec.partition(instances)
        assert [len(parts[p]) for p in PARTS] == [8000, 1000, 1000]
        lemma_sets = {p: {i.lemma for i in parts[p]} for p in PARTS}
        assert not lemma_sets["train"] & lemma_sets["dev"]
        assert not lemma_sets["train"] & lemma_sets["test"]
        assert not lemma_sets["dev"] & lemma_sets["test"]

    def test_unsatisfiable(self):
        with pytest.raises(SplitError, match="ran out of lemmas"):
            split_lemma(synthetic_instances(2, 10), (10, 10, 10), seed=0)

    def test_determinism(self):
        instances = synthetic_instances(9, 50)
        assert split_lemma(instances, (200, 100, 100), 7) == split_lemma(
            instances, (200, 100, 100), 7
        )


class TestInstanceFiles:
    def test_round_trip(self):
        tables = generate_paradigms(sample_lexicon()[:2])
        instances = make_instances(tables, 5, 50)
        buf = io.StringIO()
        write_instances(instances, buf)
        buf.seek(0)
        assert read_instances(buf) == instances

    def test_tags_serialize_canonically(self):
        instances = make_instances([tiny_table("L", 3)], 1, 4)
        buf = io.StringIO()
        write_instances(instances, buf)
        for line in buf.getvalue().splitlines():
            _, src_tag, _, tgt_tag, _ = line.split("\t")
            assert serialize(parse_tag(src_tag)) == src_tag
            assert serialize(parse_tag(tgt_tag)) == tgt_tag

    def test_four_column_input(self):
        instances = read_instances(["L\tV;PRS;NOM(1;SG)\tsrc\tV;FUT;NOM(1;SG)\n"])
        assert instances[0].target_form == ""

    def test_bad_column_count(self):
        with pytest.raises(SplitError, match="line 1"):
            read_instances(["a\tb\n"])
