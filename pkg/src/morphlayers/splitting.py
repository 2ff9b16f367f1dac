"""Deterministic reinflection instance sampling and train/dev/test splits.

A reinflection instance maps (source tag, source form, target tag) to the
target form inside one lemma's inflection table.  Two split policies exist:

* form split: no (target form, target tag) pair is shared across partitions;
* lemma split: the lemma sets of the partitions are pairwise disjoint.

Both produce exact partition sizes by selecting a subset of the instances;
surplus instances are discarded rather than partitions resized.  All
randomness comes from :class:`random.Random` (Mersenne Twister) seeded
explicitly, so identical seeds give identical splits on any platform.

Instance files are 5-column TSV: ``lemma  source_tag  source_form
target_tag  target_form``; model input files omit the final column.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .features import FeatureInventory, FeatureStructure, parse_tag, serialize
from .unimorph import InflectionTable

PARTS = ("train", "dev", "test")


class SplitError(ValueError):
    """The requested sampling or split cannot be satisfied."""


@dataclass(frozen=True)
class ReinflectionInstance:
    lemma: str
    source_tag: FeatureStructure
    source_form: str
    target_tag: FeatureStructure
    target_form: str = ""


@dataclass(frozen=True)
class SplitSpec:
    """Assignment of instance indices to partitions under one policy."""

    policy: str
    sizes: tuple[int, int, int]
    seed: int
    assignment: tuple[tuple[int, str], ...]

    @property
    def assignment_map(self) -> dict[int, str]:
        return dict(self.assignment)

    def indices(self, part: str) -> list[int]:
        return [i for i, p in self.assignment if p == part]

    def partition(
        self, instances: Sequence[ReinflectionInstance]
    ) -> dict[str, list[ReinflectionInstance]]:
        parts: dict[str, list[ReinflectionInstance]] = {p: [] for p in PARTS}
        for i, part in self.assignment:
            parts[part].append(instances[i])
        return parts


def make_instances(
    tables: Iterable[InflectionTable], seed: int, count: int
) -> list[ReinflectionInstance]:
    """Sample ``count`` distinct instances uniformly over ordered cell pairs.

    The population is every (source cell, target cell) pair with distinct
    tags within one table, across all tables; sampling is without
    replacement and fully determined by ``seed``.
    """
    tables = list(tables)
    pair_counts = [len(t) * (len(t) - 1) for t in tables]
    for table, pairs in zip(tables, pair_counts):
        if pairs == 0:
            raise SplitError(f"table {table.lemma!r} has fewer than 2 cells")
        if len({tag for tag, _ in table.cells}) != len(table):
            raise SplitError(f"table {table.lemma!r} has duplicate cells (legacy variants?)")
    total = sum(pair_counts)
    if count > total:
        raise SplitError(f"requested {count} instances but only {total} pairs exist")
    rng = random.Random(seed)
    chosen = rng.sample(range(total), count)
    instances: list[ReinflectionInstance] = []
    offsets: list[int] = []
    acc = 0
    for pairs in pair_counts:
        offsets.append(acc)
        acc += pairs
    for index in chosen:
        # Locate the table, then decode the pair index into (source, target).
        t = _bisect(offsets, index)
        table = tables[t]
        n = len(table)
        local = index - offsets[t]
        i, j = divmod(local, n - 1)
        if j >= i:
            j += 1
        src_tag, src_form = table.cells[i]
        tgt_tag, tgt_form = table.cells[j]
        instances.append(
            ReinflectionInstance(table.lemma, src_tag, src_form, tgt_tag, tgt_form)
        )
    return instances


def _bisect(offsets: list[int], index: int) -> int:
    lo, hi = 0, len(offsets) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if offsets[mid] <= index:
            lo = mid
        else:
            hi = mid - 1
    return lo


def split_form(
    instances: Sequence[ReinflectionInstance],
    sizes: tuple[int, int, int],
    seed: int,
    inventory: FeatureInventory | None = None,
) -> SplitSpec:
    """Exact-size split keeping every (target form, target tag) in one partition."""
    rng = random.Random(seed)
    groups: dict[tuple[str, str], list[int]] = {}
    for i, inst in enumerate(instances):
        key = (inst.target_form, serialize(inst.target_tag, inventory))
        groups.setdefault(key, []).append(i)
    order = sorted(groups)
    rng.shuffle(order)
    remaining = {part: size for part, size in zip(PARTS, sizes)}
    assignment: list[tuple[int, str]] = []
    for key in order:
        members = groups[key]
        for part in PARTS:
            if remaining[part] >= len(members):
                remaining[part] -= len(members)
                assignment.extend((i, part) for i in members)
                break
        # Groups that fit nowhere are dropped; sizes stay exact.
        if not any(remaining.values()):
            break
    if any(remaining.values()):
        raise SplitError(
            f"form split unsatisfiable at sizes {sizes}: short by "
            + ", ".join(f"{part}={left}" for part, left in remaining.items() if left)
        )
    return SplitSpec("form", tuple(sizes), seed, tuple(sorted(assignment)))


def split_lemma(
    instances: Sequence[ReinflectionInstance],
    sizes: tuple[int, int, int],
    seed: int,
) -> SplitSpec:
    """Exact-size split with pairwise-disjoint lemma sets.

    Whole lemmas are dealt to train, then dev, then test until each reaches
    its size; each partition is then trimmed down to the exact size by
    seeded subsampling.
    """
    rng = random.Random(seed)
    by_lemma: dict[str, list[int]] = {}
    for i, inst in enumerate(instances):
        by_lemma.setdefault(inst.lemma, []).append(i)
    order = sorted(by_lemma)
    rng.shuffle(order)
    collected: dict[str, list[int]] = {p: [] for p in PARTS}
    lemma_iter = iter(order)
    for part, size in zip(PARTS, sizes):
        while len(collected[part]) < size:
            lemma = next(lemma_iter, None)
            if lemma is None:
                raise SplitError(
                    f"lemma split unsatisfiable at sizes {sizes}: "
                    f"ran out of lemmas filling {part}"
                )
            collected[part].extend(by_lemma[lemma])
    assignment: list[tuple[int, str]] = []
    for part, size in zip(PARTS, sizes):
        members = collected[part]
        if len(members) > size:
            members = rng.sample(sorted(members), size)
        assignment.extend((i, part) for i in members)
    return SplitSpec("lemma", tuple(sizes), seed, tuple(sorted(assignment)))


# ---------------------------------------------------------------------------
# Instance file I/O


def write_instances(
    instances: Iterable[ReinflectionInstance],
    stream: IO[str],
    inventory: FeatureInventory | None = None,
    with_target_form: bool = True,
) -> None:
    for inst in instances:
        fields = [
            inst.lemma,
            serialize(inst.source_tag, inventory),
            inst.source_form,
            serialize(inst.target_tag, inventory),
        ]
        if with_target_form:
            fields.append(inst.target_form)
        stream.write("\t".join(fields) + "\n")


def read_instances(
    lines: IO[str] | Iterable[str],
    inventory: FeatureInventory | None = None,
) -> list[ReinflectionInstance]:
    """Read 5-column instance lines; 4-column model inputs get an empty target."""
    instances: list[ReinflectionInstance] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) not in (4, 5):
            raise SplitError(
                f"line {lineno}: expected 4 or 5 tab-separated fields, got {len(fields)}"
            )
        lemma, src_tag, src_form, tgt_tag = fields[:4]
        target_form = fields[4] if len(fields) == 5 else ""
        instances.append(
            ReinflectionInstance(
                lemma,
                parse_tag(src_tag, inventory),
                src_form,
                parse_tag(tgt_tag, inventory),
                target_form,
            )
        )
    return instances
