#!/usr/bin/env python3
"""Build the synthetic legacy-style Georgian verb file shipped with the package.

Old-style Georgian UniMorph data had three quirks this file reproduces:
47 all-transitive inflection tables, objects only in the third person
singular, flat composite tags (ARGNO1S, ARGAC3S, ...), and a sprinkling of
unverified duplicate variant rows.  Output is deterministic; rerunning this
script regenerates the file byte-for-byte.
"""

from __future__ import annotations

import sys
from dataclasses import replace
from pathlib import Path

from morphlayers import (
    default_config,
    generate_paradigm,
    make_synthetic_lexicon,
    to_flat,
)

OUT = Path(__file__).resolve().parent.parent / "src/morphlayers/data/legacy_georgian_47.tsv"
SEED = 1147
VARIANT_CELLS = (10, 40)  # cells that get an extra unverified variant row


def main() -> int:
    config = default_config()
    grid = replace(
        config.grids["transitive"],
        objects=(("3", "SG"),),
        exclusions=frozenset(),
    )
    entries = make_synthetic_lexicon({"transitive": 47}, seed=SEED)
    out = sys.argv[1] if len(sys.argv) > 1 else OUT
    lines: list[str] = []
    for entry in sorted(entries, key=lambda e: e.lemma):
        if lines:
            lines.append("")
        table = generate_paradigm(entry, grid=grid)
        rows = [
            (entry.lemma, form, to_flat(tag)) for tag, form in table.cells
        ]
        for index in VARIANT_CELLS:
            tag, form = table.cells[index]
            rows.append((entry.lemma, "ჰ" + form, to_flat(tag)))
        rows.sort(key=lambda r: (r[2], r[1]))
        lines.extend("\t".join(row) for row in rows)
    Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    total = sum(1 for line in lines if line)
    print(f"wrote {out}: {total} rows, {len(entries)} lemmas")
    return 0


if __name__ == "__main__":
    sys.exit(main())
