#!/usr/bin/env python3
"""Generate full Georgian verb paradigms from the shipped sample lexicon.

Shows the template slot machinery on the showcase verb (preverb + competing
agreement prefixes + version vowel + stem + thematic + endings), then
generates every sample-lexicon paradigm and prints per-class table sizes.
Pass an output path to also write the tables as a three-column file.
"""

import sys
from collections import defaultdict

from morphlayers import (
    generate_form,
    parse_tag,
    sample_lexicon,
    transliterate,
    write_unimorph,
)
from morphlayers.georgian import generate_paradigms

SHOWCASE = [
    "V;FUT;NOM(1;PL);ACC(2;SG)",   # gagišvebt: object g- beats subject v-
    "V;FUT;NOM(2;SG);ACC(1;SG)",   # gamišveb: first-person object wins the slot
    "V;FUT;NOM(3;SG);ACC(2;SG)",   # gagišvebs
    "V;PST;PFV;ERG(1;SG);ACC(3)",  # aorist: ergative subject, no thematic
    "V;IMP;NOM(2;SG);ACC(3)",      # lexicon exception overrides the template
]


def main() -> int:
    entries = sample_lexicon()
    flagship = next(e for e in entries if e.lemma == "გაშვება")
    print(f"showcase verb: {flagship.lemma} (stem {flagship.stem}, "
          f"preverb {flagship.preverb}, version {flagship.version}, "
          f"thematic {flagship.thematic})")
    for text in SHOWCASE:
        form = generate_form(flagship, parse_tag(text))
        print(f"  {text:28} {form:14} {transliterate(form)}")

    tables = generate_paradigms(entries)
    by_class: dict[str, list[int]] = defaultdict(list)
    for entry, table in zip(entries, tables):
        by_class[entry.verb_class].append(len(table))
    print("\ntable sizes by class:")
    for verb_class, sizes in by_class.items():
        mean = sum(sizes) / len(sizes)
        print(f"  {verb_class:13} {len(sizes)} tables, {mean:.0f} forms each")
    print(f"total: {len(tables)} tables, {sum(len(t) for t in tables)} forms")

    if len(sys.argv) > 1:
        with open(sys.argv[1], "w", encoding="utf-8") as f:
            write_unimorph(tables, f)
        print(f"wrote {sys.argv[1]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
