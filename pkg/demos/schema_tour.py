#!/usr/bin/env python3
"""Tour of the layered tag schema: parsing, conversion, unification.

Flat UniMorph tags encode extra-argument agreement as opaque composite
tokens (ARGAC2S); the layered schema decomposes them into role-labelled
bundles of ordinary features.  Run this script to watch both directions at
work, plus case stacking and unification.
"""

from morphlayers import (
    DEFAULT_INVENTORY,
    FlatEncodingError,
    UnificationClash,
    from_flat,
    parse_tag,
    serialize,
    subsumes,
    to_flat,
    unify,
    validate,
)

FLAT_EXAMPLES = [
    ("Georgian  gagišvebt   'we will let you(sg) go'", "V;FUT;ARGNO1P;ARGAC2S"),
    ("Turkish   kedisisin   'you are his cat'", "N;SG;ARGNO2S;PSS3S"),
    ("Swahili   ninakupenda 'I love you'", "V;PRS;ARGNO1S;ARGAC2S"),
    ("Hebrew    emdata      'her position'", "N;SG;FEM;PSS3S"),
    ("English   thinks", "V;PRS;3;SG"),
]


def main() -> None:
    print("== flat -> layered ==")
    for gloss, flat in FLAT_EXAMPLES:
        layered = from_flat(flat)
        print(f"{gloss}\n  {flat:30} -> {serialize(layered)}")
        try:
            back = to_flat(layered)
            note = "round trips" if back == flat else f"re-renders as {back}"
        except FlatEncodingError as exc:
            note = f"no flat encoding ({exc})"
        print(f"  back to flat: {note}")

    print("\n== case stacking (impossible in flat tags) ==")
    stacked = parse_tag("N;SG;NOM(DAT)")
    print(f"  {serialize(stacked)}: nominative stacked over dative")
    try:
        to_flat(stacked)
    except FlatEncodingError as exc:
        print(f"  to_flat raises as expected: {exc}")

    print("\n== validation ==")
    for text in ["V;FUT;NOM(1;PL)", "V;PRS;FUT", "V;QQQ(1;SG)"]:
        fs = parse_tag(text)
        problems = validate(fs, DEFAULT_INVENTORY)
        verdict = "ok" if not problems else "; ".join(map(str, problems))
        print(f"  {text:20} {verdict}")

    print("\n== unification ==")
    a, b = parse_tag("V;FUT"), parse_tag("NOM(1;PL)")
    merged = unify(a, b)
    print(f"  unify({a}, {b}) = {merged}")
    print(f"  subsumes({a}, merged) = {subsumes(a, merged)}")
    try:
        unify(parse_tag("NOM(1)"), parse_tag("NOM(2)"))
    except UnificationClash as clash:
        print(f"  unify(NOM(1), NOM(2)) clashes: {clash}")


if __name__ == "__main__":
    main()
