"""Templatic generation of Georgian verb paradigms.

A verb form is assembled from fixed template slots::

    preverb | agreement prefix | version vowel | stem | thematic suffix
            | screeve suffix | subject suffix | object suffix

Georgian verbs agree with subject and object(s) simultaneously, but there is
a single agreement prefix slot: when several arguments compete for it, a
configured priority order picks the winner and the losers surrender only
their prefix (a displaced subject still realizes its plural suffix).  Screeve
(tense-aspect-mood) rows are grouped into four series; series membership
drives preverb/thematic usage, the choice of subject suffixes, and the
ergative subject role of the aorist series for transitive and medial verbs.

Everything lexical lives in data files: verb entries with their principal
parts and per-cell exception overrides in a lexicon file, and agreement
markers, screeve definitions, and per-class paradigm grids in a config file
(a default Georgian config ships with the package).  Generation is a pure
function of (entry, grid, markers); irregular forms are per-cell exception
overrides, not rewrite rules.
"""

from __future__ import annotations

import configparser
import random
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import IO, Iterable, Mapping

from .features import (
    DEFAULT_INVENTORY,
    FeatureInventory,
    FeatureStructure,
    TagError,
    parse_tag,
    serialize,
)
from .unimorph import InflectionTable, make_table

VERB_CLASSES = ("transitive", "intransitive", "medial", "indirect", "stative")
SERIES = ("series-I", "aorist", "perfective", "imperative")


class LexiconError(ValueError):
    """A lexicon or config record is malformed."""


class GenerationError(ValueError):
    """A tag cannot be generated for a lexicon entry."""


class TransliterationError(ValueError):
    """Input contains a letter outside the transliteration alphabet."""


@dataclass(frozen=True)
class Screeve:
    """One tense-aspect-mood paradigm row."""

    name: str
    series: str
    features: frozenset[str]
    uses_preverb: bool
    uses_thematic: bool
    suffix: str


@dataclass(frozen=True)
class PartOverride:
    """Per-series principal-part overrides for one lexicon entry."""

    stem: str | None = None
    preverb: str | None = None
    version: str | None = None
    thematic: str | None = None


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    verb_class: str
    stem: str
    preverb: str = ""
    version: str = ""
    thematic: str = ""
    parts: tuple[tuple[str, PartOverride], ...] = ()
    exceptions: tuple[tuple[str, str], ...] = ()

    def part_for(self, series: str) -> PartOverride | None:
        for name, override in self.parts:
            if name == series:
                return override
        return None

    @property
    def exception_map(self) -> dict[str, str]:
        return dict(self.exceptions)


@dataclass
class AgreementMarkerTable:
    """Person/number agreement affixes and the prefix-slot priority order.

    ``subject`` is keyed by (person, number, series); ``object`` by
    (person, number) where number ``None`` means unmarked.  Items of
    ``competition_order`` are ``"subject:<person>"`` / ``"object:<person>"``.
    """

    subject: dict[tuple[str, str, str], tuple[str, str]]
    object: dict[tuple[str, str | None], tuple[str, str]]
    competition_order: tuple[str, ...]


@dataclass
class ParadigmGrid:
    """Which (screeve, subject, object) cells a verb class inflects for."""

    subjects: tuple[tuple[str, str], ...]
    objects: tuple[tuple[str, str | None] | None, ...]
    exclusions: frozenset[tuple[tuple[str, str], tuple[str, str | None]]]
    screeves: tuple[str, ...]
    restrictions: dict[str, frozenset[str]] = field(default_factory=dict)
    subject_role: str = "NOM"
    subject_role_overrides: dict[str, str] = field(default_factory=dict)
    object_role: str = "DAT"

    def subject_role_for(self, series: str) -> str:
        return self.subject_role_overrides.get(series, self.subject_role)

    def allowed_subjects(self, screeve_name: str) -> list[tuple[str, str]]:
        persons = self.restrictions.get(screeve_name)
        if persons is None:
            return list(self.subjects)
        return [s for s in self.subjects if s[0] in persons]


@dataclass
class GeorgianConfig:
    screeves: tuple[Screeve, ...]
    markers: AgreementMarkerTable
    grids: dict[str, ParadigmGrid]

    def screeve_named(self, name: str) -> Screeve:
        for screeve in self.screeves:
            if screeve.name == name:
                return screeve
        raise KeyError(name)

    def screeve_for_tag(self, tag: FeatureStructure, inventory: FeatureInventory) -> Screeve:
        non_pos = frozenset(
            a for a in tag.atoms if inventory.dimension_of(a) != "pos"
        )
        for screeve in self.screeves:
            if screeve.features == non_pos:
                return screeve
        raise GenerationError(f"tag {serialize(tag, inventory)} matches no screeve")


# ---------------------------------------------------------------------------
# Config file

_REQUIRED_SECTIONS = ("screeves", "subject-markers", "object-markers", "competition")


def _split_fields(value: str, n: int, context: str) -> list[str]:
    fields = [f.strip() for f in value.split("|")]
    if len(fields) != n:
        raise LexiconError(f"{context}: expected {n} |-separated fields, got {len(fields)}")
    return fields


def _parse_cell(token: str, context: str) -> tuple[str, str | None]:
    person, _, number = token.partition(":")
    if not person or not number:
        raise LexiconError(f"{context}: malformed person:number cell {token!r}")
    return (person, None if number == "-" else number)


def load_config(lines: IO[str] | Iterable[str]) -> GeorgianConfig:
    """Parse the INI-style generation config (markers, screeves, grids)."""
    parser = configparser.ConfigParser(delimiters=("=",), interpolation=None)
    parser.optionxform = str  # person/number keys are case-sensitive
    parser.read_file(lines)
    for section in _REQUIRED_SECTIONS:
        if not parser.has_section(section):
            raise LexiconError(f"config: missing [{section}] section")

    screeves: list[Screeve] = []
    for name, value in parser.items("screeves"):
        series, features, preverb, thematic, suffix = _split_fields(
            value, 5, f"screeve {name}"
        )
        if series not in SERIES:
            raise LexiconError(f"screeve {name}: unknown series {series!r}")
        screeves.append(
            Screeve(
                name=name,
                series=series,
                features=frozenset(f.strip().upper() for f in features.split(";") if f.strip()),
                uses_preverb=preverb == "+",
                uses_thematic=thematic == "+",
                suffix=suffix,
            )
        )

    subject: dict[tuple[str, str, str], tuple[str, str]] = {}
    for key, value in parser.items("subject-markers"):
        person, number, series = (key.split(":") + ["", ""])[:3]
        if series not in SERIES:
            raise LexiconError(f"subject marker {key}: unknown series {series!r}")
        prefix, suffix = _split_fields(value, 2, f"subject marker {key}")
        subject[(person, number, series)] = (prefix, suffix)

    object_markers: dict[tuple[str, str | None], tuple[str, str]] = {}
    for key, value in parser.items("object-markers"):
        cell = _parse_cell(key, f"object marker {key}")
        prefix, suffix = _split_fields(value, 2, f"object marker {key}")
        object_markers[cell] = (prefix, suffix)

    order = tuple(parser.get("competition", "order", fallback="").split())
    for item in order:
        kind, _, person = item.partition(":")
        if kind not in ("subject", "object") or not person:
            raise LexiconError(f"competition order: malformed item {item!r}")
    markers = AgreementMarkerTable(subject, object_markers, order)

    screeve_names = [s.name for s in screeves]
    grids: dict[str, ParadigmGrid] = {}
    for section in parser.sections():
        if not section.startswith("grid."):
            continue
        verb_class = section[len("grid."):]
        if verb_class not in VERB_CLASSES:
            raise LexiconError(f"grid for unknown verb class {verb_class!r}")
        get = lambda option, fallback="": parser.get(section, option, fallback=fallback)
        subjects = tuple(
            _parse_cell(tok, section) for tok in get("subjects").split()
        )
        if any(num is None for _, num in subjects):
            raise LexiconError(f"{section}: subjects must carry an explicit number")
        objects: list[tuple[str, str | None] | None] = []
        for tok in get("objects", "none").split():
            objects.append(None if tok == "none" else _parse_cell(tok, section))
        grid_screeves = get("screeves", "all").split()
        names = screeve_names if grid_screeves == ["all"] else grid_screeves
        for name in names:
            if name not in screeve_names:
                raise LexiconError(f"{section}: unknown screeve {name!r}")
        exclusions = _parse_exclusions(get("exclusions", "none"), subjects, objects, section)
        restrictions: dict[str, frozenset[str]] = {}
        overrides: dict[str, str] = {}
        for option, value in parser.items(section):
            if option.startswith("restrict."):
                persons = frozenset(value.split())
                if not persons:
                    raise LexiconError(f"{section}: empty restriction {option}")
                restrictions[option[len("restrict."):]] = persons
            elif option.startswith("subject-role."):
                overrides[option[len("subject-role."):]] = value.strip().upper()
        grids[verb_class] = ParadigmGrid(
            subjects=subjects,
            objects=tuple(objects),
            exclusions=exclusions,
            screeves=tuple(names),
            restrictions=restrictions,
            subject_role=get("subject-role", "NOM").strip().upper(),
            subject_role_overrides=overrides,
            object_role=get("object-role", "DAT").strip().upper(),
        )

    config = GeorgianConfig(tuple(screeves), markers, grids)
    _check_config(config)
    return config


def _parse_exclusions(
    value: str,
    subjects: tuple[tuple[str, str], ...],
    objects: Iterable[tuple[str, str | None] | None],
    context: str,
) -> frozenset[tuple[tuple[str, str], tuple[str, str | None]]]:
    value = value.strip()
    pairs: set[tuple[tuple[str, str], tuple[str, str | None]]] = set()
    if value == "none" or not value:
        return frozenset()
    if value == "same-person-number":
        for s in subjects:
            for o in objects:
                if o is not None and o == s:
                    pairs.add((s, o))
        return frozenset(pairs)
    if value == "same-person":
        for s in subjects:
            for o in objects:
                if o is not None and o[0] == s[0]:
                    pairs.add((s, o))
        return frozenset(pairs)
    for token in value.split():
        left, sep, right = token.partition(">")
        if not sep:
            raise LexiconError(f"{context}: malformed exclusion {token!r}")
        pairs.add((_parse_cell(left, context), _parse_cell(right, context)))
    return frozenset(pairs)


def _check_config(config: GeorgianConfig) -> None:
    """Cross-check markers against every cell the grids can reach."""
    names = [s.name for s in config.screeves]
    if len(set(names)) != len(names):
        raise LexiconError("config: duplicate screeve names")
    features = [s.features for s in config.screeves]
    if len(set(features)) != len(features):
        raise LexiconError("config: two screeves share a feature set")
    for verb_class, grid in config.grids.items():
        for name in grid.screeves:
            screeve = config.screeve_named(name)
            for subj in grid.allowed_subjects(name):
                key = (subj[0], subj[1], screeve.series)
                if key not in config.markers.subject:
                    raise LexiconError(
                        f"grid.{verb_class}: missing subject marker {':'.join(key)}"
                    )
        for obj in grid.objects:
            if obj is not None and obj not in config.markers.object:
                raise LexiconError(
                    f"grid.{verb_class}: missing object marker {obj[0]}:{obj[1] or '-'}"
                )
    for (person, _number, _series), (prefix, _suffix) in config.markers.subject.items():
        if prefix and f"subject:{person}" not in config.markers.competition_order:
            raise LexiconError(f"competition order misses subject:{person}")
    for (person, _number), (prefix, _suffix) in config.markers.object.items():
        if prefix and f"object:{person}" not in config.markers.competition_order:
            raise LexiconError(f"competition order misses object:{person}")


@lru_cache(maxsize=1)
def default_config() -> GeorgianConfig:
    text = resources.files("morphlayers").joinpath("data/georgian.cfg").read_text("utf-8")
    return load_config(text.splitlines(True))


# ---------------------------------------------------------------------------
# Lexicon file

_PART_KEYS = ("stem", "preverb", "version", "thematic")


def load_lexicon(
    lines: IO[str] | Iterable[str],
    config: GeorgianConfig | None = None,
    inventory: FeatureInventory | None = None,
) -> list[LexiconEntry]:
    """Read lexicon records with their principal parts and exceptions.

    A main record is ``lemma<TAB>class<TAB>stem<TAB>preverb<TAB>version<TAB>
    thematic`` (trailing empty columns may be omitted); continuation lines are
    indented with a TAB and carry either ``part<TAB><series><TAB>key=value...``
    or ``exception<TAB><tag><TAB><form>``.
    """
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    entries: list[LexiconEntry] = []
    seen: set[str] = set()
    current: dict | None = None

    def flush() -> None:
        nonlocal current
        if current is None:
            return
        entries.append(
            LexiconEntry(
                lemma=current["lemma"],
                verb_class=current["verb_class"],
                stem=current["stem"],
                preverb=current["preverb"],
                version=current["version"],
                thematic=current["thematic"],
                parts=tuple(current["parts"]),
                exceptions=tuple(current["exceptions"]),
            )
        )
        current = None

    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line.startswith("\t"):
            if current is None:
                raise LexiconError(f"line {lineno}: continuation before any record")
            fields = line.strip("\t").split("\t")
            keyword = fields[0]
            if keyword == "part":
                if len(fields) < 3:
                    raise LexiconError(f"line {lineno}: part needs a series and overrides")
                series = fields[1]
                if series not in SERIES:
                    raise LexiconError(f"line {lineno}: unknown series {series!r}")
                values: dict[str, str] = {}
                for assignment in fields[2:]:
                    key, sep, value = assignment.partition("=")
                    if not sep or key not in _PART_KEYS:
                        raise LexiconError(f"line {lineno}: malformed override {assignment!r}")
                    values[key] = value
                current["parts"].append((series, PartOverride(**values)))
            elif keyword == "exception":
                if len(fields) != 3:
                    raise LexiconError(f"line {lineno}: exception needs a tag and a form")
                try:
                    tag = parse_tag(fields[1], inv)
                except TagError as exc:
                    raise LexiconError(f"line {lineno}: bad exception tag: {exc}") from exc
                current["exceptions"].append((serialize(tag, inv), fields[2]))
            else:
                raise LexiconError(f"line {lineno}: unknown continuation {keyword!r}")
            continue
        flush()
        fields = line.split("\t")
        if not 3 <= len(fields) <= 6:
            raise LexiconError(
                f"line {lineno}: expected 3 to 6 tab-separated fields, got {len(fields)}"
            )
        fields += [""] * (6 - len(fields))  # trailing empty columns may be omitted
        lemma, verb_class, stem, preverb, version, thematic = fields
        if verb_class not in VERB_CLASSES:
            raise LexiconError(f"line {lineno}: unknown verb class {verb_class!r}")
        if not lemma or not stem:
            raise LexiconError(f"line {lineno}: empty lemma or stem")
        if lemma in seen:
            raise LexiconError(f"line {lineno}: duplicate lemma {lemma!r}")
        seen.add(lemma)
        current = {
            "lemma": lemma,
            "verb_class": verb_class,
            "stem": stem,
            "preverb": preverb,
            "version": version,
            "thematic": thematic,
            "parts": [],
            "exceptions": [],
        }
    flush()
    return entries


@lru_cache(maxsize=1)
def sample_lexicon() -> tuple[LexiconEntry, ...]:
    text = resources.files("morphlayers").joinpath("data/sample_lexicon.tsv").read_text("utf-8")
    return tuple(load_lexicon(text.splitlines(True)))


# ---------------------------------------------------------------------------
# Paradigm enumeration and form generation


def paradigm_slots(
    verb_class: str,
    grid: ParadigmGrid | None = None,
    config: GeorgianConfig | None = None,
    inventory: FeatureInventory | None = None,
) -> list[FeatureStructure]:
    """All layered tags a verb of ``verb_class`` inflects for, canonically ordered."""
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    cfg = config if config is not None else default_config()
    if grid is None:
        grid = cfg.grids[verb_class]
    tags: list[FeatureStructure] = []
    for name in grid.screeves:
        screeve = cfg.screeve_named(name)
        subject_role = grid.subject_role_for(screeve.series)
        for subj in grid.allowed_subjects(name):
            for obj in grid.objects:
                if (subj, obj) in grid.exclusions:
                    continue
                bundles = {subject_role: FeatureStructure(subj)}
                if obj is not None:
                    person, number = obj
                    atoms = [person] if number is None else [person, number]
                    bundles[grid.object_role] = FeatureStructure(atoms)
                tags.append(FeatureStructure({"V"} | screeve.features, bundles))
    rendered = {serialize(tag, inv): tag for tag in tags}
    if len(rendered) != len(tags):
        raise GenerationError(f"grid for {verb_class} yields duplicate slots")
    return [rendered[key] for key in sorted(rendered)]


def generate_form(
    entry: LexiconEntry,
    tag: FeatureStructure,
    markers: AgreementMarkerTable | None = None,
    config: GeorgianConfig | None = None,
    inventory: FeatureInventory | None = None,
) -> str:
    """Realize one paradigm cell of ``entry`` by template concatenation."""
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    cfg = config if config is not None else default_config()
    table = markers if markers is not None else cfg.markers
    tag_text = serialize(tag, inv)
    exception = entry.exception_map.get(tag_text)
    if exception is not None:
        return exception

    screeve = cfg.screeve_for_tag(tag, inv)
    grid = cfg.grids.get(entry.verb_class)
    if grid is None:
        raise GenerationError(f"no grid configured for class {entry.verb_class!r}")
    if screeve.name not in grid.screeves:
        raise GenerationError(f"tag {tag_text} outside the {entry.verb_class} slot list")
    subject_role = grid.subject_role_for(screeve.series)
    subj = tag.bundle(subject_role)
    if subj is None:
        raise GenerationError(f"tag {tag_text} lacks a {subject_role}(...) subject bundle")
    s_person = subj.atom_in("person", inv)
    s_number = subj.atom_in("number", inv)
    if s_person is None or s_number is None:
        raise GenerationError(f"tag {tag_text}: subject bundle needs person and number")
    try:
        s_prefix, s_suffix = table.subject[(s_person, s_number, screeve.series)]
    except KeyError:
        raise GenerationError(
            f"missing marker cell subject {s_person}:{s_number}:{screeve.series}"
        ) from None

    obj = tag.bundle(grid.object_role)
    o_prefix = o_suffix = ""
    o_person: str | None = None
    if obj is not None:
        o_person = obj.atom_in("person", inv)
        o_number = obj.atom_in("number", inv)
        if o_person is None:
            raise GenerationError(f"tag {tag_text}: object bundle needs a person")
        try:
            o_prefix, o_suffix = table.object[(o_person, o_number)]
        except KeyError:
            raise GenerationError(
                f"missing marker cell object {o_person}:{o_number or '-'}"
            ) from None

    prefix = ""
    for item in table.competition_order:
        kind, _, person = item.partition(":")
        if kind == "object" and o_person == person and o_prefix:
            prefix = o_prefix
            break
        if kind == "subject" and s_person == person and s_prefix:
            prefix = s_prefix
            break

    override = entry.part_for(screeve.series) or PartOverride()
    preverb = override.preverb if override.preverb is not None else entry.preverb
    version = override.version if override.version is not None else entry.version
    stem = override.stem if override.stem is not None else entry.stem
    thematic = override.thematic if override.thematic is not None else entry.thematic
    return "".join(
        (
            preverb if screeve.uses_preverb else "",
            prefix,
            version,
            stem,
            thematic if screeve.uses_thematic else "",
            screeve.suffix,
            s_suffix,
            o_suffix,
        )
    )


def generate_paradigm(
    entry: LexiconEntry,
    grid: ParadigmGrid | None = None,
    markers: AgreementMarkerTable | None = None,
    config: GeorgianConfig | None = None,
    inventory: FeatureInventory | None = None,
) -> InflectionTable:
    """The full inflection table of ``entry``: one form per grid slot."""
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    cfg = config if config is not None else default_config()
    slots = paradigm_slots(entry.verb_class, grid, cfg, inv)
    slot_texts = {serialize(tag, inv) for tag in slots}
    unknown = [key for key, _ in entry.exceptions if key not in slot_texts]
    if unknown:
        raise GenerationError(
            f"{entry.lemma}: exception tags outside the paradigm: {', '.join(unknown)}"
        )
    cells = [(tag, generate_form(entry, tag, markers, cfg, inv)) for tag in slots]
    return make_table(entry.lemma, cells, inv)


def generate_paradigms(
    entries: Iterable[LexiconEntry],
    config: GeorgianConfig | None = None,
    inventory: FeatureInventory | None = None,
    processes: int | None = None,
) -> list[InflectionTable]:
    """Generate tables for many entries; optionally across processes."""
    entries = list(entries)
    if processes and processes > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=processes) as pool:
            return list(
                pool.map(_generate_one, ((e, config, inventory) for e in entries))
            )
    return [generate_paradigm(e, config=config, inventory=inventory) for e in entries]


def _generate_one(
    job: tuple[LexiconEntry, GeorgianConfig | None, FeatureInventory | None],
) -> InflectionTable:
    entry, config, inventory = job
    return generate_paradigm(entry, config=config, inventory=inventory)


def restrict_objects_to_third(config: GeorgianConfig) -> GeorgianConfig:
    """A config variant mimicking legacy coverage: third-person objects only.

    Tags are unchanged for the surviving slots, so data generated this way
    shares its feature vocabulary with full-coverage data.
    """
    from dataclasses import replace

    grids: dict[str, ParadigmGrid] = {}
    for verb_class, grid in config.grids.items():
        objects = tuple(o for o in grid.objects if o is None or o[0] == "3")
        if not objects:
            objects = (None,)
        grids[verb_class] = replace(grid, objects=objects)
    return GeorgianConfig(config.screeves, config.markers, grids)


# ---------------------------------------------------------------------------
# Transliteration

_MKHEDRULI = "აბგდევზთიკლმნოპჟრსტუფქღყშჩცძწჭხჯჰ"
_LATIN = ["a", "b", "g", "d", "e", "v", "z", "t", "i", "ḳ", "l", "m", "n", "o",
          "ṗ", "ž", "r", "s", "ṭ", "u", "p", "k", "ǧ", "q", "š", "č", "c", "ʒ",
          "ċ", "ĉ", "x", "ǰ", "h"]
GEORGIAN_TO_LATIN = dict(zip(_MKHEDRULI, _LATIN))
LATIN_TO_GEORGIAN = {latin: geo for geo, latin in GEORGIAN_TO_LATIN.items()}


def transliterate(text: str) -> str:
    """Mkhedruli to Latin, one character per character; Latin passes through."""
    out: list[str] = []
    for i, ch in enumerate(text):
        if ch in GEORGIAN_TO_LATIN:
            out.append(GEORGIAN_TO_LATIN[ch])
        elif ch in LATIN_TO_GEORGIAN or not unicodedata.category(ch).startswith("L"):
            out.append(ch)
        else:
            raise TransliterationError(f"unmappable character {ch!r} at index {i}")
    return "".join(out)


def detransliterate(text: str) -> str:
    """Latin back to Mkhedruli; inverse of :func:`transliterate` on Georgian text."""
    out: list[str] = []
    for i, ch in enumerate(text):
        if ch in LATIN_TO_GEORGIAN:
            out.append(LATIN_TO_GEORGIAN[ch])
        elif ch in GEORGIAN_TO_LATIN or not unicodedata.category(ch).startswith("L"):
            out.append(ch)
        else:
            raise TransliterationError(f"unmappable character {ch!r} at index {i}")
    return "".join(out)


# ---------------------------------------------------------------------------
# Synthetic lexica (for experiments and stress tests)

_CONSONANTS = "ბგდზთკლმნპჟრსტფქღყშჩცძწჭხჯ"
_VOWELS = "აეიოუ"
_PREVERBS = ("გა", "და", "მო", "შე", "წა", "ჩა", "ა", "გადა")
_VERSIONS = ("", "ი", "ა", "უ")
_THEMATICS = ("ებ", "ავ", "ამ", "ობ", "")
_STEM_SHAPES = ("CVC", "CCVC", "CVCC", "CVCVC")


def make_synthetic_lexicon(
    counts: Mapping[str, int], seed: int
) -> list[LexiconEntry]:
    """Deterministically invent distinct verb entries, ``counts`` per class.

    Stems are random Georgian consonant/vowel shapes, unique across the
    lexicon, so paradigms of different lemmas never collide wholesale.
    """
    rng = random.Random(seed)
    entries: list[LexiconEntry] = []
    used_stems: set[str] = set()
    used_lemmas: set[str] = set()
    for verb_class in VERB_CLASSES:
        for _ in range(counts.get(verb_class, 0)):
            while True:
                shape = rng.choice(_STEM_SHAPES)
                stem = "".join(
                    rng.choice(_CONSONANTS if c == "C" else _VOWELS) for c in shape
                )
                preverb = rng.choice(_PREVERBS)
                lemma = preverb + stem + "ება"
                if stem not in used_stems and lemma not in used_lemmas:
                    break
            used_stems.add(stem)
            used_lemmas.add(lemma)
            entries.append(
                LexiconEntry(
                    lemma=lemma,
                    verb_class=verb_class,
                    stem=stem,
                    preverb=preverb,
                    version=rng.choice(_VERSIONS),
                    thematic=rng.choice(_THEMATICS),
                )
            )
    return entries
