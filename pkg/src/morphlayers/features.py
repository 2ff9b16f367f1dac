"""Hierarchical ("layered") morphological feature structures.

A feature structure is an unordered set of atomic features (``FUT``, ``PL``,
``V``, ...) together with a map from argument roles (``NOM``, ``ACC``,
``POSS``, ...) to nested feature structures.  This generalizes flat UniMorph
feature bundles so that a word agreeing with several arguments carries one
sub-bundle per argument::

    V;FUT;NOM(1;PL);ACC(2;SG)     future verb, 1pl subject, 2sg object
    N;SG;POSS(3;SG;FEM)           singular noun, 3sg feminine possessor
    N;SG;NOM(DAT)                 case stacking: nominative over dative

The inline tag grammar is::

    tag  := item (";" item)*
    item := ATOM | ROLE "(" tag ")"

Parsing is case-insensitive; canonical output is uppercase.  Canonical
ordering is part-of-speech first, then remaining atoms in inventory dimension
order, then role bundles in a fixed role order (NOM < ERG < ACC < DAT <
POSS).  ``serialize(parse_tag(s)) == s`` for canonical ``s``.

A :class:`FeatureInventory` declares which atomic labels exist, grouped into
mutually exclusive dimensions (person, number, tense, ...), which role labels
exist, and how legacy flat composite tokens (``ARGAC2S``, ``PSS3S``) decompose
into role bundles.  Role labels may coincide with labels of the ``case``
dimension only (``DAT`` is an atomic case inside ``NOM(DAT)`` but a role in
``DAT(1;SG)``); the ``ROLE(`` syntax keeps the two readings apart.

Structures are immutable and hashable; all operations here are pure
functions, safe for concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping


class TagError(ValueError):
    """A tag string or feature structure violates the schema."""


class FlatEncodingError(TagError):
    """A layered structure has no legacy flat-tag encoding."""


class UnificationClash(Exception):
    """Unification failed: two different values for one dimension.

    Carries the conflicting ``dimension`` and the pair of ``values``.
    """

    def __init__(self, dimension: str, values: tuple[str, str]):
        self.dimension = dimension
        self.values = values
        super().__init__(f"clash on {dimension}: {values[0]} vs {values[1]}")


@dataclass(frozen=True)
class Violation:
    """One validation finding; violations are data, not exceptions."""

    kind: str  # "unknown label" | "dimension conflict" | "unknown role"
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class RelocationRule:
    """Move word-level atoms of ``dimension`` into the ``role`` bundle.

    Applied during flat-to-layered conversion, only when the target bundle is
    already present (e.g. relocating a word-level gender feature into a
    possessor bundle).  The move is not undone by the reverse conversion.
    """

    dimension: str
    role: str


_SENTINEL_DIMS = frozenset({"role", "flatcode", "relocate"})


@dataclass(frozen=True)
class FeatureInventory:
    """The configured universe of atomic labels, dimensions, and roles.

    ``dimensions`` maps a dimension name to its label set; declaration order
    of dimensions defines the canonical atom order (the first dimension is
    the part-of-speech slot).  ``roles`` is ordered and defines the canonical
    bundle order.  ``flat_arg_codes`` maps two-letter case codes of legacy
    ``ARG*`` composite tokens to roles.
    """

    dimensions: tuple[tuple[str, frozenset[str]], ...]
    roles: tuple[str, ...] = ("NOM", "ERG", "ACC", "DAT", "POSS")
    flat_arg_codes: tuple[tuple[str, str], ...] = ()
    relocation_rules: tuple[RelocationRule, ...] = ()
    _dim_of: dict[str, str] = field(init=False, repr=False, compare=False)
    _dim_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        dim_of: dict[str, str] = {}
        for name, labels in self.dimensions:
            if name in _SENTINEL_DIMS:
                raise ValueError(f"reserved dimension name: {name}")
            for label in labels:
                if label in dim_of:
                    raise ValueError(
                        f"label {label} in both {dim_of[label]} and {name}"
                    )
                dim_of[label] = name
        for role in self.roles:
            # Roles may double only as case atoms (case stacking needs both).
            if dim_of.get(role) not in (None, "case"):
                raise ValueError(
                    f"role {role} collides with {dim_of[role]} label"
                )
        for code, role in self.flat_arg_codes:
            if role not in self.roles:
                raise ValueError(f"flat code {code} targets unknown role {role}")
        for rule in self.relocation_rules:
            if rule.role not in self.roles:
                raise ValueError(f"relocation rule targets unknown role {rule.role}")
        object.__setattr__(self, "_dim_of", dim_of)
        object.__setattr__(
            self, "_dim_index", {name: i for i, (name, _) in enumerate(self.dimensions)}
        )

    def dimension_of(self, label: str) -> str | None:
        return self._dim_of.get(label)

    def labels(self, dimension: str) -> frozenset[str]:
        for name, labels in self.dimensions:
            if name == dimension:
                return labels
        raise KeyError(dimension)

    def atom_sort_key(self, label: str) -> tuple[int, str]:
        dim = self._dim_of.get(label)
        if dim is None:
            return (len(self.dimensions), label)
        return (self._dim_index[dim], label)

    def role_sort_key(self, role: str) -> tuple[int, str]:
        try:
            return (self.roles.index(role), role)
        except ValueError:
            return (len(self.roles), role)

    def arg_code_for(self, role: str) -> str | None:
        for code, target in self.flat_arg_codes:
            if target == role:
                return code
        return None

    @property
    def subject_role(self) -> str:
        """Role that legacy tags leave implicit for a bare subject bundle."""
        for code, target in self.flat_arg_codes:
            if code == "NO":
                return target
        return "NOM"


class FeatureStructure:
    """An immutable bundle of atoms plus role-labelled sub-bundles.

    Equality and hashing ignore insertion order; ``str()`` renders the
    canonical tag.  At most one bundle per role is allowed.
    """

    __slots__ = ("_atoms", "_bundles")

    def __init__(
        self,
        atoms: Iterable[str] = (),
        bundles: Mapping[str, "FeatureStructure"] | Iterable[tuple[str, "FeatureStructure"]] = (),
    ):
        self._atoms = frozenset(atoms)
        items = list(bundles.items()) if isinstance(bundles, Mapping) else list(bundles)
        seen: dict[str, FeatureStructure] = {}
        for role, sub in items:
            if role in seen:
                raise TagError(f"duplicate role {role}")
            if not isinstance(sub, FeatureStructure):
                raise TypeError(f"bundle value for {role} is not a FeatureStructure")
            seen[role] = sub
        self._bundles = tuple(sorted(seen.items()))

    @property
    def atoms(self) -> frozenset[str]:
        return self._atoms

    @property
    def bundles(self) -> tuple[tuple[str, "FeatureStructure"], ...]:
        return self._bundles

    @property
    def bundle_map(self) -> dict[str, "FeatureStructure"]:
        return dict(self._bundles)

    def bundle(self, role: str) -> "FeatureStructure | None":
        for label, sub in self._bundles:
            if label == role:
                return sub
        return None

    def is_empty(self) -> bool:
        return not self._atoms and not self._bundles

    def atom_in(self, dimension: str, inventory: "FeatureInventory") -> str | None:
        """The single atom of ``dimension`` at this level, if any."""
        for atom in self._atoms:
            if inventory.dimension_of(atom) == dimension:
                return atom
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureStructure):
            return NotImplemented
        return self._atoms == other._atoms and self._bundles == other._bundles

    def __hash__(self) -> int:
        return hash((self._atoms, self._bundles))

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"FeatureStructure({serialize(self)!r})"


# ---------------------------------------------------------------------------
# Parsing and serialization


def _split_top(text: str) -> list[str]:
    """Split a tag on ``;`` at parenthesis depth zero."""
    items: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise TagError(f"unbalanced parentheses in {text!r}")
        elif ch == ";" and depth == 0:
            items.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise TagError(f"unbalanced parentheses in {text!r}")
    items.append(text[start:])
    return items


_ATOM_RE = re.compile(r"[^();]+")


def parse_tag(text: str, inventory: FeatureInventory | None = None) -> FeatureStructure:
    """Parse an inline layered tag such as ``V;FUT;NOM(1;PL);ACC(2;SG)``.

    Syntax errors (unbalanced parentheses, empty items, empty ``ROLE()``
    bundles, duplicate roles at one level) always raise :class:`TagError`.
    With an ``inventory``, unknown atoms, unknown roles, and two atoms from
    the same dimension are rejected as well.
    """
    text = text.strip()
    if not text:
        raise TagError("empty tag")
    atoms: list[str] = []
    bundles: list[tuple[str, FeatureStructure]] = []
    for item in _split_top(text):
        item = item.strip()
        if not item:
            raise TagError(f"empty item in {text!r}")
        if "(" in item:
            head, _, rest = item.partition("(")
            if not item.endswith(")") or not head:
                raise TagError(f"malformed item {item!r}")
            role = head.strip().upper()
            inner = rest[:-1]
            if not inner.strip():
                raise TagError(f"empty bundle {role}()")
            if inventory is not None and role not in inventory.roles:
                raise TagError(f"unknown role {role}")
            if any(label == role for label, _ in bundles):
                raise TagError(f"duplicate role {role}")
            bundles.append((role, parse_tag(inner, inventory)))
        else:
            if ")" in item:
                raise TagError(f"unbalanced parentheses in {text!r}")
            atoms.append(item.upper())
    if inventory is not None:
        by_dim: dict[str, list[str]] = {}
        for atom in atoms:
            dim = inventory.dimension_of(atom)
            if dim is None:
                raise TagError(f"unknown atomic label {atom}")
            by_dim.setdefault(dim, []).append(atom)
        for dim, labels in by_dim.items():
            if len(set(labels)) > 1:
                raise TagError(f"two atoms from dimension {dim}: {sorted(set(labels))}")
    return FeatureStructure(atoms, bundles)


def serialize(fs: FeatureStructure, inventory: FeatureInventory | None = None) -> str:
    """Render the canonical tag string of ``fs``.

    Total on all structures: labels outside the inventory sort after known
    ones, alphabetically, so the rendering is deterministic regardless of
    construction order.
    """
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    parts = sorted(fs.atoms, key=inv.atom_sort_key)
    for role, sub in sorted(fs.bundles, key=lambda kv: inv.role_sort_key(kv[0])):
        parts.append(f"{role}({serialize(sub, inv)})")
    return ";".join(parts)


def validate(fs: FeatureStructure, inventory: FeatureInventory) -> list[Violation]:
    """Collect schema violations; an empty list means the structure is valid."""
    violations: list[Violation] = []
    _validate_level(fs, inventory, "", violations)
    return violations


def _validate_level(
    fs: FeatureStructure, inv: FeatureInventory, path: str, out: list[Violation]
) -> None:
    at = f" at {path}" if path else ""
    by_dim: dict[str, set[str]] = {}
    for atom in sorted(fs.atoms):
        dim = inv.dimension_of(atom)
        if dim is None:
            out.append(Violation("unknown label", f"{atom}{at}"))
        else:
            by_dim.setdefault(dim, set()).add(atom)
    for dim in sorted(by_dim):
        labels = by_dim[dim]
        if len(labels) > 1:
            out.append(
                Violation("dimension conflict", f"{dim} ({', '.join(sorted(labels))}){at}")
            )
    for role, sub in fs.bundles:
        if role not in inv.roles:
            out.append(Violation("unknown role", f"{role}{at}"))
        _validate_level(sub, inv, f"{path}.{role}" if path else role, out)


# ---------------------------------------------------------------------------
# Legacy flat-tag conversion

_ARG_RE = re.compile(r"ARG([A-Z]{2})([123])([SP])")
_PSS_RE = re.compile(r"PSS([123])([SP])([FMN]?)")
_NUMBER_LETTERS = {"S": "SG", "P": "PL"}
_GENDER_LETTERS = {"F": "FEM", "M": "MASC", "N": "NEUT"}


def from_flat(flat: str, inventory: FeatureInventory | None = None) -> FeatureStructure:
    """Convert a legacy flat UniMorph tag to a layered structure.

    Composite tokens decompose into role bundles (``ARGAC2S`` becomes
    ``ACC(2;SG)``, ``PSS3S`` becomes ``POSS(3;SG)``); a bare word-level
    person (plus number) is wrapped as the subject bundle; relocation rules
    then pull designated word-level atoms into an existing bundle.
    """
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    flat = flat.strip()
    if not flat:
        raise TagError("empty tag")
    if "(" in flat or ")" in flat:
        raise TagError(f"not a flat tag: {flat!r}")
    codes = dict(inv.flat_arg_codes)
    atoms: list[str] = []
    bundles: dict[str, FeatureStructure] = {}

    def add_bundle(role: str, sub: FeatureStructure, token: str) -> None:
        if role in bundles:
            raise TagError(f"duplicate role {role} (token {token})")
        bundles[role] = sub

    for token in flat.split(";"):
        token = token.strip().upper()
        if not token:
            raise TagError(f"empty token in {flat!r}")
        if token.startswith("ARG") and len(token) > 3:
            m = _ARG_RE.fullmatch(token)
            if not m:
                raise TagError(f"malformed composite token {token}")
            code, person, number = m.groups()
            if code not in codes:
                raise TagError(f"composite case code {code} not in flat_arg_codes")
            add_bundle(codes[code], FeatureStructure([person, _NUMBER_LETTERS[number]]), token)
        elif token.startswith("PSS") and len(token) > 3:
            m = _PSS_RE.fullmatch(token)
            if not m:
                raise TagError(f"malformed composite token {token}")
            person, number, gender = m.groups()
            inner = [person, _NUMBER_LETTERS[number]]
            if gender:
                inner.append(_GENDER_LETTERS[gender])
            add_bundle("POSS", FeatureStructure(inner), token)
        else:
            atoms.append(token)

    # A bare person at word level is the legacy subject; its number (if any)
    # moves with it.  Number without person stays put (nominal number).
    person_atoms = [a for a in atoms if inv.dimension_of(a) == "person"]
    if person_atoms:
        moved = list(person_atoms)
        moved += [a for a in atoms if inv.dimension_of(a) == "number"]
        add_bundle(inv.subject_role, FeatureStructure(moved), person_atoms[0])
        atoms = [a for a in atoms if a not in moved]

    for rule in inv.relocation_rules:
        target = bundles.get(rule.role)
        if target is None:
            continue
        moved = [a for a in atoms if inv.dimension_of(a) == rule.dimension]
        if moved:
            bundles[rule.role] = FeatureStructure(target.atoms | set(moved), target.bundles)
            atoms = [a for a in atoms if a not in moved]

    result = FeatureStructure(atoms, bundles)
    problems = validate(result, inv)
    if problems:
        raise TagError(f"invalid flat tag {flat!r}: " + "; ".join(map(str, problems)))
    return result


def to_flat(fs: FeatureStructure, inventory: FeatureInventory | None = None) -> str:
    """Convert a layered structure back to a legacy flat tag.

    Right inverse of :func:`from_flat` on the supported fragment: bundles of
    person + number (+ gender, possessor only).  When the subject bundle is
    the only bundle it is emitted bare (``V;PRS;NOM(3;SG)`` -> ``V;PRS;3;SG``),
    the legacy spelling for plain subject agreement; a lone ``ARGNO3S``
    therefore normalizes to ``3;SG``, its equivalent.  Otherwise every
    bundle becomes a composite token.  Case stacking and other nested
    content have no flat encoding and raise :class:`FlatEncodingError`.
    Relocated atoms (e.g. possessor gender) stay inside their bundle, so
    conversions that involved a relocation rule are one-way.
    """
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    tokens = sorted(fs.atoms, key=inv.atom_sort_key)
    bundles = sorted(fs.bundles, key=lambda kv: inv.role_sort_key(kv[0]))
    bare_subject = len(bundles) == 1 and bundles[0][0] == inv.subject_role
    for role, sub in bundles:
        if sub.bundles:
            raise FlatEncodingError(
                f"no flat encoding: nested bundle under {role} (case stacking)"
            )
        person = sub.atom_in("person", inv)
        number = sub.atom_in("number", inv)
        gender = sub.atom_in("gender", inv)
        extra = sub.atoms - {person, number, gender}
        if extra or person is None:
            raise FlatEncodingError(
                f"no flat encoding for bundle {role}({serialize(sub, inv)})"
            )
        if bare_subject and gender is None:
            # The legacy bare-subject rendering has no number letter, so an
            # unmarked or dual number survives the round trip here.
            tokens += [person] if number is None else [person, number]
            continue
        number_letter = {v: k for k, v in _NUMBER_LETTERS.items()}.get(number)
        if number_letter is None:
            raise FlatEncodingError(
                f"no flat encoding for bundle {role}({serialize(sub, inv)})"
            )
        if role == "POSS":
            gender_letter = {v: k for k, v in _GENDER_LETTERS.items()}.get(gender, "")
            tokens.append(f"PSS{person}{number_letter}{gender_letter}")
        else:
            if gender is not None:
                raise FlatEncodingError(f"no flat encoding for gender under {role}")
            code = inv.arg_code_for(role)
            if code is None:
                raise FlatEncodingError(f"role {role} has no flat case code")
            tokens.append(f"ARG{code}{person}{number_letter}")
    return ";".join(tokens)


# ---------------------------------------------------------------------------
# Unification and subsumption


def unify(
    a: FeatureStructure,
    b: FeatureStructure,
    inventory: FeatureInventory | None = None,
) -> FeatureStructure:
    """Least structure subsumed by both ``a`` and ``b``.

    Atoms are unioned; two different atoms sharing an inventory dimension
    raise :class:`UnificationClash`.  Same-role bundles unify recursively.
    Commutative, associative, and idempotent up to structural equality.
    """
    inv = inventory if inventory is not None else DEFAULT_INVENTORY
    atoms = a.atoms | b.atoms
    by_dim: dict[str, list[str]] = {}
    for atom in sorted(atoms):
        dim = inv.dimension_of(atom)
        if dim is not None:
            by_dim.setdefault(dim, []).append(atom)
    for dim, labels in by_dim.items():
        if len(labels) > 1:
            raise UnificationClash(dim, (labels[0], labels[1]))
    bundles = a.bundle_map
    for role, sub in b.bundles:
        bundles[role] = unify(bundles[role], sub, inv) if role in bundles else sub
    return FeatureStructure(atoms, bundles)


def subsumes(general: FeatureStructure, specific: FeatureStructure) -> bool:
    """True iff ``specific`` carries all information of ``general``."""
    if not general.atoms <= specific.atoms:
        return False
    for role, sub in general.bundles:
        counterpart = specific.bundle(role)
        if counterpart is None or not subsumes(sub, counterpart):
            return False
    return True


# ---------------------------------------------------------------------------
# Inventory construction and I/O

_DEFAULT_DIMENSIONS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("pos", ("V", "N", "ADJ", "ADV")),
    ("person", ("1", "2", "3")),
    ("number", ("SG", "PL", "DU")),
    ("gender", ("FEM", "MASC", "NEUT")),
    ("case", ("NOM", "ERG", "ACC", "DAT", "GEN", "INS", "VOC")),
    ("tense", ("PRS", "PST", "FUT")),
    ("aspect", ("IPFV", "PFV", "PRF")),
    ("mood", ("SBJV", "COND", "OPT", "IMP")),
)


def default_inventory() -> FeatureInventory:
    """The built-in inventory used when none is supplied.

    Includes the possessor-gender relocation rule, so flat tags like
    ``N;SG;FEM;PSS3S`` convert with the gender folded into the possessor
    bundle.  The rule is inert for tags without a possessor bundle.
    """
    return FeatureInventory(
        dimensions=tuple((name, frozenset(labels)) for name, labels in _DEFAULT_DIMENSIONS),
        roles=("NOM", "ERG", "ACC", "DAT", "POSS"),
        flat_arg_codes=(("NO", "NOM"), ("ER", "ERG"), ("AC", "ACC"), ("DA", "DAT")),
        relocation_rules=(RelocationRule("gender", "POSS"),),
    )


DEFAULT_INVENTORY = default_inventory()


def load_inventory(lines: IO[str] | Iterable[str]) -> FeatureInventory:
    """Read an inventory from its line-oriented text format.

    Records are TAB-separated: ``<dimension>\\t<label>`` declares an atom
    (dimension order follows first appearance), ``role\\t<label>`` a role,
    ``flatcode\\t<code>\\t<role>`` a composite case code, and
    ``relocate\\t<dimension>\\t<role>`` a relocation rule.  ``#`` starts a
    comment; blank lines are ignored.
    """
    dim_order: list[str] = []
    dim_labels: dict[str, list[str]] = {}
    roles: list[str] = []
    codes: list[tuple[str, str]] = []
    rules: list[RelocationRule] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip("\n").strip("\r")
        if not line.strip():
            continue
        fields = [f.strip() for f in line.split("\t") if f.strip()]
        kind = fields[0].lower()
        if kind == "role" and len(fields) == 2:
            roles.append(fields[1].upper())
        elif kind == "flatcode" and len(fields) == 3:
            codes.append((fields[1].upper(), fields[2].upper()))
        elif kind == "relocate" and len(fields) == 3:
            rules.append(RelocationRule(fields[1].lower(), fields[2].upper()))
        elif len(fields) == 2 and kind not in _SENTINEL_DIMS:
            if kind not in dim_labels:
                dim_order.append(kind)
                dim_labels[kind] = []
            dim_labels[kind].append(fields[1].upper())
        else:
            raise ValueError(f"inventory line {lineno}: malformed record {line!r}")
    return FeatureInventory(
        dimensions=tuple((d, frozenset(dim_labels[d])) for d in dim_order),
        roles=tuple(roles) or ("NOM", "ERG", "ACC", "DAT", "POSS"),
        flat_arg_codes=tuple(codes),
        relocation_rules=tuple(rules),
    )


def iter_structures(fs: FeatureStructure) -> Iterator[FeatureStructure]:
    """Yield ``fs`` and every nested bundle, pre-order."""
    yield fs
    for _, sub in fs.bundles:
        yield from iter_structures(sub)
