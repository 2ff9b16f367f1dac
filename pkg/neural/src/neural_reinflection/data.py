"""Reading split files and turning instances into token sequences.

Split files are the 5-column TSV interchange format (``lemma  source_tag
source_form  target_tag  target_form``); model inputs may omit the final
column.  The input sequence of an instance is the source form, character by
character, followed by the source and target tag token sequences; tags keep
their bundle structure visible to the model by tokenizing ``NOM(1;PL)`` as
``NOM(  1  PL  )``.  The output sequence is the target form's characters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

PAD, SOS, EOS, UNK, SEP = "<pad>", "<sos>", "<eos>", "<unk>", "<sep>"
SPECIALS = (PAD, SOS, EOS, UNK, SEP)


@dataclass(frozen=True)
class Instance:
    lemma: str
    source_tag: str
    source_form: str
    target_tag: str
    target_form: str = ""


def read_split_file(path: str | Path) -> list[Instance]:
    instances: list[Instance] = []
    with open(path, encoding="utf-8") as stream:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) not in (4, 5):
                raise ValueError(
                    f"{path}: line {lineno}: expected 4 or 5 fields, got {len(fields)}"
                )
            instances.append(Instance(*fields) if len(fields) == 5 else Instance(*fields, ""))
    return instances


def tag_tokens(tag: str) -> list[str]:
    """Flatten a layered tag into discrete symbols, keeping bundle brackets.

    ``V;FUT;NOM(1;PL);ACC(2;SG)`` becomes ``V FUT NOM( 1 PL ) ACC( 2 SG )``.
    """
    tokens: list[str] = []
    current = ""
    for ch in tag:
        if ch == ";":
            if current:
                tokens.append(current)
            current = ""
        elif ch == "(":
            tokens.append(current + "(")
            current = ""
        elif ch == ")":
            if current:
                tokens.append(current)
            current = ""
            tokens.append(")")
        else:
            current += ch
    if current:
        tokens.append(current)
    return tokens


def input_tokens(instance: Instance) -> list[str]:
    return (
        list(instance.source_form)
        + [SEP]
        + tag_tokens(instance.source_tag)
        + [SEP]
        + tag_tokens(instance.target_tag)
    )


def output_tokens(instance: Instance) -> list[str]:
    return list(instance.target_form)


class Vocab:
    """Token-to-id mapping; id 0 is padding and unknowns map to ``<unk>``."""

    def __init__(self, tokens: Iterable[str]):
        self.itos = list(SPECIALS) + sorted(set(tokens) - set(SPECIALS))
        self.stoi = {token: i for i, token in enumerate(self.itos)}

    def __len__(self) -> int:
        return len(self.itos)

    def __contains__(self, token: str) -> bool:
        return token in self.stoi

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vocab) and self.itos == other.itos

    @classmethod
    def from_instances(cls, instances: Iterable[Instance]) -> "Vocab":
        tokens: set[str] = set()
        for inst in instances:
            tokens.update(input_tokens(inst))
            tokens.update(output_tokens(inst))
        return cls(tokens)

    def encode(self, tokens: Iterable[str], append_eos: bool = False) -> list[int]:
        unk = self.stoi[UNK]
        ids = [self.stoi.get(token, unk) for token in tokens]
        if append_eos:
            ids.append(self.stoi[EOS])
        return ids

    def decode_form(self, ids: Iterable[int]) -> str:
        chars: list[str] = []
        eos = self.stoi[EOS]
        for i in ids:
            if i == eos:
                break
            token = self.itos[i]
            if token not in SPECIALS:
                chars.append(token)
        return "".join(chars)

    def to_json(self) -> list[str]:
        return list(self.itos)

    @classmethod
    def from_json(cls, itos: list[str]) -> "Vocab":
        vocab = cls.__new__(cls)
        vocab.itos = list(itos)
        vocab.stoi = {token: i for i, token in enumerate(vocab.itos)}
        return vocab


def write_predictions(forms: Iterable[str], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as stream:
        for form in forms:
            stream.write(form + "\n")


def load_json(path: str | Path) -> dict:
    with open(path, encoding="utf-8") as stream:
        return json.load(stream)
