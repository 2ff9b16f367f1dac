"""A deterministic affix-rewrite reinflection baseline.

For every training pair the longest common substring of source and target
forms is treated as the stem; the residues on each side define a prefix edit
and a suffix edit, keyed by the (source tag, target tag) pair.  Prediction
applies the best-supported applicable rule for the requested tag pair and
falls back to copying the source form, so it is total and needs no neural
machinery.  Adequate for agglutinative affixation; stem-internal changes are
out of reach by design.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .features import FeatureInventory, serialize
from .splitting import ReinflectionInstance


@dataclass(frozen=True)
class RewriteRule:
    """Strip/add edits at both ends of the form, with training support."""

    strip_prefix: str
    add_prefix: str
    strip_suffix: str
    add_suffix: str
    support: int = 1

    def applicable(self, form: str) -> bool:
        return (
            len(form) >= len(self.strip_prefix) + len(self.strip_suffix)
            and form.startswith(self.strip_prefix)
            and form.endswith(self.strip_suffix)
        )

    def apply(self, form: str) -> str:
        end = len(form) - len(self.strip_suffix)
        return self.add_prefix + form[len(self.strip_prefix):end] + self.add_suffix

    def render(self) -> str:
        return (
            f"{self.strip_prefix}-|-{self.strip_suffix}"
            f">{self.add_prefix}-|-{self.add_suffix}"
        )


def longest_common_substring(a: str, b: str) -> tuple[int, int, int]:
    """(start in a, start in b, length) of the leftmost-longest common substring."""
    best = (0, 0, 0)
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                cur[j] = prev[j - 1] + 1
                length = cur[j]
                start_a, start_b = i - length, j - length
                if length > best[2] or (
                    length == best[2] and (start_a, start_b) < (best[0], best[1])
                ):
                    best = (start_a, start_b, length)
        prev = cur
    return best


def edits_for_pair(source: str, target: str) -> RewriteRule:
    start_s, start_t, length = longest_common_substring(source, target)
    if length == 0:
        return RewriteRule(source, target, "", "")
    return RewriteRule(
        strip_prefix=source[:start_s],
        add_prefix=target[:start_t],
        strip_suffix=source[start_s + length:],
        add_suffix=target[start_t + length:],
    )


@dataclass
class BaselineModel:
    """Rules per (source tag, target tag) pair, best-supported first."""

    rules: dict[tuple[str, str], list[RewriteRule]]

    def rules_for(self, source_tag: str, target_tag: str) -> list[RewriteRule]:
        return self.rules.get((source_tag, target_tag), [])


def train_baseline(
    train: Sequence[ReinflectionInstance],
    inventory: FeatureInventory | None = None,
) -> BaselineModel:
    if not train:
        raise ValueError("empty training set")
    counts: Counter[tuple[tuple[str, str], RewriteRule]] = Counter()
    for inst in train:
        key = (serialize(inst.source_tag, inventory), serialize(inst.target_tag, inventory))
        edit = edits_for_pair(inst.source_form, inst.target_form)
        counts[(key, edit)] += 1
    rules: dict[tuple[str, str], list[RewriteRule]] = {}
    for (key, edit), support in counts.items():
        rules.setdefault(key, []).append(
            RewriteRule(
                edit.strip_prefix, edit.add_prefix, edit.strip_suffix, edit.add_suffix,
                support=support,
            )
        )
    for key in rules:
        rules[key].sort(key=lambda r: (-r.support, r.render()))
    return BaselineModel(rules)


def predict_baseline(model: BaselineModel, instance: ReinflectionInstance,
                     inventory: FeatureInventory | None = None) -> str:
    """Highest-support applicable rule, else copy the source form."""
    source_tag = serialize(instance.source_tag, inventory)
    target_tag = serialize(instance.target_tag, inventory)
    for rule in model.rules_for(source_tag, target_tag):
        if rule.applicable(instance.source_form):
            return rule.apply(instance.source_form)
    return instance.source_form


def predict_all(model: BaselineModel, instances: Iterable[ReinflectionInstance],
                inventory: FeatureInventory | None = None) -> list[str]:
    return [predict_baseline(model, inst, inventory) for inst in instances]


# ---------------------------------------------------------------------------
# Model persistence


def save_model(model: BaselineModel, stream: IO[str]) -> None:
    payload = [
        {
            "source_tag": source_tag,
            "target_tag": target_tag,
            "strip_prefix": r.strip_prefix,
            "add_prefix": r.add_prefix,
            "strip_suffix": r.strip_suffix,
            "add_suffix": r.add_suffix,
            "support": r.support,
        }
        for (source_tag, target_tag), rule_list in sorted(model.rules.items())
        for r in rule_list
    ]
    json.dump({"format": "affix-rewrite-rules", "rules": payload}, stream,
              ensure_ascii=False, indent=1)


def load_model(stream: IO[str]) -> BaselineModel:
    payload = json.load(stream)
    if payload.get("format") != "affix-rewrite-rules":
        raise ValueError("not a baseline model file")
    rules: dict[tuple[str, str], list[RewriteRule]] = {}
    for item in payload["rules"]:
        key = (item["source_tag"], item["target_tag"])
        rules.setdefault(key, []).append(
            RewriteRule(
                item["strip_prefix"], item["add_prefix"],
                item["strip_suffix"], item["add_suffix"], item["support"],
            )
        )
    for key in rules:
        rules[key].sort(key=lambda r: (-r.support, r.render()))
    return BaselineModel(rules)
