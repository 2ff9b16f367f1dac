"""Scoring for reinflection predictions, plus the learning-curve driver.

Two metrics: exact-match accuracy and average Levenshtein distance from the
reference form.  Distances are computed over Unicode scalar values (never
bytes: Georgian script is multi-byte in UTF-8), and both strings are NFC
normalized first so that composed and decomposed spellings compare equal.
"""

from __future__ import annotations

import shlex
import subprocess
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Callable, Iterable, Sequence

from .splitting import ReinflectionInstance, write_instances


class HarnessError(RuntimeError):
    """An external train/predict command failed."""


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance with unit-cost insert, delete, and substitute."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ch_a in enumerate(a, start=1):
        current = [i] + [0] * len(b)
        for j, ch_b in enumerate(b, start=1):
            current[j] = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ch_a != ch_b),
            )
        previous = current
    return previous[-1]


@dataclass(frozen=True)
class PredictionRecord:
    gold: str
    prediction: str
    distance: int
    exact: bool


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    avg_edit_distance: float
    n: int
    records: tuple[PredictionRecord, ...]

    def format_text(self) -> str:
        return (
            f"instances\t{self.n}\n"
            f"accuracy\t{self.accuracy:.4f}\n"
            f"avg_edit_distance\t{self.avg_edit_distance:.4f}\n"
        )

    def csv_rows(self) -> list[tuple[str, str, str, str]]:
        rows = [("gold", "prediction", "edit_distance", "exact")]
        for r in self.records:
            rows.append((r.gold, r.prediction, str(r.distance), str(int(r.exact))))
        return rows


def evaluate(
    predictions: Sequence[str], gold: Sequence[ReinflectionInstance]
) -> EvalReport:
    """Score predictions against gold target forms, aligned by position."""
    if len(predictions) != len(gold):
        raise ValueError(
            f"{len(predictions)} predictions for {len(gold)} gold instances"
        )
    if not gold:
        raise ValueError("nothing to evaluate")
    records = []
    for predicted, inst in zip(predictions, gold):
        p = unicodedata.normalize("NFC", predicted)
        g = unicodedata.normalize("NFC", inst.target_form)
        records.append(PredictionRecord(g, p, edit_distance(p, g), p == g))
    n = len(records)
    return EvalReport(
        accuracy=sum(r.exact for r in records) / n,
        avg_edit_distance=sum(r.distance for r in records) / n,
        n=n,
        records=tuple(records),
    )


def read_predictions(lines: IO[str] | Iterable[str]) -> list[str]:
    """One surface form per line, aligned with the split file."""
    return [line.rstrip("\n").rstrip("\r") for line in lines]


# ---------------------------------------------------------------------------
# Learning curve


def run_command(template: str, **paths: str) -> None:
    """Run one harness command; placeholders are substituted per argument."""
    argv = [token.format(**paths) for token in shlex.split(template)]
    result = subprocess.run(argv)
    if result.returncode != 0:
        raise HarnessError(f"command {argv[0]!r} exited with status {result.returncode}")


def learning_curve(
    train_sizes: Sequence[int],
    train_cmd: str,
    predict_cmd: str,
    train: Sequence[ReinflectionInstance],
    dev: Sequence[ReinflectionInstance],
    test: Sequence[ReinflectionInstance],
    workdir: str | Path,
    evaluate_fn: Callable[[Sequence[str], Sequence[ReinflectionInstance]], EvalReport] = evaluate,
) -> list[tuple[int, float, float]]:
    """Accuracy as a function of train size, on nested subsamples.

    For each size the first ``size`` training instances are used (so smaller
    samples are subsets of larger ones), the harness commands are run, and
    the predictions are scored against ``test``.  Command templates may use
    the placeholders ``{train}``, ``{dev}``, ``{test}``, ``{model_dir}``, and
    ``{predictions}``.  Returns (size, accuracy, avg_edit_distance) rows.
    """
    sizes = list(train_sizes)
    if sizes != sorted(sizes):
        raise ValueError("train sizes must be ascending")
    if sizes and sizes[-1] > len(train):
        raise ValueError(f"train size {sizes[-1]} exceeds {len(train)} instances")
    workdir = Path(workdir)
    workdir.mkdir(parents=True, exist_ok=True)
    dev_file = workdir / "dev.tsv"
    test_file = workdir / "test.tsv"
    with open(dev_file, "w", encoding="utf-8") as f:
        write_instances(dev, f)
    with open(test_file, "w", encoding="utf-8") as f:
        write_instances(test, f, with_target_form=False)
    rows: list[tuple[int, float, float]] = []
    for size in sizes:
        run_dir = workdir / f"size-{size}"
        run_dir.mkdir(exist_ok=True)
        train_file = run_dir / "train.tsv"
        with open(train_file, "w", encoding="utf-8") as f:
            write_instances(train[:size], f)
        predictions_file = run_dir / "predictions.txt"
        paths = dict(
            train=str(train_file),
            dev=str(dev_file),
            test=str(test_file),
            model_dir=str(run_dir / "model"),
            predictions=str(predictions_file),
        )
        run_command(train_cmd, **paths)
        run_command(predict_cmd, **paths)
        with open(predictions_file, encoding="utf-8") as f:
            predictions = read_predictions(f)
        report = evaluate_fn(predictions, test)
        rows.append((size, report.accuracy, report.avg_edit_distance))
    return rows


def write_curve_csv(rows: Iterable[tuple[int, float, float]], stream: IO[str]) -> None:
    stream.write("train_size,accuracy,avg_ed\n")
    for size, accuracy, avg_ed in rows:
        stream.write(f"{size},{accuracy:.4f},{avg_ed:.4f}\n")
