"""Training loop with early stopping on dev exact-match accuracy.

A trained model directory holds ``weights.pt`` plus ``manifest.json`` with
the full configuration, the vocabulary, the decode length bound (twice the
longest training form plus five), and the best dev score.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from pathlib import Path

import torch
from torch import nn

from .data import (
    EOS,
    SOS,
    Instance,
    Vocab,
    input_tokens,
    load_json,
    output_tokens,
    read_split_file,
)
from .model import Seq2SeqAttention

MANIFEST_NAME = "manifest.json"
WEIGHTS_NAME = "weights.pt"


@dataclass(frozen=True)
class ModelConfig:
    embedding_size: int = 100
    hidden_size: int = 100
    attention_size: int = 100
    lstm_layers: int = 1
    seed: int = 1
    max_epochs: int = 60
    patience: int = 10
    batch_size: int = 64
    learning_rate: float = 1e-3

    def __post_init__(self) -> None:
        for name in ("embedding_size", "hidden_size", "attention_size",
                     "lstm_layers", "max_epochs", "patience", "batch_size"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _pad_batch(sequences: list[list[int]]) -> tuple[torch.Tensor, torch.Tensor]:
    lengths = torch.tensor([len(s) for s in sequences], dtype=torch.long)
    width = int(lengths.max()) if len(sequences) else 0
    batch = torch.zeros((len(sequences), width), dtype=torch.long)
    for i, seq in enumerate(sequences):
        batch[i, : len(seq)] = torch.tensor(seq, dtype=torch.long)
    return batch, lengths


def _batches(items: list, size: int) -> list[list]:
    return [items[i : i + size] for i in range(0, len(items), size)]


def decode_instances(
    model: Seq2SeqAttention,
    vocab: Vocab,
    instances: list[Instance],
    max_len: int,
    batch_size: int = 128,
) -> list[str]:
    """Greedy predictions for ``instances``, in their input order."""
    model.eval()
    predictions: list[str] = [""] * len(instances)
    order = sorted(range(len(instances)), key=lambda i: -len(input_tokens(instances[i])))
    for chunk in _batches(order, batch_size):
        src, lengths = _pad_batch(
            [vocab.encode(input_tokens(instances[i])) for i in chunk]
        )
        decoded = model.greedy_decode(
            src, lengths, sos=vocab.stoi[SOS], eos=vocab.stoi[EOS], max_len=max_len
        )
        for row, i in enumerate(chunk):
            predictions[i] = vocab.decode_form(decoded[row].tolist())
    return predictions


def _exact_match(model, vocab, instances, max_len) -> float:
    if not instances:
        return 0.0
    predictions = decode_instances(model, vocab, instances, max_len)
    return sum(p == inst.target_form for p, inst in zip(predictions, instances)) / len(
        instances
    )


def train(
    config: ModelConfig,
    train_file: str | Path,
    dev_file: str | Path,
    model_dir: str | Path,
    quiet: bool = False,
) -> dict:
    """Train on ``train_file``, early-stop on ``dev_file`` accuracy, save, and
    return the manifest."""
    train_set = read_split_file(train_file)
    dev_set = read_split_file(dev_file)
    if not train_set:
        raise ValueError(f"{train_file}: empty training set")
    torch.manual_seed(config.seed)
    rng = random.Random(config.seed)

    vocab = Vocab.from_instances(train_set)
    max_len = 2 * max(len(inst.target_form) for inst in train_set) + 5
    model = Seq2SeqAttention(
        len(vocab),
        config.embedding_size,
        config.hidden_size,
        config.attention_size,
        config.lstm_layers,
    )
    optimizer = torch.optim.Adam(model.parameters(), lr=config.learning_rate)
    loss_fn = nn.CrossEntropyLoss(ignore_index=0)

    # Length-sorted batches keep padding small; batch order is reshuffled
    # each epoch.
    by_length = sorted(train_set, key=lambda inst: len(input_tokens(inst)))
    batches = _batches(by_length, config.batch_size)
    encoded = {}
    for inst in train_set:
        target = vocab.encode(output_tokens(inst), append_eos=True)
        encoded[inst] = (
            vocab.encode(input_tokens(inst)),
            [vocab.stoi[SOS]] + target[:-1],
            target,
        )

    best_accuracy = -1.0
    best_state = None
    best_epoch = 0
    epochs_without_improvement = 0
    epochs_run = 0
    for epoch in range(1, config.max_epochs + 1):
        epochs_run = epoch
        model.train()
        rng.shuffle(batches)
        total_loss = 0.0
        for batch in batches:
            src, src_lengths = _pad_batch([encoded[i][0] for i in batch])
            dec_in, _ = _pad_batch([encoded[i][1] for i in batch])
            target, _ = _pad_batch([encoded[i][2] for i in batch])
            optimizer.zero_grad()
            logits = model(src, src_lengths, dec_in)
            loss = loss_fn(logits.reshape(-1, logits.size(-1)), target.reshape(-1))
            loss.backward()
            nn.utils.clip_grad_norm_(model.parameters(), 5.0)
            optimizer.step()
            total_loss += float(loss.detach())
        accuracy = _exact_match(model, vocab, dev_set, max_len)
        if not quiet:
            print(
                f"epoch {epoch:3d}  loss {total_loss / len(batches):.4f}  "
                f"dev accuracy {accuracy:.4f}",
                flush=True,
            )
        if accuracy > best_accuracy:
            best_accuracy = accuracy
            best_state = {k: v.clone() for k, v in model.state_dict().items()}
            best_epoch = epoch
            epochs_without_improvement = 0
        else:
            epochs_without_improvement += 1
            if epochs_without_improvement >= config.patience:
                break

    if best_state is not None:
        model.load_state_dict(best_state)
    model_dir = Path(model_dir)
    model_dir.mkdir(parents=True, exist_ok=True)
    torch.save(model.state_dict(), model_dir / WEIGHTS_NAME)
    manifest = {
        "config": asdict(config),
        "vocab": vocab.to_json(),
        "max_decode_len": max_len,
        "best_epoch": best_epoch,
        "epochs_run": epochs_run,
        "dev_accuracy": best_accuracy,
        "train_instances": len(train_set),
    }
    with open(model_dir / MANIFEST_NAME, "w", encoding="utf-8") as stream:
        json.dump(manifest, stream, ensure_ascii=False, indent=1)
    return manifest


def load_model(model_dir: str | Path) -> tuple[Seq2SeqAttention, Vocab, dict]:
    model_dir = Path(model_dir)
    manifest = load_json(model_dir / MANIFEST_NAME)
    vocab = Vocab.from_json(manifest["vocab"])
    cfg = manifest["config"]
    model = Seq2SeqAttention(
        len(vocab),
        cfg["embedding_size"],
        cfg["hidden_size"],
        cfg["attention_size"],
        cfg["lstm_layers"],
    )
    state = torch.load(model_dir / WEIGHTS_NAME, map_location="cpu", weights_only=True)
    model.load_state_dict(state)
    model.eval()
    return model, vocab, manifest


def predict_file(
    model_dir: str | Path, test_file: str | Path
) -> list[str]:
    """One greedy-decoded form per input line, aligned with the file."""
    instances = read_split_file(test_file)
    if not instances:
        return []
    model, vocab, manifest = load_model(model_dir)
    return decode_instances(model, vocab, instances, manifest["max_decode_len"])
