"""Fast checks: tokenization, toy memorization, manifests, alignment."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from neural_reinflection import (
    Instance,
    ModelConfig,
    Vocab,
    predict_file,
    read_split_file,
    tag_tokens,
    train,
)
from neural_reinflection.data import input_tokens, output_tokens

# A small regular mini-language: 4 tag pairs realized as affix patterns, 5
# stems -> 20 instances, enough for a memorization check.
PATTERNS = {
    "V;PRS;NOM(1;SG)": ("v", ""),
    "V;FUT;NOM(1;PL);ACC(2;SG)": ("gagi", "ebt"),
    "V;PST;PFV;ERG(3;SG)": ("ga", "a"),
    "V;OPT;NOM(2;PL)": ("", "odet"),
}
STEMS = ("bar", "dgham", "ckv", "lur", "pex")


def toy_instances() -> list[Instance]:
    tags = list(PATTERNS)
    instances = []
    for i, stem in enumerate(STEMS):
        for j in range(len(tags)):
            src, tgt = tags[j], tags[(j + i) % len(tags)]
            if src == tgt:
                tgt = tags[(j + i + 1) % len(tags)]
            instances.append(
                Instance(
                    lemma=stem,
                    source_tag=src,
                    source_form=PATTERNS[src][0] + stem + PATTERNS[src][1],
                    target_tag=tgt,
                    target_form=PATTERNS[tgt][0] + stem + PATTERNS[tgt][1],
                )
            )
    return instances


def write_split(path, instances, with_target=True):
    with open(path, "w", encoding="utf-8") as stream:
        for inst in instances:
            fields = [inst.lemma, inst.source_tag, inst.source_form, inst.target_tag]
            if with_target:
                fields.append(inst.target_form)
            stream.write("\t".join(fields) + "\n")
    return path


class TestTokenization:
    def test_tag_tokens_keep_bundle_brackets(self):
        assert tag_tokens("V;FUT;NOM(1;PL);ACC(2;SG)") == [
            "V", "FUT", "NOM(", "1", "PL", ")", "ACC(", "2", "SG", ")",
        ]

    def test_nested_bundles(self):
        assert tag_tokens("N;SG;NOM(DAT)") == ["N", "SG", "NOM(", "DAT", ")"]

    def test_input_is_chars_plus_both_tags(self):
        inst = Instance("L", "V;PRS", "ab", "V;FUT", "cd")
        assert input_tokens(inst) == ["a", "b", "<sep>", "V", "PRS", "<sep>", "V", "FUT"]
        assert output_tokens(inst) == ["c", "d"]

    def test_vocab_unknowns(self):
        vocab = Vocab(["a", "b"])
        ids = vocab.encode(["a", "z"])
        assert vocab.itos[ids[0]] == "a"
        assert vocab.itos[ids[1]] == "<unk>"


@pytest.fixture(scope="module")
def toy_model(tmp_path_factory):
    root = tmp_path_factory.mktemp("toy")
    instances = toy_instances()
    train_file = write_split(root / "train.tsv", instances)
    config = ModelConfig(seed=7, max_epochs=200, patience=200, batch_size=20)
    manifest = train(config, train_file, train_file, root / "model", quiet=True)
    return root, train_file, instances, config, manifest


class TestTraining:
    def test_overfits_toy_set(self, toy_model):
        root, train_file, instances, _, _ = toy_model
        predictions = predict_file(root / "model", train_file)
        correct = sum(p == i.target_form for p, i in zip(predictions, instances))
        assert correct / len(instances) >= 0.95

    def test_manifest_round_trips_config(self, toy_model):
        root, _, _, config, manifest = toy_model
        reread = json.loads((root / "model" / "manifest.json").read_text("utf-8"))
        assert reread["config"] == manifest["config"]
        assert ModelConfig(**reread["config"]) == config

    def test_vocab_covers_training_tokens(self, toy_model):
        root, _, instances, _, manifest = toy_model
        vocab = set(manifest["vocab"])
        for inst in instances:
            assert set(input_tokens(inst)) <= vocab
            assert set(output_tokens(inst)) <= vocab

    def test_decode_length_bound_recorded(self, toy_model):
        _, _, instances, _, manifest = toy_model
        longest = max(len(i.target_form) for i in instances)
        assert manifest["max_decode_len"] == 2 * longest + 5

    def test_predicting_training_inputs_reproduces_targets(self, toy_model):
        root, _, instances, _, _ = toy_model
        inputs = write_split(root / "inputs.tsv", instances, with_target=False)
        predictions = predict_file(root / "model", inputs)
        assert len(predictions) == len(instances)
        correct = sum(p == i.target_form for p, i in zip(predictions, instances))
        assert correct / len(instances) >= 0.95


class TestPrediction:
    def test_empty_test_file(self, toy_model, tmp_path):
        root, *_ = toy_model
        empty = tmp_path / "empty.tsv"
        empty.write_text("", encoding="utf-8")
        assert predict_file(root / "model", empty) == []

    def test_alignment_and_unknown_symbols(self, toy_model, tmp_path):
        root, *_ = toy_model
        lines = [
            Instance("L", "V;PRS;NOM(1;SG)", "vzzzqqq", "V;OPT;NOM(2;PL)", ""),
            Instance("L", "V;PRS;NOM(1;SG)", "日本語", "V;QQQ(9;XX)", ""),
        ]
        path = write_split(tmp_path / "odd.tsv", lines, with_target=False)
        predictions = predict_file(root / "model", path)
        assert len(predictions) == 2  # unknown characters never break alignment

    def test_missing_model_dir(self, tmp_path):
        with pytest.raises(OSError):
            predict_file(tmp_path / "nope", tmp_path / "also-nope.tsv")


class TestDeterminism:
    def test_same_seed_same_predictions(self, tmp_path):
        instances = toy_instances()
        train_file = write_split(tmp_path / "train.tsv", instances)
        config = ModelConfig(seed=3, max_epochs=8, patience=8, batch_size=10)
        train(config, train_file, train_file, tmp_path / "m1", quiet=True)
        train(config, train_file, train_file, tmp_path / "m2", quiet=True)
        assert predict_file(tmp_path / "m1", train_file) == predict_file(
            tmp_path / "m2", train_file
        )


class TestCommandLine:
    def test_train_and_predict_invocation(self, tmp_path):
        instances = toy_instances()
        train_file = write_split(tmp_path / "train.tsv", instances)
        test_file = write_split(tmp_path / "test.tsv", instances[:3], with_target=False)
        predictions = tmp_path / "pred.txt"
        train_cmd = [
            sys.executable, "-m", "neural_reinflection",
            "--train", str(train_file), "--dev", str(train_file),
            "--model-dir", str(tmp_path / "model"), "--seed", "5",
            "--embedding-size", "32", "--hidden-size", "32",
            "--attention-size", "32", "--lstm-layers", "1",
            "--max-epochs", "3", "--quiet",
        ]
        assert subprocess.run(train_cmd).returncode == 0
        predict_cmd = [
            sys.executable, "-m", "neural_reinflection",
            "--model-dir", str(tmp_path / "model"),
            "--test", str(test_file), "--predictions", str(predictions),
        ]
        assert subprocess.run(predict_cmd).returncode == 0
        assert len(predictions.read_text("utf-8").splitlines()) == 3
        manifest = json.loads(
            (tmp_path / "model" / "manifest.json").read_text("utf-8")
        )
        assert manifest["config"]["hidden_size"] == 32

    def test_bad_file_is_data_error(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("only\ttwo\n", encoding="utf-8")
        result = subprocess.run(
            [sys.executable, "-m", "neural_reinflection",
             "--train", str(bad), "--dev", str(bad),
             "--model-dir", str(tmp_path / "m")],
            capture_output=True, text=True,
        )
        assert result.returncode == 1
        assert "error" in result.stderr
