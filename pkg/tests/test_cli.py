"""Command-line interface: dispatch, exit codes, determinism."""

from __future__ import annotations

import subprocess
import sys

import pytest

from morphlayers.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasics:
    def test_parse_echoes_canonical(self, capsys):
        code, out, err = run(capsys, "parse", "v;acc(2;sg);fut;nom(1;pl)")
        assert code == 0
        assert out.strip() == "V;FUT;NOM(1;PL);ACC(2;SG)"

    def test_parse_bad_tag_is_data_error(self, capsys):
        code, out, err = run(capsys, "parse", "V;NOM(")
        assert code == 1
        assert "error" in err

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["split", "--policy", "sideways"])
        assert excinfo.value.code == 2

    def test_help_lists_subcommands(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--help"])
        assert excinfo.value.code == 0
        out = capsys.readouterr().out
        for name in (
            "parse", "convert", "validate", "generate", "split", "make-instances",
            "evaluate", "baseline-train", "baseline-predict", "learning-curve",
            "transliterate",
        ):
            assert name in out

    def test_module_entry_point(self):
        result = subprocess.run(
            [sys.executable, "-m", "morphlayers", "parse", "V"],
            capture_output=True, text=True,
        )
        assert result.returncode == 0
        assert result.stdout.strip() == "V"

    def test_custom_inventory_file(self, capsys, tmp_path):
        inventory = tmp_path / "inv.tsv"
        inventory.write_text(
            "pos\tV\nevidentiality\tREP\nrole\tNOM\n", encoding="utf-8"
        )
        code, out, _ = run(capsys, "parse", "--inventory", str(inventory), "v;rep")
        assert code == 0 and out.strip() == "V;REP"
        code, _, err = run(capsys, "parse", "--inventory", str(inventory), "v;fut")
        assert code == 1 and "unknown atomic label" in err


class TestConvert:
    def test_from_flat(self, capsys, tmp_path):
        src = tmp_path / "flat.txt"
        src.write_text("V;FUT;ARGNO1P;ARGAC2S\n", encoding="utf-8")
        code, out, _ = run(capsys, "convert", "--from-flat", "--in", str(src))
        assert code == 0
        assert out == "V;FUT;NOM(1;PL);ACC(2;SG)\n"

    def test_to_flat(self, capsys, tmp_path):
        src = tmp_path / "layered.txt"
        src.write_text("V;PRS;NOM(3;SG)\n", encoding="utf-8")
        code, out, _ = run(capsys, "convert", "--to-flat", "--in", str(src))
        assert code == 0
        assert out == "V;PRS;3;SG\n"

    def test_data_error_reports_line(self, capsys, tmp_path):
        src = tmp_path / "flat.txt"
        src.write_text("V;PRS\nV;ARGXX1S\n", encoding="utf-8")
        code, _, err = run(capsys, "convert", "--from-flat", "--in", str(src))
        assert code == 1
        assert "line 2" in err


class TestValidate:
    def test_valid_and_invalid_lines(self, capsys, tmp_path):
        src = tmp_path / "tags.txt"
        src.write_text("V;FUT;NOM(1;PL)\nV;PRS;FUT\nQQQ(1;SG)\n", encoding="utf-8")
        code, out, _ = run(capsys, "validate", "--in", str(src))
        assert code == 1
        assert "line 2" in out and "dimension conflict" in out
        assert "line 3" in out and "unknown role" in out

    def test_clean_file_exits_zero(self, capsys, tmp_path):
        src = tmp_path / "tags.txt"
        src.write_text("V;FUT;NOM(1;PL)\n", encoding="utf-8")
        code, out, _ = run(capsys, "validate", "--in", str(src))
        assert code == 0 and out == ""


class TestTransliterate:
    def test_forward(self, capsys):
        code, out, _ = run(capsys, "transliterate", "გაგიშვებთ")
        assert code == 0 and out.strip() == "gagišvebt"

    def test_reverse(self, capsys):
        code, out, _ = run(capsys, "transliterate", "--reverse", "gagišvebt")
        assert code == 0 and out.strip() == "გაგიშვებთ"


@pytest.fixture(scope="module")
def tables_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "tables.tsv"
    code = main(["generate", "--out", str(path)])
    assert code == 0
    return path


class TestPipeline:
    def test_generate_output_reads_back(self, tables_file):
        from morphlayers import group_by_lemma, read_unimorph, sample_lexicon

        with open(tables_file, encoding="utf-8") as f:
            tables = group_by_lemma(read_unimorph(f))
        assert len(tables) == len(sample_lexicon())

    def test_generate_parallel_matches_serial(self, tables_file, tmp_path):
        out = tmp_path / "parallel.tsv"
        assert main(["generate", "--parallel", "2", "--out", str(out)]) == 0
        assert out.read_bytes() == tables_file.read_bytes()

    def test_third_person_object_flag(self, tmp_path):
        out = tmp_path / "third.tsv"
        assert main(["generate", "--third-person-objects-only", "--out", str(out)]) == 0
        text = out.read_text(encoding="utf-8")
        assert "ACC(1" not in text and "ACC(2" not in text

    def test_synthetic_lexicon_generation(self, tmp_path, capsys):
        out = tmp_path / "synth.tsv"
        argv = [
            "generate", "--synthetic", "transitive=2,stative=1",
            "--synthetic-seed", "3", "--out", str(out),
        ]
        assert main(argv) == 0
        from morphlayers import group_by_lemma, read_unimorph

        with open(out, encoding="utf-8") as f:
            tables = group_by_lemma(read_unimorph(f))
        assert sorted(len(t) for t in tables) == [18, 294, 294]
        code, _, err = run(capsys, "generate", "--synthetic", "transitive=2")
        assert code == 1 and "synthetic-seed" in err

    def test_split_deterministic_and_full_round(self, tables_file, tmp_path, capsys):
        instances = tmp_path / "instances.tsv"
        code = main([
            "make-instances", "--tables", str(tables_file),
            "--count", "600", "--seed", "7", "--out", str(instances),
        ])
        assert code == 0
        for prefix in ("a", "b"):
            code = main([
                "split", "--instances", str(instances), "--policy", "lemma",
                "--sizes", "300,100,100", "--seed", "7",
                "--out-prefix", str(tmp_path / prefix),
            ])
            assert code == 0
        for part in ("train", "dev", "test"):
            a = (tmp_path / f"a.{part}.tsv").read_bytes()
            b = (tmp_path / f"b.{part}.tsv").read_bytes()
            assert a == b

        model = tmp_path / "model.json"
        assert main([
            "baseline-train", "--train", str(tmp_path / "a.train.tsv"),
            "--model", str(model),
        ]) == 0
        predictions = tmp_path / "pred.txt"
        assert main([
            "baseline-predict", "--model", str(model),
            "--in", str(tmp_path / "a.test.tsv"), "--out", str(predictions),
        ]) == 0
        assert len(predictions.read_text(encoding="utf-8").splitlines()) == 100
        code, out, _ = run(capsys, "evaluate",
                           "--gold", str(tmp_path / "a.test.tsv"),
                           "--predictions", str(predictions))
        assert code == 0
        assert "accuracy" in out and "instances\t100" in out

    def test_missing_file_is_data_error(self, capsys):
        code, _, err = run(capsys, "evaluate", "--gold", "/no/such/file",
                           "--predictions", "/no/such/file")
        assert code == 1 and "error" in err
