"""Command-line entry point: one subcommand per toolkit operation.

Exit codes: 0 success, 1 data error (diagnostics on stderr), 2 usage error.
File arguments default to standard input/output where a single stream
suffices; sampling subcommands require an explicit ``--seed`` so no artifact
is irreproducible.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator

from . import baseline, georgian, metrics, splitting, unimorph
from .features import (
    DEFAULT_INVENTORY,
    FeatureInventory,
    load_inventory,
    parse_tag,
    serialize,
    to_flat,
    from_flat,
    validate,
)


@contextmanager
def _in_stream(path: str | None) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as f:
            yield f


@contextmanager
def _out_stream(path: str | None) -> Iterator[IO[str]]:
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as f:
            yield f


def _inventory(args: argparse.Namespace) -> FeatureInventory:
    if getattr(args, "inventory", None):
        with open(args.inventory, encoding="utf-8") as f:
            return load_inventory(f)
    return DEFAULT_INVENTORY


def _config(args: argparse.Namespace) -> georgian.GeorgianConfig:
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as f:
            return georgian.load_config(f)
    return georgian.default_config()


def _sizes(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sizes must be train,dev,test")
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def _int_list(text: str) -> list[int]:
    return [int(p) for p in text.split(",") if p]


# ---------------------------------------------------------------------------
# Subcommand implementations


def _cmd_parse(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    print(serialize(parse_tag(args.tag, inv), inv))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with _in_stream(args.infile) as src, _out_stream(args.out) as dst:
        for lineno, raw in enumerate(src, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                if args.from_flat:
                    dst.write(serialize(from_flat(line, inv), inv) + "\n")
                else:
                    dst.write(to_flat(parse_tag(line, inv), inv) + "\n")
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from exc
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    bad = 0
    with _in_stream(args.infile) as src:
        for lineno, raw in enumerate(src, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                structure = parse_tag(line)
            except ValueError as exc:
                print(f"line {lineno}: syntax error: {exc}")
                bad += 1
                continue
            for violation in validate(structure, inv):
                print(f"line {lineno}: {violation}")
                bad += 1
    return 1 if bad else 0


def _parse_class_counts(text: str) -> dict[str, int]:
    counts: dict[str, int] = {}
    for item in text.split(","):
        name, sep, value = item.partition("=")
        if not sep or name not in georgian.VERB_CLASSES or not value.isdigit():
            raise argparse.ArgumentTypeError(
                f"expected class=count items from {georgian.VERB_CLASSES}, got {item!r}"
            )
        counts[name] = int(value)
    return counts


def _cmd_generate(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    config = _config(args)
    if args.third_person_objects_only:
        config = georgian.restrict_objects_to_third(config)
    if args.synthetic and args.lexicon:
        raise ValueError("--lexicon and --synthetic are mutually exclusive")
    if args.synthetic:
        if args.synthetic_seed is None:
            raise ValueError("--synthetic requires --synthetic-seed")
        entries = georgian.make_synthetic_lexicon(args.synthetic, args.synthetic_seed)
    elif args.lexicon:
        with open(args.lexicon, encoding="utf-8") as f:
            entries = georgian.load_lexicon(f, config, inv)
    else:
        entries = list(georgian.sample_lexicon())
    tables = georgian.generate_paradigms(
        entries, config, inv, processes=args.parallel
    )
    with _out_stream(args.out) as dst:
        unimorph.write_unimorph(tables, dst, inv)
    return 0


def _cmd_transliterate(args: argparse.Namespace) -> int:
    mapper = georgian.detransliterate if args.reverse else georgian.transliterate
    if args.text is not None:
        print(mapper(args.text))
        return 0
    with _in_stream(args.infile) as src, _out_stream(args.out) as dst:
        for raw in src:
            dst.write(mapper(raw.rstrip("\n")) + "\n")
    return 0


def _cmd_make_instances(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with _in_stream(args.tables) as src:
        entries = unimorph.read_unimorph(src, "layered", inv)
    tables = unimorph.group_by_lemma(entries, inventory=inv)
    instances = splitting.make_instances(tables, args.seed, args.count)
    with _out_stream(args.out) as dst:
        splitting.write_instances(instances, dst, inv)
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with _in_stream(args.instances) as src:
        instances = splitting.read_instances(src, inv)
    if args.policy == "form":
        spec = splitting.split_form(instances, args.sizes, args.seed, inv)
    else:
        spec = splitting.split_lemma(instances, args.sizes, args.seed)
    parts = spec.partition(instances)
    for part in splitting.PARTS:
        path = Path(f"{args.out_prefix}.{part}.tsv")
        with open(path, "w", encoding="utf-8") as dst:
            splitting.write_instances(parts[part], dst, inv)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with _in_stream(args.gold) as src:
        gold = splitting.read_instances(src, inv)
    with _in_stream(args.predictions) as src:
        predictions = metrics.read_predictions(src)
    report = metrics.evaluate(predictions, gold)
    sys.stdout.write(report.format_text())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as dst:
            for row in report.csv_rows():
                dst.write(",".join(row) + "\n")
    return 0


def _cmd_baseline_train(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with _in_stream(args.train) as src:
        train = splitting.read_instances(src, inv)
    model = baseline.train_baseline(train, inv)
    with _out_stream(args.model) as dst:
        baseline.save_model(model, dst)
    return 0


def _cmd_baseline_predict(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with open(args.model, encoding="utf-8") as f:
        model = baseline.load_model(f)
    with _in_stream(args.infile) as src:
        instances = splitting.read_instances(src, inv)
    with _out_stream(args.out) as dst:
        for form in baseline.predict_all(model, instances, inv):
            dst.write(form + "\n")
    return 0


def _cmd_learning_curve(args: argparse.Namespace) -> int:
    inv = _inventory(args)
    with _in_stream(args.train) as src:
        train = splitting.read_instances(src, inv)
    with _in_stream(args.dev) as src:
        dev = splitting.read_instances(src, inv)
    with _in_stream(args.test) as src:
        test = splitting.read_instances(src, inv)
    rows = metrics.learning_curve(
        args.sizes, args.train_cmd, args.predict_cmd, train, dev, test, args.workdir
    )
    with _out_stream(args.out) as dst:
        metrics.write_curve_csv(rows, dst)
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morphlayers",
        description="Layered morphological tags, Georgian paradigm generation, "
        "and reinflection experiment tooling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--inventory", help="feature inventory file (default: built-in)")
        return p

    p = add("parse", _cmd_parse, "parse a layered tag and echo its canonical form")
    p.add_argument("tag")

    p = add("convert", _cmd_convert, "convert tags between flat and layered form")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--from-flat", action="store_true")
    direction.add_argument("--to-flat", action="store_true")
    p.add_argument("--in", dest="infile", help="input file (default: stdin)")
    p.add_argument("--out", help="output file (default: stdout)")

    p = add("validate", _cmd_validate, "report schema violations for layered tags")
    p.add_argument("--in", dest="infile", help="input file (default: stdin)")

    p = add("generate", _cmd_generate, "generate inflection tables from a lexicon")
    p.add_argument("--lexicon", help="lexicon file (default: shipped sample)")
    p.add_argument("--synthetic", type=_parse_class_counts, metavar="CLASS=N,...",
                   help="invent a synthetic lexicon with these per-class counts")
    p.add_argument("--synthetic-seed", type=int,
                   help="seed for --synthetic (required with it)")
    p.add_argument("--config", help="generation config (default: shipped Georgian)")
    p.add_argument("--out", help="output table file (default: stdout)")
    p.add_argument("--parallel", type=int, default=0, metavar="N",
                   help="generate paradigms in N worker processes")
    p.add_argument("--third-person-objects-only", action="store_true",
                   help="restrict grids to third-person objects (legacy coverage)")

    p = add("transliterate", _cmd_transliterate, "convert Georgian script to Latin")
    p.add_argument("text", nargs="?", default=None)
    p.add_argument("--reverse", action="store_true", help="Latin back to Georgian")
    p.add_argument("--in", dest="infile", help="input file (default: stdin)")
    p.add_argument("--out", help="output file (default: stdout)")

    p = add("make-instances", _cmd_make_instances, "sample reinflection instances")
    p.add_argument("--tables", help="layered table file (default: stdin)")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="instance file (default: stdout)")

    p = add("split", _cmd_split, "partition instances into train/dev/test")
    p.add_argument("--instances", help="instance file (default: stdin)")
    p.add_argument("--policy", choices=("form", "lemma"), required=True)
    p.add_argument("--sizes", type=_sizes, required=True, metavar="TRAIN,DEV,TEST")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-prefix", required=True,
                   help="writes PREFIX.train.tsv, PREFIX.dev.tsv, PREFIX.test.tsv")

    p = add("evaluate", _cmd_evaluate, "score a predictions file against gold")
    p.add_argument("--gold", help="5-column instance file (default: stdin)")
    p.add_argument("--predictions", required=True)
    p.add_argument("--csv", help="also write per-instance records as CSV")

    p = add("baseline-train", _cmd_baseline_train, "train the affix-rewrite baseline")
    p.add_argument("--train", help="training instance file (default: stdin)")
    p.add_argument("--model", required=True, help="model file to write")

    p = add("baseline-predict", _cmd_baseline_predict, "predict with a trained baseline")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="infile", help="input instances (default: stdin)")
    p.add_argument("--out", help="predictions file (default: stdout)")

    p = add("learning-curve", _cmd_learning_curve,
            "accuracy as a function of train size, via external commands")
    p.add_argument("--train", required=True)
    p.add_argument("--dev", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--sizes", type=_int_list, required=True, metavar="N,N,...")
    p.add_argument("--train-cmd", required=True,
                   help="command template; may use {train} {dev} {model_dir}")
    p.add_argument("--predict-cmd", required=True,
                   help="command template; may use {model_dir} {test} {predictions}")
    p.add_argument("--workdir", required=True)
    p.add_argument("--out", help="curve CSV (default: stdout)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, metrics.HarnessError) as exc:
        print(f"morphlayers {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
