"""Command-line entry point.

One invocation can train (``--train``/``--dev``/``--model-dir``), predict
(``--model-dir``/``--test``), or both.  Hyperparameters default to embedding
100, hidden 100, attention 100, one LSTM layer.
"""

from __future__ import annotations

import argparse
import sys

from .data import write_predictions
from .training import ModelConfig, predict_file, train


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neural-reinflect",
        description="Character-level encoder-decoder for morphological reinflection.",
    )
    parser.add_argument("--train", help="training split file (5-column TSV)")
    parser.add_argument("--dev", help="development split file, for early stopping")
    parser.add_argument("--test", help="input file to predict (4- or 5-column TSV)")
    parser.add_argument("--model-dir", required=True,
                        help="directory for weights and manifest")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--embedding-size", type=int, default=100)
    parser.add_argument("--hidden-size", type=int, default=100)
    parser.add_argument("--attention-size", type=int, default=100)
    parser.add_argument("--lstm-layers", type=int, default=1)
    parser.add_argument("--max-epochs", type=int, default=60)
    parser.add_argument("--patience", type=int, default=10)
    parser.add_argument("--batch-size", type=int, default=64)
    parser.add_argument("--predictions",
                        help="predictions file for --test (default: stdout)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress per-epoch progress lines")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.train and not args.test:
        parser.error("nothing to do: need --train and/or --test")
    if args.train and not args.dev:
        parser.error("--train requires --dev")
    try:
        if args.train:
            config = ModelConfig(
                embedding_size=args.embedding_size,
                hidden_size=args.hidden_size,
                attention_size=args.attention_size,
                lstm_layers=args.lstm_layers,
                seed=args.seed,
                max_epochs=args.max_epochs,
                patience=args.patience,
                batch_size=args.batch_size,
            )
            manifest = train(config, args.train, args.dev, args.model_dir,
                             quiet=args.quiet)
            print(
                f"best epoch {manifest['best_epoch']} "
                f"dev accuracy {manifest['dev_accuracy']:.4f}",
                file=sys.stderr,
            )
        if args.test:
            predictions = predict_file(args.model_dir, args.test)
            if args.predictions:
                write_predictions(predictions, args.predictions)
            else:
                for form in predictions:
                    print(form)
        return 0
    except (OSError, ValueError) as exc:
        print(f"neural-reinflect: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
