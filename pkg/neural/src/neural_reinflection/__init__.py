"""Character-level encoder-decoder reinflection on split-file data."""

from .data import Instance, Vocab, read_split_file, tag_tokens, write_predictions
from .model import Seq2SeqAttention
from .training import ModelConfig, load_model, predict_file, train

__version__ = "0.1.0"
