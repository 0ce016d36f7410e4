"""Toy-scale transformer harness for the beta-reduction datasets."""

from .config import DESK_PRESET, PAPER_PRESET, HarnessConfig, load_config, save_config
from .cross_eval import CrossEvalTable, cross_evaluate, format_table
from .data import filter_pairs, load_pairs
from .metrics import evaluate, levenshtein, string_similarity
from .model import Seq2SeqTransformer
from .train import TrainResult, load_checkpoint, predict_texts, train
from .vocab import Vocabulary

__version__ = "0.1.0"
