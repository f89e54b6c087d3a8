"""Supervised word sense disambiguation for Hindi lexical-sample corpora."""

from .classifier import NaiveBayesModel, Prediction, log_posterior, predict, train
from .corpus import Corpus, CorpusStats, Instance, SenseId, corpus_stats, load_corpus, split, validate
from .evaluation import EvaluationReport, MethodResult, aggregate, render_report, score_word, sweep, word_metrics
from .features import METHODS, FeatureAtom, MethodSpec, Resources, extract, render
from .text import find_target, normalize, tokenize

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "CorpusStats",
    "EvaluationReport",
    "FeatureAtom",
    "Instance",
    "METHODS",
    "MethodResult",
    "MethodSpec",
    "NaiveBayesModel",
    "Prediction",
    "Resources",
    "SenseId",
    "aggregate",
    "corpus_stats",
    "extract",
    "find_target",
    "load_corpus",
    "log_posterior",
    "normalize",
    "predict",
    "render",
    "render_report",
    "score_word",
    "split",
    "sweep",
    "tokenize",
    "train",
    "validate",
    "word_metrics",
]
