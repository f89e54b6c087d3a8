"""Scoring, macro-averaged metrics, and the method x window sweep."""

from __future__ import annotations

import csv
import io
import warnings
from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .classifier import predict, train
from .corpus import Corpus, split
from .errors import EvaluationError
from .features import MethodSpec, Resources

DEFAULT_METHODS = ("c+bs", "l+c+v", "l+c", "bs")
DEFAULT_WINDOWS = (2, 3, 4, 5)

CSV_COLUMNS = ("scope", "target", "method", "window", "precision", "recall", "f1", "accuracy", "n_test")


def f_measure(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


@dataclass(frozen=True)
class MethodResult:
    method: MethodSpec
    precision: float
    recall: float
    f1: float
    accuracy: float
    n_test: int = 0


@dataclass
class EvaluationReport:
    rows: list[MethodResult] = field(default_factory=list)
    per_word: dict[MethodSpec, dict[str, MethodResult]] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def score_word(model, test, resources: Resources | None = None) -> Counter:
    """Confusion counts keyed by ``(target, gold label, predicted label)``."""
    counts = Counter()
    for inst in test:
        pred = predict(model, inst, resources)
        counts[(inst.target, inst.sense.label, pred.sense.label)] += 1
    return counts


def word_metrics(counts: Counter, method: MethodSpec | None = None) -> MethodResult:
    """Macro precision and recall over senses for one word.

    A sense that is never predicted has no precision and is left out of the
    precision mean; a sense that never occurs as gold is left out of the
    recall mean.
    """
    total = sum(counts.values())
    if total <= 0:
        raise EvaluationError("no evaluated instances")
    gold, predicted, diag = Counter(), Counter(), Counter()
    for (_, g, p), n in counts.items():
        gold[g] += n
        predicted[p] += n
        if g == p:
            diag[g] += n
    precisions = [diag[s] / predicted[s] for s in sorted(predicted) if predicted[s] > 0]
    recalls = [diag[s] / gold[s] for s in sorted(gold) if gold[s] > 0]
    p = sum(precisions) / len(precisions)
    r = sum(recalls) / len(recalls)
    return MethodResult(method, p, r, f_measure(p, r), sum(diag.values()) / total, total)


def aggregate(per_word: dict[str, MethodResult]) -> MethodResult:
    """Unweighted mean over words; F1 is recomputed from the mean P and R."""
    if not per_word:
        raise EvaluationError("nothing to aggregate")
    results = [per_word[t] for t in sorted(per_word)]
    k = len(results)
    p = sum(r.precision for r in results) / k
    r_ = sum(r.recall for r in results) / k
    acc = sum(r.accuracy for r in results) / k
    return MethodResult(results[0].method, p, r_, f_measure(p, r_), acc, sum(r.n_test for r in results))


def evaluate(
    train_corpus: Corpus,
    test_corpus: Corpus,
    methods=DEFAULT_METHODS,
    windows=DEFAULT_WINDOWS,
    alpha: float = 1.0,
    resources: Resources | None = None,
) -> EvaluationReport:
    """Train one model per target and cell on ``train_corpus``, score on ``test_corpus``."""
    resources = resources or Resources.default()
    specs = [MethodSpec(m, w) for w in sorted(set(windows), reverse=True) for m in dict.fromkeys(methods)]
    train_groups = train_corpus.by_target()
    test_groups = test_corpus.by_target()

    report = EvaluationReport()
    usable = []
    for target in sorted(set(train_groups) | set(test_groups)):
        if target not in test_groups:
            report.warnings.append(f"{target}: empty test partition, skipped")
        elif target not in train_groups:
            report.warnings.append(f"{target}: empty training partition, skipped")
        else:
            usable.append(target)

    for spec in specs:
        cells = {}
        for target in usable:
            model = train(train_groups[target], spec, resources, alpha)
            cells[target] = word_metrics(score_word(model, test_groups[target], resources), spec)
        report.per_word[spec] = cells
        if cells:
            report.rows.append(aggregate(cells))
    if not usable:
        report.warnings.append("no target has both training and test instances")
    return report


def sweep(
    corpus: Corpus,
    methods=DEFAULT_METHODS,
    windows=DEFAULT_WINDOWS,
    train_fraction: float = 0.75,
    seed: int = 42,
    alpha: float = 1.0,
    resources: Resources | None = None,
) -> EvaluationReport:
    """Split ``corpus`` once with ``seed`` and evaluate every (method, window) cell.

    Rows come out grouped by window, largest first, with methods in the order
    given.
    """
    if not corpus.instances:
        raise EvaluationError("corpus is empty")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        train_corpus, test_corpus = split(corpus, train_fraction, seed)
    report = evaluate(train_corpus, test_corpus, methods, windows, alpha, resources)
    report.warnings[:0] = [str(w.message) for w in caught]
    return report


def _two_decimals(x: float) -> str:
    return str(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _render_text(r: EvaluationReport) -> str:
    lines = [f"{'Method':<8} {'Window':>6} {'P':>5} {'R':>5} {'F':>5}"]
    for row in r.rows:
        lines.append(
            f"{row.method.method:<8} {row.method.window:>6} "
            f"{_two_decimals(row.precision):>5} {_two_decimals(row.recall):>5} {_two_decimals(row.f1):>5}"
        )
    if r.warnings:
        lines.append("")
        lines.extend(f"warning: {w}" for w in r.warnings)
    return "\n".join(lines) + "\n"


def _render_csv(r: EvaluationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)

    def emit(scope, target, res):
        writer.writerow(
            [scope, target, res.method.method, res.method.window]
            + [repr(float(x)) for x in (res.precision, res.recall, res.f1, res.accuracy)]
            + [res.n_test]
        )

    for row in r.rows:
        emit("all", "", row)
    for row in r.rows:
        for target, res in sorted(r.per_word.get(row.method, {}).items()):
            emit("word", target, res)
    return buf.getvalue()


def render_report(r: EvaluationReport, format: str = "text") -> bytes:
    if format == "text":
        return _render_text(r).encode("utf-8")
    if format == "csv":
        return _render_csv(r).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")
