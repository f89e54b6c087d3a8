from collections import Counter

import pytest

from hindiwsd.classifier import train
from hindiwsd.corpus import Corpus, Instance, SenseId
from hindiwsd.errors import EvaluationError
from hindiwsd.evaluation import (
    EvaluationReport,
    MethodResult,
    aggregate,
    evaluate,
    render_report,
    score_word,
    sweep,
    word_metrics,
)
from hindiwsd.features import MethodSpec, Resources
from hindiwsd.synthetic import separable_corpus

T = "हार"
SPEC = MethodSpec("bs", 1)
RES = Resources(stopwords=frozenset({T}), vibhakti=frozenset())


def sample(label, word):
    return Instance(T, 1, (word, T), SenseId(T, label))


def confusion(rows):
    return Counter({(T, g, p): n for (g, p), n in rows.items()})


def test_score_word_counts():
    model = train([sample("A", "x"), sample("B", "y")], SPEC, RES)
    test = [sample("A", "x"), sample("A", "x"), sample("B", "y"), sample("B", "x")]
    counts = score_word(model, test, RES)
    assert counts == confusion({("A", "A"): 2, ("B", "B"): 1, ("B", "A"): 1})
    assert word_metrics(counts).accuracy == 0.75


def test_constant_classifier_half_accuracy():
    counts = confusion({("A", "A"): 5, ("B", "A"): 5})
    assert word_metrics(counts).accuracy == 0.5


def test_metrics_hand_fixture():
    res = word_metrics(confusion({("A", "A"): 8, ("A", "B"): 2, ("B", "A"): 1, ("B", "B"): 9}))
    assert res.recall == pytest.approx(0.85, abs=1e-9)
    assert res.precision == pytest.approx((8 / 9 + 9 / 11) / 2, abs=1e-9)
    p, r = (8 / 9 + 9 / 11) / 2, 0.85
    assert res.f1 == pytest.approx(2 * p * r / (p + r), abs=1e-12)
    assert res.accuracy == pytest.approx(17 / 20)


@pytest.mark.parametrize("diag", [{"A": 3}, {"A": 1, "B": 7}, {"A": 2, "B": 2, "C": 5}])
def test_diagonal_is_perfect(diag):
    res = word_metrics(confusion({(s, s): n for s, n in diag.items()}))
    assert (res.precision, res.recall, res.f1, res.accuracy) == (1, 1, 1, 1)


def test_never_predicted_sense():
    # B is never predicted: no precision for B, recall 0 for B
    res = word_metrics(confusion({("A", "A"): 3, ("B", "A"): 1}))
    assert res.precision == pytest.approx(3 / 4)
    assert res.recall == pytest.approx((1 + 0) / 2)


def test_empty_counts():
    with pytest.raises(EvaluationError):
        word_metrics(Counter())


def test_aggregate():
    spec = MethodSpec("bs", 2)
    one = MethodResult(spec, 0.6, 0.5, 0.0, 0.7, 10)
    assert aggregate({"a": one}).precision == 0.6
    two = aggregate({"a": one, "b": MethodResult(spec, 0.8, 0.7, 0.0, 0.9, 30)})
    assert two.precision == pytest.approx(0.7)
    assert two.recall == pytest.approx(0.6)
    assert two.f1 == pytest.approx(2 * 0.7 * 0.6 / 1.3)
    assert two.n_test == 40
    with pytest.raises(EvaluationError):
        aggregate({})


def test_aggregate_of_identical():
    r = MethodResult(SPEC, 0.3, 0.9, 0.45, 0.5, 4)
    agg = aggregate({"a": r, "b": r, "c": r})
    assert (agg.precision, agg.recall, agg.accuracy) == pytest.approx((0.3, 0.9, 0.5))


@pytest.fixture(scope="module")
def small_synth():
    return separable_corpus(n_targets=4, per_sense=12, seed=3)


def test_sweep_grid_and_order(small_synth):
    methods = ["c+bs", "l+c+v", "l+c", "bs"]
    report = sweep(small_synth, methods, [2, 3, 4, 5])
    assert len(report.rows) == 16
    assert [(r.method.window, r.method.method) for r in report.rows] == [
        (w, m) for w in (5, 4, 3, 2) for m in methods
    ]
    for row in report.rows:
        assert set(report.per_word[row.method]) == set(small_synth.inventory)


def test_sweep_single_cell(small_synth):
    report = sweep(small_synth, ["bs"], [5])
    assert len(report.rows) == 1 and report.rows[0].accuracy >= 0.9


def test_sweep_deterministic(small_synth):
    a = render_report(sweep(small_synth, ["c+bs", "v"], [2, 3], seed=9), "csv")
    b = render_report(sweep(small_synth, ["c+bs", "v"], [2, 3], seed=9), "csv")
    assert a == b


def test_sweep_skips_target_without_test():
    a = [Instance(T, 1, (w, T), SenseId(T, "A")) for w in "abcd"]
    lone = [Instance("बाल", 0, ("बाल", "x"), SenseId("बाल", "x"))]
    report = sweep(Corpus.from_instances(a + lone), ["bs"], [1])
    assert set(report.per_word[MethodSpec("bs", 1)]) == {T}
    assert any("बाल" in w and "skipped" in w for w in report.warnings)
    assert any("none left for testing" in w for w in report.warnings)


def test_sweep_empty_corpus():
    with pytest.raises(EvaluationError):
        sweep(Corpus(), ["bs"], [2])


def test_evaluate_on_given_split(small_synth):
    report = evaluate(small_synth, small_synth, ["bs"], [2])
    assert report.rows[0].accuracy == 1.0


def test_text_rounding():
    row = MethodResult(MethodSpec("c+bs", 5), 0.804999, 0.845, 0.825, 0.85, 10)
    text = render_report(EvaluationReport(rows=[row]), "text").decode()
    line = text.splitlines()[1].split()
    assert line == ["c+bs", "5", "0.80", "0.85", "0.83"]


def test_empty_report_is_header_only():
    text = render_report(EvaluationReport(), "text").decode()
    assert text.splitlines() == ["Method   Window     P     R     F"]
    csv_text = render_report(EvaluationReport(), "csv").decode()
    assert csv_text == "scope,target,method,window,precision,recall,f1,accuracy,n_test\n"


def test_text_report_sixteen_rows(small_synth):
    report = sweep(small_synth, ["c+bs", "l+c+v", "l+c", "bs"], [2, 3, 4, 5])
    lines = render_report(report, "text").decode().splitlines()
    data = lines[1:17]
    assert len(data) == 16
    assert [int(l.split()[1]) for l in data] == [5] * 4 + [4] * 4 + [3] * 4 + [2] * 4


def test_csv_full_precision(small_synth):
    report = sweep(small_synth, ["v"], [2])
    rows = render_report(report, "csv").decode().splitlines()
    first = rows[1].split(",")
    assert first[0] == "all" and first[1] == ""
    assert float(first[4]) == report.rows[0].precision
    assert sum(r.startswith("word,") for r in rows) == len(small_synth.inventory)


def test_unknown_format():
    with pytest.raises(ValueError):
        render_report(EvaluationReport(), "xml")
