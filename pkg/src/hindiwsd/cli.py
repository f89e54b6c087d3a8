"""Command-line front end.

Exit codes: 0 success, 1 data error, 2 usage or configuration error,
3 prediction-domain error (target absent from the text, no model for it).
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import __version__
from .classifier import NaiveBayesModel, predict, train
from .corpus import Corpus, Instance, SenseId, corpus_stats, load_corpus, split, write_corpus
from .errors import PredictionError, WSDError
from .evaluation import DEFAULT_METHODS, DEFAULT_WINDOWS, evaluate, render_report, sweep
from .features import MAX_WINDOW, METHODS, MethodSpec, Resources
from .text import find_target, normalize, tokenize


class UsageError(WSDError):
    exit_code = 2


def parse_methods(text: str) -> list[str]:
    names = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in names if m not in METHODS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"invalid method(s) {', '.join(bad) or repr(text)}; valid methods: {', '.join(METHODS)}"
        )
    return names


def parse_windows(text: str) -> list[int]:
    """``"2,3,5"`` or an inclusive range ``"2..5"``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            values = list(range(int(a), int(b) + 1))
        else:
            values = [int(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid window list {text!r}") from None
    if not values or any(not 1 <= w <= MAX_WINDOW for w in values):
        raise argparse.ArgumentTypeError(f"windows must lie in 1..{MAX_WINDOW}, got {text!r}")
    return values


def parse_ratio(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid ratio {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"ratio must lie strictly between 0 and 1, got {text}")
    return value


def parse_alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"alpha must be > 0, got {text}")
    return value


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _load(path, what="corpus") -> Corpus:
    if path is None:
        raise UsageError(f"--{what} is required")
    if not Path(path).is_file():
        raise UsageError(f"{what} not found: {path}")
    return load_corpus(path)


def _resources(args) -> Resources:
    for p in (args.stopwords, args.vibhakti):
        if p is not None and not Path(p).is_file():
            raise UsageError(f"word list not found: {p}")
    return Resources.load(args.stopwords, args.vibhakti)


def _write(data: bytes, out) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    path = Path(out)
    tmp = path.with_name(f".{path.name}.tmp")
    tmp.write_bytes(data)
    tmp.replace(path)


def _model_filename(target: str) -> str:
    safe = target.replace("%", "%25").replace("/", "%2F").replace("\\", "%5C")
    if safe.startswith("."):
        safe = "%2E" + safe[1:]
    return safe + ".json"


def cmd_stats(args) -> int:
    stats = corpus_stats(_load(args.corpus))
    print(f"words\t{stats.word_count}")
    print(f"instances\t{stats.instance_count}")
    print(f"polysemous words\t{stats.polysemous_word_count}")
    return 0


def cmd_split(args) -> int:
    corpus = _load(args.corpus)
    if not corpus.instances:
        raise WSDError("corpus is empty")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        train_c, test_c = split(corpus, args.ratio, args.seed)
    for w in caught:
        _warn(str(w.message))
    try:
        write_corpus(train_c, args.train)
        write_corpus(test_c, args.test)
    except OSError as exc:
        raise WSDError(f"cannot write split: {exc}") from None
    print(f"train\t{len(train_c)}\t{args.train}")
    print(f"test\t{len(test_c)}\t{args.test}")
    return 0


def _single_spec(args) -> MethodSpec:
    if len(args.methods) != 1 or len(args.windows) != 1:
        raise UsageError("train takes exactly one method and one window")
    return MethodSpec(args.methods[0], args.windows[0])


def cmd_train(args) -> int:
    spec = _single_spec(args)
    corpus = _load(args.train, "train")
    if not corpus.instances:
        raise WSDError("training set is empty")
    resources = _resources(args)
    model_dir = Path(args.model_dir)
    try:
        model_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise WSDError(f"cannot create model directory: {exc}") from None
    for target, instances in corpus.by_target().items():
        model = train(instances, spec, resources, args.alpha)
        if len(model.senses) == 1:
            _warn(f"{target}: only one sense in training data")
        model.save(model_dir / _model_filename(target))
        print(f"{target}\tsenses={len(model.senses)}\tvocabulary={len(model.vocabulary)}\tspec={spec}")
    return 0


def cmd_predict(args) -> int:
    target = normalize(args.target)
    path = Path(args.model_dir) / _model_filename(target)
    if not path.is_file():
        raise PredictionError(f"no model for {target!r} in {args.model_dir}")
    model = NaiveBayesModel.load(path)
    tokens = tokenize(normalize(args.text))
    hits = find_target(tokens, target)
    if not hits:
        raise PredictionError(f"target {target!r} does not occur in the text")
    index = hits[0] if args.index is None else args.index
    if index not in hits:
        raise PredictionError(f"token {index} is not an occurrence of {target!r} (occurrences: {hits})")
    inst = Instance(target, index, tokens, SenseId(target, ""))
    pred = predict(model, inst, _resources(args))
    best = pred.log_scores[pred.sense]
    print(f"prediction\t{pred.sense.label}")
    for sense, score in pred.ranked():
        print(f"{sense.label}\t{score!r}\t{score - best!r}")
    return 0


def _emit_report(report, args) -> None:
    for w in report.warnings:
        _warn(w)
    _write(render_report(report, args.format), args.out)
    if args.plot:
        from .plotting import plot_report

        plot_report(report, args.plot)


def cmd_eval(args) -> int:
    train_c = _load(args.train, "train")
    test_c = _load(args.test, "test")
    report = evaluate(train_c, test_c, args.methods, args.windows, args.alpha, _resources(args))
    _emit_report(report, args)
    return 0


def cmd_sweep(args) -> int:
    corpus = _load(args.corpus)
    if not corpus.instances:
        raise WSDError("corpus is empty")
    report = sweep(corpus, args.methods, args.windows, args.ratio, args.seed, args.alpha, _resources(args))
    _emit_report(report, args)
    return 0


def cmd_synth(args) -> int:
    from .synthetic import separable_corpus

    corpus = separable_corpus(n_targets=args.targets, per_sense=args.per_sense, seed=args.seed)
    write_corpus(corpus, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hindiwsd", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def resources_flags(p):
        p.add_argument("--stopwords", help="stopword list (default: bundled)")
        p.add_argument("--vibhakti", help="vibhakti list (default: bundled)")

    def experiment_flags(p, methods=DEFAULT_METHODS, windows=DEFAULT_WINDOWS):
        p.add_argument("--methods", type=parse_methods, default=list(methods), help="comma list of " + ", ".join(METHODS))
        p.add_argument("--windows", type=parse_windows, default=list(windows), help="comma list or a..b range")
        p.add_argument("--alpha", type=parse_alpha, default=1.0, help="additive smoothing (default 1.0)")

    def report_flags(p):
        p.add_argument("--out", help="report file (default: standard output)")
        p.add_argument("--format", choices=("text", "csv"), default="text")
        p.add_argument("--plot", help="also draw P/R/F against window size to this image file")

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("split", help="stratified train/test split")
    p.add_argument("--corpus", required=True)
    p.add_argument("--train", required=True, help="output path for the training part")
    p.add_argument("--test", required=True, help="output path for the test part")
    p.add_argument("--ratio", type=parse_ratio, default=0.75)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("train", help="train one model per target word")
    p.add_argument("--train", required=True)
    p.add_argument("--model-dir", required=True)
    experiment_flags(p, methods=("c+bs",), windows=(5,))
    resources_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="disambiguate the target word in a text")
    p.add_argument("--model-dir", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--text", required=True)
    p.add_argument("--index", type=int, help="token index of the occurrence (default: first)")
    resources_flags(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("eval", help="evaluate on an existing train/test split")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    experiment_flags(p)
    resources_flags(p)
    report_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="split a corpus and evaluate every method x window")
    p.add_argument("--corpus", required=True)
    p.add_argument("--ratio", type=parse_ratio, default=0.75)
    p.add_argument("--seed", type=int, default=42)
    experiment_flags(p)
    resources_flags(p)
    report_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("synth", help="write a generated separable corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--targets", type=int, default=60)
    p.add_argument("--per-sense", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except WSDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnicodeDecodeError as exc:
        print(f"error: invalid UTF-8 input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
