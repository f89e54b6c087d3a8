"""Sense-tagged lexical-sample corpora: loading, validation, splitting, statistics.

A corpus file is UTF-8 JSON Lines. Each record holds ``target``, ``sense``,
exactly one of ``text`` or ``tokens``, and an optional ``target_index``
(defaulting to the first occurrence of the target).
"""

from __future__ import annotations

import json
import random
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusParseError, CorpusValidationError
from .text import find_target, is_valid_token, normalize, tokenize


class SplitWarning(UserWarning):
    """A (target, sense) group left nothing for the test side."""


@dataclass(frozen=True, order=True)
class SenseId:
    target: str
    label: str


@dataclass(frozen=True)
class Instance:
    target: str
    target_index: int
    tokens: tuple[str, ...]
    sense: SenseId

    @property
    def label(self) -> str:
        return self.sense.label

    def to_record(self) -> dict:
        return {
            "target": self.target,
            "sense": self.sense.label,
            "tokens": list(self.tokens),
            "target_index": self.target_index,
        }


@dataclass(frozen=True)
class Corpus:
    instances: tuple[Instance, ...] = ()
    inventory: dict[str, frozenset[SenseId]] = field(default_factory=dict)

    @classmethod
    def from_instances(cls, instances, inventory=None) -> "Corpus":
        """Build a corpus whose inventory covers the senses seen in ``instances``.

        If ``inventory`` is given, its sense sets are merged in for the targets
        that actually occur, so a split keeps the parent's full sense lists.
        """
        instances = tuple(instances)
        senses = defaultdict(set)
        for inst in instances:
            senses[inst.target].add(inst.sense)
        if inventory is not None:
            for target in senses:
                senses[target].update(inventory.get(target, ()))
        return cls(instances, {t: frozenset(s) for t, s in senses.items()})

    def __len__(self) -> int:
        return len(self.instances)

    @property
    def targets(self) -> list[str]:
        return sorted(self.inventory)

    def by_target(self) -> dict[str, list[Instance]]:
        groups = defaultdict(list)
        for inst in self.instances:
            groups[inst.target].append(inst)
        return dict(sorted(groups.items()))


@dataclass(frozen=True)
class CorpusStats:
    word_count: int
    instance_count: int
    polysemous_word_count: int


def _instance_from_record(record, lineno: int) -> Instance:
    if not isinstance(record, dict):
        raise CorpusParseError("record is not a JSON object", lineno)
    for key in ("target", "sense"):
        if not isinstance(record.get(key), str) or not record[key].strip():
            raise CorpusParseError(f"missing or non-string {key!r}", lineno)
    has_text, has_tokens = "text" in record, "tokens" in record
    if has_text == has_tokens:
        raise CorpusParseError("exactly one of 'text' or 'tokens' is required", lineno)

    target = normalize(record["target"])
    if has_text:
        if not isinstance(record["text"], str):
            raise CorpusParseError("'text' must be a string", lineno)
        tokens = tokenize(normalize(record["text"]))
    else:
        raw = record["tokens"]
        if not isinstance(raw, list) or not all(isinstance(t, str) for t in raw):
            raise CorpusParseError("'tokens' must be an array of strings", lineno)
        tokens = tuple(normalize(t) for t in raw)

    index = record.get("target_index")
    if index is None:
        hits = find_target(tokens, target)
        if not hits:
            raise CorpusValidationError([f"line {lineno}: target {target!r} does not occur in the text"])
        index = hits[0]
    elif isinstance(index, bool) or not isinstance(index, int):
        raise CorpusParseError("'target_index' must be an integer", lineno)

    return Instance(target, index, tokens, SenseId(target, record["sense"].strip()))


def load_corpus(path) -> Corpus:
    """Read a JSON-Lines corpus file and validate every instance.

    Blank lines are skipped. Raises :class:`CorpusParseError` (with the line
    number) for malformed records and :class:`CorpusValidationError` for
    records that parse but break an instance invariant.
    """
    instances = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusParseError(f"invalid JSON ({exc.msg})", lineno) from None
            inst = _instance_from_record(record, lineno)
            problems = _instance_violations(inst)
            if problems:
                raise CorpusValidationError([f"line {lineno} ({record!r}): {p}" for p in problems])
            instances.append(inst)
    return Corpus.from_instances(instances)


def write_corpus(corpus: Corpus, path) -> None:
    """Write ``corpus`` as JSON Lines, atomically."""
    path = Path(path)
    tmp = path.with_name(f".{path.name}.tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        for inst in corpus.instances:
            fh.write(json.dumps(inst.to_record(), ensure_ascii=False) + "\n")
    tmp.replace(path)


def corpus_stats(c: Corpus) -> CorpusStats:
    return CorpusStats(
        word_count=sum(len(inst.tokens) for inst in c.instances),
        instance_count=len(c.instances),
        polysemous_word_count=len(c.inventory),
    )


def _instance_violations(inst: Instance) -> list[str]:
    problems = []
    if not 0 <= inst.target_index < len(inst.tokens):
        problems.append(f"target_index {inst.target_index} outside 0..{len(inst.tokens) - 1}")
    elif inst.tokens[inst.target_index] != inst.target:
        problems.append(
            f"token at target_index {inst.target_index} is {inst.tokens[inst.target_index]!r}, not {inst.target!r}"
        )
    if inst.sense.target != inst.target:
        problems.append(f"sense belongs to {inst.sense.target!r}, not {inst.target!r}")
    bad = [t for t in inst.tokens if not is_valid_token(t)]
    if bad:
        problems.append(f"invalid tokens {bad!r}")
    return problems


def validate(c: Corpus) -> list[str]:
    """List every broken invariant; an empty list means the corpus is well formed."""
    violations = []
    for n, inst in enumerate(c.instances):
        for problem in _instance_violations(inst):
            violations.append(f"instance {n}: {problem}")
        if inst.sense not in c.inventory.get(inst.target, ()):
            violations.append(f"instance {n}: sense {inst.sense.label!r} of {inst.target!r} not in inventory")
    present = {inst.target for inst in c.instances}
    for target in sorted(set(c.inventory) - present):
        violations.append(f"inventory target {target!r} has no instances")
    for target, senses in c.inventory.items():
        for sense in senses:
            if sense.target != target:
                violations.append(f"inventory sense {sense.label!r} filed under {target!r} belongs to {sense.target!r}")
    return violations


def _train_size(n: int, fraction: float) -> int:
    if n == 1:
        return 1
    # round half up
    return min(n, int(fraction * n + 0.5))


def split(c: Corpus, train_fraction: float = 0.75, seed: int = 42) -> tuple[Corpus, Corpus]:
    """Stratified train/test split by (target, sense).

    Every group is shuffled with its own generator seeded from ``seed`` and the
    group key, so adding or removing other groups leaves a group's split
    unchanged. Both outputs keep the input's instance order. A group with no
    test instances triggers a :class:`SplitWarning`.
    """
    if not 0 < train_fraction < 1:
        raise ValueError(f"train_fraction must lie in (0, 1), got {train_fraction}")
    if not c.instances:
        raise ValueError("cannot split an empty corpus")

    groups = defaultdict(list)
    for pos, inst in enumerate(c.instances):
        groups[inst.sense].append(pos)

    train_pos = set()
    for sense in sorted(groups):
        members = groups[sense]
        rng = random.Random(f"{seed}\x1f{sense.target}\x1f{sense.label}")
        order = members[:]
        rng.shuffle(order)
        k = _train_size(len(order), train_fraction)
        train_pos.update(order[:k])
        if k == len(order):
            warnings.warn(
                f"{sense.target}/{sense.label}: {len(order)} instance(s), none left for testing",
                SplitWarning,
                stacklevel=2,
            )

    train = [inst for pos, inst in enumerate(c.instances) if pos in train_pos]
    test = [inst for pos, inst in enumerate(c.instances) if pos not in train_pos]
    return Corpus.from_instances(train, c.inventory), Corpus.from_instances(test, c.inventory)
