"""Per-target-word multinomial Naive Bayes over namespaced feature sets."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import SenseId
from .errors import ConfigurationError, PredictionError, TrainingError
from .features import FeatureAtom, MethodSpec, Resources, extract

FORMAT_VERSION = 1


@dataclass
class NaiveBayesModel:
    target: str
    spec: MethodSpec
    senses: list[SenseId]
    prior: dict[SenseId, float]
    feature_count: dict[SenseId, Counter]
    sense_total: dict[SenseId, int]
    vocabulary: frozenset[FeatureAtom]
    alpha: float = 1.0
    _log_prior: dict = field(init=False, repr=False, compare=False)
    _log_denominator: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._log_prior = {s: math.log(p) for s, p in self.prior.items()}
        v = len(self.vocabulary)
        # with an empty vocabulary no atom is ever scored
        self._log_denominator = {s: math.log(self.sense_total[s] + self.alpha * v) if v else 0.0 for s in self.senses}

    def likelihood(self, sense: SenseId, atom: FeatureAtom) -> float:
        """Smoothed P(atom | sense)."""
        num = self.feature_count[sense][atom] + self.alpha
        return num / (self.sense_total[sense] + self.alpha * len(self.vocabulary))

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "target": self.target,
            "spec": {"method": self.spec.method, "window": self.spec.window},
            "alpha": self.alpha,
            "senses": [s.label for s in self.senses],
            "priors": {s.label: self.prior[s] for s in self.senses},
            "feature_counts": {
                s.label: dict(sorted((atom.serialize(), n) for atom, n in self.feature_count[s].items()))
                for s in self.senses
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NaiveBayesModel":
        target = data["target"]
        senses = [SenseId(target, label) for label in data["senses"]]
        counts = {
            s: Counter({FeatureAtom.parse(k): n for k, n in data["feature_counts"][s.label].items()}) for s in senses
        }
        return cls(
            target=target,
            spec=MethodSpec(data["spec"]["method"], data["spec"]["window"]),
            senses=senses,
            prior={s: data["priors"][s.label] for s in senses},
            feature_count=counts,
            sense_total={s: sum(counts[s].values()) for s in senses},
            vocabulary=frozenset(a for c in counts.values() for a, n in c.items() if n > 0),
            alpha=data["alpha"],
        )

    def save(self, path) -> None:
        path = Path(path)
        tmp = path.with_name(f".{path.name}.tmp")
        tmp.write_text(json.dumps(self.to_dict(), ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
        tmp.replace(path)

    @classmethod
    def load(cls, path) -> "NaiveBayesModel":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True)
class Prediction:
    sense: SenseId
    log_scores: dict[SenseId, float]

    def ranked(self) -> list[tuple[SenseId, float]]:
        return sorted(self.log_scores.items(), key=lambda kv: (-kv[1], kv[0].label))


def train(instances, spec: MethodSpec, resources: Resources | None = None, alpha: float = 1.0) -> NaiveBayesModel:
    """Fit one model for the single target word shared by ``instances``.

    Priors are maximum-likelihood sense frequencies; feature counts are the
    summed multisets produced by ``extract`` under ``spec``.
    """
    if not alpha > 0:
        raise ConfigurationError(f"alpha must be > 0, got {alpha}")
    instances = list(instances)
    if not instances:
        raise TrainingError("no training instances")
    targets = {inst.target for inst in instances}
    if len(targets) != 1:
        raise TrainingError(f"training instances span several targets: {sorted(targets)}")
    if resources is None:
        resources = Resources.default()

    sense_n = Counter(inst.sense for inst in instances)
    senses = sorted(sense_n)
    counts = {s: Counter() for s in senses}
    for inst in instances:
        counts[inst.sense].update(extract(inst, spec, resources))

    return NaiveBayesModel(
        target=targets.pop(),
        spec=spec,
        senses=senses,
        prior={s: sense_n[s] / len(instances) for s in senses},
        feature_count=counts,
        sense_total={s: sum(counts[s].values()) for s in senses},
        vocabulary=frozenset(a for c in counts.values() for a in c),
        alpha=float(alpha),
    )


def log_posterior(m: NaiveBayesModel, fs: Counter) -> dict[SenseId, float]:
    """Unnormalized natural-log posterior per sense; out-of-vocabulary atoms are skipped."""
    evidence = [(atom, n) for atom, n in fs.items() if n > 0 and atom in m.vocabulary]
    scores = {}
    for s in m.senses:
        counts = m.feature_count[s]
        log_den = m._log_denominator[s]
        score = m._log_prior[s]
        for atom, n in evidence:
            score += n * (math.log(counts[atom] + m.alpha) - log_den)
        scores[s] = score
    return scores


def best_sense(m: NaiveBayesModel, scores: dict[SenseId, float]) -> SenseId:
    # ties: higher prior, then smaller label
    return min(m.senses, key=lambda s: (-scores[s], -m.prior[s], s.label))


def predict(m: NaiveBayesModel, inst, resources: Resources | None = None) -> Prediction:
    if inst.target != m.target:
        raise PredictionError(f"model is for {m.target!r}, instance targets {inst.target!r}")
    scores = log_posterior(m, extract(inst, m.spec, resources))
    return Prediction(best_sense(m, scores), scores)
