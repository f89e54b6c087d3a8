"""Context-window attribute extractors and their associations.

A feature set is a :class:`collections.Counter` of :class:`FeatureAtom`.
Atoms are namespaced by the extractor that produced them, so the same surface
word coming from the local context and from the filtered bag of words stays
two distinct features when sets are merged.

Namespaces::

    l  local context       ordered window tokens, target included
    c  collocation         contiguous n-grams (2..j+1) covering the target
    b  bag of words        window tokens, target included
    s  filtered bag        bag of words minus stopwords
    v  vibhakti            one slot per context position, payload "" unless
                           the token there is a case marker
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources as _pkg_resources
from typing import NamedTuple

from .errors import ConfigurationError
from .text import normalize

METHODS = ("l", "c", "b", "bs", "v", "l+c", "c+bs", "l+c+v")
NAMESPACES = ("l", "c", "b", "s", "v")
MAX_WINDOW = 25

# Display names for reports.
METHOD_LABELS = {
    "l": "Local context",
    "c": "Collocation",
    "b": "Bow",
    "bs": "Bow after stop word removed",
    "v": "Vibhakti",
    "l+c": "Local context + collocation",
    "c+bs": "Collocation + bow",
    "l+c+v": "Collocation + local context + vibhakti",
}


class FeatureAtom(NamedTuple):
    namespace: str
    payload: str
    position: int | None = None

    def serialize(self) -> str:
        pos = "" if self.position is None else str(self.position)
        return f"{self.namespace}:{pos}:{self.payload}"

    @classmethod
    def parse(cls, text: str) -> "FeatureAtom":
        namespace, pos, payload = text.split(":", 2)
        if namespace not in NAMESPACES:
            raise ValueError(f"unknown feature namespace {namespace!r} in {text!r}")
        return cls(namespace, payload, int(pos) if pos else None)


@dataclass(frozen=True)
class MethodSpec:
    method: str
    window: int

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigurationError(f"unknown method {self.method!r}; valid methods: {', '.join(METHODS)}")
        if isinstance(self.window, bool) or not isinstance(self.window, int) or self.window < 1:
            raise ConfigurationError(f"window must be a positive integer, got {self.window!r}")

    def __str__(self):
        return f"{self.method}@{self.window}"


def read_wordlist(path) -> frozenset[str]:
    """One token per line; blank lines and lines starting with ``#`` are ignored."""
    with open(path, encoding="utf-8") as fh:
        return _parse_wordlist(fh.read())


def _parse_wordlist(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        word = normalize(line)
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


@lru_cache(maxsize=None)
def _bundled(name: str) -> frozenset[str]:
    return _parse_wordlist(_pkg_resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class Resources:
    stopwords: frozenset[str]
    vibhakti: frozenset[str]

    @classmethod
    def default(cls) -> "Resources":
        return cls(_bundled("stopwords.txt"), _bundled("vibhakti.txt"))

    @classmethod
    def load(cls, stopwords_path=None, vibhakti_path=None) -> "Resources":
        default = cls.default()
        return cls(
            read_wordlist(stopwords_path) if stopwords_path else default.stopwords,
            read_wordlist(vibhakti_path) if vibhakti_path else default.vibhakti,
        )


def _bounds(inst, j: int) -> tuple[int, int]:
    i = inst.target_index
    return max(0, i - j), min(len(inst.tokens) - 1, i + j)


def local_context(inst, j: int) -> Counter:
    lo, hi = _bounds(inst, j)
    return Counter(FeatureAtom("l", tok) for tok in inst.tokens[lo : hi + 1])


def collocation(inst, j: int) -> Counter:
    """All n-grams of 2..j+1 tokens inside the window that cover the target."""
    lo, hi = _bounds(inst, j)
    i = inst.target_index
    atoms = Counter()
    for n in range(2, j + 2):
        for start in range(max(lo, i - n + 1), min(i, hi - n + 1) + 1):
            atoms[FeatureAtom("c", " ".join(inst.tokens[start : start + n]))] += 1
    return atoms


def bag_of_words(inst, j: int) -> Counter:
    lo, hi = _bounds(inst, j)
    return Counter(FeatureAtom("b", tok) for tok in inst.tokens[lo : hi + 1])


def bag_no_stop(inst, j: int, stopwords) -> Counter:
    lo, hi = _bounds(inst, j)
    return Counter(FeatureAtom("s", tok) for tok in inst.tokens[lo : hi + 1] if tok not in stopwords)


def vibhakti_features(inst, j: int, vibhakti) -> Counter:
    i, n = inst.target_index, len(inst.tokens)
    atoms = Counter()
    for offset in (*range(-j, 0), *range(1, j + 1)):
        k = i + offset
        if 0 <= k < n:
            tok = inst.tokens[k]
            atoms[FeatureAtom("v", tok if tok in vibhakti else "", offset)] += 1
    return atoms


def combine(parts) -> Counter:
    merged = Counter()
    for part in parts:
        merged.update(part)
    return merged


def extract(inst, spec: MethodSpec, resources: Resources | None = None) -> Counter:
    if spec.method not in METHODS:
        raise ConfigurationError(f"unknown method {spec.method!r}; valid methods: {', '.join(METHODS)}")
    if resources is None:
        resources = Resources.default()
    j = spec.window
    basic = {
        "l": lambda: local_context(inst, j),
        "c": lambda: collocation(inst, j),
        "b": lambda: bag_of_words(inst, j),
        "bs": lambda: bag_no_stop(inst, j, resources.stopwords),
        "v": lambda: vibhakti_features(inst, j, resources.vibhakti),
    }
    return combine(basic[name]() for name in spec.method.split("+"))


def render(fs: Counter) -> list[str]:
    """Payloads without namespaces, in the bracketed-list style of worked examples.

    Non-vibhakti atoms come first in insertion order; vibhakti slots follow,
    sorted by position.
    """
    atoms = list(fs.elements())
    words = [a.payload for a in atoms if a.namespace != "v"]
    slots = sorted((a for a in atoms if a.namespace == "v"), key=lambda a: a.position)
    return words + [a.payload for a in slots]
