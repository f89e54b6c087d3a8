"""Generated lexical-sample corpora with known separability.

Each sense of each target draws its context words from a private vocabulary,
so any content-word feature identifies the sense. Case markers are sprinkled
into the context with the same distribution for every sense and so carry no
sense signal.
"""

from __future__ import annotations

import random

from .corpus import Corpus, Instance, SenseId
from .features import Resources

_CONSONANTS = "कखगघचछजझटठडढतथदधनपफबभमयरलवशसह"
_VOWEL_SIGNS = ("", "ा", "ि", "ी", "ु", "ू", "े", "ो")


def _word(rng: random.Random, syllables: int) -> str:
    return "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWEL_SIGNS) for _ in range(syllables))


def separable_corpus(
    n_targets: int = 60,
    n_senses: int = 2,
    per_sense: int = 100,
    context: int = 6,
    vocab_per_sense: int = 20,
    marker_rate: float = 0.25,
    seed: int = 0,
) -> Corpus:
    """Build a corpus with disjoint per-sense context vocabularies.

    Every instance has ``context`` tokens on each side of the target. Each
    context slot holds a case marker with probability ``marker_rate``, except
    the two slots adjacent to the target, which always hold content words.
    """
    rng = random.Random(seed)
    resources = Resources.default()
    markers = sorted(resources.vibhakti)
    used = set(resources.stopwords) | set(markers)

    def fresh(syllables):
        while True:
            w = _word(rng, syllables)
            if w not in used:
                used.add(w)
                return w

    instances = []
    for t in range(n_targets):
        target = fresh(2)
        for k in range(n_senses):
            sense = SenseId(target, f"{target}_{k + 1}")
            vocab = [fresh(3) for _ in range(vocab_per_sense)]
            for _ in range(per_sense):
                slots = [rng.choice(markers) if rng.random() < marker_rate else rng.choice(vocab) for _ in range(2 * context)]
                slots[context - 1] = rng.choice(vocab)
                slots[context] = rng.choice(vocab)
                tokens = (*slots[:context], target, *slots[context:])
                instances.append(Instance(target, context, tokens, sense))
    return Corpus.from_instances(instances)
