# pyright: strict

from collections import Counter
from typing import Iterable, List

import numpy as np

from .aggs import CorpusStats, LipSample, Syllabary, SyntheticConfig
from .constants import BASE_VOWELS, SEMICONSONANTS
from .pinyin import parse_text
from .transcoder import decompose_final
from .values import ApicalVariant, BaseVowel, Semiconsonant

_APICAL: tuple[ApicalVariant, ...] = ("dental", "retroflex")

# Lip height can reach zero (closed lips) but width cannot
_MIN_WIDTH = 1e-6


def corpus_stats(words: Iterable[str], syllabary: Syllabary) -> CorpusStats:
    vowels: Counter[BaseVowel] = Counter()
    semis: Counter[Semiconsonant] = Counter()
    apical: Counter[ApicalVariant] = Counter()
    n_words = 0

    for word in words:
        n_words += 1
        for _, syllable in parse_text(word, syllabary):
            d = decompose_final(syllable.final)
            vowels[d.vowel] += 1
            if d.semi is not None:
                semis[d.semi] += 1
            if syllable.apical_variant != "none":
                apical[syllable.apical_variant] += 1

    return CorpusStats(
        vowels={v: vowels[v] for v in BASE_VOWELS},
        semiconsonants={s: semis[s] for s in SEMICONSONANTS},
        apical={a: apical[a] for a in _APICAL},
        words=n_words,
    )


def format_stats(stats: CorpusStats) -> List[str]:
    lines = [f"{v}\t{stats.vowels[v]}" for v in BASE_VOWELS]
    lines.append(f"total\t{sum(stats.vowels.values())}")
    lines.extend(f"semi\t{s}\t{n}" for s, n in stats.semiconsonants.items())
    lines.extend(f"apical\t{a}\t{n}" for a, n in stats.apical.items())
    return lines


def generate_synthetic(config: SyntheticConfig, seed: int) -> List[LipSample]:
    """Draw lip frames from per-vowel Gaussians.

    Each vowel gets `occurrences` words of `frames_per_occurrence` frames,
    drawn in fixed vowel order from a single seeded generator.
    """
    rng = np.random.default_rng(seed)
    samples: List[LipSample] = []

    for vowel in BASE_VOWELS:
        spec = config.vowels.get(vowel)
        if spec is None:
            continue
        mean = np.asarray(spec.mean, dtype=np.float64)
        cov = np.asarray(spec.cov, dtype=np.float64)
        for occurrence in range(spec.occurrences):
            draws = rng.multivariate_normal(mean, cov, size=config.frames_per_occurrence)
            for frame, (a, b) in enumerate(draws, start=1):
                samples.append(
                    LipSample(
                        speaker=config.speaker,
                        word=f"{vowel}-{occurrence + 1}",
                        vowel=vowel,
                        frame=frame,
                        a=max(float(a), _MIN_WIDTH),
                        b=max(float(b), 0.0),
                    )
                )

    return samples
