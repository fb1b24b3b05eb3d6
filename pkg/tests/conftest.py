from typing import List

import numpy as np
import pytest

from mandarincs.domain.aggs import CueTables, LipSample, Syllabary
from mandarincs.domain.corpus import generate_synthetic
from mandarincs.domain.inventory import default_consonant_table, final_allocation
from mandarincs.domain.values import BaseVowel, Speaker
from mandarincs.lib.ports import FileSystem


@pytest.fixture(scope="session")
def fs() -> FileSystem:
    return FileSystem()


@pytest.fixture(scope="session")
def syllabary(fs: FileSystem) -> Syllabary:
    return fs.load_syllabary()


@pytest.fixture(scope="session")
def corpus(fs: FileSystem) -> List[str]:
    return fs.load_corpus()


@pytest.fixture(scope="session")
def tables(syllabary: Syllabary) -> CueTables:
    return CueTables(
        syllabary=syllabary,
        allocation=final_allocation(),
        consonants=default_consonant_table(),
    )


@pytest.fixture(scope="session")
def separated_samples(fs: FileSystem) -> List[LipSample]:
    return generate_synthetic(fs.load_synthetic_config(preset="separated"), seed=7)


@pytest.fixture(scope="session")
def confusion_samples(fs: FileSystem) -> List[LipSample]:
    return generate_synthetic(fs.load_synthetic_config(preset="confusion"), seed=7)


def make_samples(
    vowel: BaseVowel,
    points: np.ndarray,
    speaker: str = "test",
) -> List[LipSample]:
    return [
        LipSample(
            speaker=Speaker(speaker),
            word=f"{vowel}-{i // 5 + 1}",
            vowel=vowel,
            frame=i % 5 + 1,
            a=float(a),
            b=float(b),
        )
        for i, (a, b) in enumerate(points)
    ]


@pytest.fixture(scope="session")
def samples_of():
    return make_samples
