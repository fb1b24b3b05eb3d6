# pyright: strict

import logging
from collections import defaultdict
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from .aggs import (
    ConfusionMatrix,
    EvalReport,
    FloatArray,
    Gaussian2D,
    LipSample,
    PositionScore,
    VowelAllocation,
    VowelSummary,
)
from .constants import (
    BASE_VOWELS,
    DEFAULT_REPETITIONS,
    DEFAULT_SEED,
    DEFAULT_TRAIN_FRACTION,
    MIN_SAMPLES_PER_VOWEL,
    POSITIONS,
    RIDGE_FLOOR,
    RIDGE_SCALE,
    RIDGE_TRIGGER_RATIO,
)
from .errors import InsufficientDataError, NumericDomainError
from .values import BaseVowel, Percent, Position, Speaker

logger = logging.getLogger(__name__)

VowelPoints = Mapping[BaseVowel, FloatArray]

_LOG_2PI = float(np.log(2.0 * np.pi))


def _as_points(points: npt.ArrayLike) -> FloatArray:
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"Expected (n, 2) lip parameters, got shape {arr.shape}")
    return arr


def fit_gaussian(points: npt.ArrayLike) -> Gaussian2D:
    """Maximum-likelihood mean and unbiased covariance of a 2-D cloud.

    A ridge is added to the diagonal when the covariance is (near) singular,
    which happens with few or duplicated frames.
    """
    x = _as_points(points)
    n = x.shape[0]
    if n < 2:
        raise InsufficientDataError(f"Need at least 2 samples to fit a Gaussian, got {n}")

    mu = x.mean(axis=0)
    sigma = np.cov(x, rowvar=False, ddof=1)
    sigma = (sigma + sigma.T) / 2.0

    eig = np.linalg.eigvalsh(sigma)
    if eig[0] < RIDGE_TRIGGER_RATIO * eig[-1] or eig[-1] <= 0.0:
        trace = float(np.trace(sigma))
        ridge = RIDGE_SCALE * trace / 2.0 if trace > 0.0 else RIDGE_FLOOR
        return Gaussian2D(mu=mu, sigma=sigma + ridge * np.eye(2), regularized=True)
    return Gaussian2D(mu=mu, sigma=sigma)


def _cholesky(g: Gaussian2D) -> FloatArray:
    sigma = np.asarray(g.sigma, dtype=np.float64)
    if sigma.shape != (2, 2) or not np.allclose(sigma, sigma.T):
        raise NumericDomainError(f"Covariance must be a symmetric 2x2 matrix, got {sigma!r}")
    try:
        return np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError as e:
        raise NumericDomainError(f"Covariance is not positive definite: {sigma.tolist()}") from e


def log_density(g: Gaussian2D, points: npt.ArrayLike) -> FloatArray:
    x = _as_points(points)
    chol = _cholesky(g)
    # Solve L z = (x - mu) so that |z|^2 is the Mahalanobis distance
    z = np.linalg.solve(chol, (x - g.mu).T)
    maha = np.sum(z**2, axis=0)
    log_det = 2.0 * float(np.sum(np.log(np.diag(chol))))
    return -0.5 * (maha + log_det) - _LOG_2PI


def gaussian_pdf(g: Gaussian2D, x: Sequence[float]) -> float:
    return float(np.exp(log_density(g, x)[0]))


def _ordered(models: Mapping[BaseVowel, Gaussian2D]) -> List[BaseVowel]:
    # Ties go to the vowel listed first in BASE_VOWELS
    return sorted(models, key=lambda v: (BASE_VOWELS.index(v) if v in BASE_VOWELS else len(BASE_VOWELS), v))


def classify_many(
    models: Mapping[BaseVowel, Gaussian2D], points: npt.ArrayLike
) -> List[BaseVowel]:
    if not models:
        raise ValueError("classify needs at least one model")
    labels = _ordered(models)
    x = _as_points(points)
    scores = np.stack([log_density(models[v], x) for v in labels], axis=1)
    return [labels[i] for i in np.argmax(scores, axis=1)]


def classify(models: Mapping[BaseVowel, Gaussian2D], x: Sequence[float]) -> BaseVowel:
    return classify_many(models, x)[0]


def samples_by_vowel(samples: Iterable[LipSample]) -> Dict[BaseVowel, FloatArray]:
    grouped: Dict[BaseVowel, List[Tuple[float, float]]] = defaultdict(list)
    for s in samples:
        grouped[s.vowel].append((s.a, s.b))
    return {v: np.asarray(grouped[v], dtype=np.float64) for v in BASE_VOWELS if v in grouped}


def samples_by_speaker(samples: Iterable[LipSample]) -> Dict[Speaker, List[LipSample]]:
    grouped: Dict[Speaker, List[LipSample]] = {}
    for s in samples:
        grouped.setdefault(s.speaker, []).append(s)
    return grouped


def train_count(n: int, train_fraction: float) -> int:
    return max(2, min(n - 1, round(train_fraction * n)))


def _vowel_rng(seed: int, vowel: BaseVowel) -> np.random.Generator:
    # A vowel is split the same way whichever vowels share its position
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(BASE_VOWELS.index(vowel),)))


def _require_samples(points: VowelPoints, vowels: Sequence[BaseVowel]) -> None:
    for v in vowels:
        n = 0 if v not in points else int(points[v].shape[0])
        if n < MIN_SAMPLES_PER_VOWEL:
            raise InsufficientDataError(
                f"Vowel {v!r} has {n} frames; at least {MIN_SAMPLES_PER_VOWEL} are needed",
                vowel=v,
            )


def _holdout_runs(
    points: VowelPoints,
    ordered: Sequence[BaseVowel],
    train_fraction: float,
    repetitions: int,
    seed: int,
) -> Iterator[Tuple[List[BaseVowel], List[BaseVowel]]]:
    """(spoken, chosen) test labels of each repetition, in a fixed split order."""
    rngs = {v: _vowel_rng(seed, v) for v in ordered}
    for _ in range(repetitions):
        models: Dict[BaseVowel, Gaussian2D] = {}
        test_x: List[FloatArray] = []
        test_y: List[BaseVowel] = []
        for v in ordered:
            x = points[v]
            n = x.shape[0]
            perm = rngs[v].permutation(n)
            k = train_count(n, train_fraction)
            models[v] = fit_gaussian(x[perm[:k]])
            test_x.append(x[perm[k:]])
            test_y.extend([v] * (n - k))
        yield test_y, classify_many(models, np.concatenate(test_x))


def _check_protocol(train_fraction: float, repetitions: int) -> None:
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError("train_fraction must lie strictly between 0 and 1")


def evaluate_vowel_group(
    points: VowelPoints,
    vowels: Sequence[BaseVowel],
    *,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    repetitions: int = DEFAULT_REPETITIONS,
    seed: int = DEFAULT_SEED,
) -> PositionScore:
    """Repeated stratified hold-out accuracy of the vowels sharing one position.

    Each repetition splits every vowel's frames into train and test, fits one
    Gaussian per vowel and classifies the pooled test frames among these
    vowels only.
    """
    _check_protocol(train_fraction, repetitions)
    ordered = [v for v in BASE_VOWELS if v in set(vowels)]
    _require_samples(points, ordered)
    if len(ordered) <= 1:
        return PositionScore(mean=Percent(100.0), std=Percent(0.0))

    accuracies = np.asarray(
        [
            100.0 * sum(p == t for p, t in zip(predicted, spoken)) / len(spoken)
            for spoken, predicted in _holdout_runs(points, ordered, train_fraction, repetitions, seed)
        ],
        dtype=np.float64,
    )
    return PositionScore(
        mean=Percent(float(accuracies.mean())),
        std=Percent(float(accuracies.std())),
    )


def confusion_matrix(
    points: VowelPoints,
    vowels: Sequence[BaseVowel],
    *,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    repetitions: int = DEFAULT_REPETITIONS,
    seed: int = DEFAULT_SEED,
) -> ConfusionMatrix:
    """Which vowel each test frame was taken for, over the splits `evaluate_vowel_group` uses."""
    _check_protocol(train_fraction, repetitions)
    ordered = [v for v in BASE_VOWELS if v in set(vowels)]
    _require_samples(points, ordered)
    index = {v: i for i, v in enumerate(ordered)}
    counts = np.zeros((len(ordered), len(ordered)), dtype=np.int64)
    for spoken, predicted in _holdout_runs(points, ordered, train_fraction, repetitions, seed):
        np.add.at(counts, ([index[v] for v in spoken], [index[v] for v in predicted]), 1)
    return ConfusionMatrix(vowels=tuple(ordered), counts=counts)


def summarize_vowels(points: VowelPoints, vowels: Sequence[BaseVowel]) -> List[VowelSummary]:
    """Gaussian fitted to all frames of each vowel, in canonical order."""
    ordered = [v for v in BASE_VOWELS if v in set(vowels)]
    _require_samples(points, ordered)
    summaries: List[VowelSummary] = []
    for v in ordered:
        g = fit_gaussian(points[v])
        summaries.append(VowelSummary(vowel=v, frames=int(points[v].shape[0]), mu=g.mu, sigma=g.sigma))
    return summaries


def evaluate_position(
    data: Sequence[LipSample],
    position: Position,
    alloc: VowelAllocation,
    *,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    repetitions: int = DEFAULT_REPETITIONS,
    seed: int = DEFAULT_SEED,
) -> PositionScore:
    return evaluate_vowel_group(
        samples_by_vowel(data),
        alloc.members(position),
        train_fraction=train_fraction,
        repetitions=repetitions,
        seed=seed,
    )


class PositionScorer:
    """Evaluates allocations, remembering every vowel set it has scored.

    Allocations that share a position's contents share its score, so a local
    search only pays for the positions a swap actually touched.
    """

    def __init__(
        self,
        data: Sequence[LipSample] | VowelPoints,
        *,
        train_fraction: float = DEFAULT_TRAIN_FRACTION,
        repetitions: int = DEFAULT_REPETITIONS,
        seed: int = DEFAULT_SEED,
    ):
        self.points: VowelPoints = (
            data if isinstance(data, Mapping) else samples_by_vowel(data)
        )
        self.train_fraction = train_fraction
        self.repetitions = repetitions
        self.seed = seed
        self._cache: Dict[frozenset[BaseVowel], PositionScore] = {}

    @property
    def evaluations(self) -> int:
        return len(self._cache)

    def score_group(self, vowels: Sequence[BaseVowel]) -> PositionScore:
        key = frozenset(vowels)
        cached = self._cache.get(key)
        if cached is None:
            cached = evaluate_vowel_group(
                self.points,
                vowels,
                train_fraction=self.train_fraction,
                repetitions=self.repetitions,
                seed=self.seed,
            )
            self._cache[key] = cached
            logger.debug(
                "scored {%s}: %.2f%% (std %.2f)",
                ", ".join(vowels),
                cached.mean,
                cached.std,
            )
        return cached

    def evaluate(self, alloc: VowelAllocation) -> EvalReport:
        return EvalReport(
            per_position={p: self.score_group(alloc.members(p)) for p in POSITIONS}
        )

    def confusion(self, vowels: Sequence[BaseVowel]) -> ConfusionMatrix:
        return confusion_matrix(
            self.points,
            vowels,
            train_fraction=self.train_fraction,
            repetitions=self.repetitions,
            seed=self.seed,
        )


def evaluate_allocation(
    data: Sequence[LipSample],
    alloc: VowelAllocation,
    *,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    repetitions: int = DEFAULT_REPETITIONS,
    seed: int = DEFAULT_SEED,
    scorer: Optional[PositionScorer] = None,
) -> EvalReport:
    scorer = scorer or PositionScorer(
        data, train_fraction=train_fraction, repetitions=repetitions, seed=seed
    )
    report = scorer.evaluate(alloc)
    for p in POSITIONS:
        logger.debug("%s: %.2f%%", p, report.per_position[p].mean)
    return report


def report_from_means(means: Sequence[float]) -> EvalReport:
    """Report built from published per-position means (std unknown, set to 0)."""
    if len(means) != len(POSITIONS):
        raise ValueError(f"Expected {len(POSITIONS)} per-position scores, got {len(means)}")
    return EvalReport(
        per_position={
            p: PositionScore(mean=Percent(m), std=Percent(0.0))
            for p, m in zip(POSITIONS, means)
        }
    )
