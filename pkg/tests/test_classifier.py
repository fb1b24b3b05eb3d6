import math

import numpy as np
import pytest

from mandarincs.domain.aggs import Gaussian2D
from mandarincs.domain.classifier import (
    classify,
    classify_many,
    fit_gaussian,
    gaussian_pdf,
    log_density,
)
from mandarincs.domain.errors import InsufficientDataError, NumericDomainError


def gaussian(mu, sigma):
    return Gaussian2D(mu=np.asarray(mu, dtype=float), sigma=np.asarray(sigma, dtype=float))


def reference_log_density(mu, sigma, x):
    mu, sigma = np.asarray(mu, dtype=float), np.asarray(sigma, dtype=float)
    d = np.asarray(x, dtype=float) - mu
    maha = np.einsum("ni,ij,nj->n", d, np.linalg.inv(sigma), d)
    return -0.5 * maha - 0.5 * math.log(np.linalg.det(sigma)) - math.log(2 * math.pi)


def test_standard_normal_density():
    g = gaussian([0, 0], np.eye(2))
    assert abs(gaussian_pdf(g, [0, 0]) - 1 / (2 * math.pi)) < 1e-12
    assert abs(gaussian_pdf(g, [1, 0]) - math.exp(-0.5) / (2 * math.pi)) < 1e-12


def test_density_matches_closed_form():
    mu, sigma = [3.0, -1.0], [[2.0, 0.6], [0.6, 1.0]]
    x = np.random.default_rng(0).normal(size=(50, 2)) * 3
    np.testing.assert_allclose(
        log_density(gaussian(mu, sigma), x), reference_log_density(mu, sigma, x), rtol=1e-10
    )


def test_density_integrates_to_one():
    g = gaussian([1.0, 2.0], [[2.0, 0.5], [0.5, 1.0]])
    step = 0.05
    axis = np.arange(-12.0, 14.0, step)
    xx, yy = np.meshgrid(axis, axis)
    grid = np.column_stack([xx.ravel(), yy.ravel()])
    total = float(np.exp(log_density(g, grid)).sum()) * step * step
    assert abs(total - 1.0) < 1e-3


def test_fit_unbiased_covariance():
    g = fit_gaussian([[0, 0], [2, 0], [0, 2], [2, 2]])
    np.testing.assert_allclose(g.mu, [1.0, 1.0])
    np.testing.assert_allclose(g.sigma, np.diag([4 / 3, 4 / 3]))
    assert not g.regularized


def test_fit_collinear_points_is_regularized():
    g = fit_gaussian([[1, 1], [2, 2], [3, 3]])
    assert g.regularized
    np.testing.assert_allclose(g.sigma, [[1 + 1e-6, 1.0], [1.0, 1 + 1e-6]])
    assert np.isfinite(gaussian_pdf(g, [2, 2]))


def test_fit_identical_points_is_regularized():
    g = fit_gaussian([[5, 5]] * 4)
    assert g.regularized
    assert np.all(np.linalg.eigvalsh(g.sigma) > 0)
    assert np.isfinite(gaussian_pdf(g, [5, 5]))


@pytest.mark.parametrize("points", [[], [[1.0, 2.0]]])
def test_fit_needs_two_points(points):
    with pytest.raises(InsufficientDataError):
        fit_gaussian(np.asarray(points, dtype=float).reshape(-1, 2))


def test_fit_rejects_wrong_shape():
    with pytest.raises(ValueError):
        fit_gaussian([[1, 2, 3], [4, 5, 6]])


@pytest.mark.parametrize(
    "sigma",
    [
        [[1.0, 2.0], [2.0, 1.0]],
        [[1.0, 0.5], [0.0, 1.0]],
        [[0.0, 0.0], [0.0, 0.0]],
    ],
)
def test_density_rejects_bad_covariance(sigma):
    with pytest.raises(NumericDomainError):
        gaussian_pdf(gaussian([0, 0], sigma), [0, 0])


def test_classify_nearest_model():
    models = {"a": gaussian([0, 0], np.eye(2)), "o": gaussian([10, 0], np.eye(2))}
    assert classify(models, [1, 1]) == "a"
    assert classify(models, [9, 0]) == "o"
    assert classify_many(models, [[1, 1], [9, 0], [6, 0]]) == ["a", "o", "o"]


def test_classify_wider_model_wins_far_out():
    models = {"a": gaussian([0, 0], np.eye(2)), "o": gaussian([0, 0], 25 * np.eye(2))}
    assert classify(models, [0, 0]) == "a"
    assert classify(models, [8, 0]) == "o"


def test_classify_single_model():
    assert classify({"er": gaussian([0, 0], np.eye(2))}, [100, -100]) == "er"


def test_tie_goes_to_first_vowel():
    g = gaussian([0, 0], np.eye(2))
    assert classify({"ong": g, "ai": g, "o": g}, [3, 3]) == "o"


def test_classify_needs_models():
    with pytest.raises(ValueError):
        classify({}, [0, 0])


ORACLE_CONFIGS = [
    {"a": ([0, 0], np.eye(2)), "o": ([2.5, 0], np.eye(2))},
    {"a": ([0, 0], [[1.0, 0.8], [0.8, 1.0]]), "o": ([1, -1], [[1.0, -0.3], [-0.3, 2.0]])},
    {"a": ([0, 0], [[4.0, 0.0], [0.0, 0.25]]), "o": ([0, 1], [[0.25, 0.0], [0.0, 4.0]])},
    {
        "a": ([0, 0], np.eye(2)),
        "o": ([3, 0], [[2.0, 0.5], [0.5, 1.0]]),
        "e": ([1.5, 2.5], [[1.0, 0.0], [0.0, 0.5]]),
    },
]


@pytest.mark.parametrize("config", ORACLE_CONFIGS)
def test_classifier_approaches_bayes_rule(config):
    rng = np.random.default_rng(1234)
    labels = list(config)

    def draw(n):
        xs, ys = [], []
        for v in labels:
            mu, sigma = config[v]
            xs.append(rng.multivariate_normal(mu, sigma, size=n))
            ys.extend([v] * n)
        return np.concatenate(xs), np.asarray(ys)

    train_x, train_y = draw(5000)
    test_x, test_y = draw(2000)

    models = {v: fit_gaussian(train_x[train_y == v]) for v in labels}
    predicted = np.asarray(classify_many(models, test_x))

    scores = np.stack([reference_log_density(*config[v], test_x) for v in labels], axis=1)
    bayes = np.asarray(labels)[np.argmax(scores, axis=1)]

    assert np.mean(predicted == bayes) >= 0.98
    assert abs(np.mean(predicted == test_y) - np.mean(bayes == test_y)) <= 0.02


def test_classification_is_translation_invariant():
    rng = np.random.default_rng(5)
    data = {v: rng.normal(loc, 1.0, size=(40, 2)) for v, loc in (("a", 0.0), ("o", 1.5), ("e", 3.0))}
    points = rng.normal(1.5, 2.0, size=(200, 2))
    shift = np.array([100.0, -40.0])

    models = {v: fit_gaussian(x) for v, x in data.items()}
    shifted = {v: fit_gaussian(x + shift) for v, x in data.items()}
    assert classify_many(models, points) == classify_many(shifted, points + shift)


def test_fit_recovers_the_generating_gaussian():
    mu, sigma = np.array([12.0, 4.0]), np.array([[2.0, 0.7], [0.7, 1.0]])
    n = 10_000
    g = fit_gaussian(np.random.default_rng(42).multivariate_normal(mu, sigma, size=n))
    standard_error = np.sqrt(np.diag(sigma) / n)
    assert np.all(np.abs(g.mu - mu) < 3 * standard_error)
    np.testing.assert_allclose(g.sigma, sigma, atol=0.1)
    assert not g.regularized


def test_density_peaks_at_the_mean():
    g = gaussian([3.0, -1.0], [[2.0, 0.6], [0.6, 1.0]])
    peak = gaussian_pdf(g, [3.0, -1.0])
    for x in np.random.default_rng(8).normal(0.0, 4.0, size=(200, 2)):
        assert peak >= gaussian_pdf(g, x)


def test_separated_training_frames_classify_perfectly():
    rng = np.random.default_rng(21)
    centers = {"a": (0.0, 0.0), "o": (20.0, 0.0), "e": (0.0, 20.0), "i": (20.0, 20.0)}
    clouds = {v: rng.normal(c, 1.0, size=(60, 2)) for v, c in centers.items()}
    models = {v: fit_gaussian(x) for v, x in clouds.items()}
    for v, x in clouds.items():
        assert classify_many(models, x) == [v] * len(x)
