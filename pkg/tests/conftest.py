import random

import pytest

from boxcover import validate_instance

NONZERO = [w for w in range(-9, 10) if w]


def random_points(rng: random.Random, n: int, weights=NONZERO, span: int = 1000):
    xs = rng.sample(range(span), n)
    ys = rng.sample(range(span), n)
    return [(x, y, rng.choice(weights)) for x, y in zip(xs, ys)]


def random_instance(rng: random.Random, n: int, **kw):
    return validate_instance(random_points(rng, n, **kw))


@pytest.fixture
def diagonal():
    """Four points on the diagonal with a heavy negative third point."""
    return validate_instance([(1, 1, 1), (2, 2, 1), (3, 3, -5), (4, 4, 1)])


@pytest.fixture
def ring():
    """Negative centre surrounded by four positive points, coordinates made distinct."""
    return validate_instance([
        (0.0, 0.0, -9),
        (-1.0, -1.01, 1), (1.01, -1.0, 1),
        (-1.02, 1.03, 1), (1.04, 1.02, 1),
    ])
