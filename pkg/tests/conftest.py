import itertools
import random
from fractions import Fraction

import pytest


def dyck_path_count(n):
    """Count +1/-1 walks of length 2n that stay >= 0 and end at 0."""
    count = 0
    for steps in itertools.product((1, -1), repeat=2 * n):
        height = 0
        for s in steps:
            height += s
            if height < 0:
                break
        else:
            count += height == 0
    return count


def random_rational(rng, allow_zero=False):
    while True:
        num = rng.randint(-10, 10)
        den = rng.choice([d for d in range(-10, 11) if d != 0])
        if num or allow_zero:
            return Fraction(num, den)


def rational_sample(count=50, seed=20240611):
    rng = random.Random(seed)
    return [(random_rational(rng), random_rational(rng)) for _ in range(count)]


@pytest.fixture
def sample_pairs():
    return rational_sample()
