import random

import pytest

from coloredknots.diagram import connected_sum, mirror
from coloredknots.knots import all_bundled

SMALL = ("3_1", "4_1", "5_1", "5_2", "6_1", "7_1", "7_4")


@pytest.fixture(scope="session")
def bundled():
    return all_bundled()


def random_sums(count=50, seed=20261016):
    """Connected sums of two small bundled knots, random chirality and splice arcs."""
    rng = random.Random(seed)
    knots = all_bundled()
    out = []
    for _ in range(count):
        a, b = (knots[rng.choice(SMALL)] for _ in range(2))
        if rng.random() < 0.5:
            a = mirror(a)
        if rng.random() < 0.5:
            b = mirror(b)
        i, j = rng.randrange(len(a.crossings)), rng.randrange(len(b.crossings))
        out.append((a, i, b, j, connected_sum(a, i, b, j)))
    return out


@pytest.fixture(scope="session")
def sums():
    return random_sums()


def cofactor_det(m):
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )
