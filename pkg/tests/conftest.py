import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from editclust import make_unit_cost_model  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def binary():
    return make_unit_cost_model(["0", "1"])


@pytest.fixture
def abc():
    return make_unit_cost_model(["a", "b", "c"])


def random_pairs(count, seed, max_len=10, max_alpha=4, equal=False):
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        size = rng.randint(1, max_alpha)
        n = rng.randint(1, max_len)
        m = n if equal else rng.randint(1, n)
        X = tuple(rng.randrange(size) for _ in range(n))
        Y = tuple(rng.randrange(size) for _ in range(m))
        pairs.append((size, X, Y))
    return pairs


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
