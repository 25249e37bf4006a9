import itertools
import random

import pytest

from freetoeplitz.form import WeightSystem


@pytest.fixture
def ws2():
    return WeightSystem.unit(2)


@pytest.fixture
def ws23():
    return WeightSystem(2, mu=(2, 3))


def all_words(n, max_len):
    letters = [c for j in range(1, n + 1) for c in (j, -j)]
    for r in range(max_len + 1):
        yield from itertools.product(letters, repeat=r)


def random_word(rnd: random.Random, n, max_len, holomorphic=False):
    length = rnd.randint(0, max_len)
    if holomorphic:
        return tuple(rnd.randint(1, n) for _ in range(length))
    return tuple(rnd.choice((1, -1)) * rnd.randint(1, n) for _ in range(length))
