import itertools

import pytest

from qgfusion.words import IndexSet, Word

Z2 = IndexSet.mod(2)
Z4 = IndexSet.mod(4)


def w(*letters, R=None):
    return Word(letters, R or IndexSet("nat"))


def all_words(R, max_length, alphabet):
    for k in range(max_length + 1):
        for letters in itertools.product(alphabet, repeat=k):
            yield Word(letters, R)


@pytest.fixture
def rng():
    import random

    return random.Random(20261014)
