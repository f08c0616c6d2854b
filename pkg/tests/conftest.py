import random

import pytest

from gchw.keyschedule import CipherKey
from gchw.recurrence import RecurrenceKind


def make_key(
    kind=RecurrenceKind.FIBONACCI,
    n=5,
    p=1,
    level=2,
    seed=bytes(range(32)),
    mac_key=bytes(range(32, 64)),
) -> CipherKey:
    return CipherKey(kind=kind, n=n, p=p, level=level, seed=seed, mac_key=mac_key)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def key():
    """The key used for experiment replication: n=5, level=2, Fibonacci."""
    return make_key()
