import sys
from pathlib import Path
from random import Random

import pytest
from hypothesis import settings

from ordlab.catalog import random_poset

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("ordlab", deadline=None, max_examples=60)
settings.load_profile("ordlab")


@pytest.fixture
def rng():
    return Random(20260810)


def seeded_posets(count: int, sizes: range, seed: int):
    """Deterministic stream of random posets for bulk property checks."""
    r = Random(seed)
    return [random_poset(r.choice(list(sizes)), r) for _ in range(count)]
