"""Randomized identity suites over rotating fields.

Each suite lives in helpers.py and is shared with the acceptance tests,
which rerun every engine at a thousand or more instances.  Here the
engines run at a smaller count for quick feedback during development.
"""

import random

import pytest

from helpers import ALL_SUITES

TRIALS = 200


@pytest.mark.parametrize("name,engine", ALL_SUITES, ids=[n for n, _ in ALL_SUITES])
def test_suite(name, engine):
    rng = random.Random(f"qci-{name}")
    checked = engine(rng, TRIALS)
    assert checked >= TRIALS
