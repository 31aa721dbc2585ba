from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from golod.complex import build_from_facets

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_complex(rng: random.Random, max_m: int = 6, max_dim: int = 2, p: float = 0.5):
    """Random complex on [m]: random candidate faces, every vertex kept."""
    m = rng.randint(1, max_m)
    facets = [(v,) for v in range(1, m + 1)]
    for k in range(2, max_dim + 2):
        for f in combinations(range(1, m + 1), k):
            if rng.random() < p / (k - 1):
                facets.append(f)
    return build_from_facets(m, facets)


@st.composite
def complexes(draw, max_m: int = 6, max_dim: int = 2):
    m = draw(st.integers(1, max_m))
    cands = [f for k in range(2, max_dim + 2) for f in combinations(range(1, m + 1), k)]
    chosen = draw(st.lists(st.sampled_from(cands), max_size=12, unique=True)) if cands else []
    return build_from_facets(m, [(v,) for v in range(1, m + 1)] + chosen)


@st.composite
def int_matrices(draw, max_rows: int = 5, max_cols: int = 5, bound: int = 12):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    return [[draw(st.integers(-bound, bound)) for _ in range(c)] for _ in range(r)], (r, c)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240518)
