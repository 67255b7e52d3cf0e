import random
from itertools import combinations, product

import pytest
from hypothesis import strategies as st

from zerospec.hypergraph import Hypergraph, gen_power, gen_random_connected


def brute_solutions(B, c, m, pin_first):
    """Plain-Python exhaustive solver, kept apart from the package oracle."""
    n = len(B[0])
    out = []
    for y in product(range(m), repeat=n):
        if pin_first and y[0]:
            continue
        if all(sum(b * v for b, v in zip(row, y)) % m == ci % m for row, ci in zip(B, c)):
            out.append(y)
    return out


def brute_exponents(H, target):
    """Pinned exponent vectors whose every edge sum is ``target`` mod m."""
    out = []
    for rest in product(range(H.m), repeat=H.n - 1):
        y = (0, *rest)
        if all(sum(y[v - 1] for v in e) % H.m == target for e in H.edges):
            out.append(y)
    return out


TRIANGLE = [(1, 2), (2, 3), (1, 3)]


@pytest.fixture
def c3_power4():
    return gen_power(TRIANGLE, 4)


@pytest.fixture
def triangle():
    return Hypergraph(n=3, m=2, edges=tuple(TRIANGLE))


@st.composite
def connected_hypergraphs(draw, ms=(2, 3, 4), max_n=7, budget=20_000):
    """Random connected hypergraphs small enough for exhaustive pinned checks."""
    m = draw(st.sampled_from(ms))
    hi = max_n
    while m ** (hi - 1) > budget:
        hi -= 1
    n = draw(st.integers(min_value=m, max_value=max(m, hi)))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    extra = draw(st.integers(min_value=0, max_value=4))
    return gen_random_connected(n, m, extra_edges=extra, rng=random.Random(seed))


def all_subsets(n, m):
    return list(combinations(range(1, n + 1), m))
