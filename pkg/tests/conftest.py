import random

import pytest
from hypothesis import strategies as st

from weakdiam2.digraph import OrientedGraph


@st.composite
def oriented_graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    choice = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
    return OrientedGraph.from_arcs(n, arcs)


def random_oriented_graph(rng: random.Random, n: int, p_arc: float) -> OrientedGraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_arc:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph.from_arcs(n, arcs)


@pytest.fixture
def rng():
    return random.Random(20261016)
