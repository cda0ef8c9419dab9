import random

import pytest

from coverzeta import SerreGraph, VoltageSpec, bundled_spec, derive


@pytest.fixture(scope="session")
def ex1_cover():
    return derive(bundled_spec("example1"))


@pytest.fixture(scope="session")
def ex2_cover():
    return derive(bundled_spec("example2"))


@pytest.fixture(scope="session")
def ex3_cover():
    return derive(bundled_spec("example3"))


@pytest.fixture(scope="session")
def ex4_cover():
    return derive(bundled_spec("example4"))


def random_connected_base(rng: random.Random, max_vertices=4, max_edges=6) -> SerreGraph:
    """Random connected multigraph: a spanning tree plus extra edges/loops."""
    n = rng.randint(1, max_vertices)
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    extra_cap = max_edges - len(pairs)
    lo = 1 if n == 1 else 0
    for _ in range(rng.randint(lo, max(extra_cap, lo))):
        pairs.append((rng.randrange(n), rng.randrange(n)))
    return SerreGraph(n, pairs)


def random_connected_cover(rng: random.Random, p: int, max_vertices=4, max_edges=6):
    """Rejection-sample a voltage cover whose total graph is connected."""
    while True:
        base = random_connected_base(rng, max_vertices, max_edges)
        if base.num_undirected_edges == 0:
            continue
        voltages = tuple(rng.randint(1, p - 1) for _ in base.edge_pairs)
        spec = VoltageSpec(base, p, voltages)
        cover = derive(spec)
        if cover.is_connected():
            return cover
