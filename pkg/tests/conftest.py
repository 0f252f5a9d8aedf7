"""Shared graph builders for the test suite."""

import numpy as np
import pytest

from radialnet.graph import EdgeSet, build_graph

import oracles


def graph_from_pairs(pairs):
    return build_graph(EdgeSet(pairs))


def path_graph(k):
    return graph_from_pairs([(i, i + 1) for i in range(k - 1)])


def cycle_graph(k):
    return graph_from_pairs([(i, (i + 1) % k) for i in range(k)])


def star_graph(leaves):
    return graph_from_pairs([(0, i) for i in range(1, leaves + 1)])


def complete_graph(k):
    return graph_from_pairs([(i, j) for i in range(k) for j in range(i + 1, k)])


def random_connected_graph(rng, n, avg_degree=4.0):
    """Random spanning tree plus uniform extra edges: connected by
    construction, with plenty of leaves and cut vertices at low density."""
    pairs = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    want = int(round(avg_degree * n / 2))
    extra = min(max(0, want - (n - 1)), n * (n - 1) // 2 - (n - 1))
    while extra > 0:
        u = int(rng.integers(0, n))
        v = int(rng.integers(0, n))
        pair = (min(u, v), max(u, v))
        if u == v or pair in pairs:
            continue
        pairs.add(pair)
        extra -= 1
    assert oracles.is_connected(list(pairs), n)
    return graph_from_pairs(sorted(pairs))


def two_tier_graph(seed, n_core=100, n_periph=5000, core_p=0.5,
                   planted_triangles=50, periph_min_deg=1, periph_max_deg=3):
    """Dense core plus a sparse attached periphery with planted peripheral
    triangles: a desk-scale core-periphery topology.

    Peripheral vertices attach to earlier vertices (70% into the core); each
    planted triangle hangs off one peripheral parent, so its corners sit well
    above the median average distance.
    """
    rng = np.random.default_rng(seed)
    pairs = set()
    for i in range(n_core - 1):
        pairs.add((i, i + 1))  # keeps the core connected at any core_p
    iu, ju = np.triu_indices(n_core, k=1)
    mask = rng.random(iu.shape[0]) < core_p
    pairs.update(zip(iu[mask].tolist(), ju[mask].tolist()))

    next_id = n_core
    periph = []
    for _ in range(n_periph):
        v = next_id
        next_id += 1
        for _ in range(int(rng.integers(periph_min_deg, periph_max_deg + 1))):
            if periph and rng.random() >= 0.7:
                t = periph[int(rng.integers(0, len(periph)))]
            else:
                t = int(rng.integers(0, n_core))
            pairs.add((min(t, v), max(t, v)))
        periph.append(v)

    for _ in range(planted_triangles):
        parent = periph[int(rng.integers(0, len(periph)))]
        a, b, c = next_id, next_id + 1, next_id + 2
        next_id += 3
        pairs.update([(parent, a), (a, b), (a, c), (b, c)])

    return graph_from_pairs(sorted(pairs))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
