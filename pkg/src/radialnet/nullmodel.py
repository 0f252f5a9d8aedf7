"""Degree-preserving null model via stochastic edge rewiring.

One sweep enumerates every edge; per edge, a pair swap replacing (i,j) and
(i',j') with (i,j') and (i',j) is attempted up to max_retries times, reverted
whenever it would create a self- or duplicate edge.  After each edge's swap
phase, a three-edge rotation — (a,b),(c,d),(e,f) to (a,d),(c,f),(e,b), same
revert rule — fires with probability rotation_probability, which keeps the
move set ergodic over the fixed degree sequence.

Sampling is driven by SplitMix64 streams, one per realization, derived from
(seed, realization index): same build + same seed means identical ensembles,
independent of thread count or backend.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from ._backend import kernels
from ._rng import MASK64, derive_stream_seed
from .graph import Graph, from_dense_edges

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RewireConfig:
    seed: int
    sweeps: int = 10
    max_retries: int = 100
    rotation_probability: float = 0.1

    def __post_init__(self):
        if self.sweeps < 1:
            raise ValueError("sweeps must be >= 1")
        if self.max_retries < 1:
            raise ValueError("max_retries must be >= 1")
        if not 0.0 <= self.rotation_probability <= 1.0:
            raise ValueError("rotation_probability must lie in [0, 1]")


@dataclass(frozen=True)
class RewireResult:
    graph: Graph
    accepted_swaps: int
    accepted_rotations: int

    @property
    def unchanged(self) -> bool:
        """True when no move was ever accepted (e.g. star graphs)."""
        return self.accepted_swaps == 0 and self.accepted_rotations == 0


def rewire(g: Graph, cfg: RewireConfig) -> RewireResult:
    """Sample one random graph with g's exact degree sequence.

    Output is always simple with exactly m edges.  Inputs admitting no valid
    move come back unchanged with a logged warning (``result.unchanged``).
    """
    if g.m < 2:
        raise ValueError("rewiring needs at least 2 edges")
    eu, ev = g.edge_arrays()
    rot_threshold = int(round(cfg.rotation_probability * float(1 << 32)))
    swaps, rotations = kernels.rewire_edges(
        eu, ev, g.n, np.uint64(int(cfg.seed) & MASK64),
        cfg.sweeps, cfg.max_retries, rot_threshold)
    if swaps == 0 and rotations == 0:
        log.warning("rewire: no move accepted after %d sweeps; returning input unchanged",
                    cfg.sweeps)
        return RewireResult(g, 0, 0)
    return RewireResult(from_dense_edges(g.labels, eu, ev), int(swaps), int(rotations))


def sample_ensemble(g: Graph, count: int, cfg: RewireConfig, threads: int = 1):
    """Yield `count` independent rewired realizations in index order.

    Realization r uses the stream seed derived from (cfg.seed, r); results do
    not depend on `threads`.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    configs = [replace(cfg, seed=derive_stream_seed(cfg.seed, r)) for r in range(count)]
    if threads <= 1:
        for c in configs:
            yield rewire(g, c)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(lambda c: rewire(g, c), configs)
