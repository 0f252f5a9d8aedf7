"""Preferential-attachment graph generation and degree-tail fitting.

The growth model starts from m isolated vertices and adds one vertex per
step with m edges to distinct existing vertices, chosen proportionally to
current degree (rejection sampling against the edge-endpoint array).  The
all-zero-degree start is undefined under proportional attachment, so the
first arrival connects uniformly without replacement — i.e. to every seed
vertex.  Vertices are labeled 0..n-1 in arrival order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from ._rng import MASK64
from .graph import Graph, from_dense_edges

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaSpec:
    n: int
    m: int
    seed: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.n <= self.m:
            raise ValueError(f"n must exceed m (got n={self.n}, m={self.m})")


def ba_generate(spec: BaSpec) -> Graph:
    """Grow a preferential-attachment graph: n vertices, exactly m*(n-m)
    edges, simple and connected, deterministic in the seed."""
    eu, ev = kernels.ba_edges(spec.n, spec.m, np.uint64(int(spec.seed) & MASK64))
    return from_dense_edges(np.arange(spec.n, dtype=np.int64), eu, ev)


@dataclass(frozen=True)
class DegreeHistogram:
    """Exact degree counts plus a log-log least-squares fit of the
    complementary cumulative distribution tail over [k_min, k_max].

    tail_exponent is None when fewer than 3 distinct degrees fall in the fit
    range (counts are still valid).  For a degree density ~ k^-3 the CCDF
    scales as k^-2, i.e. tail_exponent near -2.
    """

    counts: dict[int, int]
    tail_exponent: float | None
    k_min: int
    k_max: int
    fit_points: int

    def csv_rows(self):
        yield "degree,count"
        for k in sorted(self.counts):
            yield f"{k},{self.counts[k]}"


def degree_histogram(g: Graph, k_min: int, k_max: int) -> DegreeHistogram:
    """Degree frequency table with CCDF tail slope fitted over [k_min, k_max]."""
    if k_min >= k_max:
        raise ValueError("k_min must be below k_max")
    deg = g.degrees
    values, freq = np.unique(deg, return_counts=True)
    counts = dict(zip(values.tolist(), freq.tolist()))

    # CCDF at each distinct degree: fraction of vertices with degree >= k
    tail = freq[::-1].cumsum()[::-1] / g.n
    in_range = (values >= k_min) & (values <= k_max)
    fit_points = int(in_range.sum())
    if fit_points < 3:
        log.warning("degree_histogram: only %d distinct degrees in [%d, %d]; no tail fit",
                    fit_points, k_min, k_max)
        exponent = None
    else:
        slope, _ = np.polyfit(np.log(values[in_range]), np.log(tail[in_range]), 1)
        exponent = float(slope)
    return DegreeHistogram(counts=counts, tail_exponent=exponent,
                           k_min=int(k_min), k_max=int(k_max), fit_points=fit_points)
