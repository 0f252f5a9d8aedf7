"""Per-vertex radial metrics.

Everything here is measured against graph distance: average distance to all
other vertices (the radial coordinate, reciprocal of closeness centrality),
eccentricity, degree, mean neighbor degree, clustering, deletion impact, and
distance balance, plus a triangle census split by an average-distance
threshold.

Distance metrics require a connected graph; disconnected inputs raise
DisconnectedGraphError and should go through graph.largest_component first.
BFS sums use 64-bit integer accumulation and divide once, so dbar is exact
to the last float bit.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .graph import Graph

log = logging.getLogger(__name__)

# Tier-1 ASs named in the source datasets (no providers).
DEFAULT_TIER1 = (209, 701, 1239, 1668, 2914, 3356, 3549, 3561, 6461, 7018)


class DisconnectedGraphError(ValueError):
    """Distances are infinite across components; reduce the graph with
    graph.largest_component() before computing radial metrics."""


def _require_connected(g: Graph) -> None:
    comp = kernels.connected_component_labels(g.indptr, g.indices)
    if g.n > 0 and int(comp.max()) != 0:
        raise DisconnectedGraphError(
            "graph is disconnected; analyze graph.largest_component(g)[0] instead")


def distance_stats(g: Graph, threads: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """One BFS per vertex: (average distance array, eccentricity array).

    Sources are chunked over worker threads writing disjoint output slots;
    results are identical for any thread count.
    """
    n = g.n
    if n < 2:
        raise ValueError("distance metrics need at least 2 vertices")
    _require_connected(g)
    sums = np.empty(n, np.int64)
    eccs = np.empty(n, np.int32)
    threads = max(1, int(threads))
    if threads == 1:
        kernels.bfs_sum_ecc_range(g.indptr, g.indices, 0, n, sums, eccs)
    else:
        bounds = np.linspace(0, n, 4 * threads + 1).astype(np.int64)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            jobs = [
                pool.submit(kernels.bfs_sum_ecc_range, g.indptr, g.indices,
                            int(bounds[i]), int(bounds[i + 1]), sums, eccs)
                for i in range(len(bounds) - 1)
            ]
            for job in jobs:
                job.result()
    if np.any(sums < 0):
        raise DisconnectedGraphError("BFS did not reach every vertex")
    return sums / (n - 1), eccs


def average_distances(g: Graph, threads: int = 1) -> np.ndarray:
    """Mean hop count from each vertex to all others."""
    return distance_stats(g, threads)[0]


def eccentricities(g: Graph, threads: int = 1) -> np.ndarray:
    """Hop count to the most distant vertex, per vertex."""
    return distance_stats(g, threads)[1]


def neighbor_degree(g: Graph) -> np.ndarray:
    """Mean degree over each vertex's neighborhood."""
    deg = g.degrees
    if np.any(deg == 0):
        raise ValueError("neighbor_degree undefined for isolated vertices")
    sums = np.add.reduceat(deg[g.indices], g.indptr[:-1])
    return sums / deg


def clustering(g: Graph) -> np.ndarray:
    """Fraction of connected neighbor pairs, per vertex; NaN for degree < 2."""
    tri, _, _, _ = kernels.triangle_counts(
        g.indptr, g.indices, np.zeros(g.n, np.uint8))
    deg = g.degrees
    out = np.full(g.n, np.nan)
    mask = deg >= 2
    out[mask] = tri[mask] / (deg[mask] * (deg[mask] - 1) / 2)
    return out


def deletion_impact(g: Graph) -> np.ndarray:
    """Normalized shrink of the largest surviving component when each vertex
    is deleted: 0 for non-cut vertices, 1 when deletion isolates everyone.

    One articulation-point DFS pass with subtree accounting, O(n + m) total;
    no per-vertex traversals.
    """
    if g.n < 3:
        raise ValueError("deletion impact needs at least 3 vertices")
    _require_connected(g)
    remaining = kernels.deletion_largest_remaining(g.indptr, g.indices)
    return (g.n - 1 - remaining) / (g.n - 2)


def distance_balance(g: Graph, dbar: np.ndarray) -> np.ndarray:
    """Fraction of each vertex's neighbors strictly closer to the rest of the
    network (smaller dbar); ties count as not closer."""
    deg = g.degrees
    closer = (dbar[g.indices] < np.repeat(dbar, deg)).astype(np.int64)
    return np.add.reduceat(closer, g.indptr[:-1]) / deg


@dataclass(frozen=True)
class TriangleCensus:
    total: int
    any_above: int   # triangles with at least one vertex above threshold
    all_above: int   # triangles with all three vertices above threshold
    threshold: float


def triangle_census(g: Graph, dbar: np.ndarray, threshold: float) -> TriangleCensus:
    """Exact triangle counts, split by strict dbar > threshold membership."""
    above = (dbar > threshold).astype(np.uint8)
    _, total, any_ct, all_ct = kernels.triangle_counts(g.indptr, g.indices, above)
    return TriangleCensus(total=int(total), any_above=int(any_ct),
                          all_above=int(all_ct), threshold=float(threshold))


@dataclass
class VertexMetrics:
    """All per-vertex radial metrics of one connected graph.

    C is NaN where undefined (degree < 2); every other array is dense.
    """

    labels: np.ndarray
    dbar: np.ndarray
    ecc: np.ndarray
    k: np.ndarray
    K: np.ndarray
    C: np.ndarray
    phi: np.ndarray
    b: np.ndarray

    def write_csv(self, fileobj) -> None:
        fileobj.write("as_number,dbar,ecc,k,K,C,phi,b\n")
        for i in range(self.labels.shape[0]):
            c = "" if math.isnan(self.C[i]) else f"{self.C[i]:.12g}"
            fileobj.write(
                f"{self.labels[i]},{self.dbar[i]:.12g},{self.ecc[i]},"
                f"{self.k[i]},{self.K[i]:.12g},{c},"
                f"{self.phi[i]:.12g},{self.b[i]:.12g}\n")


def compute_metrics(g: Graph, threads: int = 1) -> VertexMetrics:
    """Compute the full VertexMetrics record, sharing one BFS pass between
    dbar and eccentricity.  Requires a connected graph with n >= 3."""
    dbar, ecc = distance_stats(g, threads)
    return VertexMetrics(
        labels=g.labels,
        dbar=dbar,
        ecc=ecc,
        k=g.degrees,
        K=neighbor_degree(g),
        C=clustering(g),
        phi=deletion_impact(g),
        b=distance_balance(g, dbar),
    )


@dataclass(frozen=True)
class Tier1Summary:
    found: tuple[int, ...]
    missing: tuple[int, ...]
    dbars: tuple[float, ...]
    mean_dbar: float
    sd: float   # sample standard deviation over the found ASs
    se: float   # standard error of the mean

    def csv_rows(self):
        yield "as_number,dbar"
        for asn, d in zip(self.found, self.dbars):
            yield f"{asn},{d:.12g}"


def tier1_summary(g: Graph, dbar: np.ndarray, as_numbers=DEFAULT_TIER1) -> Tier1Summary:
    """Mean dbar over the given AS numbers, with both sd and se (the paper
    leaves the ± convention unstated, so both are reported)."""
    found = []
    missing = []
    values = []
    for asn in as_numbers:
        try:
            idx = g.label_index(int(asn))
        except KeyError:
            missing.append(int(asn))
            continue
        found.append(int(asn))
        values.append(float(dbar[idx]))
    if not found:
        return Tier1Summary((), tuple(missing), (), math.nan, math.nan, math.nan)
    arr = np.array(values)
    mean = float(arr.mean())
    if len(values) >= 2:
        sd = float(arr.std(ddof=1))
        se = sd / math.sqrt(len(values))
    else:
        sd = math.nan
        se = math.nan
    return Tier1Summary(tuple(found), tuple(missing), tuple(values), mean, sd, se)
