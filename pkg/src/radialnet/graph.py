"""Compact immutable graph representation.

Graphs are simple (no loops, no parallel edges), undirected, and stored in
compressed sparse row form: one contiguous sorted neighbor array plus
per-vertex offsets.  External vertex labels (e.g. AS numbers) are unsigned
32-bit integers mapped to dense indices in ascending label order.  Every
other module reads graphs only through this one.
"""

from __future__ import annotations

import logging
from collections import Counter

import numpy as np

from ._backend import kernels

log = logging.getLogger(__name__)

MAX_LABEL = 0xFFFFFFFF


class EmptyEdgeSetError(ValueError):
    """Raised when a graph is requested from an edge set with no usable edges."""


def _check_label(x) -> int:
    x = int(x)
    if x < 0 or x > MAX_LABEL:
        raise ValueError(f"vertex label {x} outside unsigned 32-bit range")
    return x


class EdgeSet:
    """Multiset of unordered vertex-label pairs, stored canonically
    (smaller label first), with optional per-edge source tags.

    Parsers produce EdgeSets verbatim (self-loops and duplicates included);
    cleaning happens in :func:`build_graph`.
    """

    __slots__ = ("counts", "source_tags")

    def __init__(self, pairs=(), source: str | None = None):
        self.counts: Counter = Counter()
        self.source_tags: dict[tuple[int, int], set[str]] = {}
        for u, v in pairs:
            self.add(u, v, source)

    def add(self, u, v, source: str | None = None) -> None:
        u = _check_label(u)
        v = _check_label(v)
        pair = (u, v) if u <= v else (v, u)
        self.counts[pair] += 1
        if source is not None:
            self.source_tags.setdefault(pair, set()).add(source)

    def pairs(self):
        """Distinct canonical pairs in ascending order."""
        return sorted(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        """Multiplicity-weighted size."""
        return sum(self.counts.values())

    def __contains__(self, pair) -> bool:
        u, v = pair
        return ((u, v) if u <= v else (v, u)) in self.counts

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.counts == other.counts

    def __repr__(self) -> str:
        return f"EdgeSet({len(self)} distinct pairs, {self.total()} total)"


class Graph:
    """Immutable simple undirected graph in CSR adjacency form.

    Attributes:
        n: vertex count.
        m: undirected edge count.
        indptr: int64 array, length n+1; neighbor offsets.
        indices: int32 array, length 2m; sorted neighbors per vertex.
        labels: uint32-valued array, length n, strictly increasing; external
            label of each dense index.
        dropped_loops / dropped_duplicates: construction-time cleaning counts.
    """

    __slots__ = ("n", "m", "indptr", "indices", "labels",
                 "dropped_loops", "dropped_duplicates")

    def __init__(self, indptr, indices, labels,
                 dropped_loops: int = 0, dropped_duplicates: int = 0):
        self.indptr = indptr
        self.indices = indices
        self.labels = labels
        self.n = int(labels.shape[0])
        self.m = int(indices.shape[0]) // 2
        self.dropped_loops = int(dropped_loops)
        self.dropped_duplicates = int(dropped_duplicates)
        for arr in (indptr, indices, labels):
            arr.setflags(write=False)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def degree_sequence(self) -> np.ndarray:
        """Vertex degrees, non-increasing."""
        return np.sort(self.degrees)[::-1]

    def label_index(self, label: int) -> int:
        """Dense index of an external label; KeyError if absent."""
        i = int(np.searchsorted(self.labels, label))
        if i >= self.n or int(self.labels[i]) != int(label):
            raise KeyError(f"label {label} not in graph")
        return i

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense canonical edge list (eu < ev), int64, in CSR order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        dst = self.indices.astype(np.int64)
        mask = src < dst
        return src[mask], dst[mask]

    def iter_edges(self):
        """Canonical (label_u, label_v) pairs, lexicographically sorted."""
        eu, ev = self.edge_arrays()
        lu = self.labels[eu]
        lv = self.labels[ev]
        for a, b in zip(lu.tolist(), lv.tolist()):
            yield a, b

    def to_edge_set(self) -> EdgeSet:
        return EdgeSet(self.iter_edges())

    def check_invariants(self) -> None:
        """Assert the simple/symmetric/sorted CSR invariants; raises on breach."""
        n, m = self.n, self.m
        assert self.indptr.shape == (n + 1,)
        assert self.indptr[0] == 0 and self.indptr[-1] == 2 * m
        assert self.labels.shape == (n,)
        if n:
            assert np.all(np.diff(self.labels.astype(np.int64)) > 0), "labels not strictly increasing"
        deg = self.degrees
        assert int(deg.sum()) == 2 * m
        src = np.repeat(np.arange(n, dtype=np.int64), deg)
        dst = self.indices.astype(np.int64)
        assert not np.any(src == dst), "self-loop present"
        # strictly sorted neighbor lists (no duplicate edges)
        inner = np.ones(2 * m, bool)
        inner[self.indptr[:-1][deg > 0]] = False
        assert np.all(np.diff(dst)[inner[1:]] > 0), "neighbor lists not strictly sorted"
        # symmetry: the reversed arc multiset equals the forward one
        fwd = src * (n + 1) + dst
        rev = dst * (n + 1) + src
        assert np.array_equal(np.sort(fwd), np.sort(rev)), "adjacency not symmetric"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _csr_from_dense(n: int, eu: np.ndarray, ev: np.ndarray):
    deg = np.bincount(eu, minlength=n) + np.bincount(ev, minlength=n)
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(deg, out=indptr[1:])
    src = np.concatenate([eu, ev])
    dst = np.concatenate([ev, eu])
    order = np.lexsort((dst, src))
    return indptr, dst[order].astype(np.int32)


def from_dense_edges(labels: np.ndarray, eu: np.ndarray, ev: np.ndarray) -> Graph:
    """Trusted constructor for already-clean dense edges (kernel output)."""
    n = labels.shape[0]
    indptr, indices = _csr_from_dense(n, np.asarray(eu), np.asarray(ev))
    return Graph(indptr, indices, np.asarray(labels))


def build_graph(edges: EdgeSet) -> Graph:
    """Clean an EdgeSet into a Graph: drop self-loops, collapse duplicates,
    re-index labels densely.  Cleaning counts are logged and kept on the
    returned graph.
    """
    if len(edges) == 0:
        raise EmptyEdgeSetError("edge set is empty")
    pairs = np.array(sorted(edges.counts), dtype=np.int64).reshape(-1, 2)
    mult = np.array([edges.counts[tuple(p)] for p in pairs.tolist()], dtype=np.int64)
    loops = pairs[:, 0] == pairs[:, 1]
    dropped_loops = int(mult[loops].sum())
    keep = ~loops
    if not keep.any():
        raise EmptyEdgeSetError("no edges remain after dropping self-loops")
    dropped_duplicates = int(mult[keep].sum()) - int(keep.sum())
    pu = pairs[keep, 0]
    pv = pairs[keep, 1]
    labels = np.unique(np.concatenate([pu, pv]))
    eu = np.searchsorted(labels, pu)
    ev = np.searchsorted(labels, pv)
    indptr, indices = _csr_from_dense(labels.shape[0], eu, ev)
    g = Graph(indptr, indices, labels,
              dropped_loops=dropped_loops, dropped_duplicates=dropped_duplicates)
    if dropped_loops or dropped_duplicates:
        log.info("build_graph: dropped %d self-loops, %d duplicate edges",
                 dropped_loops, dropped_duplicates)
    g.check_invariants()
    return g


def largest_component(g: Graph) -> tuple[Graph, float]:
    """Induced subgraph on the largest connected component and the retained
    fraction of vertices.  Size ties break toward the component holding the
    smallest external label.
    """
    comp = kernels.connected_component_labels(g.indptr, g.indices)
    ncomp = int(comp.max()) + 1 if g.n else 0
    if ncomp <= 1:
        return g, 1.0
    sizes = np.bincount(comp)
    best = int(sizes.max())
    # labels ascend with dense index, so the first vertex lying in any
    # maximum-size component settles the tie at the smallest label
    winner = comp[int(np.argmax(sizes[comp] == best))]
    keep = comp == winner
    new_id = np.full(g.n, -1, np.int64)
    new_id[keep] = np.arange(best, dtype=np.int64)
    eu, ev = g.edge_arrays()
    emask = keep[eu]
    sub = from_dense_edges(g.labels[keep], new_id[eu[emask]], new_id[ev[emask]])
    fraction = best / g.n
    log.info("largest_component: retained %d/%d vertices (%.4f)", best, g.n, fraction)
    return sub, fraction


def degree_sequence(g: Graph) -> np.ndarray:
    """Non-increasing degree list; sums to 2m."""
    return g.degree_sequence()
