"""Pure numpy/python kernel backend.

Same function signatures and bit-identical results as the numba backend
(:mod:`radialnet._kernels_numba`); selected via ``RADIALNET_BACKEND=numpy``.
BFS uses vectorized frontier expansion; the sequential kernels (rewiring,
preferential attachment, deletion impact) fall back to interpreted loops and
are noticeably slower at scale.
"""

import numpy as np

from ._rng import MASK64, splitmix64

NAME = "numpy"


def _gather_neighbors(indptr, indices, frontier):
    """Concatenated adjacency of all frontier vertices (ragged gather)."""
    starts = indptr[frontier]
    lens = indptr[frontier + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return indices[:0]
    cum = np.cumsum(lens)
    offsets = np.repeat(starts - np.concatenate(([0], cum[:-1])), lens)
    return indices[offsets + np.arange(total)]


def connected_component_labels(indptr, indices):
    """Label vertices by connected component, ids assigned in vertex order."""
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, np.int32)
    comp = 0
    for seed in range(n):
        if labels[seed] != -1:
            continue
        labels[seed] = comp
        frontier = np.array([seed], np.int64)
        while frontier.size:
            nb = _gather_neighbors(indptr, indices, frontier)
            nb = nb[labels[nb] == -1]
            if nb.size == 0:
                break
            frontier = np.unique(nb)
            labels[frontier] = comp
        comp += 1
    return labels


def bfs_sum_ecc_range(indptr, indices, lo, hi, out_sum, out_ecc):
    """Per-source BFS over sources [lo, hi): distance sum and eccentricity.

    out_sum[s] is set to -1 when source s does not reach every vertex.
    """
    n = indptr.shape[0] - 1
    dist = np.empty(n, np.int32)
    for s in range(lo, hi):
        dist.fill(-1)
        dist[s] = 0
        frontier = np.array([s], np.int64)
        reached = 1
        d = 0
        while frontier.size:
            nb = _gather_neighbors(indptr, indices, frontier)
            nb = nb[dist[nb] < 0]
            if nb.size == 0:
                break
            frontier = np.unique(nb)
            d += 1
            dist[frontier] = d
            reached += frontier.size
        if reached < n:
            out_sum[s] = -1
            out_ecc[s] = 0
        else:
            out_sum[s] = dist.sum(dtype=np.int64)
            out_ecc[s] = d


def triangle_counts(indptr, indices, above):
    """Per-vertex triangle membership plus census against the `above` flags.

    Returns (tri[n], total, with_any_flagged, with_all_flagged); each triangle
    is enumerated once via its ordered corner i < j < k.
    """
    n = indptr.shape[0] - 1
    tri = np.zeros(n, np.int64)
    total = 0
    any_ct = 0
    all_ct = 0
    for i in range(n):
        row = indices[indptr[i]:indptr[i + 1]]
        for j in row[row > i]:
            rj = indices[indptr[j]:indptr[j + 1]]
            common = np.intersect1d(row, rj, assume_unique=True)
            ks = common[common > j]
            if ks.size == 0:
                continue
            tri[i] += ks.size
            tri[j] += ks.size
            np.add.at(tri, ks, 1)
            total += int(ks.size)
            hits = int(above[i]) + int(above[j]) + above[ks].astype(np.int64)
            any_ct += int(np.count_nonzero(hits >= 1))
            all_ct += int(np.count_nonzero(hits == 3))
    return tri, total, any_ct, all_ct


def deletion_largest_remaining(indptr, indices):
    """Largest surviving component size after deleting each vertex.

    Single DFS over a connected graph: a child subtree separates from the
    rest exactly when no back edge escapes above the deleted vertex, so per
    vertex we track the sizes of separating child subtrees and compare the
    largest against the remainder of the graph.
    """
    n = indptr.shape[0] - 1
    parent = np.full(n, -1, np.int64)
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    sz = np.ones(n, np.int64)
    split_sum = np.zeros(n, np.int64)
    split_max = np.zeros(n, np.int64)
    stack_v = np.empty(n, np.int64)
    stack_p = np.empty(n, np.int64)

    disc[0] = 0
    low[0] = 0
    clock = 1
    stack_v[0] = 0
    stack_p[0] = indptr[0]
    top = 1
    while top > 0:
        u = stack_v[top - 1]
        p = stack_p[top - 1]
        if p < indptr[u + 1]:
            stack_p[top - 1] = p + 1
            v = indices[p]
            if disc[v] == -1:
                parent[v] = u
                disc[v] = clock
                low[v] = clock
                clock += 1
                stack_v[top] = v
                stack_p[top] = indptr[v]
                top += 1
            elif v != parent[u] and disc[v] < low[u]:
                low[u] = disc[v]
        else:
            top -= 1
            pu = parent[u]
            if pu != -1:
                if low[u] < low[pu]:
                    low[pu] = low[u]
                sz[pu] += sz[u]
                if low[u] >= disc[pu]:
                    split_sum[pu] += sz[u]
                    if sz[u] > split_max[pu]:
                        split_max[pu] = sz[u]

    rest = n - 1 - split_sum
    return np.maximum(rest, split_max)


def _code(u, v):
    return (u << 32) | v


def rewire_edges(eu, ev, n, seed, sweeps, max_retries, rot_threshold):
    """Degree-preserving stochastic rewiring, in place on canonical (eu, ev).

    Per edge and sweep: up to max_retries pair swaps (revert on any self or
    duplicate edge), then one gated three-edge rotation.  Partner edges are
    taken in a random orientation per attempt; a fixed orientation would
    halve the move set and strand small instances in absorbing classes.
    rot_threshold is the rotation probability rescaled to [0, 2^32].
    Returns (accepted swaps, accepted rotations).
    """
    m = eu.shape[0]
    state = int(seed) & MASK64
    edge_set = {_code(int(eu[i]), int(ev[i])) for i in range(m)}
    swaps = 0
    rotations = 0
    for _ in range(sweeps):
        for e in range(m):
            for _ in range(max_retries):
                state, r = splitmix64(state)
                state, rbits = splitmix64(state)
                f = r % m
                if f == e:
                    continue
                a, b = int(eu[e]), int(ev[e])
                if rbits >> 63:
                    c, d = int(ev[f]), int(eu[f])
                else:
                    c, d = int(eu[f]), int(ev[f])
                if a == d or c == b:
                    continue  # self-edge
                n1 = _code(min(a, d), max(a, d))
                n2 = _code(min(c, b), max(c, b))
                o1 = _code(a, b)
                o2 = _code(int(eu[f]), int(ev[f]))
                if n1 == o1 or n1 == o2:
                    continue  # identity proposal
                if n1 == n2 or n1 in edge_set or n2 in edge_set:
                    continue
                edge_set.remove(o1)
                edge_set.remove(o2)
                edge_set.add(n1)
                edge_set.add(n2)
                eu[e], ev[e] = min(a, d), max(a, d)
                eu[f], ev[f] = min(c, b), max(c, b)
                swaps += 1
                break
            state, r = splitmix64(state)
            if (r >> 32) < rot_threshold:
                state, r1 = splitmix64(state)
                state, r2 = splitmix64(state)
                state, rbits = splitmix64(state)
                f1 = r1 % m
                f2 = r2 % m
                if f1 == e or f2 == e or f1 == f2:
                    continue
                a, b = int(eu[e]), int(ev[e])
                c, d = int(eu[f1]), int(ev[f1])
                p, q = int(eu[f2]), int(ev[f2])
                if (rbits >> 63) & 1:
                    a, b = b, a
                if (rbits >> 62) & 1:
                    c, d = d, c
                if (rbits >> 61) & 1:
                    p, q = q, p
                if a == d or c == q or p == b:
                    continue
                o1 = _code(min(a, b), max(a, b))
                o2 = _code(min(c, d), max(c, d))
                o3 = _code(min(p, q), max(p, q))
                n1 = _code(min(a, d), max(a, d))
                n2 = _code(min(c, q), max(c, q))
                n3 = _code(min(p, b), max(p, b))
                if n1 == n2 or n1 == n3 or n2 == n3:
                    continue
                if {n1, n2, n3} == {o1, o2, o3}:
                    continue  # pure slot permutation, not a move
                old = (o1, o2, o3)
                ok = True
                for nc in (n1, n2, n3):
                    if nc in edge_set and nc not in old:
                        ok = False
                        break
                if not ok:
                    continue
                edge_set.discard(o1)
                edge_set.discard(o2)
                edge_set.discard(o3)
                edge_set.add(n1)
                edge_set.add(n2)
                edge_set.add(n3)
                eu[e], ev[e] = min(a, d), max(a, d)
                eu[f1], ev[f1] = min(c, q), max(c, q)
                eu[f2], ev[f2] = min(p, b), max(p, b)
                rotations += 1
    return swaps, rotations


def ba_edges(n, m, seed):
    """Preferential-attachment edge list: m isolated seed vertices, then one
    vertex per step wired to m distinct degree-weighted targets.

    The first arrival sees an all-zero degree graph and connects to every
    seed vertex (uniform without replacement degenerates to all m of them).
    Returns canonical (eu, ev) with eu < ev.
    """
    total = m * (n - m)
    eu = np.empty(total, np.int64)
    ev = np.empty(total, np.int64)
    pool = np.empty(2 * total, np.int64)
    picked = np.empty(m, np.int64)
    state = int(seed) & MASK64
    e = 0
    plen = 0
    for t in range(m, n):
        if t == m:
            for slot in range(m):
                picked[slot] = slot
        else:
            for slot in range(m):
                while True:
                    state, r = splitmix64(state)
                    cand = int(pool[r % plen])
                    dup = False
                    for s2 in range(slot):
                        if picked[s2] == cand:
                            dup = True
                            break
                    if not dup:
                        break
                picked[slot] = cand
        for slot in range(m):
            tgt = int(picked[slot])
            eu[e] = tgt
            ev[e] = t
            e += 1
            pool[plen] = tgt
            pool[plen + 1] = t
            plen += 2
    return eu, ev
