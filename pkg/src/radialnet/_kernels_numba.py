"""Numba-jitted kernel backend (default).

Mirrors :mod:`radialnet._kernels_numpy` function for function; all kernels
release the GIL so BFS batches and ensemble realizations can run on threads.
The SplitMix64 stream matches the pure backend bit for bit, so outputs are
backend-independent.
"""

import numpy as np
from numba import njit

NAME = "numba"

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
EMPTY = np.int64(-1)
TOMB = np.int64(-2)


@njit(cache=True, nogil=True, inline="always")
def _mix(state):
    state = state + GOLDEN
    z = state
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    z = z ^ (z >> np.uint64(31))
    return state, z


@njit(cache=True, nogil=True)
def connected_component_labels(indptr, indices):
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int32)
    comp = 0
    for seed in range(n):
        if labels[seed] != -1:
            continue
        labels[seed] = comp
        queue[0] = seed
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if labels[v] == -1:
                    labels[v] = comp
                    queue[tail] = v
                    tail += 1
        comp += 1
    return labels


@njit(cache=True, nogil=True)
def bfs_sum_ecc_range(indptr, indices, lo, hi, out_sum, out_ecc):
    n = indptr.shape[0] - 1
    seen = np.full(n, -1, np.int32)
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    for s in range(lo, hi):
        queue[0] = s
        seen[s] = s
        dist[s] = 0
        head = 0
        tail = 1
        total = np.int64(0)
        emax = np.int32(0)
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            total += du
            if du > emax:
                emax = du
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if seen[v] != s:
                    seen[v] = s
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1
        if tail < n:
            out_sum[s] = -1
            out_ecc[s] = 0
        else:
            out_sum[s] = total
            out_ecc[s] = emax


@njit(cache=True, nogil=True)
def triangle_counts(indptr, indices, above):
    n = indptr.shape[0] - 1
    tri = np.zeros(n, np.int64)
    total = np.int64(0)
    any_ct = np.int64(0)
    all_ct = np.int64(0)
    for i in range(n):
        si = indptr[i]
        ei = indptr[i + 1]
        for pj in range(si, ei):
            j = indices[pj]
            if j <= i:
                continue
            pa = si
            pb = indptr[j]
            eb = indptr[j + 1]
            while pa < ei and pb < eb:
                ka = indices[pa]
                kb = indices[pb]
                if ka < kb:
                    pa += 1
                elif kb < ka:
                    pb += 1
                else:
                    if ka > j:
                        tri[i] += 1
                        tri[j] += 1
                        tri[ka] += 1
                        total += 1
                        hits = np.int64(above[i]) + np.int64(above[j]) + np.int64(above[ka])
                        if hits >= 1:
                            any_ct += 1
                        if hits == 3:
                            all_ct += 1
                    pa += 1
                    pb += 1
    return tri, total, any_ct, all_ct


@njit(cache=True, nogil=True)
def deletion_largest_remaining(indptr, indices):
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

    out = np.empty(n, np.int64)
    for u in range(n):
        rest = n - 1 - split_sum[u]
        out[u] = rest if rest > split_max[u] else split_max[u]
    return out


@njit(cache=True, nogil=True, inline="always")
def _hs_probe(keys, shift, key):
    """Slot of `key`, or of the first EMPTY on its probe path."""
    mask = np.int64(keys.shape[0] - 1)
    i = np.int64((np.uint64(key) * GOLDEN) >> shift) & mask
    while True:
        k = keys[i]
        if k == key or k == EMPTY:
            return i
        i = (i + 1) & mask


@njit(cache=True, nogil=True, inline="always")
def _hs_insert(keys, shift, key):
    """Insert a key known to be absent; True when a tombstone was reused."""
    mask = np.int64(keys.shape[0] - 1)
    i = np.int64((np.uint64(key) * GOLDEN) >> shift) & mask
    while True:
        k = keys[i]
        if k == EMPTY:
            keys[i] = key
            return False
        if k == TOMB:
            keys[i] = key
            return True
        i = (i + 1) & mask


@njit(cache=True, nogil=True)
def rewire_edges(eu, ev, n, seed, sweeps, max_retries, rot_threshold):
    m = eu.shape[0]
    p = 4
    while (1 << p) < 4 * m:
        p += 1
    cap = 1 << p
    shift = np.uint64(64 - p)
    keys = np.full(cap, EMPTY, np.int64)
    tombs = 0
    for i in range(m):
        _hs_insert(keys, shift, (eu[i] << 32) | ev[i])

    state = np.uint64(seed)
    thr = np.uint64(rot_threshold)
    swaps = np.int64(0)
    rotations = np.int64(0)
    for _ in range(sweeps):
        for e in range(m):
            for _ in range(max_retries):
                state, r = _mix(state)
                state, rbits = _mix(state)
                f = np.int64(r % np.uint64(m))
                if f == e:
                    continue
                a = eu[e]
                b = ev[e]
                if rbits >> np.uint64(63):
                    c = ev[f]
                    d = eu[f]
                else:
                    c = eu[f]
                    d = ev[f]
                if a == d or c == b:
                    continue  # self-edge
                u1 = min(a, d)
                v1 = max(a, d)
                u2 = min(c, b)
                v2 = max(c, b)
                n1 = (u1 << 32) | v1
                n2 = (u2 << 32) | v2
                o1 = (a << 32) | b
                o2 = (eu[f] << 32) | ev[f]
                if n1 == o1 or n1 == o2:
                    continue  # identity proposal
                if n1 == n2:
                    continue
                if keys[_hs_probe(keys, shift, n1)] == n1:
                    continue
                if keys[_hs_probe(keys, shift, n2)] == n2:
                    continue
                keys[_hs_probe(keys, shift, o1)] = TOMB
                keys[_hs_probe(keys, shift, o2)] = TOMB
                tombs += 2
                if _hs_insert(keys, shift, n1):
                    tombs -= 1
                if _hs_insert(keys, shift, n2):
                    tombs -= 1
                eu[e] = u1
                ev[e] = v1
                eu[f] = u2
                ev[f] = v2
                swaps += 1
                break
            if tombs > cap >> 2:
                fresh = np.full(cap, EMPTY, np.int64)
                for i in range(cap):
                    if keys[i] >= 0:
                        _hs_insert(fresh, shift, keys[i])
                keys = fresh
                tombs = 0
            state, r = _mix(state)
            if (r >> np.uint64(32)) < thr:
                state, r1 = _mix(state)
                state, r2 = _mix(state)
                state, rbits = _mix(state)
                f1 = np.int64(r1 % np.uint64(m))
                f2 = np.int64(r2 % np.uint64(m))
                if f1 == e or f2 == e or f1 == f2:
                    continue
                a = eu[e]
                b = ev[e]
                c = eu[f1]
                d = ev[f1]
                pp = eu[f2]
                q = ev[f2]
                if (rbits >> np.uint64(63)) & np.uint64(1):
                    a, b = b, a
                if (rbits >> np.uint64(62)) & np.uint64(1):
                    c, d = d, c
                if (rbits >> np.uint64(61)) & np.uint64(1):
                    pp, q = q, pp
                if a == d or c == q or pp == b:
                    continue
                o1 = (min(a, b) << 32) | max(a, b)
                o2 = (min(c, d) << 32) | max(c, d)
                o3 = (min(pp, q) << 32) | max(pp, q)
                u1 = min(a, d)
                v1 = max(a, d)
                u2 = min(c, q)
                v2 = max(c, q)
                u3 = min(pp, b)
                v3 = max(pp, b)
                n1 = (u1 << 32) | v1
                n2 = (u2 << 32) | v2
                n3 = (u3 << 32) | v3
                if n1 == n2 or n1 == n3 or n2 == n3:
                    continue
                # pure slot permutation, not a move: sorted triples equal
                lo_o = min(o1, min(o2, o3))
                hi_o = max(o1, max(o2, o3))
                lo_n = min(n1, min(n2, n3))
                hi_n = max(n1, max(n2, n3))
                if (lo_o == lo_n and hi_o == hi_n
                        and (o1 ^ o2 ^ o3 ^ lo_o ^ hi_o) == (n1 ^ n2 ^ n3 ^ lo_n ^ hi_n)):
                    continue
                ok = True
                if keys[_hs_probe(keys, shift, n1)] == n1 and n1 != o1 and n1 != o2 and n1 != o3:
                    ok = False
                if ok and keys[_hs_probe(keys, shift, n2)] == n2 and n2 != o1 and n2 != o2 and n2 != o3:
                    ok = False
                if ok and keys[_hs_probe(keys, shift, n3)] == n3 and n3 != o1 and n3 != o2 and n3 != o3:
                    ok = False
                if not ok:
                    continue
                for oc in (o1, o2, o3):
                    i = _hs_probe(keys, shift, oc)
                    if keys[i] == oc:
                        keys[i] = TOMB
                        tombs += 1
                for nc in (n1, n2, n3):
                    if _hs_insert(keys, shift, nc):
                        tombs -= 1
                eu[e] = u1
                ev[e] = v1
                eu[f1] = u2
                ev[f1] = v2
                eu[f2] = u3
                ev[f2] = v3
                rotations += 1
    return swaps, rotations


@njit(cache=True, nogil=True)
def ba_edges(n, m, seed):
    total = m * (n - m)
    eu = np.empty(total, np.int64)
    ev = np.empty(total, np.int64)
    pool = np.empty(2 * total, np.int64)
    picked = np.empty(m, np.int64)
    state = np.uint64(seed)
    e = 0
    plen = 0
    for t in range(m, n):
        if t == m:
            for slot in range(m):
                picked[slot] = slot
        else:
            for slot in range(m):
                while True:
                    state, r = _mix(state)
                    cand = pool[np.int64(r % np.uint64(plen))]
                    dup = False
                    for s2 in range(slot):
                        if picked[s2] == cand:
                            dup = True
                            break
                    if not dup:
                        break
                picked[slot] = cand
        for slot in range(m):
            tgt = picked[slot]
            eu[e] = tgt
            ev[e] = t
            e += 1
            pool[plen] = tgt
            pool[plen + 1] = t
            plen += 2
    return eu, ev
