"""Compiled inner loops shared by the counting algorithms.

Each kernel operates on raw CSR arrays (``row`` offsets + sorted ``nb``
neighbor array) and allocates only private scratch, so concurrent calls
on a shared graph are safe.  All kernels release the GIL; the parallel
algorithms run the ``*_range`` variants over contiguous edge chunks from
worker threads.
"""
from __future__ import annotations

import numpy as np
from numba import njit

_JIT = dict(cache=True, nogil=True)

# ---------------------------------------------------------------------------
# sorted-array primitives


@njit(**_JIT)
def _lower_bound(a, lo, hi, x):
    # first index in [lo, hi) with a[index] >= x
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(**_JIT)
def _contains(a, lo, hi, x):
    i = _lower_bound(a, lo, hi, x)
    return i < hi and a[i] == x


@njit(**_JIT)
def _merge_count(nb, s1, e1, s2, e2):
    c = 0
    i, j = s1, s2
    while i < e1 and j < e2:
        x = nb[i]
        y = nb[j]
        if x == y:
            c += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return c


@njit(**_JIT)
def _bsearch_count(nb, s1, e1, s2, e2):
    # how many of nb[s1:e1] occur in nb[s2:e2]
    c = 0
    for i in range(s1, e1):
        if _contains(nb, s2, e2, nb[i]):
            c += 1
    return c


@njit(**_JIT)
def _partition_count(nb, s1, e1, s2, e2, stack):
    # median-split intersection: probe the larger run's median in the
    # smaller run, split both around it, recurse; short runs fall back
    # to a merge.  `stack` holds (s1, e1, s2, e2) frames.
    total = 0
    stack[0] = s1
    stack[1] = e1
    stack[2] = s2
    stack[3] = e2
    sp = 1
    while sp > 0:
        sp -= 1
        a0 = stack[4 * sp]
        a1 = stack[4 * sp + 1]
        b0 = stack[4 * sp + 2]
        b1 = stack[4 * sp + 3]
        n1 = a1 - a0
        n2 = b1 - b0
        if n1 <= 0 or n2 <= 0:
            continue
        if n1 <= 4 or n2 <= 4:
            total += _merge_count(nb, a0, a1, b0, b1)
            continue
        if n1 >= n2:
            mid = (a0 + a1) >> 1
            x = nb[mid]
            pos = _lower_bound(nb, b0, b1, x)
            hit = 1 if pos < b1 and nb[pos] == x else 0
            total += hit
            stack[4 * sp] = a0
            stack[4 * sp + 1] = mid
            stack[4 * sp + 2] = b0
            stack[4 * sp + 3] = pos
            sp += 1
            stack[4 * sp] = mid + 1
            stack[4 * sp + 1] = a1
            stack[4 * sp + 2] = pos + hit
            stack[4 * sp + 3] = b1
            sp += 1
        else:
            mid = (b0 + b1) >> 1
            x = nb[mid]
            pos = _lower_bound(nb, a0, a1, x)
            hit = 1 if pos < a1 and nb[pos] == x else 0
            total += hit
            stack[4 * sp] = a0
            stack[4 * sp + 1] = pos
            stack[4 * sp + 2] = b0
            stack[4 * sp + 3] = mid
            sp += 1
            stack[4 * sp] = pos + hit
            stack[4 * sp + 1] = a1
            stack[4 * sp + 2] = mid + 1
            stack[4 * sp + 3] = b1
            sp += 1
    return total


# ---------------------------------------------------------------------------
# breadth-first search


@njit(**_JIT)
def bfs_levels_k(row, nb, n):
    # lowest-id roots, FIFO queue, neighbors visited in ascending order
    level = np.full(n, -1, np.int64)
    parent = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    components = 0
    max_level = 0
    for r in range(n):
        if level[r] >= 0:
            continue
        components += 1
        level[r] = 0
        queue[0] = r
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            lu = level[u]
            for s in range(row[u], row[u + 1]):
                w = nb[s]
                if level[w] < 0:
                    level[w] = lu + 1
                    parent[w] = u
                    if lu + 1 > max_level:
                        max_level = lu + 1
                    queue[tail] = w
                    tail += 1
    return level, parent, components, max_level


# ---------------------------------------------------------------------------
# wedge checking


@njit(**_JIT)
def tc_wedge_k(row, nb, n):
    t = 0
    for v in range(n):
        s, e = row[v], row[v + 1]
        for i in range(s, e):
            v1 = nb[i]
            s1, e1 = row[v1], row[v1 + 1]
            for j in range(s, e):
                if j != i and _contains(nb, s1, e1, nb[j]):
                    t += 1
    return t // 6


@njit(**_JIT)
def tc_wedge_do_k(row, nb, n):
    # ordered wedges v < v1 < v2, each triangle checked once
    t = 0
    for v in range(n):
        s, e = row[v], row[v + 1]
        i = _lower_bound(nb, s, e, v + 1)
        while i < e:
            v1 = nb[i]
            s1, e1 = row[v1], row[v1 + 1]
            for j in range(i + 1, e):
                if _contains(nb, s1, e1, nb[j]):
                    t += 1
            i += 1
    return t


@njit(**_JIT)
def wp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        su, se = row[u], row[u + 1]
        sv, ve = row[v], row[v + 1]
        for s in range(su, se):  # wedges centered at u with first leg v
            w = nb[s]
            if w != v and _contains(nb, sv, ve, w):
                t += 1
        for s in range(sv, ve):  # and centered at v with first leg u
            w = nb[s]
            if w != u and _contains(nb, su, se, w):
                t += 1
    return t


@njit(**_JIT)
def wdp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        sv, ve = row[v], row[v + 1]
        for s in range(_lower_bound(nb, row[u], row[u + 1], v + 1), row[u + 1]):
            if _contains(nb, sv, ve, nb[s]):
                t += 1
    return t


# ---------------------------------------------------------------------------
# edge iterators (merge / binary search / median partition / hash)


@njit(**_JIT)
def edge_merge_sum_k(row, nb, n):
    # sum of |N(u) ∩ N(v)| over all directed edges; equals 6x triangles
    tot = 0
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            tot += _merge_count(nb, su, se, row[v], row[v + 1])
    return tot


@njit(**_JIT)
def tc_edge_merge_do_k(row, nb, n):
    # edges u < v, third vertex restricted to w > v: one hit per triangle
    t = 0
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            if v > u:
                i = _lower_bound(nb, su, se, v + 1)
                j = _lower_bound(nb, row[v], row[v + 1], v + 1)
                t += _merge_count(nb, i, se, j, row[v + 1])
    return t


@njit(**_JIT)
def tc_edge_binary_k(row, nb, n):
    t = 0
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            sv, ve = row[v], row[v + 1]
            if se - su <= ve - sv:
                t += _bsearch_count(nb, su, se, sv, ve)
            else:
                t += _bsearch_count(nb, sv, ve, su, se)
    return t // 6


@njit(**_JIT)
def tc_edge_binary_do_k(row, nb, n):
    t = 0
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            if v > u:
                i = _lower_bound(nb, su, se, v + 1)
                j = _lower_bound(nb, row[v], row[v + 1], v + 1)
                if se - i <= row[v + 1] - j:
                    t += _bsearch_count(nb, i, se, j, row[v + 1])
                else:
                    t += _bsearch_count(nb, j, row[v + 1], i, se)
    return t


@njit(**_JIT)
def tc_edge_partition_k(row, nb, n):
    t = 0
    stack = np.empty(4 * 512, np.int64)
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            t += _partition_count(nb, su, se, row[v], row[v + 1], stack)
    return t // 6


@njit(**_JIT)
def tc_edge_partition_do_k(row, nb, n):
    t = 0
    stack = np.empty(4 * 512, np.int64)
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            if v > u:
                i = _lower_bound(nb, su, se, v + 1)
                j = _lower_bound(nb, row[v], row[v + 1], v + 1)
                t += _partition_count(nb, i, se, j, row[v + 1], stack)
    return t


@njit(**_JIT)
def tc_edge_hash_k(row, nb, n):
    t = 0
    mark = np.zeros(n, np.bool_)
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            for i in range(su, se):
                mark[nb[i]] = True
            for j in range(row[v], row[v + 1]):
                if mark[nb[j]]:
                    t += 1
            for i in range(su, se):
                mark[nb[i]] = False
    return t // 6


@njit(**_JIT)
def tc_edge_hash_do_k(row, nb, n):
    t = 0
    mark = np.zeros(n, np.bool_)
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            v = nb[s]
            if v > u:
                i0 = _lower_bound(nb, su, se, v + 1)
                j0 = _lower_bound(nb, row[v], row[v + 1], v + 1)
                for i in range(i0, se):
                    mark[nb[i]] = True
                for j in range(j0, row[v + 1]):
                    if mark[nb[j]]:
                        t += 1
                for i in range(i0, se):
                    mark[nb[i]] = False
    return t


@njit(**_JIT)
def emp_range_k(row, nb, eu, ev, k0, k1):
    # duplicate-counting variant: both edge directions are merged, as in
    # the sequential form, so the measured work matches
    t = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        t += _merge_count(nb, row[u], row[u + 1], row[v], row[v + 1])
        t += _merge_count(nb, row[v], row[v + 1], row[u], row[u + 1])
    return t


@njit(**_JIT)
def emdp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        i = _lower_bound(nb, row[u], row[u + 1], v + 1)
        j = _lower_bound(nb, row[v], row[v + 1], v + 1)
        t += _merge_count(nb, i, row[u + 1], j, row[v + 1])
    return t


@njit(**_JIT)
def ebp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        t += _bsearch_count(nb, row[u], row[u + 1], row[v], row[v + 1])
        t += _bsearch_count(nb, row[v], row[v + 1], row[u], row[u + 1])
    return t


@njit(**_JIT)
def ebdp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        i = _lower_bound(nb, row[u], row[u + 1], v + 1)
        j = _lower_bound(nb, row[v], row[v + 1], v + 1)
        if row[u + 1] - i <= row[v + 1] - j:
            t += _bsearch_count(nb, i, row[u + 1], j, row[v + 1])
        else:
            t += _bsearch_count(nb, j, row[v + 1], i, row[u + 1])
    return t


@njit(**_JIT)
def etp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    stack = np.empty(4 * 512, np.int64)
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        t += _partition_count(nb, row[u], row[u + 1], row[v], row[v + 1], stack)
        t += _partition_count(nb, row[v], row[v + 1], row[u], row[u + 1], stack)
    return t


@njit(**_JIT)
def etdp_range_k(row, nb, eu, ev, k0, k1):
    t = 0
    stack = np.empty(4 * 512, np.int64)
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        i = _lower_bound(nb, row[u], row[u + 1], v + 1)
        j = _lower_bound(nb, row[v], row[v + 1], v + 1)
        t += _partition_count(nb, i, row[u + 1], j, row[v + 1], stack)
    return t


@njit(**_JIT)
def ehp_range_k(row, nb, n, eu, ev, k0, k1):
    t = 0
    mark = np.zeros(n, np.bool_)
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        for i in range(row[u], row[u + 1]):
            mark[nb[i]] = True
        for j in range(row[v], row[v + 1]):
            if mark[nb[j]]:
                t += 1
        for i in range(row[u], row[u + 1]):
            mark[nb[i]] = False
        for i in range(row[v], row[v + 1]):
            mark[nb[i]] = True
        for j in range(row[u], row[u + 1]):
            if mark[nb[j]]:
                t += 1
        for i in range(row[v], row[v + 1]):
            mark[nb[i]] = False
    return t


@njit(**_JIT)
def ehdp_range_k(row, nb, n, eu, ev, k0, k1):
    t = 0
    mark = np.zeros(n, np.bool_)
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        i0 = _lower_bound(nb, row[u], row[u + 1], v + 1)
        j0 = _lower_bound(nb, row[v], row[v + 1], v + 1)
        for i in range(i0, row[u + 1]):
            mark[nb[i]] = True
        for j in range(j0, row[v + 1]):
            if mark[nb[j]]:
                t += 1
        for i in range(i0, row[u + 1]):
            mark[nb[i]] = False
    return t


# ---------------------------------------------------------------------------
# forward family


@njit(**_JIT)
def tc_forward_k(row, nb, n):
    # A(v) holds processed lower neighbors of v, appended in increasing
    # order, so the A arrays stay sorted and merge-intersectable
    aoff = np.zeros(n + 1, np.int64)
    for v in range(n):
        cnt = 0
        for s in range(row[v], row[v + 1]):
            if nb[s] < v:
                cnt += 1
        aoff[v + 1] = cnt
    for v in range(n):
        aoff[v + 1] += aoff[v]
    adata = np.empty(aoff[n], np.int64)
    alen = np.zeros(n, np.int64)
    t = 0
    for u in range(n):
        for s in range(row[u], row[u + 1]):
            v = nb[s]
            if v > u:
                i, ie = aoff[u], aoff[u] + alen[u]
                j, je = aoff[v], aoff[v] + alen[v]
                while i < ie and j < je:
                    x = adata[i]
                    y = adata[j]
                    if x == y:
                        t += 1
                        i += 1
                        j += 1
                    elif x < y:
                        i += 1
                    else:
                        j += 1
                adata[aoff[v] + alen[v]] = u
                alen[v] += 1
    return t


@njit(**_JIT)
def tc_forward_hashed_k(row, nb, n):
    aoff = np.zeros(n + 1, np.int64)
    for v in range(n):
        cnt = 0
        for s in range(row[v], row[v + 1]):
            if nb[s] < v:
                cnt += 1
        aoff[v + 1] = cnt
    for v in range(n):
        aoff[v + 1] += aoff[v]
    adata = np.empty(aoff[n], np.int64)
    alen = np.zeros(n, np.int64)
    mark = np.zeros(n, np.bool_)
    t = 0
    for u in range(n):
        for s in range(row[u], row[u + 1]):
            v = nb[s]
            if v > u:
                for i in range(aoff[u], aoff[u] + alen[u]):
                    mark[adata[i]] = True
                for j in range(aoff[v], aoff[v] + alen[v]):
                    if mark[adata[j]]:
                        t += 1
                for i in range(aoff[u], aoff[u] + alen[u]):
                    mark[adata[i]] = False
                adata[aoff[v] + alen[v]] = u
                alen[v] += 1
    return t


@njit(**_JIT)
def tc_tri_simple_k(row, nb, n):
    # one scatter per vertex, reused across its forward edges
    t = 0
    mark = np.zeros(n, np.bool_)
    for u in range(n):
        for s in range(row[u], row[u + 1]):
            mark[nb[s]] = True
        for s in range(row[u], row[u + 1]):
            v = nb[s]
            if v > u:
                for j in range(row[v], row[v + 1]):
                    if mark[nb[j]]:
                        t += 1
        for s in range(row[u], row[u + 1]):
            mark[nb[s]] = False
    return t // 3


@njit(**_JIT)
def tc_linear_algebra_k(row, nb, n):
    # row-wise masked product over the lower-triangular orientation:
    # for each edge (u, v) with v < u, count common neighbors below v
    t = 0
    mark = np.zeros(n, np.bool_)
    for u in range(n):
        su, se = row[u], row[u + 1]
        for s in range(su, se):
            w = nb[s]
            if w >= u:
                break
            mark[w] = True
        for s in range(su, se):
            v = nb[s]
            if v >= u:
                break
            for j in range(row[v], row[v + 1]):
                w = nb[j]
                if w >= v:
                    break
                if mark[w]:
                    t += 1
        for s in range(su, se):
            w = nb[s]
            if w >= u:
                break
            mark[w] = False
    return t


# ---------------------------------------------------------------------------
# spanning-tree listing


@njit(**_JIT)
def tc_treelist_k(row, nb, n):
    # repeatedly: build a BFS forest, test every directed non-tree edge
    # against the endpoint parents, then drop the forest edges
    cur_row = row.copy()
    cur_nb = nb.copy()
    parent = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    t = 0
    while cur_row[n] > 0:
        for v in range(n):
            parent[v] = -2  # unvisited; roots become -1
        head, tail = 0, 0
        for r in range(n):
            if parent[r] != -2:
                continue
            parent[r] = -1
            queue[tail] = r
            tail += 1
            while head < tail:
                u = queue[head]
                head += 1
                for s in range(cur_row[u], cur_row[u + 1]):
                    w = cur_nb[s]
                    if parent[w] == -2:
                        parent[w] = u
                        queue[tail] = w
                        tail += 1
        for u in range(n):
            for s in range(cur_row[u], cur_row[u + 1]):
                v = cur_nb[s]
                if parent[v] == u or parent[u] == v:
                    continue
                pu = parent[u]
                if pu >= 0 and _contains(cur_nb, cur_row[pu], cur_row[pu + 1], v):
                    t += 1
                else:
                    pv = parent[v]
                    if pv >= 0 and _contains(cur_nb, cur_row[pv], cur_row[pv + 1], u):
                        t += 1
        new_row = np.zeros(n + 1, np.int64)
        for u in range(n):
            deg = 0
            for s in range(cur_row[u], cur_row[u + 1]):
                v = cur_nb[s]
                if parent[v] != u and parent[u] != v:
                    deg += 1
            new_row[u + 1] = deg
        for u in range(n):
            new_row[u + 1] += new_row[u]
        new_nb = np.empty(new_row[n], cur_nb.dtype)
        for u in range(n):
            pos = new_row[u]
            for s in range(cur_row[u], cur_row[u + 1]):
                v = cur_nb[s]
                if parent[v] != u and parent[u] != v:
                    new_nb[pos] = v
                    pos += 1
        cur_row = new_row
        cur_nb = new_nb
    return t // 2


# ---------------------------------------------------------------------------
# cover-edge counting


@njit(**_JIT)
def cetc_count_k(row, nb, level, n):
    # horizontal edges u < v; apex w counted when it lies on another
    # level (unique horizontal edge) or when v < w (same-level triangle
    # counted from its least edge only)
    t = 0
    for u in range(n):
        su, se = row[u], row[u + 1]
        lu = level[u]
        for s in range(su, se):
            v = nb[s]
            if v > u and level[v] == lu:
                i, j = su, row[v]
                je = row[v + 1]
                while i < se and j < je:
                    x = nb[i]
                    y = nb[j]
                    if x == y:
                        if level[x] != lu or x > v:
                            t += 1
                        i += 1
                        j += 1
                    elif x < y:
                        i += 1
                    else:
                        j += 1
    return t


@njit(**_JIT)
def cetc_pair_counts_k(row, nb, level, n):
    # apex tallies without the v < w dedup: c1 apexes off-level, c2 on
    # the shared level (every same-level triangle lands in c2 three times)
    c1 = 0
    c2 = 0
    for u in range(n):
        su, se = row[u], row[u + 1]
        lu = level[u]
        for s in range(su, se):
            v = nb[s]
            if v > u and level[v] == lu:
                i, j = su, row[v]
                je = row[v + 1]
                while i < se and j < je:
                    x = nb[i]
                    y = nb[j]
                    if x == y:
                        if level[x] != lu:
                            c1 += 1
                        else:
                            c2 += 1
                        i += 1
                        j += 1
                    elif x < y:
                        i += 1
                    else:
                        j += 1
    return c1, c2


@njit(**_JIT)
def cetc_sm_range_k(row, nb, level, eu, ev, k0, k1):
    c1 = 0
    c2 = 0
    for k in range(k0, k1):
        u = eu[k]
        v = ev[k]
        lu = level[u]
        if level[v] != lu:
            continue
        i, ie = row[u], row[u + 1]
        j, je = row[v], row[v + 1]
        while i < ie and j < je:
            x = nb[i]
            y = nb[j]
            if x == y:
                if level[x] != lu:
                    c1 += 1
                else:
                    c2 += 1
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
    return c1, c2


@njit(**_JIT)
def cetc_count_restricted_k(row, nb, level, eu, ev, lo, hi):
    # cover edges against apex vertices limited to the range [lo, hi)
    t = 0
    for k in range(len(eu)):
        u = eu[k]
        v = ev[k]
        lu = level[u]
        i = _lower_bound(nb, row[u], row[u + 1], lo)
        j = _lower_bound(nb, row[v], row[v + 1], lo)
        ie, je = row[u + 1], row[v + 1]
        while i < ie and j < je:
            x = nb[i]
            y = nb[j]
            if x >= hi or y >= hi:
                break
            if x == y:
                if level[x] != lu or x > v:
                    t += 1
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
    return t


@njit(**_JIT)
def split_cross_count_k(row0, nb0, row1, nb1, n):
    # triangles with one horizontal edge (u, v) and both cross edges in
    # the level-spanning graph: hash N1(u), probe N1(v) for each forward
    # horizontal neighbor v of u
    t = 0
    mark = np.zeros(n, np.bool_)
    for u in range(n):
        s1, e1 = row1[u], row1[u + 1]
        for i in range(s1, e1):
            mark[nb1[i]] = True
        for s in range(row0[u], row0[u + 1]):
            v = nb0[s]
            if v > u:
                for j in range(row1[v], row1[v + 1]):
                    if mark[nb1[j]]:
                        t += 1
        for i in range(s1, e1):
            mark[nb1[i]] = False
    return t
