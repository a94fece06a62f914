# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel: same contract and output as _reduce_py.

Differences are internal only (C arrays, recursion instead of an explicit
stack, swap-with-last edge removal).  The branching edge is still chosen as
the smallest (u, v) pair by value, so deterministic runs agree with the
pure kernel exactly.  Tracing is not supported here; chromalg.rewrite
routes traced calls to the pure kernel.
"""

from libc.stdlib cimport free, malloc

__all__ = ["reduce_terms"]


cdef int _simplify(int* eu, int* ev, int* pne, int num_vertices, int* pk) except -2:
    """Rules 2/3/4 until stable; returns 1 if alive, 0 if rule 4 fired."""
    cdef int ne = pne[0]
    cdef int k = pk[0]
    cdef int* val = <int*> malloc((num_vertices if num_vertices else 1) * sizeof(int))
    if val == NULL:
        raise MemoryError()
    cdef int i, v, a, b, s1, s2, changed
    try:
        while True:
            for v in range(num_vertices):
                val[v] = 0
            for i in range(ne):
                if eu[i] >= 0:
                    val[eu[i]] += 1
                if ev[i] >= 0:
                    val[ev[i]] += 1
            for v in range(num_vertices):
                if val[v] == 1:
                    pne[0] = ne
                    pk[0] = k
                    return 0
            changed = 0
            for i in range(ne):
                if eu[i] >= 0 and eu[i] == ev[i]:
                    ne -= 1
                    eu[i] = eu[ne]
                    ev[i] = ev[ne]
                    k += 1
                    changed = 1
                    break
            if changed:
                continue
            for v in range(num_vertices):
                if val[v] == 2:
                    s1 = -1
                    s2 = -1
                    for i in range(ne):
                        if eu[i] == v or ev[i] == v:
                            if s1 < 0:
                                s1 = i
                            else:
                                s2 = i
                                break
                    a = ev[s1] if eu[s1] == v else eu[s1]
                    b = ev[s2] if eu[s2] == v else eu[s2]
                    # drop s2 then s1, append the smoothed edge
                    ne -= 1
                    eu[s2] = eu[ne]
                    ev[s2] = ev[ne]
                    if s1 == ne:
                        s1 = s2
                    ne -= 1
                    eu[s1] = eu[ne]
                    ev[s1] = ev[ne]
                    if a <= b:
                        eu[ne] = a
                        ev[ne] = b
                    else:
                        eu[ne] = b
                        ev[ne] = a
                    ne += 1
                    changed = 1
                    break
            if not changed:
                pne[0] = ne
                pk[0] = k
                return 1
    finally:
        free(val)


cdef int _find(int* parent, int x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef object _leaf_blocks(int* eu, int* ev, int ne, int num_vertices, int n):
    cdef int m = 2 * n
    cdef int* parent = <int*> malloc((m + 1) * sizeof(int))
    cdef int* star = <int*> malloc((num_vertices if num_vertices else 1) * sizeof(int))
    if parent == NULL or star == NULL:
        if parent != NULL:
            free(parent)
        if star != NULL:
            free(star)
        raise MemoryError()
    cdef int i, vid, lab, ru, rv
    try:
        for i in range(m + 1):
            parent[i] = i
        for i in range(num_vertices):
            star[i] = 0
        for i in range(ne):
            if eu[i] < 0 and ev[i] < 0:
                ru = _find(parent, -eu[i])
                rv = _find(parent, -ev[i])
                if ru != rv:
                    parent[ru] = rv
            else:
                vid = eu[i] if eu[i] >= 0 else ev[i]
                lab = -ev[i] if eu[i] >= 0 else -eu[i]
                if star[vid]:
                    ru = _find(parent, star[vid])
                    rv = _find(parent, lab)
                    if ru != rv:
                        parent[ru] = rv
                else:
                    star[vid] = lab
        groups = {}
        for lab in range(1, m + 1):
            groups.setdefault(_find(parent, lab), []).append(lab)
        return tuple(sorted(tuple(g) for g in groups.values()))
    finally:
        free(parent)
        free(star)


cdef void _reduce_rec(int k, int sign, int* eu, int* ev, int ne,
                      int num_vertices, int n, dict out, object rng) except *:
    cdef int alive, i, pick, u, v, lo, hi, count, best_u, best_v
    alive = _simplify(eu, ev, &ne, num_vertices, &k)
    if not alive:
        return
    pick = -1
    count = 0
    best_u = 0
    best_v = 0
    for i in range(ne):
        if eu[i] >= 0 and ev[i] >= 0:
            count += 1
            if pick < 0 or eu[i] < best_u or (eu[i] == best_u and ev[i] < best_v):
                pick = i
                best_u = eu[i]
                best_v = ev[i]
    if pick < 0:
        blocks = _leaf_blocks(eu, ev, ne, num_vertices, n)
        vec = out.get(blocks)
        if vec is None:
            vec = {}
            out[blocks] = vec
        c = vec.get(k, 0) + sign
        if c:
            vec[k] = c
        elif k in vec:
            del vec[k]
        return
    if rng is not None:
        i = rng.randrange(count)
        count = 0
        for pick in range(ne):
            if eu[pick] >= 0 and ev[pick] >= 0:
                if count == i:
                    break
                count += 1
    u = eu[pick]
    v = ev[pick]
    if u < v:
        lo = u
        hi = v
    else:
        lo = v
        hi = u
    cdef int* cu = <int*> malloc((ne if ne else 1) * sizeof(int))
    cdef int* cv = <int*> malloc((ne if ne else 1) * sizeof(int))
    if cu == NULL or cv == NULL:
        if cu != NULL:
            free(cu)
        if cv != NULL:
            free(cv)
        raise MemoryError()
    cdef int j, x, y
    try:
        # contracted copy: drop the picked edge, relabel hi -> lo
        j = 0
        for i in range(ne):
            if i == pick:
                continue
            x = lo if eu[i] == hi else eu[i]
            y = lo if ev[i] == hi else ev[i]
            if x <= y:
                cu[j] = x
                cv[j] = y
            else:
                cu[j] = y
                cv[j] = x
            j += 1
        _reduce_rec(k, sign, cu, cv, j, num_vertices, n, out, rng)
        # deleted copy: drop the picked edge
        j = 0
        for i in range(ne):
            if i == pick:
                continue
            cu[j] = eu[i]
            cv[j] = ev[i]
            j += 1
        _reduce_rec(k, -sign, cu, cv, j, num_vertices, n, out, rng)
    finally:
        free(cu)
        free(cv)


def reduce_terms(n, num_vertices, edges, rng=None, trace=None):
    """Compiled twin of chromalg._reduce_py.reduce_terms."""
    if trace is not None:
        raise ValueError("trace is only supported by the pure kernel")
    edges = list(edges)
    cdef int ne = len(edges)
    cdef int nv = num_vertices
    cdef int order = n
    cdef int* eu = <int*> malloc((ne if ne else 1) * sizeof(int))
    cdef int* ev = <int*> malloc((ne if ne else 1) * sizeof(int))
    if eu == NULL or ev == NULL:
        if eu != NULL:
            free(eu)
        if ev != NULL:
            free(ev)
        raise MemoryError()
    cdef int i
    out: dict = {}
    try:
        for i in range(ne):
            u, v = edges[i]
            if u <= v:
                eu[i] = u
                ev[i] = v
            else:
                eu[i] = v
                ev[i] = u
        _reduce_rec(0, 1, eu, ev, ne, nv, order, out, rng)
    finally:
        free(eu)
        free(ev)
    return {blocks: vec for blocks, vec in out.items() if vec}
