# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Boolean bitmask kernels; same contracts as ``_pure``.

Masks are limited to 64 bits; callers route wider inputs to ``_pure``.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef struct BidetState:
    u64 *rows
    int n
    int found[2]


cdef bint _bidet_walk(BidetState *st, int i, u64 unused, int parity) nogil:
    cdef u64 avail, low
    cdef int p
    if i == st.n:
        st.found[parity] = 1
        return st.found[0] and st.found[1]
    avail = st.rows[i] & unused
    while avail:
        low = avail & (~avail + 1)
        avail ^= low
        p = parity ^ (popcount(unused & (low - 1)) & 1)
        if _bidet_walk(st, i + 1, unused ^ low, p):
            return True
    return False


def bool_bidet(rows, int n):
    cdef BidetState st
    cdef u64 buf[64]
    cdef int i
    if n == 0:
        return (1, 0)
    for i in range(n):
        buf[i] = rows[i]
    st.rows = buf
    st.n = n
    st.found[0] = 0
    st.found[1] = 0
    with nogil:
        _bidet_walk(&st, 0, (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF, 0)
    return (st.found[0], st.found[1])


cdef struct DiagState:
    u64 *rows
    int n
    int parity
    int *perm


cdef bint _diag_walk(DiagState *st, int i, u64 unused, int par) nogil:
    cdef u64 avail, low
    cdef int p
    if i == st.n:
        return st.parity < 0 or par == st.parity
    avail = st.rows[i] & unused
    while avail:
        low = avail & (~avail + 1)
        avail ^= low
        st.perm[i] = ctz(low)
        p = par ^ (popcount(unused & (low - 1)) & 1)
        if _diag_walk(st, i + 1, unused ^ low, p):
            return True
    return False


def first_unit_diagonal(rows, int n, int parity=-1):
    cdef DiagState st
    cdef u64 buf[64]
    cdef int perm[64]
    cdef int i
    cdef bint ok
    for i in range(n):
        buf[i] = rows[i]
    st.rows = buf
    st.n = n
    st.parity = parity
    st.perm = perm
    with nogil:
        ok = _diag_walk(&st, 0, (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF, 0)
    if ok:
        return tuple([perm[i] for i in range(n)])
    return None


cdef struct SignState:
    u64 *masks
    u64 *suffix
    int k
    u64 res_a
    u64 res_b


cdef bint _sign_walk(SignState *st, int i, u64 or_a, u64 or_b, u64 sel_a, u64 sel_b) nogil:
    cdef u64 bit
    if (sel_a or sel_b) and or_a == or_b:
        st.res_a = sel_a
        st.res_b = sel_b
        return True
    if i == st.k:
        return False
    if (or_a ^ or_b) & ~st.suffix[i]:
        return False
    bit = (<u64>1) << i
    if _sign_walk(st, i + 1, or_a, or_b, sel_a, sel_b):
        return True
    if _sign_walk(st, i + 1, or_a | st.masks[i], or_b, sel_a | bit, sel_b):
        return True
    if sel_a:
        return _sign_walk(st, i + 1, or_a, or_b | st.masks[i], sel_a, sel_b | bit)
    return False


def sign_pattern_attach(masks):
    cdef int k = len(masks)
    cdef u64 m[64]
    cdef u64 suffix[65]
    cdef SignState st
    cdef int i
    cdef bint ok
    for i in range(k):
        m[i] = masks[i]
    suffix[k] = 0
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | m[i]
    st.masks = m
    st.suffix = suffix
    st.k = k
    with nogil:
        ok = _sign_walk(&st, 0, 0, 0, 0, 0)
    if ok:
        return (int(st.res_a), int(st.res_b))
    return None


def closure_attach(masks):
    cdef int k = len(masks)
    cdef u64 m[64]
    cdef u64 *unions
    cdef u64 a, low, u, b, ub, total
    cdef int j
    cdef bint hit = False
    cdef u64 res_a = 0, res_b = 0
    for j in range(k):
        m[j] = masks[j]
    total = (<u64>1) << k
    unions = <u64 *> malloc(total * sizeof(u64))
    if unions == NULL:
        raise MemoryError()
    try:
        with nogil:
            unions[0] = 0
            a = 1
            while a < total:
                low = a & (~a + 1)
                u = unions[a ^ low] | m[ctz(low)]
                unions[a] = u
                b = 0
                ub = 0
                for j in range(k):
                    if not ((a >> j) & 1) and not (m[j] & ~u):
                        b |= (<u64>1) << j
                        ub |= m[j]
                if ub == u:
                    hit = True
                    if b and (b & (~b + 1)) < low:
                        res_a = b
                        res_b = a
                    else:
                        res_a = a
                        res_b = b
                    break
                a += 1
    finally:
        free(unions)
    if hit:
        return (int(res_a), int(res_b))
    return None


cdef struct CycleState:
    u64 *adj
    int *path
    int length
    u64 on_path


cdef bint _cycle_walk(CycleState *st, int start, int u) nogil:
    cdef u64 nbrs = st.adj[u]
    cdef u64 low
    cdef int v
    while nbrs:
        low = nbrs & (~nbrs + 1)
        nbrs ^= low
        v = ctz(low)
        if v == start:
            if st.length % 2 == 0:
                return True
        elif v > start and not (st.on_path & low):
            st.path[st.length] = v
            st.length += 1
            st.on_path |= low
            if _cycle_walk(st, start, v):
                return True
            st.length -= 1
            st.on_path ^= low
    return False


def even_cycle(adj, int n):
    cdef u64 a[64]
    cdef int path[64]
    cdef CycleState st
    cdef int s
    cdef bint ok = False
    for s in range(n):
        a[s] = adj[s]
    st.adj = a
    st.path = path
    with nogil:
        for s in range(n):
            st.path[0] = s
            st.length = 1
            st.on_path = (<u64>1) << s
            if _cycle_walk(&st, s, s):
                ok = True
                break
    if ok:
        return [path[s] for s in range(st.length)]
    return None


def union_collision(masks):
    # the dict of first occurrences keeps this in Python objects; the union
    # table itself is native
    cdef int m = len(masks)
    cdef u64 mk[64]
    cdef u64 *unions
    cdef u64 s, low, u, total
    cdef int j
    for j in range(m):
        mk[j] = masks[j]
    total = (<u64>1) << m
    unions = <u64 *> malloc(total * sizeof(u64))
    if unions == NULL:
        raise MemoryError()
    seen = {0: 0}
    try:
        unions[0] = 0
        s = 1
        while s < total:
            low = s & (~s + 1)
            u = unions[s ^ low] | mk[ctz(low)]
            unions[s] = u
            prev = seen.get(u)
            if prev is not None:
                return (int(s), prev)
            seen[u] = int(s)
            s += 1
    finally:
        free(unions)
    return None
