"""Pure-Python Boolean bitmask kernels.

Every function here has a twin with the same signature and results in
``_cext.pyx``.  Matrices are passed as row bitmasks (bit ``j`` of
``rows[i]`` is entry ``(i, j)``), vector lists as one bitmask per vector,
digraphs as out-neighbour bitmasks.
"""


def bool_bidet(rows, n):
    """Boolean ``(det+, det-)`` by permutation expansion with early exit."""
    found = [0, 0]
    full = (1 << n) - 1

    def walk(i, unused, parity):
        if i == n:
            found[parity] = 1
            return found[0] and found[1]
        avail = rows[i] & unused
        while avail:
            low = avail & -avail
            avail ^= low
            # columns still unused below the chosen one are the new inversions
            p = parity ^ (bin(unused & (low - 1)).count("1") & 1)
            if walk(i + 1, unused ^ low, p):
                return True
        return False

    if n == 0:
        return (1, 0)
    walk(0, full, 0)
    return (found[0], found[1])


def first_unit_diagonal(rows, n, parity=-1):
    """Lexicographically first permutation with all entries 1.

    ``parity`` of 0 or 1 restricts to even or odd permutations; -1 accepts any.
    Returns a tuple ``sigma`` with ``sigma[i]`` the column used by row ``i``.
    """
    perm = [0] * n

    def walk(i, unused, par):
        if i == n:
            return parity < 0 or par == parity
        avail = rows[i] & unused
        while avail:
            low = avail & -avail
            avail ^= low
            perm[i] = low.bit_length() - 1
            p = par ^ (bin(unused & (low - 1)).count("1") & 1)
            if walk(i + 1, unused ^ low, p):
                return True
        return False

    if walk(0, (1 << n) - 1, 0):
        return tuple(perm)
    return None


def sign_pattern_attach(masks):
    """Lexicographically first sign pattern with equal Boolean sums.

    Digits per index are ordered unused < A < B, index 0 most significant,
    and the first used index must be in A.  Returns ``(a_mask, b_mask)`` over
    vector indices, or None when the vectors are detached.
    """
    k = len(masks)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    def walk(i, or_a, or_b, sel_a, sel_b):
        if (sel_a or sel_b) and or_a == or_b:
            # padding with "unused" is the smallest completion of this prefix
            return sel_a, sel_b
        if i == k:
            return None
        if (or_a ^ or_b) & ~suffix[i]:
            return None
        bit = 1 << i
        hit = walk(i + 1, or_a, or_b, sel_a, sel_b)
        if hit:
            return hit
        hit = walk(i + 1, or_a | masks[i], or_b, sel_a | bit, sel_b)
        if hit:
            return hit
        if sel_a:
            return walk(i + 1, or_a, or_b | masks[i], sel_a, sel_b | bit)
        return None

    return walk(0, 0, 0, 0, 0)


def closure_attach(masks):
    """Attachment by maximal-partner search over subsets ``A``.

    For each nonempty ``A`` in increasing bitmask order, the partner ``B`` is
    every vector outside ``A`` contained in the union of ``A``; a certificate
    with side ``A`` exists iff that partner reaches the same union.  The pair
    is oriented so the smallest used index lies in ``A``.
    """
    k = len(masks)
    unions = [0] * (1 << k)
    for a in range(1, 1 << k):
        low = a & -a
        u = unions[a ^ low] | masks[low.bit_length() - 1]
        unions[a] = u
        b = 0
        ub = 0
        for j in range(k):
            if not (a >> j) & 1 and not masks[j] & ~u:
                b |= 1 << j
                ub |= masks[j]
        if ub == u:
            if b and (b & -b) < low:
                return b, a
            return a, b
    return None


def even_cycle(adj, n):
    """First even simple directed cycle, as a node list starting at its minimum.

    Cycles are enumerated once each from their smallest node, scanning start
    nodes and neighbours in increasing order.
    """
    path = []
    on_path = [False] * n

    def walk(start, u):
        nbrs = adj[u]
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            v = low.bit_length() - 1
            if v == start:
                if len(path) % 2 == 0:
                    return True
            elif v > start and not on_path[v]:
                path.append(v)
                on_path[v] = True
                if walk(start, v):
                    return True
                path.pop()
                on_path[v] = False
        return False

    for s in range(n):
        path[:] = [s]
        on_path[s] = True
        if walk(s, s):
            return list(path)
        on_path[s] = False
    return None


def union_collision(masks):
    """First pair of distinct subfamilies with equal unions.

    Subfamilies are visited in increasing bitmask order; the result is
    ``(later, earlier)`` for the first repeated union, or None.
    """
    m = len(masks)
    seen = {0: 0}
    unions = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        u = unions[s ^ low] | masks[low.bit_length() - 1]
        unions[s] = u
        prev = seen.get(u)
        if prev is not None:
            return s, prev
        seen[u] = s
    return None
