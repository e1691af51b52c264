# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Berge-embedding kernel.

Implements exactly the procedure documented in ``_engine_py`` (assignment
order, candidate order, node accounting, ascending augmenting scans and
symmetry filters are identical); the two kernels must return bit-identical
results.  Fixed-width limits: 64 host vertices, 4096 hyperedges, 64
pattern vertices, 256 pattern edges.
"""

from libc.stdlib cimport calloc, free, malloc, realloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

ctypedef unsigned long long u64

NOT_FOUND = 0
FOUND = 1
INDETERMINATE = 2

MAX_HOST_VERTICES = 64
MAX_HOST_EDGES = 4096

# _dfs return values: 0 not found, 1 found, 2 budget exhausted


cdef struct State:
    int n, m, p, q, W, hn
    u64 *pair            # (n*n) x W candidate-hyperedge words per vertex pair
    int *order
    int *host_order
    int *inc_start       # p+1 offsets into inc_pe / inc_other
    int *inc_pe
    int *inc_other
    int *images
    u64 used
    int *match_of
    int *owner
    u64 *cand            # q x W forced-edge candidate words
    u64 *visited         # W scratch words per augmentation
    int *log_tag
    int *log_idx
    int *log_old
    int log_len
    int log_cap
    long long nodes
    long long budget
    bint cycle_sym
    int pinned_pe
    int pinned_he
    int first_vertex
    int second_vertex


cdef void _free_state(State *s) noexcept:
    free(s.pair)
    free(s.order)
    free(s.host_order)
    free(s.inc_start)
    free(s.inc_pe)
    free(s.inc_other)
    free(s.images)
    free(s.match_of)
    free(s.owner)
    free(s.cand)
    free(s.visited)
    free(s.log_tag)
    free(s.log_idx)
    free(s.log_old)


cdef int _log_push(State *s, int tag, int idx, int old) except -1:
    cdef int cap
    if s.log_len == s.log_cap:
        cap = s.log_cap * 2
        s.log_tag = <int *>realloc(s.log_tag, cap * sizeof(int))
        s.log_idx = <int *>realloc(s.log_idx, cap * sizeof(int))
        s.log_old = <int *>realloc(s.log_old, cap * sizeof(int))
        if s.log_tag == NULL or s.log_idx == NULL or s.log_old == NULL:
            raise MemoryError()
        s.log_cap = cap
    s.log_tag[s.log_len] = tag
    s.log_idx[s.log_len] = idx
    s.log_old[s.log_len] = old
    s.log_len += 1
    return 0


cdef void _rollback(State *s, int mark) noexcept:
    cdef int tag, idx, old
    while s.log_len > mark:
        s.log_len -= 1
        tag = s.log_tag[s.log_len]
        idx = s.log_idx[s.log_len]
        old = s.log_old[s.log_len]
        if tag == 0:
            s.match_of[idx] = old
        else:
            s.owner[idx] = old


cdef bint _augment(State *s, int pe) except? 0:
    cdef int w, j
    cdef u64 t, low
    for w in range(s.W):
        t = s.cand[pe * s.W + w]
        while t:
            low = t & (0 - t)
            t ^= low
            if s.visited[w] & low:
                continue
            s.visited[w] |= low
            j = w * 64 + __builtin_ctzll(low)
            if s.owner[j] == -1 or _augment(s, s.owner[j]):
                _log_push(s, 0, pe, s.match_of[pe])
                _log_push(s, 1, j, s.owner[j])
                s.match_of[pe] = j
                s.owner[j] = pe
                return True
    return False


cdef inline bint _pair_nonempty(State *s, int a, int b, int pe) noexcept:
    cdef int base = (a * s.n + b) * s.W
    cdef int w, pw
    cdef u64 word
    if pe == s.pinned_pe:
        pw = s.pinned_he >> 6
        word = s.pair[base + pw] & ((<u64>1) << (s.pinned_he & 63))
        return word != 0
    for w in range(s.W):
        if s.pair[base + w]:
            return True
    return False


cdef void _load_cand(State *s, int a, int b, int pe) noexcept:
    cdef int base = (a * s.n + b) * s.W
    cdef int w, pw
    if pe == s.pinned_pe:
        pw = s.pinned_he >> 6
        for w in range(s.W):
            s.cand[pe * s.W + w] = 0
        s.cand[pe * s.W + pw] = s.pair[base + pw] & ((<u64>1) << (s.pinned_he & 63))
    else:
        for w in range(s.W):
            s.cand[pe * s.W + w] = s.pair[base + w]


cdef int _dfs(State *s, int pos) except -1:
    cdef int pv, v, k, i, pe, other, mark, res, w
    cdef bint feasible, ok
    cdef u64 vbit
    if pos == s.p:
        return 1
    pv = s.order[pos]
    for k in range(s.hn):
        v = s.host_order[k]
        vbit = (<u64>1) << v
        if s.used & vbit:
            continue
        if s.cycle_sym:
            if pos > 0 and v < s.images[s.first_vertex]:
                continue
            if pos == s.p - 1 and v < s.images[s.second_vertex]:
                continue
        s.nodes += 1
        if s.budget and s.nodes > s.budget:
            return 2
        feasible = True
        for i in range(s.inc_start[pos], s.inc_start[pos + 1]):
            if not _pair_nonempty(s, s.images[s.inc_other[i]], v, s.inc_pe[i]):
                feasible = False
                break
        if not feasible:
            continue
        s.images[pv] = v
        s.used |= vbit
        mark = s.log_len
        ok = True
        for i in range(s.inc_start[pos], s.inc_start[pos + 1]):
            pe = s.inc_pe[i]
            other = s.inc_other[i]
            _load_cand(s, s.images[other], v, pe)
            for w in range(s.W):
                s.visited[w] = 0
            if not _augment(s, pe):
                ok = False
                break
        if ok:
            res = _dfs(s, pos + 1)
            if res != 0:
                return res
        _rollback(s, mark)
        s.images[pv] = -1
        s.used &= ~vbit
    return 0


def solve(n, edge_masks, pat_edges, order, host_order, budget=0,
          cycle_sym=False, pinned_pe=-1, pinned_he=-1):
    """Compiled twin of ``_engine_py.solve``; same contract and results."""
    cdef int m = len(edge_masks)
    cdef int q = len(pat_edges)
    cdef int p = 0
    cdef int a, b, i, j, x, y, k, cnt
    for a, b in pat_edges:
        if a + 1 > p:
            p = a + 1
        if b + 1 > p:
            p = b + 1
    if q > m or p > len(host_order):
        return (NOT_FOUND, None, None, 0)
    if n > 64 or m > 4096 or p > 64 or q > 256:
        raise ValueError("instance exceeds compiled kernel limits")

    cdef State s
    cdef int W = (m + 63) >> 6
    if W == 0:
        W = 1
    s.n = n
    s.m = m
    s.p = p
    s.q = q
    s.W = W
    s.hn = len(host_order)
    s.used = 0
    s.log_len = 0
    s.log_cap = 4096
    s.nodes = 0
    s.budget = budget
    s.cycle_sym = 1 if cycle_sym else 0
    s.pinned_pe = pinned_pe
    s.pinned_he = pinned_he

    s.pair = <u64 *>calloc(max(n * n, 1) * W, sizeof(u64))
    s.order = <int *>malloc(max(p, 1) * sizeof(int))
    s.host_order = <int *>malloc(max(s.hn, 1) * sizeof(int))
    s.inc_start = <int *>malloc((p + 2) * sizeof(int))
    s.inc_pe = <int *>malloc(max(q, 1) * sizeof(int))
    s.inc_other = <int *>malloc(max(q, 1) * sizeof(int))
    s.images = <int *>malloc(max(p, 1) * sizeof(int))
    s.match_of = <int *>malloc(max(q, 1) * sizeof(int))
    s.owner = <int *>malloc(max(m, 1) * sizeof(int))
    s.cand = <u64 *>calloc(max(q, 1) * W, sizeof(u64))
    s.visited = <u64 *>calloc(W, sizeof(u64))
    s.log_tag = <int *>malloc(s.log_cap * sizeof(int))
    s.log_idx = <int *>malloc(s.log_cap * sizeof(int))
    s.log_old = <int *>malloc(s.log_cap * sizeof(int))
    if (s.pair == NULL or s.order == NULL or s.host_order == NULL
            or s.inc_start == NULL or s.inc_pe == NULL or s.inc_other == NULL
            or s.images == NULL or s.match_of == NULL or s.owner == NULL
            or s.cand == NULL or s.visited == NULL or s.log_tag == NULL
            or s.log_idx == NULL or s.log_old == NULL):
        _free_state(&s)
        raise MemoryError()

    try:
        for i in range(p):
            s.order[i] = order[i]
            s.images[i] = -1
        for i in range(s.hn):
            s.host_order[i] = host_order[i]
        for i in range(q):
            s.match_of[i] = -1
        for i in range(m):
            s.owner[i] = -1

        # vertex-pair -> hyperedge-set table
        vs = [0] * 64
        for j in range(m):
            em = edge_masks[j]
            cnt = 0
            t = em
            while t:
                low = t & -t
                vs[cnt] = low.bit_length() - 1
                cnt += 1
                t ^= low
            for x in range(cnt):
                for y in range(x + 1, cnt):
                    a = vs[x]
                    b = vs[y]
                    s.pair[(a * n + b) * W + (j >> 6)] |= (<u64>1) << (j & 63)
                    s.pair[(b * n + a) * W + (j >> 6)] |= (<u64>1) << (j & 63)

        # forced-edge lists per position (edge forces at its later endpoint)
        pos_of = [0] * max(p, 1)
        for i in range(p):
            pos_of[order[i]] = i
        buckets = [[] for _ in range(max(p, 1))]
        for pe, (a0, b0) in enumerate(pat_edges):
            if pos_of[a0] > pos_of[b0]:
                buckets[pos_of[a0]].append((pe, b0))
            else:
                buckets[pos_of[b0]].append((pe, a0))
        k = 0
        for i in range(p):
            s.inc_start[i] = k
            for pe, other in buckets[i]:
                s.inc_pe[k] = pe
                s.inc_other[k] = other
                k += 1
        s.inc_start[p] = k

        s.first_vertex = s.order[0] if p > 0 else 0
        s.second_vertex = s.order[1] if p > 1 else s.first_vertex

        res = _dfs(&s, 0)
        if res == 2:
            return (INDETERMINATE, None, None, s.nodes)
        if res == 1:
            images = [s.images[i] for i in range(p)]
            assignment = [s.match_of[i] for i in range(q)]
            return (FOUND, images, assignment, s.nodes)
        return (NOT_FOUND, None, None, s.nodes)
    finally:
        _free_state(&s)
