# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: initializedcheck=False, language_level=3
"""Compiled enumeration kernel.

Same contract as nsg._explore_py.explore_subtree (the reference
implementation); state lives in flat C arrays and the whole walk runs
with the GIL released, so worker threads scale across cores.  Snapshots
(rare) reacquire the GIL to append to the Python result lists; the
minima tables are plain C arrays converted on return.
"""

from libc.stdint cimport int32_t, int64_t, uint8_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcmp, memcpy, memset

BACKEND = "cy"

cdef enum:
    _HUNT = 1
    _SCAN_BOUND = 2
    _SCAN_MINIMA = 4
    _INT64_MAX = 9223372036854775807

MODE_HUNT = _HUNT
MODE_SCAN_BOUND = _SCAN_BOUND
MODE_SCAN_MINIMA = _SCAN_MINIMA


cdef struct Ctx:
    uint8_t *member
    int32_t *splits
    int64_t *census
    int size
    int g_max
    int snapshot_genus
    int mode
    int q_filter
    long m_lo
    long m_hi
    # minima tables, minima mode only
    int64_t *min_val
    int64_t *min_cnt
    uint8_t *min_snap
    size_t snap_stride
    size_t n_cap
    # Python lists, touched only under the GIL
    void *hits
    void *seeds


cdef int _snapshot_to(Ctx *ctx, void *target, int c, int m, int g) except -1 nogil:
    with gil:
        (<list> target).append(
            (g, c, m, (<char *> ctx.member)[: c + m])
        )
    return 0


cdef void _write_snap(Ctx *ctx, size_t cell, int c, int m, int g) noexcept nogil:
    cdef uint8_t *slot = ctx.min_snap + cell * ctx.snap_stride
    cdef int32_t *head = <int32_t *> slot
    head[0] = g
    head[1] = c
    head[2] = m
    head[3] = c + m
    memcpy(slot + 16, ctx.member, c + m)


cdef bint _snap_less(Ctx *ctx, size_t cell, int c, int m, int g) noexcept nogil:
    cdef uint8_t *slot = ctx.min_snap + cell * ctx.snap_stride
    cdef int32_t *head = <int32_t *> slot
    if g != head[0]:
        return g < head[0]
    if c != head[1]:
        return c < head[1]
    if m != head[2]:
        return m < head[2]
    return memcmp(ctx.member, slot + 16, c + m) < 0


cdef void _update_minima(Ctx *ctx, int c, int m, int g, long n, long val) noexcept nogil:
    cdef size_t cell = (<size_t> m) * ctx.n_cap + <size_t> n
    cdef int64_t cur = ctx.min_val[cell]
    if val < cur:
        ctx.min_val[cell] = val
        ctx.min_cnt[cell] = 1
        _write_snap(ctx, cell, c, m, g)
    elif val == cur:
        ctx.min_cnt[cell] += 1
        if _snap_less(ctx, cell, c, m, g):
            _write_snap(ctx, cell, c, m, g)


cdef int _node_checks(Ctx *ctx, int c, int m, int g) except -1 nogil:
    # caller guarantees c > 3m, i.e. q >= 4 (necessary for W0 < 0)
    cdef int q = (c + m - 1) / m
    cdef long pl = 0, pq = 0
    cdef long rho, l_count, w0
    cdef int x
    if ctx.mode == _HUNT:
        if ctx.q_filter != 0 and q != ctx.q_filter:
            return 0
        if m < ctx.m_lo or m > ctx.m_hi:
            return 0
    else:
        if q != 4:
            return 0
        if ctx.mode == _SCAN_MINIMA and (m < ctx.m_lo or m > ctx.m_hi):
            return 0
    rho = <long> q * m - c
    l_count = c - g
    for x in range(m, c):
        if ctx.member[x] != 0 and ctx.splits[x] == 0:
            pl += 1
    for x in range(c, c + m):
        if ctx.splits[x] == 0:
            pq += 1
    w0 = pl * l_count - q * (m - pq) + rho
    if ctx.mode == _HUNT:
        if w0 < 0:
            _snapshot_to(ctx, ctx.hits, c, m, g)
    elif ctx.mode == _SCAN_BOUND:
        if 6 * w0 < -pl * (pl - 1) * (pl - 2):
            _snapshot_to(ctx, ctx.hits, c, m, g)
    else:
        _update_minima(ctx, c, m, g, pl, w0 - rho)
    return 0


cdef int _dfs(Ctx *ctx, int c, int m, int g) except -1 nogil:
    cdef uint8_t *member = ctx.member
    cdef int32_t *splits = ctx.splits
    cdef int size = ctx.size
    cdef int p, s, m2, lim, pmin, pmax
    if g == ctx.snapshot_genus:
        _snapshot_to(ctx, ctx.seeds, c, m, g)
        return 0
    ctx.census[g] += 1
    if ctx.mode != 0 and c > 3 * m:
        _node_checks(ctx, c, m, g)
    if g >= ctx.g_max:
        return 0
    pmin = c if c > m else m
    pmax = c + m - 1
    if pmax < m:
        pmax = m
    for p in range(pmin, pmax + 1):
        if member[p] != 0 and splits[p] == 0:
            member[p] = 0
            m2 = m + 1 if p == m else m
            lim = size - p
            for s in range(m2, lim):
                splits[p + s] -= member[s]
            if 2 * p < size:
                splits[2 * p] -= 1
            _dfs(ctx, p + 1, m2, g + 1)
            for s in range(m2, lim):
                splits[p + s] += member[s]
            if 2 * p < size:
                splits[2 * p] += 1
            member[p] = 1
    return 0


def explore_subtree(window, int c, int m, int g, int g_max,
                    int snapshot_genus=-1, int mode=0, int q_filter=0,
                    long m_lo=0, long m_hi=(1 << 30)):
    """See nsg._explore_py.explore_subtree; identical semantics."""
    if mode not in (0, _HUNT, _SCAN_BOUND, _SCAN_MINIMA):
        raise ValueError(f"modes are mutually exclusive, got {mode}")
    if g_max < 0 or g < 0 or g > g_max:
        raise ValueError("need 0 <= g <= g_max")
    cdef bytes wb = bytes(window)
    if len(wb) != c + m:
        raise ValueError(f"window length {len(wb)} != c+m = {c + m}")
    cdef int size = 3 * g_max + 4
    cdef Ctx ctx
    memset(&ctx, 0, sizeof(Ctx))
    ctx.size = size
    ctx.g_max = g_max
    ctx.snapshot_genus = snapshot_genus
    ctx.mode = mode
    ctx.q_filter = q_filter
    ctx.m_lo = m_lo
    ctx.m_hi = m_hi

    ctx.member = <uint8_t *> malloc(size)
    ctx.splits = <int32_t *> calloc(size, sizeof(int32_t))
    ctx.census = <int64_t *> calloc(g_max + 1, sizeof(int64_t))
    if ctx.member is NULL or ctx.splits is NULL or ctx.census is NULL:
        free(ctx.member); free(ctx.splits); free(ctx.census)
        raise MemoryError()
    memset(ctx.member, 1, size)
    memcpy(ctx.member, <const uint8_t *> (<const char *> wb), c + m)

    cdef int u, v
    for u in range(1, size):
        if ctx.member[u] != 0:
            for v in range(u, size - u):
                if ctx.member[v] != 0:
                    ctx.splits[u + v] += 1

    hits = []
    seeds = []
    ctx.hits = <void *> hits
    ctx.seeds = <void *> seeds

    cdef size_t cells = 0
    cdef size_t cell
    if mode == _SCAN_MINIMA:
        ctx.n_cap = <size_t> size
        ctx.snap_stride = 16 + <size_t> size
        cells = (<size_t> (g_max + 2)) * ctx.n_cap
        ctx.min_val = <int64_t *> malloc(cells * sizeof(int64_t))
        ctx.min_cnt = <int64_t *> calloc(cells, sizeof(int64_t))
        ctx.min_snap = <uint8_t *> calloc(cells, ctx.snap_stride)
        if ctx.min_val is NULL or ctx.min_cnt is NULL or ctx.min_snap is NULL:
            free(ctx.member); free(ctx.splits); free(ctx.census)
            free(ctx.min_val); free(ctx.min_cnt); free(ctx.min_snap)
            raise MemoryError()
        for u in range(<int> cells):
            ctx.min_val[u] = _INT64_MAX

    cdef int32_t *head
    cdef uint8_t *slot
    try:
        with nogil:
            _dfs(&ctx, c, m, g)
        census = [ctx.census[u] for u in range(g_max + 1)]
        minima = {}
        if mode == _SCAN_MINIMA:
            for u in range(g_max + 2):
                for v in range(<int> ctx.n_cap):
                    cell = (<size_t> u) * ctx.n_cap + <size_t> v
                    if ctx.min_cnt[cell] > 0:
                        slot = ctx.min_snap + cell * ctx.snap_stride
                        head = <int32_t *> slot
                        minima[(u, v)] = [
                            ctx.min_val[cell],
                            ctx.min_cnt[cell],
                            (head[0], head[1], head[2],
                             (<char *> (slot + 16))[: head[3]]),
                        ]
        return {"census": census, "hits": hits, "seeds": seeds, "minima": minima}
    finally:
        free(ctx.member)
        free(ctx.splits)
        free(ctx.census)
        free(ctx.min_val)
        free(ctx.min_cnt)
        free(ctx.min_snap)
