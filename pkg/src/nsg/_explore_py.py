"""Pure-Python enumeration kernel (fallback for the compiled extension).

Walks the subtree of one seed semigroup depth-first with an explicit undo
of every child move, maintaining membership and two-term decomposition
counts over a fixed window.  Semantics must match nsg._explore_cy exactly;
the compiled kernel is selected at import when available (see
nsg._kernel) and this module is the reference implementation.

Near-miss filtering applies the cheap necessary condition first: W0 < 0
requires q >= 4 (proved for q <= 3), i.e. c > 3m, so the full invariant
scan runs only on nodes passing the q test.
"""
from __future__ import annotations

from .node import unordered_pair_counts

BACKEND = "py"

MODE_HUNT = 1
MODE_SCAN_BOUND = 2
MODE_SCAN_MINIMA = 4

_NO_M_HI = 1 << 30


def explore_subtree(window, c, m, g, g_max, snapshot_genus=-1, mode=0,
                    q_filter=0, m_lo=0, m_hi=_NO_M_HI):
    """Enumerate every semigroup in the subtree rooted at the given node.

    window: membership bytes over [0, c+m) of the seed node (genus g).
    Nodes of genus == snapshot_genus are not processed or descended into;
    they are returned as seeds for later calls.  Returns a dict with:
      census: node count per genus (index 0..g_max),
      hits:   snapshots (g, c, m, window) selected by `mode`,
      seeds:  snapshots of the pruned frontier,
      minima: {(m, n): [min of W0-rho, multiplicity, least snapshot]} over
              q = 4 nodes (minima mode only).
    """
    if mode not in (0, MODE_HUNT, MODE_SCAN_BOUND, MODE_SCAN_MINIMA):
        raise ValueError(f"modes are mutually exclusive, got {mode}")
    size = 3 * g_max + 4
    member = bytearray(size)
    member[: len(window)] = window
    for x in range(len(window), size):
        member[x] = 1
    splits = unordered_pair_counts(member, size)
    census = [0] * (g_max + 1)
    hits = []
    seeds = []
    minima = {}

    hunt = mode == MODE_HUNT
    scan_bound = mode == MODE_SCAN_BOUND
    scan_minima = mode == MODE_SCAN_MINIMA

    def check(c, m, g):
        q = (c + m - 1) // m
        if hunt:
            if (q_filter and q != q_filter) or not (m_lo <= m <= m_hi):
                return
        else:
            if q != 4:
                return
            if scan_minima and not (m_lo <= m <= m_hi):
                return
        rho = q * m - c
        l_count = c - g
        pl = 0
        for x in range(m, c):
            if member[x] and splits[x] == 0:
                pl += 1
        pq = 0
        for x in range(c, c + m):
            if splits[x] == 0:
                pq += 1
        w0 = pl * l_count - q * (m - pq) + rho
        if hunt:
            if w0 < 0:
                hits.append((g, c, m, bytes(member[: c + m])))
        elif scan_bound:
            if 6 * w0 < -pl * (pl - 1) * (pl - 2):
                hits.append((g, c, m, bytes(member[: c + m])))
        else:
            key = (m, pl)
            val = w0 - rho
            cur = minima.get(key)
            if cur is None or val < cur[0]:
                minima[key] = [val, 1, (g, c, m, bytes(member[: c + m]))]
            elif val == cur[0]:
                cur[1] += 1
                snap = (g, c, m, bytes(member[: c + m]))
                if snap < cur[2]:
                    cur[2] = snap

    def visit(c, m, g):
        if g == snapshot_genus:
            seeds.append((g, c, m, bytes(member[: c + m])))
            return
        census[g] += 1
        if mode and c > 3 * m:
            check(c, m, g)
        if g >= g_max:
            return
        pmin = c if c > m else m
        pmax = c + m - 1
        if pmax < m:
            pmax = m
        for p in range(pmin, pmax + 1):
            if member[p] and splits[p] == 0:
                member[p] = 0
                m2 = m + 1 if p == m else m
                lim = size - p
                for s in range(m2, lim):
                    if member[s]:
                        splits[p + s] -= 1
                if 2 * p < size:
                    splits[2 * p] -= 1
                visit(p + 1, m2, g + 1)
                for s in range(m2, lim):
                    if member[s]:
                        splits[p + s] += 1
                if 2 * p < size:
                    splits[2 * p] += 1
                member[p] = 1

    visit(c, m, g)
    return {"census": census, "hits": hits, "seeds": seeds, "minima": minima}
