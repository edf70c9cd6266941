"""Wilf-conjecture invariants of a numerical semigroup.

For S with conductor c, multiplicity m, minimal generators P and left part
L = S cap [0, c-1], the Wilf number is W(S) = |P||L| - c.  Wilf's
conjecture asks whether W(S) >= 0 always.  With q = ceil(c/m) and
rho = q*m - c, the refinement

    W0(S) = |P cap L| |L| - q |D_q| + rho

uses D_q, the non-primitive members of the final slice S_q = [c, c+m-1].
W(S) = W0(S) + |P_q|(|L| - q) always, so W0(S) >= 0 forces W(S) >= 0; a
semigroup with W0(S) < 0 is called a near-miss.

Everything here is a pure function of an immutable semigroup.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .semigroup import NumericalSemigroup

__all__ = [
    "WilfReport",
    "q_rho",
    "wilf_number",
    "w0_number",
    "slice_profile",
    "check_count_formulas",
    "wilf_report",
    "CSV_HEADER",
]

CSV_HEADER = "m,c,q,rho,genus,P,PL,L,Dq,Pq,W,W0,near_miss,label"


@dataclass(frozen=True)
class WilfReport:
    """All Wilf invariants of one semigroup.

    Counting conventions are uniform in the degenerate case S = N (c = 0,
    q = 0): pq_count is the number of primitives >= c and dq_count is
    m - pq_count, which keeps |P| = |P cap L| + |P_q|, m = |P_q| + |D_q|
    and W = W0 + |P_q|(|L| - q) exact for every S.  For any S != N these
    equal the slice-based counts |P cap S_q| and |D cap S_q|.
    """

    m: int
    c: int
    q: int
    rho: int
    genus: int
    p_total: int
    p_left: int
    l_count: int
    dq_count: int
    pq_count: int
    w: int
    w0: int
    near_miss: bool
    label: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.m, "c": self.c, "q": self.q, "rho": self.rho,
                "genus": self.genus, "P": self.p_total, "PL": self.p_left,
                "L": self.l_count, "Dq": self.dq_count, "Pq": self.pq_count,
                "W": self.w, "W0": self.w0, "near_miss": self.near_miss,
                "label": self.label,
            }
        )

    def to_csv_row(self) -> str:
        # generators inside CSV labels are ';'-separated so cells stay atomic
        return ",".join(
            str(v) for v in (
                self.m, self.c, self.q, self.rho, self.genus, self.p_total,
                self.p_left, self.l_count, self.dq_count, self.pq_count,
                self.w, self.w0, self.near_miss, self.csv_label,
            )
        )

    @property
    def csv_label(self) -> str:
        return self.label.replace(",", ";")


def q_rho(S: NumericalSemigroup) -> tuple[int, int]:
    """q = ceil(c/m), rho = q*m - c.  (0, 0) for S = N."""
    return S.q_rho()


def wilf_number(S: NumericalSemigroup) -> int:
    """W(S) = |P| |L| - c."""
    return len(S.gens) * (S.c - S.g) - S.c


def w0_number(S: NumericalSemigroup) -> int:
    """W0(S) = |P cap L| |L| - q |D_q| + rho."""
    q, rho = S.q_rho()
    l_count = S.c - S.g
    p_left = sum(1 for p in S.gens if p < S.c)
    dq = S.m - (len(S.gens) - p_left)
    return p_left * l_count - q * dq + rho


def slice_profile(S: NumericalSemigroup):
    """Per-slice counts (j, |X_j|, |P_j|, |D_j|) for 0 <= j <= q, plus
    |X_q cap D| where X is the Apery set.

    X_0 = {0} always; the slices S_j for j < q are proper subsets of their
    intervals, while S_q is the full interval [c, c+m-1].
    """
    q, _ = S.q_rho()
    ap = S.apery_set()
    x_counts = [0] * (q + 1)
    for x, j in zip(ap.elements, ap.slice_index):
        x_counts[j] += 1
    rows = []
    xq_decomposables = 0
    pc = S.pair_counts
    for j in range(q + 1):
        lo, hi = S.slice_bounds(j)
        p_count = d_count = 0
        # 0 in S_0 is neither primitive nor decomposable, so start at 1.
        for x in range(max(lo, 1), hi + 1):
            if x in S:
                if pc[x] == 0:
                    p_count += 1
                else:
                    d_count += 1
        rows.append((j, x_counts[j], p_count, d_count))
    for x, j, dec in zip(ap.elements, ap.slice_index, ap.decomposable):
        if j == q and dec:
            xq_decomposables += 1
    return rows, xq_decomposables


def check_count_formulas(S: NumericalSemigroup) -> bool:
    """Verify the Apery-based counting identities

        |L|   = q|X_0| + (q-1)|X_1| + ... + |X_{q-1}|
        |D_q| = |X_0| + ... + |X_{q-1}| + |X_q cap D|

    together with the underlying partition of D_q into X_q cap D and the
    translates X_i + (q-i)m for i < q.  Requires q >= 1.

    Degenerate case: the X_0 translate contributes {q*m}, which is
    decomposable as m + (q-1)m only when q >= 2.  For q = 1 (the
    half-lines {0} u [m, oo), and nothing else) q*m = m is primitive, so
    the X_0 term drops from the D_q side; the |L| identity is unaffected.
    """
    q, _ = S.q_rho()
    if q < 1:
        raise ValueError("count formulas need q >= 1 (S must not be all of N)")
    ap = S.apery_set()
    x_counts = [0] * (q + 1)
    for j in ap.slice_index:
        x_counts[j] += 1
    l_count = S.c - S.g
    if l_count != sum((q - i) * x_counts[i] for i in range(q)):
        return False
    pc = S.pair_counts
    dq_set = {x for x in range(S.c, S.c + S.m) if x > 0 and pc[x] > 0}
    xq_d = sum(
        1 for x, j, dec in zip(ap.elements, ap.slice_index, ap.decomposable)
        if j == q and dec
    )
    x0_term = 1 if q >= 2 else 0
    if len(dq_set) != x0_term + sum(x_counts[i] for i in range(1, q)) + xq_d:
        return False
    # Partition check: D_q = (X_q cap D) |_| |_|_{i<q} (X_i + (q-i)m),
    # with the i = 0 part present only for q >= 2.
    parts = [
        {x for x, j, dec in zip(ap.elements, ap.slice_index, ap.decomposable) if j == q and dec}
    ]
    if q >= 2:
        parts.append({q * S.m})
    for i in range(1, q):
        parts.append({x + (q - i) * S.m for x, j in zip(ap.elements, ap.slice_index) if j == i})
    union = set()
    total = 0
    for part in parts:
        union |= part
        total += len(part)
    return total == len(union) and union == dq_set


def wilf_report(S: NumericalSemigroup, label: str | None = None) -> WilfReport:
    """Assemble every invariant of S into one report."""
    q, rho = S.q_rho()
    l_count = S.c - S.g
    p_total = len(S.gens)
    p_left = sum(1 for p in S.gens if p < S.c)
    pq_count = p_total - p_left
    dq_count = S.m - pq_count
    w = p_total * l_count - S.c
    w0 = p_left * l_count - q * dq_count + rho
    assert w == w0 + pq_count * (l_count - q)
    if w0 >= 0:
        assert w >= 0
    if pq_count == 0:
        assert w == w0
    return WilfReport(
        m=S.m, c=S.c, q=q, rho=rho, genus=S.g,
        p_total=p_total, p_left=p_left, l_count=l_count,
        dq_count=dq_count, pq_count=pq_count,
        w=w, w0=w0, near_miss=w0 < 0,
        label=label if label is not None else S.label(),
    )
