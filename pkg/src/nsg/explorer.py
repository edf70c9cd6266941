"""Exhaustive exploration of the tree of numerical semigroups by genus.

The root is N; children remove one primitive exceeding the Frobenius
number, so genus equals depth and the walk visits every numerical
semigroup of genus <= g_max exactly once.  Work is split two-phase: a
serial pass enumerates everything above a shallow seed genus and snapshots
the frontier, then worker threads drain the seed queue, each running the
selected kernel over one subtree (the compiled kernel releases the GIL, so
threads scale).  Results merge through order-insensitive accumulators and
are sorted canonically, making census and hunt output byte-identical
regardless of thread count.

Near-miss hunting returns full Wilf reports; scanners gather evidence for
the two open conjectures about q = 4 semigroups: the lower bound
W0 >= -C(n,3) for n = |P cap L|, and the profile of the minimizers of
W0 - rho per (m, n).
"""
from __future__ import annotations

import os
import threading
import time
from dataclasses import dataclass

from . import _kernel, checkpoint
from ._explore_py import MODE_HUNT, MODE_SCAN_BOUND, MODE_SCAN_MINIMA
from .node import ExplorationNode
from .semigroup import NumericalSemigroup
from .sumsets import IntSet, h_fold_sumset, induces_bh_mod
from .wilf import WilfReport, wilf_report

__all__ = [
    "HuntRecord",
    "MinimaEntry",
    "census",
    "hunt_near_misses",
    "scan_conjecture_bound",
    "scan_conjecture_minima",
    "iter_semigroups",
    "resolve_threads",
]

SEED_GENUS = 16
_ROOT = (b"\x01", 0, 1, 0)  # window, c, m, genus of N
_NO_M_HI = 1 << 30


def resolve_threads(threads: int | None = None) -> int:
    """Flag beats NSG_THREADS beats available parallelism."""
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("NSG_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class HuntRecord:
    """One explored semigroup of interest, with its full report."""

    label: str
    report: WilfReport

    def to_json(self) -> str:
        return self.report.to_json()


@dataclass(frozen=True)
class MinimaEntry:
    """Minimum of W0 - rho among q = 4 semigroups with given (m, n).

    `count` is the number of minimizers; `label` and the three condition
    flags describe the canonically-least minimizer:
      (1) P cap L inside the first slice S_1,
      (2) X_1 induces a B3 set in Z/mZ,
      (3) X_2 empty, X_3 = 2*X_1 and X_4 cap D = 3*X_1.
    all_flagged is True/False when the example decides it (count == 1 or a
    flag already fails), None when more minimizers exist than were kept.
    """

    m: int
    n: int
    min_value: int
    count: int
    label: str
    genus: int
    flags: tuple[bool, bool, bool]
    all_flagged: bool | None

    def to_json(self) -> str:
        import json

        return json.dumps({
            "m": self.m, "n": self.n, "min_w0_minus_rho": self.min_value,
            "count": self.count, "label": self.label, "genus": self.genus,
            "left_primitives_in_s1": self.flags[0],
            "x1_induces_b3": self.flags[1],
            "slices_are_sumsets": self.flags[2],
            "all_flagged": self.all_flagged,
        })


class _Accumulator:
    def __init__(self, g_max):
        self.census = [0] * (g_max + 1)
        self.hits = []
        self.minima = {}

    def merge(self, res):
        for i, v in enumerate(res["census"]):
            self.census[i] += v
        self.hits.extend(res["hits"])
        for key, (val, cnt, snap) in res["minima"].items():
            cur = self.minima.get(key)
            if cur is None or val < cur[0]:
                self.minima[key] = [val, cnt, snap]
            elif val == cur[0]:
                cur[1] += cnt
                if snap < cur[2]:
                    cur[2] = snap


def _run(g_max, mode=0, q_filter=0, m_range=None, threads=None, kernel=None,
         checkpoint_path=None, checkpoint_interval=300.0, resume_path=None,
         seed_genus=None):
    if g_max < 0:
        raise ValueError("g_max must be >= 0")
    kern = kernel if kernel is not None else _kernel.active
    m_lo, m_hi = m_range if m_range else (0, _NO_M_HI)
    acc = _Accumulator(g_max)
    sg = SEED_GENUS if seed_genus is None else seed_genus

    if resume_path:
        saved = checkpoint.load(resume_path)
        if (saved["mode"], saved["g_max"], saved["q_filter"]) != (mode, g_max, q_filter) \
                or (saved["m_lo"], saved["m_hi"]) != (m_lo, m_hi):
            raise ValueError(
                f"{resume_path}: checkpoint parameters do not match this run"
            )
        acc.census = saved["census"]
        acc.hits = saved["hits"]
        seeds = saved["pending"]
    elif g_max <= sg + 4:
        res = kern.explore_subtree(*_ROOT, g_max, -1, mode, q_filter, m_lo, m_hi)
        acc.merge(res)
        seeds = []
    else:
        res = kern.explore_subtree(*_ROOT, sg, sg, mode, q_filter, m_lo, m_hi)
        acc.merge(res)
        seeds = res["seeds"]

    if seeds:
        lock = threading.Lock()
        state = {"next": 0, "done": set(), "error": None,
                 "deadline": time.monotonic() + checkpoint_interval}

        def dump_checkpoint():
            pending = [s for i, s in enumerate(seeds) if i not in state["done"]]
            checkpoint.dump(checkpoint_path, mode=mode, g_max=g_max,
                            q_filter=q_filter, m_lo=m_lo, m_hi=m_hi,
                            census=acc.census, hits=acc.hits, pending=pending)

        def worker():
            while True:
                with lock:
                    if state["error"] is not None:
                        return
                    i = state["next"]
                    if i >= len(seeds):
                        return
                    state["next"] = i + 1
                g0, c0, m0, window = seeds[i]
                res = kern.explore_subtree(window, c0, m0, g0, g_max, -1,
                                           mode, q_filter, m_lo, m_hi)
                with lock:
                    acc.merge(res)
                    state["done"].add(i)
                    if checkpoint_path and time.monotonic() >= state["deadline"]:
                        dump_checkpoint()
                        state["deadline"] = time.monotonic() + checkpoint_interval

        def guarded_worker():
            try:
                worker()
            except BaseException as e:  # surface failures after join
                with lock:
                    if state["error"] is None:
                        state["error"] = e

        n = min(resolve_threads(threads), len(seeds))
        if n <= 1:
            try:
                worker()
            finally:
                if checkpoint_path:
                    dump_checkpoint()
        else:
            pool = [threading.Thread(target=guarded_worker, daemon=True) for _ in range(n)]
            for t in pool:
                t.start()
            for t in pool:
                t.join()
            if checkpoint_path:
                dump_checkpoint()
            if state["error"] is not None:
                raise state["error"]
    return acc


def _materialize(snap) -> NumericalSemigroup:
    g, c, m, window = snap
    S = NumericalSemigroup.from_window(window, c, m)
    assert S.g == g, "kernel snapshot inconsistent"
    return S


def _hunt_record(snap) -> HuntRecord:
    S = _materialize(snap)
    label = S.left_primitive_label()
    return HuntRecord(label, wilf_report(S, label))


def census(g_max, threads=None, kernel=None, checkpoint_path=None,
           checkpoint_interval=300.0, resume_path=None, seed_genus=None):
    """Exact number of numerical semigroups of each genus 0..g_max."""
    acc = _run(g_max, 0, threads=threads, kernel=kernel,
               checkpoint_path=checkpoint_path,
               checkpoint_interval=checkpoint_interval,
               resume_path=resume_path, seed_genus=seed_genus)
    return acc.census


def hunt_near_misses(g_max, q=None, m_range=None, threads=None, kernel=None,
                     checkpoint_path=None, checkpoint_interval=300.0,
                     resume_path=None, seed_genus=None):
    """Every semigroup of genus <= g_max with W0 < 0 (near-misses), sorted
    by (genus, label).  Optional filters: exact q, multiplicity range."""
    acc = _run(g_max, MODE_HUNT, q_filter=q or 0, m_range=m_range,
               threads=threads, kernel=kernel, checkpoint_path=checkpoint_path,
               checkpoint_interval=checkpoint_interval, resume_path=resume_path,
               seed_genus=seed_genus)
    records = [_hunt_record(snap) for snap in acc.hits]
    records.sort(key=lambda r: (r.report.genus, r.label))
    return records


def scan_conjecture_bound(g_max, threads=None, kernel=None, checkpoint_path=None,
                          checkpoint_interval=300.0, resume_path=None,
                          seed_genus=None):
    """Check W0 >= -C(n,3), n = |P cap L|, over all q = 4 semigroups of
    genus <= g_max; returns the violators (expected none; any hit would be
    a counterexample to the bound conjecture)."""
    acc = _run(g_max, MODE_SCAN_BOUND, threads=threads, kernel=kernel,
               checkpoint_path=checkpoint_path,
               checkpoint_interval=checkpoint_interval,
               resume_path=resume_path, seed_genus=seed_genus)
    records = [_hunt_record(snap) for snap in acc.hits]
    records.sort(key=lambda r: (r.report.genus, r.label))
    return records


def _condition_flags(S: NumericalSemigroup) -> tuple[bool, bool, bool]:
    lo1, hi1 = S.slice_bounds(1)
    f1 = all(lo1 <= p <= hi1 for p in S.gens if p < S.c)
    ap = S.apery_set()
    x_sets: dict[int, set[int]] = {}
    for x, j in zip(ap.elements, ap.slice_index):
        x_sets.setdefault(j, set()).add(x)
    x1 = x_sets.get(1, set())
    if x1:
        a1 = IntSet(tuple(x1))
        f2 = induces_bh_mod(a1, S.m, 3)
        two = set(h_fold_sumset(a1, 2).elements)
        three = set(h_fold_sumset(a1, 3).elements)
    else:
        f2 = True  # vacuous
        two = set()
        three = set()
    x4d = {x for x, j, dec in zip(ap.elements, ap.slice_index, ap.decomposable)
           if j == 4 and dec}
    f3 = not x_sets.get(2) and x_sets.get(3, set()) == two and x4d == three
    return f1, f2, f3


def scan_conjecture_minima(g_max, m_filter=None, threads=None, kernel=None,
                           seed_genus=None):
    """Per (m, n): the minimum of W0 - rho over q = 4 semigroups of genus
    <= g_max, how many semigroups attain it, and the structural condition
    flags of the canonically-least minimizer.  Sorted by (m, n)."""
    m_range = (m_filter, m_filter) if m_filter else None
    acc = _run(g_max, MODE_SCAN_MINIMA, m_range=m_range, threads=threads,
               kernel=kernel, seed_genus=seed_genus)
    entries = []
    for (m, n), (val, count, snap) in sorted(acc.minima.items()):
        S = _materialize(snap)
        flags = _condition_flags(S)
        if not all(flags):
            all_flagged = False
        elif count == 1:
            all_flagged = True
        else:
            all_flagged = None  # other minimizers were not kept
        entries.append(MinimaEntry(m, n, val, count, S.left_primitive_label(),
                                   S.g, flags, all_flagged))
    return entries


def iter_semigroups(g_max):
    """Yield every numerical semigroup of genus <= g_max, depth-first.

    Pure-Python; meant for exhaustive small-genus test sweeps, not bulk
    enumeration."""
    node = ExplorationNode.root(g_max)

    def rec():
        yield node.to_semigroup()
        if node.genus < g_max:
            for p in node.effective_generators():
                token = node.apply(p)
                yield from rec()
                node.undo(token)

    yield from rec()
