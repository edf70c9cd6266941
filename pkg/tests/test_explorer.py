import random

import pytest

from nsg import (
    ExplorationNode,
    GeneratorSpec,
    census,
    from_generators,
    hunt_near_misses,
    iter_semigroups,
    scan_conjecture_bound,
    scan_conjecture_minima,
    wilf_report,
)
from nsg import _kernel
from nsg.explorer import _condition_flags, resolve_threads

import oracles


PY = _kernel.get_kernel("py")


def all_kernels():
    kernels = [PY]
    try:
        kernels.append(_kernel.get_kernel("cy"))
    except ImportError:
        pass
    return kernels


# -- node ---------------------------------------------------------------------

def test_root_and_first_children():
    node = ExplorationNode.root(6)
    assert node.frontier == (0, 1) and node.genus == 0
    kids = node.children()
    assert len(kids) == 1  # remove 1 -> <2,3>
    child = kids[0]
    assert child.frontier == (2, 2) and child.genus == 1
    assert child.to_semigroup().gens == (2, 3)
    grandkids = child.children()
    assert len(grandkids) == 2
    labels = sorted(k.to_semigroup().label() for k in grandkids)
    assert labels == ["<2,5>", "<3,4,5>"]


def test_leaf_has_no_children():
    s = from_generators(GeneratorSpec((3, 4)))
    node = ExplorationNode.from_semigroup(s, g_max=10)
    assert s.gens == (3, 4) and all(p < s.c for p in s.gens)  # P = P cap L
    assert node.effective_generators() == ()
    assert node.children() == []


def test_primitivity_via_split_counts():
    s = from_generators(GeneratorSpec((5, 7, 9), 40))
    node = ExplorationNode.from_semigroup(s, g_max=30)
    for x in range(1, s.c + s.m):
        if x in s:
            assert (node.split_counts[x] == 0) == s.is_primitive(x)


def test_apply_undo_restores_state_exactly():
    rng = random.Random(11)
    node = ExplorationNode.root(25)
    for _ in range(200):
        before = node.split_checksum()
        gens = node.effective_generators()
        if not gens or node.genus >= node.g_max:
            node = ExplorationNode.root(25)
            continue
        p = rng.choice(gens)
        token = node.apply(p)
        assert node.genus <= node.g_max
        node.undo(token)
        assert node.split_checksum() == before
        # drift somewhere else in the tree
        node.apply(rng.choice(gens))


def test_incremental_counters_match_materialized_reports():
    # random walks; every visited node's counters agree with a fresh report
    rng = random.Random(12)
    g_max = 26
    samples = 0
    for _ in range(800):
        node = ExplorationNode.root(g_max)
        while node.genus < g_max:
            gens = node.effective_generators()
            if not gens:
                break
            node.apply(rng.choice(gens))
            s = node.to_semigroup()
            rep = wilf_report(s)
            assert (s.c, s.m, s.g) == (node.c, node.m, node.genus)
            pl = sum(1 for x in range(node.m, node.c)
                     if node.member[x] and node.split_counts[x] == 0)
            pq = sum(1 for x in range(node.c, node.c + node.m)
                     if node.split_counts[x] == 0)
            assert pl == rep.p_left and pq == rep.pq_count
            w0 = pl * rep.l_count - rep.q * (node.m - pq) + rep.rho
            assert w0 == rep.w0
            samples += 1
    assert samples >= 10_000


# -- census -------------------------------------------------------------------

def test_census_tiny():
    assert census(0, kernel=PY) == [1]
    assert census(2, kernel=PY) == [1, 1, 2]


@pytest.mark.parametrize("kern", all_kernels(), ids=lambda k: k.BACKEND)
def test_census_matches_gap_set_oracle(kern):
    assert census(15, kernel=kern) == oracles.census_by_gap_sets(15)


def test_census_seeded_and_threaded_deterministic():
    for kern in all_kernels():
        direct = census(18, kernel=kern)
        for threads in (1, 2, 5):
            assert census(18, kernel=kern, threads=threads, seed_genus=10) == direct


def test_backend_parity_census_hunt():
    kernels = all_kernels()
    if len(kernels) < 2:
        pytest.skip("compiled kernel unavailable")
    a = kernels[0].explore_subtree(b"\x01", 0, 1, 0, 16, 12, 1, 0, 0, 1 << 30)
    b = kernels[1].explore_subtree(b"\x01", 0, 1, 0, 16, 12, 1, 0, 0, 1 << 30)
    assert a["census"] == b["census"]
    assert a["hits"] == b["hits"]
    assert a["seeds"] == b["seeds"]


def test_backend_parity_scan_modes():
    kernels = all_kernels()
    if len(kernels) < 2:
        pytest.skip("compiled kernel unavailable")
    for mode in (2, 4):
        a = kernels[0].explore_subtree(b"\x01", 0, 1, 0, 17, -1, mode, 0, 0, 1 << 30)
        b = kernels[1].explore_subtree(b"\x01", 0, 1, 0, 17, -1, mode, 0, 0, 1 << 30)
        assert a["census"] == b["census"]
        assert a["hits"] == b["hits"]
        assert {k: (v[0], v[1], v[2]) for k, v in a["minima"].items()} == \
            {k: (v[0], v[1], v[2]) for k, v in b["minima"].items()}


# -- hunt ---------------------------------------------------------------------

def test_hunt_empty_at_small_genus():
    assert hunt_near_misses(16) == []
    assert hunt_near_misses(16, q=4) == []


def test_hunt_brute_force_cross_check():
    # every semigroup with g <= 14, by materialization: none has W0 < 0
    for s in iter_semigroups(14):
        assert wilf_report(s).w0 >= 0


def test_hunt_filters():
    recs = hunt_near_misses(18, m_range=(2, 50))
    assert recs == []


# -- scans --------------------------------------------------------------------

def test_scan_bound_small_genus_empty_and_cross_checked():
    from math import comb

    assert scan_conjecture_bound(18, kernel=PY) == []
    for s in iter_semigroups(14):
        r = wilf_report(s)
        if r.q == 4:
            assert r.w0 >= -comb(r.p_left, 3)


def test_scan_minima_cross_check_brute_force():
    g_max = 14
    brute = {}
    for s in iter_semigroups(g_max):
        r = wilf_report(s)
        if r.q != 4:
            continue
        key = (r.m, r.p_left)
        val = r.w0 - r.rho
        snap = (s.g, s.c, s.m, s.window)
        cur = brute.get(key)
        if cur is None or val < cur[0]:
            brute[key] = [val, 1, snap]
        elif val == cur[0]:
            cur[1] += 1
            if snap < cur[2]:
                cur[2] = snap
    for kern in all_kernels():
        entries = scan_conjecture_minima(g_max, kernel=kern)
        got = {(e.m, e.n): (e.min_value, e.count) for e in entries}
        want = {k: (v[0], v[1]) for k, v in brute.items()}
        assert got == want
        by_key = {(e.m, e.n): e for e in entries}
        for key, (val, cnt, snap) in brute.items():
            e = by_key[key]
            assert e.genus == snap[0]


def test_scan_minima_m_filter():
    entries = scan_conjecture_minima(14, m_filter=5)
    assert entries and all(e.m == 5 for e in entries)


def test_scan_minima_thread_determinism():
    base = scan_conjecture_minima(16, threads=1, seed_genus=9)
    for threads in (2, 5):
        assert scan_conjecture_minima(16, threads=threads, seed_genus=9) == base


def test_hunt_full_vs_q4_filter_agree_heavy():
    # All known near-misses have q = 4, so the unfiltered hunt and the
    # q=4-filtered hunt must agree through genus 43.  ~20 min of kernel
    # time on one core, so gated behind NSG_HEAVY=1.
    import os

    if not os.environ.get("NSG_HEAVY"):
        pytest.skip("set NSG_HEAVY=1 to run the genus-43 agreement check")
    full = hunt_near_misses(43, threads=8)
    filtered = hunt_near_misses(43, q=4, threads=8)
    assert [(r.label, r.report) for r in full] == \
        [(r.label, r.report) for r in filtered]
    assert [r.label for r in full] == ["<14,22,23>_56"]


def test_condition_flags_on_construction():
    s = from_generators(GeneratorSpec((14, 22, 23), 56))
    assert _condition_flags(s) == (True, True, True)


def test_minima_entries_well_formed():
    for e in scan_conjecture_minima(13):
        assert e.count >= 1
        assert e.all_flagged in (True, False, None)
        if e.count == 1 and all(e.flags):
            assert e.all_flagged is True
        s = from_generators(__import__("nsg").parse_label(e.label))
        assert s.m == e.m and s.g == e.genus


# -- iter ---------------------------------------------------------------------

def test_iter_semigroups_counts_and_uniqueness():
    seen = set()
    counts = [0] * 11
    for s in iter_semigroups(10):
        counts[s.g] += 1
        key = s.window
        assert key not in seen
        seen.add(key)
    assert counts == oracles.census_by_gap_sets(10)


def test_resolve_threads(monkeypatch):
    monkeypatch.delenv("NSG_THREADS", raising=False)
    assert resolve_threads(3) == 3
    monkeypatch.setenv("NSG_THREADS", "7")
    assert resolve_threads() == 7
    assert resolve_threads(2) == 2  # flag wins
    monkeypatch.delenv("NSG_THREADS", raising=False)
    assert resolve_threads() >= 1
