import pytest

from nsg import census, checkpoint, hunt_near_misses
from nsg import _kernel


def test_roundtrip(tmp_path):
    path = tmp_path / "run.nsgt"
    hits = [(5, 10, 3, b"\x01\x00\x01" * 4 + b"\x01")]
    pending = [(8, 16, 5, bytes(range(2)) + b"\x01" * 19)]
    checkpoint.dump(path, mode=1, g_max=12, q_filter=4, m_lo=2, m_hi=99,
                    census=list(range(13)), hits=hits, pending=pending)
    state = checkpoint.load(path)
    assert state["mode"] == 1 and state["g_max"] == 12
    assert state["q_filter"] == 4 and (state["m_lo"], state["m_hi"]) == (2, 99)
    assert state["census"] == list(range(13))
    assert state["hits"] == hits
    assert state["pending"] == pending


def test_magic_header(tmp_path):
    path = tmp_path / "run.nsgt"
    checkpoint.dump(path, mode=0, g_max=1, q_filter=0, m_lo=0, m_hi=10,
                    census=[1, 1], hits=[], pending=[])
    raw = path.read_bytes()
    assert raw[:5] == b"NSGT1"
    bad = tmp_path / "bad.nsgt"
    bad.write_bytes(b"XXXXX" + raw[5:])
    with pytest.raises(ValueError):
        checkpoint.load(bad)


def test_checkpoint_written_and_resumable(tmp_path):
    path = tmp_path / "census.nsgt"
    direct = census(16)
    got = census(16, seed_genus=8, checkpoint_path=str(path),
                 checkpoint_interval=0.0)
    assert got == direct
    state = checkpoint.load(path)
    assert state["pending"] == []  # final dump after the queue drained
    assert state["census"] == direct


class _FlakyKernel:
    """Delegate that fails after a few subtree calls, to force a resume."""

    def __init__(self, inner, allowed):
        self.inner = inner
        self.allowed = allowed
        self.BACKEND = inner.BACKEND

    def explore_subtree(self, *args, **kwargs):
        if self.allowed <= 0:
            raise RuntimeError("simulated crash")
        self.allowed -= 1
        return self.inner.explore_subtree(*args, **kwargs)


def test_resume_after_crash_matches_direct_run(tmp_path):
    path = tmp_path / "crash.nsgt"
    kern = _kernel.active
    flaky = _FlakyKernel(kern, allowed=40)  # phase 1 + a few dozen seeds
    with pytest.raises(RuntimeError):
        census(18, seed_genus=10, kernel=flaky, threads=1,
               checkpoint_path=str(path), checkpoint_interval=0.0)
    state = checkpoint.load(path)
    assert state["pending"], "crash should leave unexplored seeds"
    resumed = census(18, resume_path=str(path))
    assert resumed == census(18)


def test_threaded_crash_propagates_and_checkpoint_stays_consistent(tmp_path):
    path = tmp_path / "crash-threaded.nsgt"
    flaky = _FlakyKernel(_kernel.active, allowed=25)
    with pytest.raises(RuntimeError):
        census(18, seed_genus=10, kernel=flaky, threads=4,
               checkpoint_path=str(path), checkpoint_interval=0.0)
    resumed = census(18, resume_path=str(path))
    assert resumed == census(18)


def test_resume_parameter_mismatch(tmp_path):
    path = tmp_path / "c.nsgt"
    census(16, seed_genus=8, checkpoint_path=str(path), checkpoint_interval=1e9)
    with pytest.raises(ValueError):
        census(17, resume_path=str(path))
    with pytest.raises(ValueError):
        hunt_near_misses(16, resume_path=str(path))
