"""Versioned binary checkpoints for long exploration runs.

Layout (all integers little-endian):

    magic   5 bytes  b"NSGT1"
    version u8       1
    mode    u8       kernel mode flags of the run
    pad     u8       0
    g_max   u32
    q_filter i32     0 = no filter
    m_lo    i64
    m_hi    i64
    census  (g_max+1) x u64   counts merged so far
    n_hits  u32, then per hit:  g u32, c u32, m u32, len u32, window bytes
    n_seeds u32, then per pending seed, same encoding

A "seed" is the frontier snapshot of an unexplored subtree root; resuming
feeds the pending seeds back to the workers and keeps the merged counts.
Seeds still in flight when a checkpoint is written stay in the pending
list, so a crash between checkpoints never loses or double-counts them.
"""
from __future__ import annotations

import os
import struct

MAGIC = b"NSGT1"
VERSION = 1

_HEADER = struct.Struct("<5sBBBIiqq")
_SNAP = struct.Struct("<IIII")
_U32 = struct.Struct("<I")


def _pack_snaps(snaps) -> bytes:
    parts = [_U32.pack(len(snaps))]
    for g, c, m, window in snaps:
        parts.append(_SNAP.pack(g, c, m, len(window)))
        parts.append(bytes(window))
    return b"".join(parts)


def _unpack_snaps(buf: memoryview, off: int):
    (count,) = _U32.unpack_from(buf, off)
    off += _U32.size
    snaps = []
    for _ in range(count):
        g, c, m, wlen = _SNAP.unpack_from(buf, off)
        off += _SNAP.size
        snaps.append((g, c, m, bytes(buf[off:off + wlen])))
        off += wlen
    return snaps, off


def dump(path, *, mode: int, g_max: int, q_filter: int, m_lo: int, m_hi: int,
         census, hits, pending) -> None:
    """Atomically write a checkpoint (tmp file + rename)."""
    parts = [
        _HEADER.pack(MAGIC, VERSION, mode, 0, g_max, q_filter, m_lo, m_hi),
        struct.pack(f"<{g_max + 1}Q", *census),
        _pack_snaps(hits),
        _pack_snaps(pending),
    ]
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(b"".join(parts))
    os.replace(tmp, path)


def load(path) -> dict:
    with open(path, "rb") as fh:
        buf = memoryview(fh.read())
    magic, version, mode, _, g_max, q_filter, m_lo, m_hi = _HEADER.unpack_from(buf, 0)
    if magic != MAGIC:
        raise ValueError(f"{path}: not a checkpoint file (bad magic {magic!r})")
    if version != VERSION:
        raise ValueError(f"{path}: unsupported checkpoint version {version}")
    off = _HEADER.size
    census = list(struct.unpack_from(f"<{g_max + 1}Q", buf, off))
    off += 8 * (g_max + 1)
    hits, off = _unpack_snaps(buf, off)
    pending, off = _unpack_snaps(buf, off)
    return {
        "mode": mode, "g_max": g_max, "q_filter": q_filter,
        "m_lo": m_lo, "m_hi": m_hi,
        "census": census, "hits": hits, "pending": pending,
    }
