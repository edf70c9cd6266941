"""Incremental state for one node of the tree of numerical semigroups.

The tree is rooted at N; the children of S are the sets S \\ {p} for each
primitive p exceeding the Frobenius number of S, so every numerical
semigroup of genus g sits at depth g.  A node keeps, over a fixed window
of size 3*g_max + O(1), the membership indicator and the number of
two-term decompositions of every integer: x in S* is primitive iff
split_counts[x] == 0.  Removing a primitive p only deletes the pairs
{p, s}, so a child move touches O(window) counters and is exactly
reversible.

The window size suffices because genus-g semigroups satisfy c <= 2g and
m <= g+1, so all slice and Apery data lives below 3g.

This class is the inspectable, pure-Python form of the exploration state;
the bulk enumeration kernels keep the same state in flat arrays.
"""
from __future__ import annotations

import numpy as np

from .semigroup import NumericalSemigroup

__all__ = ["ExplorationNode", "window_size", "unordered_pair_counts"]


def window_size(g_max: int) -> int:
    return 3 * g_max + 4


def unordered_pair_counts(member, size: int) -> list[int]:
    """split_counts[x] = #{{u, v} : u, v in S*, u + v = x} for x < size."""
    ind = np.frombuffer(bytes(member[:size]), dtype=np.uint8).astype(np.int64)
    ind[0] = 0
    ordered = np.convolve(ind, ind)[:size]
    diag = np.zeros(size, dtype=np.int64)
    diag[::2] = ind[: (size + 1) // 2]
    return ((ordered + diag) // 2).tolist()


class ExplorationNode:
    """Mutable tree-walk state; use apply/undo for in-place moves or
    children() for independent copies."""

    __slots__ = ("g_max", "size", "member", "split_counts", "c", "m", "genus")

    def __init__(self, g_max: int, member: bytearray, split_counts: list[int],
                 c: int, m: int, genus: int):
        self.g_max = g_max
        self.size = len(member)
        self.member = member
        self.split_counts = split_counts
        self.c = c
        self.m = m
        self.genus = genus

    @classmethod
    def root(cls, g_max: int) -> "ExplorationNode":
        """The root node, encoding N (genus 0)."""
        size = window_size(g_max)
        member = bytearray([1]) * size
        return cls(g_max, member, unordered_pair_counts(member, size), 0, 1, 0)

    @classmethod
    def from_semigroup(cls, S: NumericalSemigroup, g_max: int) -> "ExplorationNode":
        if S.g > g_max:
            raise ValueError(f"genus {S.g} exceeds g_max {g_max}")
        size = window_size(g_max)
        member = bytearray(size)
        member[: S.c + S.m] = S.window
        for x in range(S.c + S.m, size):
            member[x] = 1
        return cls(g_max, member, unordered_pair_counts(member, size), S.c, S.m, S.g)

    @property
    def frontier(self) -> tuple[int, int]:
        return self.c, self.m

    def effective_generators(self) -> tuple[int, ...]:
        """Primitives exceeding the Frobenius number: one child per element."""
        lo = max(self.c, self.m)
        hi = max(self.c + self.m - 1, self.m)
        sc = self.split_counts
        return tuple(p for p in range(lo, hi + 1) if self.member[p] and sc[p] == 0)

    def apply(self, p: int):
        """Move to the child S \\ {p}; returns the token undo() needs."""
        member, sc = self.member, self.split_counts
        if not (member[p] and sc[p] == 0 and p >= self.c):
            raise ValueError(f"{p} is not an effective generator here")
        token = (p, self.c, self.m)
        member[p] = 0
        m2 = self.m + 1 if p == self.m else self.m
        for s in range(m2, self.size - p):
            if member[s]:
                sc[p + s] -= 1
        if 2 * p < self.size:
            sc[2 * p] -= 1
        self.c = p + 1
        self.m = m2
        self.genus += 1
        return token

    def undo(self, token) -> None:
        """Exactly reverse a prior apply(p)."""
        p, c_prev, m_prev = token
        member, sc = self.member, self.split_counts
        for s in range(self.m, self.size - p):
            if member[s]:
                sc[p + s] += 1
        if 2 * p < self.size:
            sc[2 * p] += 1
        member[p] = 1
        self.c = c_prev
        self.m = m_prev
        self.genus -= 1

    def child(self, p: int) -> "ExplorationNode":
        token = self.apply(p)
        out = ExplorationNode(self.g_max, bytearray(self.member),
                              list(self.split_counts), self.c, self.m, self.genus)
        self.undo(token)
        return out

    def children(self) -> list["ExplorationNode"]:
        if self.genus >= self.g_max:
            return []
        return [self.child(p) for p in self.effective_generators()]

    def to_semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup.from_window(bytes(self.member[: self.c + self.m]),
                                              self.c, self.m)

    def split_checksum(self) -> int:
        return hash((bytes(self.member), tuple(self.split_counts), self.c, self.m))
