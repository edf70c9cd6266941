"""Numerical semigroups as finite membership windows.

A numerical semigroup S is an additively closed subset of the naturals
containing 0 with finite complement.  Everything about S is decidable from
its membership on the integer window [0, c+m), where c is the conductor
(every integer >= c lies in S) and m the multiplicity (least positive
element): membership beyond the window is implied.

Construction accepts a generator list, optionally truncated: <a1,...,an>
is the monoid of all sums of the ai, and <a1,...,an>_t additionally
contains every integer >= t.  The untruncated form requires gcd 1; the
truncated form is always a numerical semigroup and has conductor c <= t,
with c = t exactly when t-1 is not in the plain monoid.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from heapq import heappop, heappush
from math import gcd

import numpy as np

from .errors import InvalidSpecError, NonCofiniteError

__all__ = [
    "GeneratorSpec",
    "NumericalSemigroup",
    "AperyTable",
    "from_generators",
    "parse_label",
    "parse_semigroup_input",
]


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator list plus optional truncation threshold.

    generators must be nonempty, positive and strictly increasing; without
    a truncation their gcd must be 1, otherwise the complement of the
    generated monoid would be infinite.
    """

    generators: tuple[int, ...]
    truncation: int | None = None

    def __post_init__(self):
        gens = tuple(int(a) for a in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise InvalidSpecError("generator list is empty")
        if gens[0] < 1:
            raise InvalidSpecError(f"generators must be positive, got {gens[0]}")
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise InvalidSpecError(f"generators must be strictly increasing: {gens}")
        if self.truncation is None:
            g = 0
            for a in gens:
                g = gcd(g, a)
            if g != 1:
                raise NonCofiniteError(
                    f"gcd({', '.join(map(str, gens))}) = {g} != 1 and no truncation given"
                )
        else:
            t = int(self.truncation)
            object.__setattr__(self, "truncation", t)
            if t < 1:
                raise InvalidSpecError(f"truncation must be positive, got {t}")

    def to_json(self) -> str:
        return json.dumps({"generators": list(self.generators), "truncation": self.truncation})


_LABEL_RE = re.compile(r"^<\s*(\d+(?:\s*[,;]\s*\d+)*)\s*>(?:_(\d+))?$")


def parse_label(text: str) -> GeneratorSpec:
    """Parse a semigroup label such as "<14,22,23>_56" (or with ';')."""
    m = _LABEL_RE.match(text.strip())
    if m is None:
        raise InvalidSpecError(f"unparsable semigroup label: {text!r}")
    gens = tuple(int(p) for p in re.split(r"[,;]", m.group(1)))
    trunc = int(m.group(2)) if m.group(2) is not None else None
    return GeneratorSpec(tuple(sorted(set(gens))), trunc)


def parse_semigroup_input(text: str) -> GeneratorSpec:
    """Accept either a label or a JSON object {"generators": [...], "truncation": t|null}."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidSpecError(f"bad JSON semigroup spec: {e}") from None
        if not isinstance(obj, dict) or "generators" not in obj:
            raise InvalidSpecError("JSON semigroup spec needs a 'generators' key")
        gens = tuple(sorted(set(int(a) for a in obj["generators"])))
        trunc = obj.get("truncation")
        return GeneratorSpec(gens, None if trunc is None else int(trunc))
    return parse_label(text)


@dataclass(frozen=True)
class AperyTable:
    """The m minimal elements of S, one per residue class mod m.

    elements[i] is the least member congruent to i mod m; slice_index[i]
    is the index j of the length-m slice I_j containing it; decomposable[i]
    says whether it is a sum of two nonzero members.
    """

    modulus: int
    elements: tuple[int, ...]
    slice_index: tuple[int, ...]
    decomposable: tuple[bool, ...]

    def max(self) -> int:
        return max(self.elements)


class NumericalSemigroup:
    """Immutable numerical semigroup backed by a dense membership window.

    Attributes:
        window: bytes of length c+m, window[x] == 1 iff x in S (0 <= x < c+m).
        m: multiplicity, least positive element.
        c: conductor; f = c-1 is the Frobenius number (f = -1 for S = N).
        g: genus, the number of gaps.
        gens: the minimal generating set P, sorted.
        pair_counts: for x in [0, c+m), the number of ordered pairs (u, v)
            of nonzero members with u+v = x; x in S* is primitive iff 0.
        label_spec: presentation recorded at construction for labelling,
            or None for the plain minimal-generator label.

    Instances never mutate after construction and can be shared freely.
    """

    __slots__ = ("window", "m", "c", "f", "g", "gens", "pair_counts", "label_spec")

    def __init__(self, window: bytes, m: int, c: int, g: int,
                 gens: tuple[int, ...], pair_counts: np.ndarray,
                 label_spec: GeneratorSpec | None = None):
        self.window = window
        self.m = m
        self.c = c
        self.f = c - 1
        self.g = g
        self.gens = gens
        self.pair_counts = pair_counts
        self.label_spec = label_spec

    # -- construction -----------------------------------------------------

    @classmethod
    def from_window(cls, window: bytes | bytearray, c: int, m: int,
                    label_spec: GeneratorSpec | None = None) -> "NumericalSemigroup":
        """Build from a membership window of length exactly c+m."""
        window = bytes(window)
        if len(window) != c + m:
            raise ValueError(f"window length {len(window)} != c+m = {c + m}")
        g = sum(1 for x in range(c) if not window[x])
        pair_counts = _pair_counts(window)
        gens = _minimal_generators(window, m, c, pair_counts)
        return cls(window, m, c, g, gens, pair_counts, label_spec)

    # -- queries -----------------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.c:
            return True
        return bool(self.window[x])

    contains = __contains__

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.window == other.window and self.label_spec == other.label_spec

    def __hash__(self):
        return hash(self.window)

    def same_set(self, other: "NumericalSemigroup") -> bool:
        """Equality as subsets of N, ignoring how either side was presented."""
        return self.window == other.window

    def __repr__(self):
        return f"NumericalSemigroup({self.label()})"

    def is_primitive(self, x: int) -> bool:
        """x is a nonzero member not expressible as a sum of two nonzero members."""
        if self.c == 0:
            return x == 1
        return bool(0 < x < self.c + self.m and self.window[x]
                    and self.pair_counts[x] == 0)

    def primitives(self) -> tuple[int, ...]:
        """The minimal generating set P."""
        return self.gens

    def decomposables_window(self) -> tuple[int, ...]:
        """All sums of two nonzero members that fall inside [0, c+m)."""
        pc = self.pair_counts
        return tuple(x for x in range(self.c + self.m) if self.window[x] and x and pc[x] > 0)

    def q_rho(self) -> tuple[int, int]:
        """q = ceil(c/m) and rho = q*m - c (0 <= rho <= m-1)."""
        q = -(-self.c // self.m)
        return q, q * self.m - self.c

    def slice_bounds(self, j: int) -> tuple[int, int]:
        """The j-th length-m window I_j = [j*m - rho, (j+1)*m - rho - 1]."""
        if j < 0:
            raise ValueError("slice index must be >= 0")
        _, rho = self.q_rho()
        lo = j * self.m - rho
        return lo, lo + self.m - 1

    def slice(self, j: int) -> tuple[int, ...]:
        """Members in the j-th slice; equals the whole interval iff j >= q."""
        lo, hi = self.slice_bounds(j)
        q, _ = self.q_rho()
        if j >= q:
            return tuple(range(lo, hi + 1))
        return tuple(x for x in range(max(lo, 0), hi + 1) if self.window[x])

    def left_part(self) -> tuple[int, ...]:
        """L = S cap [0, c-1], the members strictly left of the conductor."""
        return tuple(x for x in range(self.c) if self.window[x])

    def apery_set(self) -> AperyTable:
        """Least member of each residue class mod m, with slice and
        decomposability annotations."""
        m = self.m
        elements = [-1] * m
        found = 0
        for x in range(self.c + m):
            if self.window[x] and elements[x % m] < 0:
                elements[x % m] = x
                found += 1
                if found == m:
                    break
        _, rho = self.q_rho()
        slice_index = tuple((x + rho) // m for x in elements)
        pc = self.pair_counts
        decomposable = tuple(bool(x > 0 and pc[x] > 0) for x in elements)
        return AperyTable(m, tuple(elements), slice_index, decomposable)

    def label(self, sep: str = ",") -> str:
        """Canonical text form: "<g1,...,gk>" from the minimal generators,
        or "<g1,...,gk>_t" when built by truncation with t equal to the
        conductor (the recorded presentation is reprinted, minimized)."""
        if self.label_spec is not None:
            body = sep.join(map(str, self.label_spec.generators))
            return f"<{body}>_{self.label_spec.truncation}"
        return f"<{sep.join(map(str, self.gens))}>"

    def left_primitive_label(self, sep: str = ",") -> str:
        """Compact truncated label <P cap L>_c, valid because every member
        below the conductor is a sum of primitives below the conductor.
        Falls back to the plain label when P = P cap L (or for S = N)."""
        pl = tuple(p for p in self.gens if p < self.c)
        if not pl or pl == self.gens:
            return self.label(sep)
        return f"<{sep.join(map(str, pl))}>_{self.c}"

    def to_spec(self) -> GeneratorSpec:
        """A GeneratorSpec reproducing this semigroup via from_generators."""
        if self.label_spec is not None:
            return self.label_spec
        return GeneratorSpec(self.gens, None)


def _pair_counts(window: bytes) -> np.ndarray:
    """Ordered two-term decomposition counts over the window.

    pair_counts[x] = #{(u, v) : u, v in S*, u + v = x}, for x < len(window).
    Both summands of any x < c+m are themselves < c+m, so the window is
    self-contained for this computation.
    """
    ind = np.frombuffer(window, dtype=np.uint8).astype(np.int64)
    if len(ind):
        ind = ind.copy()
        ind[0] = 0
    return np.convolve(ind, ind)[: len(ind)]


def _minimal_generators(window: bytes, m: int, c: int, pair_counts: np.ndarray) -> tuple[int, ...]:
    if c == 0:
        return (1,)
    return tuple(x for x in range(m, c + m) if window[x] and pair_counts[x] == 0)


def _minimize_monoid_generators(gens: tuple[int, ...]) -> tuple[int, ...]:
    """Drop generators expressible as sums of smaller ones (monoid-minimal set)."""
    top = gens[-1]
    reach = bytearray(top + 1)
    reach[0] = 1
    kept = []
    for a in gens:
        if reach[a]:
            continue
        kept.append(a)
        for x in range(a, top + 1):
            if reach[x - a]:
                reach[x] = 1
    return tuple(kept)


def from_generators(spec: GeneratorSpec) -> NumericalSemigroup:
    """Build the semigroup of a GeneratorSpec.

    Untruncated: the monoid generated by the list (gcd must be 1).  The
    Apery set with respect to the least generator is found by shortest-path
    relaxation over residue classes (edge weights = generators), which
    pins the conductor before any window is allocated.

    Truncated: ascending dynamic programming closes the monoid on
    [0, t + m), then everything from t upward is added.
    """
    gens = spec.generators
    if spec.truncation is None:
        return _from_plain(gens)
    return _from_truncated(gens, spec.truncation)


def _from_plain(gens: tuple[int, ...]) -> NumericalSemigroup:
    m = gens[0]
    if m == 1:
        return NumericalSemigroup(b"\x01", 1, 0, 0, (1,), np.zeros(1, dtype=np.int64), None)
    # Least member of each class mod m: Dijkstra on the residue graph.
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for a in gens[1:]:
            nd = d + a
            nr = nd % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heappush(heap, (nd, nr))
    apery = dist
    c = max(apery) - m + 1
    g = sum(x // m for x in apery)
    window = bytes(1 if apery[x % m] <= x else 0 for x in range(c + m))
    pair_counts = _pair_counts(window)
    mingens = _minimal_generators(window, m, c, pair_counts)
    return NumericalSemigroup(window, m, c, g, mingens, pair_counts, None)


def _from_truncated(gens: tuple[int, ...], t: int) -> NumericalSemigroup:
    m = min(gens[0], t)
    horizon = t + m
    closed = bytearray(horizon)
    closed[0] = 1
    for x in range(gens[0], horizon):
        for a in gens:
            if a > x:
                break
            if closed[x - a]:
                closed[x] = 1
                break
    for x in range(t, horizon):
        closed[x] = 1
    c = 0
    for x in range(t - 1, 0, -1):
        if not closed[x]:
            c = x + 1
            break
    if c == 0:
        return _from_plain((1,))
    g = sum(1 for x in range(1, c) if not closed[x])
    window = bytes(closed[: c + m])
    pair_counts = _pair_counts(window)
    mingens = _minimal_generators(window, m, c, pair_counts)
    label_spec = None
    if c == t:
        label_spec = GeneratorSpec(_minimize_monoid_generators(gens), t)
    return NumericalSemigroup(window, m, c, g, mingens, pair_counts, label_spec)
