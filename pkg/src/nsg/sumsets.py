"""h-fold sumsets and B_h certification over Z and Z/mZ.

For a finite nonempty A, the h-fold sumset hA = A + ... + A (h times)
satisfies |hA| <= C(|A|+h-1, h), the number of degree-h monomials in |A|
variables.  A is a B_h set when equality holds, i.e. when all h-element
multiset sums are distinct; B_2 sets are Sidon sets.  Two-element sets are
B_h for every h, and {1, h, h^2, ...} is a standard B_h family.

All quantities are guarded to stay within 64-bit signed range.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import SearchLimitExceeded

__all__ = [
    "IntSet",
    "h_fold_sumset",
    "is_bh",
    "induces_bh_mod",
    "pairwise_distinct_union",
    "greedy_bh",
    "geometric_bh_family",
]

_INT64_MAX = 2**63 - 1


def _check64(x: int) -> int:
    if not -_INT64_MAX - 1 <= x <= _INT64_MAX:
        raise OverflowError(f"value {x} exceeds 64-bit range")
    return x


@dataclass(frozen=True)
class IntSet:
    """Sorted distinct integers, optionally viewed in Z/mZ.

    With a modulus, elements are reduced on construction and must remain
    distinct after reduction.
    """

    elements: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self):
        elems = tuple(int(x) for x in self.elements)
        if not elems:
            raise ValueError("IntSet must be nonempty")
        if self.modulus is not None:
            m = int(self.modulus)
            if m < 1:
                raise ValueError(f"modulus must be positive, got {m}")
            object.__setattr__(self, "modulus", m)
            reduced = tuple(sorted({x % m for x in elems}))
            if len(reduced) != len(set(elems)):
                raise ValueError(f"elements {elems} collide after reduction mod {m}")
            elems = reduced
        else:
            elems = tuple(sorted(set(elems)))
            if len(elems) != len(self.elements):
                raise ValueError(f"duplicate elements in {self.elements}")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def translate(self, t: int) -> "IntSet":
        return IntSet(tuple(_check64(x + t) for x in self.elements), self.modulus)


def h_fold_sumset(A: IntSet, h: int) -> IntSet:
    """hA = {a_1 + ... + a_h : a_i in A}, reduced mod m when A has a modulus."""
    if h < 1:
        raise ValueError("h must be >= 1")
    sums = set(A.elements)
    for _ in range(h - 1):
        sums = {_check64(s + a) for s in sums for a in A.elements}
    if A.modulus is not None:
        sums = {s % A.modulus for s in sums}
    return IntSet(tuple(sorted(sums)), A.modulus)


def is_bh(A: IntSet, h: int) -> bool:
    """True iff |hA| attains the bound C(|A|+h-1, h) in the ambient group."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if A.modulus is not None and A.modulus < len(A):
        raise ValueError(f"modulus {A.modulus} smaller than |A| = {len(A)}")
    return len(h_fold_sumset(A, h)) == comb(len(A) + h - 1, h)


def induces_bh_mod(A: IntSet, m: int, h: int) -> bool:
    """True iff the residues of A mod m are |A| distinct values forming a
    B_h set in Z/mZ.  When true, A itself is a B_h set in Z."""
    if A.modulus is not None:
        raise ValueError("induces_bh_mod expects an IntSet over Z")
    if m < 1:
        raise ValueError("m must be >= 1")
    if any(a < 0 for a in A.elements):
        raise ValueError("elements must be nonnegative")
    residues = {a % m for a in A.elements}
    if len(residues) != len(A):
        return False
    return is_bh(IntSet(tuple(residues), m), h)


def pairwise_distinct_union(A: IntSet, h: int, m: int) -> bool:
    """True iff the elements of A u 2A u ... u hA are pairwise distinct mod m.

    "Pairwise distinct" is taken over formal sums: any two multisets drawn
    from A of sizes <= h (not both the same multiset) must have incongruent
    sums.  This detects collisions inside a single sumset (so it implies
    that A induces a B_h set in Z/mZ) and collisions across sumsets of
    different lengths (which B_h-ness mod m alone does not rule out).
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    if A.modulus is not None:
        raise ValueError("pairwise_distinct_union expects an IntSet over Z")
    seen = set()
    count = 0
    for k in range(1, h + 1):
        for combo in combinations_with_replacement(A.elements, k):
            seen.add(_check64(sum(combo)) % m)
            count += 1
    return len(seen) == count


def greedy_bh(h: int, size: int, cap: int = 10**6) -> IntSet:
    """Smallest-candidate greedy B_h set of the requested size, starting at 0.

    Deterministic; each new element is the least nonnegative integer that
    keeps the set B_h.  Raises SearchLimitExceeded past `cap` candidates
    for one element (cannot happen for sane h, size).
    """
    if h < 1 or size < 1:
        raise ValueError("h and size must be >= 1")
    elems: list[int] = [0]
    while len(elems) < size:
        start = elems[-1] + 1
        for cand in range(start, start + cap):
            if is_bh(IntSet(tuple(elems) + (cand,)), h):
                elems.append(cand)
                break
        else:
            raise SearchLimitExceeded(
                f"no B_{h} extension of {elems} within {cap} candidates"
            )
    return IntSet(tuple(elems))


def geometric_bh_family(h: int, count: int, zero_based: bool = False) -> IntSet:
    """{h^i : 0 <= i < count}, or its translate {h^i - 1} when zero_based.

    Both are B_h: distinct h-multiset sums of powers of h differ as base-h
    digit patterns, and the B_h property is stable under translation.
    """
    if h < 1 or count < 1:
        raise ValueError("h and count must be >= 1")
    shift = 1 if zero_based else 0
    return IntSet(tuple(_check64(h**i) - shift for i in range(count)))
