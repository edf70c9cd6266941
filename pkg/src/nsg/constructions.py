"""Constructions of near-miss numerical semigroups with c = 4m.

The basic recipe: pick m and a set A of n-1 further generators inside
[(3m+1)/2, (5m-1)/3] whose union A u 2A u 3A has pairwise distinct sums
mod m, and truncate at 4m:

    S = <{m} u A>_{4m}.

Then c = 4m (q = 4, rho = 0), the Apery slices are X1 = A, X2 = empty,
X3 = 2A, X4 cap D = 3A, and

    |L| = C(n,2) + 3n + 1,   |D4| = C(n+2,3),   W0(S) = -C(n,3),

while W(S) >= 9, because the middle stretch J = 4m + [floor((m+1)/3),
ceil((m-1)/2)] of the final slice avoids every decomposable and therefore
consists of primitives, with |J| >= m/6.

All rational hypothesis checks are done in cross-multiplied integer
arithmetic; boundary cases must be exact.  Error messages name the first
failed hypothesis clause, in the order the clauses are stated above.

Note on the distinctness hypothesis: it is checked as full pairwise
distinctness of all sums of length <= 3 mod m (pairwise_distinct_union).
This implies that A induces a B3 set in Z/mZ but is strictly stronger:
e.g. m = 100, A = {151, 153} induces a B3 set mod 100 yet has
153 = 3*151 mod 100, which breaks X4 cap D = 3A.  The slice structure
needs the stronger form, so that is what is enforced.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import HypothesisViolation
from .semigroup import GeneratorSpec, NumericalSemigroup, from_generators
from .sumsets import IntSet, h_fold_sumset, is_bh, pairwise_distinct_union
from .wilf import WilfReport, wilf_report

__all__ = [
    "PredictedProfile",
    "ConstructionResult",
    "CheckItem",
    "ConstructionVerification",
    "construct_pair",
    "construct_consecutive",
    "construct_bh",
    "construct_translated",
    "explicit_family",
    "verify_construction",
]


@dataclass(frozen=True)
class PredictedProfile:
    """Closed-form predictions for a c = 4m construction with |P cap L| = n."""

    n: int
    c_expected: int
    q_expected: int
    rho_expected: int
    l_expected: int
    d4_expected: int
    w0_expected: int
    w_min: int
    j_lo: int
    j_hi: int

    @classmethod
    def for_params(cls, m: int, n: int) -> "PredictedProfile":
        return cls(
            n=n,
            c_expected=4 * m,
            q_expected=4,
            rho_expected=0,
            l_expected=comb(n, 2) + 3 * n + 1,
            d4_expected=comb(n + 2, 3),
            w0_expected=-comb(n, 3),
            w_min=9,
            j_lo=4 * m + (m + 1) // 3,
            j_hi=4 * m + -((1 - m) // 2),
        )

    @property
    def j_interval(self) -> tuple[int, int]:
        return self.j_lo, self.j_hi


@dataclass(frozen=True)
class ConstructionResult:
    recipe: str
    params: dict
    semigroup: NumericalSemigroup
    predicted: PredictedProfile
    computed: WilfReport

    @property
    def a_set(self) -> tuple[int, ...]:
        return tuple(self.params["A"])

    def to_json(self) -> str:
        return json.dumps(
            {
                "recipe": self.recipe,
                "params": {k: v for k, v in self.params.items()},
                "label": self.computed.label,
                "predicted": {
                    "n": self.predicted.n,
                    "c": self.predicted.c_expected,
                    "q": self.predicted.q_expected,
                    "rho": self.predicted.rho_expected,
                    "L": self.predicted.l_expected,
                    "D4": self.predicted.d4_expected,
                    "W0": self.predicted.w0_expected,
                    "W_min": self.predicted.w_min,
                    "J": list(self.predicted.j_interval),
                },
                "computed": json.loads(self.computed.to_json()),
            }
        )


@dataclass(frozen=True)
class CheckItem:
    name: str
    expected: str
    actual: str
    ok: bool


@dataclass(frozen=True)
class ConstructionVerification:
    checks: tuple[CheckItem, ...]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.checks)

    def failures(self) -> tuple[CheckItem, ...]:
        return tuple(item for item in self.checks if not item.ok)

    def to_json(self) -> str:
        return json.dumps(
            {
                "ok": self.ok,
                "checks": [
                    {"name": i.name, "expected": i.expected, "actual": i.actual, "ok": i.ok}
                    for i in self.checks
                ],
            }
        )


def _require(cond: bool, clause: str, detail: str) -> None:
    if not cond:
        raise HypothesisViolation(clause, detail)


def _first_distinctness_collision(A: tuple[int, ...], m: int) -> str:
    """Describe one colliding pair of short sums mod m (for error messages)."""
    from itertools import combinations_with_replacement

    seen: dict[int, tuple[int, ...]] = {}
    for k in (1, 2, 3):
        for combo in combinations_with_replacement(A, k):
            r = sum(combo) % m
            if r in seen:
                return f"{'+'.join(map(str, seen[r]))} = {'+'.join(map(str, combo))} mod {m}"
            seen[r] = combo
    return "no collision"


def _build(recipe: str, m: int, A: tuple[int, ...], params: dict) -> ConstructionResult:
    n = len(A) + 1
    a, b = A[0], A[-1]
    _require(2 * a >= 3 * m + 1, "(3m+1)/2 <= a",
             f"need 2a >= 3m+1, got a = {a}, m = {m}")
    _require(a < b, "a < b", f"got a = {a}, b = {b}")
    _require(3 * b <= 5 * m - 1, "b <= (5m-1)/3",
             f"need 3b <= 5m-1, got b = {b}, m = {m}")
    if not pairwise_distinct_union(IntSet(A), 3, m):
        raise HypothesisViolation(
            "A u 2A u 3A pairwise distinct mod m",
            _first_distinctness_collision(A, m),
        )
    S = from_generators(GeneratorSpec((m,) + A, 4 * m))
    predicted = PredictedProfile.for_params(m, n)
    computed = wilf_report(S)
    result = ConstructionResult(recipe, params, S, predicted, computed)
    verification = verify_construction(result)
    if not verification.ok:
        raise AssertionError(
            "construction invariant broken (implementation bug): "
            + "; ".join(f"{i.name}: expected {i.expected}, got {i.actual}"
                        for i in verification.failures())
        )
    return result


def construct_pair(m: int, a: int, b: int) -> ConstructionResult:
    """S = <m, a, b>_{4m} with (3m+1)/2 <= a < b <= (5m-1)/3 and the
    distinctness hypothesis; yields W0(S) = -1."""
    for name, v in (("m", m), ("a", a), ("b", b)):
        _require(v >= 1, f"{name} positive", f"got {name} = {v}")
    return _build("pair", m, (a, b), {"m": m, "a": a, "b": b, "A": [a, b]})


def construct_consecutive(m: int, k: int) -> ConstructionResult:
    """S = <m, a, a+1>_{4m} with a = (3m+k)/2, for k >= 2, m >= 3k+8 and
    m = k mod 2; yields W0(S) = -1."""
    _require(k >= 2, "k >= 2", f"got k = {k}")
    _require(m >= 3 * k + 8, "m >= 3k+8", f"got m = {m}, k = {k}")
    _require((m - k) % 2 == 0, "m = k (mod 2)", f"got m = {m}, k = {k}")
    a = (3 * m + k) // 2
    result = _build("consecutive", m, (a, a + 1),
                    {"m": m, "k": k, "a": a, "A": [a, a + 1]})
    return result


def construct_bh(m: int, A: IntSet) -> ConstructionResult:
    """S = <{m} u A>_{4m} for A of cardinality n-1 >= 2 inside
    [(3m+1)/2, (5m-1)/3] with the distinctness hypothesis mod m; yields
    W0(S) = -C(n,3)."""
    _require(m >= 1, "m positive", f"got m = {m}")
    if A.modulus is not None:
        raise HypothesisViolation("A is a set of integers", "A must not carry a modulus")
    elems = A.elements
    _require(len(elems) + 1 >= 3, "n >= 3", f"|A| = {len(elems)} gives n = {len(elems) + 1}")
    return _build("bh_general", m, elems, {"m": m, "A": list(elems)})


def construct_translated(A_prime: IntSet, k: int, m: int) -> ConstructionResult:
    """Translate a B3 set A' containing 0 by a = (3m+k)/2 and build
    <{m} u (a + A')>_{4m}; requires r = max A', k >= r+1, m >= 3k+6r+2
    and m = k mod 2."""
    elems = A_prime.elements
    _require(len(elems) + 1 >= 3, "n >= 3", f"|A'| = {len(elems)} gives n = {len(elems) + 1}")
    if not is_bh(A_prime, 3):
        raise HypothesisViolation("A' is a B3 set in Z", f"A' = {elems}")
    _require(0 in elems, "0 in A'", f"A' = {elems}")
    r = elems[-1]
    _require(k >= r + 1, "k >= r+1", f"got k = {k}, r = {r}")
    _require(m >= 3 * k + 6 * r + 2, "m >= 3k+6r+2", f"got m = {m}, k = {k}, r = {r}")
    _require((m - k) % 2 == 0, "m = k (mod 2)", f"got m = {m}, k = {k}")
    a = (3 * m + k) // 2
    A = tuple(a + x for x in elems)
    result = _build("translated", m, A,
                    {"m": m, "k": k, "r": r, "a": a,
                     "A_prime": list(elems), "A": list(A)})
    return result


def explicit_family(n: int, k: int) -> ConstructionResult:
    """The explicit infinite family: A' = {3^0 - 1, 3 - 1, ..., 3^(n-2) - 1},
    r = 3^(n-2) - 1, m = 3k + 6r + 2 for any k >= r+1; W0 = -C(n,3)."""
    from .sumsets import geometric_bh_family

    _require(n >= 3, "n >= 3", f"got n = {n}")
    A_prime = geometric_bh_family(3, n - 1, zero_based=True)
    r = A_prime.elements[-1]
    _require(k >= r + 1, "k >= r+1", f"got k = {k}, r = {r}")
    m = 3 * k + 6 * r + 2
    result = construct_translated(A_prime, k, m)
    return ConstructionResult("explicit_power", {**result.params, "n": n, "k": k},
                              result.semigroup, result.predicted, result.computed)


def verify_construction(result: ConstructionResult) -> ConstructionVerification:
    """Re-derive every predicted quantity from the built semigroup.

    All checks are proved consequences of the hypotheses, so any failure
    indicates an implementation bug, reported item by item.
    """
    S = result.semigroup
    rep = result.computed
    pred = result.predicted
    n = pred.n
    A = IntSet(result.a_set)
    checks: list[CheckItem] = []

    def add(name, expected, actual):
        checks.append(CheckItem(name, str(expected), str(actual), expected == actual))

    add("c = 4m", pred.c_expected, S.c)
    add("q = 4", pred.q_expected, rep.q)
    add("rho = 0", pred.rho_expected, rep.rho)

    ap = S.apery_set()
    x_sets: dict[int, set[int]] = {}
    for x, j in zip(ap.elements, ap.slice_index):
        x_sets.setdefault(j, set()).add(x)
    x4_dec = {x for x, j, dec in zip(ap.elements, ap.slice_index, ap.decomposable)
              if j == 4 and dec}
    two_a = set(h_fold_sumset(A, 2).elements)
    three_a = set(h_fold_sumset(A, 3).elements)
    add("X1 = A", sorted(A.elements), sorted(x_sets.get(1, set())))
    add("X2 = {}", [], sorted(x_sets.get(2, set())))
    add("X3 = 2A", sorted(two_a), sorted(x_sets.get(3, set())))
    add("X4 cap D = 3A", sorted(three_a), sorted(x4_dec))

    add("n = |P cap L|", n, rep.p_left)
    add("|L| = C(n,2)+3n+1", pred.l_expected, rep.l_count)
    add("|D4| = C(n+2,3)", pred.d4_expected, rep.dq_count)
    add("W0 = -C(n,3)", pred.w0_expected, rep.w0)

    j_members = range(pred.j_lo, pred.j_hi + 1)
    add("J subset of P4", True, all(S.is_primitive(x) for x in j_members))
    add("6|J| >= m", True, 6 * (pred.j_hi - pred.j_lo + 1) >= S.m)
    add("6|P4| >= m", True, 6 * rep.pq_count >= S.m)
    add("W = |P4|(|L|-4) + W0", rep.w, rep.pq_count * (rep.l_count - 4) + rep.w0)
    add("W >= 9", True, rep.w >= pred.w_min)
    return ConstructionVerification(tuple(checks))
