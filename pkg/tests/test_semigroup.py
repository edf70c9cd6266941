import pytest

from nsg import (
    GeneratorSpec,
    InvalidSpecError,
    NonCofiniteError,
    from_generators,
    parse_label,
    parse_semigroup_input,
)

import oracles


def S(*gens, t=None):
    return from_generators(GeneratorSpec(tuple(gens), t))


# -- construction -----------------------------------------------------------

def test_table1_truncated_construction():
    s = S(14, 22, 23, t=56)
    assert (s.m, s.c, s.g, len(s.gens)) == (14, 56, 43, 7)


def test_full_semigroup():
    n = S(1)
    assert (n.m, n.c, n.g, n.gens) == (1, 0, 0, (1,))
    assert n.f == -1


def test_small_plain_semigroup_against_closure_oracle():
    members, m, c, g = oracles.semigroup_facts((3, 5, 7), 20)
    s = S(3, 5, 7)
    assert (s.m, s.c, s.g) == (m, c, g) == (3, 5, 3)
    assert s.gens == (3, 5, 7)
    assert [x for x in range(s.c) if x not in s] == [1, 2, 4]


def test_plain_matches_oracle_various():
    for gens, limit in [((2, 3), 12), ((4, 6, 9, 11), 60), ((5, 7), 60),
                        ((6, 10, 15), 80), ((9, 11, 13), 200)]:
        members, m, c, g = oracles.semigroup_facts(gens, limit)
        s = S(*gens)
        assert (s.m, s.c, s.g) == (m, c, g), gens
        window_members = {x for x in range(s.c + s.m) if x in s}
        assert window_members == {x for x in members if x < s.c + s.m}
        assert list(s.gens) == oracles.primitive_elements(members, c, m)


def test_truncated_matches_oracle():
    for gens, t, limit in [((14, 22, 23), 56, 200), ((2,), 9, 60), ((2,), 10, 60),
                           ((5, 8), 11, 80), ((7,), 4, 40)]:
        members, m, c, g = oracles.semigroup_facts(gens, limit, truncation=t)
        s = S(*gens, t=t)
        assert (s.m, s.c, s.g) == (m, c, g), (gens, t)
        assert c <= t


def test_truncation_threshold_not_conductor():
    # t-1 inside the plain monoid drops the conductor below t
    s = S(2, t=9)
    assert s.c == 8 and s.gens == (2, 9)
    assert s.label() == "<2,9>"


def test_gcd_error_and_empty_error():
    with pytest.raises(NonCofiniteError):
        GeneratorSpec((2, 4))
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(())
    with pytest.raises(InvalidSpecError):
        GeneratorSpec((3, 3, 5))
    with pytest.raises(InvalidSpecError):
        GeneratorSpec((0, 3))


def test_nonminimal_generators_are_reduced():
    s = S(2, 3, 4)
    assert s.gens == (2, 3)
    assert s.label() == "<2,3>"


# -- membership -------------------------------------------------------------

def test_contains():
    s = S(3, 5, 7)
    assert 0 in s and 3 in s and 10 in s and 100 in s
    assert 4 not in s and 1 not in s
    assert -1 not in s and -100 not in s
    assert 55 not in S(14, 22, 23, t=56)


# -- primitives and decomposables --------------------------------------------

def test_primitives_and_decomposables_partition_window():
    for gens, t in [((2, 3), None), ((3, 5, 7), None), ((14, 22, 23), 56),
                    ((4, 6, 9, 11), None)]:
        s = S(*gens, t=t)
        p = set(s.primitives())
        d = set(s.decomposables_window())
        star = {x for x in range(1, s.c + s.m) if x in s}
        assert p | d == star
        assert p & d == set()


def test_decomposables_examples():
    s = S(2, 3)
    assert s.decomposables_window() == ()  # window [0,4) holds only 2,3
    assert S(1).decomposables_window() == ()
    s = S(14, 22, 23, t=56)
    assert sum(1 for x in s.decomposables_window() if 56 <= x < 70) == 10


def test_gens_match_decomposition_oracle():
    for gens, t, limit in [((14, 22, 23), 56, 200), ((9, 11, 13), 200, None)]:
        limit = limit or 200
        members, m, c, _ = oracles.semigroup_facts(gens, limit, truncation=t)
        s = S(*gens, t=t)
        assert list(s.gens) == oracles.primitive_elements(members, c, m)


# -- apery ------------------------------------------------------------------

def test_apery_small():
    assert S(2, 3).apery_set().elements == (0, 3)
    ap = S(3, 5, 7).apery_set()
    assert sorted(ap.elements) == [0, 5, 7]


def test_apery_invariants_and_oracle():
    for gens, t, limit in [((3, 5, 7), None, 40), ((14, 22, 23), 56, 200),
                           ((6, 10, 15), None, 80), ((2,), 9, 60)]:
        s = S(*gens, t=t)
        members, m, c, _ = oracles.semigroup_facts(gens, limit, truncation=t)
        ap = s.apery_set()
        assert len(ap.elements) == s.m
        assert sorted(x % s.m for x in ap.elements) == list(range(s.m))
        assert min(ap.elements) == 0
        assert max(ap.elements) == s.c + s.m - 1
        assert sorted(ap.elements) == oracles.apery_elements(members, m, limit)
        for x in ap.elements:
            assert x in s and (x - s.m) not in s


def test_apery_genus_identity():
    # genus equals the sum of floor(x/m) over apery elements
    for gens, t in [((3, 5, 7), None), ((14, 22, 23), 56), ((4, 9), None)]:
        s = S(*gens, t=t)
        assert s.g == sum(x // s.m for x in s.apery_set().elements)


def test_table1_apery_slices():
    ap = S(14, 22, 23, t=56).apery_set()
    by_slice = {}
    for x, j in zip(ap.elements, ap.slice_index):
        by_slice.setdefault(j, set()).add(x)
    assert by_slice[1] == {22, 23}
    assert 2 not in by_slice
    assert by_slice[3] == {44, 45, 46}
    x4d = {x for x, j, d in zip(ap.elements, ap.slice_index, ap.decomposable)
           if j == 4 and d}
    assert x4d == {66, 67, 68, 69}


# -- slices and left part -----------------------------------------------------

def test_slices():
    s = S(3, 5, 7)
    assert s.left_part() == (0, 3)
    assert s.slice(0) == (0,)
    q, _ = s.q_rho()
    assert q == 2
    assert s.slice(2) == (5, 6, 7)  # S_q equals the full interval
    assert s.slice(5) == tuple(range(14, 17))
    assert S(14, 22, 23, t=56).left_part().__len__() == 13


def test_slice_zero_is_origin_for_everyone():
    for gens, t in [((1,), None), ((2, 3), None), ((14, 22, 23), 56)]:
        assert S(*gens, t=t).slice(0) == (0,)


def test_left_part_apery_partition():
    # L is the disjoint union of X_i + [0, q-i-1]*m over i < q
    for gens, t in [((3, 5, 7), None), ((14, 22, 23), 56), ((9, 11, 13), None),
                    ((5, 8), 11)]:
        s = S(*gens, t=t)
        q, _ = s.q_rho()
        ap = s.apery_set()
        pieces = []
        for x, i in zip(ap.elements, ap.slice_index):
            if i < q:
                pieces.extend(x + k * s.m for k in range(q - i))
        assert sorted(pieces) == list(s.left_part())
        assert len(pieces) == len(set(pieces))


# -- labels ------------------------------------------------------------------

def test_labels():
    assert S(14, 22, 23, t=56).label() == "<14,22,23>_56"
    assert S(1).label() == "<1>"
    assert S(4, 6, 9, 11).label() == "<4,6,9,11>"
    assert S(14, 22, 23, t=56).label(sep=";") == "<14;22;23>_56"


def test_label_roundtrip():
    for text in ["<14,22,23>_56", "<1>", "<4,6,9,11>", "<2,3>", "<14;22;23>_56"]:
        s = from_generators(parse_label(text))
        assert s.label() == text.replace(";", ",")


def test_json_input_form():
    spec = parse_semigroup_input('{"generators": [14, 22, 23], "truncation": 56}')
    assert from_generators(spec).label() == "<14,22,23>_56"
    spec = parse_semigroup_input('{"generators": [3, 5, 7], "truncation": null}')
    assert from_generators(spec).g == 3
    with pytest.raises(InvalidSpecError):
        parse_semigroup_input("<not a label")


def test_reconstruction_from_own_primitives():
    for gens, t in [((14, 22, 23), 56), ((3, 5, 7), None), ((6, 10, 15), None)]:
        s = S(*gens, t=t)
        rebuilt = from_generators(GeneratorSpec(s.gens, s.c if s.c else None))
        assert rebuilt.same_set(s)


def test_random_constructions_match_oracle():
    import random

    rng = random.Random(2024)
    checked = 0
    while checked < 400:
        n = rng.randint(1, 5)
        gens = tuple(sorted(rng.sample(range(1, 40), n)))
        t = rng.choice([None, rng.randint(1, 90)])
        try:
            spec = GeneratorSpec(gens, t)
        except Exception:
            continue
        limit = 4 * (max(gens) ** 2 + (t or 0) + 40)
        members, m, c, g = oracles.semigroup_facts(gens, limit, truncation=t)
        s = from_generators(spec)
        assert (s.m, s.c, s.g) == (m, c, g), (gens, t)
        if c == 0:
            assert s.gens == (1,)
        else:
            assert list(s.gens) == oracles.primitive_elements(members, c, m)
            assert sorted(s.apery_set().elements) == \
                oracles.apery_elements(members, m, limit)
        window_members = {x for x in range(s.c + s.m) if x in s}
        assert window_members == {x for x in members if x < s.c + s.m}
        checked += 1


def test_window_closure():
    for gens, t in [((14, 22, 23), 56), ((4, 6, 9, 11), None), ((2,), 9)]:
        s = S(*gens, t=t)
        members = [x for x in range(s.c + s.m) if x in s]
        for i, u in enumerate(members):
            if u == 0:
                continue
            for v in members[i:]:
                if v == 0 or u + v >= s.c + s.m:
                    continue
                assert (u + v) in s
