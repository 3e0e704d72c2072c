import itertools

import pytest

from mobiustri.arc_model import (Core, OneSided, TwoSided, all_arcs,
                                 canonical_one_sided, compatible)
from mobiustri.catalan_polygon import catalan_number
from mobiustri.enumeration import (BRUTE_FORCE_CEILING,
                                   convolution_identity_holds,
                                   count_brute_force, count_closed_form,
                                   count_recurrence, enumerate_triangulations,
                                   is_triangulation, least_triangulation,
                                   triangulation_to_json, verify_counts)

# 4^(n-1) + binom(2n-2, n-1) for n = 1..10
COUNTS = [2, 6, 22, 84, 326, 1276, 5020, 19816, 78406, 310764]


def test_closed_form_values():
    assert [count_closed_form(n) for n in range(1, 11)] == COUNTS


def test_recurrence_matches_closed_form():
    for n in range(1, 41):
        assert count_recurrence(n) == count_closed_form(n)


def test_convolution_identity():
    # 2 sum(C_i T_{n-i-1}) telescopes to 4^(n-1)
    for n in range(2, 41):
        assert convolution_identity_holds(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_brute_force_agrees(n):
    assert count_brute_force(n) == COUNTS[n - 1]


def test_brute_force_ceiling():
    with pytest.raises(ValueError):
        count_brute_force(BRUTE_FORCE_CEILING + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_every_triangulation_has_n_arcs(n):
    for t in enumerate_triangulations(n):
        assert len(t) == n


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_is_deterministic_and_duplicate_free(n):
    ts = enumerate_triangulations(n)
    assert ts == enumerate_triangulations(n)
    assert len(set(ts)) == len(ts)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerated_sets_are_triangulations(n):
    for t in enumerate_triangulations(n):
        for a, b in itertools.combinations(t, 2):
            assert compatible(a, b, n)
        for c in all_arcs(n):
            if c not in t:
                assert not all(compatible(c, a, n) for a in t)


def test_least_triangulation_is_first():
    for n in range(1, 6):
        assert enumerate_triangulations(n)[0] == least_triangulation(n)
    assert least_triangulation(1) == frozenset({OneSided(0, 0, 0)})
    assert least_triangulation(3) == frozenset(
        {TwoSided(0, 0), TwoSided(0, 2), OneSided(0, 0, 0)})


def test_m1_triangulations():
    assert enumerate_triangulations(1) == [
        frozenset({OneSided(0, 0, 0)}), frozenset({Core()})]


def test_m2_triangulations():
    m0, m1, k = TwoSided(0, 0), TwoSided(1, 1), Core()
    o00, o01, o11 = OneSided(0, 0, 0), OneSided(0, 1, 0), OneSided(1, 1, 0)
    assert set(enumerate_triangulations(2)) == {
        frozenset({m0, o00}), frozenset({m0, k}),
        frozenset({m1, o11}), frozenset({m1, k}),
        frozenset({o00, o01}), frozenset({o01, o11}),
    }


@pytest.mark.parametrize("n", range(2, 6))
def test_type_partition(n):
    # with the core: n C(n-1); with a monogon but no core: n C(n-1);
    # everything else makes up the difference
    ts = enumerate_triangulations(n)
    with_core = [t for t in ts if Core() in t]
    monogon_only = [t for t in ts
                    if Core() not in t
                    and any(isinstance(a, TwoSided) and a.a == a.b for a in t)]
    expected = n * catalan_number(n - 1)
    assert len(with_core) == expected
    assert len(monogon_only) == expected
    for t in with_core:
        monogons = [a for a in t if isinstance(a, TwoSided) and a.a == a.b]
        assert len(monogons) == 1


def _mirror(arc, n):
    """Image under the reflection sending point k to n - 1 - k.

    On the cover the reflection is x -> -2 - x on both circles, so a
    one-sided arc's winding transforms by reflecting the top coordinate
    and re-splitting it into base point plus whole turns.
    """
    if isinstance(arc, TwoSided):
        return TwoSided((n - 1 - arc.b) % n, (n - 1 - arc.a) % n)
    if isinstance(arc, OneSided):
        N = 2 * n
        q = (2 * arc.j + n) % N + N * arc.w
        i2 = (n - 1 - arc.i) % n
        j2 = (n - 1 - arc.j) % n
        w2, r = divmod(N - 2 - q - (2 * j2 + n) % N, N)
        assert r == 0
        return canonical_one_sided(i2, j2, w2, n)
    return arc


@pytest.mark.parametrize("n", range(1, 6))
def test_mirror_symmetry(n):
    # reflecting the marked points permutes the triangulation list
    ts = set(enumerate_triangulations(n))
    mirrored = {frozenset(_mirror(a, n) for a in t) for t in ts}
    assert mirrored == ts


def test_is_triangulation():
    for n in (1, 2, 3):
        for t in enumerate_triangulations(n):
            assert is_triangulation(t, n)
    # not maximal
    assert not is_triangulation(frozenset({TwoSided(0, 0)}), 2)
    # crossing pair
    assert not is_triangulation(
        frozenset({TwoSided(0, 0), TwoSided(1, 1)}), 2)
    # not arcs of M_2 at all
    assert not is_triangulation(frozenset({TwoSided(0, 2)}), 2)


def test_triangulation_json():
    t = least_triangulation(2)
    blob = triangulation_to_json(t, 2)
    assert blob == {"n": 2, "arcs": [
        {"type": "two_sided", "a": 0, "b": 0},
        {"type": "one_sided", "i": 0, "j": 0, "w": 0},
    ]}


def test_verify_counts_report():
    ok, lines = verify_counts(4)
    assert ok
    assert len(lines) == 4
    assert all(line.endswith("=> ok") for line in lines)
    assert lines[2].startswith("n=3 closed=22 recurrence=22")
