"""Enumerators: exhaustive, duplicate-free, deterministic.

Counts are cross-checked against power-set filters (sets) and an antichain
walk over all proper monomial ideals (ideals) at small sizes, then frozen.
"""

import itertools

import pytest

from excolex.enumeration import (
    enumerate_strongly_stable_ideals,
    enumerate_strongly_stable_sets,
    enumerate_strongly_stable_supersets,
)
from excolex.ideals import (
    MonomialIdeal,
    degree_profile,
    is_strongly_stable_ideal,
)
from excolex.monomials import Monomial, is_strongly_stable, iter_degree_masks

M = Monomial.from_text


def brute_force_sets(n, d):
    universe = [Monomial(m) for m in iter_degree_masks(n, d)]
    found = set()
    for r in range(1, len(universe) + 1):
        for combo in itertools.combinations(universe, r):
            if is_strongly_stable(set(combo)):
                found.add(frozenset(combo))
    return found


@pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 4)])
def test_sets_match_power_set_filter(n, d):
    enumerated = [frozenset(s) for s in enumerate_strongly_stable_sets(n, d)]
    assert len(enumerated) == len(set(enumerated))  # duplicate-free
    assert set(enumerated) == brute_force_sets(n, d)


def test_set_counts_frozen():
    def count(n, d):
        return sum(1 for _ in enumerate_strongly_stable_sets(n, d))

    assert count(3, 2) == 3
    assert count(4, 2) == 7
    # brute-force pinned: fifteen, one per staircase profile
    assert count(5, 2) == 15
    assert count(5, 5) == 1  # only the full product at top degree
    assert count(6, 1) == 6  # prefixes of the variables


def test_three_chain_at_n3_d2():
    sets = list(enumerate_strongly_stable_sets(3, 2))
    as_text = [tuple(u.text() for u in s) for s in sets]
    assert sorted(as_text, key=len) == [
        ("e1e2",),
        ("e1e2", "e1e3"),
        ("e1e2", "e1e3", "e2e3"),
    ]


def test_sets_stream_is_deterministic():
    first = list(enumerate_strongly_stable_sets(5, 3))
    second = list(enumerate_strongly_stable_sets(5, 3))
    assert first == second


def test_supersets_contain_base_and_respect_cap():
    base = [M("e1e2"), M("e1e3")]
    everything = list(enumerate_strongly_stable_supersets(4, 2, base))
    assert all(set(base) <= set(s) for s in everything)
    assert all(is_strongly_stable(set(s)) for s in everything)
    capped = list(enumerate_strongly_stable_supersets(4, 2, base, max_extra=1))
    assert max(len(s) for s in capped) <= len(base) + 1
    assert {frozenset(s) for s in capped} <= {frozenset(s) for s in everything}


def all_proper_ideals(n):
    masks = [m for d in range(1, n + 1) for m in iter_degree_masks(n, d)]
    found = []

    def walk(start, chosen):
        if chosen:
            found.append(MonomialIdeal(n, tuple(Monomial(m) for m in chosen)))
        for k in range(start, len(masks)):
            m = masks[k]
            if all(not (c & m == c or m & c == m) for c in chosen):
                chosen.append(m)
                walk(k + 1, chosen)
                chosen.pop()

    walk(0, [])
    return found


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ideals_match_antichain_filter(n):
    expected = {
        I.gens
        for I in all_proper_ideals(n)
        if is_strongly_stable_ideal(I) and len(degree_profile(I)) <= 2
    }
    enumerated = [I.gens for I in enumerate_strongly_stable_ideals(n)]
    assert len(enumerated) == len(set(enumerated))
    assert set(enumerated) == expected


def test_ideal_counts_frozen():
    def count(n, **kw):
        return sum(1 for _ in enumerate_strongly_stable_ideals(n, **kw))

    # n=2 has three: the first variable, both variables, and their product
    assert count(2) == 3
    assert count(3) == 8
    assert count(4) == 25
    assert count(5) == 109
    assert count(5, max_degrees=1) == 41


def test_every_yielded_ideal_is_strongly_stable():
    for I in enumerate_strongly_stable_ideals(4):
        assert is_strongly_stable_ideal(I)


def test_two_degree_ideals_have_two_degrees():
    two = [
        I
        for I in enumerate_strongly_stable_ideals(4)
        if len(degree_profile(I)) == 2
    ]
    assert two  # the stream does reach two-degree profiles
    for I in two:
        d1, d2 = (d for d, _ in degree_profile(I))
        assert d1 < d2


def test_degree_pairs_filter():
    only = list(
        enumerate_strongly_stable_ideals(4, degree_pairs=[(2, 3)])
    )
    assert only
    for I in only:
        assert [d for d, _ in degree_profile(I)] == [2, 3]


def test_max_extra_caps_new_generators():
    for I in enumerate_strongly_stable_ideals(5, max_extra=1):
        profile = degree_profile(I)
        if len(profile) == 2:
            assert profile[1][1] <= 1
