"""Ideal layer: minimal generators, graded components, stability, profiles."""

import pytest

from excolex.errors import ContractViolation
from excolex.ideals import (
    MonomialIdeal,
    degree_profile,
    graded_component,
    is_strongly_stable_ideal,
    is_strongly_stable_ideal_componentwise,
    minimalize,
    parse_monomial,
)
from excolex.monomials import Monomial, iter_degree_masks, shadow

M = Monomial.from_text


def ideal(n, *texts):
    return minimalize(n, [M(t) for t in texts])


def test_constructor_validations():
    with pytest.raises(ContractViolation):
        MonomialIdeal(4, ())  # empty
    with pytest.raises(ContractViolation):
        MonomialIdeal(2, (M("e1e3"),))  # outside ambient
    with pytest.raises(ContractViolation):
        MonomialIdeal(4, (M("e1e2"), M("e1e2e3")))  # not minimal
    with pytest.raises(ContractViolation):
        MonomialIdeal(4, (Monomial(0),))  # unit generator


def test_gens_sorted_by_degree_then_revlex():
    I = MonomialIdeal(5, (M("e2e3e4"), M("e1e4"), M("e1e2")))
    assert [u.text() for u in I.gens] == ["e1e2", "e1e4", "e2e3e4"]


def test_minimalize_examples():
    assert ideal(4, "e1e2", "e1e2e3").gens == (M("e1e2"),)
    I = ideal(5, "e1e2", "e1e3e4", "e1e3e5")
    assert [u.text() for u in I.gens] == ["e1e2", "e1e3e4", "e1e3e5"]
    assert ideal(3, "e1e2", "e1e2").gens == (M("e1e2"),)


def test_minimalize_idempotent():
    I = ideal(5, "e1e2", "e2e3e4", "e1e3e5", "e1e2e5")
    again = minimalize(5, I.gens)
    assert again == I


def test_structural_equality():
    a = ideal(4, "e1e2", "e3e4")
    b = MonomialIdeal(4, (M("e3e4"), M("e1e2")))
    assert a == b
    assert a != a.reembed(5)


def test_graded_component_multiples():
    I = ideal(4, "e1e2")
    assert graded_component(I, 3) == {M("e1e2e3"), M("e1e2e4")}
    assert graded_component(I, 1) == set()


def test_graded_component_shadow_plus_new_generators():
    # degree-2 part of the second construction example, read over n=5:
    # its degree-3 component is the 8-element shadow, leaving just 2 monomials
    I = ideal(5, "e1e2", "e1e3", "e2e3", "e1e4")
    comp = graded_component(I, 3)
    assert comp == shadow(I.gens, 5)
    assert len(comp) == 8
    everything = {Monomial(m) for m in iter_degree_masks(5, 3)}
    assert len(everything - comp) == 2


@pytest.mark.parametrize(
    "texts,n",
    [(("e1e2", "e1e3e4"), 5), (("e1", "e2e3"), 4), (("e1e2e3",), 3)],
)
def test_component_recursion(texts, n):
    # component at t+1 = shadow of component at t, plus degree-(t+1) generators
    I = ideal(n, *texts)
    for t in range(I.indeg, n):
        lhs = graded_component(I, t + 1)
        rhs = shadow(graded_component(I, t), n) | set(I.gens_of_degree(t + 1))
        assert lhs == rhs


def test_strongly_stable_ideal_examples():
    assert is_strongly_stable_ideal(ideal(5, "e1e2", "e1e3", "e1e4", "e2e3e4"))
    assert not is_strongly_stable_ideal(ideal(3, "e2e3"))
    assert is_strongly_stable_ideal(ideal(2, "e1"))


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
def test_generator_test_agrees_with_componentwise(n):
    for I in all_proper_ideals(n):
        assert is_strongly_stable_ideal(I) == is_strongly_stable_ideal_componentwise(I)


def test_single_degree_component_is_generator_set():
    I = ideal(5, "e1e2", "e1e3", "e2e3")
    assert graded_component(I, 2) == set(I.gens)


def test_degree_profile_examples():
    assert degree_profile(ideal(5, "e1e2", "e1e3e4", "e1e3e5")) == ((2, 1), (3, 2))
    I = ideal(5, "e1e2", "e1e3", "e1e4", "e1e5", "e2e3e4", "e2e3e5", "e2e4e5")
    assert degree_profile(I) == ((2, 4), (3, 3))
    assert degree_profile(ideal(3, "e1e2")) == ((2, 1),)


def test_json_round_trip_and_text_entries():
    I = ideal(5, "e1e2", "e1e3e4")
    data = I.as_dict()
    assert data == {"n": 5, "generators": [[1, 2], [1, 3, 4]]}
    assert MonomialIdeal.from_dict(data) == I
    textual = {"n": 5, "generators": ["e1e2", "e1e3e4"]}
    assert MonomialIdeal.from_dict(textual) == I
    with pytest.raises(ContractViolation):
        MonomialIdeal.from_dict(textual, allow_text=False)
    with pytest.raises(ContractViolation):
        MonomialIdeal.from_dict({"generators": [[1]]})


def test_parse_monomial_forms():
    assert parse_monomial([1, 3]) == M("e1e3")
    assert parse_monomial("e1e3") == M("e1e3")
    with pytest.raises(ContractViolation):
        parse_monomial(12)


def test_reembed():
    I = ideal(5, "e1e2", "e1e3e4")
    assert I.reembed(7).n == 7
    assert I.reembed(7).gens == I.gens
    with pytest.raises(ContractViolation):
        I.reembed(3)
