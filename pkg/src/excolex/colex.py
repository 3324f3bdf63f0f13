"""The colexsegment construction and revlex-ideal characterizations.

Given the degree profile of an ideal, the construction picks, degree by
degree, the revlex-largest monomials not already generated, over the smallest
ambient e_1..e_m (m at least the input ambient) where every degree can be
served. Greedy attempts at a fixed m are kept separate from the scan so that
ambient-stability can be checked by rerunning the greedy at larger m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    AmbientCapExceeded,
    ContractViolation,
    DegreeTooHigh,
    HypothesisViolated,
    NotARevlexSegment,
)
from .ideals import DegreeProfile, MonomialIdeal, degree_profile, graded_component
from .monomials import (
    Monomial,
    common_degree,
    iter_degree_masks,
    require_ambient,
    revlex_min,
    revlex_segment,
    shadow,
)


@dataclass(frozen=True)
class ColexStep:
    """Generators chosen in one degree, in decreasing revlex order."""

    degree: int
    chosen: tuple[Monomial, ...]


@dataclass(frozen=True)
class ColexResult:
    ideal: MonomialIdeal
    m: int
    steps: tuple[ColexStep, ...]

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "J": self.ideal.as_dict(),
            "steps": [
                {"degree": s.degree, "chosen": [list(u.indices) for u in s.chosen]}
                for s in self.steps
            ],
        }


def greedy_generators(profile: DegreeProfile, m: int) -> tuple[ColexStep, ...] | None:
    """One construction attempt at a fixed ambient size, or None when a degree starves.

    Masks ascend in revlex-descending order, so the first picks not divisible
    by an earlier choice are exactly the revlex-largest available monomials.
    """
    chosen_masks: list[int] = []
    steps: list[ColexStep] = []
    for degree, count in profile:
        picks: list[Monomial] = []
        for mask in iter_degree_masks(m, degree):
            if any(g & mask == g for g in chosen_masks):
                continue
            picks.append(Monomial(mask))
            if len(picks) == count:
                break
        if len(picks) < count:
            return None
        chosen_masks.extend(u.mask for u in picks)
        steps.append(ColexStep(degree, tuple(picks)))
    return tuple(steps)


def colex_ideal(I: MonomialIdeal, m_cap: int = 32) -> ColexResult:
    """The colexsegment ideal of I and the smallest workable ambient size.

    The scan starts at I's own ambient and only ever adds variables, matching
    the two worked construction examples (m = 5 and m = 6). Feasibility is not
    assumed monotone in m; every candidate reruns the greedy from scratch.
    """
    if m_cap < I.n:
        raise ContractViolation(f"m_cap {m_cap} below the ambient size {I.n}")
    profile = degree_profile(I)
    for m in range(I.n, m_cap + 1):
        steps = greedy_generators(profile, m)
        if steps is not None:
            gens = [u for step in steps for u in step.chosen]
            return ColexResult(MonomialIdeal(m, gens), m, steps)
    raise AmbientCapExceeded(m_cap, m_cap)


def is_revlex_segment(monos, n: int) -> bool:
    """Whether the set equals the first |M| monomials of its degree in revlex."""
    monos = set(monos)
    require_ambient(monos, n)
    d = common_degree(monos)
    if d is None or d == 0:
        return True
    masks = sorted(u.mask for u in monos)
    for expected, got in zip(iter_degree_masks(n, d), masks):
        if expected != got:
            return False
    return True


def is_revlex_ideal(I: MonomialIdeal) -> bool:
    """Every graded component from the initial degree up is a revlex segment."""
    return all(
        is_revlex_segment(graded_component(I, t), I.n)
        for t in range(I.indeg, I.n + 1)
    )


def segment_shadow_conditions(monos, n: int) -> tuple[bool, bool, bool]:
    """Three equivalent tests on a revlex segment M of degree d < n-2.

    Returns (shadow is a revlex segment, |M| >= C(n-2, d), the corner monomial
    e_{n-d-1}...e_{n-2} lies in M). The equivalence itself is a theorem; the
    harness checks it exhaustively.
    """
    monos = set(monos)
    d = common_degree(monos)
    if d is None or d == 0:
        raise ContractViolation("need a nonempty segment of positive degree")
    if not is_revlex_segment(monos, n):
        raise NotARevlexSegment(f"input is not a revlex segment in e_1..e_{n}")
    if d >= n - 2:
        raise DegreeTooHigh(f"degree {d} not below n-2 = {n - 2}")
    shadow_is_segment = is_revlex_segment(shadow(monos, n), n)
    big_enough = len(monos) >= comb(n - 2, d)
    corner = Monomial.from_indices(range(n - d - 1, n - 1))
    return (shadow_is_segment, big_enough, corner in monos)


@dataclass(frozen=True)
class RevlexConditionReport:
    """Both numeric conditions for a two-degree colexsegment ideal to be revlex.

    Everything is evaluated over the ambient where the construction completed
    (``n``); when that exceeds the input ambient, the input ideal is re-read
    there first. The second condition is decided against the construction's
    own degree-d2 dimension (``dim_construction_d2``); the input ideal's
    ``dim_d2`` is reported alongside because the two can differ, and only the
    construction-side reading makes the equivalence hold on every checked
    input.
    """

    n: int
    d1: int
    d2: int
    dim_d1: int
    dim_d2: int
    dim_construction_d2: int
    threshold_i: int
    holds_i: bool
    a_size: int
    c: int
    holds_ii: bool
    is_revlex: bool

    @property
    def consistent(self) -> bool:
        return self.is_revlex == (self.holds_i or self.holds_ii)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d1": self.d1,
            "d2": self.d2,
            "dim_d1": self.dim_d1,
            "dim_d2": self.dim_d2,
            "dim_construction_d2": self.dim_construction_d2,
            "threshold_i": self.threshold_i,
            "holds_i": self.holds_i,
            "a_size": self.a_size,
            "c": self.c,
            "holds_ii": self.holds_ii,
            "is_revlex": self.is_revlex,
            "consistent": self.consistent,
        }


def revlex_conditions_two_degrees(
    I: MonomialIdeal, m_cap: int = 32
) -> RevlexConditionReport:
    """Evaluate the two-degree revlex criteria and the direct check side by side.

    Condition (i): the degree-d1 dimension reaches C(n-2, d1). Condition (ii):
    consecutive degrees, and the construction's degree-d2 component is long
    enough to reach past the boundary monomial w = revlex-min of the shadow of
    its degree-d1 segment, measured as |{v >= z}| + |{z > v >= w}| with
    z = e_{n-d1-1}...e_{n-1}.
    """
    profile = degree_profile(I)
    if len(profile) != 2:
        raise HypothesisViolated("need an ideal generated in exactly two degrees")
    (d1, p1), (d2, p2) = profile
    result = colex_ideal(I, m_cap)
    n = result.m
    if not d2 < n - 2:
        raise HypothesisViolated(f"need d2 < n-2, got d2 = {d2}, n = {n}")
    I_n = I.reembed(n)
    dim_d1 = len(graded_component(I_n, d1))
    dim_d2 = len(graded_component(I_n, d2))
    dim_construction_d2 = len(graded_component(result.ideal, d2))
    threshold_i = comb(n - 2, d1)
    holds_i = dim_d1 >= threshold_i
    a_size = sum(comb(r, d1) for r in range(d1, n - 1))
    c = 0
    holds_ii = False
    if d2 == d1 + 1:
        w = revlex_min(shadow(revlex_segment(n, d1, dim_d1), n))
        z = Monomial.from_indices(range(n - d1 - 1, n))
        # count degree-d2 monomials v with z > v >= w; masks ascend in revlex
        # descending order, so the window is mask(z) < mask(v) <= mask(w)
        for mask in iter_degree_masks(n, d2):
            if mask > w.mask:
                break
            if mask > z.mask:
                c += 1
        holds_ii = dim_construction_d2 >= a_size + c
    return RevlexConditionReport(
        n=n,
        d1=d1,
        d2=d2,
        dim_d1=dim_d1,
        dim_d2=dim_d2,
        dim_construction_d2=dim_construction_d2,
        threshold_i=threshold_i,
        holds_i=holds_i,
        a_size=a_size,
        c=c,
        holds_ii=holds_ii,
        is_revlex=is_revlex_ideal(result.ideal),
    )


def revlex_condition_single_degree(I: MonomialIdeal, m_cap: int = 32) -> bool:
    """Whether the colexsegment ideal of a single-degree ideal is revlex.

    For an ideal generated in one degree d < n-2 this is decided by the
    generator count alone: |G(I)| >= C(n-2, d).
    """
    profile = degree_profile(I)
    if len(profile) != 1:
        raise HypothesisViolated("need an ideal generated in a single degree")
    (d, count), = profile
    if not d < I.n - 2:
        raise HypothesisViolated(f"need d < n-2, got d = {d}, n = {I.n}")
    return count >= comb(I.n - 2, d)
