"""Verification campaigns: exhaustive desk-scale checks with JSON-able reports.

Each campaign walks a declared universe of inputs, checks one claim on every
instance, and returns a report whose failures are first-class payloads (a
counterexample is a result, not a tool error). Reports are deterministic:
fixed iteration orders, no wall-clock data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from .betti import (
    MODE_EQUAL,
    MODE_LOWER,
    MODE_UPPER,
    compare_betti,
    max_index_domination,
    stable_betti_table,
    tables_agree,
)
from .cartan import cartan_betti, chain_space, differential
from .colex import (
    colex_ideal,
    is_revlex_ideal,
    revlex_condition_single_degree,
    revlex_conditions_two_degrees,
    segment_shadow_conditions,
)
from .enumeration import enumerate_strongly_stable_ideals, enumerate_strongly_stable_sets
from .errors import ContractViolation, HypothesisViolated
from .ideals import MonomialIdeal, degree_profile, graded_component, minimalize
from .monomials import (
    Monomial,
    count_max_index_le,
    iter_degree_masks,
    multiples_by,
    partial_shadow,
    restrict_max_index,
    revlex_min,
    revlex_segment,
    shadow,
)

CLAIMS = (
    "green",
    "colex-bound",
    "prop42",
    "lemma41",
    "example51",
    "section6",
    "oracle-agreement",
)


@dataclass
class VerificationReport:
    claim: str
    universe: dict
    instances: int
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failures:
            return "counterexample"
        return "verified" if self.instances > 0 else "skipped"

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "universe": self.universe,
            "instances": self.instances,
            "failures": self.failures,
            "notes": self.notes,
            "status": self.status,
        }


def _gens(I: MonomialIdeal) -> list[str]:
    return [u.text() for u in I.gens]


def verify_green(n_max: int = 5, m_cap: int = 32) -> VerificationReport:
    """The segment construction never loses low-index monomials, componentwise.

    For every strongly stable ideal with at most two generator degrees, every
    degree t and every p in [t, ambient]: the count of degree-t monomials of I
    with largest index <= p is at most the same count for the construction.
    Both sides live in the ambient where the construction completed.
    """
    report = VerificationReport(
        "green", {"n_max": n_max, "max_degrees": 2, "m_cap": m_cap}, 0
    )
    for n in range(1, n_max + 1):
        for I in enumerate_strongly_stable_ideals(n):
            result = colex_ideal(I, m_cap)
            big = result.m
            I_big = I.reembed(big)
            report.instances += 1
            for t in range(I_big.indeg, big + 1):
                comp_i = graded_component(I_big, t)
                comp_j = graded_component(result.ideal, t)
                for p in range(t, big + 1):
                    lhs = count_max_index_le(comp_i, p)
                    rhs = count_max_index_le(comp_j, p)
                    if lhs > rhs:
                        report.failures.append(
                            {
                                "ideal": I.as_dict(),
                                "construction": result.ideal.as_dict(),
                                "t": t,
                                "p": p,
                                "lhs": lhs,
                                "rhs": rhs,
                            }
                        )
    return report


def verify_colex_lower_bound(n_max: int = 6, i_max: int = 8) -> VerificationReport:
    """Single-degree strongly stable ideals dominate their colexsegment ideal.

    Checks the total-Betti comparison up to i_max and the sorted largest-index
    domination, which certifies the inequality for every homological degree.
    """
    report = VerificationReport(
        "colex-bound", {"n_max": n_max, "degrees": 1, "i_max": i_max}, 0
    )
    for n in range(1, n_max + 1):
        for I in enumerate_strongly_stable_ideals(n, max_degrees=1):
            result = colex_ideal(I)
            verdict = compare_betti(I, result.ideal, i_max)
            dominated = max_index_domination(I, result.ideal)
            report.instances += 1
            if verdict.mode not in (MODE_LOWER, MODE_EQUAL) or not dominated:
                report.failures.append(
                    {
                        "ideal": I.as_dict(),
                        "construction": result.ideal.as_dict(),
                        "verdict": verdict.as_dict(),
                        "domination": dominated,
                    }
                )
    return report


def verify_shadow_counting(n_max: int = 6, ideal_n_max: int = 5) -> VerificationReport:
    """Shadow size bookkeeping for strongly stable sets, plus the prefix split.

    Part one: |Shad(M)| equals the sum of n - m(u) over M, for every strongly
    stable set with n <= n_max. Part two: for strongly stable ideals with
    n <= ideal_n_max, multiplying the p-restricted degree-t component by the
    first p variables equals the union over i in (t, p] of e_i times the
    i-restricted component.
    """
    report = VerificationReport(
        "prop42",
        {"set_n_max": n_max, "ideal_n_max": ideal_n_max, "max_degrees": 2},
        0,
    )
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            for mset in enumerate_strongly_stable_sets(n, d):
                report.instances += 1
                expect = sum(n - u.max_index for u in mset)
                got = len(shadow(mset, n))
                if got != expect:
                    report.failures.append(
                        {
                            "n": n,
                            "set": [u.text() for u in mset],
                            "shadow_size": got,
                            "expected": expect,
                        }
                    )
    for n in range(1, ideal_n_max + 1):
        for I in enumerate_strongly_stable_ideals(n):
            report.instances += 1
            for t in range(I.indeg, n):
                comp = graded_component(I, t)
                for p in range(t + 1, n + 1):
                    combined = partial_shadow(restrict_max_index(comp, p), p, n)
                    pieces = set()
                    for i in range(t + 1, p + 1):
                        pieces |= multiples_by(restrict_max_index(comp, i), i)
                    if combined != pieces:
                        report.failures.append(
                            {
                                "ideal": I.as_dict(),
                                "t": t,
                                "p": p,
                                "combined": sorted(u.text() for u in combined),
                                "union": sorted(u.text() for u in pieces),
                            }
                        )
    return report


def verify_minimal_shadow_membership(n_max: int = 6) -> VerificationReport:
    """Dropping the revlex-least member only loses its high-index multiples.

    For strongly stable M with least member tau: tau times e_i stays in the
    shadow of M minus tau exactly when i is below tau's largest index.
    """
    report = VerificationReport("lemma41", {"n_max": n_max}, 0)
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            for mset in enumerate_strongly_stable_sets(n, d):
                report.instances += 1
                tau = revlex_min(mset)
                rest = [u for u in mset if u != tau]
                shad = shadow(rest, n) if rest else set()
                for i in range(1, n + 1):
                    if tau.contains(i):
                        continue
                    inside = tau.with_index(i) in shad
                    expected = i < tau.max_index
                    if inside != expected:
                        report.failures.append(
                            {
                                "n": n,
                                "set": [u.text() for u in mset],
                                "tau": tau.text(),
                                "i": i,
                                "in_shadow": inside,
                                "expected": expected,
                            }
                        )
    return report


# the eleven curated two-degree pairs over five variables, with their known
# comparison direction ("lower": construction bounds from below; "upper":
# construction bounds from above, strictly from i = 2 on)
BOUND_TABLE_ROWS: tuple[tuple[str, str, str], ...] = (
    ("lower", "e1e2,e1e3e4,e1e3e5", "e1e2,e1e3e4,e2e3e4"),
    ("lower", "e1e2,e1e3e4,e1e3e5,e1e4e5", "e1e2,e1e3e4,e2e3e4,e1e3e5"),
    ("lower", "e1e2,e1e3,e1e4e5", "e1e2,e1e3,e2e3e4"),
    ("lower", "e1e2,e1e3,e1e4,e1e5,e2e3e4", "e1e2,e1e3,e2e3,e1e4,e2e4e5"),
    ("lower", "e1e2,e1e3,e1e4,e1e5,e2e3e4,e2e3e5", "e1e2,e1e3,e2e3,e1e4,e2e4e5,e3e4e5"),
    ("lower", "e1e2,e1e3,e1e4,e1e5,e2e3,e2e4e5", "e1e2,e1e3,e2e3,e1e4,e2e4,e3e4e5"),
    ("lower", "e1e2,e1e3,e1e4,e1e5,e2e3e4,e2e3e5", "e1e2,e1e3,e2e3,e1e4,e2e4e5,e3e4e5"),
    ("lower", "e1e2e3,e1e2e4,e1e2e5,e1e3e4e5", "e1e2e3,e1e2e4,e1e3e4,e2e3e4e5"),
    ("upper", "e1e2,e1e3,e1e4,e2e3e4", "e1e2,e1e3,e2e3,e1e4e5"),
    ("upper", "e1e2,e1e3,e1e4,e2e3e4,e2e3e5", "e1e2,e1e3,e2e3,e1e4e5,e2e4e5"),
    ("upper", "e1e2,e1e3,e1e4,e2e3e4,e2e3e5,e2e4e5", "e1e2,e1e3,e2e3,e1e4e5,e2e4e5,e3e4e5"),
)


def _ideal_from_texts(n: int, texts: str) -> MonomialIdeal:
    return minimalize(n, [Monomial.from_text(t) for t in texts.split(",")])


def verify_bound_tables(i_max: int = 10) -> VerificationReport:
    """Reproduce the curated two-degree pairs and their bound directions.

    Lower rows must also pass the combined largest-index domination, which
    certifies the bound for every homological degree, not just the checked
    window. Upper rows must be strict for every 2 <= i <= i_max; the observed
    equalities at i in {0, 1} are recorded as a note (the generator count
    forces equality at i = 0).
    """
    report = VerificationReport(
        "example51", {"n": 5, "rows": len(BOUND_TABLE_ROWS), "i_max": i_max}, 0
    )
    equal_low: set[tuple[int, int]] = set()
    for row, (direction, i_text, j_text) in enumerate(BOUND_TABLE_ROWS, start=1):
        I = _ideal_from_texts(5, i_text)
        expected_J = _ideal_from_texts(5, j_text)
        result = colex_ideal(I)
        report.instances += 1
        problems = []
        if result.m != 5 or result.ideal != expected_J:
            problems.append("construction mismatch")
        verdict = compare_betti(I, expected_J, i_max)
        if direction == "lower":
            if verdict.mode not in (MODE_LOWER, MODE_EQUAL):
                problems.append(f"direction {verdict.mode}")
            if not max_index_domination(I, expected_J):
                problems.append("domination fails")
        else:
            if verdict.mode != MODE_UPPER:
                problems.append(f"direction {verdict.mode}")
            missing = [i for i in range(2, i_max + 1) if i not in verdict.strict_indices]
            if missing:
                problems.append(f"not strict at {missing}")
            for i in (0, 1):
                if i in verdict.equal_indices:
                    equal_low.add((row, i))
        if problems:
            report.failures.append(
                {
                    "row": row,
                    "direction": direction,
                    "ideal": I.as_dict(),
                    "expected": expected_J.as_dict(),
                    "got": result.as_dict(),
                    "problems": problems,
                }
            )
    if equal_low:
        rows = sorted({r for r, _ in equal_low})
        report.notes.append(
            "upper rows "
            + ",".join(map(str, rows))
            + ": totals are equal at i in {0,1}; strict inequality starts at i=2"
        )
    return report


def _two_degree_universe(
    n: int, max_extra: int | None
) -> Iterator[MonomialIdeal]:
    for I in enumerate_strongly_stable_ideals(n, max_extra=max_extra):
        if len(degree_profile(I)) == 2:
            yield I


def verify_revlex_characterizations(
    segment_n_max: int = 8,
    ideal_n_max: int = 7,
    max_extra_at_top: int = 2,
) -> VerificationReport:
    """Everything about when segment constructions give revlex ideals.

    Reproduces the two reference constructions (one not revlex, one revlex),
    checks the three-way segment/shadow equivalence for every revlex segment
    of degree d < n-2 up to segment_n_max, the single-degree generator-count
    criterion for every (n, d, count) with n <= ideal_n_max, and the
    two-degree condition report on every enumerated in-hypothesis strongly
    stable ideal (full enumeration below the top size, capped extra degree-d2
    generators at the top size).
    """
    report = VerificationReport(
        "section6",
        {
            "segment_n_max": segment_n_max,
            "ideal_n_max": ideal_n_max,
            "max_extra_at_top": max_extra_at_top,
        },
        0,
    )
    # the two reference constructions
    ref_not = _ideal_from_texts(6, "e1e2,e1e3,e1e4e5")
    res_not = colex_ideal(ref_not)
    report.instances += 1
    if (
        res_not.ideal != _ideal_from_texts(6, "e1e2,e1e3,e2e3e4")
        or is_revlex_ideal(res_not.ideal)
    ):
        report.failures.append(
            {"case": "reference non-revlex", "got": res_not.as_dict()}
        )
    ref_yes = _ideal_from_texts(5, "e1e2,e1e3,e1e4,e2e3e4")
    res_yes = colex_ideal(ref_yes)
    report.instances += 1
    if (
        res_yes.ideal != _ideal_from_texts(5, "e1e2,e1e3,e2e3,e1e4e5")
        or not is_revlex_ideal(res_yes.ideal)
    ):
        report.failures.append({"case": "reference revlex", "got": res_yes.as_dict()})
    # segment/shadow triple equivalence
    for n in range(4, segment_n_max + 1):
        for d in range(1, n - 2):
            for count in range(1, comb(n, d) + 1):
                a, b, c = segment_shadow_conditions(revlex_segment(n, d, count), n)
                report.instances += 1
                if not a == b == c:
                    report.failures.append(
                        {"case": "segment triple", "n": n, "d": d, "count": count,
                         "conditions": [a, b, c]}
                    )
    # single-degree criterion: the construction only depends on (n, d, count)
    for n in range(4, ideal_n_max + 1):
        for d in range(1, n - 2):
            for count in range(1, comb(n, d) + 1):
                I = MonomialIdeal(n, revlex_segment(n, d, count))
                predicted = revlex_condition_single_degree(I)
                actual = is_revlex_ideal(colex_ideal(I).ideal)
                report.instances += 1
                if predicted != actual:
                    report.failures.append(
                        {"case": "single degree", "n": n, "d": d, "count": count,
                         "predicted": predicted, "actual": actual}
                    )
    # two-degree condition report, enumerated
    for n in range(5, ideal_n_max + 1):
        max_extra = max_extra_at_top if n == ideal_n_max else None
        for I in _two_degree_universe(n, max_extra):
            try:
                rep = revlex_conditions_two_degrees(I)
            except HypothesisViolated:
                continue
            report.instances += 1
            if not rep.consistent:
                report.failures.append(
                    {"case": "two degrees", "ideal": I.as_dict(),
                     "report": rep.as_dict()}
                )
    return report


def _all_proper_ideals(n: int) -> list[MonomialIdeal]:
    """Every proper nonzero monomial ideal over e_1..e_n, by antichain walk."""
    masks = [m for d in range(1, n + 1) for m in iter_degree_masks(n, d)]
    out: list[MonomialIdeal] = []

    def walk(start: int, chosen: list[int]):
        if chosen:
            out.append(MonomialIdeal(n, [Monomial(m) for m in chosen]))
        for k in range(start, len(masks)):
            m = masks[k]
            if all(not (c & m == c or m & c == m) for c in chosen):
                chosen.append(m)
                walk(k + 1, chosen)
                chosen.pop()

    walk(0, [])
    return out


def _seeded_ideals(n: int, count: int, seed: int = 20240501) -> list[MonomialIdeal]:
    """Deterministic pseudo-random proper ideals, dedup by canonical form."""
    rng = random.Random(seed)
    pool = [m for d in range(1, n + 1) for m in iter_degree_masks(n, d)]
    seen: set[tuple] = set()
    out: list[MonomialIdeal] = []
    while len(out) < count:
        size = rng.randint(1, 6)
        picks = [Monomial(rng.choice(pool)) for _ in range(size)]
        I = minimalize(n, picks)
        key = (I.n, I.gens)
        if key not in seen:
            seen.add(key)
            out.append(I)
    return out


def verify_oracle_agreement(
    n_max: int = 5,
    i_max: int = 4,
    beta1_target: int = 200,
    dd_i_max: int = 4,
) -> VerificationReport:
    """The homology oracle against the closed form, and its own sanity laws.

    Three parts: exact graded agreement (shifted convention) with the closed
    form on every strongly stable ideal with at most two generator degrees and
    n <= n_max, for i <= i_max; first-row Betti numbers equal generator counts
    on every proper monomial ideal with n <= 4 (topped up with seeded ideals
    at n = 5 to pass beta1_target, since only 189 distinct ideals exist below
    n = 5); and boundary-of-boundary = 0 on every basis element, exhaustively
    for all proper ideals with n <= 4 and homological degree <= dd_i_max.
    """
    report = VerificationReport(
        "oracle-agreement",
        {
            "n_max": n_max,
            "i_max": i_max,
            "beta1_target": beta1_target,
            "dd_i_max": dd_i_max,
        },
        0,
    )
    for n in range(1, n_max + 1):
        for I in enumerate_strongly_stable_ideals(n):
            tables = cartan_betti(I, i_max + 1)
            formula = stable_betti_table(I, i_max)
            report.instances += 1
            if not tables_agree(tables.ideal, formula, i_max):
                report.failures.append(
                    {
                        "case": "formula",
                        "ideal": I.as_dict(),
                        "oracle": tables.ideal.as_dict(),
                        "closed_form": formula.as_dict(),
                    }
                )
    beta1_pool: list[MonomialIdeal] = []
    for n in range(1, 5):
        beta1_pool.extend(_all_proper_ideals(n))
    exhaustive = len(beta1_pool)
    if exhaustive < beta1_target:
        beta1_pool.extend(_seeded_ideals(5, beta1_target - exhaustive))
    for I in beta1_pool:
        tables = cartan_betti(I, 1)
        report.instances += 1
        for j in range(I.n + 2):
            if tables.quotient.entry(1, j) != len(I.gens_of_degree(j)):
                report.failures.append(
                    {
                        "case": "beta1",
                        "ideal": I.as_dict(),
                        "j": j,
                        "oracle": tables.quotient.entry(1, j),
                        "generators": len(I.gens_of_degree(j)),
                    }
                )
    report.notes.append(
        f"beta1 universe: all {exhaustive} proper monomial ideals with n <= 4, "
        f"plus {len(beta1_pool) - exhaustive} seeded at n = 5"
    )
    for n in range(1, 5):
        for I in _all_proper_ideals(n):
            report.instances += 1
            broken = False
            for i in range(2, dd_i_max + 1):
                for j in range(n + i + 1):
                    for elem in chain_space(I, i, j):
                        acc: dict = {}
                        for s1, mid in differential(elem, I):
                            for s2, end in differential(mid, I):
                                acc[end] = acc.get(end, 0) + s1 * s2
                        if any(acc.values()):
                            broken = True
                            report.failures.append(
                                {
                                    "case": "boundary squared",
                                    "ideal": I.as_dict(),
                                    "element": [elem.mono.text(), list(elem.powers)],
                                }
                            )
                            break
                    if broken:
                        break
                if broken:
                    break
    return report


def run_claim(claim: str, n_max: int | None = None, i_max: int | None = None) -> VerificationReport:
    """Dispatch a named campaign with its standard bounds unless overridden."""
    if claim == "green":
        return verify_green(n_max or 5)
    if claim == "colex-bound":
        return verify_colex_lower_bound(n_max or 6, i_max or 8)
    if claim == "prop42":
        return verify_shadow_counting(n_max or 6, min(n_max or 5, 5))
    if claim == "lemma41":
        return verify_minimal_shadow_membership(n_max or 6)
    if claim == "example51":
        return verify_bound_tables(i_max or 10)
    if claim == "section6":
        return verify_revlex_characterizations(
            segment_n_max=n_max or 8, ideal_n_max=min(n_max or 7, 7)
        )
    if claim == "oracle-agreement":
        return verify_oracle_agreement(n_max or 5, i_max or 4)
    raise ContractViolation(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
