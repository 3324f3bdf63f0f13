"""Betti tables of stable ideals in closed form, and total-Betti comparisons.

The closed form only needs each generator's degree and largest index: the
entry at (i, i+t) is the sum over degree-t generators of C(m(u)+i-1, m(u)-1).
Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ContractViolation, FormulaInapplicable, ProfileMismatch
from .ideals import MonomialIdeal, is_strongly_stable_ideal

SUBJECT_IDEAL = "ideal"
SUBJECT_QUOTIENT = "quotient"

MODE_LOWER = "LowerBoundAllChecked"
MODE_UPPER = "UpperBoundAllChecked"
MODE_EQUAL = "EqualAllChecked"
MODE_INCOMPARABLE = "Incomparable"


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Graded Betti numbers up to a homological cutoff.

    ``subject`` records which object the table describes ("ideal" or
    "quotient"); mixing conventions is a bug the flag makes loud. Entries are
    a map (i, j) -> positive count; absent entries are zero.
    """

    subject: str
    i_max: int
    entries: dict

    def __post_init__(self):
        if self.subject not in (SUBJECT_IDEAL, SUBJECT_QUOTIENT):
            raise ContractViolation(f"unknown table subject {self.subject!r}")
        if self.i_max < 0:
            raise ContractViolation(f"negative homological cutoff: {self.i_max}")
        cleaned = {}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise ContractViolation(f"negative Betti number at {(i, j)}: {v}")
            if v and 0 <= i <= self.i_max:
                cleaned[(i, j)] = v
        object.__setattr__(self, "entries", cleaned)

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def totals(self) -> dict[int, int]:
        return {i: self.total(i) for i in range(self.i_max + 1)}

    def row(self, i: int) -> dict[int, int]:
        return dict(
            sorted((j, v) for (ii, j), v in self.entries.items() if ii == i)
        )

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "i_max": self.i_max,
            "rows": [
                {
                    "i": i,
                    "by_j": {str(j): v for j, v in self.row(i).items()},
                    "total": self.total(i),
                }
                for i in range(self.i_max + 1)
            ],
        }


def tables_agree(left: BettiTable, right: BettiTable, i_bound: int) -> bool:
    """Exact graded agreement for all i <= i_bound (missing entries are zero)."""
    if i_bound > min(left.i_max, right.i_max):
        raise ContractViolation("comparison bound exceeds a table cutoff")
    keys = {k for k in left.entries if k[0] <= i_bound}
    keys |= {k for k in right.entries if k[0] <= i_bound}
    return all(left.entry(i, j) == right.entry(i, j) for (i, j) in keys)


def stable_betti_table(I: MonomialIdeal, i_max: int) -> BettiTable:
    """The closed-form table of a strongly stable ideal (subject: the ideal)."""
    if i_max < 0:
        raise ContractViolation(f"negative homological cutoff: {i_max}")
    if not is_strongly_stable_ideal(I):
        raise FormulaInapplicable(
            "closed form needs a strongly stable ideal; use the homology oracle instead"
        )
    entries: dict[tuple[int, int], int] = {}
    for u in I.gens:
        m = u.max_index
        t = u.degree
        for i in range(i_max + 1):
            key = (i, i + t)
            entries[key] = entries.get(key, 0) + comb(m + i - 1, m - 1)
    return BettiTable(SUBJECT_IDEAL, i_max, entries)


def max_index_domination(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Sorted largest-index multisets compare pointwise: J's below I's.

    True implies total Betti numbers of J are at most those of I in every
    homological degree, with no cutoff, because each summand C(m+i-1, m-1) is
    monotone in m.
    """
    if len(I.gens) != len(J.gens):
        raise ProfileMismatch(
            f"generator counts differ: {len(I.gens)} vs {len(J.gens)}"
        )
    ours = sorted(u.max_index for u in J.gens)
    theirs = sorted(u.max_index for u in I.gens)
    return all(a <= b for a, b in zip(ours, theirs))


@dataclass(frozen=True)
class ComparisonVerdict:
    """Direction of the total-Betti comparison of J against I, up to a cutoff.

    ``strict_indices`` lists the i with strict inequality in the verdict's
    direction (both directions when incomparable); ``domination`` certifies
    the all-i lower bound when the largest-index multisets dominate.
    """

    mode: str
    strict_indices: tuple[int, ...]
    equal_indices: tuple[int, ...]
    i_max: int
    domination: bool

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "strict_indices": list(self.strict_indices),
            "equal_indices": list(self.equal_indices),
            "i_max": self.i_max,
            "domination": self.domination,
        }


def compare_betti(
    I: MonomialIdeal,
    J: MonomialIdeal,
    i_max: int,
    table_i: BettiTable | None = None,
    table_j: BettiTable | None = None,
) -> ComparisonVerdict:
    """Compare totals of J against I for 0 <= i <= i_max.

    Tables default to the closed form, so both ideals must be strongly stable
    unless precomputed tables (e.g. from the homology oracle) are supplied.
    """
    if i_max < 0:
        raise ContractViolation(f"negative homological cutoff: {i_max}")
    ti = table_i if table_i is not None else stable_betti_table(I, i_max)
    tj = table_j if table_j is not None else stable_betti_table(J, i_max)
    if ti.i_max < i_max or tj.i_max < i_max:
        raise ContractViolation("supplied tables do not reach the comparison cutoff")
    below = [i for i in range(i_max + 1) if tj.total(i) < ti.total(i)]
    above = [i for i in range(i_max + 1) if tj.total(i) > ti.total(i)]
    equal = tuple(
        i for i in range(i_max + 1) if i not in set(below) and i not in set(above)
    )
    if not below and not above:
        mode, strict = MODE_EQUAL, ()
    elif not above:
        mode, strict = MODE_LOWER, tuple(below)
    elif not below:
        mode, strict = MODE_UPPER, tuple(above)
    else:
        mode, strict = MODE_INCOMPARABLE, tuple(sorted(below + above))
    domination = False
    if len(I.gens) == len(J.gens):
        domination = max_index_domination(I, J)
    return ComparisonVerdict(mode, strict, equal, i_max, domination)
