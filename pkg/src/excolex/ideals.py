"""Monomial ideals presented by minimal generators.

In the exterior algebra a monomial u divides v exactly when supp(u) is
contained in supp(v), so ideal membership of a monomial is a subset test
against the generators. Graded components are computed by that superset test
directly, independently of iterated shadows, which lets the two routes
cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContractViolation
from .monomials import (
    MAX_VARIABLES,
    Monomial,
    borel_reductions,
    is_strongly_stable,
    iter_degree_masks,
)

# A degree profile is the sorted tuple of (degree, generator count) pairs.
DegreeProfile = tuple[tuple[int, int], ...]


def _canonical(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(gens, key=lambda u: (u.degree, u.mask)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal, keyed by ambient size and sorted generators.

    Generators are stored by (degree, revlex-descending) order; equality is
    structural. The constructor rejects non-minimal generating sets; use
    ``minimalize`` to canonicalize raw input.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = _canonical(self.gens)
        object.__setattr__(self, "gens", gens)
        if not 1 <= self.n <= MAX_VARIABLES:
            raise ContractViolation(f"ambient size out of range: {self.n}")
        if not gens:
            raise ContractViolation("an ideal needs at least one generator")
        seen: set[int] = set()
        for u in gens:
            if u.degree == 0:
                raise ContractViolation("the unit monomial generates an improper ideal")
            if u.max_index > self.n:
                raise ContractViolation(f"generator {u} does not live in e_1..e_{self.n}")
            if u.mask in seen:
                raise ContractViolation(f"duplicate generator {u}")
            seen.add(u.mask)
        for u in gens:
            for v in gens:
                if u.mask != v.mask and u.divides(v):
                    raise ContractViolation(f"{u} divides {v}; generators are not minimal")

    @property
    def indeg(self) -> int:
        return self.gens[0].degree

    @property
    def max_degree(self) -> int:
        return self.gens[-1].degree

    def gens_of_degree(self, d: int) -> tuple[Monomial, ...]:
        return tuple(u for u in self.gens if u.degree == d)

    def contains(self, mono: Monomial) -> bool:
        return any(g.divides(mono) for g in self.gens)

    def reembed(self, n: int) -> "MonomialIdeal":
        """The same generators read in an ambient of size n."""
        if n == self.n:
            return self
        return MonomialIdeal(n, self.gens)

    def as_dict(self) -> dict:
        return {"n": self.n, "generators": [list(u.indices) for u in self.gens]}

    @classmethod
    def from_dict(cls, obj: dict, allow_text: bool = True) -> "MonomialIdeal":
        try:
            n = obj["n"]
            raw = obj["generators"]
        except (TypeError, KeyError):
            raise ContractViolation(
                'ideal JSON must look like {"n": 5, "generators": [[1,2],[1,3,4]]}'
            ) from None
        if not isinstance(n, int):
            raise ContractViolation(f"ambient size must be an integer, got {n!r}")
        gens = [parse_monomial(entry, allow_text=allow_text) for entry in raw]
        return minimalize(n, gens)


def parse_monomial(entry, allow_text: bool = True) -> Monomial:
    """A monomial from its JSON array form [1,3,4] or text form 'e1e3e4'."""
    if isinstance(entry, str):
        if not allow_text:
            raise ContractViolation(
                f"text monomial {entry!r} needs text parsing enabled"
            )
        return Monomial.from_text(entry)
    if isinstance(entry, (list, tuple)):
        return Monomial.from_indices(entry)
    raise ContractViolation(f"cannot parse monomial {entry!r}")


def minimalize(n: int, raw: Iterable[Monomial]) -> MonomialIdeal:
    """Drop duplicates and every monomial that is a multiple of another one."""
    masks = {u.mask for u in raw}
    if not masks:
        raise ContractViolation("cannot build an ideal from no monomials")
    keep = [
        m for m in masks if not any(o != m and o & m == o for o in masks)
    ]
    return MonomialIdeal(n, [Monomial(m) for m in keep])


def component_masks(gen_masks: Iterable[int], n: int, t: int) -> list[int]:
    """Masks of the degree-t multiples of any of the generator masks, ascending."""
    gm = list(gen_masks)
    return [m for m in iter_degree_masks(n, t) if any(g & m == g for g in gm)]


def graded_component(I: MonomialIdeal, t: int) -> set[Monomial]:
    """All degree-t monomials of the ideal (the superset test, not iterated shadows)."""
    if not 0 <= t <= I.n:
        raise ContractViolation(f"degree {t} outside 0..{I.n}")
    gm = [g.mask for g in I.gens if g.degree <= t]
    return {Monomial(m) for m in component_masks(gm, I.n, t)}


def degree_profile(I: MonomialIdeal) -> DegreeProfile:
    counts: dict[int, int] = {}
    for u in I.gens:
        counts[u.degree] = counts.get(u.degree, 0) + 1
    return tuple(sorted(counts.items()))


def is_strongly_stable_ideal(I: MonomialIdeal) -> bool:
    """Every index-lowering move of every generator stays inside the ideal."""
    return all(I.contains(v) for u in I.gens for v in borel_reductions(u))


def is_strongly_stable_ideal_componentwise(I: MonomialIdeal) -> bool:
    """The definition taken literally, one graded component at a time.

    Agrees with the generator-level test; kept as the slow independent route.
    """
    return all(
        is_strongly_stable(graded_component(I, t)) for t in range(I.indeg, I.n + 1)
    )
