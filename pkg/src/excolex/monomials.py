"""Squarefree monomials over a fixed variable set, the revlex order, and shadows.

A monomial is a set of 1-based variable indices stored as a bitmask: bit k set
means index k+1 divides the monomial. Two facts drive the whole module:

* divisibility is subset containment of masks, and
* among monomials of one degree, ascending mask order is exactly descending
  revlex order (the highest differing index decides, and it sits in the
  revlex-smaller monomial).

Degree-homogeneous collections are passed around as plain iterables or sets of
``Monomial``; every function here is pure.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, NamedTuple

from .errors import ContractViolation, InsufficientMonomials

# Masks stay machine-sized on purpose; 64 variables is far beyond desk scale.
MAX_VARIABLES = 64


class Monomial(NamedTuple):
    """A squarefree monomial e_{i1}...e_{id}, as a bitmask of its indices."""

    mask: int

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Monomial":
        mask = 0
        for i in indices:
            if not isinstance(i, int) or not 1 <= i <= MAX_VARIABLES:
                raise ContractViolation(f"variable index out of range: {i!r}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise ContractViolation(f"repeated variable index: {i}")
            mask |= bit
        return cls(mask)

    @classmethod
    def from_text(cls, text: str) -> "Monomial":
        """Parse the textual form 'e1e3e4'; '1' denotes the unit monomial."""
        s = text.strip()
        if s == "1":
            return cls(0)
        if not s.startswith("e") or s == "e":
            raise ContractViolation(f"cannot parse monomial {text!r}")
        try:
            indices = [int(part) for part in s[1:].split("e")]
        except ValueError:
            raise ContractViolation(f"cannot parse monomial {text!r}") from None
        return cls.from_indices(indices)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        out = []
        mask, i = self.mask, 1
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return tuple(out)

    @property
    def max_index(self) -> int:
        """Largest variable index, 0 for the unit monomial."""
        return self.mask.bit_length()

    @property
    def min_index(self) -> int:
        """Smallest variable index, 0 for the unit monomial."""
        if not self.mask:
            return 0
        return (self.mask & -self.mask).bit_length()

    def divides(self, other: "Monomial") -> bool:
        return self.mask & other.mask == self.mask

    def contains(self, index: int) -> bool:
        return bool(self.mask >> (index - 1) & 1) if index >= 1 else False

    def with_index(self, index: int) -> "Monomial":
        if not 1 <= index <= MAX_VARIABLES:
            raise ContractViolation(f"variable index out of range: {index}")
        if self.contains(index):
            raise ContractViolation(f"index {index} already present in {self}")
        return Monomial(self.mask | 1 << (index - 1))

    def without_index(self, index: int) -> "Monomial":
        if not self.contains(index):
            raise ContractViolation(f"index {index} not present in {self}")
        return Monomial(self.mask & ~(1 << (index - 1)))

    def text(self) -> str:
        if not self.mask:
            return "1"
        return "".join(f"e{i}" for i in self.indices)

    def __repr__(self) -> str:  # compact in pytest output
        return self.text()


def common_degree(monos: Iterable[Monomial]) -> int | None:
    """Degree of a homogeneous collection; None when it is empty."""
    deg = None
    for u in monos:
        if deg is None:
            deg = u.degree
        elif u.degree != deg:
            raise ContractViolation(f"mixed degrees: {deg} and {u.degree}")
    return deg


def require_ambient(monos: Iterable[Monomial], n: int) -> None:
    if not 1 <= n <= MAX_VARIABLES:
        raise ContractViolation(f"ambient size out of range: {n}")
    for u in monos:
        if u.max_index > n:
            raise ContractViolation(f"{u} does not live in e_1..e_{n}")


def revlex_cmp(u: Monomial, v: Monomial) -> int:
    """+1 when u > v in revlex, -1 when u < v, 0 when equal; degrees must match.

    u > v exactly when the highest index where the two differ belongs to v,
    i.e. when u has the smaller mask.
    """
    if u.degree != v.degree:
        raise ContractViolation("revlex only compares monomials of equal degree")
    if u.mask == v.mask:
        return 0
    return 1 if u.mask < v.mask else -1


def revlex_descending(monos: Iterable[Monomial]) -> list[Monomial]:
    """A homogeneous collection sorted from revlex-largest to revlex-smallest."""
    out = sorted(monos, key=lambda u: u.mask)
    common_degree(out)
    return out


def revlex_min(monos: Iterable[Monomial]) -> Monomial:
    """The revlex-smallest member (the largest mask)."""
    out = revlex_descending(monos)
    if not out:
        raise ContractViolation("revlex_min of an empty collection")
    return out[-1]


def iter_degree_masks(n: int, d: int) -> Iterator[int]:
    """Masks of all degree-d monomials in e_1..e_n, ascending (= revlex descending)."""
    if d < 0 or d > n:
        return
    if d == 0:
        yield 0
        return
    limit = 1 << n
    mask = (1 << d) - 1
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | ((mask ^ ripple) >> (low.bit_length() + 1))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """Every degree-d monomial of the ambient, in decreasing revlex order."""
    return [Monomial(m) for m in iter_degree_masks(n, d)]


def revlex_segment(n: int, d: int, length: int) -> list[Monomial]:
    """The ``length`` revlex-largest monomials of degree d, in decreasing order."""
    if not 1 <= d <= n:
        raise ContractViolation(f"degree {d} outside 1..{n}")
    if length < 0:
        raise ContractViolation(f"negative segment length: {length}")
    if length > comb(n, d):
        raise InsufficientMonomials(
            f"only {comb(n, d)} monomials of degree {d} in e_1..e_{n}, asked for {length}"
        )
    out: list[Monomial] = []
    for mask in iter_degree_masks(n, d):
        if len(out) == length:
            break
        out.append(Monomial(mask))
    return out


def shadow(monos: Iterable[Monomial], n: int) -> set[Monomial]:
    """All products of members with one new variable index <= n, supports only.

    Signs are irrelevant at support level; duplicates collapse. The top degree
    d = n shadows to the empty set.
    """
    monos = list(monos)
    require_ambient(monos, n)
    common_degree(monos)
    full = (1 << n) - 1
    out = set()
    for u in monos:
        free = full & ~u.mask
        while free:
            bit = free & -free
            out.add(Monomial(u.mask | bit))
            free ^= bit
    return out


def partial_shadow(monos: Iterable[Monomial], top: int, n: int) -> set[Monomial]:
    """Products e_j * u for u in the set and 1 <= j <= top, supports only.

    Empty when every index 1..top already divides every member. Coincides with
    ``shadow`` at top = n.
    """
    if not 1 <= top <= n:
        raise ContractViolation(f"multiplier bound {top} outside 1..{n}")
    monos = list(monos)
    require_ambient(monos, n)
    common_degree(monos)
    window = (1 << top) - 1
    out = set()
    for u in monos:
        free = window & ~u.mask
        while free:
            bit = free & -free
            out.add(Monomial(u.mask | bit))
            free ^= bit
    return out


def multiples_by(monos: Iterable[Monomial], index: int) -> set[Monomial]:
    """e_index times the set, at support level; members already divisible drop out."""
    return {u.with_index(index) for u in monos if not u.contains(index)}


def restrict_max_index(monos: Iterable[Monomial], p: int) -> set[Monomial]:
    """Members whose largest index is at most p."""
    if p < 0:
        raise ContractViolation(f"negative index bound: {p}")
    return {u for u in monos if u.max_index <= p}


def count_max_index_le(monos: Iterable[Monomial], p: int) -> int:
    if p < 0:
        raise ContractViolation(f"negative index bound: {p}")
    return sum(1 for u in monos if u.max_index <= p)


def max_index_counts(monos: Iterable[Monomial]) -> dict[int, int]:
    """How many members have each value of the largest index, keyed ascending."""
    out: dict[int, int] = {}
    for u in monos:
        out[u.max_index] = out.get(u.max_index, 0) + 1
    return dict(sorted(out.items()))


def borel_reductions(u: Monomial) -> Iterator[Monomial]:
    """Monomials reached from u by one index-lowering move j -> i, i < j unused."""
    for j in u.indices:
        free_below = ~u.mask & ((1 << (j - 1)) - 1)
        moved_base = u.mask ^ (1 << (j - 1))
        while free_below:
            bit = free_below & -free_below
            yield Monomial(moved_base | bit)
            free_below ^= bit


def is_strongly_stable(monos: Iterable[Monomial]) -> bool:
    """Closed under every index-lowering move; vacuously true for the empty set."""
    monos = set(monos)
    common_degree(monos)
    masks = {u.mask for u in monos}
    for u in monos:
        for v in borel_reductions(u):
            if v.mask not in masks:
                return False
    return True


def is_stable(monos: Iterable[Monomial]) -> bool:
    """Closed under lowering the largest index only."""
    monos = set(monos)
    common_degree(monos)
    masks = {u.mask for u in monos}
    for u in monos:
        j = u.max_index
        if j == 0:
            continue
        free_below = ~u.mask & ((1 << (j - 1)) - 1)
        moved_base = u.mask ^ (1 << (j - 1))
        while free_below:
            bit = free_below & -free_below
            if (moved_base | bit) not in masks:
                return False
            free_below ^= bit
    return True


def sign_exponent(u: Monomial, j: int) -> int:
    """Number of indices of u strictly below j (exponent of the insertion sign)."""
    if j < 1:
        raise ContractViolation(f"variable index out of range: {j}")
    return (u.mask & ((1 << (j - 1)) - 1)).bit_count()
