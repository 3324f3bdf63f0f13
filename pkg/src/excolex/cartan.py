"""Homology oracle for graded Betti numbers of arbitrary monomial ideals.

The residue field is resolved by divided powers; tensoring with the quotient
by the ideal gives chain spaces spanned by pairs (surviving monomial, power
multi-index). The differential sends a unit of divided power x_k to a left
multiplication by e_k, with sign (-1)^(number of indices below k); a term dies
when k already divides the monomial or the product lands in the ideal.

Two ways to take ranks of the differentials, both exact by default:

* "strands": the chain spaces split by multidegree, and each strand is
  isomorphic to a complex of subsets of the multidegree's support that avoid
  the ideal. Only the support matters, so 2^n tiny eliminations cover every
  graded piece. This is the default.
* "direct": assemble one sparse +/-1 matrix per (homological, internal)
  degree cell and eliminate it whole. Slower, kept as the cross-check path.

Exact ranks are fraction-free eliminations over the integers; an opt-in prime
field replaces them with modular arithmetic.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Iterator, NamedTuple

from .betti import SUBJECT_IDEAL, SUBJECT_QUOTIENT, BettiTable
from .errors import ContractViolation, OracleTooLarge
from .ideals import MonomialIdeal
from .monomials import Monomial, iter_degree_masks, sign_exponent

DEFAULT_PRIME = 32003
DEFAULT_CELL_CAP = 50_000


class CartanBasisElement(NamedTuple):
    """A surviving monomial paired with a divided-power multi-index."""

    mono: Monomial
    powers: tuple[int, ...]

    @property
    def homological_degree(self) -> int:
        return sum(self.powers)

    @property
    def internal_degree(self) -> int:
        return self.mono.degree + sum(self.powers)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer tuples with the given sum, in ascending lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def chain_space(I: MonomialIdeal, i: int, j: int) -> list[CartanBasisElement]:
    """Ordered basis at homological degree i, internal degree j.

    Pairs (monomial outside the ideal of degree j-i, multi-index summing to i),
    ordered by revlex on the monomial then lex on the multi-index.
    """
    if i < 0 or j < 0:
        raise ContractViolation(f"degrees must be nonnegative, got ({i}, {j})")
    d = j - i
    if d < 0 or d > I.n:
        return []
    survivors = [
        Monomial(m)
        for m in iter_degree_masks(I.n, d)
        if not I.contains(Monomial(m))
    ]
    if not survivors:
        return []
    powers = list(_compositions(i, I.n))
    return [CartanBasisElement(s, a) for s in survivors for a in powers]


def differential(
    elem: CartanBasisElement, I: MonomialIdeal
) -> list[tuple[int, CartanBasisElement]]:
    """The boundary of one basis element, as (sign, element) terms.

    Preserves internal degree and drops homological degree by one. Terms where
    the new index already divides the monomial, or where the product lies in
    the ideal, vanish.
    """
    if elem.homological_degree < 1:
        raise ContractViolation("boundary needs homological degree at least 1")
    mono, powers = elem
    out: list[tuple[int, CartanBasisElement]] = []
    for k, a_k in enumerate(powers, start=1):
        if a_k == 0 or mono.contains(k):
            continue
        grown = mono.with_index(k)
        if I.contains(grown):
            continue
        sign = -1 if sign_exponent(mono, k) & 1 else 1
        lowered = powers[: k - 1] + (a_k - 1,) + powers[k:]
        out.append((sign, CartanBasisElement(grown, lowered)))
    return out


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free elimination.

    One-step Bareiss updates keep everything integral; the pivot of smallest
    magnitude is taken to slow coefficient growth.
    """
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            v = mat[r][col]
            if v and (piv is None or abs(v) < abs(mat[piv][col])):
                piv = r
        if piv is None:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot_row = mat[rank]
        pv = pivot_row[col]
        for r in range(rank + 1, nrows):
            row = mat[r]
            rv = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * pv - rv * pivot_row[c]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int = DEFAULT_PRIME) -> int:
    """Rank over the field with p elements."""
    if p < 2:
        raise ContractViolation(f"field size must be at least 2, got {p}")
    mat = [[v % p for v in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if mat[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot_row = mat[rank]
        inv = pow(pivot_row[col], -1, p)
        for r in range(rank + 1, nrows):
            row = mat[r]
            if not row[col]:
                continue
            factor = row[col] * inv % p
            for c in range(col, ncols):
                row[c] = (row[c] - factor * pivot_row[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


class CartanTables(NamedTuple):
    quotient: BettiTable
    ideal: BettiTable


def _survivor_counts(I: MonomialIdeal) -> list[int]:
    counts = []
    for d in range(I.n + 1):
        counts.append(
            sum(1 for m in iter_degree_masks(I.n, d) if not I.contains(Monomial(m)))
        )
    return counts


def _guard_dimensions(
    I: MonomialIdeal, i_max: int, j_max: int, cap: int
) -> None:
    survivors = _survivor_counts(I)
    for i in range(i_max + 2):
        blocks = comb(I.n + i - 1, i)
        for j in range(j_max + 1):
            d = j - i
            if 0 <= d <= I.n:
                dim = survivors[d] * blocks
                if dim > cap:
                    raise OracleTooLarge(i, j, dim, cap)


def _strand_homology(
    gen_masks: list[int], support: int, rank_fn: Callable[[list[list[int]]], int]
) -> dict[int, int]:
    """Homology dimensions, by subset size, of the non-ideal subsets of one support.

    The boundary raises subset size by one and carries the insertion sign; the
    result depends only on the support, not on the multidegree above it.
    """
    size = support.bit_count()
    levels: list[list[int]] = [[] for _ in range(size + 1)]
    sub = support
    while True:
        if not any(g & sub == g for g in gen_masks):
            levels[sub.bit_count()].append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & support
    for level in levels:
        level.sort()
    out_rank = [0] * (size + 1)
    for d in range(size):
        src, dst = levels[d], levels[d + 1]
        if not src or not dst:
            continue
        position = {mask: r for r, mask in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for cidx, sigma in enumerate(src):
            free = support & ~sigma
            while free:
                bit = free & -free
                free ^= bit
                r = position.get(sigma | bit)
                if r is not None:
                    sign = -1 if (sigma & (bit - 1)).bit_count() & 1 else 1
                    rows[r][cidx] = sign
        out_rank[d] = rank_fn(rows)
    homology: dict[int, int] = {}
    for d in range(size + 1):
        dim = len(levels[d])
        if not dim:
            continue
        incoming = out_rank[d - 1] if d > 0 else 0
        h = dim - out_rank[d] - incoming
        if h:
            homology[d] = h
    return homology


def _betti_by_strands(
    I: MonomialIdeal, i_max: int, j_max: int, rank_fn
) -> dict[tuple[int, int], int]:
    entries: dict[tuple[int, int], int] = {}
    gen_masks = [g.mask for g in I.gens]
    for support in range(1 << I.n):
        homology = _strand_homology(gen_masks, support, rank_fn)
        if not homology:
            continue
        s = support.bit_count()
        if s == 0:
            # only the zero multidegree sits over the empty support
            entries[(0, 0)] = entries.get((0, 0), 0) + homology.get(0, 0)
            continue
        for j in range(s, j_max + 1):
            weight = comb(j - 1, s - 1)  # multidegrees with this support and size j
            for d, h in homology.items():
                i = j - d
                if 0 <= i <= i_max:
                    key = (i, j)
                    entries[key] = entries.get(key, 0) + weight * h
    return {k: v for k, v in entries.items() if v}


def _betti_direct(
    I: MonomialIdeal, i_max: int, j_max: int, rank_fn
) -> dict[tuple[int, int], int]:
    spaces: dict[tuple[int, int], list[CartanBasisElement]] = {}

    def space(i: int, j: int) -> list[CartanBasisElement]:
        key = (i, j)
        if key not in spaces:
            spaces[key] = chain_space(I, i, j)
        return spaces[key]

    ranks: dict[tuple[int, int], int] = {}
    for j in range(j_max + 1):
        for i in range(1, i_max + 2):
            src = space(i, j)
            dst = space(i - 1, j)
            if not src or not dst:
                ranks[(i, j)] = 0
                continue
            position = {elem: r for r, elem in enumerate(dst)}
            rows = [[0] * len(src) for _ in dst]
            for cidx, elem in enumerate(src):
                for sign, target in differential(elem, I):
                    rows[position[target]][cidx] = sign
            ranks[(i, j)] = rank_fn(rows)
    entries: dict[tuple[int, int], int] = {}
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            dim = len(space(i, j))
            if not dim:
                continue
            outgoing = ranks[(i, j)] if i >= 1 else 0
            value = dim - outgoing - ranks[(i + 1, j)]
            if value:
                entries[(i, j)] = value
    return entries


def cartan_betti(
    I: MonomialIdeal,
    i_max: int,
    j_max: int | None = None,
    method: str = "strands",
    prime: int | None = None,
    max_cell_dim: int = DEFAULT_CELL_CAP,
) -> CartanTables:
    """Graded Betti numbers of the quotient, plus the shifted table for the ideal.

    ``i_max`` is the cutoff for the quotient table; the ideal table is the
    standard shift (its row i is the quotient's row i+1), so it reaches
    i_max - 1. Exact rational ranks by default; pass ``prime`` for the modular
    fast path.
    """
    if i_max < 1:
        raise ContractViolation("need i_max >= 1 to report the shifted table")
    if j_max is None:
        j_max = I.n + i_max
    rank_fn = exact_rank if prime is None else (lambda rows: rank_mod_p(rows, prime))
    _guard_dimensions(I, i_max, j_max, max_cell_dim)
    if method == "strands":
        q_entries = _betti_by_strands(I, i_max, j_max, rank_fn)
    elif method == "direct":
        q_entries = _betti_direct(I, i_max, j_max, rank_fn)
    else:
        raise ContractViolation(f"unknown oracle method {method!r}")
    quotient = BettiTable(SUBJECT_QUOTIENT, i_max, q_entries)
    shifted = {
        (i - 1, j): v for (i, j), v in q_entries.items() if i >= 1
    }
    return CartanTables(quotient, BettiTable(SUBJECT_IDEAL, i_max - 1, shifted))
