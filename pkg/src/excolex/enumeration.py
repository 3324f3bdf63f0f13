"""Exhaustive streams of strongly stable sets and ideals at desk scale.

A degree component is strongly stable exactly when it is down-closed for the
index-lowering moves, and ascending mask order is a linear extension of that
order. So a depth-first walk that may include an element only once all its
one-move reductions are in produces every down-set exactly once, with no
post-filtering.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .ideals import MonomialIdeal, component_masks
from .monomials import Monomial, borel_reductions, iter_degree_masks


def _reduction_masks(mask: int) -> tuple[int, ...]:
    return tuple(v.mask for v in borel_reductions(Monomial(mask)))


def enumerate_strongly_stable_sets(n: int, d: int) -> Iterator[tuple[Monomial, ...]]:
    """Every nonempty strongly stable set of degree d over e_1..e_n, once each.

    Yields tuples sorted in decreasing revlex order; the stream order is
    deterministic.
    """
    elems = list(iter_degree_masks(n, d))
    preds = [_reduction_masks(m) for m in elems]

    def walk(idx: int, chosen: set[int], ordered: list[int]):
        if idx == len(elems):
            if ordered:
                yield tuple(Monomial(m) for m in ordered)
            return
        yield from walk(idx + 1, chosen, ordered)
        mask = elems[idx]
        if all(p in chosen for p in preds[idx]):
            chosen.add(mask)
            ordered.append(mask)
            yield from walk(idx + 1, chosen, ordered)
            chosen.discard(mask)
            ordered.pop()

    yield from walk(0, set(), [])


def enumerate_strongly_stable_supersets(
    n: int,
    d: int,
    base: Iterable[Monomial],
    max_extra: int | None = None,
) -> Iterator[tuple[Monomial, ...]]:
    """Strongly stable degree-d sets containing ``base`` (assumed down-closed).

    The base itself is yielded first. ``max_extra`` caps how many monomials
    beyond the base may be added.
    """
    base_masks = {u.mask for u in base}
    elems = [m for m in iter_degree_masks(n, d) if m not in base_masks]
    preds = [_reduction_masks(m) for m in elems]

    def emit(extra: list[int]) -> tuple[Monomial, ...]:
        return tuple(Monomial(m) for m in sorted(base_masks | set(extra)))

    def walk(idx: int, chosen: set[int], ordered: list[int]):
        if idx == len(elems):
            yield emit(ordered)
            return
        yield from walk(idx + 1, chosen, ordered)
        if max_extra is not None and len(ordered) >= max_extra:
            return
        mask = elems[idx]
        if all(p in base_masks or p in chosen for p in preds[idx]):
            chosen.add(mask)
            ordered.append(mask)
            yield from walk(idx + 1, chosen, ordered)
            chosen.discard(mask)
            ordered.pop()

    yield from walk(0, set(), [])


def enumerate_strongly_stable_ideals(
    n: int,
    max_degrees: int = 2,
    max_extra: int | None = None,
    degree_pairs: Iterable[tuple[int, int]] | None = None,
) -> Iterator[MonomialIdeal]:
    """Strongly stable ideals over e_1..e_n with at most two generator degrees.

    Single-degree ideals come first (each strongly stable set is its own
    minimal generating set), then for each degree pair d1 < d2 every strongly
    stable degree-d1 set is extended by every strongly stable degree-d2
    superset of its multiples, the new monomials becoming the d2 generators.
    Distinct choices give distinct minimal generating sets, so the stream is
    duplicate-free. ``max_extra`` caps the number of degree-d2 generators;
    ``degree_pairs`` restricts which (d1, d2) are visited.
    """
    if max_degrees < 1:
        return
    if degree_pairs is None:
        for d in range(1, n + 1):
            for mset in enumerate_strongly_stable_sets(n, d):
                yield MonomialIdeal(n, mset)
    if max_degrees < 2:
        return
    pairs = (
        [(d1, d2) for d1 in range(1, n + 1) for d2 in range(d1 + 1, n + 1)]
        if degree_pairs is None
        else sorted(set(degree_pairs))
    )
    for d1, d2 in pairs:
        if not 1 <= d1 < d2 <= n:
            continue
        for mset in enumerate_strongly_stable_sets(n, d1):
            gen_masks = [u.mask for u in mset]
            comp = component_masks(gen_masks, n, d2)
            comp_set = set(comp)
            base = [Monomial(m) for m in comp]
            for sup in enumerate_strongly_stable_supersets(
                n, d2, base, max_extra=max_extra
            ):
                extra = [u for u in sup if u.mask not in comp_set]
                if not extra:
                    continue
                yield MonomialIdeal(n, list(mset) + extra)
