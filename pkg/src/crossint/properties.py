"""Decision procedures for the hypotheses of the intersection theorems.

Each predicate has a ``*_witness`` twin returning the offending object
(or None when the property holds); the CLI reports those witnesses.
"""

from __future__ import annotations

from .family import SetFamily, _elements, k_subset_masks


def t_intersecting_witness(F: SetFamily, t: int) -> tuple[list[int], list[int]] | None:
    if t <= 0:
        return None
    masks = F.masks
    for a in range(len(masks)):
        ma = masks[a]
        for b in range(a + 1, len(masks)):
            if (ma & masks[b]).bit_count() < t:
                return (_elements(ma), _elements(masks[b]))
    return None


def is_t_intersecting(F: SetFamily, t: int) -> bool:
    """Every two distinct members share >= t elements."""
    return t_intersecting_witness(F, t) is None


def cross_intersecting_witness(F: SetFamily, G: SetFamily) -> tuple[list[int], list[int]] | None:
    if F.universe_n != G.universe_n:
        raise ValueError(f"universe mismatch: {F.universe_n} vs {G.universe_n}")
    for a in F.masks:
        for b in G.masks:
            if not a & b:
                return (_elements(a), _elements(b))
    return None


def are_cross_intersecting(F: SetFamily, G: SetFamily) -> bool:
    return cross_intersecting_witness(F, G) is None


def clique_witness(F: SetFamily, m: int) -> list[int] | None:
    """First k-subset of [m] (lex order) missing from F."""
    if m < F.k:
        raise ValueError(f"clique size m={m} is smaller than k={F.k}")
    if m > F.universe_n:
        raise ValueError(f"clique size m={m} exceeds universe {F.universe_n}")
    lookup = F.mask_set()
    for c in k_subset_masks(m, F.k):
        if c not in lookup:
            return _elements(c)
    return None


def contains_clique(F: SetFamily, m: int) -> bool:
    """True if every k-subset of [m] belongs to F."""
    return clique_witness(F, m) is None


def is_star_subfamily(F: SetFamily) -> int | None:
    """Smallest element common to all members; 1 for the empty family."""
    if not F.masks:
        return 1
    common = (1 << F.universe_n) - 1
    for m in F.masks:
        common &= m
    if not common:
        return None
    return (common & -common).bit_length()


def trace_profile(F: SetFamily, m: int) -> int:
    """min over members of |F ∩ [m]|."""
    if not 1 <= m <= F.universe_n:
        raise ValueError(f"trace size m={m} outside [1, {F.universe_n}]")
    if not F.masks:
        raise ValueError("trace_profile of an empty family is undefined")
    prefix = (1 << m) - 1
    return min((x & prefix).bit_count() for x in F.masks)


def trace_witness(F: SetFamily, m: int, at_least: int) -> list[int] | None:
    """First member whose trace on [m] has fewer than ``at_least`` elements."""
    prefix = (1 << min(m, F.universe_n)) - 1
    for x in F.masks:
        if (x & prefix).bit_count() < at_least:
            return _elements(x)
    return None
