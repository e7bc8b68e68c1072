"""The (i, j)-shift and reduction of families to shifted ones."""

from __future__ import annotations

from typing import Iterable

from .family import SetFamily


def _check_pair(n: int, i: int, j: int) -> None:
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got i={i}, j={j}")


def shift_masks(masks: Iterable[int], i: int, j: int) -> list[int]:
    """Apply s_{i,j} to a collection of masks (all members at once)."""
    current = masks if isinstance(masks, (set, frozenset)) else set(masks)
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    out = []
    for m in current:
        if m & bj and not m & bi:
            moved = m ^ bj ^ bi
            if moved not in current:
                out.append(moved)
                continue
        out.append(m)
    return out


def _shift_in_place(fam: set[int], i: int, j: int) -> bool:
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    moves = [m for m in fam if m & bj and not m & bi and (m ^ bj ^ bi) not in fam]
    for m in moves:
        fam.remove(m)
        fam.add(m ^ bj ^ bi)
    return bool(moves)


def shift_family(F: SetFamily, i: int, j: int) -> SetFamily:
    """Return s_{i,j}(F): replace j by i wherever that creates a new member."""
    _check_pair(F.universe_n, i, j)
    return SetFamily._trusted(F.universe_n, F.k, shift_masks(F.mask_set(), i, j))


def shift_pairs(n: int) -> list[tuple[int, int]]:
    """Row-major scan order (1,2), (1,3), ..., (1,n), (2,3), ..."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def shift_to_canonical(F: SetFamily) -> SetFamily:
    """Shift until no s_{i,j} changes F.

    Pairs are scanned row-major and the scan restarts from (1, 2) after any
    change, so the result is reproducible (though it depends on this order).
    """
    return shift_together([F])[0]


def shift_together(families: list[SetFamily]) -> list[SetFamily]:
    """Canonical shifting applied to several families with the same s_{i,j} steps.

    Cross-intersection between the inputs survives because every shift is
    applied to all of them simultaneously.
    """
    if not families:
        return []
    n = families[0].universe_n
    if any(f.universe_n != n for f in families):
        raise ValueError("families must share a universe")
    current = [set(f.mask_set()) for f in families]
    pairs = shift_pairs(n)
    changed = True
    while changed:
        changed = False
        for i, j in pairs:
            for fam in current:
                changed |= _shift_in_place(fam, i, j)
            if changed:
                break
    return [SetFamily._trusted(n, f.k, masks) for f, masks in zip(families, current, strict=True)]


def shift_violation(F: SetFamily) -> tuple[list[int], int, int] | None:
    """First (member, i, j) with i < j, i not in F, j in F and the shifted set missing."""
    lookup = F.mask_set()
    for m in F.masks:
        for j in range(2, F.universe_n + 1):
            bj = 1 << (j - 1)
            if not m & bj:
                continue
            for i in range(1, j):
                bi = 1 << (i - 1)
                if not m & bi and (m ^ bj ^ bi) not in lookup:
                    return (_elems(m), i, j)
    return None


def is_shifted(F: SetFamily) -> bool:
    return shift_violation(F) is None


def _elems(m: int) -> list[int]:
    return [b + 1 for b in range(m.bit_length()) if m >> b & 1]


def shift_potential(F: SetFamily) -> int:
    """Sum of all elements of all members; strictly drops on every effective shift."""
    return sum(sum(_elems(m)) for m in F.masks)
