"""Bitmask-backed subsets of [n] and k-uniform families.

Element ``i`` of the ground set [1, n] is stored in bit ``i - 1``.  Families
keep their members as plain ints internally; :class:`ElementSet` is the
public, immutable view of one member.
"""

from __future__ import annotations

import functools
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_UNIVERSE = 64


def _elements(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length())
        bits ^= low
    return out


def _mask(elements: Iterable[int]) -> int:
    bits = 0
    for e in elements:
        bits |= 1 << (e - 1)
    return bits


def lex_less(a: int, b: int) -> bool:
    """True if mask ``a`` precedes ``b``: min(a ^ b) lies in ``a``."""
    d = a ^ b
    return bool(d) and bool(a & d & -d)


def lex_key(bits: int) -> tuple[int, ...]:
    # Agrees with lex_less on sets of equal size.
    return tuple(_elements(bits))


@functools.total_ordering
class ElementSet:
    """An immutable subset of [1, universe_n]."""

    __slots__ = ("universe_n", "bits")

    def __init__(self, universe_n: int, bits: int = 0) -> None:
        if not 0 <= universe_n <= MAX_UNIVERSE:
            raise ValueError(f"universe size {universe_n} outside [0, {MAX_UNIVERSE}]")
        if bits < 0 or bits >> universe_n:
            raise ValueError(f"bitmask {bits:#b} has bits outside [1, {universe_n}]")
        object.__setattr__(self, "universe_n", universe_n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    @property
    def elements(self) -> list[int]:
        return _elements(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(_elements(self.bits))

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 1 <= x <= self.universe_n and bool(self.bits >> (x - 1) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.universe_n == other.universe_n and self.bits == other.bits

    def __lt__(self, other: "ElementSet") -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return lex_less(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.universe_n, self.bits))

    def __repr__(self) -> str:
        return f"ElementSet({{{', '.join(map(str, self))}}}, n={self.universe_n})"

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(max(self.universe_n, other.universe_n), self.bits & other.bits)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(max(self.universe_n, other.universe_n), self.bits | other.bits)


def make_set(elements: Sequence[int], n: int) -> ElementSet:
    """Build the subset of [1, n] holding exactly ``elements``.

    Raises ValueError for out-of-range or repeated elements.
    """
    seen = set()
    for e in elements:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise ValueError(f"element {e!r} outside [1, {n}]")
        if e in seen:
            raise ValueError(f"duplicate element {e}")
        seen.add(e)
    return ElementSet(n, _mask(elements))


class SetFamily:
    """A k-uniform family over [1, universe_n], sorted in lex order.

    Members may be given as ElementSets, element iterables or raw masks;
    duplicates are dropped.
    """

    __slots__ = ("universe_n", "k", "masks", "_lookup")

    def __init__(self, universe_n: int, k: int, members: Iterable = ()) -> None:
        if not 0 <= universe_n <= MAX_UNIVERSE:
            raise ValueError(f"universe size {universe_n} outside [0, {MAX_UNIVERSE}]")
        if not 0 <= k <= universe_n:
            raise ValueError(f"uniformity k={k} outside [0, {universe_n}]")
        self.universe_n = universe_n
        self.k = k
        masks = set()
        for m in members:
            if isinstance(m, ElementSet):
                if m.universe_n != universe_n:
                    raise ValueError(f"member {m} has universe {m.universe_n}, expected {universe_n}")
                bits = m.bits
            elif isinstance(m, int):
                bits = m
                if bits < 0 or bits >> universe_n:
                    raise ValueError(f"mask {bits:#b} outside [1, {universe_n}]")
            else:
                bits = make_set(list(m), universe_n).bits
            if bits.bit_count() != k:
                raise ValueError(f"member {_elements(bits)} does not have size {k}")
            masks.add(bits)
        self.masks: tuple[int, ...] = tuple(sorted(masks, key=lex_key))
        self._lookup = frozenset(masks)

    @classmethod
    def _trusted(cls, universe_n: int, k: int, masks: Iterable[int]) -> "SetFamily":
        # Skips per-member validation; callers guarantee k-uniform masks in range.
        fam = cls.__new__(cls)
        ms = set(masks)
        fam.universe_n = universe_n
        fam.k = k
        fam.masks = tuple(sorted(ms, key=lex_key))
        fam._lookup = frozenset(ms)
        return fam

    @property
    def members(self) -> tuple[ElementSet, ...]:
        return tuple(ElementSet(self.universe_n, b) for b in self.masks)

    def mask_set(self) -> frozenset[int]:
        return self._lookup

    def as_lists(self) -> list[list[int]]:
        return [_elements(b) for b in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, ElementSet):
            return item.universe_n == self.universe_n and item.bits in self._lookup
        if isinstance(item, int):
            return item in self._lookup
        try:
            return _mask(item) in self._lookup  # type: ignore[arg-type]
        except TypeError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return (self.universe_n, self.k, self.masks) == (other.universe_n, other.k, other.masks)

    def __hash__(self) -> int:
        return hash((self.universe_n, self.k, self.masks))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.as_lists())
        return f"SetFamily(n={self.universe_n}, k={self.k}, [{body}])"


def k_subset_masks(n: int, k: int) -> list[int]:
    """All k-subsets of [1, n] as masks, in lex order."""
    if k < 0 or k > n:
        return []
    return [_mask(c) for c in combinations(range(1, n + 1), k)]


def k_subsets_lex(n: int, k: int) -> Iterator[ElementSet]:
    """Yield every k-subset of [1, n] in lex order (nothing when k > n)."""
    if k < 0 or k > n:
        return
    for c in combinations(range(1, n + 1), k):
        yield ElementSet(n, _mask(c))


def full_layer(n: int, k: int) -> SetFamily:
    return SetFamily._trusted(n, k, k_subset_masks(n, k))


def rank_lex(s: ElementSet | Sequence[int], n: int) -> int:
    """0-based position of the k-set ``s`` in the lex order of C([n], k)."""
    elems = sorted(s)
    k = len(elems)
    r = 0
    prev = 0
    for pos, e in enumerate(elems):
        if not prev < e <= n:
            raise ValueError(f"{elems} is not a subset of [1, {n}]")
        # skip every set that agrees so far but has a smaller element here
        for x in range(prev + 1, e):
            r += comb(n - x, k - pos - 1)
        prev = e
    return r


def unrank_lex(r: int, n: int, k: int) -> ElementSet:
    """Inverse of :func:`rank_lex`."""
    total = comb(n, k) if 0 <= k <= n else 0
    if not 0 <= r < total:
        raise ValueError(f"rank {r} outside [0, {total})")
    elems = []
    x = 1
    for pos in range(k):
        while True:
            block = comb(n - x, k - pos - 1)
            if r < block:
                break
            r -= block
            x += 1
        elems.append(x)
        x += 1
    return ElementSet(n, _mask(elems))


def link_and_deletion(F: SetFamily, i: int) -> tuple[SetFamily, SetFamily]:
    """Split ``F`` on element ``i``.

    Returns ``(link, deletion)``: the members containing ``i`` with ``i``
    removed (uniformity k-1) and the members avoiding ``i``.  Both keep the
    universe of ``F``.
    """
    if not 1 <= i <= F.universe_n:
        raise ValueError(f"element {i} outside [1, {F.universe_n}]")
    bit = 1 << (i - 1)
    link = [m ^ bit for m in F.masks if m & bit]
    deletion = [m for m in F.masks if not m & bit]
    return (
        SetFamily._trusted(F.universe_n, max(F.k - 1, 0), link),
        SetFamily._trusted(F.universe_n, F.k, deletion),
    )


# -- text format -----------------------------------------------------------
# First line ``n=<int> k=<int>``; then one member per line as ascending
# comma-separated elements.  The empty set is written ``-``.


def format_family(F: SetFamily) -> str:
    lines = [f"n={F.universe_n} k={F.k}"]
    for s in F.as_lists():
        lines.append(",".join(map(str, s)) if s else "-")
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> SetFamily:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty family file")
    header = dict(part.split("=", 1) for part in lines[0].split())
    try:
        n, k = int(header["n"]), int(header["k"])
    except (KeyError, ValueError):
        raise ValueError(f"bad header line {lines[0]!r}, expected 'n=<int> k=<int>'") from None
    members = []
    for ln in lines[1:]:
        if ln == "-":
            members.append(ElementSet(n, 0))
            continue
        elems = [int(x) for x in ln.split(",")]
        if elems != sorted(elems):
            raise ValueError(f"elements not ascending: {ln!r}")
        members.append(make_set(elems, n))
    return SetFamily(n, k, members)
