"""Builders for the named families: stars, cliques, lex segments, extremal pairs."""

from __future__ import annotations

from itertools import islice

from .family import SetFamily, k_subset_masks
from .params import ParamSet, PreconditionError, Theorem

KINDS = ("star", "clique", "lex_segment", "f0", "g0", "restricted", "main6_F", "main6_G")


def _trace_at_least(n: int, k: int, m: int, c: int) -> list[int]:
    prefix = (1 << min(m, n)) - 1
    return [x for x in k_subset_masks(n, k) if (x & prefix).bit_count() >= c]


def _need(params: dict, kind: str, *names: str) -> list[int]:
    missing = [x for x in names if params.get(x) is None]
    if missing:
        raise PreconditionError(f"construct {kind}: missing parameter(s) {', '.join(missing)}")
    extra = sorted(x for x, v in params.items() if v is not None and x not in names)
    if extra:
        raise PreconditionError(f"construct {kind}: unused parameter(s) {', '.join(extra)}")
    return [params[x] for x in names]


def _check_layer(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got k={k}, n={n}")


def construct(kind: str, **params: int) -> SetFamily:
    """Build a named family.

    ======================  =============================  ============================
    kind                    parameters                     members
    ======================  =============================  ============================
    star                    n, k, x                        k-sets containing x
    clique                  n, k, m                        all k-subsets of [m]
    lex_segment             n, k, r                        first r k-sets in lex order
    f0                      n, k, t, s                     all (k+t)-subsets of [k+t+s]
    g0                      n, k, t, s                     k-sets with >= s+1 elements in [k+t+s]
    restricted              n, k, m, s                     k-sets with >= s+1 elements in [m]
    main6_G                 n, k, l, s                     all l-subsets of [l+s]
    main6_F                 n, k, l, s                     k-sets with >= s+1 elements in [l+s]
    ======================  =============================  ============================
    """
    if kind == "star":
        n, k, x = _need(params, kind, "n", "k", "x")
        _check_layer(n, k)
        if not 1 <= x <= n:
            raise PreconditionError(f"star centre x={x} outside [1, {n}]")
        bit = 1 << (x - 1)
        return SetFamily._trusted(n, k, [a for a in k_subset_masks(n, k) if a & bit])
    if kind == "clique":
        n, k, m = _need(params, kind, "n", "k", "m")
        _check_layer(n, k)
        if not k <= m <= n:
            raise PreconditionError(f"clique needs k <= m <= n, got k={k}, m={m}, n={n}")
        return SetFamily._trusted(n, k, k_subset_masks(m, k))
    if kind == "lex_segment":
        n, k, r = _need(params, kind, "n", "k", "r")
        _check_layer(n, k)
        total = len(k_subset_masks(n, k))
        if not 0 <= r <= total:
            raise PreconditionError(f"lex segment length r={r} outside [0, {total}]")
        return SetFamily._trusted(n, k, islice(k_subset_masks(n, k), r))
    if kind in ("f0", "g0"):
        n, k, t, s = _need(params, kind, "n", "k", "t", "s")
        ParamSet(Theorem.CONJECTURE, n=n, k=k, t=t, s=s)
        c = k + t + s
        if kind == "f0":
            return SetFamily._trusted(n, k + t, k_subset_masks(c, k + t))
        return SetFamily._trusted(n, k, _trace_at_least(n, k, c, s + 1))
    if kind == "restricted":
        n, k, m, s = _need(params, kind, "n", "k", "m", "s")
        _check_layer(n, k)
        if m < 0 or s < 0:
            raise PreconditionError(f"restricted needs m, s >= 0, got m={m}, s={s}")
        return SetFamily._trusted(n, k, _trace_at_least(n, k, m, s + 1))
    if kind in ("main6_F", "main6_G"):
        n, k, l, s = _need(params, kind, "n", "k", "l", "s")  # noqa: E741
        ParamSet(Theorem.MAIN6, n=n, k=k, l=l, s=s)
        if kind == "main6_G":
            return SetFamily._trusted(n, l, k_subset_masks(l + s, l))
        return SetFamily._trusted(n, k, _trace_at_least(n, k, l + s, s + 1))
    raise PreconditionError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def companion(F: SetFamily, k_other: int) -> SetFamily:
    """All k_other-subsets of [n] that meet every member of F.

    This is the largest family cross-intersecting with F at that uniformity.
    """
    n = F.universe_n
    if not 0 <= k_other <= n:
        raise ValueError(f"need 0 <= k_other <= {n}, got {k_other}")
    masks = F.masks
    return SetFamily._trusted(n, k_other, [g for g in k_subset_masks(n, k_other) if all(g & f for f in masks)])
