"""Shared helpers: a naive brute-force oracle that shares no code with the search module."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from crossint.family import SetFamily, full_layer
from crossint.properties import are_cross_intersecting, contains_clique, is_t_intersecting


def all_subfamilies(layer: SetFamily):
    masks = layer.masks
    for r in range(len(masks) + 1):
        for combo in combinations(masks, r):
            yield SetFamily._trusted(layer.universe_n, layer.k, combo)


def naive_companion(F: SetFamily, k: int) -> SetFamily:
    """Largest k-uniform family cross-intersecting F, found by direct filtering."""
    layer = full_layer(F.universe_n, k)
    keep = [g for g in layer.masks if are_cross_intersecting(F, SetFamily._trusted(F.universe_n, k, [g]))]
    return SetFamily._trusted(F.universe_n, k, keep)


def brute_pair_max(n, kf, kg, f_ok, nonempty_f=False, nonempty_g=False):
    """max |F| + |G| over F in C([n],kf) with f_ok(F), G cross-intersecting F (G unconstrained otherwise)."""
    best = None
    for F in all_subfamilies(full_layer(n, kf)):
        if nonempty_f and not len(F):
            continue
        if not f_ok(F):
            continue
        G = naive_companion(F, kg)
        if nonempty_g and not len(G):
            continue
        val = len(F) + len(G)
        best = val if best is None or val > best else best
    return best


def conjecture_ok(k, t, s):
    def ok(F):
        return is_t_intersecting(F, t + 1) and contains_clique(F, k + t + s)
    return ok


def random_family(rng: random.Random, n: int, k: int, density: float | None = None) -> SetFamily:
    layer = full_layer(n, k).masks
    p = rng.random() if density is None else density
    return SetFamily._trusted(n, k, [m for m in layer if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240611)
