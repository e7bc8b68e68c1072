"""Exact maximisation of |F| + |G| under each theorem's hypotheses.

Only one family (the *driving* family) is enumerated.  Its best partner is
always the companion: every set of the partner's universe that meets all
driving members.  The driving family is searched by branch and bound over
a lex-ordered candidate list, including a candidate before excluding it;
:func:`exhaustive` enumerates all 2^c subfamilies instead and serves
as the independent oracle.

Ties between maximisers are broken by branch order: the witness is the
first maximiser met when candidates are taken in lex order and included
before excluded.  Equivalently, reading the inclusion vector with the first
candidate as the most significant bit, the witness has the largest vector.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Optional

from .family import SetFamily, k_subset_masks
from .params import ParamSet, PreconditionError, SizeGuardError, Theorem
from .shifting import is_shifted

DEFAULT_MAX_CANDIDATES = 24
GUARD_ENV = "CROSSINT_MAX_CANDIDATES"

SEARCHABLE = (
    Theorem.HM_PAIR,
    Theorem.FT_PAIR,
    Theorem.FRANKL_I,
    Theorem.FRANKL_II,
    Theorem.CONJECTURE,
    Theorem.MAIN2,
    Theorem.MAIN6,
    Theorem.H,
)


def max_candidates() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_CANDIDATES
    try:
        return int(raw)
    except ValueError:
        raise SizeGuardError(f"{GUARD_ENV}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class Problem:
    """A search instance reduced to masks.

    The driving family must contain ``forced``, may add any subset of
    ``candidates`` and must be ``pairwise_t``-intersecting.  The partner is
    the companion of the driving family inside ``pool``.
    """

    n: int
    drive_k: int
    candidates: tuple[int, ...]
    forced: tuple[int, ...] = ()
    pairwise_t: int = 0
    pool: tuple[int, ...] = ()
    partner_k: Optional[int] = None  # None: single-family objective
    drive_nonempty: bool = False
    partner_nonempty: bool = False
    drive_side: str = "F"


def _trace_filter(masks: list[int], m: int, at_least: int) -> list[int]:
    prefix = (1 << m) - 1
    return [x for x in masks if (x & prefix).bit_count() >= at_least]


def _finish(n, drive_k, raw_cands, forced, t, pool, partner_k, **flags) -> Problem:
    forced_set = set(forced)
    for i, a in enumerate(forced):
        for b in forced[i + 1 :]:
            if (a & b).bit_count() < t:
                raise PreconditionError("forced members are not pairwise intersecting enough")
    cands = [
        c
        for c in raw_cands
        if c not in forced_set and all((c & f).bit_count() >= t for f in forced)
    ]
    return Problem(
        n=n,
        drive_k=drive_k,
        candidates=tuple(cands),
        forced=tuple(forced),
        pairwise_t=t,
        pool=tuple(pool),
        partner_k=partner_k,
        **flags,
    )


def build_problem(params: ParamSet) -> Problem:
    """Derive the driving family's candidate list for a theorem instance.

    Where the clique-containment hypothesis is present, both sides are first
    cut down to the sets whose trace on the clique's ground set is large
    enough; this is lossless because any other set would break the
    intersection conditions against some clique member.
    """
    tid = params.theorem_id
    p = params.values()
    n, k = p["n"], p["k"]
    if tid is Theorem.HM_PAIR:
        layer = k_subset_masks(n, k)
        return _finish(n, k, layer, [], 0, layer, k, drive_nonempty=True, partner_nonempty=True)
    if tid is Theorem.FT_PAIR:
        return _finish(
            n, k, k_subset_masks(n, k), [], 0, k_subset_masks(n, p["l"]), p["l"],
            drive_nonempty=True, partner_nonempty=True,
        )
    if tid in (Theorem.FRANKL_I, Theorem.FRANKL_II):
        t = p["t"]
        strict = tid is Theorem.FRANKL_II
        return _finish(
            n, k + t, k_subset_masks(n, k + t), [], t + 1 if strict else t, k_subset_masks(n, k), k,
            drive_nonempty=strict,
        )
    if tid is Theorem.CONJECTURE:
        t, s = p["t"], p["s"]
        c = k + t + s
        cands = _trace_filter(k_subset_masks(n, k + t), c, t + s + 1)
        pool = _trace_filter(k_subset_masks(n, k), c, s + 1)
        return _finish(n, k + t, cands, k_subset_masks(c, k + t), t + 1, pool, k)
    if tid is Theorem.MAIN2:
        t, s, m = p["t"], p["s"], p["m"]
        mm = min(m, n)
        cands = _trace_filter(k_subset_masks(n, k + t), mm, t + s + 1)
        pool = _trace_filter(k_subset_masks(n, k), mm, s + 1)
        return _finish(n, k + t, cands, [], t, pool, k)
    if tid is Theorem.MAIN6:
        l, s = p["l"], p["s"]  # noqa: E741
        c = l + s
        cands = _trace_filter(k_subset_masks(n, l), c, s + 1)
        pool = _trace_filter(k_subset_masks(n, k), c, s + 1)
        return _finish(n, l, cands, k_subset_masks(c, l), 1, pool, k, drive_side="G")
    if tid is Theorem.H:
        m = p["m"]
        return _finish(n, k, k_subset_masks(n, k), k_subset_masks(m, k), 1, [], None)
    raise PreconditionError(f"no search is defined for {tid}; expected one of {[x.value for x in SEARCHABLE]}")


@dataclass(frozen=True)
class ConstraintSpec:
    """A theorem instance together with its derived search problem."""

    params: ParamSet
    problem: Problem = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "problem", build_problem(self.params))

    @classmethod
    def of(cls, theorem_id: str | Theorem, **values: int) -> "ConstraintSpec":
        return cls(ParamSet(theorem_id, **values))

    @property
    def theorem_id(self) -> Theorem:
        return self.params.theorem_id

    @property
    def candidate_count(self) -> int:
        return len(self.problem.candidates)


@dataclass
class SearchReport:
    theorem: str
    params: dict
    max_sum: Optional[int]
    witness_F: Optional[SetFamily]
    witness_G: Optional[SetFamily]
    nodes_explored: int
    pruned: int
    elapsed: float
    candidates: int
    method: str

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "theorem": self.theorem,
            "params": self.params,
            "method": self.method,
            "candidates": self.candidates,
            "max_sum": self.max_sum,
            "witness_F": None if self.witness_F is None else self.witness_F.as_lists(),
            "witness_G": None if self.witness_G is None else self.witness_G.as_lists(),
            "nodes_explored": self.nodes_explored,
            "pruned": self.pruned,
        }
        if timing:
            d["elapsed_us"] = int(self.elapsed * 1_000_000)
        return d


class _Tables:
    """Per-candidate conflict and kill masks shared by both search routes."""

    def __init__(self, prob: Problem) -> None:
        cands = prob.candidates
        self.c = len(cands)
        t = prob.pairwise_t
        self.conflict = [0] * self.c
        if t > 0:
            for i, a in enumerate(cands):
                for j in range(i + 1, self.c):
                    if (a & cands[j]).bit_count() < t:
                        self.conflict[i] |= 1 << j
                        self.conflict[j] |= 1 << i
        pool = prob.pool
        self.pair = prob.partner_k is not None
        self.pool_full = (1 << len(pool)) - 1
        self.kill = [0] * self.c
        self.base_killed = 0
        if self.pair:
            for i, a in enumerate(cands):
                km = 0
                for g, b in enumerate(pool):
                    if not a & b:
                        km |= 1 << g
                self.kill[i] = km
            for f in prob.forced:
                for g, b in enumerate(pool):
                    if not f & b:
                        self.base_killed |= 1 << g
        self.n_forced = len(prob.forced)


def _guard(prob: Problem, limit: Optional[int]) -> None:
    cap = max_candidates() if limit is None else limit
    if len(prob.candidates) > cap:
        raise SizeGuardError(
            f"{len(prob.candidates)} free candidates exceed the guard of {cap} (set {GUARD_ENV} to override)"
        )


def _families(prob: Problem, chosen: list[int], killed: int) -> tuple[SetFamily, Optional[SetFamily]]:
    drive = SetFamily._trusted(prob.n, prob.drive_k, list(prob.forced) + [prob.candidates[i] for i in chosen])
    if prob.partner_k is None:
        return drive, None
    partner = [b for g, b in enumerate(prob.pool) if not killed >> g & 1]
    return drive, SetFamily._trusted(prob.n, prob.partner_k, partner)


def _report(prob, label, params, best, chosen, killed, nodes, pruned, t0, method) -> SearchReport:
    if best < 0:
        wf = wg = None
        best_val = None
    else:
        drive, partner = _families(prob, chosen, killed)
        wf, wg = (partner, drive) if prob.drive_side == "G" else (drive, partner)
        best_val = best
    return SearchReport(
        theorem=label,
        params=params,
        max_sum=best_val,
        witness_F=wf,
        witness_G=wg,
        nodes_explored=nodes,
        pruned=pruned,
        elapsed=time.perf_counter() - t0,
        candidates=len(prob.candidates),
        method=method,
    )


def branch_and_bound(prob: Problem, shifted_only: bool = False) -> tuple[int, list[int], int, int, int]:
    """Return (best value, chosen candidate indices, partner kill mask, nodes, prunes)."""
    tb = _Tables(prob)
    conflict, kill, pool_full, pair = tb.conflict, tb.kill, tb.pool_full, tb.pair
    n_forced = tb.n_forced
    best = -1
    best_chosen: list[int] = []
    best_killed = 0
    nodes = 0
    pruned = 0
    chosen: list[int] = []

    def visit(allowed: int, killed: int) -> None:
        nonlocal best, best_chosen, best_killed, nodes, pruned
        nodes += 1
        size = n_forced + len(chosen)
        comp = pool_full & ~killed
        if pair and prob.partner_nonempty and not comp:
            pruned += 1
            return
        if not allowed:
            if prob.drive_nonempty and size == 0:
                return
            value = size + comp.bit_count() if pair else size
            if value > best:
                if shifted_only and not is_shifted(_families(prob, chosen, killed)[0]):
                    return
                best, best_chosen, best_killed = value, list(chosen), killed
            return
        ub = size + allowed.bit_count()
        if pair:
            # |S| - |N(S)| <= |allowed| - |M| for any matching M between
            # allowed candidates and the sets they would kill.
            used = 0
            matched = 0
            a = allowed
            while a:
                low = a & -a
                a ^= low
                avail = kill[low.bit_length() - 1] & comp & ~used
                if avail:
                    used |= avail & -avail
                    matched += 1
            ub += comp.bit_count() - matched
        if ub <= best:
            pruned += 1
            return
        low = allowed & -allowed
        j = low.bit_length() - 1
        chosen.append(j)
        visit((allowed ^ low) & ~conflict[j], killed | kill[j])
        chosen.pop()
        visit(allowed ^ low, killed)

    visit((1 << tb.c) - 1, tb.base_killed)
    return best, best_chosen, best_killed, nodes, pruned


def _half_tables(indices: list[int], tb: _Tables):
    """All subsets of ``indices`` (first index as most significant bit).

    Returns parallel lists indexed by local mask: validity, union of
    conflicts, union of kills, size, and global candidate-index mask.
    """
    h = len(indices)
    size = 1 << h
    valid = [True] * size
    conf = [0] * size
    kills = [0] * size
    count = [0] * size
    glob = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        prev = mask ^ low
        j = indices[h - low.bit_length()]
        valid[mask] = valid[prev] and not conf[prev] >> j & 1
        conf[mask] = conf[prev] | tb.conflict[j]
        kills[mask] = kills[prev] | tb.kill[j]
        count[mask] = count[prev] + 1
        glob[mask] = glob[prev] | 1 << j
    return valid, conf, kills, count, glob


def exhaustive(prob: Problem) -> tuple[int, list[int], int, int]:
    """Plain 2^c enumeration: (best value, chosen indices, kill mask, families visited)."""
    tb = _Tables(prob)
    c = tb.c
    hi_idx = list(range(0, (c + 1) // 2))
    lo_idx = list(range((c + 1) // 2, c))
    hv, hc, hk, hn, hg = _half_tables(hi_idx, tb)
    lv, lc, lk, ln, lg = _half_tables(lo_idx, tb)
    pool_full, pair, base = tb.pool_full, tb.pair, tb.base_killed
    best = -1
    best_pair = (0, 0)
    best_killed = 0
    visited = 0
    for a in range(len(hv) - 1, -1, -1):
        if not hv[a]:
            visited += len(lv)
            continue
        ca, ka, na = hc[a], hk[a] | base, hn[a] + tb.n_forced
        for b in range(len(lv) - 1, -1, -1):
            visited += 1
            if not lv[b] or ca & lg[b]:
                continue
            size = na + ln[b]
            if prob.drive_nonempty and size == 0:
                continue
            if pair:
                killed = ka | lk[b]
                comp = pool_full & ~killed
                if prob.partner_nonempty and not comp:
                    continue
                value = size + comp.bit_count()
            else:
                killed = 0
                value = size
            if value > best:
                best, best_pair, best_killed = value, (a, b), killed
    chosen = sorted(
        [j for j in range(c) if (hg[best_pair[0]] | lg[best_pair[1]]) >> j & 1]
    ) if best >= 0 else []
    return best, chosen, best_killed, visited


def _run(prob: Problem, label: str, params: dict, oracle: bool, shifted_only: bool, limit: Optional[int]):
    _guard(prob, limit)
    t0 = time.perf_counter()
    if oracle:
        if shifted_only:
            raise PreconditionError("the exhaustive oracle does not support shifted-only mode")
        best, chosen, killed, visited = exhaustive(prob)
        return _report(prob, label, params, best, chosen, killed, visited, 0, t0, "exhaustive")
    best, chosen, killed, nodes, pruned = branch_and_bound(prob, shifted_only)
    method = "branch_and_bound_shifted" if shifted_only else "branch_and_bound"
    return _report(prob, label, params, best, chosen, killed, nodes, pruned, t0, method)


def max_constrained_sum(
    spec: ConstraintSpec,
    oracle: bool = False,
    shifted_only: bool = False,
    limit: Optional[int] = None,
) -> SearchReport:
    """Exact maximum of |F| + |G| (or |F| for ``h``) under the hypotheses encoded in ``spec``.

    ``oracle=True`` swaps branch and bound for the plain 2^c enumeration.
    ``limit`` overrides the candidate guard for this call.
    """
    return _run(spec.problem, spec.theorem_id.value, spec.params.values(), oracle, shifted_only, limit)


def max_cross_sum(
    n: int,
    k: int,
    l: int,  # noqa: E741
    require_nonempty: bool = True,
    oracle: bool = False,
    limit: Optional[int] = None,
) -> SearchReport:
    """Maximum of |F| + |G| over cross-intersecting F in C([n],k), G in C([n],l).

    With ``require_nonempty`` both families must be non-empty.
    """
    if not (k >= 0 and l >= 0 and n >= k + l):
        raise PreconditionError(f"cross sum needs n >= k+l, got n={n}, k={k}, l={l}")
    prob = _finish(
        n, k, k_subset_masks(n, k), [], 0, k_subset_masks(n, l), l,
        drive_nonempty=require_nonempty, partner_nonempty=require_nonempty,
    )
    return _run(prob, "cross", {"n": n, "k": k, "l": l}, oracle, False, limit)
