"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible under
``pytest -s`` or ``-v``) and then asserts.  Run directly with
``python tests/test_acceptance.py`` to get only the summary lines.
Tolerances are exact (0) everywhere; all quantities are integers.
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from itertools import combinations
from math import comb
from types import SimpleNamespace

import pytest

from crossint.bounds import (
    classic_bound,
    conjecture_bound,
    main6_bound,
    restricted_universe_bound,
    verify_recursions,
)
from crossint.constructions import construct
from crossint.family import SetFamily, full_layer
from crossint.params import PreconditionError, Theorem
from crossint.properties import (
    are_cross_intersecting,
    contains_clique,
    is_t_intersecting,
    trace_witness,
)
from crossint.search import ConstraintSpec, branch_and_bound, build_problem, max_constrained_sum
from crossint.shifting import is_shifted, shift_family, shift_to_canonical, shift_together

CANDIDATE_CAP_1 = 22
CANDIDATE_CAP_9 = 18
SEED = 20240611


def _emit(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    capture = getattr(_emit, "capsys", None)
    if capture is not None:
        with capture.disabled():
            print("\n" + line)
    else:
        print(line)


@pytest.fixture(autouse=True)
def _unbuffered(capsys):
    _emit.capsys = capsys
    yield
    _emit.capsys = None


# -- criterion 1 ---------------------------------------------------------------

def conjecture_cells():
    for k in (2, 3):
        for t in (0, 1):
            for s in range(k):
                for n in (2 * k + t, 2 * k + t + 1, 2 * k + t + 2):
                    yield n, k, t, s


def criterion_1():
    t0 = time.perf_counter()
    checked, skipped, bad = 0, [], []
    for n, k, t, s in conjecture_cells():
        spec = ConstraintSpec.of("conjecture", n=n, k=k, t=t, s=s)
        if spec.candidate_count > CANDIDATE_CAP_1:
            skipped.append((n, k, t, s))
            continue
        got = max_constrained_sum(spec, limit=CANDIDATE_CAP_1).max_sum
        want = conjecture_bound(n, k, t, s).value
        checked += 1
        if got != want:
            bad.append(((n, k, t, s), got, want))
    elapsed = time.perf_counter() - t0
    ok = not bad and checked > 0 and elapsed < 300
    return ok, f"{checked} cells exact, {len(skipped)} above {CANDIDATE_CAP_1} candidates, mismatches={bad}, {elapsed:.2f}s"


# -- criterion 2 ---------------------------------------------------------------

def _g0_size(n, k, c, s):
    # direct count of k-sets with at least s+1 elements in [c]
    return sum(comb(c, i) * comb(n - c, k - i) for i in range(s + 1, k + 1))


def criterion_2():
    t0 = time.perf_counter()
    cells, bad = 0, []
    for k in range(1, 7):
        for t in range(0, 7):
            for s in range(0, min(k - 1, 6) + 1):
                for n in range(2 * k + t, 41):
                    c = k + t + s
                    total = comb(c, k + t) + _g0_size(n, k, c, s)
                    cells += 1
                    if total != conjecture_bound(n, k, t, s).value:
                        bad.append((n, k, t, s))
    arithmetic_seconds = time.perf_counter() - t0

    # enumeration and property checks where the families are small enough
    checked = 0
    for k in range(1, 5):
        for t in range(0, 3):
            for s in range(0, k):
                for n in range(2 * k + t, 11):
                    f0 = construct("f0", n=n, k=k, t=t, s=s)
                    g0 = construct("g0", n=n, k=k, t=t, s=s)
                    if len(f0) + len(g0) != conjecture_bound(n, k, t, s).value:
                        bad.append(("enum", n, k, t, s))
                    if not (is_t_intersecting(f0, t + 1) and contains_clique(f0, k + t + s)
                            and are_cross_intersecting(f0, g0)):
                        bad.append(("props", n, k, t, s))
                    checked += 1
    ok = not bad and arithmetic_seconds < 10
    return ok, (f"{cells} cells exact in {arithmetic_seconds:.2f}s; {checked} cells (n<=10, k<=4, t<=2) "
                f"enumerated with property checks; failures={bad[:5]}")


# -- criterion 3 ---------------------------------------------------------------

CLASSIC_CELLS = [
    ("hm_pair", dict(n=4, k=2)), ("hm_pair", dict(n=5, k=2)), ("hm_pair", dict(n=6, k=3)),
    ("ft_pair", dict(n=5, k=3, l=2)), ("ft_pair", dict(n=6, k=3, l=2)),
    ("frankl_ii", dict(n=5, k=2, t=1)),
]


def criterion_3():
    t0 = time.perf_counter()
    rows = []
    for tid, p in CLASSIC_CELLS:
        got = max_constrained_sum(ConstraintSpec.of(tid, **p)).max_sum
        want = classic_bound(tid, **p).value
        rows.append((tid, tuple(p.values()), got, want))
    elapsed = time.perf_counter() - t0
    ok = all(g == w for *_, g, w in rows) and elapsed < 120
    return ok, f"{[(r[0], r[1], r[2]) for r in rows]} all equal to formula={ok}, {elapsed:.2f}s"


# -- criterion 4 ---------------------------------------------------------------

RESTRICTED_CELLS = [(6, 2, 3, 1, 0), (7, 2, 3, 1, 0), (7, 3, 4, 1, 0), (6, 2, 4, 1, 1)]


def _unvalidated_main2_max(n, k, m, s, t):
    """Search the same constraint system without the parameter validation (diagnostic only)."""
    fake = SimpleNamespace(theorem_id=Theorem.MAIN2, values=lambda: dict(n=n, k=k, t=t, s=s, m=m))
    prob = build_problem(fake)
    return branch_and_bound(prob)[0]


def criterion_4():
    results = []
    ok = True
    for n, k, m, s, t in RESTRICTED_CELLS:
        try:
            spec = ConstraintSpec.of("main2", n=n, k=k, m=m, s=s, t=t)
        except PreconditionError as e:
            ok = False
            diag = _unvalidated_main2_max(n, k, m, s, t)
            bound = restricted_universe_bound(n, k, m, s).value
            results.append(f"({n},{k},{m},{s},{t}) rejected [{e}]; unvalidated max {diag} vs bound {bound}")
            continue
        got = max_constrained_sum(spec).max_sum
        want = restricted_universe_bound(n, k, m, s).value
        ok = ok and got == want
        results.append(f"({n},{k},{m},{s},{t}) {got} vs {want}")
    return ok, "; ".join(results)


# -- criterion 5 ---------------------------------------------------------------

MAIN6_CELLS = [(5, 3, 2, 1), (6, 3, 2, 1), (6, 2, 2, 1), (7, 3, 2, 1)]


def criterion_5():
    rows, ok = [], True
    for n, k, ell, s in MAIN6_CELLS:
        got = max_constrained_sum(ConstraintSpec.of("main6", n=n, k=k, l=ell, s=s)).max_sum
        want = main6_bound(n, k, ell, s).value
        F = construct("main6_F", n=n, k=k, l=ell, s=s)
        G = construct("main6_G", n=n, k=k, l=ell, s=s)
        pair_ok = (are_cross_intersecting(F, G) and is_t_intersecting(G, 1)
                   and contains_clique(G, ell + s) and len(F) + len(G) == want)
        ok = ok and got == want and pair_ok
        rows.append(f"({n},{k},{ell},{s}) search {got} bound {want} pair {len(F) + len(G)}")
    return ok, "; ".join(rows)


# -- criterion 6 ---------------------------------------------------------------

H_CELLS = [(6, 3, 3), (6, 4, 3), (7, 4, 3), (8, 5, 3)]  # (n, m, k)


def criterion_6():
    rows, ok = [], True
    for n, m, k in H_CELLS:
        rep = max_constrained_sum(ConstraintSpec.of("h", n=n, k=k, m=m))
        want = classic_bound("h", n=n, k=k, m=m).value
        valid = is_t_intersecting(rep.witness_F, 1) and contains_clique(rep.witness_F, m)
        ok = ok and rep.max_sum == want and valid
        rows.append(f"h({n},{m},{k}) search {rep.max_sum} formula {want}")
    return ok, "; ".join(rows)


# -- criterion 7 ---------------------------------------------------------------

def _dominated_closed(F: SetFamily) -> bool:
    members = {tuple(s) for s in F.as_lists()}
    others = [B for B in combinations(range(1, F.universe_n + 1), F.k) if B not in members]
    for A in members:
        for B in others:
            if all(b <= a for a, b in zip(A, B, strict=True)):
                return False
    return True


def _greedy_t_intersecting(r, n, k, t):
    chosen = []
    for a in r.sample(full_layer(n, k).masks, comb(n, k)):
        if r.random() < 0.6 and all((a & c).bit_count() >= t for c in chosen):
            chosen.append(a)
    return SetFamily._trusted(n, k, chosen)


def criterion_7():
    r = random.Random(SEED)
    violations = {}

    def bump(name):
        violations[name] = violations.get(name, 0) + 1

    for _ in range(1000):
        n = r.randint(2, 10)
        k = r.randint(1, min(4, n - 1))
        mode = r.random()
        if mode < 0.4:
            F = SetFamily._trusted(n, k, [a for a in full_layer(n, k).masks if r.random() < r.random()])
        else:
            F = _greedy_t_intersecting(r, n, k, r.choice((1, 2)))
        i = r.randint(1, n - 1)
        j = r.randint(i + 1, n)
        S = shift_family(F, i, j)
        if len(S) != len(F):
            bump("size")
        for t in (1, 2):
            if is_t_intersecting(F, t) and not is_t_intersecting(S, t):
                bump(f"{t}-intersecting")
        m = r.randint(1, n)
        c = min(((a & ((1 << m) - 1)).bit_count() for a in F.masks), default=0)
        if trace_witness(S, m, c) is not None:
            bump("trace")
        kg = r.randint(1, min(4, n - 1))
        G = SetFamily._trusted(n, kg, [g for g in full_layer(n, kg).masks
                                       if all(g & f for f in F.masks) and r.random() < 0.7])
        if not are_cross_intersecting(shift_family(F, i, j), shift_family(G, i, j)):
            bump("cross-intersecting (single shift)")
        Fs, Gs = shift_together([F, G])
        if not are_cross_intersecting(Fs, Gs):
            bump("cross-intersecting (joint canonical)")
        C = shift_to_canonical(F)
        if not is_shifted(C) or len(C) != len(F):
            bump("fixed point")
        if not _dominated_closed(C):
            bump("domination closure")
    total = sum(violations.values())
    return total == 0, f"1000 families, violations={violations or 0}"


# -- criterion 8 ---------------------------------------------------------------

def criterion_8():
    t0 = time.perf_counter()
    counts = {"a": 0, "b": 0, "c": 0}
    failures = []
    for n in range(1, 61):
        for k in range(1, 11):
            for s in range(0, min(k - 1, 10) + 1):
                if n > k:
                    for m in range(1, n + 1):
                        counts["a"] += 1
                        if not verify_recursions("a", n=n, k=k, m=m, s=s):
                            failures.append(("a", n, k, m, s))
                for t in range(0, 11):
                    if n > 2 * k + t:
                        counts["b"] += 1
                        if not verify_recursions("b", n=n, k=k, t=t, s=s):
                            failures.append(("b", n, k, t, s))
            for ell in range(1, k + 1):
                for s in range(0, ell):
                    if n > k + ell:
                        counts["c"] += 1
                        if not verify_recursions("c", n=n, k=k, l=ell, s=s):
                            failures.append(("c", n, k, ell, s))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 5
    return ok, f"instances {counts}, failures={failures[:5]}, {elapsed:.2f}s"


# -- criterion 9 ---------------------------------------------------------------

def search_cells():
    cells = [("conjecture", dict(n=n, k=k, t=t, s=s)) for n, k, t, s in conjecture_cells()]
    cells += CLASSIC_CELLS
    cells += [("frankl_i", dict(n=5, k=2, t=1)), ("frankl_i", dict(n=6, k=2, t=0)), ("frankl_ii", dict(n=6, k=2, t=1))]
    cells += [("main2", dict(n=n, k=k, m=m, s=s, t=t)) for n, k, m, s, t in
              [(6, 2, 4, 1, 0), (7, 2, 4, 1, 0), (7, 3, 5, 1, 0), (6, 2, 5, 1, 1), (6, 2, 4, 0, 1), (7, 3, 4, 0, 0)]]
    cells += [("main6", dict(n=n, k=k, l=ell, s=s)) for n, k, ell, s in MAIN6_CELLS]
    cells += [("h", dict(n=n, k=k, m=m)) for n, m, k in H_CELLS]
    return cells


def criterion_9():
    compared, bad = 0, []
    for tid, p in search_cells():
        spec = ConstraintSpec.of(tid, **p)
        if spec.candidate_count > CANDIDATE_CAP_9:
            continue
        bb = max_constrained_sum(spec)
        ex = max_constrained_sum(spec, oracle=True)
        compared += 1
        if (bb.max_sum, bb.witness_F, bb.witness_G) != (ex.max_sum, ex.witness_F, ex.witness_G):
            bad.append((tid, p))
    return not bad and compared > 0, f"{compared} cells, value and witness identical; mismatches={bad}"


# -- criterion 10 --------------------------------------------------------------

GRID_ARGS = ["verify-grid", "--theorem", "conjecture", "--n", "4..7", "--k", "2..3", "--t", "0..1", "--s", "0..2"]


def _grid_run(jobs: int) -> tuple[int, str]:
    env = dict(os.environ)
    env.pop("CROSSINT_MAX_CANDIDATES", None)
    proc = subprocess.run([sys.executable, "-m", "crossint", *GRID_ARGS, "--jobs", str(jobs)],
                          capture_output=True, text=True, env=env, check=False)
    body = "\n".join(line.rsplit(",", 1)[0] for line in proc.stdout.splitlines())
    return proc.returncode, body


def criterion_10():
    runs = [_grid_run(1) for _ in range(3)] + [_grid_run(4)]
    codes = {c for c, _ in runs}
    bodies = {b for _, b in runs}
    rows = len(runs[0][1].splitlines()) - 1
    ok = len(bodies) == 1 and codes == {0} and rows > 0
    return ok, f"3 serial runs + 1 run with 4 workers, {rows} rows, distinct outputs={len(bodies)}, exit codes={sorted(codes)}"


CRITERIA = [
    (1, "conjecture certification", criterion_1),
    (2, "tightness of the extremal pair", criterion_2),
    (3, "classic bounds vs brute force", criterion_3),
    (4, "restricted-universe certification", criterion_4),
    (5, "cross-intersecting with clique in G certification", criterion_5),
    (6, "h(n,m,k) certification", criterion_6),
    (7, "shifting property suite", criterion_7),
    (8, "recursion identities", criterion_8),
    (9, "oracle equivalence", criterion_9),
    (10, "verify-grid determinism", criterion_10),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn):
    ok, detail = fn()
    _emit(number, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        ok, detail = fn()
        _emit(number, title, ok, detail)
        failed += not ok
    raise SystemExit(1 if failed else 0)
