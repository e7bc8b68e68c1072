"""Replay one step of the induction on n for a concrete pair of families.

The pair is shifted (with the same shifts applied to both), split on the
largest element n into links and deletions, and every claim the inductive
step relies on is checked on the actual families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bounds import binom, conjecture_bound, main6_bound, restricted_universe_bound
from .family import SetFamily, link_and_deletion
from .params import ParamSet, PreconditionError, Theorem
from .properties import (
    clique_witness,
    cross_intersecting_witness,
    t_intersecting_witness,
    trace_witness,
)
from .shifting import shift_together

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Assertion:
    name: str
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class ReplayReport:
    theorem: str
    params: dict
    shift_changed: bool = False
    assertions: list[Assertion] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(a.status != FAIL for a in self.assertions)

    @property
    def hypotheses_ok(self) -> bool:
        return all(a.status != FAIL for a in self.assertions if a.name.startswith("hypothesis"))

    def status(self, name: str) -> Optional[str]:
        for a in self.assertions:
            if a.name == name:
                return a.status
        return None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "shift_changed": self.shift_changed,
            "ok": self.ok,
            "assertions": [a.to_dict() for a in self.assertions],
        }


def _check(report: ReplayReport, name: str, witness, detail_ok: str = "") -> None:
    if witness is None:
        report.assertions.append(Assertion(name, PASS, detail_ok))
    else:
        report.assertions.append(Assertion(name, FAIL, f"witness {witness}"))


def _compare(report: ReplayReport, name: str, lhs: int, rhs: int) -> None:
    status = PASS if lhs <= rhs else FAIL
    report.assertions.append(Assertion(name, status, f"{lhs} <= {rhs}"))


def _equal(report: ReplayReport, name: str, lhs: int, rhs: int) -> None:
    report.assertions.append(Assertion(name, PASS if lhs == rhs else FAIL, f"{lhs} = {rhs}"))


def _skip(report: ReplayReport, name: str, why: str) -> None:
    report.assertions.append(Assertion(name, SKIP, why))


def _layout(params: ParamSet) -> dict:
    """Uniformities, trace window and trace thresholds for each supported result."""
    p = params.values()
    tid = params.theorem_id
    n, k = p["n"], p["k"]
    if tid is Theorem.CONJECTURE:
        t, s = p["t"], p["s"]
        return dict(kf=k + t, kg=k, window=k + t + s, f_trace=t + s + 1, g_trace=s + 1, f_t=t + 1,
                    clique_on="F", clique_m=k + t + s, base=2 * k + t)
    if tid is Theorem.MAIN2:
        t, s, m = p["t"], p["s"], p["m"]
        return dict(kf=k + t, kg=k, window=min(m, n), f_trace=t + s + 1, g_trace=s + 1, f_t=t,
                    clique_on=None, clique_m=None, base=2 * k + t)
    if tid is Theorem.MAIN6:
        l, s = p["l"], p["s"]  # noqa: E741
        return dict(kf=k, kg=l, window=l + s, f_trace=s + 1, g_trace=s + 1, f_t=0,
                    clique_on="G", clique_m=l + s, base=k + l)
    if tid is Theorem.FRANKL_I:
        t = p["t"]
        return dict(kf=k + t, kg=k, window=None, f_trace=0, g_trace=0, f_t=t,
                    clique_on=None, clique_m=None, base=2 * k + t)
    raise PreconditionError(f"induction replay supports frankl_i, conjecture, main2 and main6, not {tid}")


def induction_replay(F: SetFamily, G: SetFamily, params: ParamSet) -> ReplayReport:
    """Check the inductive step on a concrete pair (F, G).

    Hypothesis failures are recorded as failing ``hypothesis:*`` assertions
    and the remaining checks are skipped.
    """
    tid = params.theorem_id
    lay = _layout(params)
    p = params.values()
    n = p["n"]
    report = ReplayReport(tid.value, p)

    if F.universe_n != n or G.universe_n != n:
        raise PreconditionError(f"families must live on [1, {n}]")
    if F.k != lay["kf"] or G.k != lay["kg"]:
        raise PreconditionError(f"expected F {lay['kf']}-uniform and G {lay['kg']}-uniform, got {F.k} and {G.k}")

    w = lay["window"]
    _check(report, "hypothesis: cross-intersecting", cross_intersecting_witness(F, G))
    if lay["f_t"]:
        _check(report, f"hypothesis: F is {lay['f_t']}-intersecting", t_intersecting_witness(F, lay["f_t"]))
    if tid is Theorem.MAIN6:
        _check(report, "hypothesis: G is intersecting", t_intersecting_witness(G, 1))
    if lay["clique_on"]:
        fam = F if lay["clique_on"] == "F" else G
        _check(report, f"hypothesis: {lay['clique_on']} contains all {fam.k}-subsets of [{lay['clique_m']}]",
               clique_witness(fam, lay["clique_m"]))
    if tid is Theorem.MAIN2:
        _check(report, f"hypothesis: |F ∩ [{w}]| >= {lay['f_trace']}", trace_witness(F, w, lay["f_trace"]))
        _check(report, f"hypothesis: |G ∩ [{w}]| >= {lay['g_trace']}", trace_witness(G, w, lay["g_trace"]))
    if not report.hypotheses_ok:
        _skip(report, "induction step", "hypotheses violated")
        return report

    if w is not None and tid is not Theorem.MAIN2:
        # trace bounds that the hypotheses force (they justify the search pruning)
        _check(report, f"trace: |F ∩ [{w}]| >= {lay['f_trace']}", trace_witness(F, w, lay["f_trace"]))
        _check(report, f"trace: |G ∩ [{w}]| >= {lay['g_trace']}", trace_witness(G, w, lay["g_trace"]))

    Fs, Gs = shift_together([F, G])
    report.shift_changed = (Fs != F) or (Gs != G)
    _check(report, "shifted: cross-intersecting", cross_intersecting_witness(Fs, Gs))
    if lay["f_t"]:
        _check(report, f"shifted: F is {lay['f_t']}-intersecting", t_intersecting_witness(Fs, lay["f_t"]))
    if lay["clique_on"]:
        fam = Fs if lay["clique_on"] == "F" else Gs
        _check(report, "shifted: clique kept", clique_witness(fam, lay["clique_m"]))
    if w is not None:
        _check(report, "shifted: F trace kept", trace_witness(Fs, w, lay["f_trace"]))
        _check(report, "shifted: G trace kept", trace_witness(Gs, w, lay["g_trace"]))

    F_in, F_out = link_and_deletion(Fs, n)
    G_in, G_out = link_and_deletion(Gs, n)
    _equal(report, "partition: |F| = |F(n)| + |F(not n)|", len(Fs), len(F_in) + len(F_out))
    _equal(report, "partition: |G| = |G(n)| + |G(not n)|", len(Gs), len(G_in) + len(G_out))

    # link lemma: the links at n stay cross-intersecting (and t-intersecting above the base case)
    if n >= lay["base"]:
        _check(report, "link lemma: F(n), G(n) cross-intersecting", cross_intersecting_witness(F_in, G_in))
    else:
        _skip(report, "link lemma: F(n), G(n) cross-intersecting", f"needs n >= {lay['base']}")
    if lay["f_t"]:
        name = f"link lemma: F(n) is {lay['f_t']}-intersecting"
        if n > lay["base"]:
            _check(report, name, t_intersecting_witness(F_in, lay["f_t"]))
        else:
            _skip(report, name, f"needs n > {lay['base']}")

    # traces carried down one level
    if w is None:
        pass
    elif n > w:
        _check(report, "carry: F(not n) trace", trace_witness(F_out, w, lay["f_trace"]))
        _check(report, "carry: G(not n) trace", trace_witness(G_out, w, lay["g_trace"]))
        _check(report, "carry: F(n) trace", trace_witness(F_in, w, lay["f_trace"]))
        _check(report, "carry: G(n) trace", trace_witness(G_in, w, lay["g_trace"]))
    else:
        _skip(report, "carry: traces", f"needs n > {w}")
    if lay["clique_on"]:
        fam = F_out if lay["clique_on"] == "F" else G_out
        if n > lay["clique_m"]:
            _check(report, "carry: clique inside deletion", clique_witness(fam, lay["clique_m"]))
        else:
            _skip(report, "carry: clique inside deletion", f"needs n > {lay['clique_m']}")

    _level_bounds(report, tid, p, lay, len(F_out) + len(G_out), len(F_in) + len(G_in))
    return report


def _level_bounds(report: ReplayReport, tid: Theorem, p: dict, lay: dict, out_sum: int, in_sum: int) -> None:
    """Per-level inequalities; each is asserted only when the smaller instance is valid."""
    n, k = p["n"], p["k"]
    if n <= lay["base"]:
        _skip(report, "level bound: deletion", f"base case n = {lay['base']}")
        _skip(report, "level bound: link", f"base case n = {lay['base']}")
        return
    if tid is Theorem.FRANKL_I:
        _compare(report, "level bound: deletion", out_sum, binom(n - 1, k))
        if k - 1 >= 1:
            _compare(report, "level bound: link", in_sum, binom(n - 1, k - 1))
        else:
            _skip(report, "level bound: link", "smaller instance has k = 0")
        return
    s = p["s"]
    if tid is Theorem.CONJECTURE:
        _compare(report, "level bound: deletion", out_sum, conjecture_bound(n - 1, k, p["t"], s).value)
        window = lay["window"]
        sub_ok = k - 1 >= s + 1
    elif tid is Theorem.MAIN2:
        t, m = p["t"], p["m"]
        _compare(report, "level bound: deletion", out_sum, restricted_universe_bound(n - 1, k, m, s).value)
        window = m
        sub_ok = k - 1 >= s + 1 and m > k - 1 + t + s
    else:
        _compare(report, "level bound: deletion", out_sum, main6_bound(n - 1, k, p["l"], s).value)
        window = lay["window"]
        sub_ok = p["l"] - 1 >= s + 1
    if sub_ok:
        _compare(report, "level bound: link", in_sum, restricted_universe_bound(n - 1, k - 1, window, s).value)
    else:
        _skip(report, "level bound: link", "smaller instance is a base case (k = s+1 or l = s+1)")
