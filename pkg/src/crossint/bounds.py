"""Exact closed-form bounds and the Pascal-type identities behind their inductions.

Everything here is integer arithmetic; binomials follow the convention
C(a, b) = 0 whenever b < 0, a < 0 or a < b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .params import ParamSet, PreconditionError, Theorem


@lru_cache(maxsize=1 << 16)
def binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class BoundValue:
    formula_id: Theorem
    params: ParamSet
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ArithmeticError(f"{self.formula_id} evaluated to negative {self.value}")

    def __int__(self) -> int:
        return self.value

    def to_dict(self) -> dict:
        return {"formula": self.formula_id.value, "params": self.params.values(), "value": self.value}


def _trace_deficit(n: int, k: int, m: int, s: int) -> int:
    """Number of k-subsets of [n] meeting [m] in at most s elements."""
    return sum(binom(m, i) * binom(n - m, k - i) for i in range(s + 1))


def _classic_value(tid: Theorem, p: dict) -> int:
    n, k = p["n"], p["k"]
    if tid is Theorem.EKR:
        return binom(n - 1, k - 1)
    if tid is Theorem.HM_INTERSECTING:
        return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1
    if tid is Theorem.HM_PAIR:
        return binom(n, k) - binom(n - k, k) + 1
    if tid is Theorem.FT_PAIR:
        return binom(n, k) - binom(n - p["l"], k) + 1
    if tid is Theorem.FRANKL_I:
        return binom(n, k)
    if tid is Theorem.FRANKL_II:
        return binom(n, k) - binom(n - k - p["t"], k) + 1
    if tid is Theorem.H:
        m = p["m"]
        return binom(m, k) + sum(binom(m - 1, i - 1) * binom(n - m, k - i) for i in range(m - k + 1, k))
    raise PreconditionError(f"{tid} is not a classic formula")


CLASSIC = (
    Theorem.EKR,
    Theorem.HM_INTERSECTING,
    Theorem.HM_PAIR,
    Theorem.FT_PAIR,
    Theorem.FRANKL_I,
    Theorem.FRANKL_II,
    Theorem.H,
)


def classic_bound(formula_id: str | Theorem, params: ParamSet | None = None, **values: int) -> BoundValue:
    """Evaluate one of the background bounds.

    ``formula_id`` is one of ekr, hm_intersecting, hm_pair, ft_pair,
    frankl_i, frankl_ii, h.  Parameters come either as a ready ParamSet or
    as keyword arguments (``n=6, k=3, m=4``).
    """
    try:
        tid = Theorem(formula_id)
    except ValueError:
        raise PreconditionError(f"unknown formula id {formula_id!r}") from None
    if tid not in CLASSIC:
        raise PreconditionError(f"{tid} is not a classic formula; expected one of {[c.value for c in CLASSIC]}")
    if params is None:
        params = ParamSet(tid, **values)
    elif params.theorem_id is not tid:
        raise PreconditionError(f"params are for {params.theorem_id}, not {tid}")
    return BoundValue(tid, params, _classic_value(tid, params.values()))


def _conjecture_value(n: int, k: int, t: int, s: int) -> int:
    c = k + t + s
    return binom(c, k + t) + binom(n, k) - _trace_deficit(n, k, c, s)


def _restricted_value(n: int, k: int, m: int, s: int) -> int:
    return binom(n, k) - _trace_deficit(n, k, m, s)


def _main6_value(n: int, k: int, l: int, s: int) -> int:  # noqa: E741
    c = l + s
    return binom(c, l) + binom(n, k) - _trace_deficit(n, k, c, s)


def conjecture_bound(n: int, k: int, t: int, s: int) -> BoundValue:
    """C(k+t+s, k+t) + C(n, k) - sum_{i<=s} C(k+t+s, i) C(n-k-t-s, k-i)."""
    params = ParamSet(Theorem.CONJECTURE, n=n, k=k, t=t, s=s)
    return BoundValue(params.theorem_id, params, _conjecture_value(n, k, t, s))


def restricted_universe_bound(n: int, k: int, m: int, s: int) -> BoundValue:
    """C(n, k) - sum_{i<=s} C(m, i) C(n-m, k-i).

    For m <= n this is the number of k-subsets of [n] with at least s+1
    elements in [m].
    """
    params = ParamSet(Theorem.RESTRICTED, n=n, k=k, m=m, s=s)
    return BoundValue(params.theorem_id, params, _restricted_value(n, k, m, s))


def main6_bound(n: int, k: int, l: int, s: int) -> BoundValue:  # noqa: E741
    """C(l+s, l) + C(n, k) - sum_{i<=s} C(l+s, i) C(n-l-s, k-i)."""
    params = ParamSet(Theorem.MAIN6, n=n, k=k, l=l, s=s)
    return BoundValue(params.theorem_id, params, _main6_value(n, k, l, s))


def corollary_bound(n: int, k: int, l: int) -> BoundValue:  # noqa: E741
    """The s = 1 case for shifted non-trivial G; allows l = 1."""
    params = ParamSet(Theorem.COROLLARY, n=n, k=k, l=l)
    value = l + 1 + binom(n, k) - (binom(n - l - 1, k) + (l + 1) * binom(n - l - 1, k - 1))
    return BoundValue(params.theorem_id, params, value)


def evaluate(formula_id: str | Theorem, **values: int) -> BoundValue:
    """Dispatch any formula id with keyword parameters (used by the CLI)."""
    try:
        tid = Theorem(formula_id)
    except ValueError:
        raise PreconditionError(f"unknown formula id {formula_id!r}") from None
    if tid in CLASSIC:
        return classic_bound(tid, **values)
    ParamSet(tid, **values)  # reject missing / extra fields up front
    if tid is Theorem.CONJECTURE:
        return conjecture_bound(values["n"], values["k"], values["t"], values["s"])
    if tid is Theorem.RESTRICTED:
        return restricted_universe_bound(values["n"], values["k"], values["m"], values["s"])
    if tid is Theorem.MAIN2:
        # the restricted-universe theorem's bound is |R(n,k,m)|
        bv = restricted_universe_bound(values["n"], values["k"], values["m"], values["s"])
        return BoundValue(tid, ParamSet(tid, **values), bv.value)
    if tid is Theorem.MAIN6:
        return main6_bound(values["n"], values["k"], values["l"], values["s"])
    if tid is Theorem.COROLLARY:
        return corollary_bound(values["n"], values["k"], values["l"])
    raise PreconditionError(f"no formula for {tid}")


RECURSIONS = ("a", "b", "c")
_IDENTITY_FOR = {
    Theorem.RESTRICTED: "a",
    Theorem.MAIN2: "a",
    Theorem.CONJECTURE: "b",
    Theorem.MAIN6: "c",
}


def verify_recursions(identity: str | Theorem, params: ParamSet | None = None, **values: int) -> bool:
    """Check one of the one-step Pascal identities exactly.

    (a) R(n,k,m,s) = R(n-1,k,m,s) + R(n-1,k-1,m,s)         needs k >= s+1, n > k, m >= 1
    (b) conj(n,k,t,s) = conj(n-1,k,t,s) + R(n-1,k-1,k+t+s,s) needs n > 2k+t
    (c) main6(n,k,l,s) = main6(n-1,k,l,s) + R(n-1,k-1,l+s,s) needs n > k+l

    where R is :func:`restricted_universe_bound`.  ``identity`` is the
    letter or the id of the result whose induction it closes (restricted or
    main2 -> a, conjecture -> b, main6 -> c).
    """
    if params is not None:
        values = {**params.values(), **values}
    if identity not in RECURSIONS:
        try:
            identity = _IDENTITY_FOR[Theorem(identity)]
        except (ValueError, KeyError):
            raise PreconditionError(f"unknown recursion {identity!r}") from None
    if identity == "a":
        n, k, m, s = values["n"], values["k"], values["m"], values["s"]
        if not (s >= 0 and k >= s + 1 and n > k and m >= 1):
            raise PreconditionError(f"(a) needs s >= 0, k >= s+1, n > k, m >= 1; got n={n} k={k} m={m} s={s}")
        lhs = _restricted_value(n, k, m, s)
        rhs = _restricted_value(n - 1, k, m, s) + _restricted_value(n - 1, k - 1, m, s)
        return lhs == rhs
    if identity == "b":
        n, k, t, s = values["n"], values["k"], values["t"], values["s"]
        if not n > 2 * k + t:
            raise PreconditionError(f"(b) needs n > 2k+t; got n={n}, 2k+t={2 * k + t}")
        ParamSet(Theorem.CONJECTURE, n=n, k=k, t=t, s=s)
        lhs = _conjecture_value(n, k, t, s)
        rhs = _conjecture_value(n - 1, k, t, s) + _restricted_value(n - 1, k - 1, k + t + s, s)
        return lhs == rhs
    if identity == "c":
        n, k, l, s = values["n"], values["k"], values["l"], values["s"]  # noqa: E741
        if not n > k + l:
            raise PreconditionError(f"(c) needs n > k+l; got n={n}, k+l={k + l}")
        ParamSet(Theorem.MAIN6, n=n, k=k, l=l, s=s)
        lhs = _main6_value(n, k, l, s)
        rhs = _main6_value(n - 1, k, l, s) + _restricted_value(n - 1, k - 1, l + s, s)
        return lhs == rhs
    raise PreconditionError(f"unknown recursion {identity!r}; expected one of {RECURSIONS}")
