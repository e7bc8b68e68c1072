"""Integer parameter sets and the validity rules of each result."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional


class PreconditionError(ValueError):
    """A parameter inequality required by a formula or theorem fails."""


class SizeGuardError(RuntimeError):
    """A search was refused because its candidate list is too large."""


FIELDS = ("n", "k", "t", "s", "l", "m")


class Theorem(str, Enum):
    EKR = "ekr"
    HM_INTERSECTING = "hm_intersecting"
    HM_PAIR = "hm_pair"
    FT_PAIR = "ft_pair"
    FRANKL_I = "frankl_i"
    FRANKL_II = "frankl_ii"
    H = "h"
    CONJECTURE = "conjecture"
    MAIN2 = "main2"  # restricted-universe cross-intersecting bound
    MAIN6 = "main6"  # clique-in-G variant
    COROLLARY = "corollary"
    RESTRICTED = "restricted"  # |R(n,k,m)| with explicit s, no extremal claim

    def __str__(self) -> str:
        return self.value


# Each rule: (description shown on failure, predicate over the field dict).
Rule = tuple[str, Callable[[dict], bool], Callable[[dict], str]]


def _ge(lhs: str, rhs: str, f_l, f_r) -> Rule:
    return (
        f"{lhs} >= {rhs}",
        lambda p: f_l(p) >= f_r(p),
        lambda p: f"{lhs}={f_l(p)}, {rhs}={f_r(p)}",
    )


def _gt(lhs: str, rhs: str, f_l, f_r) -> Rule:
    return (
        f"{lhs} > {rhs}",
        lambda p: f_l(p) > f_r(p),
        lambda p: f"{lhs}={f_l(p)}, {rhs}={f_r(p)}",
    )


def _v(name):
    return lambda p: p[name]


_n, _k, _t, _s, _l, _m = (_v(x) for x in "nktslm")
_zero = lambda p: 0  # noqa: E731
_one = lambda p: 1  # noqa: E731
_two = lambda p: 2  # noqa: E731

REQUIRED: dict[Theorem, tuple[str, ...]] = {
    Theorem.EKR: ("n", "k"),
    Theorem.HM_INTERSECTING: ("n", "k"),
    Theorem.HM_PAIR: ("n", "k"),
    Theorem.FT_PAIR: ("n", "k", "l"),
    Theorem.FRANKL_I: ("n", "k", "t"),
    Theorem.FRANKL_II: ("n", "k", "t"),
    Theorem.H: ("n", "k", "m"),
    Theorem.CONJECTURE: ("n", "k", "t", "s"),
    Theorem.MAIN2: ("n", "k", "t", "s", "m"),
    Theorem.MAIN6: ("n", "k", "l", "s"),
    Theorem.COROLLARY: ("n", "k", "l"),
    Theorem.RESTRICTED: ("n", "k", "m", "s"),
}

RULES: dict[Theorem, list[Rule]] = {
    Theorem.EKR: [_ge("k", "2", _k, _two), _ge("n", "2k", _n, lambda p: 2 * p["k"])],
    Theorem.HM_INTERSECTING: [_ge("k", "2", _k, _two), _ge("n", "2k", _n, lambda p: 2 * p["k"])],
    Theorem.HM_PAIR: [_ge("k", "1", _k, _one), _ge("n", "2k", _n, lambda p: 2 * p["k"])],
    Theorem.FT_PAIR: [
        _ge("l", "2", _l, _two),
        _ge("k", "l", _k, _l),
        _ge("n", "k+l", _n, lambda p: p["k"] + p["l"]),
    ],
    Theorem.FRANKL_I: [
        _ge("t", "0", _t, _zero),
        _ge("k", "1", _k, _one),
        _ge("n", "2k+t", _n, lambda p: 2 * p["k"] + p["t"]),
    ],
    Theorem.FRANKL_II: [
        _ge("t", "0", _t, _zero),
        _ge("k", "1", _k, _one),
        _ge("n", "2k+t", _n, lambda p: 2 * p["k"] + p["t"]),
    ],
    Theorem.H: [
        _ge("m", "k", _m, _k),
        _gt("2k", "m", lambda p: 2 * p["k"], _m),
        _ge("n", "2k", _n, lambda p: 2 * p["k"]),
    ],
    Theorem.CONJECTURE: [
        _ge("t", "0", _t, _zero),
        _ge("s", "0", _s, _zero),
        _ge("k", "s+1", _k, lambda p: p["s"] + 1),
        _ge("n", "2k+t", _n, lambda p: 2 * p["k"] + p["t"]),
    ],
    Theorem.MAIN2: [
        _ge("t", "0", _t, _zero),
        _ge("s", "0", _s, _zero),
        _ge("k", "s+1", _k, lambda p: p["s"] + 1),
        _ge("n", "2k+t", _n, lambda p: 2 * p["k"] + p["t"]),
        _gt("m", "k+t+s", _m, lambda p: p["k"] + p["t"] + p["s"]),
    ],
    Theorem.MAIN6: [
        _ge("s", "0", _s, _zero),
        _ge("l", "s+1", _l, lambda p: p["s"] + 1),
        _ge("k", "l", _k, _l),
        _ge("n", "k+l", _n, lambda p: p["k"] + p["l"]),
    ],
    Theorem.COROLLARY: [
        _ge("l", "1", _l, _one),
        _ge("k", "l", _k, _l),
        _ge("n", "k+l", _n, lambda p: p["k"] + p["l"]),
    ],
    Theorem.RESTRICTED: [
        _ge("n", "0", _n, _zero),
        _ge("k", "0", _k, _zero),
        _ge("m", "0", _m, _zero),
        _ge("s", "0", _s, _zero),
    ],
}


@dataclass(frozen=True)
class ParamSet:
    """Parameters of one theorem instance, checked at construction.

    Fields a theorem does not use must be left as None.
    """

    theorem_id: Theorem
    n: Optional[int] = None
    k: Optional[int] = None
    t: Optional[int] = None
    s: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    m: Optional[int] = None

    def __post_init__(self) -> None:
        try:
            tid = Theorem(self.theorem_id)
        except ValueError:
            raise PreconditionError(f"unknown theorem/formula id {self.theorem_id!r}") from None
        object.__setattr__(self, "theorem_id", tid)
        required = REQUIRED[tid]
        for name in FIELDS:
            value = getattr(self, name)
            if name in required and value is None:
                raise PreconditionError(f"{tid}: parameter {name} is required")
            if name not in required and value is not None:
                raise PreconditionError(f"{tid}: parameter {name} is not used")
            if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
                raise PreconditionError(f"{tid}: parameter {name}={value!r} is not an integer")
        p = self.values()
        for text, pred, show in RULES[tid]:
            if not pred(p):
                raise PreconditionError(f"{tid}: {text} violated ({show(p)})")

    def values(self) -> dict[str, int]:
        return {f: getattr(self, f) for f in FIELDS if getattr(self, f) is not None}

    def to_dict(self) -> dict:
        return {"theorem": self.theorem_id.value, **self.values()}
