"""Cross-intersecting set families: exact bounds, shifting and exhaustive verification."""

from .bounds import (
    BoundValue,
    binom,
    classic_bound,
    conjecture_bound,
    corollary_bound,
    evaluate,
    main6_bound,
    restricted_universe_bound,
    verify_recursions,
)
from .constructions import companion, construct
from .family import (
    ElementSet,
    SetFamily,
    format_family,
    full_layer,
    k_subsets_lex,
    link_and_deletion,
    make_set,
    parse_family,
    rank_lex,
    unrank_lex,
)
from .params import ParamSet, PreconditionError, SizeGuardError, Theorem
from .properties import (
    are_cross_intersecting,
    contains_clique,
    is_star_subfamily,
    is_t_intersecting,
    trace_profile,
)
from .replay import ReplayReport, induction_replay
from .search import ConstraintSpec, SearchReport, max_constrained_sum, max_cross_sum
from .shifting import is_shifted, shift_family, shift_to_canonical, shift_together

__version__ = "0.1.0"

__all__ = [
    "BoundValue",
    "ConstraintSpec",
    "ElementSet",
    "ParamSet",
    "PreconditionError",
    "ReplayReport",
    "SearchReport",
    "SetFamily",
    "SizeGuardError",
    "Theorem",
    "are_cross_intersecting",
    "binom",
    "classic_bound",
    "companion",
    "conjecture_bound",
    "construct",
    "contains_clique",
    "corollary_bound",
    "evaluate",
    "format_family",
    "full_layer",
    "induction_replay",
    "is_shifted",
    "is_star_subfamily",
    "is_t_intersecting",
    "k_subsets_lex",
    "link_and_deletion",
    "main6_bound",
    "make_set",
    "max_constrained_sum",
    "max_cross_sum",
    "parse_family",
    "rank_lex",
    "restricted_universe_bound",
    "shift_family",
    "shift_to_canonical",
    "shift_together",
    "trace_profile",
    "unrank_lex",
    "verify_recursions",
]
