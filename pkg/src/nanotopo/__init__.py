"""Nano topological spaces from rough-set approximations.

Build a space with :func:`build_nano_space`, classify subsets with
:func:`is_open` / :func:`is_closed`, and check the theory exhaustively with
:func:`check_all` and :func:`enumerate_spaces`.
"""

from .classes import (
    ClassKind,
    enumerate_family,
    is_closed,
    is_nowhere_nano_dense,
    is_open,
    nsalpha_witness,
)
from .core_sets import (
    SetFamily,
    Subset,
    Universe,
    complement,
    default_universe,
    difference,
    enumerate_subsets,
    family_fold,
    format_subset,
    intersection,
    is_subset,
    make_universe,
    union,
)
from .errors import NanoError
from .operators import g_closure, g_interior, nsalpha_closure_formula, nsalpha_interior_formula
from .rough_nano import (
    NanoSpace,
    Partition,
    build_nano_space,
    lower_approx,
    make_partition,
    n_closure,
    n_interior,
    upper_approx,
)
from .spacefile import load_space, parse_space
from .verifier import (
    Status,
    TheoremId,
    VerdictReport,
    check_all,
    check_theorem,
    enumerate_spaces,
    mine,
    parse_goal,
)

__all__ = [
    "ClassKind", "NanoError", "NanoSpace", "Partition", "SetFamily", "Status", "Subset",
    "TheoremId", "Universe", "VerdictReport", "build_nano_space", "check_all", "check_theorem",
    "complement", "default_universe", "difference", "enumerate_family", "enumerate_spaces",
    "enumerate_subsets", "family_fold", "format_subset", "g_closure", "g_interior",
    "intersection", "is_closed", "is_nowhere_nano_dense", "is_open", "is_subset",
    "load_space", "lower_approx", "make_partition", "make_universe", "mine", "n_closure",
    "n_interior", "nsalpha_closure_formula", "nsalpha_interior_formula", "nsalpha_witness",
    "parse_goal", "parse_space", "union", "upper_approx",
]
