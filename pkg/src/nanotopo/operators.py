"""Kind-interior and kind-closure operators.

Two routes exist for NSα: the family route (fold over the enumerated class,
as in the definitions) and the four-operator formula route. The verifier
checks that they agree everywhere.
"""

from __future__ import annotations

import numpy as np

from .classes import ClassKind, closed_array, family_masks, open_array
from .core_sets import Subset, check_enumerable
from .errors import UniverseMismatch
from .rough_nano import NanoSpace, all_masks, closure_table, interior_table


def _check(s: NanoSpace, c: Subset) -> None:
    if c.universe != s.universe:
        raise UniverseMismatch()


def _open_masks(s, kind):
    if kind is ClassKind.NOpen:
        return s.tau.masks
    check_enumerable(s.n)
    return family_masks(s, kind, "open")


def _closed_masks(s, kind):
    if kind is ClassKind.NOpen:
        return s.closed.masks
    check_enumerable(s.n)
    return family_masks(s, kind, "closed")


def g_interior(s: NanoSpace, kind: ClassKind, c: Subset) -> Subset:
    """Union of all ``kind``-open sets contained in ``c``."""
    _check(s, c)
    x, acc = c.mask, 0
    for d in _open_masks(s, kind):
        if d & ~x == 0:
            acc |= d
    return Subset(s.universe, acc)


def g_closure(s: NanoSpace, kind: ClassKind, c: Subset) -> Subset:
    """Intersection of all ``kind``-closed sets containing ``c``."""
    _check(s, c)
    x, acc = c.mask, s.full_mask
    for d in _closed_masks(s, kind):
        if x & ~d == 0:
            acc &= d
    return Subset(s.universe, acc)


def nsalpha_interior_formula(s: NanoSpace, c: Subset) -> Subset:
    """C ∩ Ncl(Nint(Ncl(Nint(C))))."""
    _check(s, c)
    nint, ncl = s.nint_mask, s.ncl_mask
    x = c.mask
    return Subset(s.universe, x & ncl(nint(ncl(nint(x)))))


def nsalpha_closure_formula(s: NanoSpace, c: Subset) -> Subset:
    """C ∪ Nint(Ncl(Nint(Ncl(C))))."""
    _check(s, c)
    nint, ncl = s.nint_mask, s.ncl_mask
    x = c.mask
    return Subset(s.universe, x | nint(ncl(nint(ncl(x)))))


def kind_interior_table(s: NanoSpace, kind: ClassKind) -> np.ndarray:
    """Family-route interior of every subset, indexed by mask.

    Starts from the open members and ORs each mask's value into its
    supersets one bit at a time, so entry ``x`` ends up as the union of all
    open submasks of ``x``.
    """
    key = ("int_table", kind)
    if key not in s._cache:
        S = all_masks(s)
        t = np.where(open_array(s, kind), S, 0)
        for i in range(s.n):
            v = t.reshape(-1, 2, 1 << i)
            v[:, 1, :] |= v[:, 0, :]
        t.flags.writeable = False
        s._cache[key] = t
    return s._cache[key]


def kind_closure_table(s: NanoSpace, kind: ClassKind) -> np.ndarray:
    """Family-route closure of every subset: AND of all closed supermasks."""
    key = ("cl_table", kind)
    if key not in s._cache:
        S = all_masks(s)
        t = np.where(closed_array(s, kind), S, s.full_mask)
        for i in range(s.n):
            v = t.reshape(-1, 2, 1 << i)
            v[:, 0, :] &= v[:, 1, :]
        t.flags.writeable = False
        s._cache[key] = t
    return s._cache[key]


def nsalpha_interior_formula_table(s: NanoSpace) -> np.ndarray:
    S = all_masks(s)
    I, C = interior_table(s), closure_table(s)
    return S & C[I[C[I]]]


def nsalpha_closure_formula_table(s: NanoSpace) -> np.ndarray:
    S = all_masks(s)
    I, C = interior_table(s), closure_table(s)
    return S | I[C[I[C]]]
