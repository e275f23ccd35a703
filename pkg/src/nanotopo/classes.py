"""Membership in the five weak-open classes and their closed duals."""

from __future__ import annotations

import enum
from typing import Literal

import numpy as np

from .core_sets import SetFamily, Subset, canonical_key, check_enumerable
from .errors import UniverseMismatch
from .rough_nano import NanoSpace, all_masks, closure_table, interior_table

Side = Literal["open", "closed"]


class ClassKind(enum.Enum):
    NOpen = "n"
    NPre = "np"
    NSemi = "ns"
    NAlpha = "na"
    NSemiAlpha = "nsa"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def token(self) -> str:
        """ASCII name used in goal strings and DOT node ids."""
        return _TOKENS[self]

    @classmethod
    def parse(cls, text: str) -> ClassKind:
        t = text.strip()
        for kind in cls:
            if t.lower() == kind.value or t == kind.token or t == kind.label or t == kind.name:
                return kind
        raise ValueError(f"unknown class kind {text!r}")


_LABELS = {
    ClassKind.NOpen: "N",
    ClassKind.NPre: "Np",
    ClassKind.NSemi: "Ns",
    ClassKind.NAlpha: "Nα",
    ClassKind.NSemiAlpha: "NSα",
}
_TOKENS = {
    ClassKind.NOpen: "N",
    ClassKind.NPre: "Np",
    ClassKind.NSemi: "Ns",
    ClassKind.NAlpha: "Na",
    ClassKind.NSemiAlpha: "NSa",
}


def open_mask(s: NanoSpace, kind: ClassKind, x: int) -> bool:
    """Defining inequality of ``kind`` evaluated on a raw mask."""
    nint, ncl = s.nint_mask, s.ncl_mask
    if kind is ClassKind.NOpen:
        return x in s.tau
    if kind is ClassKind.NPre:
        bound = nint(ncl(x))
    elif kind is ClassKind.NSemi:
        bound = ncl(nint(x))
    elif kind is ClassKind.NAlpha:
        bound = nint(ncl(nint(x)))
    elif kind is ClassKind.NSemiAlpha:
        bound = ncl(nint(ncl(nint(x))))
    else:
        raise TypeError(kind)
    return x & ~bound == 0


def nsalpha_closed_formula_mask(s: NanoSpace, x: int) -> bool:
    """Nint(Ncl(Nint(Ncl(C)))) ⊆ C."""
    nint, ncl = s.nint_mask, s.ncl_mask
    return nint(ncl(nint(ncl(x)))) & ~x == 0


def _check(s: NanoSpace, c: Subset) -> None:
    if c.universe != s.universe:
        raise UniverseMismatch()


def is_open(s: NanoSpace, kind: ClassKind, c: Subset) -> bool:
    _check(s, c)
    return open_mask(s, kind, c.mask)


def is_closed(s: NanoSpace, kind: ClassKind, c: Subset) -> bool:
    _check(s, c)
    result = open_mask(s, kind, s.full_mask ^ c.mask)
    if kind is ClassKind.NSemiAlpha:
        assert result == nsalpha_closed_formula_mask(s, c.mask), "closed-form NSα test disagrees"
    return result


def open_array(s: NanoSpace, kind: ClassKind) -> np.ndarray:
    """Boolean membership of every subset (indexed by mask) in the open class."""
    key = ("open", kind)
    if key not in s._cache:
        S = all_masks(s)
        I, C = interior_table(s), closure_table(s)
        if kind is ClassKind.NOpen:
            out = np.zeros(S.shape, dtype=bool)
            out[list(s.tau.masks)] = True
        else:
            if kind is ClassKind.NPre:
                bound = I[C]
            elif kind is ClassKind.NSemi:
                bound = C[I]
            elif kind is ClassKind.NAlpha:
                bound = I[C[I]]
            else:
                bound = C[I[C[I]]]
            out = S & ~bound == 0
        out.flags.writeable = False
        s._cache[key] = out
    return s._cache[key]


def closed_array(s: NanoSpace, kind: ClassKind) -> np.ndarray:
    key = ("closed", kind)
    if key not in s._cache:
        S = all_masks(s)
        out = open_array(s, kind)[s.full_mask ^ S]
        out.flags.writeable = False
        s._cache[key] = out
    return s._cache[key]


def member_array(s: NanoSpace, kind: ClassKind, side: Side) -> np.ndarray:
    if side == "open":
        return open_array(s, kind)
    if side == "closed":
        return closed_array(s, kind)
    raise ValueError(f"side must be 'open' or 'closed', got {side!r}")


def family_masks(s: NanoSpace, kind: ClassKind, side: Side) -> tuple[int, ...]:
    """Canonical-order masks of the whole class family."""
    key = ("family", kind, side)
    if key not in s._cache:
        masks = np.flatnonzero(member_array(s, kind, side)).tolist()
        s._cache[key] = tuple(sorted(masks, key=canonical_key))
    return s._cache[key]


def enumerate_family(s: NanoSpace, kind: ClassKind, side: Side = "open") -> SetFamily:
    check_enumerable(s.n)
    return SetFamily(s.universe, family_masks(s, kind, side))


def nsalpha_witness(s: NanoSpace, c: Subset) -> Subset | None:
    """First Nα-open P (canonical order) with P ⊆ C ⊆ Ncl(P), or None."""
    _check(s, c)
    check_enumerable(s.n)
    x = c.mask
    for p in family_masks(s, ClassKind.NAlpha, "open"):
        if p & ~x == 0 and x & ~s.ncl_mask(p) == 0:
            return Subset(s.universe, p)
    return None


def is_nowhere_nano_dense(s: NanoSpace, c: Subset) -> bool:
    """Nint(Ncl(C)) is empty."""
    _check(s, c)
    return s.nint_mask(s.ncl_mask(c.mask)) == 0
