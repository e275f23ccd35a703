"""Rough-set approximations and the nano topology they generate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core_sets import (
    SetFamily,
    Subset,
    Universe,
    check_enumerable,
    format_subset,
)
from .errors import (
    EmptyBlock,
    IncompleteCover,
    OverlappingBlocks,
    UniverseMismatch,
)


@dataclass(frozen=True)
class Partition:
    """Equivalence classes U/R, stored as block masks in the order given."""

    universe: Universe
    blocks: tuple[int, ...]

    @property
    def subsets(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, b) for b in self.blocks)

    def __str__(self):
        return "{" + ",".join(format_subset(s) for s in self.subsets) + "}"


def make_partition(u: Universe, blocks: Iterable[Subset | Iterable[str]]) -> Partition:
    """Validate ``blocks`` as a partition of ``u``.

    Blocks may be :class:`Subset` values or iterables of element names.
    """
    masks = []
    for b in blocks:
        if isinstance(b, Subset):
            if b.universe != u:
                raise UniverseMismatch()
            masks.append(b.mask)
        else:
            masks.append(u.subset(b).mask)
    seen = 0
    for i, m in enumerate(masks):
        if not m:
            raise EmptyBlock(i)
        if seen & m:
            j = next(k for k in range(i) if masks[k] & m)
            raise OverlappingBlocks(j, i)
        seen |= m
    if seen != u.full_mask:
        missing = u.from_mask(u.full_mask ^ seen).elements
        raise IncompleteCover(missing)
    return Partition(u, tuple(masks))


def partition_from_labels(u: Universe, labels: Sequence[int]) -> Partition:
    """Partition whose block ``k`` holds the elements labelled ``k``."""
    blocks: dict[int, int] = {}
    for i, lab in enumerate(labels):
        blocks[lab] = blocks.get(lab, 0) | (1 << i)
    return Partition(u, tuple(blocks[k] for k in sorted(blocks)))


def _same_universe(p: Partition, m: Subset) -> None:
    if p.universe != m.universe:
        raise UniverseMismatch()


def lower_approx(p: Partition, m: Subset) -> Subset:
    _same_universe(p, m)
    acc = 0
    for b in p.blocks:
        if b & ~m.mask == 0:
            acc |= b
    return Subset(p.universe, acc)


def upper_approx(p: Partition, m: Subset) -> Subset:
    _same_universe(p, m)
    acc = 0
    for b in p.blocks:
        if b & m.mask:
            acc |= b
    return Subset(p.universe, acc)


@dataclass(frozen=True)
class NanoSpace:
    """A universe, a partition, a target set and the nano topology they induce.

    ``tau`` and ``closed`` are canonical-order families. Derived tables that
    other modules compute on demand live in ``_cache``; they are pure
    functions of the space, so caching does not affect equality.
    """

    universe: Universe
    partition: Partition
    target: Subset
    lower: Subset
    upper: Subset
    boundary: Subset
    tau: SetFamily
    closed: SetFamily
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def full_mask(self) -> int:
        return self.universe.full_mask

    def nint_mask(self, x: int) -> int:
        acc = 0
        for t in self.tau.masks:
            if t & ~x == 0:
                acc |= t
        return acc

    def ncl_mask(self, x: int) -> int:
        acc = self.full_mask
        for f in self.closed.masks:
            if x & ~f == 0:
                acc &= f
        return acc

    def nint_array(self, x: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(x)
        for t in self.tau.masks:
            acc |= np.where(x & t == t, t, 0).astype(x.dtype)
        return acc

    def ncl_array(self, x: np.ndarray) -> np.ndarray:
        acc = np.full_like(x, self.full_mask)
        for f in self.closed.masks:
            acc &= np.where(x & ~np.int64(f) == 0, f, self.full_mask).astype(x.dtype)
        return acc

    def describe(self) -> dict:
        """Serializable descriptor in the space-file layout."""
        return {
            "universe": list(self.universe.names),
            "partition": [list(b.elements) for b in self.partition.subsets],
            "target": list(self.target.elements),
        }

    def label(self) -> str:
        return f"U/R={self.partition} M={format_subset(self.target)}"

    def __str__(self):
        return self.label()


def build_nano_space(u: Universe, p: Partition, m: Subset) -> NanoSpace:
    """Nano topology {φ, U, lower, upper, boundary}, deduplicated."""
    if p.universe != u or m.universe != u:
        raise UniverseMismatch()
    lo = lower_approx(p, m)
    up = upper_approx(p, m)
    bd = up - lo
    tau = SetFamily.of(u, (0, u.full_mask, lo.mask, up.mask, bd.mask))
    closed = tau.complements()
    space = NanoSpace(u, p, m, lo, up, bd, tau, closed)
    if __debug__:
        ms = tau._mask_set
        for a in tau.masks:
            for b in tau.masks:
                assert a | b in ms and a & b in ms, "tau not closed under union/intersection"
    return space


def _check_member(s: NanoSpace, c: Subset) -> None:
    if c.universe != s.universe:
        raise UniverseMismatch()


def n_interior(s: NanoSpace, c: Subset) -> Subset:
    """Largest open set inside ``c``."""
    _check_member(s, c)
    return Subset(s.universe, s.nint_mask(c.mask))


def n_closure(s: NanoSpace, c: Subset) -> Subset:
    """Smallest closed set containing ``c``."""
    _check_member(s, c)
    return Subset(s.universe, s.ncl_mask(c.mask))


def all_masks(s: NanoSpace) -> np.ndarray:
    """``arange(2**n)``; the index of each entry is its own mask."""
    key = "all_masks"
    if key not in s._cache:
        check_enumerable(s.n)
        arr = np.arange(1 << s.n, dtype=np.int64)
        arr.flags.writeable = False
        s._cache[key] = arr
    return s._cache[key]


def interior_table(s: NanoSpace) -> np.ndarray:
    """Nint of every subset, indexed by mask."""
    key = "nint_table"
    if key not in s._cache:
        arr = s.nint_array(all_masks(s))
        arr.flags.writeable = False
        s._cache[key] = arr
    return s._cache[key]


def closure_table(s: NanoSpace) -> np.ndarray:
    """Ncl of every subset, indexed by mask."""
    key = "ncl_table"
    if key not in s._cache:
        arr = s.ncl_array(all_masks(s))
        arr.flags.writeable = False
        s._cache[key] = arr
    return s._cache[key]
