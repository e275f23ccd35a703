"""Exact finite-set algebra over a shared, index-addressed universe.

Every subset is a bitmask: element ``i`` of the universe maps to bit ``i``.
All values here are immutable, so they can be shared freely between
threads and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal

from .errors import (
    DuplicateName,
    EmptyUniverse,
    EnumerationTooLarge,
    InvalidName,
    TooLarge,
    UniverseMismatch,
    UnknownElement,
)

MAX_UNIVERSE = 64
ENUMERATION_CAP = 24
EMPTY_SYMBOL = "φ"


@dataclass(frozen=True)
class Universe:
    """Ordered ground set; the i-th name owns bit i."""

    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.names:
            raise EmptyUniverse()
        if len(self.names) > MAX_UNIVERSE:
            raise TooLarge(len(self.names), MAX_UNIVERSE)
        index = {}
        for i, name in enumerate(self.names):
            if not isinstance(name, str) or not name:
                raise InvalidName(name)
            if name in index:
                raise DuplicateName(name)
            index[name] = i
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except (KeyError, TypeError):
            raise UnknownElement(name) from None

    def subset(self, names: Iterable[str] = ()) -> Subset:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Subset(self, mask)

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, int(mask))

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    @property
    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def __len__(self):
        return len(self.names)

    def __str__(self):
        return "{" + ",".join(self.names) + "}"


@dataclass(frozen=True, order=False)
class Subset:
    """Membership mask over a :class:`Universe`."""

    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.universe.size:
            raise ValueError(f"mask {self.mask:#x} has bits outside a universe of size {self.universe.size}")

    @property
    def elements(self) -> tuple[str, ...]:
        names = self.universe.names
        return tuple(names[i] for i in range(len(names)) if self.mask >> i & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, name):
        return bool(self.mask >> self.universe.index(name) & 1)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_subset(self, other)

    def __lt__(self, other):
        return is_subset(self, other) and self.mask != other.mask

    def __str__(self):
        return format_subset(self)


def format_subset(s: Subset) -> str:
    """Render ``{a,b}`` in universe order, ``φ`` when empty."""
    if not s.mask:
        return EMPTY_SYMBOL
    return "{" + ",".join(s.elements) + "}"


def make_universe(names: Iterable[str]) -> Universe:
    return Universe(tuple(names))


def default_universe(n: int) -> Universe:
    """Universe used for enumerated spaces: p, q, r, ... (e0, e1, ... beyond ten)."""
    if n <= 10:
        return make_universe("pqrstuvwxy"[:n])
    return make_universe(f"e{i}" for i in range(n))


def _check(a: Subset, b: Subset) -> None:
    if a.universe is not b.universe and a.universe != b.universe:
        raise UniverseMismatch()


def union(a: Subset, b: Subset) -> Subset:
    _check(a, b)
    return Subset(a.universe, a.mask | b.mask)


def intersection(a: Subset, b: Subset) -> Subset:
    _check(a, b)
    return Subset(a.universe, a.mask & b.mask)


def difference(a: Subset, b: Subset) -> Subset:
    _check(a, b)
    return Subset(a.universe, a.mask & ~b.mask)


def complement(a: Subset) -> Subset:
    return Subset(a.universe, a.universe.full_mask ^ a.mask)


def is_subset(a: Subset, b: Subset) -> bool:
    _check(a, b)
    return a.mask & ~b.mask == 0


def canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of subsets in canonical order (cardinality, then mask)."""

    universe: Universe
    masks: tuple[int, ...]

    @classmethod
    def of(cls, universe: Universe, members: Iterable[Subset | int]) -> SetFamily:
        masks = set()
        for m in members:
            if isinstance(m, Subset):
                if m.universe != universe:
                    raise UniverseMismatch()
                m = m.mask
            masks.add(int(m))
        for m in masks:
            Subset(universe, m)  # bounds check
        return cls(universe, tuple(sorted(masks, key=canonical_key)))

    @property
    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, item):
        if isinstance(item, Subset):
            if item.universe != self.universe:
                return False
            item = item.mask
        return item in self._mask_set

    @property
    def _mask_set(self) -> frozenset:
        # not cached: dataclass is frozen and families are small
        return frozenset(self.masks)

    def complements(self) -> SetFamily:
        full = self.universe.full_mask
        return SetFamily.of(self.universe, (full ^ m for m in self.masks))

    def __str__(self):
        return "{" + ", ".join(format_subset(s) for s in self.members) + "}"


def family_fold(
    family: SetFamily | Iterable[Subset],
    mode: Literal["union", "intersection"],
    empty_default: Subset,
) -> Subset:
    """Union or intersection of every member; ``empty_default`` for an empty family."""
    if mode not in ("union", "intersection"):
        raise ValueError(f"mode must be 'union' or 'intersection', got {mode!r}")
    universe = empty_default.universe
    acc = None
    for s in family:
        _check(s, empty_default)
        if acc is None:
            acc = s.mask
        elif mode == "union":
            acc |= s.mask
        else:
            acc &= s.mask
    return empty_default if acc is None else Subset(universe, acc)


def enumerate_subsets(u: Universe) -> Iterator[Subset]:
    """Every subset of ``u`` exactly once, ascending mask order."""
    if u.size > ENUMERATION_CAP:
        raise EnumerationTooLarge(u.size, ENUMERATION_CAP)
    for mask in range(1 << u.size):
        yield Subset(u, mask)


def check_enumerable(n: int, cap: int = ENUMERATION_CAP) -> None:
    if n > cap:
        raise EnumerationTooLarge(n, cap)
