"""Exception hierarchy shared by every nanotopo module."""


class NanoError(Exception):
    """Base class for all library errors."""


class EmptyUniverse(NanoError):
    def __init__(self):
        super().__init__("a universe needs at least one element")


class DuplicateName(NanoError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"element name {name!r} appears more than once")


class InvalidName(NanoError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"element names must be non-empty strings, got {name!r}")


class TooLarge(NanoError):
    def __init__(self, n, cap=64):
        self.n = n
        self.cap = cap
        super().__init__(f"universe of size {n} exceeds the cap of {cap}")


class UniverseMismatch(NanoError):
    def __init__(self, detail="operands belong to different universes"):
        super().__init__(detail)


class UnknownElement(NanoError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"{name!r} is not an element of the universe")


class EnumerationTooLarge(NanoError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"exhaustive enumeration over size {size} exceeds the cap of {cap}")


class OverlappingBlocks(NanoError):
    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__(f"blocks {i} and {j} overlap")


class EmptyBlock(NanoError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"block {i} is empty")


class IncompleteCover(NanoError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__("blocks do not cover: " + ", ".join(self.missing))


class UnknownGoal(NanoError):
    def __init__(self, goal):
        self.goal = goal
        super().__init__(f"unrecognised goal {goal!r}")


class SpaceFileError(NanoError):
    """Malformed space description (syntax or missing keys)."""
