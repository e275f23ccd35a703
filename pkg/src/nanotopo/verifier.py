"""Exhaustive theorem checking, space enumeration and counterexample mining.

Each numbered result is expressed as a list of :class:`Clause` objects. A
clause is a vectorised predicate evaluated over a domain (all subsets, all
subset pairs, the pairs of a class family, ...). The first domain tuple on
which a clause is false becomes the failure witness, and
:func:`reproduce_failure` re-evaluates exactly that tuple.

Arbitrary unions/intersections over a finite family are reduced to the
binary case (closure under binary union implies closure under any finite
union), plus one fold of the whole family as a smoke test.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .classes import ClassKind, closed_array, family_masks, open_array
from .core_sets import Subset, Universe, check_enumerable, format_subset
from .errors import EnumerationTooLarge, UnknownGoal
from .operators import kind_closure_table, kind_interior_table
from .rough_nano import (
    NanoSpace,
    all_masks,
    build_nano_space,
    closure_table,
    interior_table,
    partition_from_labels,
)

CHECK_CAP = 16
SPACE_CAP = 10
_PAIR_CHUNK = 1 << 20

N, P, S_, A, SA = (
    ClassKind.NOpen,
    ClassKind.NPre,
    ClassKind.NSemi,
    ClassKind.NAlpha,
    ClassKind.NSemiAlpha,
)


class TheoremId(enum.Enum):
    P2_4 = "P2_4"
    P2_5 = "P2_5"
    L2_6 = "L2_6"
    R3_4 = "R3_4"
    R3_6_INDEP = "R3_6_INDEP"
    R3_8 = "R3_8"
    R3_9 = "R3_9"
    T3_10 = "T3_10"
    T3_11 = "T3_11"
    C3_12 = "C3_12"
    P3_13 = "P3_13"
    T3_14 = "T3_14"
    C3_15 = "C3_15"
    R3_16_STRICT = "R3_16_STRICT"
    P4_3 = "P4_3"
    P4_4 = "P4_4"
    T4_5 = "T4_5"
    T4_7 = "T4_7"
    P4_9 = "P4_9"
    T4_10 = "T4_10"
    C4_11 = "C4_11"
    X_NS_EQ_NSA = "X_NS_EQ_NSA"


WITNESS_STYLE = frozenset({TheoremId.R3_4, TheoremId.R3_6_INDEP, TheoremId.R3_16_STRICT})


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    FOUND = "found"
    NOT_FOUND = "not-found"


@dataclass(frozen=True)
class VerdictReport:
    theorem: TheoremId
    space: dict
    status: Status
    witnesses: tuple[Subset, ...] = ()
    checked_count: int = 0
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "space": self.space,
            "status": self.status.value,
            "witnesses": [format_subset(w) for w in self.witnesses],
            "checked_count": self.checked_count,
            "details": self.details,
        }


# --- evaluation context ---------------------------------------------------


class Tables:
    """Every per-subset table a checker needs, built lazily for one space."""

    def __init__(self, space: NanoSpace):
        self.space = space
        self.full = space.full_mask
        self.S = all_masks(space)
        self.I = interior_table(space)
        self.C = closure_table(space)
        self.tau = np.array(space.tau.masks, dtype=np.int64)
        self.closed = np.array(space.closed.masks, dtype=np.int64)

    def O(self, kind):
        return open_array(self.space, kind)

    def K(self, kind):
        return closed_array(self.space, kind)

    def INT(self, kind):
        return kind_interior_table(self.space, kind)

    def CL(self, kind):
        return kind_closure_table(self.space, kind)

    def fam(self, kind, side="open"):
        return np.array(family_masks(self.space, kind, side), dtype=np.int64)

    @cached_property
    def every_open_is_closed(self) -> bool:
        return set(self.space.tau.masks) == set(self.space.closed.masks)

    @cached_property
    def nowhere_dense_are_closed(self) -> bool:
        nwd = self.I[self.C] == 0
        return bool(np.all(~nwd | self.K(N)))


def sub(a, b):
    return a & ~b == 0


def exists_over(members: np.ndarray, x: np.ndarray, lo, hi) -> np.ndarray:
    """For each x: some member K has lo(K) ⊆ x ⊆ hi(K)."""
    acc = np.zeros(x.shape, dtype=bool)
    for k in members.tolist():
        acc |= sub(lo(k), x) & sub(x, hi(k))
    return acc


# --- domains --------------------------------------------------------------

Domain = Callable[[Tables], Iterator[tuple[np.ndarray, ...]]]


def over_subsets(t: Tables):
    yield (t.S,)


def over_tau(t: Tables):
    yield (t.tau,)


def _product(a: np.ndarray, b: np.ndarray):
    if len(a) == 0 or len(b) == 0:
        return
    rows = max(1, _PAIR_CHUNK // len(b))
    for i in range(0, len(a), rows):
        blk = a[i : i + rows]
        yield (np.repeat(blk, len(b)), np.tile(b, len(blk)))


def over_subset_pairs(t: Tables):
    yield from _product(t.S, t.S)


def _upper_pairs(a: np.ndarray):
    m = len(a)
    if m < 2:
        return
    i, j = np.triu_indices(m, 1)
    for k in range(0, len(i), _PAIR_CHUNK):
        yield (a[i[k : k + _PAIR_CHUNK]], a[j[k : k + _PAIR_CHUNK]])


def over_family_pairs(kind, side):
    def dom(t: Tables):
        yield from _upper_pairs(t.fam(kind, side))

    return dom


def over_family_fold(kind, side, op):
    def dom(t: Tables):
        masks = t.fam(kind, side)
        if len(masks):
            red = np.bitwise_or if op == "union" else np.bitwise_and
            yield (np.array([red.reduce(masks)], dtype=np.int64),)

    return dom


def over_family_by_subsets(kind, side):
    def dom(t: Tables):
        yield from _product(t.fam(kind, side), t.S)

    return dom


@dataclass(frozen=True)
class Clause:
    label: str
    domain: Domain
    holds: Callable[..., np.ndarray]
    counted: bool = True


def _first_failure(t: Tables, clause: Clause):
    """(witness masks or None, number of tuples examined)."""
    count = 0
    for arrays in clause.domain(t):
        ok = np.asarray(clause.holds(t, *arrays), dtype=bool)
        ok = np.broadcast_to(ok, arrays[0].shape)
        bad = np.flatnonzero(~ok)
        if len(bad):
            k = int(bad[0])
            return tuple(int(a[k]) for a in arrays), count + k + 1
        count += len(arrays[0])
    return None, count


# --- clause catalogue -----------------------------------------------------


def _hierarchy(pairs):
    out = []
    for label, lo, hi in pairs:
        out.append(Clause(f"{label}-open", over_subsets, lambda t, x, lo=lo, hi=hi: ~t.O(lo)[x] | t.O(hi)[x]))
        out.append(Clause(f"{label}-closed", over_subsets, lambda t, x, lo=lo, hi=hi: ~t.K(lo)[x] | t.K(hi)[x]))
    return out


def _nsa_formula(t, x):
    return sub(x, t.C[t.I[t.C[t.I[x]]]])


def _nsa_closed_formula(t, x):
    return sub(t.I[t.C[t.I[t.C[x]]]], x)


def _def31_witness(t, x):
    return exists_over(t.fam(A), x, lambda p: p, lambda p: t.C[p])


def _t311_ii(t, x):
    return exists_over(t.tau, x, lambda k: k, lambda k: t.C[t.I[t.C[k]]])


def _t410_iii(t, x):
    return exists_over(t.tau, x, lambda k: k, lambda k: t.INT(S_)[t.C[k]])


def _t410_iv(t, x):
    return sub(x, t.INT(S_)[t.C[t.I[x]]])


def _c312_ii(t, x):
    return exists_over(t.closed, x, lambda f: t.I[t.C[t.I[f]]], lambda f: f)


def _c411_iii(t, x):
    return exists_over(t.closed, x, lambda f: t.CL(S_)[t.I[f]], lambda f: f)


def _c411_iv(t, x):
    return sub(t.CL(S_)[t.I[t.C[x]]], x)


def _p43(kind):
    k = kind.token
    return [
        Clause(f"{k}-int-fixed", over_subsets, lambda t, x: (t.INT(kind)[x] == x) == t.O(kind)[x]),
        Clause(f"{k}-cl-fixed", over_subsets, lambda t, x: (t.CL(kind)[x] == x) == t.K(kind)[x]),
        Clause(
            f"{k}-int-is-open-inside",
            over_subsets,
            lambda t, x: t.O(kind)[t.INT(kind)[x]] & sub(t.INT(kind)[x], x),
        ),
        Clause(
            f"{k}-cl-is-closed-around",
            over_subsets,
            lambda t, x: t.K(kind)[t.CL(kind)[x]] & sub(x, t.CL(kind)[x]),
        ),
        Clause(
            f"{k}-int-largest",
            over_family_by_subsets(kind, "open"),
            lambda t, d, x: ~sub(d, x) | sub(d, t.INT(kind)[x]),
        ),
        Clause(
            f"{k}-cl-smallest",
            over_family_by_subsets(kind, "closed"),
            lambda t, f, x: ~sub(x, f) | sub(t.CL(kind)[x], f),
        ),
    ]


def _p44(kind):
    k = kind.token
    return [
        Clause(f"{k}-i", over_subsets, lambda t, x: t.INT(kind)[t.full ^ x] == t.full ^ t.CL(kind)[x]),
        Clause(f"{k}-ii", over_subsets, lambda t, x: t.CL(kind)[t.full ^ x] == t.full ^ t.INT(kind)[x]),
    ]


def _fixes_ends(table):
    def holds(t, x):
        ends = (x == 0) | (x == t.full)
        return ~ends | (table(t)[x] == x)

    return holds


def _nsa_int(t):
    return t.INT(SA)


def _nsa_cl(t):
    return t.CL(SA)


def _t45():
    J = _nsa_int
    return [
        Clause("i", over_subsets, _fixes_ends(J)),
        Clause("ii", over_subsets, lambda t, x: sub(J(t)[x], x)),
        Clause("iii", over_subset_pairs, lambda t, x, y: ~sub(x, y) | sub(J(t)[x], J(t)[y])),
        Clause("iv", over_subset_pairs, lambda t, x, y: sub(J(t)[x & y], J(t)[x] & J(t)[y])),
        Clause("v", over_subset_pairs, lambda t, x, y: sub(J(t)[x] | J(t)[y], J(t)[x | y])),
        Clause("vi", over_subsets, lambda t, x: J(t)[J(t)[x]] == J(t)[x]),
    ]


def _t47():
    K = _nsa_cl
    return [
        Clause("i", over_subsets, _fixes_ends(K)),
        Clause("ii", over_subsets, lambda t, x: sub(x, K(t)[x])),
        Clause("iii", over_subset_pairs, lambda t, x, y: ~sub(x, y) | sub(K(t)[x], K(t)[y])),
        Clause("iv", over_subset_pairs, lambda t, x, y: sub(K(t)[x & y], K(t)[x] & K(t)[y])),
        Clause("v", over_subset_pairs, lambda t, x, y: sub(K(t)[x] | K(t)[y], K(t)[x | y])),
        Clause("vi", over_subsets, lambda t, x: K(t)[K(t)[x]] == K(t)[x]),
    ]


# Equality in parts (iv)/(v) fails in general; these find the strict pairs.
STRICTNESS = {
    ("T4.5", "iv"): lambda t, x, y: ~sub(_nsa_int(t)[x] & _nsa_int(t)[y], _nsa_int(t)[x & y]),
    ("T4.5", "v"): lambda t, x, y: ~sub(_nsa_int(t)[x | y], _nsa_int(t)[x] | _nsa_int(t)[y]),
    ("T4.7", "iv"): lambda t, x, y: ~sub(_nsa_cl(t)[x] & _nsa_cl(t)[y], _nsa_cl(t)[x & y]),
    ("T4.7", "v"): lambda t, x, y: ~sub(_nsa_cl(t)[x | y], _nsa_cl(t)[x] | _nsa_cl(t)[y]),
}


def _eq3(a, b, c):
    return (a == b) & (b == c)


def _p49():
    I = lambda t: t.I  # noqa: E731
    C = lambda t: t.C  # noqa: E731
    J, K = _nsa_int, _nsa_cl

    def chain(t, x):
        ia, ca = t.INT(A)[x], t.CL(A)[x]
        j, k = J(t)[x], K(t)[x]
        return sub(t.I[x], ia) & sub(ia, j) & sub(j, k) & sub(k, ca) & sub(ca, t.C[x])

    return [
        Clause("i", over_subsets, chain),
        Clause("ii", over_subsets, lambda t, x: _eq3(I(t)[J(t)[x]], J(t)[I(t)[x]], I(t)[x])),
        Clause("iii", over_subsets, lambda t, x: _eq3(t.INT(A)[J(t)[x]], J(t)[t.INT(A)[x]], t.INT(A)[x])),
        Clause("iv", over_subsets, lambda t, x: _eq3(C(t)[K(t)[x]], K(t)[C(t)[x]], C(t)[x])),
        Clause("v", over_subsets, lambda t, x: _eq3(t.CL(A)[K(t)[x]], K(t)[t.CL(A)[x]], t.CL(A)[x])),
        Clause("vi", over_subsets, lambda t, x: K(t)[x] == x | t.I[t.C[t.I[t.C[x]]]]),
        Clause("vii", over_subsets, lambda t, x: J(t)[x] == x & t.C[t.I[t.C[t.I[x]]]]),
        Clause("viii", over_subsets, lambda t, x: sub(t.I[t.C[x]], J(t)[K(t)[x]])),
    ]


def _union_closed(kind, side, op):
    if op == "union":
        pair = lambda t, a, b: t.O(kind)[a | b]  # noqa: E731
        fold = lambda t, x: t.O(kind)[x]  # noqa: E731
    else:
        pair = lambda t, a, b: t.K(kind)[a & b]  # noqa: E731
        fold = lambda t, x: t.K(kind)[x]  # noqa: E731
    return [
        Clause("pairwise", over_family_pairs(kind, side), pair),
        Clause("whole-family", over_family_fold(kind, side, op), fold, counted=False),
    ]


CLAUSES: dict[TheoremId, list[Clause]] = {
    TheoremId.P2_4: _hierarchy([("i", N, A), ("ii", A, S_), ("iii", A, P)]),
    TheoremId.P2_5: [Clause("iff", over_subsets, lambda t, x: t.O(A)[x] == (t.O(S_)[x] & t.O(P)[x]))],
    TheoremId.L2_6: [
        Clause("i", over_tau, lambda t, k: t.CL(S_)[k] == t.I[t.C[k]]),
        Clause("ii", over_subsets, lambda t, x: t.INT(S_)[t.C[x]] == t.C[t.I[t.C[x]]]),
    ],
    TheoremId.R3_4: _hierarchy([("i", N, SA), ("ii", A, SA)]),
    TheoremId.R3_6_INDEP: [],
    TheoremId.R3_8: [
        Clause(
            "i",
            over_subsets,
            lambda t, x: (not (t.every_open_is_closed and t.nowhere_dense_are_closed)) | ~t.O(SA)[x] | t.O(N)[x],
        ),
        Clause("ii", over_subsets, lambda t, x: (not t.every_open_is_closed) | ~t.O(SA)[x] | t.O(A)[x]),
    ],
    TheoremId.R3_9: [
        Clause("i-conjunction", over_subsets, lambda t, x: ~(t.O(S_)[x] & t.O(P)[x]) | t.O(SA)[x]),
        Clause("ii", over_subsets, lambda t, x: (not t.every_open_is_closed) | ~t.O(SA)[x] | t.O(P)[x]),
    ],
    TheoremId.T3_10: [
        Clause(
            "iff",
            over_subsets,
            lambda t, x: t.O(A)[x] == exists_over(t.tau, x, lambda k: k, lambda k: t.I[t.C[k]]),
        ),
        Clause("k-is-interior", over_subsets, lambda t, x: ~t.O(A)[x] | sub(x, t.I[t.C[t.I[x]]])),
    ],
    TheoremId.T3_11: [
        Clause("i=iii", over_subsets, lambda t, x: _def31_witness(t, x) == _nsa_formula(t, x)),
        Clause("ii=iii", over_subsets, lambda t, x: _t311_ii(t, x) == _nsa_formula(t, x)),
        Clause("def-alt=iii", over_subsets, lambda t, x: sub(x, t.C[t.INT(A)[x]]) == _nsa_formula(t, x)),
        Clause("classifier=iii", over_subsets, lambda t, x: t.O(SA)[x] == _nsa_formula(t, x)),
    ],
    TheoremId.C3_12: [
        Clause("i=iii", over_subsets, lambda t, x: t.K(SA)[x] == _nsa_closed_formula(t, x)),
        Clause("ii=iii", over_subsets, lambda t, x: _c312_ii(t, x) == _nsa_closed_formula(t, x)),
    ],
    TheoremId.P3_13: _union_closed(A, "open", "union"),
    TheoremId.T3_14: _union_closed(SA, "open", "union"),
    TheoremId.C3_15: _union_closed(SA, "closed", "intersection"),
    TheoremId.R3_16_STRICT: [],
    TheoremId.P4_3: [c for kind in ClassKind for c in _p43(kind)],
    TheoremId.P4_4: [c for kind in ClassKind for c in _p44(kind)],
    TheoremId.T4_5: _t45(),
    TheoremId.T4_7: _t47(),
    TheoremId.P4_9: _p49(),
    TheoremId.T4_10: [
        Clause("i=ii", over_subsets, lambda t, x: t.O(SA)[x] == _t311_ii(t, x)),
        Clause("i=iii", over_subsets, lambda t, x: t.O(SA)[x] == _t410_iii(t, x)),
        Clause("i=iv", over_subsets, lambda t, x: t.O(SA)[x] == _t410_iv(t, x)),
    ],
    TheoremId.C4_11: [
        Clause("i=ii", over_subsets, lambda t, x: t.K(SA)[x] == _c312_ii(t, x)),
        Clause("i=iii", over_subsets, lambda t, x: t.K(SA)[x] == _c411_iii(t, x)),
        Clause("i=iv", over_subsets, lambda t, x: t.K(SA)[x] == _c411_iv(t, x)),
    ],
    TheoremId.X_NS_EQ_NSA: [Clause("eq", over_subsets, lambda t, x: t.O(S_)[x] == t.O(SA)[x])],
}


# --- checking -------------------------------------------------------------


def tables(space: NanoSpace) -> Tables:
    key = "verifier_tables"
    if key not in space._cache:
        check_enumerable(space.n, CHECK_CAP)
        space._cache[key] = Tables(space)
    return space._cache[key]


def _run(t: Tables, clauses: Sequence[Clause]):
    """(failing clause label, witness masks, count); label is None when all hold."""
    total = 0
    for clause in clauses:
        wit, count = _first_failure(t, clause)
        if clause.counted:
            total += count
        if wit is not None:
            return clause.label, wit, total
    return None, (), total


def _first(mask_array: np.ndarray) -> int | None:
    hits = np.flatnonzero(mask_array)
    return int(hits[0]) if len(hits) else None


def _search_pairs(domain_chunks, pred, t):
    """First pair from the domain satisfying ``pred``; also the count examined."""
    count = 0
    for a, b in domain_chunks:
        hit = np.flatnonzero(pred(t, a, b))
        if len(hit):
            k = int(hit[0])
            return (int(a[k]), int(b[k])), count + k + 1
        count += len(a)
    return None, count


def _render(space, masks):
    return [format_subset(space.universe.from_mask(m)) for m in masks]


def check_theorem(space: NanoSpace, theorem: TheoremId) -> VerdictReport:
    """Exhaustive verdict for one result on one space."""
    t = tables(space)
    u = space.universe
    label, wit, count = _run(t, CLAUSES[theorem])
    details: dict = {}
    desc = space.describe()

    def report(status, witnesses=(), n=count):
        return VerdictReport(theorem, desc, status, tuple(u.from_mask(w) for w in witnesses), n, details)

    if label is not None:
        details["clause"] = label
        return report(Status.FAIL, wit)

    if theorem is TheoremId.P2_4:
        for part, lo, hi in (("i", N, A), ("ii", A, S_), ("iii", A, P)):
            details[f"{part}_converse_fails"] = bool(np.any(t.O(hi) & ~t.O(lo)))
        return report(Status.PASS)

    if theorem is TheoremId.R3_4:
        x_open = _first(t.O(SA) & ~t.O(A))
        x_closed = _first(t.K(SA) & ~t.K(A))
        if x_open is None:
            return report(Status.NOT_FOUND)
        details["closed_witness"] = _render(space, [x_closed])
        return report(Status.FOUND, [x_open, x_closed])

    if theorem is TheoremId.R3_6_INDEP:
        a = _first(t.O(SA) & ~t.O(P))
        b = _first(t.O(P) & ~t.O(SA))
        details["nsa_not_np"] = None if a is None else _render(space, [a])[0]
        details["np_not_nsa"] = None if b is None else _render(space, [b])[0]
        found = [w for w in (a, b) if w is not None]
        n = len(t.S)
        return report(Status.FOUND if len(found) == 2 else Status.NOT_FOUND, found, n)

    if theorem is TheoremId.R3_8:
        h1, h2 = t.every_open_is_closed, t.nowhere_dense_are_closed
        details["every_open_is_closed"] = h1
        details["nowhere_dense_are_closed"] = h2
        nsa_is_open = bool(np.all(~t.O(SA) | t.O(N)))
        # separate readings of part (i): each hypothesis on its own
        details["i_under_first_hypothesis_only"] = nsa_is_open if h1 else None
        details["i_under_second_hypothesis_only"] = nsa_is_open if h2 else None
        if not h1:
            return report(Status.VACUOUS)
        details["i_evaluated"] = h2
        return report(Status.PASS)

    if theorem is TheoremId.R3_9:
        details["ns_implies_nsa"] = bool(np.all(~t.O(S_) | t.O(SA)))
        details["np_implies_nsa"] = bool(np.all(~t.O(P) | t.O(SA)))
        details["ii_evaluated"] = t.every_open_is_closed
        return report(Status.PASS)

    if theorem is TheoremId.R3_16_STRICT:
        pair, n = _search_pairs(_upper_pairs(t.fam(SA)), lambda t, a, b: ~t.O(SA)[a & b], t)
        if pair is None:
            return report(Status.NOT_FOUND, (), n)
        details["intersection"] = _render(space, [pair[0] & pair[1]])[0]
        return report(Status.FOUND, pair, n)

    if theorem in (TheoremId.T4_5, TheoremId.T4_7):
        name = "T4.5" if theorem is TheoremId.T4_5 else "T4.7"
        for part in ("iv", "v"):
            pair, _ = _search_pairs(_product(t.S, t.S), STRICTNESS[(name, part)], t)
            details[f"{part}_strict_witness"] = None if pair is None else _render(space, pair)
        return report(Status.PASS)

    return report(Status.PASS)


def reproduce_failure(space: NanoSpace, report: VerdictReport) -> bool:
    """True when the failing clause is again false on the report's witnesses."""
    if report.status is not Status.FAIL:
        return False
    t = tables(space)
    clause = next(c for c in CLAUSES[report.theorem] if c.label == report.details["clause"])
    arrays = tuple(np.array([w.mask], dtype=np.int64) for w in report.witnesses)
    ok = np.broadcast_to(np.asarray(clause.holds(t, *arrays), dtype=bool), (1,))
    return not bool(ok[0])


def check_all(space: NanoSpace) -> list[VerdictReport]:
    return [check_theorem(space, tid) for tid in TheoremId]


# --- space enumeration ----------------------------------------------------


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of {0..n-1} as RGS label tuples, lexicographic order."""
    if n <= 0:
        return
    labels = [0] * n
    maxes = [0] * n  # maxes[i] = max(labels[:i+1])

    def rec(i):
        if i == n:
            yield tuple(labels)
            return
        for v in range(maxes[i - 1] + 2):
            labels[i] = v
            maxes[i] = max(maxes[i - 1], v)
            yield from rec(i + 1)

    yield from rec(1)


def enumerate_spaces(u: Universe) -> Iterator[NanoSpace]:
    """Every (partition, target) pair: RGS order outer, target mask inner."""
    check_enumerable(u.size, SPACE_CAP)
    for labels in restricted_growth_strings(u.size):
        p = partition_from_labels(u, labels)
        for m in range(1 << u.size):
            yield build_nano_space(u, p, u.from_mask(m))


def count_spaces(n: int) -> int:
    return bell_number(n) * (1 << n)


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def random_space(u: Universe, rng: np.random.Generator) -> NanoSpace:
    labels = rng.integers(0, u.size, size=u.size)
    p = partition_from_labels(u, [int(v) for v in labels])
    m = int(rng.integers(0, 1 << u.size))
    return build_nano_space(u, p, u.from_mask(m))


def verify_spaces(spaces: Iterable[NanoSpace], jobs: int = 1) -> Iterator[VerdictReport]:
    """Reports for every space in input order; ``jobs > 1`` fans out to processes."""
    if jobs <= 1:
        for space in spaces:
            yield from check_all(space)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for reports in pool.map(check_all, spaces, chunksize=16):
            yield from reports


# --- counterexample mining ------------------------------------------------


class Goal:
    """A relation over (space, witness sets) that mining searches for."""

    text: str

    def search(self, space: NanoSpace) -> tuple[int, ...] | None:
        raise NotImplementedError

    def accepts(self, space: NanoSpace, *sets: Subset) -> bool:
        raise NotImplementedError


_KIND_TOKENS = {k.token: k for k in ClassKind}
_SIDES = {"O": "open", "C": "closed"}


@dataclass(frozen=True)
class ClassGap(Goal):
    """Member of class A (one side) but not of class B."""

    text: str
    a: ClassKind
    a_side: str
    b: ClassKind
    b_side: str

    def _hits(self, t: Tables):
        ma = t.O(self.a) if self.a_side == "open" else t.K(self.a)
        mb = t.O(self.b) if self.b_side == "open" else t.K(self.b)
        return ma & ~mb

    def search(self, space):
        x = _first(self._hits(tables(space)))
        return None if x is None else (x,)

    def accepts(self, space, *sets):
        (c,) = sets
        return bool(self._hits(tables(space))[c.mask])


@dataclass(frozen=True)
class Escape(Goal):
    """Two family members whose meet (or join) leaves the family."""

    text: str
    kind: ClassKind
    side: str
    op: str

    def _pred(self, t, a, b):
        member = t.O(self.kind) if self.side == "open" else t.K(self.kind)
        return ~member[a & b] if self.op == "meet" else ~member[a | b]

    def search(self, space):
        t = tables(space)
        pair, _ = _search_pairs(_upper_pairs(t.fam(self.kind, self.side)), self._pred, t)
        return pair

    def accepts(self, space, *sets):
        t = tables(space)
        a, b = (np.array([s.mask], dtype=np.int64) for s in sets)
        member = t.O(self.kind) if self.side == "open" else t.K(self.kind)
        return bool(member[a[0]] and member[b[0]] and self._pred(t, a, b)[0])


@dataclass(frozen=True)
class Strict(Goal):
    """A pair on which the inclusion of T4.5/T4.7 part (iv)/(v) is strict."""

    text: str
    theorem: str
    part: str

    def search(self, space):
        t = tables(space)
        pair, _ = _search_pairs(_product(t.S, t.S), STRICTNESS[(self.theorem, self.part)], t)
        return pair

    def accepts(self, space, *sets):
        t = tables(space)
        a, b = (np.array([s.mask], dtype=np.int64) for s in sets)
        return bool(STRICTNESS[(self.theorem, self.part)](t, a, b)[0])


def _class_token(tok: str, goal: str):
    if len(tok) < 2 or tok[:-1] not in _KIND_TOKENS or tok[-1] not in _SIDES:
        raise UnknownGoal(goal)
    return _KIND_TOKENS[tok[:-1]], _SIDES[tok[-1]]


def parse_goal(text: str) -> Goal:
    """Goal grammar: ``AO&!BO`` (class gap), ``meet-escape:XO``, ``join-escape:XC``,
    ``strict:T4.5iv`` (also T4.5v, T4.7iv, T4.7v). Class tokens: N Np Ns Na NSa,
    followed by O (open) or C (closed)."""
    g = text.strip()
    if "&!" in g:
        left, right = g.split("&!", 1)
        a, a_side = _class_token(left, text)
        b, b_side = _class_token(right, text)
        return ClassGap(g, a, a_side, b, b_side)
    if g.startswith(("meet-escape:", "join-escape:")):
        op, tok = g.split(":", 1)
        kind, side = _class_token(tok, text)
        return Escape(g, kind, side, op.split("-")[0])
    if g.startswith("strict:"):
        rest = g[len("strict:") :]
        for (thm, part) in STRICTNESS:
            if rest == f"{thm}{part}":
                return Strict(g, thm, part)
    raise UnknownGoal(text)


@dataclass(frozen=True)
class MineResult:
    space: NanoSpace
    witnesses: tuple[Subset, ...]


def mine(u: Universe, goal: Goal | str) -> MineResult | None:
    """First space (in enumeration order) with a witness for ``goal``."""
    if isinstance(goal, str):
        goal = parse_goal(goal)
    for space in enumerate_spaces(u):
        hit = goal.search(space)
        if hit is not None:
            return MineResult(space, tuple(u.from_mask(m) for m in hit))
    return None


def summarize(reports: Iterable[VerdictReport]) -> dict:
    counts = {s.value: 0 for s in Status}
    total = 0
    for r in reports:
        counts[r.status.value] += 1
        total += 1
    return {"reports": total, **counts}
