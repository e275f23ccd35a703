"""Acceptance criteria, one test per criterion.

The terminal summary (see conftest) prints a PASS/FAIL line for each test
in this module.
"""

import io
import subprocess
import sys
import time

import numpy as np

from nanotopo.classes import ClassKind, enumerate_family, is_closed, is_open, nsalpha_witness
from nanotopo.cli import main
from nanotopo.core_sets import SetFamily, default_universe, make_universe
from nanotopo.operators import (
    g_closure,
    g_interior,
    kind_closure_table,
    kind_interior_table,
    nsalpha_closure_formula,
    nsalpha_closure_formula_table,
    nsalpha_interior_formula,
    nsalpha_interior_formula_table,
)
from nanotopo.rough_nano import build_nano_space, make_partition
from nanotopo.verifier import (
    Status,
    TheoremId,
    check_all,
    check_theorem,
    enumerate_spaces,
    mine,
    random_space,
)

from conftest import sets
from oracle import OracleSpace

K = ClassKind
SA = K.NSemiAlpha


def fam(u, *specs):
    return SetFamily.of(u, sets(u, *specs))


def spaces_up_to(n):
    for k in range(1, n + 1):
        yield from enumerate_spaces(default_universe(k))


def oracle_of(space):
    return OracleSpace(space.universe.names, [b.elements for b in space.partition.subsets], space.target.elements)


def test_criterion_1_s1_families():
    start = time.perf_counter()
    u = make_universe("pqrs")
    s = build_nano_space(u, make_partition(u, ["p", "r", "qs"]), u.subset("pq"))
    tau = fam(u, "", "p", "qs", "pqs", "pqrs")
    closed = fam(u, "pqrs", "qrs", "pr", "r", "")
    assert s.tau == tau and s.closed == closed
    assert enumerate_family(s, K.NAlpha, "open") == tau
    assert enumerate_family(s, K.NAlpha, "closed") == closed
    assert enumerate_family(s, SA, "open") == SetFamily.of(u, list(tau) + sets(u, "pr", "qrs"))
    assert enumerate_family(s, SA, "closed") == SetFamily.of(u, list(closed) + sets(u, "qs", "p"))
    assert time.perf_counter() - start < 1.0


def test_criterion_2_classifications(s1, u4):
    pr, qs, prs = sets(u4, "pr", "qs", "prs")
    assert is_open(s1, SA, pr)
    assert not is_open(s1, K.NOpen, pr)
    assert not is_open(s1, K.NAlpha, pr)
    assert not is_open(s1, K.NPre, pr)
    assert is_closed(s1, SA, qs)
    assert not is_closed(s1, K.NOpen, qs)
    assert not is_closed(s1, K.NAlpha, qs)
    assert is_open(s1, K.NPre, prs)
    assert not is_open(s1, SA, prs)


def test_criterion_3_meet_escape(s1, u4):
    a, b = sets(u4, "pr", "qrs")
    assert is_open(s1, SA, a) and is_open(s1, SA, b)
    assert a & b == u4.subset("r")
    assert not is_open(s1, SA, a & b)
    result = mine(default_universe(4), "meet-escape:NSaO")
    assert result is not None
    x, y = result.witnesses
    assert is_open(result.space, SA, x) and is_open(result.space, SA, y)
    assert not is_open(result.space, SA, x & y)


def test_criterion_4_s2_operators(s2, u4):
    u = u4
    assert s2.tau == fam(u, "", "r", "ps", "prs", "pqrs")
    alpha_o = enumerate_family(s2, K.NAlpha, "open")
    alpha_c = enumerate_family(s2, K.NAlpha, "closed")
    assert enumerate_family(s2, SA, "open") == SetFamily.of(u, list(alpha_o) + sets(u, "qr", "pqs"))
    assert enumerate_family(s2, SA, "closed") == SetFamily.of(u, list(alpha_c) + sets(u, "ps", "r"))
    interior = {"qr": "qr", "pqs": "pqs", "q": "", "qs": ""}
    closure = {"pr": "pqrs", "qr": "qr", "r": "r", "ps": "ps", "prs": "pqrs"}
    for arg, want in interior.items():
        assert g_interior(s2, SA, u.subset(arg)) == u.subset(want), arg
        assert nsalpha_interior_formula(s2, u.subset(arg)) == u.subset(want), arg
    # the {p,s} ∪ {q,s} case
    joined = u.subset("ps") | u.subset("qs")
    assert g_interior(s2, SA, joined) == u.subset("pqs")
    for arg, want in closure.items():
        assert g_closure(s2, SA, u.subset(arg)) == u.subset(want), arg
        assert nsalpha_closure_formula(s2, u.subset(arg)) == u.subset(want), arg


def test_criterion_5_theorem_suite(s1, s2):
    start = time.perf_counter()
    ok = {Status.PASS, Status.VACUOUS, Status.FOUND}
    for s in (s1, s2):
        reports = check_all(s)
        assert len(reports) == len(TheoremId)
        assert all(r.status in ok for r in reports), [r.theorem for r in reports if r.status not in ok]
    n_spaces, fails = 0, []
    for space in spaces_up_to(4):
        n_spaces += 1
        fails += [(space.label(), r.theorem) for r in check_all(space) if r.status is Status.FAIL]
    assert fails == []
    # Bell(n) partitions × 2^n targets summed over n = 1..4
    assert n_spaces == 2 + 8 + 40 + 240
    assert time.perf_counter() - start < 10.0


def test_criterion_6_formula_matches_family_route():
    start = time.perf_counter()
    bad = 0
    for space in spaces_up_to(5):
        bad += int(np.count_nonzero(nsalpha_interior_formula_table(space) != kind_interior_table(space, SA)))
        bad += int(np.count_nonzero(nsalpha_closure_formula_table(space) != kind_closure_table(space, SA)))
    rng = np.random.default_rng(20241014)
    u8 = default_universe(8)
    for i in range(1000):
        space = random_space(u8, rng)
        bad += int(np.count_nonzero(nsalpha_interior_formula_table(space) != kind_interior_table(space, SA)))
        bad += int(np.count_nonzero(nsalpha_closure_formula_table(space) != kind_closure_table(space, SA)))
        if i % 100 == 0:
            # scalar routes on every subset, independent of the tables
            for m in range(256):
                c = u8.from_mask(m)
                bad += nsalpha_interior_formula(space, c) != g_interior(space, SA, c)
                bad += nsalpha_closure_formula(space, c) != g_closure(space, SA, c)
    assert bad == 0
    assert time.perf_counter() - start < 30.0


def test_criterion_7_equivalent_forms():
    bad = 0
    for space in spaces_up_to(4):
        u = space.universe
        nint, ncl = space.nint_mask, space.ncl_mask
        tau, closed = space.tau.masks, space.closed.masks
        for m in range(1 << space.n):
            c = u.from_mask(m)
            opens = {
                nsalpha_witness(space, c) is not None,
                any(k & ~m == 0 and m & ~ncl(nint(ncl(k))) == 0 for k in tau),
                m & ~ncl(nint(ncl(nint(m)))) == 0,
                m & ~g_interior(space, K.NSemi, u.from_mask(ncl(nint(m)))).mask == 0,
            }
            closes = {
                nsalpha_witness(space, ~c) is not None,
                any(m & ~f == 0 and nint(ncl(nint(f))) & ~m == 0 for f in closed),
                nint(ncl(nint(ncl(m)))) & ~m == 0,
                g_closure(space, K.NSemi, u.from_mask(nint(ncl(m)))).mask & ~m == 0,
            }
            bad += len(opens) != 1 or len(closes) != 1
        for tid in (TheoremId.T3_11, TheoremId.C3_12, TheoremId.T4_10, TheoremId.C4_11):
            bad += check_theorem(space, tid).status is not Status.PASS
    assert bad == 0


def test_criterion_8_semi_equals_semi_alpha():
    mismatched = []
    for space in spaces_up_to(5):
        o = oracle_of(space)
        alpha = o.open_family("na")
        semi = {c for c in o.subsets if o.is_semi(c)}
        semi_alpha = {c for c in o.subsets if any(p <= c <= o.ncl(p) for p in alpha)}
        if semi != semi_alpha:
            mismatched.append(space.label())
        report = check_theorem(space, TheoremId.X_NS_EQ_NSA)
        if report.status is not Status.PASS:
            mismatched.append(("report", space.label()))
    assert mismatched == []


def _verify_json_in_process():
    out = io.StringIO()
    code = main(["verify", "--all-spaces", "4", "--format", "json"], out=out)
    assert code == 0
    return out.getvalue()


def test_criterion_9_determinism():
    assert _verify_json_in_process() == _verify_json_in_process()
    cmd = [sys.executable, "-m", "nanotopo", "verify", "--all-spaces", "4", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and len(first) > 0
