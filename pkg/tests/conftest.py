import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nanotopo import build_nano_space, make_partition, make_universe  # noqa: E402

DATA = Path(__file__).parent.parent / "data"


@pytest.fixture(scope="session")
def u4():
    return make_universe("pqrs")


@pytest.fixture(scope="session")
def s1(u4):
    """U/R = {{p},{r},{q,s}}, M = {p,q}."""
    return build_nano_space(u4, make_partition(u4, ["p", "r", "qs"]), u4.subset("pq"))


@pytest.fixture(scope="session")
def s2(u4):
    """U/R = {{q},{r},{p,s}}, M = {p,r}."""
    return build_nano_space(u4, make_partition(u4, ["q", "r", "ps"]), u4.subset("pr"))


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def sets(u, *specs):
    """sets(u, 'pr', '', 'qrs') -> list of Subsets ('' is the empty set)."""
    return [u.subset(spec) for spec in specs]


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
