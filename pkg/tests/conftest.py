"""Shared fixtures and the acceptance criteria report.

The sweeps are expensive enough to run once per session, so every test
that needs grid results pulls them from here.  Each fixture returns a
small namespace with the rows and the wall-clock seconds the sweep
took, because several acceptance criteria also pin runtimes.

Acceptance tests register one line per criterion through the
``criterion_report`` fixture; the terminal summary hook prints the
collected lines at the end of the run so the verdicts are visible even
when output capturing is on.
"""

from __future__ import annotations

import time
from types import SimpleNamespace

import pytest

from partint import Relation
from partint.harness import (
    RunConfig,
    cross_validate_ekr,
    run_lemma_suites,
    verify_strong_form,
    verify_t_conjectures,
    verify_weak_form,
)

_CRITERION_LINES: dict[int, str] = {}


def _timed(runner, config):
    start = time.perf_counter()
    rows = runner(config)
    return SimpleNamespace(rows=rows, secs=time.perf_counter() - start)


@pytest.fixture(scope="session")
def strong_sweep():
    """Fixed-length sweep, default grid 2 <= k <= n <= 22."""
    return _timed(verify_strong_form, RunConfig())


@pytest.fixture(scope="session")
def weak_sweep():
    """Mixed-length sweep, default grid 2 <= n <= 14."""
    return _timed(verify_weak_form, RunConfig())


@pytest.fixture(scope="session")
def t_sweep_multiset():
    return _timed(verify_t_conjectures, RunConfig(relation=Relation.MULTISET))


@pytest.fixture(scope="session")
def t_sweep_proper():
    return _timed(verify_t_conjectures, RunConfig(relation=Relation.PROPER))


@pytest.fixture(scope="session")
def lemma_suites():
    start = time.perf_counter()
    report = run_lemma_suites(RunConfig(seed=0, trials=1000))
    return SimpleNamespace(report=report, secs=time.perf_counter() - start)


@pytest.fixture(scope="session")
def ekr_sweep():
    """Set-system cross-validation, default grid t <= 2, r <= 4, n <= 12."""
    return _timed(cross_validate_ekr, RunConfig())


@pytest.fixture
def criterion_report():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number: int, passed: bool, detail: str) -> None:
        verdict = "PASS" if passed else "FAIL"
        _CRITERION_LINES[number] = f"CRITERION {number:2d}: {verdict} - {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_LINES):
        terminalreporter.write_line(_CRITERION_LINES[number])
