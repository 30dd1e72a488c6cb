"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line.

The lines are also collected and shown in the pytest terminal summary.
"""

from __future__ import annotations

import pytest

from indpoly import verify
from indpoly.construct import impossibility_report


LINES: list[str] = []


def _report(result: verify.CheckResult) -> None:
    LINES.append(result.line())
    print(result.line())
    assert result.passed, result.line()


@pytest.fixture
def cold_cache():
    # timed tiers must measure real scans, not cached ones
    verify.cached_scan.cache_clear()
    yield


def test_01_table_fast_tier(cold_cache):
    _report(verify.check_table_fast())


def test_02_table_full_tier(cold_cache):
    result = verify.check_table_full(21)
    _report(result)
    row21 = verify.cached_scan(21)[0]
    assert (row21.total_trees, row21.symmetric_count, row21.gamma_admissible_count) == (2144505, 22, 14)
    assert verify.cached_scan(18)[0].distinct_symmetric_polys == 11
    assert row21.distinct_symmetric_polys == 16


def test_03_pinned_polynomials():
    _report(verify.check_pinned_polynomials())


def test_04_gamma_factorizations():
    _report(verify.check_gamma_factorizations())


def test_05_oracle_equivalence():
    result = verify.check_oracle_equivalence(random_trees=1000)
    _report(result)


def test_06_bridge_lemma():
    _report(verify.check_bridge_lemma(pairs=500, admissible_pairs=200))


def test_07_gamma_round_trip():
    _report(verify.check_gamma_round_trip(samples=1000))


def test_08_corona_formula():
    _report(verify.check_corona(7))


def test_09_construction_sweeps():
    _report(verify.check_constructions(60))
    r10 = impossibility_report("order", 10)
    assert (r10.trees_scanned, r10.witnesses) == (106, 0)
    assert impossibility_report("degree", 3).witnesses == 0


def test_10_orbit_fixtures():
    _report(verify.check_orbit_fixtures())
