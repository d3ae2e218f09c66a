"""Recompute the published grid of largest m from the bound program."""

import pytest

from hybridcodes.services.lp_bounds import STARRED_CELLS, TABLE_I, max_m, reproduce_table1
from tests.conftest import extended_tests_enabled

pytestmark = [pytest.mark.integration, pytest.mark.slow]

SHORT_LENGTHS = range(5, 13)


def compared_cells(d, n):
    for k, published in enumerate(TABLE_I[d][n]):
        if k == 0 or (d, n, k) in STARRED_CELLS:
            continue
        yield k, published


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("n", SHORT_LENGTHS)
def test_row(d, n):
    for k, published in compared_cells(d, n):
        assert max_m(n, k, d) == published, f"d={d} n={n} k={k}"


@pytest.mark.skipif(not extended_tests_enabled(), reason="set HYBRIDCODES_EXTENDED_TESTS=1")
@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("n", [13, 14])
def test_long_row(d, n):
    for k, published in compared_cells(d, n):
        assert max_m(n, k, d) == published, f"d={d} n={n} k={k}"


def test_report_for_one_distance():
    report = reproduce_table1(distances=[5], lengths=[11])
    assert report.mismatches.empty
    cells = {r["k"]: r for r in report.to_json()}
    assert cells[1]["lp_m"] == 0
    assert cells[1]["published_m"] == 0


def test_starred_cell_is_reported():
    if not extended_tests_enabled():
        pytest.skip("set HYBRIDCODES_EXTENDED_TESTS=1")
    report = reproduce_table1(distances=[4], lengths=[13])
    statuses = {r["k"]: r["status"] for r in report.to_json()}
    assert statuses[5] == "starred"
