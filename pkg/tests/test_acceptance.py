"""Acceptance gate: every shipped correctness criterion, one pass/fail line each.

Run with `pytest -v tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import pytest

from lerchsum.selftest import CRITERIA, RUNTIME_BUDGET_S, run_selftest


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion):
    result = criterion()
    print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}: {result.detail}")
    assert result.passed, f"{result.name}: {result.detail}"


def test_full_suite_within_budget():
    outcome = run_selftest()
    print(outcome.text, end="")
    assert outcome.passed
    assert outcome.elapsed < RUNTIME_BUDGET_S
