"""All fourteen acceptance criteria at their stated tolerances.

Each test prints one PASS/FAIL line; run with ``pytest tests/test_acceptance.py -s``
or ``isolab verify --suite paper`` for the same table.
"""

import json

import pytest

from isolab.suite import CRITERIA, run_criterion


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    r = run_criterion(number)
    with capsys.disabled():
        print("\n" + r.line())
    assert r.passed, json.dumps(r.detail, default=str)[:2000]
