from __future__ import annotations

import pytest

from fusionring.acceptance import CRITERIA, DEFAULT_SEED

LINES: list = []


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = CRITERIA[number](seed=DEFAULT_SEED, quick=False)
    line = result.line()
    LINES.append(line)
    print(line)
    for d in result.details:
        print("    " + d)
    assert result.passed, "\n".join(result.details)
    if result.limit is not None:
        assert result.seconds < result.limit
