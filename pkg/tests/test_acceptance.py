"""Acceptance gate: every criterion at exact tolerance, one status line each.

Run ``python3 tests/test_acceptance.py`` to print the lines directly; under
pytest they are repeated in the terminal summary.
"""

import pytest

from latticehom.acceptance import CRITERIA, run_criterion

RESULTS: dict[int, str] = {}


@pytest.mark.parametrize("cid", sorted(CRITERIA), ids=[f"criterion-{i:02d}" for i in sorted(CRITERIA)])
def test_criterion(cid):
    result = run_criterion(cid)
    RESULTS[cid] = result.line()
    print(result.line())
    assert result.status == "pass", result.detail


if __name__ == "__main__":
    import sys

    lines = [run_criterion(i) for i in sorted(CRITERIA)]
    for r in lines:
        print(r.line(), flush=True)
    sys.exit(0 if all(r.status == "pass" for r in lines) else 1)
