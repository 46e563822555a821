import pytest

from conformance import CASES, check_estimator


@pytest.mark.parametrize("case", CASES, ids=[c.name for c in CASES])
def test_estimator_contract(case):
    check_estimator(case)
