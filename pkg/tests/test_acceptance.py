import pytest

from hecke_ip.acceptance import CHECKS, run_all


@pytest.mark.parametrize("number", range(1, len(CHECKS) + 1))
def test_criterion(number, capsys):
    (result,) = run_all(only={number})
    with capsys.disabled():
        print("\n" + result.line())
    assert result.ok, result.detail
