import pytest

from arcgeom import verify
from arcgeom.fieldtower import ctx_for_q

FAST = ["field", "curve", "spectrum", "chain", "czero", "identities", "bounds", "complete"]


@pytest.fixture(scope="module")
def run2():
    return verify.Run(ctx_for_q(2), verify.Options(trials=500, threads=2))


@pytest.mark.parametrize("name", FAST)
def test_suite_passes_q2(run2, name):
    res = verify.run_suite(name, run2.ctx, run=run2)
    assert res.passed, [c for c in res.checks if not c.passed and not c.informational]
    d = res.to_dict()
    assert d["suite"] == name and d["q"] == 2 and d["checks"]


def test_informational_failures_do_not_fail(run2):
    res = verify.run_suite("identities", run2.ctx, run=run2)
    assert res.passed


def test_informational_reports_q3():
    run = verify.Run(ctx_for_q(3), verify.Options(trials=300, threads=2))
    res = verify.run_suite("identities", run.ctx, run=run)
    checks = {c.name: c for c in res.checks}
    assert res.passed
    assert checks["p1_plus_p2_is_A"].informational and not checks["p1_plus_p2_is_A"].passed


def test_oracle_suites_skip_over_budget():
    run = verify.Run(ctx_for_q(4), verify.Options(trials=50, threads=2, budget=729))
    assert not run.has_oracle
    res = verify.run_suite("complete", run.ctx, run=run)
    assert res.passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope", ctx_for_q(2))
