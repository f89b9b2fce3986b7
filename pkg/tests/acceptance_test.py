# test tauweave.acceptance: individual checks, the report format and a
# sabotaged criterion that the oracle comparison has to catch
#
import numpy as np
from tauweave.acceptance import (CheckResult, check_condition_checker, check_interval_shapes,
                                 check_mirror, check_oracle_agreement, check_xi_census,
                                 default_algebras, format_report, run_acceptance)
from tauweave.config import RunConfig
from tauweave.xi import hom_vanishes

def setup_function(_):
    np.random.seed(0)

def test_default_algebras():
    assert default_algebras(2) == ["preprojective:2", "lambda:2:1", "lambda:2:2", "gamma"]
    assert len(default_algebras(3)) == 7

def test_census():
    passed, detail = check_xi_census()
    assert passed, detail

def test_oracle_agreement():
    passed, detail = check_oracle_agreement(["preprojective:2", "gamma"], hom_vanishes, {})
    assert passed, detail

def test_sabotage_is_caught():
    def flipped(i, j, n):
        return not hom_vanishes(i, j, n)
    passed, detail = check_oracle_agreement(["preprojective:2"], flipped, {})
    assert not passed
    assert "disagree" in detail

def test_mirror_reaches_rank_four():
    passed, detail = check_mirror(2)
    assert passed, detail
    assert detail == "ranks 1..4"

def test_interval_shapes():
    passed, detail = check_interval_shapes()
    assert passed, detail

def test_condition_checker():
    passed, detail = check_condition_checker(2)
    assert passed, detail

def test_report_format():
    report = format_report([CheckResult("xi-census", True, 0.5, "ranks 1..10"),
                            CheckResult("oracle-equivalence", False, 1.25, "bad")])
    assert report == ("PASS  xi-census  0.50s  ranks 1..10\n"
                      "FAIL  oracle-equivalence  1.25s  bad\n")

def test_verify_rank_two():
    config = RunConfig.from_options("verify", {"n": 2}, environ={})
    results = run_acceptance(config)
    failed = [r for r in results if not r.passed]
    assert not failed, format_report(failed)
