import pytest

from totodd.reports import dump_records, summarize
from totodd.suites import SUITES, RunConfig, run_suites, suite_tasks


def test_all_suites_small_range():
    records = run_suites(RunConfig(Nmax=16, rmax=4, samples=5))
    assert {rec.check for rec in records} >= {"oracle-e", "block-diag", "commute", "glanois", "tasaka-map"}
    assert summarize(records) == {"pass": len(records), "finding": 0, "violation": 0}


def test_pool_matches_sequential():
    config = dict(Nmax=15, rmax=3, samples=5, seed=3, suites=("commute", "kernels"))
    seq = run_suites(RunConfig(jobs=1, **config))
    par = run_suites(RunConfig(jobs=2, **config))
    assert dump_records(seq) == dump_records(par)


def test_defaults_and_validation():
    assert RunConfig().bounds("baumard-schneps") == (28, 2)
    assert RunConfig(Nmax=9).bounds("block-diag") == (9, 5)
    with pytest.raises(ValueError):
        RunConfig(rmax=0)
    with pytest.raises(ValueError):
        suite_tasks("nope", RunConfig())
    assert len(SUITES) == 10
