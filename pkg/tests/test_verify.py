import json
from fractions import Fraction

import pytest

from rmbispec.qseries import NonGenericError
from rmbispec.verify import (
    COVERAGE, SUITES, CheckReport, SubCheck, SuiteConfig, reports_to_csv, reports_to_json,
    run_suite, run_suites,
)
from rmbispec.verify.report import EXACT_PASS, FAIL, INCONCLUSIVE, NUMERIC_PASS


def test_combine_precedence():
    ok = SubCheck("a", EXACT_PASS)
    num = SubCheck("b", NUMERIC_PASS, 1e-40)
    inc = SubCheck("c", INCONCLUSIVE)
    bad = SubCheck("d", FAIL, 0.5, ["z^2"])
    assert CheckReport.combine("s", {}, [ok]).status == EXACT_PASS
    r = CheckReport.combine("s", {}, [ok, num])
    assert r.status == NUMERIC_PASS and r.residual == 1e-40 and r.passed
    assert CheckReport.combine("s", {}, [ok, inc, num]).status == INCONCLUSIVE
    r = CheckReport.combine("s", {}, [ok, inc, bad])
    assert r.status == FAIL and not r.passed
    assert r.witnesses == ["d: z^2", "c: inconclusive"]


def test_config_validation():
    with pytest.raises(NonGenericError):
        SuiteConfig(q=Fraction(2, 7), t=Fraction(4, 5))
    with pytest.raises(ValueError):
        SuiteConfig(n=0)
    with pytest.raises(ValueError):
        SuiteConfig(Dz=-1)
    cfg = SuiteConfig(seed=3)
    assert cfg.rng("x").random() == SuiteConfig(seed=3).rng("x").random()
    assert cfg.rng("x").random() != SuiteConfig(seed=4).rng("x").random()
    for p in cfg.pool():
        assert p not in (2, 3, 5, 7)


@pytest.mark.parametrize("n", [1, 2])
def test_eigen_and_duality_small(n):
    cfg = SuiteConfig(n=n)
    for name in ("eigen", "duality", "tqt"):
        r = run_suite(name, cfg)
        assert r.status == EXACT_PASS, r.to_json()


def test_failure_is_reported():
    r = run_suite("principal", SuiteConfig(n=2, tol=1e-90))
    assert r.status == FAIL
    assert any("relative error" in w for w in r.witnesses)


def test_shells_flag_reaches_summation():
    r = run_suite("principal", SuiteConfig(n=3, N=3))
    checks = {c.name: c for c in r.checks}
    assert checks["principal/summation n=3"].diagnostics["N"] == 3
    assert checks["principal/exact n=3 Dz=6"].status == EXACT_PASS


def test_report_serialization():
    reports = run_suites(["tqt", "eigen"], SuiteConfig(n=2, Dz=3, Dw=3))
    assert [r.suite for r in reports] == ["eigen", "tqt"]
    data = json.loads(reports_to_json(reports))
    assert data[0]["params"]["Dz"] == 3
    assert data[0]["elapsed_ms"] == 0
    assert {c["status"] for r in data for c in r["checks"]} == {EXACT_PASS}
    csv = reports_to_csv(reports).splitlines()
    assert csv[0] == "suite,status,residual,elapsed_ms,witnesses,params"
    assert csv[1].startswith("eigen,exact-pass,0,0,")


def test_timing_opt_in():
    r = run_suite("hypergeom", SuiteConfig(timing=True))
    assert r.elapsed_ms >= 0
    assert run_suite("hypergeom", SuiteConfig()).elapsed_ms == 0


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suites(["nope"], SuiteConfig())


def test_parallel_matches_serial(monkeypatch):
    cfg = SuiteConfig(n=2, Dz=3, Dw=3)
    names = ["hypergeom", "eigen", "tqt"]
    serial = reports_to_json(run_suites(names, cfg, workers=1))
    monkeypatch.setenv("RMBISPEC_THREADS", "3")
    assert reports_to_json(run_suites(names, cfg)) == serial


@pytest.fixture(scope="session")
def full_reports():
    return run_suites(list(SUITES), SuiteConfig())


def test_full_run_passes(full_reports):
    bad = [(r.suite, r.status, r.witnesses) for r in full_reports if not r.passed]
    assert not bad


def test_coverage_manifest(full_reports):
    names = [c.name for r in full_reports for c in r.checks]
    missing = [k for k in COVERAGE if not any(n.startswith(k) for n in names)]
    assert not missing
    unlisted = [n for n in names if not any(n.startswith(k) for k in COVERAGE)]
    assert not unlisted
