"""One PASS/FAIL line per acceptance criterion, read off two full CLI runs.

Run directly (``python tests/test_acceptance.py``) or through pytest.
"""

import json
import os
import subprocess
import sys
import tempfile

import pytest

PASSED = ("exact-pass", "numeric-pass")


def _run_twice():
    tmp = tempfile.mkdtemp(prefix="rmbispec-acc-")
    outs = [os.path.join(tmp, f"run{i}.json") for i in (1, 2)]
    procs = [subprocess.Popen([sys.executable, "-m", "rmbispec.cli", "verify", "--suite", "all",
                               "--seed", "0", "--out", o]) for o in outs]
    codes = [p.wait() for p in procs]
    blobs = []
    for o in outs:
        with open(o, "rb") as fh:
            blobs.append(fh.read())
    return codes, blobs


def _checks(reports):
    return {c["name"]: c for r in reports for c in r["checks"]}


def _ok(checks, *names):
    missing = [n for n in names if n not in checks]
    bad = [n for n in names if n in checks and checks[n]["status"] not in PASSED]
    return not missing and not bad, (f"missing {missing}" if missing else "") + (
        f" failing {bad}" if bad else "")


def _exact(checks, *names):
    ok, why = _ok(checks, *names)
    inexact = [n for n in names if n in checks and checks[n]["status"] != "exact-pass"]
    return ok and not inexact, why + (f" not exact {inexact}" if inexact else "")


def _shrinking(values):
    v = [float(x) for x in values]
    return len(v) >= 2 and all(b < a for a, b in zip(v, v[1:]))


def criterion_results(checks, codes, blobs):
    res = {}

    res[1] = _exact(checks, "eigen/L-psi n=2 caps=6,6", "eigen/L-psi n=3 caps=5,5")

    res[2] = _exact(checks, "duality/psi-swap n=2 caps=6,6", "duality/psi-swap n=3 caps=4,4",
                    "eigen/L-dual n=2 caps=6,6", "eigen/L-dual n=3 caps=5,5")

    res[3] = _exact(checks, "tqt/psi n=2 caps=8,8", "tqt/psi n=3 caps=4,4",
                    "tqt/q-euler n=2 caps=8,8")

    ok, why = _exact(checks, "poles/grid n=2", "poles/grid n=3")
    if ok:
        for n in (2, 3):
            d = checks[f"poles/grid n={n}"]["diagnostics"]
            if d["simple_poles"] < 1 or d["zdeg_max"] < 4 or d["window"] != [-4, 4]:
                ok, why = False, f"n={n} diagnostics {d}"
    res[4] = (ok, why)

    names = [f"recurrences/{k} {s}" for k in ("jackson", "kop-explicit")
             for s in ("1->2 caps=5,5", "2->3 caps=4,4")]
    names += ["recurrences/c-column n+1=2 zdeg<=3", "recurrences/c-column n+1=3 zdeg<=3"]
    res[5] = _exact(checks, *names)

    names = [f"macdonald/specialization n={n} |lambda|<=4" for n in (1, 2, 3)]
    names += [f"macdonald/duality n={n} |lambda|,|mu|<=3" for n in (1, 2, 3)]
    names += [f"macdonald/evaluation n={n} |lambda|<=5" for n in (1, 2, 3, 4)]
    names += [f"macdonald/D-eigen n={n} |lambda|<=5" for n in (1, 2, 3, 4)]
    res[6] = _exact(checks, *names)

    names = [f"wronski/residual n={n} k<=4 |lambda|<=4" for n in (1, 2, 3, 4)]
    names += [f"wronski/pointwise n={n} U_max=4" for n in (1, 2, 3)]
    ok, why = _exact(checks, *names)
    if ok:
        for n in (1, 2, 3):
            cnt = checks[f"wronski/pointwise n={n} U_max=4"]["diagnostics"]["count"]
            if cnt < 5:
                ok, why = False, f"only {cnt} pointwise samples for n={n}"
    res[7] = (ok, why)

    names = [f"principal/exact n={n} Dz={d}" for n, d in ((1, 6), (2, 6), (3, 6), (4, 4))]
    ok, why = _exact(checks, *names)
    for n, N, tol in ((2, 40, 1e-8), (3, 30, 1e-6)):
        c = checks.get(f"principal/summation n={n}")
        if c is None or c["status"] not in PASSED:
            ok, why = False, f"principal/summation n={n} {c and c['status']}"
            continue
        d = c["diagnostics"]
        if not (d["N"] >= N and c["residual"] < tol and d["precision"] >= 256
                and d["q"] == "3/10" and d["t"] == "5" and _shrinking(d["last_shells"])):
            ok, why = False, f"principal/summation n={n} diagnostics {d}"
    res[8] = (ok, why)

    ok, why = _exact(checks, "n3/closed-p caps=3,3", "n3/double-sum theta,rho<=3",
                     "n3/w14 theta,rho<=3")
    c = checks.get("n3/phi-point")
    if c is None or c["status"] not in PASSED or not c["residual"] < 1e-20:
        ok, why = False, f"n3/phi-point {c}"
    elif c["diagnostics"]["count"] < 2 or (c["diagnostics"]["q"], c["diagnostics"]["t"]) != ("3/10", "2/5"):
        ok, why = False, "n3/phi-point is missing the swapped evaluation"
    res[9] = (ok, why)

    ok, why = _exact(checks, "hypergeom/vwp-root-reduction r=2 theta<=3",
                     "hypergeom/w10-to-5phi4 theta<=3", "hypergeom/saalschutz n<=5")
    if ok:
        for n in ("hypergeom/vwp-root-reduction r=2 theta<=3", "hypergeom/w10-to-5phi4 theta<=3"):
            if len(checks[n]["diagnostics"]["draws"]) < 20:
                ok, why = False, f"{n}: fewer than 5 draws per theta"
    res[10] = (ok, why)

    res[11] = _exact(checks, "duality/restriction r=2 caps=5,5")

    same = blobs[0] == blobs[1] and len(blobs[0]) > 0
    res[12] = (same and codes == [0, 0], f"exit codes {codes}" + ("" if same else ", reports differ"))
    return res


@pytest.fixture(scope="module")
def acceptance():
    codes, blobs = _run_twice()
    checks = _checks(json.loads(blobs[0]))
    return criterion_results(checks, codes, blobs)


def _report(res):
    lines = []
    for k in sorted(res):
        ok, why = res[k]
        lines.append(f"{'PASS' if ok else 'FAIL'} criterion {k}" + ("" if ok else f": {why.strip()}"))
    return lines


def test_acceptance_summary(acceptance, capsys):
    with capsys.disabled():
        print()
        for line in _report(acceptance):
            print(line)
    assert sorted(acceptance) == list(range(1, 13))


@pytest.mark.parametrize("k", range(1, 13))
def test_criterion(acceptance, k):
    ok, why = acceptance[k]
    assert ok, why


if __name__ == "__main__":
    codes, blobs = _run_twice()
    res = criterion_results(_checks(json.loads(blobs[0])), codes, blobs)
    print("\n".join(_report(res)))
    sys.exit(0 if all(ok for ok, _ in res.values()) else 1)
