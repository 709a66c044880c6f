"""Named verification suites."""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath

from .. import bispectral as bs
from .. import macdonald as md
from .. import operators as ops
from .. import transforms as tf
from ..mps import TruncSeries
from ..qseries import Params, saalschutz_sides
from ..ring import ZERO, approx, is_exact
from .config import SuiteConfig
from .report import (EXACT_PASS, FAIL, INCONCLUSIVE, NUMERIC_PASS, CheckReport, SubCheck)

MAX_WITNESSES = 5


def _fmt_key(n: int, key) -> str:
    m = n - 1
    return f"z{list(key[:m])} w{list(key[m:])}"


def _mag(x) -> float:
    if isinstance(x, Fraction):
        return abs(float(x))
    return float(abs(x))


class Collector:
    """Accumulates sub-checks for one suite; exceptions become failures."""

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.checks: List[SubCheck] = []
        self.default_tol = cfg.tol if cfg.tol is not None else float(
            mpmath.mpf(2) ** (-(cfg.precision // 2)))

    def add(self, check: SubCheck) -> None:
        self.checks.append(check)

    def run(self, name: str, fn: Callable[[], SubCheck]) -> None:
        try:
            self.add(fn())
        except Exception as exc:  # reported, never raised
            self.add(SubCheck(name, FAIL, "0", [f"{type(exc).__name__}: {exc}"]))

    def series(self, name: str, a: TruncSeries, b: TruncSeries, tol=None) -> SubCheck:
        diff = a - b
        vals = [c for _, c in diff.items()]
        exact = all(is_exact(c) for c in vals) and all(
            is_exact(c) for _, c in itertools.islice(a.items(), 1))
        if exact:
            if diff.is_zero():
                return SubCheck(name, EXACT_PASS, "0", [], {"caps": list(a.caps)})
            wit = [_fmt_key(a.n, k) for k, _ in diff.items()[:MAX_WITNESSES]]
            return SubCheck(name, FAIL, max(_mag(c) for c in vals), wit, {"caps": list(a.caps)})
        tol = self.default_tol if tol is None else tol
        worst = max((_mag(c) for c in vals), default=0.0)
        if worst <= tol:
            return SubCheck(name, NUMERIC_PASS, worst, [], {"caps": list(a.caps), "tol": tol})
        wit = [_fmt_key(a.n, k) for k, c in diff.items() if _mag(c) > tol][:MAX_WITNESSES]
        return SubCheck(name, FAIL, worst, wit, {"caps": list(a.caps), "tol": tol})

    def scalars(self, name: str, pairs: Sequence[Tuple[str, object, object]], tol=None,
                diagnostics: Optional[dict] = None) -> SubCheck:
        """Compare labelled (lhs, rhs) pairs; exact values must agree exactly."""
        bad = []
        worst = 0.0
        numeric = False
        for label, lhs, rhs in pairs:
            d = lhs - rhs
            if is_exact(d):
                if d != 0:
                    bad.append(label)
                    worst = max(worst, _mag(d))
            else:
                numeric = True
                scale = max(_mag(lhs), _mag(rhs), 1e-300)
                err = _mag(d) / scale
                worst = max(worst, err)
                if err > (self.default_tol if tol is None else tol):
                    bad.append(label)
        diag = dict(diagnostics or {})
        diag["count"] = len(pairs)
        if bad:
            return SubCheck(name, FAIL, worst, bad[:MAX_WITNESSES], diag)
        if numeric:
            diag["tol"] = self.default_tol if tol is None else tol
            return SubCheck(name, NUMERIC_PASS, worst, [], diag)
        return SubCheck(name, EXACT_PASS, "0", [], diag)

    def flag(self, name: str, ok: bool, witnesses: Sequence[str] = (),
             diagnostics: Optional[dict] = None) -> SubCheck:
        return SubCheck(name, EXACT_PASS if ok else FAIL, "0", list(witnesses)[:MAX_WITNESSES],
                        dict(diagnostics or {}))


def _caps(cfg: SuiteConfig, n: int, table: Dict[int, Tuple[int, int]], fallback=(3, 3)):
    return cfg.caps_for(table.get(n, fallback))


# ---------------------------------------------------------------------------


def suite_eigen(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    for n in cfg.ns([1, 2, 3]):
        caps = _caps(cfg, n, {1: (6, 6), 2: (6, 6), 3: (5, 5)})
        tag = f"n={n} caps={caps[0]},{caps[1]}"
        col.run(f"eigen/L-psi {tag}", lambda n=n, caps=caps, tag=tag: _eigen(
            col, f"eigen/L-psi {tag}", "L", bs.psi_series(n, P, caps), P, "z"))
        col.run(f"eigen/E-p {tag}", lambda n=n, caps=caps, tag=tag: _eigen(
            col, f"eigen/E-p {tag}", "E", bs.p_series(n, P, caps), P, "z"))
        col.run(f"eigen/L-dual {tag}", lambda n=n, caps=caps, tag=tag: _eigen(
            col, f"eigen/L-dual {tag}", "L", bs.psi_series(n, P, caps), P, "w"))


def _eigen(col, name, kind, f, P, block) -> SubCheck:
    lhs = ops.L_apply(kind, f, P, block)
    rhs = ops.eigen_target(f, block)
    subs = [col.series(name, a, b) for a, b in zip(lhs, rhs)]
    for r, s in enumerate(subs):
        if s.status == FAIL:
            return SubCheck(name, FAIL, s.residual, [f"v^{r} {w}" for w in s.witnesses],
                            s.diagnostics)
    worst = max((float(s.residual) for s in subs if s.residual != "0"), default=0.0)
    st = NUMERIC_PASS if any(s.status == NUMERIC_PASS for s in subs) else EXACT_PASS
    return SubCheck(name, st, "0" if st == EXACT_PASS else worst, [], subs[0].diagnostics)


def suite_duality(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    for n in cfg.ns([1, 2, 3]):
        caps = _caps(cfg, n, {1: (6, 6), 2: (6, 6), 3: (4, 4)})
        tag = f"n={n} caps={caps[0]},{caps[1]}"

        def psi_swap(n=n, caps=caps, tag=tag):
            psi = bs.psi_series(n, P, caps)
            return col.series(f"duality/psi-swap {tag}", psi.swap_blocks(), psi)

        def phi_swap(n=n, caps=caps, tag=tag):
            phi = bs.phi_series(n, P, caps)
            return col.series(f"duality/phi-swap {tag}", phi.swap_blocks(), phi)

        def phi_leading(n=n, caps=caps, tag=tag):
            phi = bs.phi_series(n, P, caps)
            lead = bs.phi_leading(n, P, caps)
            zlead = phi.restrict_leading("z", n)
            wlead = phi.restrict_leading("w", n)
            a = col.series(f"duality/phi-leading {tag}", zlead, lead)
            if a.status == FAIL:
                return a
            return col.series(f"duality/phi-leading {tag}", wlead, lead.swap_blocks())

        def F_coherence(n=n, caps=caps, tag=tag):
            big = bs.F_series(n, P, (caps[0], caps[1] + 2))
            return col.series(f"duality/F-cap-coherence {tag}", big.truncate(caps),
                              bs.F_series(n, P, caps))

        for nm, fn in (("psi-swap", psi_swap), ("phi-swap", phi_swap),
                       ("phi-leading", phi_leading), ("F-cap-coherence", F_coherence)):
            col.run(f"duality/{nm} {tag}", fn)
    if cfg.n in (None, 3):
        caps = cfg.caps_for((5, 5))

        def restriction():
            psi3 = bs.psi_series(3, P, caps)
            psi2 = bs.psi_series(2, P, caps).reindex(3, [1], [1], caps)
            return col.series(f"duality/restriction r=2 caps={caps[0]},{caps[1]}",
                              psi3.restrict_leading("z", 2), psi2)
        col.run("duality/restriction", restriction)


def suite_tqt(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    q, t = P.sq(), P.st()
    for n in cfg.ns([1, 2, 3]):
        caps = _caps(cfg, n, {1: (6, 6), 2: (8, 8), 3: (4, 4)})
        tag = f"n={n} caps={caps[0]},{caps[1]}"
        col.run(f"tqt/psi {tag}", lambda n=n, caps=caps, tag=tag: col.series(
            f"tqt/psi {tag}", bs.psi_series(n, P, caps), bs.psi_series(n, P.dual(), caps)))
        col.run(f"tqt/p-transform {tag}", lambda n=n, caps=caps, tag=tag: col.series(
            f"tqt/p-transform {tag}", bs.p_series(n, P, caps),
            bs.pair_product(bs.p_series(n, P.dual(), caps), "z", t, q / t, q)))
        if n == 2:
            col.run(f"tqt/q-euler {tag}", lambda caps=caps, tag=tag: col.series(
                f"tqt/q-euler {tag}", bs.p2_hypergeometric(P, caps),
                bs.p2_euler_form(P, caps)))
            col.run(f"tqt/p2-2phi1 {tag}", lambda caps=caps, tag=tag: col.series(
                f"tqt/p2-2phi1 {tag}", bs.p_series(2, P, caps), bs.p2_hypergeometric(P, caps)))


def suite_poles(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params().__class__(cfg.q, cfg.t, "exact", cfg.precision, True)
    zmax = cfg.Dz if cfg.Dz is not None else 4
    for n in cfg.ns([2, 3]):
        def grid(n=n):
            bad, inconc = [], []
            simple = 0
            count = 0
            for mu in ops.shift_vectors(n - 1, [1] * (n - 1), zmax):
                for pair in bs.UpperTri.pairs(n):
                    for k in range(3):
                        for side in ("negative", "nonnegative"):
                            order, sat = bs.pole_probe(n, mu, pair, k, side, P)
                            count += 1
                            label = f"mu={list(mu)} pair={pair} k={k} {side}"
                            if sat:
                                inconc.append(label)
                                continue
                            if order == ZERO:
                                continue
                            bound = -1 if side == "negative" else 0
                            if order < bound:
                                bad.append(f"{label} order={order}")
                            if order == -1:
                                simple += 1
            diag = {"probes": count, "simple_poles": simple, "window": [-4, 4], "zdeg_max": zmax}
            name = f"poles/grid n={n}"
            if bad:
                return SubCheck(name, FAIL, "0", bad[:MAX_WITNESSES], diag)
            if inconc:
                return SubCheck(name, INCONCLUSIVE, "0", inconc[:MAX_WITNESSES], diag)
            if n >= 2 and simple == 0:
                return SubCheck(name, FAIL, "0", ["no simple pole witnessed"], diag)
            return SubCheck(name, EXACT_PASS, "0", [], diag)
        col.run(f"poles/grid n={n}", grid)
    if cfg.n in (None, 3):
        def cancellation():
            s = bs.probe_point(3, (1, 2), P.q ** 0)
            orders = []
            for th in bs.enumerate_Mn(3, 2):
                if bs.mu_of(th) == (1, 1):
                    orders.append(bs.pole_order(bs.c_at(th, s, P)))
            total, _ = bs.pole_probe(3, (1, 1), (1, 2), 0, "nonnegative", P)
            ok = (-1 in orders) and (total == ZERO or total >= 0)
            return col.flag("poles/cancellation n=3 mu=(1,1) s2/s1=1+eps", ok,
                            [] if ok else [f"terms={orders} sum={total}"],
                            {"term_orders": [str(o) for o in orders], "sum_order": str(total)})
        col.run("poles/cancellation", cancellation)


def suite_recurrences(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    targets = cfg.ns([2, 3])
    for m in targets:
        if m < 2:
            col.add(col.flag("recurrences/trivial n=1", bs.p_series(1, P, (3, 3)) ==
                             TruncSeries.one(1, (3, 3))))
            continue
        zmax = 3

        def crec(m=m):
            caps = cfg.caps_for((zmax, 4))
            bad = []
            count = 0
            for th in bs.enumerate_Mn(m, zmax):
                count += 1
                a = bs.c_series(th, P, caps)
                b = bs.c_recurrence_rhs(th, P, caps)
                if a != b:
                    bad.append(str(th.entries))
            return col.flag(f"recurrences/c-column n+1={m} zdeg<=3", not bad, bad,
                            {"matrices": count, "caps": list(caps)})
        col.run(f"recurrences/c-column n+1={m}", crec)
        caps = _caps(cfg, m, {2: (5, 5), 3: (4, 4)})
        n = m - 1
        tag = f"{n}->{m} caps={caps[0]},{caps[1]}"
        col.run(f"recurrences/jackson {tag}", lambda n=n, m=m, caps=caps, tag=tag: col.series(
            f"recurrences/jackson {tag}",
            ops.jackson_recur_step(bs.phi_series(n, P, caps), P), bs.phi_series(m, P, caps)))
        col.run(f"recurrences/kop-explicit {tag}", lambda n=n, m=m, caps=caps, tag=tag: col.series(
            f"recurrences/kop-explicit {tag}",
            ops.kop_recur_step(bs.psi_series(n, P, caps), P), bs.psi_series(m, P, caps)))
        col.run(f"recurrences/kop-composed {tag}", lambda n=n, m=m, caps=caps, tag=tag: col.series(
            f"recurrences/kop-composed {tag}",
            ops.kop_recur_compose(bs.psi_series(n, P, caps), P), bs.psi_series(m, P, caps)))

        def keig(n=n, m=m, caps=caps, tag=tag):
            base = bs.psi_series(n, P, caps).embed(m, caps)
            return col.series(f"recurrences/K-eigen {tag}", ops.K_apply(base, n, 1, P),
                              base * ops.K_eigenvalue(n, m, caps, 1, P))
        col.run(f"recurrences/K-eigen {tag}", keig)


def _sample_point(cfg: SuiteConfig, n: int, salt: str) -> List[Fraction]:
    rng = cfg.rng(salt)
    while True:
        x = [cfg.draw(rng) for _ in range(n)]
        if len(set(x)) == n and all(v != 0 for v in x):
            return x


def suite_macdonald(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    for n in cfg.ns([1, 2, 3]):
        lams = [lam for k in range(5) for lam in md.partitions(k, n)]

        def spec(n=n, lams=lams):
            bad = [str(lam) for lam in lams if md.specialization_residual(lam, n, P).terms]
            return col.flag(f"macdonald/specialization n={n} |lambda|<=4", not bad, bad,
                            {"partitions": len(lams)})

        def monic(n=n, lams=lams):
            bad = []
            for lam in lams:
                Pl = md.macdonald_poly(lam, n, P)
                if Pl.coeff(md._pad(lam, n)) != 1 or not Pl.is_symmetric():
                    bad.append(str(lam))
            return col.flag(f"macdonald/monic-symmetric n={n}", not bad, bad)

        def dual(n=n):
            small = [lam for k in range(4) for lam in md.partitions(k, n)]
            pairs = [(f"{l}|{m}", md.duality_residual(l, m, n, P), 0)
                     for l in small for m in small]
            return col.scalars(f"macdonald/duality n={n} |lambda|,|mu|<=3", pairs)

        col.run(f"macdonald/specialization n={n}", spec)
        col.run(f"macdonald/monic-symmetric n={n}", monic)
        col.run(f"macdonald/duality n={n}", dual)
    for n in cfg.ns([1, 2, 3, 4]):
        def evaluation(n=n):
            pairs = []
            for k in range(6):
                for lam in md.partitions(k, n):
                    a = md.principal_eval(lam, n, P)
                    pairs.append((f"{lam} second display", a, md.principal_eval_alt(lam, n, P)))
                    pairs.append((f"{lam} substitution", a,
                                  md.macdonald_poly(lam, n, P)(md.delta_point(n, P))))
            return col.scalars(f"macdonald/evaluation n={n} |lambda|<=5", pairs)
        col.run(f"macdonald/evaluation n={n}", evaluation)

        def deigen(n=n):
            x0 = _sample_point(cfg, n, f"deigen{n}")
            pairs = []
            for k in range(6):
                for lam in md.partitions(k, n):
                    Pl = md.macdonald_poly(lam, n, P)
                    s = ops.spectral_point(lam, n, P)
                    for r in range(n + 1):
                        pairs.append((f"lambda={lam} r={r}", ops.D_apply_pointwise(r, Pl, x0, P),
                                      ops.elementary(r, s) * Pl(x0)))
            return col.scalars(f"macdonald/D-eigen n={n} |lambda|<=5", pairs,
                               diagnostics={"x0": [str(v) for v in x0]})
        col.run(f"macdonald/D-eigen n={n}", deigen)


def _random_symmetric(cfg: SuiteConfig, n: int, rng) -> md.SymmetricPoly:
    terms = {}
    for deg in range(4):
        for lam in md.partitions(deg, n):
            c = cfg.draw(rng)
            lam = md._pad(lam, n)
            for e in set(itertools.permutations(lam)):
                terms[e] = c
    return md.SymmetricPoly(n, terms)


def suite_wronski(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()

    def residuals(n):
        pairs = []
        for k in range(1, 5):
            for size in range(5):
                for lam in md.partitions(size, n):
                    pairs.append((f"k={k} lambda={lam}", ops.wronski_residual(k, lam, n, P), 0))
        return col.scalars(f"wronski/residual n={n} k<=4 |lambda|<=4", pairs)

    for n in cfg.ns([1, 2, 3, 4]):
        col.run(f"wronski/residual n={n}", lambda n=n: residuals(n))
    for n in cfg.ns([1, 2, 3]):
        if n > 3:
            continue

        def pointwise(n=n):
            rng = cfg.rng(f"wronski{n}")
            pairs = []
            for p in range(5):
                f = _random_symmetric(cfg, n, rng)
                x = _sample_point(cfg, n, f"wronski{n}:{p}")
                for k, v in enumerate(ops.wronski_pointwise(f, x, P, 4), start=1):
                    pairs.append((f"point={p} u^{k}", v, 0))
            return col.scalars(f"wronski/pointwise n={n} U_max=4", pairs)

        def hdisplays(n=n):
            rng = cfg.rng(f"hdisp{n}")
            pairs = []
            for p in range(3):
                f = _random_symmetric(cfg, n, rng)
                x = _sample_point(cfg, n, f"hdisp{n}:{p}")
                for l in range(4):
                    pairs.append((f"point={p} l={l}", ops.H_apply_pointwise(l, f, x, P),
                                  ops.H_alt_apply_pointwise(l, f, x, P)))
            return col.scalars(f"wronski/H-displays n={n}", pairs)

        def heigen(n=n):
            x0 = _sample_point(cfg, n, f"heigen{n}")
            pairs = []
            for size in range(4):
                for lam in md.partitions(size, n):
                    Pl = md.macdonald_poly(lam, n, P)
                    h = ops.h_coeffs(lam, n, P, 4)
                    for l in range(5):
                        pairs.append((f"lambda={lam} l={l}", ops.H_apply_pointwise(l, Pl, x0, P),
                                      h[l] * Pl(x0)))
            return col.scalars(f"wronski/H-eigen n={n}", pairs)

        col.run(f"wronski/pointwise n={n}", pointwise)
        col.run(f"wronski/H-displays n={n}", hdisplays)
        col.run(f"wronski/H-eigen n={n}", heigen)


PRINCIPAL_Q = Fraction(3, 10)
PRINCIPAL_T = Fraction(5)
PRINCIPAL_CASES = {2: (40, (Fraction(7, 100),), 1e-8),
                   3: (30, (Fraction(7, 100), Fraction(1, 20)), 1e-6)}


def _shrinking(shells, tail: int = 5) -> bool:
    last = [s for s in shells[-tail:]]
    return all(b < a for a, b in zip(last, last[1:]))


def suite_principal(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    for n in cfg.ns([1, 2, 3, 4]):
        def exact(n=n):
            Dz = cfg.Dz if cfg.Dz is not None else (6 if n <= 3 else 4)
            s = ops.spectral_point((), n, P)
            co = bs.p_coeffs_at(n, s, P, Dz)
            bad = [str(mu) for mu, v in co.items() if v != (1 if not any(mu) else 0)]
            return col.flag(f"principal/exact n={n} Dz={Dz}", not bad, bad, {"Dz": Dz})
        col.run(f"principal/exact n={n}", exact)
    for n in cfg.ns([2, 3]):
        if n not in PRINCIPAL_CASES:
            continue
        N0, ratios, tol0 = PRINCIPAL_CASES[n]

        def numeric(n=n, N0=N0, ratios=ratios, tol0=tol0):
            N = cfg.N if cfg.N is not None else N0
            tol = cfg.tol if cfg.tol is not None else tol0
            fp = Params(PRINCIPAL_Q, PRINCIPAL_T, "float", cfg.precision)
            s = bs.ratios_to_point(list(ratios), Fraction(1))
            with mpmath.workprec(cfg.precision):
                lhs, shells = bs.principal_lhs(n, s, fp, N)
                rhs = bs.principal_rhs(n, s, fp)
                err = float(abs(lhs - rhs) / abs(rhs))
            diag = {"N": N, "q": "3/10", "t": "5", "s": [str(v) for v in s],
                    "precision": cfg.precision, "tol": tol,
                    "last_shells": [mpmath.nstr(v, 6) for v in shells[-5:]]}
            name = f"principal/summation n={n}"
            if not _shrinking(shells):
                return SubCheck(name, INCONCLUSIVE, err, ["shells not shrinking"], diag)
            if err < tol:
                return SubCheck(name, NUMERIC_PASS, err, [], diag)
            return SubCheck(name, FAIL, err, [f"relative error {err:.3e}"], diag)
        col.run(f"principal/summation n={n}", numeric)


N3_NUMERIC = {"q": Fraction(3, 10), "t": Fraction(2, 5),
              "x": (Fraction(1, 20), Fraction(1, 10)), "s": (Fraction(3, 40), Fraction(1, 16))}


def suite_n3(cfg: SuiteConfig, col: Collector) -> None:
    P = cfg.params()
    caps = cfg.caps_for((3, 3))
    col.run("n3/closed-p", lambda: col.series(
        f"n3/closed-p caps={caps[0]},{caps[1]}", bs.closed_n3_p(P, caps),
        bs.p_series(3, P.dual(), caps)))
    s = bs.ratios_to_point(list(cfg.s_ratios), Fraction(1))

    def double_sum():
        pairs = [(f"theta={a} rho={b}", bs.n3_coefficient_lhs(a, b, s, P),
                  bs.n3_coefficient_rhs(a, b, s, P)) for a in range(4) for b in range(4)]
        return col.scalars("n3/double-sum theta,rho<=3", pairs, diagnostics={"s": [str(v) for v in s]})

    def w14():
        pairs = [(f"theta={a} rho={b}",) + tf.n3_w14_sides(a, b, s, P)
                 for a in range(4) for b in range(4)]
        return col.scalars("n3/w14 theta,rho<=3", pairs)

    col.run("n3/double-sum", double_sum)
    col.run("n3/w14", w14)

    def phi_point():
        N = cfg.N if cfg.N is not None else 40
        tol = cfg.tol if cfg.tol is not None else 1e-20
        fp = Params(N3_NUMERIC["q"], N3_NUMERIC["t"], "float", cfg.precision)
        with mpmath.workprec(cfg.precision):
            a, last = bs.closed_n3_phi_at(N3_NUMERIC["x"], N3_NUMERIC["s"], fp, N)
            b, shells = bs.phi_at(3, N3_NUMERIC["x"], N3_NUMERIC["s"], fp, N)
            c, _ = bs.closed_n3_phi_at(N3_NUMERIC["s"], N3_NUMERIC["x"], fp, N)
        diag = {"N": N, "q": "3/10", "t": "2/5", "precision": cfg.precision,
                "last_term": mpmath.nstr(last, 6), "last_shell": mpmath.nstr(shells[-1], 6)}
        return col.scalars("n3/phi-point", [("closed vs series", a, b), ("x<->s swap", a, c)],
                           tol=tol, diagnostics=diag)
    col.run("n3/phi-point", phi_point)

    def n2_forms():
        tol = cfg.tol if cfg.tol is not None else 1e-30
        c2 = (4, 4)
        with mpmath.workprec(cfg.precision):
            ref = bs.F_series(2, P, c2)
            pairs = []
            info = {}
            for variant in ("t", "q/t"):
                cs, kmax = bs.closed_n2(P, c2, variant)
                info[f"K_max[{variant}]"] = kmax
                for key, v in ref.items():
                    pairs.append((f"{variant} {key}", approx(v), cs.terms.get(key, 0)))
        return col.scalars("n2/closed-forms caps=4,4", pairs, tol=tol, diagnostics=info)
    col.run("n2/closed-forms", n2_forms)

    def n2_point():
        tol = cfg.tol if cfg.tol is not None else 1e-30
        fp = Params(Fraction(3, 10), Fraction(1, 2), "float", cfg.precision)
        z = Fraction(1, 10)
        with mpmath.workprec(cfg.precision):
            a = bs.closed_n2_at(z, z, fp, "t")
            b = bs.closed_n2_at(z, z, fp, "q/t")
            c = bs.F2_at_from_series(z, z, fp, 120)
        return col.scalars("n2/closed-point q=0.3 t=0.5", [("t vs q/t", a, b), ("t vs series", a, c)],
                           tol=tol)
    col.run("n2/closed-point", n2_point)


def _draws(cfg: SuiteConfig, salt: str, k: int, count: int, check: Callable) -> List[tuple]:
    """count parameter tuples of size k for which ``check`` evaluates cleanly."""
    rng = cfg.rng(salt)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 50 * count:
            raise RuntimeError("could not draw generic parameters")
        vals = tuple(cfg.draw(rng) for _ in range(k))
        try:
            res = check(vals)
        except (ZeroDivisionError, ValueError):
            continue
        out.append((vals, res))
    return out


def suite_hypergeom(cfg: SuiteConfig, col: Collector) -> None:
    q = cfg.q

    def k1():
        pairs, draws = [], []
        for th in range(4):
            got = _draws(cfg, f"k1:{th}", 5, 5,
                         lambda v: tf.vwp_root_reduction_sides(th, v[0], v[1], v[2:4], v[4], q))
            for vals, (l, r) in got:
                pairs.append((f"theta={th} a,f,a1,a2,z={[str(x) for x in vals]}", l, r))
                draws.append([str(x) for x in vals])
        return col.scalars("hypergeom/vwp-root-reduction r=2 theta<=3", pairs, diagnostics={"draws": draws})

    def k2():
        pairs, draws = [], []
        for th in range(4):
            got = _draws(cfg, f"k2:{th}", 5, 5,
                         lambda v: tf.w10_to_5phi4_sides(th, *v, q))
            for vals, (l, r) in got:
                pairs.append((f"theta={th} a,c,d,e,f={[str(x) for x in vals]}", l, r))
                draws.append([str(x) for x in vals])
        return col.scalars("hypergeom/w10-to-5phi4 theta<=3", pairs, diagnostics={"draws": draws})

    def l2():
        pairs = []
        for th in range(3):
            got = _draws(cfg, f"l2:{th}", 6, 3, lambda v: tf.order_exchange_sides(th, *v, q))
            for vals, (l, r) in got:
                pairs.append((f"theta={th} a,c,d,e,f,g={[str(x) for x in vals]}", l, r))
        return col.scalars("hypergeom/order-exchange theta<=2", pairs)

    def saal():
        pairs = []
        for n in range(6):
            got = _draws(cfg, f"saal:{n}", 3, 5, lambda v: saalschutz_sides(n, *v, q))
            for vals, (l, r) in got:
                pairs.append((f"n={n} a,b,c={[str(x) for x in vals]}", l, r))
        return col.scalars("hypergeom/saalschutz n<=5", pairs)

    for nm, fn in (("vwp-root-reduction", k1), ("w10-to-5phi4", k2),
                   ("order-exchange", l2), ("saalschutz", saal)):
        col.run(f"hypergeom/{nm}", fn)


SUITES: Dict[str, Callable[[SuiteConfig, Collector], None]] = {
    "eigen": suite_eigen,
    "duality": suite_duality,
    "tqt": suite_tqt,
    "poles": suite_poles,
    "recurrences": suite_recurrences,
    "macdonald": suite_macdonald,
    "wronski": suite_wronski,
    "principal": suite_principal,
    "n3": suite_n3,
    "hypergeom": suite_hypergeom,
}


def run_suite(name: str, cfg: SuiteConfig) -> CheckReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    col = Collector(cfg)
    start = time.perf_counter()
    with mpmath.workprec(cfg.precision):
        SUITES[name](cfg, col)
    elapsed = int((time.perf_counter() - start) * 1000) if cfg.timing else 0
    return CheckReport.combine(name, cfg.to_json(), col.checks, elapsed)


def _run_pair(args):
    return run_suite(*args)


def worker_count() -> int:
    raw = os.environ.get("RMBISPEC_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suites(names: Sequence[str], cfg: SuiteConfig, workers: Optional[int] = None
               ) -> List[CheckReport]:
    """Run suites (possibly in worker processes); output is ordered by name."""
    order = [n for n in SUITES if n in set(names)]
    unknown = set(names) - set(SUITES)
    if unknown:
        raise KeyError(f"unknown suites {sorted(unknown)}")
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(order) <= 1:
        return [run_suite(n, cfg) for n in order]
    with ProcessPoolExecutor(max_workers=min(workers, len(order))) as ex:
        results = list(ex.map(_run_pair, [(n, cfg) for n in order]))
    return results
