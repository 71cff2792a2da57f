"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them in the terminal summary. Run alone with ``pytest tests/test_acceptance.py``.
"""

import numpy as np
import pytest

from uslev import checks, efficiency, instances, order, scalarize, sets
from uslev.extvalues import Real
from uslev.phi import PhiProblem, phi_eval

SEED = 20240601
RESULTS = {}


def verdict(number, title, ok, info=""):
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}" + (
        f" ({info})" if info else "")
    assert ok, RESULTS[number]


def rng_for(number):
    return np.random.default_rng([SEED, number])


def suite_ok(res):
    return res.passed and res.n > 0


def describe(res):
    out = f"{res.n} samples, {res.failures} failures"
    if res.witness is not None:
        out += f", first witness {res.witness}"
    return out


@pytest.fixture(scope="module")
def clouds():
    """100 clouds, dims 2-4, at most 200 points, with (D, k), k in core D."""
    rng = rng_for(5)
    out = []
    for _ in range(100):
        P = checks.cloud_instance(rng, 200)
        D, k = checks._cone_with_unit(rng, P.shape[1])
        out.append((P, D, k))
    return out


def test_criterion_01_worked_example():
    A, k = sets.Orthant(2, "nonpos"), (1.0, 1.0)
    v1 = phi_eval(PhiProblem(A, k), (-1.0, -1.0))
    v2 = phi_eval(PhiProblem(A, k), (-2.0, 0.0))
    R = order.DominationRelation(sets.Orthant(2, "nonneg"))
    reversed_ = order.relation_holds(R, (-1.0, -1.0), (-2.0, 0.0))
    ok = v1 == Real(-1.0) and v2 == Real(0.0) and reversed_ is False
    verdict(1, "worked example values and order non-reversal", ok,
            f"phi(-1,-1)={v1}, phi(-2,0)={v2}, relation={reversed_}")


def test_criterion_02_closed_form_matches_bisection():
    res = checks.suite_phi_oracle(rng_for(2), 1000)
    ok = suite_ok(res) and res.n == 1000 and res.detail["max_abs_diff"] <= 1e-6
    verdict(2, "closed form vs bisection, 1000 samples, 1e-6", ok,
            describe(res) + f", max diff {res.detail['max_abs_diff']:.2e}")


def test_criterion_03_identities():
    rng = rng_for(3)
    runs = [suite(rng, 1000) for suite in (checks.suite_phi_translation,
                                           checks.suite_phi_scaling, checks.suite_phi_shifts)]
    ok = all(suite_ok(r) and r.n == 1000 for r in runs)
    verdict(3, "translation/scaling/shift identities, 1000 samples each, 1e-8", ok,
            "; ".join(f"{r.name}: {describe(r)}" for r in runs))


def test_criterion_04_sublevel_identity():
    res = checks.suite_phi_sublevel(rng_for(4), 1000)
    verdict(4, "sublevel identity, 1000 samples, zero discrepancies",
            suite_ok(res) and res.n == 1000, describe(res))


def test_criterion_05_characterizations(clouds):
    rng = rng_for(50)
    bad = []
    for i, (P, D, k) in enumerate(clouds):
        e = efficiency.eff(P, D).indices
        w = efficiency.weff(P, D).indices
        ce = scalarize.characterize_eff(P, D, k).indices
        cw = scalarize.characterize_weff(P, D, k, rng).indices
        if ce != e or cw != w:
            bad.append(i)
    verdict(5, "characterize_eff = eff and characterize_weff = weff on 100 clouds",
            not bad, f"mismatched clouds {bad[:5]}" if bad else "100 exact matches")


def _anchored(clouds, mode, number):
    rng = rng_for(number * 10)
    bad, worst = [], 0.0
    for i, (P, D, k) in enumerate(clouds):
        ok, info = checks.anchored_check(P, D, k, mode, rng)
        worst = max(worst, info["anchor_dev"])
        if not ok:
            bad.append((i, info))
    return bad, worst


def test_criterion_06_bound_anchored(clouds):
    bad, worst = _anchored(clouds, "below", 6)
    verdict(6, "bound-anchored verdicts = weff, anchor -1 within 1e-9", not bad and worst <= 1e-9,
            f"max anchor deviation {worst:.1e}" + (f", first mismatch {bad[0]}" if bad else ""))


def test_criterion_07_norm_scalarization(clouds):
    bad, worst = _anchored(clouds, "norm", 7)
    res = checks.suite_norm_coincidence(rng_for(70), 1000)
    dev = res.detail["max_abs_diff"]
    ok = not bad and worst <= 1e-9 and suite_ok(res) and res.n >= 1000 and dev <= 1e-9
    verdict(7, "norm verdicts = weff, anchor 1, order-unit norm/phi coincidence 1e-9", ok,
            f"anchor deviation {worst:.1e}, coincidence {dev:.1e} over {res.n} samples"
            + (f", first mismatch {bad[0]}" if bad else ""))


def test_criterion_08_gauge_relation():
    res = checks.suite_norm_gauge(rng_for(8), 1000)
    verdict(8, "gauge of C+k = max(phi, 0) within 1e-8, 1000 samples",
            suite_ok(res) and res.n == 1000,
            describe(res) + f", max diff {res.detail['max_abs_diff']:.1e}")


def test_criterion_09_efficiency_algebra():
    rng = rng_for(9)
    bad = []
    for i in range(100):
        n = int(rng.integers(2, 5))
        P = instances.random_cloud(rng, n, int(rng.integers(5, 81)),
                                   str(rng.choice(["mixed", "grid", "box"])))
        D = sets.Orthant(n, "nonneg") if i % 4 == 0 else instances.random_pointed_cone(rng, n)[0]
        entries = {e["check"]: e for e in efficiency.eff_algebra_check(P, D, rng)}
        for name in ("augmentation-invariance", "slice-identity", "weak-slice-identity"):
            if entries[name]["passed"] is not True:
                bad.append((i, name, entries[name]))
    verdict(9, "augmentation invariance and slice identities on 100 pointed cones", not bad,
            f"first failure {bad[0]}" if bad else "zero witnesses")


def test_criterion_10_monotonicity():
    res = checks.suite_phi_monotone(rng_for(10), 1000)
    strict = res.detail["strict_pairs"]
    verdict(10, "recession monotonicity and strict core monotonicity, 1000 pairs",
            suite_ok(res) and res.n == 1000 and strict > 0,
            describe(res) + f", {strict} strict pairs")


def test_criterion_11_separation():
    res = checks.suite_separation(rng_for(11), 50)
    verdict(11, "separation verdicts match construction on 50 instances",
            suite_ok(res) and res.n == 50, describe(res))


def test_criterion_12_min_equals_eff():
    res = checks.suite_order_min(rng_for(12), 100)
    verdict(12, "min_points = min_via_eff on 100 antisymmetric domination sets",
            suite_ok(res) and res.n == 100, describe(res))
