"""Seeded property suites with brute-force oracles.

Each suite draws random instances, compares the library against an
independent route (bisection, pairwise membership, definitions) and reports
the first failing instance as a witness. The functional is always reached
through the ``phi`` module attribute so that a patched evaluator is seen.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import efficiency, extvalues, instances, norms, order, scalarize, sets
from . import phi as phi_mod
from .extvalues import Real, ext_add, ext_le, ext_lt, ext_scale

logger = logging.getLogger(__name__)

TRANSLATION_TOL = 1e-8
ORACLE_TOL = 1e-6
GAUGE_TOL = 1e-8
NORM_TOL = 1e-9
ANCHOR_TOL = 1e-9


@dataclass
class SuiteResult:
    name: str
    passed: bool
    n: int
    failures: int = 0
    witness: Optional[dict] = None
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "n": self.n, "failures": self.failures}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


class _Tally:
    def __init__(self, name):
        self.name = name
        self.n = 0
        self.failures = 0
        self.witness = None
        self.detail = {}

    def record(self, ok, witness=None):
        self.n += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness
        return ok

    def result(self):
        return SuiteResult(self.name, self.failures == 0, self.n, self.failures,
                           self.witness, self.detail)


def _json_ext(v):
    return extvalues.to_json(v)


def _same_kind(v, w):
    return v.kind == w.kind


def _close(v, w, tol):
    """Same variant and, for reals, values within ``tol * (1 + |v|)``."""
    if not _same_kind(v, w):
        return False
    if not v.is_real:
        return True
    return abs(v.value - w.value) <= tol * (1.0 + abs(v.value))


def _phi(A, k, Y):
    kinds, values = phi_mod.phi_many(A, k, Y)
    return [phi_mod.to_ext(int(c), float(v)) for c, v in zip(kinds, values)]


def _dim(rng):
    return int(rng.integers(2, 5))


def phi_instance(rng, n=None, unions=True):
    """``(A, k)`` with ``k in -0+A``: single polyhedra, slabs and unions."""
    n = n if n is not None else _dim(rng)
    roll = rng.uniform()
    if roll < 0.1:
        return instances.random_polyhedron_with_direction(rng, n, m=0, zero_rows=1)
    if unions and roll < 0.3:
        A1, k = instances.random_polyhedron_with_direction(rng, n)
        A2, _ = instances.random_polyhedron_with_direction(rng, n, k=k)
        return sets.Union((A1, A2)), k
    zero_rows = int(rng.uniform() < 0.3)
    return instances.random_polyhedron_with_direction(rng, n, zero_rows=zero_rows)


def _points(rng, n, m=1, scale=10.0):
    return rng.uniform(-scale, scale, size=(m, n))


# --------------------------------------------------------------------------
# extvalues


def suite_ext_order(rng, size):
    t = _Tally("extvalues.order-and-arithmetic")
    for _ in range(size):
        kind = rng.choice(["real", "-inf", "nu"], p=[0.8, 0.1, 0.1])
        v = Real(rng.uniform(-10, 10)) if kind == "real" else (
            extvalues.NegInf if kind == "-inf" else extvalues.Nu)
        s, u = rng.uniform(-10, 10, 2)
        a, b = rng.uniform(0.1, 10, 2)
        le, gt = ext_le(v, s), extvalues.ext_gt(v, s)
        ok = (not le and not gt) if v.is_nu else (le != gt)
        ok &= ext_add(ext_add(v, s), u) == ext_add(v, s + u) or (
            v.is_real and ext_add(ext_add(v, s), u).value == (v.value + s) + u)
        lhs, rhs = ext_scale(ext_scale(v, a), b), ext_scale(v, a * b)
        ok &= _same_kind(lhs, rhs) and (not lhs.is_real or math.isclose(
            lhs.value, rhs.value, rel_tol=4e-16, abs_tol=1e-300))
        t.record(ok, {"v": _json_ext(v), "s": s, "t": u, "a": a, "b": b})
    return t.result()


# --------------------------------------------------------------------------
# sets


def suite_sets_membership(rng, size):
    t = _Tally("sets.membership-identities")
    for _ in range(max(1, size // 10) if size else 0):
        A, k = phi_instance(rng, unions=False)
        n = sets.dim(A)
        Y = _points(rng, n, 10)
        core = sets.contains_core_many(A, Y)
        mem = sets.contains_many(A, Y)
        neg = sets.contains_many(sets.Negate(sets.Negate(A)), Y)
        ok = bool(np.all(~core | mem)) and bool(np.all(mem == neg))
        # recession directions keep sampled members inside
        R = sets.recession_cone(A)
        us = sets.sample_members(R, rng, 3)
        mem_pts = sets.sample_members(A, rng, 3)
        for u in us:
            for a in mem_pts:
                for s in (0.1, 1.0, 10.0):
                    ok &= sets.contains(A, a + s * u)
        t.record(ok, {"set": sets.set_to_json(A)})
    return t.result()


# --------------------------------------------------------------------------
# phi


def suite_phi_oracle(rng, size):
    t = _Tally("phi.closed-form-vs-bisection")
    worst = 0.0
    for _ in range(size):
        A, k = phi_instance(rng)
        y = _points(rng, sets.dim(A))[0]
        closed = _phi(A, k, y[None, :])[0]
        ref = phi_mod.phi_oracle(phi_mod.PhiProblem(A, k), y)
        ok = _same_kind(closed, ref)
        if ok and closed.is_real:
            diff = abs(closed.value - ref.value)
            worst = max(worst, diff)
            ok = diff <= ORACLE_TOL
        t.record(ok, {"set": sets.set_to_json(A), "k": k.tolist(), "y": y.tolist(),
                      "closed_form": _json_ext(closed), "bisection": _json_ext(ref)})
    t.detail["max_abs_diff"] = worst
    return t.result()


def suite_phi_translation(rng, size):
    t = _Tally("phi.translation-invariance")
    for _ in range(size):
        A, k = phi_instance(rng)
        y = _points(rng, sets.dim(A))[0]
        s = rng.uniform(-10, 10)
        v, w = _phi(A, k, np.vstack([y, y + s * k]))
        t.record(_close(w, ext_add(v, s), TRANSLATION_TOL),
                 {"set": sets.set_to_json(A), "k": k.tolist(), "y": y.tolist(), "t": s,
                  "phi(y)": _json_ext(v), "phi(y+tk)": _json_ext(w)})
    return t.result()


def suite_phi_scaling(rng, size):
    t = _Tally("phi.direction-scaling")
    for _ in range(size):
        A, k = phi_instance(rng)
        y = _points(rng, sets.dim(A))[0]
        lam = float(rng.choice([0.5, 2.0, 7.0]))
        v = _phi(A, k, y[None, :])[0]
        w = _phi(A, lam * k, y[None, :])[0]
        t.record(_close(w, ext_scale(v, lam), TRANSLATION_TOL),
                 {"set": sets.set_to_json(A), "k": k.tolist(), "y": y.tolist(), "lambda": lam})
    return t.result()


def suite_phi_shifts(rng, size):
    t = _Tally("phi.set-shifts")
    for _ in range(size):
        A, k = phi_instance(rng)
        n = sets.dim(A)
        y, y0 = _points(rng, n, 2)
        c = rng.uniform(-10, 10)
        v = _phi(A, k, y[None, :])[0]
        along = _phi(sets.Shift(c * k, A), k, y[None, :])[0]
        moved = _phi(sets.Shift(y0, A), k, y[None, :])[0]
        base = _phi(A, k, (y - y0)[None, :])[0]
        ok = _close(along, ext_add(v, -c), TRANSLATION_TOL) and _close(moved, base, TRANSLATION_TOL)
        t.record(ok, {"set": sets.set_to_json(A), "k": k.tolist(), "y": y.tolist(),
                      "c": c, "y0": y0.tolist()})
    return t.result()


def suite_phi_sublevel(rng, size):
    t = _Tally("phi.sublevel-identity")
    for _ in range(size):
        A, k = phi_instance(rng)
        y = _points(rng, sets.dim(A))[0]
        lvl = rng.uniform(-10, 10)
        v = _phi(A, k, y[None, :])[0]
        member = phi_mod.sublevel_contains(phi_mod.PhiProblem(A, k), y, lvl)
        t.record(ext_le(v, lvl) == member,
                 {"set": sets.set_to_json(A), "k": k.tolist(), "y": y.tolist(), "t": lvl,
                  "phi": _json_ext(v), "member": member})
    return t.result()


def suite_phi_strict_sublevel(rng, size):
    t = _Tally("phi.strict-sublevel-identity")
    for _ in range(size):
        # every normal has a.k > 0, so A - R_> k lies in core A
        A, k = instances.random_polyhedron_with_direction(rng, _dim(rng))
        y = _points(rng, sets.dim(A))[0]
        lvl = rng.uniform(-10, 10)
        v = _phi(A, k, y[None, :])[0]
        inside = sets.contains_core(sets.Shift(lvl * k, A), y)
        t.record(ext_lt(v, lvl) == inside,
                 {"set": sets.set_to_json(A), "k": k.tolist(), "y": y.tolist(), "t": lvl})
    return t.result()


def suite_phi_monotone(rng, size):
    t = _Tally("phi.recession-monotonicity")
    strict_checked = 0
    for _ in range(size):
        A, k = phi_instance(rng, unions=False)
        n = sets.dim(A)
        R = sets.recession_cone(A)
        u = sets.sample_members(R, rng, 1)
        if len(u) == 0:
            u = np.zeros((1, n))
        u = u[0]
        y1 = _points(rng, n)[0]
        y2 = y1 - u
        v1, v2 = _phi(A, k, np.vstack([y1, y2]))
        ok = True
        if not (v1.is_nu or v2.is_nu):
            ok = extvalues.ext_less(v1, v2) or v1 == v2 or (
                v1.is_real and v2.is_real and v1.value <= v2.value + 1e-12 * (1 + abs(v2.value)))
            if v1.is_real and v2.is_real and sets.contains_core(R, u, 1e-6):
                strict_checked += 1
                ok &= v1.value < v2.value
        t.record(ok, {"set": sets.set_to_json(A), "k": k.tolist(), "y1": y1.tolist(),
                      "y2": y2.tolist(), "phi1": _json_ext(v1), "phi2": _json_ext(v2)})
    t.detail["strict_pairs"] = strict_checked
    return t.result()


def suite_phi_convexity(rng, size):
    t = _Tally("phi.midpoint-convexity")
    for _ in range(size):
        A, k = phi_instance(rng, unions=False)
        n = sets.dim(A)
        y1, y2 = _points(rng, n, 2)
        v1, vm, v2 = _phi(A, k, np.vstack([y1, 0.5 * (y1 + y2), y2]))
        ok = True
        if v1.is_real and v2.is_real:
            ok = vm.is_neg_inf or (vm.is_real and vm.value <= 0.5 * (v1.value + v2.value) + 1e-9)
        t.record(ok, {"set": sets.set_to_json(A), "k": k.tolist(), "y1": y1.tolist(),
                      "y2": y2.tolist()})
    return t.result()


# --------------------------------------------------------------------------
# norms


def _cone_with_unit(rng, n=None):
    """``(D, k)``: orthant or random pointed polyhedral cone with ``k in core D``."""
    n = n if n is not None else _dim(rng)
    if rng.uniform() < 0.3:
        return sets.Orthant(n, "nonneg"), np.abs(rng.normal(size=n)) + 0.2
    D, k = instances.random_pointed_cone(rng, n)
    return D, k * rng.uniform(0.5, 2.0)


def suite_norm_gauge(rng, size):
    t = _Tally("norms.gauge-relation")
    worst = 0.0
    for _ in range(size):
        D, k = _cone_with_unit(rng)
        C = sets.Negate(D)              # k in -core C
        y = _points(rng, sets.dim(C), scale=5.0)[0]
        g = norms.gauge_of_shifted_cone(C, k, y)
        r = norms.phi_gauge_relation(C, k, y)
        ok = g.is_real and r.is_real
        if ok:
            diff = abs(g.value - r.value)
            worst = max(worst, diff)
            ok = diff <= GAUGE_TOL * max(1.0, abs(r.value))
        t.record(ok, {"cone": sets.set_to_json(C), "k": k.tolist(), "y": y.tolist(),
                      "gauge": _json_ext(g), "phi_plus": _json_ext(r)})
    t.detail["max_abs_diff"] = worst
    return t.result()


def suite_norm_coincidence(rng, size):
    t = _Tally("norms.order-unit-coincidence")
    worst = 0.0
    per = 20
    for _ in range(math.ceil(size / per) if size else 0):
        D, k = _cone_with_unit(rng)
        n = sets.dim(D)
        spec = norms.OrderUnitSpec(D, k, True)
        a = _points(rng, n, scale=5.0)[0]
        Y = a + sets.sample_members(D, rng, per)
        rep = norms.norm_phi_coincidence_check(spec, a, Y)
        worst = max(worst, rep.max_diff)
        for _ in range(rep.n):
            t.record(rep.passed, {"cone": sets.set_to_json(D), "k": k.tolist(), "a": a.tolist(),
                                  "worst_y": rep.worst, "diff": rep.max_diff})
    t.detail["max_abs_diff"] = worst
    return t.result()


def suite_norm_axioms(rng, size):
    t = _Tally("norms.norm-axioms")
    for _ in range(size):
        D, k = _cone_with_unit(rng)
        n = sets.dim(D)
        spec = norms.OrderUnitSpec(D, k, True)
        y, z = _points(rng, n, 2, scale=5.0)
        lam = rng.uniform(-5, 5)
        ny, nz, nyz, nly = norms.order_unit_norms(spec, np.vstack([y, z, y + z, lam * y]))
        ok = abs(nly - abs(lam) * ny) <= NORM_TOL * (1 + abs(lam) * ny)
        ok &= nyz <= ny + nz + NORM_TOL * (1 + ny + nz)
        ok &= ny > 0.0
        t.record(bool(ok), {"cone": sets.set_to_json(D), "k": k.tolist(), "y": y.tolist(),
                            "z": z.tolist(), "lambda": lam})
    return t.result()


# --------------------------------------------------------------------------
# efficiency and order


def cloud_instance(rng, max_points=200):
    n = _dim(rng)
    size = int(rng.integers(5, max_points + 1))
    kind = str(rng.choice(["mixed", "grid", "box"]))
    return instances.random_cloud(rng, n, size, kind)


def suite_eff_basic(rng, size):
    t = _Tally("efficiency.inclusions-and-order")
    for _ in range(size):
        P = cloud_instance(rng, 60)
        D, k = _cone_with_unit(rng, P.shape[1])
        e = set(efficiency.eff(P, D).indices)
        w = set(efficiency.weff(P, D).indices)
        # D1 = D cut by an extra halfspace is a subset of D
        g = rng.normal(size=P.shape[1])
        D1 = sets.intersect_polyhedra(D, sets.halfspaces([g], [0.0]))
        e1 = set(efficiency.eff(P, D1).indices)
        perm = rng.permutation(len(P))
        ep = {int(perm[i]) for i in efficiency.eff(P[perm], D).indices}
        ok = e <= w and e <= e1 and ep == e
        t.record(ok, {"points": P.tolist(), "cone": sets.set_to_json(D)})
    return t.result()


def suite_eff_algebra(rng, size):
    t = _Tally("efficiency.set-algebra")
    for _ in range(size):
        P = cloud_instance(rng, 60)
        D, _ = _cone_with_unit(rng, P.shape[1])
        entries = efficiency.eff_algebra_check(P, D, rng)
        bad = [e for e in entries if e["passed"] is False]
        t.record(not bad, {"points": P.tolist(), "cone": sets.set_to_json(D), "failed": bad})
    return t.result()


def domination_instance(rng):
    P = cloud_instance(rng, 60)
    return P, instances.random_domination_set(rng, P.shape[1])


def suite_order_min(rng, size):
    t = _Tally("order.min-equals-eff")
    for _ in range(size):
        P, D = domination_instance(rng)
        R = order.DominationRelation(D)
        a, b = order.min_points(R, P), order.min_via_eff(D, P)
        props = order.relation_properties(R, rng, 32)
        zero_in = sets.contains(D, np.zeros(P.shape[1]))
        ok = a == b and (props["reflexive"]["status"] == order.PROVEN_TRUE) == zero_in
        y = _points(rng, P.shape[1])[0]
        ok &= order.translate_invariant(R, P[0], P[-1], y)
        t.record(ok, {"points": P.tolist(), "set": sets.set_to_json(D),
                      "min_points": a, "min_via_eff": b})
    return t.result()


# --------------------------------------------------------------------------
# scalarization


def _upper_anchor(P, D, k):
    """Smallest shift of ``max(P) + 1`` along ``k`` with ``P in a - core D``."""
    a = P.max(axis=0) + 1.0
    return _push(a, P, D, k, below=True)


def _lower_anchor(P, D, k):
    a = P.min(axis=0) - 1.0
    return _push(a, P, D, k, below=False)


def _push(a, P, D, k, below):
    s = 0.0
    for _ in range(80):
        cand = a + s * k if below else a - s * k
        diff = cand - P if below else P - cand
        if np.all(sets.contains_core_many(D, diff, 1e-6)):
            return cand
        s = 1.0 if s == 0.0 else 2.0 * s
    raise RuntimeError("could not place the anchor point")


def suite_characterize(rng, size):
    t = _Tally("scalarize.characterizations")
    for _ in range(size):
        P = cloud_instance(rng)
        D, k = _cone_with_unit(rng, P.shape[1])
        e = efficiency.eff(P, D).indices
        w = efficiency.weff(P, D).indices
        ce = scalarize.characterize_eff(P, D, k).indices
        cw = scalarize.characterize_weff(P, D, k, rng).indices
        t.record(ce == e and cw == w, {"points": P.tolist(), "cone": sets.set_to_json(D),
                                       "k": k.tolist(), "eff": e, "characterize_eff": ce,
                                       "weff": w, "characterize_weff": cw})
    return t.result()


def anchored_check(P, D, k, mode, rng):
    """Run bound (below/above) or norm scalarization and compare with the oracles.

    Returns ``(ok, info)``.
    """
    w = efficiency.weff(P, D).indices
    e = efficiency.eff(P, D).indices
    if mode == "below":
        a = _upper_anchor(P, D, k)
        rep, anchor = scalarize.bound_scalarize(P, D, a, "below", rng), -1.0
    elif mode == "above":
        a = _lower_anchor(P, D, k)
        rep, anchor = scalarize.bound_scalarize(P, D, a, "above", rng), 1.0
    else:
        a = _lower_anchor(P, D, k)
        rep, anchor = scalarize.norm_characterize(P, D, a, rng), 1.0
    got_w, got_e = rep.extra["weff_indices"], rep.extra["eff_indices"]
    dev = max((abs(v["anchor"] - anchor) for v in rep.verdicts.values()), default=0.0)
    ok = got_w == w and got_e == e and dev <= ANCHOR_TOL
    return ok, {"a": a.tolist(), "weff": w, "got_weff": got_w, "eff": e, "got_eff": got_e,
                "anchor_dev": dev}


def suite_anchored(rng, size):
    t = _Tally("scalarize.anchored-characterizations")
    worst = 0.0
    for _ in range(size):
        P = cloud_instance(rng)
        D, k = _cone_with_unit(rng, P.shape[1])
        for mode in ("below", "above", "norm"):
            ok, info = anchored_check(P, D, k, mode, rng)
            worst = max(worst, info["anchor_dev"])
            t.record(ok, {"mode": mode, "points": P.tolist(), "cone": sets.set_to_json(D), **info})
    t.detail["max_anchor_dev"] = worst
    return t.result()


def suite_reference(rng, size):
    t = _Tally("scalarize.reference-point")
    for _ in range(size):
        P = cloud_instance(rng, 60)
        D, k = _cone_with_unit(rng, P.shape[1])
        a = P.mean(axis=0) + rng.normal(size=P.shape[1])
        rep = scalarize.reference_scalarize(P, D, a, k, D, rng)
        w = set(efficiency.weff(P, D).indices)
        e = set(efficiency.eff(P, D).indices)
        psi = set(rep.argmin)
        ok = psi <= w and (len(psi) != 1 or psi <= e)
        ok &= all(i in e for i in rep.indices_with("efficient"))
        t.record(ok, {"points": P.tolist(), "cone": sets.set_to_json(D), "a": a.tolist(),
                      "psi": sorted(psi), "weff": sorted(w)})
    return t.result()


def separation_instance(rng, overlap):
    """Shifted nonpositive orthant and a point cloud built to miss or hit it."""
    n = _dim(rng)
    c = rng.uniform(-3, 3, n)
    A = sets.Shift(c, sets.Orthant(n, "nonpos"))
    m = int(rng.integers(1, 20))
    # outside: some coordinate strictly above c
    pts = c - rng.uniform(-5, 5, (m, n))
    for p in pts:
        j = int(rng.integers(0, n))
        p[j] = c[j] + rng.uniform(0.1, 5)
    if overlap:
        inside = c - rng.uniform(0.0, 5, n)
        if rng.uniform() < 0.3:
            j = int(rng.integers(0, n))
            inside[j] = c[j]            # on the boundary
        pts = np.vstack([pts, inside])
        pts = pts[rng.permutation(len(pts))]
    k = np.abs(rng.normal(size=n)) + 0.2
    return A, k, pts


def suite_separation(rng, size):
    t = _Tally("scalarize.separation")
    for i in range(size):
        overlap = bool(i % 2)
        A, k, pts = separation_instance(rng, overlap)
        res = scalarize.separate(A, k, pts, rng)
        truth = bool(np.any(sets.contains_many(A, pts)))
        ok = (res.verdict == "intersecting") == truth
        ok &= (res.verdict == "intersecting") == overlap
        core_truth = bool(np.any(sets.contains_core_many(A, pts)))
        if res.core_verdict == "disjoint_core":
            ok &= not core_truth
        elif res.core_verdict == "core_intersecting":
            ok &= core_truth
        t.record(ok, {"set": sets.set_to_json(A), "k": k.tolist(), "points": pts.tolist(),
                      "verdict": res.verdict, "core_verdict": res.core_verdict})
    return t.result()


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable
    default_size: int
    module: str


SUITES = (
    Suite("extvalues.order-and-arithmetic", suite_ext_order, 1000, "extvalues"),
    Suite("sets.membership-identities", suite_sets_membership, 1000, "sets"),
    Suite("phi.closed-form-vs-bisection", suite_phi_oracle, 1000, "phi"),
    Suite("phi.translation-invariance", suite_phi_translation, 1000, "phi"),
    Suite("phi.direction-scaling", suite_phi_scaling, 1000, "phi"),
    Suite("phi.set-shifts", suite_phi_shifts, 1000, "phi"),
    Suite("phi.sublevel-identity", suite_phi_sublevel, 1000, "phi"),
    Suite("phi.strict-sublevel-identity", suite_phi_strict_sublevel, 1000, "phi"),
    Suite("phi.recession-monotonicity", suite_phi_monotone, 1000, "phi"),
    Suite("phi.midpoint-convexity", suite_phi_convexity, 1000, "phi"),
    Suite("norms.gauge-relation", suite_norm_gauge, 1000, "norms"),
    Suite("norms.order-unit-coincidence", suite_norm_coincidence, 1000, "norms"),
    Suite("norms.norm-axioms", suite_norm_axioms, 1000, "norms"),
    Suite("efficiency.inclusions-and-order", suite_eff_basic, 50, "efficiency"),
    Suite("efficiency.set-algebra", suite_eff_algebra, 30, "efficiency"),
    Suite("order.min-equals-eff", suite_order_min, 100, "order"),
    Suite("scalarize.characterizations", suite_characterize, 30, "scalarize"),
    Suite("scalarize.anchored-characterizations", suite_anchored, 20, "scalarize"),
    Suite("scalarize.reference-point", suite_reference, 50, "scalarize"),
    Suite("scalarize.separation", suite_separation, 50, "scalarize"),
)

SUITE_GROUPS = ("all",) + tuple(sorted({s.module for s in SUITES}))


def select_suites(group: str = "all"):
    if group == "all":
        return list(SUITES)
    chosen = [s for s in SUITES if s.module == group or s.name == group]
    if not chosen:
        raise ValueError(f"unknown suite {group!r}; choose from {', '.join(SUITE_GROUPS)}")
    return chosen


def run_suites(seed: int, group: str = "all", size: Optional[int] = None) -> list:
    """Run the selected suites; ``size`` overrides every suite's sample count.

    Each suite gets its own generator spawned from ``seed`` so that results do
    not depend on which other suites ran.
    """
    chosen = select_suites(group)
    if size == 0:
        logger.warning("size 0: every suite passes vacuously")
    results = []
    for suite in chosen:
        rng = np.random.default_rng([seed, SUITES.index(suite)])
        n = suite.default_size if size is None else size
        start = time.perf_counter()
        res = suite.run(rng, n)
        res.seconds = time.perf_counter() - start
        if size == 0:
            res.detail["warning"] = "vacuous: no samples drawn"
        results.append(res)
    return results
