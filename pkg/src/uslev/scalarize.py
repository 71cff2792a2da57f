"""Scalarization drivers for finite outcome sets.

Each driver evaluates the functional on a point cloud, records which
hypotheses it could verify (by representation or on random probes), and
attaches a tag to every verdict naming the result that justifies it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import sets
from .efficiency import EffResult, POINT_EQ_TOL, TIE_TOL, argmin_indices, as_cloud, eff
from .extvalues import ExtScalar, ext_le, ext_lt, to_json
from .norms import OrderUnitSpec, order_unit_norms
from .phi import (KIND_NEG_INF, KIND_NU, KIND_REAL, PhiProblem, PreconditionError,
                  check_oracle_preconditions, phi_many, phi_value, to_ext)
from .sets import MARGIN, TOL, as_vector

logger = logging.getLogger(__name__)

N_PROBES = 256
STRICT_TOL = 1e-9
ANCHOR_TOL = 1e-9

VERIFIED = "verified"
SAMPLED = "verified on samples"
ASSUMED = "assumed"
FAILED = "failed"

# verdict tags
TAG_UNIQUE_MIN = "unique-minimizer-monotone"
TAG_STRICT_MON = "minimizer-strictly-monotone"
TAG_WEAK_MON = "minimizer-weakly-efficient"
TAG_EFF_AMONG = "efficient-among-minimizers"
TAG_POSITIVE_ELSEWHERE = "positive-elsewhere"
TAG_NONNEG_ELSEWHERE = "nonnegative-elsewhere"
TAG_BOUND_ANCHOR = "bound-anchored-minimizer"
TAG_BOUND_STRICT = "bound-anchored-unique-minimizer"
TAG_NORM_ANCHOR = "norm-anchored-minimizer"
TAG_NORM_STRICT = "norm-anchored-unique-minimizer"
TAG_SEPARATION = "sublevel-separation"
TAG_CORE_SEPARATION = "strict-sublevel-separation"


@dataclass
class ScalarReport:
    values: list = field(default_factory=list)
    argmin: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    audit: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def indices_with(self, *verdicts) -> list:
        return sorted(i for i, v in self.verdicts.items() if v["verdict"] in verdicts)

    def to_json(self) -> dict:
        return {
            "values": [to_json(v) for v in self.values],
            "argmin": list(self.argmin),
            "verdicts": {str(i): self.verdicts[i] for i in sorted(self.verdicts)},
            "claims": list(self.claims),
            "audit": list(self.audit),
            "notes": list(self.notes),
            **self.extra,
        }


def _audit(report_or_list, hypothesis, status, detail=None):
    entry = {"hypothesis": hypothesis, "status": status}
    if detail is not None:
        entry["detail"] = detail
    target = report_or_list.audit if isinstance(report_or_list, ScalarReport) else report_or_list
    target.append(entry)
    return entry


def sampled_sum_inclusion(X, Y, target, rng, *, y_core=False, y_nonzero=False,
                          target_core=False, n=N_PROBES):
    """Probe ``X + Y ⊆ target`` (optionally with cores) on random pairs.

    Returns ``(ok, witness)``; ``ok`` is None when no probe pair was found.
    """
    xs = sets.sample_members(X, rng, n)
    ys = sets.sample_members(Y, rng, n)
    if len(ys) and y_core:
        ys = ys[sets.contains_core_many(Y, ys)]
    if len(ys) and y_nonzero:
        ys = ys[np.linalg.norm(ys, axis=1) > 1e-9]
    m = min(len(xs), len(ys))
    if m == 0:
        return None, None
    sums = xs[:m] + ys[rng.permutation(len(ys))[:m]]
    member = sets.contains_core_many if target_core else sets.contains_many
    ok = member(target, sums)
    if np.all(ok):
        return True, None
    i = int(np.argmin(ok))
    return False, sums[i].tolist()


def _closed_status(S):
    if isinstance(S, sets.Oracle) or not sets.is_polyhedral(S):
        return ASSUMED if sets.is_closed(S) else FAILED
    return VERIFIED


def _values(A, k, P):
    """Values of ``phi_{A,k}`` on the rows of ``P``, closed form when possible."""
    if sets.is_polyhedral(A):
        kinds, vals = phi_many(A, k, P)
        return [to_ext(int(c), float(v)) for c, v in zip(kinds, vals)]
    prob = PhiProblem(A, k)
    check_oracle_preconditions(prob)
    return [phi_value(prob, y) for y in P]


def _distinct_from(P, i):
    return np.max(np.abs(P - P[i]), axis=1) > POINT_EQ_TOL


# --------------------------------------------------------------------------
# reference-point scalarization


def reference_scalarize(F, H, a, k, D, rng: Optional[np.random.Generator] = None) -> ScalarReport:
    """Minimize ``phi_{a-H,k}`` over ``F ∩ dom`` and certify the minimizers."""
    F = as_cloud(F)
    n = F.dim
    a = as_vector(a, n)
    k = as_vector(k, n)
    if not np.any(k):
        raise ValueError("direction k must be nonzero")
    rng = rng if rng is not None else np.random.default_rng(0)
    P = F.points
    A = sets.Shift(a, sets.Negate(H))
    report = ScalarReport(values=_values(A, k, P))
    report.argmin = argmin_indices(report.values)
    if not report.argmin:
        report.notes.append("no point of F lies in dom φ_{a−H,k}; F ∩ dom is the feasible range "
                            "and it is empty")
        return report

    hd, hd_w = sampled_sum_inclusion(H, D, H, rng)
    hcore, hcore_w = sampled_sum_inclusion(H, D, H, rng, y_core=True, target_core=True)
    hstrict, hstrict_w = sampled_sum_inclusion(H, D, H, rng, y_nonzero=True, target_core=True)
    closed = _closed_status(H)

    def status(ok):
        return SAMPLED if ok else (FAILED if ok is False else ASSUMED + " (no probes)")

    _audit(report, "H + D ⊆ H", status(hd), hd_w)
    _audit(report, "H + core D ⊆ core H", status(hcore), hcore_w)
    _audit(report, "H + (D ∖ {0}) ⊆ core H", status(hstrict), hstrict_w)
    _audit(report, "H is (−k)-directionally closed", closed)
    closed_ok = closed != FAILED

    psi = report.argmin
    for i in psi:
        report.verdicts[i] = {"verdict": "minimizer", "tag": "argmin-uncertified"}
    weak_ok = bool(hd) or (closed_ok and bool(hcore))
    if weak_ok:
        report.claims.append({"claim": "Ψ ⊆ WEff(F,D)", "indices": list(psi), "tag": TAG_WEAK_MON})
        for i in psi:
            report.verdicts[i] = {"verdict": "weakly efficient", "tag": TAG_WEAK_MON}
    if closed_ok and hstrict:
        report.claims.append({"claim": "Ψ ⊆ Eff(F,D)", "indices": list(psi), "tag": TAG_STRICT_MON})
        for i in psi:
            report.verdicts[i] = {"verdict": "efficient", "tag": TAG_STRICT_MON}
    if hd:
        among = eff(F.subset(psi), D)
        idx = [psi[j] for j in among.indices]
        report.claims.append({"claim": "Eff(F,D) ∩ Ψ = Eff(Ψ,D)", "indices": idx, "tag": TAG_EFF_AMONG})
        for i in idx:
            report.verdicts[i] = {"verdict": "efficient", "tag": TAG_EFF_AMONG}
        if len(psi) == 1:
            report.claims.append({"claim": "Ψ = {y⁰} ⟹ y⁰ ∈ Eff(F,D)", "indices": list(psi),
                                  "tag": TAG_UNIQUE_MIN})
            report.verdicts[psi[0]] = {"verdict": "efficient", "tag": TAG_UNIQUE_MIN}
    return report


# --------------------------------------------------------------------------
# per-point characterizations


def _check_recession_direction(D, k):
    try:
        ok = sets.classify_direction(sets.Negate(D), k).in_minus_recession
    except sets.UnsupportedError:
        ok = sets.direction_admits_bisection(sets.Negate(D), k)
    return ok


def _per_point_values(P, D, k, i):
    A = sets.Shift(P[i], sets.Negate(D))
    return phi_many(A, k, P)


def characterize_eff(F, D, k) -> EffResult:
    """Keep ``y0`` when ``phi_{y0-D,k}`` is positive on every other point of its domain."""
    F = as_cloud(F)
    P = F.points
    k = as_vector(k, F.dim)
    if not sets.is_polyhedral(D):
        raise PreconditionError("characterization needs a polyhedral D")
    if not _check_recession_direction(D, k):
        raise PreconditionError("k ∈ 0⁺D not certified")
    if not sets.is_closed(D):
        raise PreconditionError("D is (−k)-directionally closed not certified")
    keep, indeterminate = [], []
    for i in range(len(P)):
        kinds, vals = _per_point_values(P, D, k, i)
        others = _distinct_from(P, i) & (kinds != KIND_NU)
        if np.any(others & (kinds == KIND_NEG_INF)):
            continue
        v = vals[others & (kinds == KIND_REAL)]
        if np.any(v <= 0.0):
            continue
        if np.any(v <= STRICT_TOL):
            indeterminate.append(i)
            continue
        keep.append(i)
    res = EffResult(keep, {i: TAG_POSITIVE_ELSEWHERE for i in keep})
    if indeterminate:
        res.notes.append(f"indeterminate (value in (0, {STRICT_TOL}]): {indeterminate}")
    return res


def characterize_weff(F, D, k, rng: Optional[np.random.Generator] = None) -> EffResult:
    """Keep ``y0`` when ``phi_{y0-D,k}`` is nonnegative on every other point of its domain."""
    F = as_cloud(F)
    P = F.points
    k = as_vector(k, F.dim)
    rng = rng if rng is not None else np.random.default_rng(0)
    if not sets.is_polyhedral(D):
        raise PreconditionError("characterization needs a polyhedral D")
    probes = sets.sample_members(D, rng, N_PROBES)
    ts = np.exp(rng.uniform(np.log(1e-3), np.log(10.0), len(probes)))
    shifted = probes + ts[:, None] * k
    if len(probes) == 0 or not np.all(sets.contains_core_many(D, shifted)):
        raise PreconditionError("D + ℝ₊k ⊆ core D not certified (k must point into core D)")
    zero = np.zeros(F.dim)
    anchor_expected = sets.contains(D, zero) and not sets.contains_core(D, zero)
    keep, anchor_bad = [], []
    for i in range(len(P)):
        kinds, vals = _per_point_values(P, D, k, i)
        if anchor_expected and not (kinds[i] == KIND_REAL and abs(vals[i]) <= ANCHOR_TOL):
            anchor_bad.append(i)
        others = _distinct_from(P, i) & (kinds != KIND_NU)
        if np.any(others & (kinds == KIND_NEG_INF)):
            continue
        if np.any(vals[others & (kinds == KIND_REAL)] < -STRICT_TOL):
            continue
        keep.append(i)
    res = EffResult(keep, {i: TAG_NONNEG_ELSEWHERE for i in keep})
    res.notes.append(f"audit: D + ℝ₊k ⊆ core D {SAMPLED} ({len(probes)} probes)")
    if anchor_expected:
        res.notes.append("φ_{y⁰−D,k}(y⁰) = 0 " + ("held at every point" if not anchor_bad
                                                   else f"FAILED at {anchor_bad}"))
    return res


# --------------------------------------------------------------------------
# bound- and norm-anchored characterizations


def _require_cone_with_core(D, rng, pointed=False):
    flags = sets.cone_flags(D, rng)
    if flags.is_cone is not True:
        raise PreconditionError("D is a convex cone not certified")
    if flags.core_nonempty is not True:
        raise PreconditionError("core D ≠ ∅ not certified")
    if sets.contains_core(D, np.zeros(sets.dim(D))):
        raise PreconditionError("D is non-trivial failed (D = Y)")
    if pointed and flags.pointed is not True:
        raise PreconditionError("D is pointed not certified")
    return flags


def _anchored_verdicts(report, P, scores, i, anchor, tags):
    """Verdict for ``y0 = P[i]`` from its own score vector."""
    own = scores[i]
    finite = np.isfinite(scores)
    best = np.min(scores[finite])
    others = _distinct_from(P, i)
    if abs(own - anchor) > ANCHOR_TOL:
        report.notes.append(f"anchor value at {i} is {own!r}, expected {anchor}")
    weak = own <= best + TIE_TOL
    strict = weak and bool(np.all(scores[others] > own + STRICT_TOL))
    if strict:
        report.verdicts[i] = {"verdict": "efficient", "tag": tags[1], "anchor": float(own)}
    elif weak:
        report.verdicts[i] = {"verdict": "weakly efficient", "tag": tags[0], "anchor": float(own)}
    else:
        report.verdicts[i] = {"verdict": "not weakly efficient", "tag": tags[0], "anchor": float(own)}
    return own


def bound_scalarize(F, D, a, orientation: str = "below",
                    rng: Optional[np.random.Generator] = None) -> ScalarReport:
    """Per point ``y0``, minimize ``phi_{a-D,k}`` with ``k`` pointing from ``y0`` to ``a``.

    ``orientation="below"`` needs ``F ⊆ a - core D`` (``a`` an upper bound) and
    uses ``k = a - y0``; "above" needs ``F ⊆ a + core D`` and ``k = y0 - a``.
    """
    F = as_cloud(F)
    P = F.points
    a = as_vector(a, F.dim)
    rng = rng if rng is not None else np.random.default_rng(0)
    if orientation not in ("below", "above"):
        raise ValueError("orientation must be 'below' or 'above'")
    _require_cone_with_core(D, rng)
    report = ScalarReport()
    _audit(report, "D is a non-trivial algebraically closed convex cone with core D ≠ ∅", VERIFIED)
    if orientation == "below":
        inside = sets.contains_core_many(D, a - P)
        hyp, anchor = "F ⊆ a − core D", -1.0
    else:
        inside = sets.contains_core_many(D, P - a)
        hyp, anchor = "F ⊆ a + core D", 1.0
    if not np.all(inside):
        bad = [int(i) for i in np.flatnonzero(~inside)]
        raise PreconditionError(f"{hyp} not verified (points {bad[:10]})")
    _audit(report, hyp, VERIFIED)
    A = sets.Shift(a, sets.Negate(D))
    anchors = []
    for i in range(len(P)):
        k = a - P[i] if orientation == "below" else P[i] - a
        kinds, vals = phi_many(A, k, P)
        scores = np.where(kinds == KIND_REAL, vals, np.where(kinds == KIND_NEG_INF, -np.inf, np.inf))
        anchors.append(_anchored_verdicts(report, P, scores, i, anchor,
                                          (TAG_BOUND_ANCHOR, TAG_BOUND_STRICT)))
    report.values = [to_ext(KIND_REAL, v) for v in anchors]
    report.extra["weff_indices"] = report.indices_with("weakly efficient", "efficient")
    report.extra["eff_indices"] = report.indices_with("efficient")
    report.extra["orientation"] = orientation
    return report


def norm_characterize(F, D, a, rng: Optional[np.random.Generator] = None) -> ScalarReport:
    """Per point ``y0``, minimize the order-unit norm ``||y - a||_{D, y0 - a}``."""
    F = as_cloud(F)
    P = F.points
    a = as_vector(a, F.dim)
    rng = rng if rng is not None else np.random.default_rng(0)
    _require_cone_with_core(D, rng, pointed=True)
    report = ScalarReport()
    _audit(report, "D is a non-trivial algebraically closed convex pointed cone", VERIFIED)
    inside = sets.contains_core_many(D, P - a)
    if not np.all(inside):
        bad = [int(i) for i in np.flatnonzero(~inside)]
        raise PreconditionError(f"F ⊆ a + core D not verified (points {bad[:10]})")
    _audit(report, "F ⊆ a + core D", VERIFIED)
    anchors = []
    for i in range(len(P)):
        spec = OrderUnitSpec(D, P[i] - a, True)
        scores = order_unit_norms(spec, P - a)
        anchors.append(_anchored_verdicts(report, P, scores, i, 1.0,
                                          (TAG_NORM_ANCHOR, TAG_NORM_STRICT)))
    report.values = [to_ext(KIND_REAL, v) for v in anchors]
    report.extra["weff_indices"] = report.indices_with("weakly efficient", "efficient")
    report.extra["eff_indices"] = report.indices_with("efficient")
    return report


# --------------------------------------------------------------------------
# separation


@dataclass
class SeparationVerdict:
    verdict: str
    core_verdict: str
    values: list
    witnesses: list
    audit: list

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "core_verdict": self.core_verdict,
                "values": [to_json(v) for v in self.values], "witnesses": self.witnesses,
                "audit": self.audit,
                "theorem": {"verdict": TAG_SEPARATION, "core_verdict": TAG_CORE_SEPARATION}}


def separate(A, k, Dpoints, rng: Optional[np.random.Generator] = None) -> SeparationVerdict:
    """Decide whether the finite set ``Dpoints`` meets ``A`` (and ``core A``) via ``phi_{A,k}``."""
    Dc = as_cloud(Dpoints)
    k = as_vector(k, Dc.dim)
    rng = rng if rng is not None else np.random.default_rng(0)
    audit = []
    if not sets.direction_admits_bisection(A, k):
        raise PreconditionError("k ∈ −0⁺A not certified")
    _audit(audit, "k ∈ −0⁺A ∖ {0}", VERIFIED)
    if not sets.is_closed(A):
        raise PreconditionError("A is k-directionally closed not certified")
    _audit(audit, "A is k-directionally closed", _closed_status(A))
    values = _values(A, k, Dc.points)

    hits = [i for i, v in enumerate(values) if ext_le(v, 0.0)]
    verdict = "intersecting" if hits else "disjoint"
    witnesses = [{"index": i, "value": to_json(values[i]), "set": "A"} for i in hits[:10]]

    strict_hits = [i for i, v in enumerate(values) if ext_lt(v, 0.0)]
    if not strict_hits:
        core_verdict = "disjoint_core"
    else:
        probes = sets.sample_members(A, rng, N_PROBES)
        ts = np.exp(rng.uniform(np.log(1e-3), np.log(10.0), len(probes)))
        core_ok = len(probes) > 0 and bool(
            np.all(sets.contains_core_many(A, probes - ts[:, None] * k)))
        _audit(audit, "A − ℝ₊k ⊆ core A", SAMPLED if core_ok else FAILED)
        if core_ok:
            core_verdict = "core_intersecting"
            witnesses += [{"index": i, "value": to_json(values[i]), "set": "core A"}
                          for i in strict_hits[:10]]
        else:
            core_verdict = "undetermined"
    return SeparationVerdict(verdict, core_verdict, values, witnesses, audit)
