"""Efficient and weakly efficient points of finite outcome sets.

``y0`` is efficient in ``F`` with respect to a domination set ``D`` when no
other point ``y`` of ``F`` satisfies ``y0 - y in D``; weak efficiency uses the
core of ``D`` instead. All routines are brute-force pairwise loops.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import sets
from .extvalues import ExtScalar
from .sets import as_vector

logger = logging.getLogger(__name__)

POINT_EQ_TOL = 1e-12
TIE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PointCloud:
    points: np.ndarray
    labels: Optional[tuple] = None

    def __post_init__(self):
        P = np.atleast_2d(np.asarray(self.points, dtype=float))
        if P.shape[0] == 0 or P.shape[1] == 0:
            raise ValueError("a point cloud needs at least one point")
        if not np.all(np.isfinite(P)):
            raise ValueError("point coordinates must be finite")
        if self.labels is not None and len(self.labels) != len(P):
            raise ValueError("labels must align with points")
        P.setflags(write=False)
        object.__setattr__(self, "points", P)

    def __len__(self):
        return len(self.points)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def subset(self, indices) -> "PointCloud":
        idx = list(indices)
        labels = None if self.labels is None else tuple(self.labels[i] for i in idx)
        return PointCloud(self.points[idx], labels)


def as_cloud(F) -> PointCloud:
    return F if isinstance(F, PointCloud) else PointCloud(F)


@dataclass
class EffResult:
    indices: list
    certificates: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"indices": list(self.indices),
                "certificates": {str(i): self.certificates[i] for i in sorted(self.certificates)},
                "notes": list(self.notes)}


Membership = Callable[[np.ndarray], np.ndarray]


def _same_point_mask(P: np.ndarray, i: int) -> np.ndarray:
    return np.max(np.abs(P - P[i]), axis=1) <= POINT_EQ_TOL


def efficient_mask(P: np.ndarray, member: Membership) -> np.ndarray:
    """``mask[i]`` is True when no point distinct from ``P[i]`` dominates it."""
    keep = np.ones(len(P), dtype=bool)
    for i in range(len(P)):
        hits = member(P[i] - P)
        hits &= ~_same_point_mask(P, i)
        keep[i] = not np.any(hits)
    return keep


def eff_by_predicate(F, member: Membership, tag: str = "pairwise") -> EffResult:
    F = as_cloud(F)
    keep = efficient_mask(F.points, member)
    idx = [int(i) for i in np.flatnonzero(keep)]
    return EffResult(idx, {i: tag for i in idx})


def eff(F, D) -> EffResult:
    return eff_by_predicate(F, lambda Y: sets.contains_many(D, Y))


def weff(F, D) -> EffResult:
    # contains_core_many raises UnsupportedError for oracles without a core predicate
    return eff_by_predicate(F, lambda Y: sets.contains_core_many(D, Y), "pairwise-core")


def argmin_indices(values: Sequence[ExtScalar], tie_tol: float = TIE_TOL) -> list:
    """Indices attaining the minimum; nu entries never qualify."""
    neg = [i for i, v in enumerate(values) if v.is_neg_inf]
    if neg:
        return neg
    reals = [(v.value, i) for i, v in enumerate(values) if v.is_real]
    if not reals:
        return []
    best = min(r[0] for r in reals)
    return [i for val, i in reals if val <= best + tie_tol]


def scalar_filter(F, values: Sequence[ExtScalar], D, monotonicity: str = "none"):
    """Minimizers of a scalar function over ``F`` and what they certify.

    ``monotonicity`` states what the caller knows about the function with
    respect to ``D``: "strict" certifies every minimizer as efficient,
    "monotone" certifies a unique minimizer, otherwise the minimizers are
    filtered by a pairwise efficiency test among themselves.
    """
    F = as_cloud(F)
    if len(values) != len(F):
        raise ValueError("values must align with the cloud")
    if monotonicity not in ("none", "monotone", "strict"):
        raise ValueError(f"unknown monotonicity {monotonicity!r}")
    argmin = argmin_indices(values)
    if not argmin:
        logger.warning("all values are nu; argmin is empty")
        return EffResult([], {}, ["all values nu: empty argmin"]), "empty"
    if monotonicity == "strict":
        return EffResult(argmin, {i: "strict-monotone-minimizer" for i in argmin}), "certified"
    if monotonicity == "monotone" and len(argmin) == 1:
        return EffResult(argmin, {argmin[0]: "monotone-unique-minimizer"}), "certified"
    sub = eff(F.subset(argmin), D)
    idx = [argmin[j] for j in sub.indices]
    return EffResult(idx, {i: "efficient-among-minimizers" for i in idx}), "filtered"


# --------------------------------------------------------------------------
# set-algebra identities


def _point_set(P: np.ndarray, idx) -> set:
    return {tuple(np.round(P[i], 12)) for i in idx}


def _check(name, witnesses, skipped=None):
    out = {"check": name, "passed": not witnesses, "witnesses": witnesses[:5]}
    if skipped:
        out["passed"] = None
        out["skipped"] = skipped
    return out


def eff_algebra_check(F, D, rng: np.random.Generator, n_aug: int = 50,
                      n_slices: int = 20) -> list:
    """Run the efficient-set identities on ``(F, D)`` and list pass/fail entries.

    Identities needing structural hypotheses (pointed convex cone, core) are
    skipped with a reason when the flags of ``D`` do not support them.
    """
    F = as_cloud(F)
    P = F.points
    n = F.dim
    flags = sets.cone_flags(D, rng)
    base = eff(F, D)
    base_set = _point_set(P, base.indices)
    report = []

    convex_cone = bool(flags.is_cone) and sets.is_polyhedral(D) and len(sets.to_polyhedra(D)) == 1

    # invariance under adding / removing the origin
    with_zero = eff_by_predicate(F, lambda Y: sets.contains_many(D, Y)
                                 | np.all(np.abs(Y) <= POINT_EQ_TOL, axis=1))
    without_zero = eff_by_predicate(F, lambda Y: sets.contains_many(D, Y)
                                    & ~np.all(np.abs(Y) <= POINT_EQ_TOL, axis=1))
    wit = []
    if with_zero.indices != base.indices:
        wit.append({"variant": "D ∪ {0}", "indices": with_zero.indices})
    if without_zero.indices != base.indices:
        wit.append({"variant": "D ∖ {0}", "indices": without_zero.indices})
    report.append(_check("origin-invariance", wit))

    # augmentation by F + (D \ {0})
    if convex_cone:
        d = sets.sample_members(D, rng, n_aug)
        d = d[np.linalg.norm(d, axis=1) > 1e-6]
        src = rng.integers(0, len(P), size=len(d))
        aug = np.vstack([P, P[src] + d])
        got = eff(PointCloud(aug), D)
        wit = []
        if any(i >= len(P) for i in got.indices) or _point_set(aug, got.indices) != base_set:
            wit.append({"augmented_efficient": got.indices, "original": base.indices})
        entry = _check("augmentation-invariance", wit)
        entry["guaranteed"] = bool(flags.pointed)
        if not flags.pointed:
            entry["note"] = ("D is not pointed: Eff(F,D) need not be a subset of "
                             "Eff(F+D,D), so a failure here is not a defect")
        report.append(entry)
    else:
        report.append(_check("augmentation-invariance", [], "needs a convex cone D"))

    # slices F ∩ (y - D)
    slices = P[rng.integers(0, len(P), size=n_slices)] + rng.normal(0.0, 1.0, (n_slices, n))
    slices = np.vstack([slices, P.max(axis=0) + 1.0])
    if convex_cone:
        wit = []
        for y in slices:
            inside = np.flatnonzero(sets.contains_many(D, y - P))
            if len(inside) == 0:
                continue
            lhs = eff(F.subset(inside), D)
            lhs_set = _point_set(P, [inside[j] for j in lhs.indices])
            rhs_set = {p for p in base_set if sets.contains(D, y - np.array(p))}
            if lhs_set != rhs_set:
                wit.append({"y": y.tolist()})
        report.append(_check("slice-identity", wit))
        try:
            wbase = _point_set(P, weff(F, D).indices)
            wit = []
            for y in slices:
                inside = np.flatnonzero(sets.contains_many(D, y - P))
                if len(inside) == 0:
                    continue
                lhs = weff(F.subset(inside), D)
                lhs_set = _point_set(P, [inside[j] for j in lhs.indices])
                rhs_set = {p for p in wbase if sets.contains(D, y - np.array(p))}
                if lhs_set != rhs_set:
                    wit.append({"y": y.tolist()})
            report.append(_check("weak-slice-identity", wit))
        except sets.UnsupportedError as exc:
            report.append(_check("weak-slice-identity", [], str(exc)))
    else:
        report.append(_check("slice-identity", [], "needs D + D ⊆ D"))
        report.append(_check("weak-slice-identity", [], "needs D + core D ⊆ D"))

    # efficient points stay outside core(F + D), probed as a union of shifted cores
    if not flags.is_cone:
        report.append(_check("efficient-outside-core", [], "needs D star-shaped about 0"))
        return report
    try:
        FD = sets.Union(tuple(sets.Shift(p, D) for p in P))
        inside = sets.contains_core_many(FD, P[base.indices]) if base.indices else np.zeros(0, bool)
        wit = [{"index": base.indices[j]} for j in np.flatnonzero(inside)]
        report.append(_check("efficient-outside-core", wit))
    except sets.UnsupportedError as exc:
        report.append(_check("efficient-outside-core", [], str(exc)))
    return report
