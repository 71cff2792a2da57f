"""Binary relations given by a constant domination set.

``y1 ≻ y2`` holds exactly when ``y2 - y1`` lies in ``D``. Only the constant
case is modelled; point-dependent domination structures are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sets
from .efficiency import as_cloud, eff_by_predicate
from .sets import as_vector

PROVEN_TRUE = "true"
PROVEN_FALSE = "false"
NOT_REFUTED = "not-refuted"


@dataclass(frozen=True, eq=False)
class DominationRelation:
    """``strict=True`` evaluates membership in the core of ``D`` instead."""

    D: object
    strict: bool = False

    @property
    def dim(self) -> int:
        return sets.dim(self.D)

    def member(self, Y) -> np.ndarray:
        if self.strict:
            return sets.contains_core_many(self.D, Y)
        return sets.contains_many(self.D, Y)

    def holds(self, y1, y2) -> bool:
        return relation_holds(self, y1, y2)


def relation_holds(R: DominationRelation, y1, y2) -> bool:
    n = R.dim
    return bool(R.member((as_vector(y2, n) - as_vector(y1, n))[None, :])[0])


def relation_properties(R: DominationRelation, rng: np.random.Generator, n: int = 256) -> dict:
    """Classify reflexivity, (anti)symmetry, transitivity and scaling compatibility.

    Each entry is "true", "false" (with a witness) or "not-refuted" after
    ``n`` random probes. Sampled universal claims are never reported "true".
    """
    d = R.dim
    member = R.member
    zero = np.zeros(d)
    zero_in = bool(member(zero[None, :])[0])
    out = {"samples": n}
    out["reflexive"] = {"status": PROVEN_TRUE if zero_in else PROVEN_FALSE,
                        "witness": None if zero_in else zero.tolist()}

    probes = sets.sample_members(R.D, rng, n)
    extra = _lineality_probes(R.D)
    if len(extra):
        probes = np.vstack([extra, probes]) if len(probes) else extra
    if len(probes):
        probes = probes[member(probes)]
    # both u and -u in D
    sym = probes[member(-probes)] if len(probes) else probes
    nonzero_sym = sym[np.linalg.norm(sym, axis=1) > 1e-9] if len(sym) else sym
    if zero_in:
        out["asymmetric"] = {"status": PROVEN_FALSE, "witness": zero.tolist()}
    elif len(sym):
        out["asymmetric"] = {"status": PROVEN_FALSE, "witness": sym[0].tolist()}
    else:
        out["asymmetric"] = {"status": NOT_REFUTED, "witness": None}
    if len(nonzero_sym):
        out["antisymmetric"] = {"status": PROVEN_FALSE, "witness": nonzero_sym[0].tolist()}
    else:
        out["antisymmetric"] = {"status": NOT_REFUTED, "witness": None}

    status, witness = NOT_REFUTED, None
    if len(probes) >= 2:
        a = probes
        b = probes[rng.permutation(len(probes))]
        bad = ~member(a + b)
        if np.any(bad):
            i = int(np.argmax(bad))
            status, witness = PROVEN_FALSE, [a[i].tolist(), b[i].tolist()]
    out["transitive"] = {"status": status, "witness": witness}

    status, witness = NOT_REFUTED, None
    if len(probes):
        lam = np.exp(rng.uniform(-3.0, 3.0, len(probes)))
        bad = ~member(lam[:, None] * probes)
        if np.any(bad):
            i = int(np.argmax(bad))
            status, witness = PROVEN_FALSE, {"d": probes[i].tolist(), "lambda": float(lam[i])}
    out["cone_compatible"] = {"status": status, "witness": witness}
    return out


def _lineality_probes(D) -> np.ndarray:
    """Null-space directions of polyhedral normals; random probes miss these lines."""
    if not sets.is_polyhedral(D):
        return np.zeros((0, sets.dim(D)))
    out = []
    for P in sets.to_polyhedra(D):
        _, s, vt = np.linalg.svd(P.normals)
        rank = int(np.sum(s > 1e-10 * max(1.0, s.max())))
        for u in vt[rank:]:
            out.extend([u, -u])
    return np.array(out) if out else np.zeros((0, sets.dim(D)))


def min_points(R: DominationRelation, F) -> list:
    """Minimal elements: ``y0`` survives unless some ``y ≻ y0`` without ``y0 ≻ y``."""
    P = as_cloud(F).points
    keep = []
    for i in range(len(P)):
        beats_i = R.member(P[i] - P)     # y ≻ y0
        i_beats = R.member(P - P[i])     # y0 ≻ y
        if not np.any(beats_i & ~i_beats):
            keep.append(i)
    return keep


def min_via_eff(D, F) -> list:
    """Minimal elements computed as efficient points for ``D \\ (-D)``."""
    def member(Y):
        return sets.contains_many(D, Y) & ~sets.contains_many(D, -Y)
    return eff_by_predicate(F, member).indices


def translate_invariant(R: DominationRelation, y1, y2, y) -> bool:
    """``y1 ≻ y2`` iff ``y1 + y ≻ y2 + y``; true by construction."""
    y = as_vector(y, R.dim)
    return relation_holds(R, y1, y2) == relation_holds(R, as_vector(y1) + y, as_vector(y2) + y)

