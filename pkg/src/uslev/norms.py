"""Minkowski gauges and order-unit norms of order intervals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import sets
from .extvalues import ExtScalar, Nu, Real
from .phi import PhiProblem, PreconditionError, phi_eval, phi_many, KIND_REAL
from .sets import TOL, MARGIN, UslevError, as_vector

logger = logging.getLogger(__name__)

GAUGE_MEMBERSHIP_TOL = 1e-12


class GaugeUndefinedError(UslevError):
    pass


@dataclass(frozen=True, eq=False)
class OrderUnitSpec:
    """Ordering cone ``C`` with a margin-interior order unit ``k``."""

    C: object
    k: np.ndarray
    pointed: Optional[bool] = None

    def __post_init__(self):
        k = as_vector(self.k, sets.dim(self.C))
        k.setflags(write=False)
        object.__setattr__(self, "k", k)

    @classmethod
    def validated(cls, C, k) -> "OrderUnitSpec":
        k = as_vector(k, sets.dim(C))
        flags = sets.cone_flags(C)
        if flags.is_cone is False:
            raise PreconditionError("C is not a cone")
        if not sets.contains_core(C, k, MARGIN):
            raise PreconditionError("k ∈ core C not certified")
        if flags.pointed is False:
            raise PreconditionError("C is not pointed")
        if flags.pointed is None:
            logger.warning("pointedness of C could not be decided; the gauge may be a seminorm")
        return cls(C, k, flags.pointed)


def minkowski_eval(S, y, tol: float = TOL, max_doublings: int = 60) -> ExtScalar:
    """Gauge ``inf {lam > 0 : y in lam S}`` by bisection on ``lam``.

    Assumes ``S`` is star-shaped about the origin, so membership of
    ``y / lam`` is monotone in ``lam``.
    """
    n = sets.dim(S)
    y = as_vector(y, n)
    if not sets.contains(S, np.zeros(n)):
        raise GaugeUndefinedError("0 ∉ S: gauge undefined here")

    # tolerance divided by lam: the test is A y <= lam b up to a fixed slack
    # in y-space, so huge lam cannot absorb a genuine violation
    def member(lam):
        return sets.contains(S, y / lam, GAUGE_MEMBERSHIP_TOL / lam)

    hi = 1.0
    for _ in range(max_doublings + 1):
        if member(hi):
            break
        hi *= 2.0
    else:
        return Nu
    lo = hi / 2.0
    for _ in range(max_doublings + 1):
        if not member(lo):
            break
        hi = lo
        lo /= 2.0
    else:
        return Real(0.0)
    for _ in range(400):
        if hi - lo <= 0.25 * tol * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if member(mid):
            hi = mid
        else:
            lo = mid
    return Real(hi)


def order_interval(C, k):
    """``[-k, k]_C = (C - k) ∩ (k - C)`` as a polyhedron."""
    k = as_vector(k, sets.dim(C))
    return sets.intersect_polyhedra(sets.Shift(-k, C), sets.Shift(k, sets.Negate(C)))


def order_unit_norms(spec: OrderUnitSpec, U) -> np.ndarray:
    """``max(phi_{-C,k}(u), phi_{-C,k}(-u))`` for each row ``u`` of ``U``."""
    minus_C = sets.Negate(spec.C)
    U = np.atleast_2d(np.asarray(U, dtype=float))
    kinds, values = phi_many(minus_C, spec.k, np.vstack([U, -U]))
    if np.any(kinds != KIND_REAL):
        raise PreconditionError("order-unit norm not finite: k ∈ core C fails")
    m = len(U)
    return np.maximum(values[:m], values[m:])


def order_unit_norm(spec: OrderUnitSpec, y) -> float:
    y = as_vector(y, spec.k.size)
    return float(order_unit_norms(spec, y[None, :])[0])


class CoincidenceReport(NamedTuple):
    max_diff: float
    passed: bool
    worst: Optional[list]
    n: int


def norm_phi_coincidence_check(spec: OrderUnitSpec, a, samples, tol: float = 1e-9) -> CoincidenceReport:
    """Compare ``||y - a||_{C,k}`` with ``phi_{a-C,k}(y)`` on points of ``a + C``."""
    a = as_vector(a, spec.k.size)
    Y = np.atleast_2d(np.asarray(samples, dtype=float))
    if len(Y) == 0:
        return CoincidenceReport(0.0, True, None, 0)
    norms = order_unit_norms(spec, Y - a)
    A = sets.Shift(a, sets.Negate(spec.C))
    kinds, values = phi_many(A, spec.k, Y)
    diff = np.where(kinds == KIND_REAL, np.abs(norms - values), np.inf)
    i = int(np.argmax(diff))
    worst = float(diff[i])
    return CoincidenceReport(worst, worst <= tol, Y[i].tolist(), len(Y))


def gauge_of_shifted_cone(C, k, y) -> ExtScalar:
    """``p_{C+k}(y)``, the gauge of the cone shifted by ``k``."""
    k = as_vector(k, sets.dim(C))
    return minkowski_eval(sets.Shift(k, C), y)


def phi_gauge_relation(C, k, y) -> ExtScalar:
    """``max(phi_{C,k}(y), 0)``; equals ``p_{C+k}(y)`` when ``k in -core C``."""
    v = phi_eval(PhiProblem(C, k), y)
    if not v.is_real:
        return v
    return Real(max(v.value, 0.0))
