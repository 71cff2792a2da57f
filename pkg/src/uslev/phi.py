"""The scalarizing functional ``phi_{A,k}(y) = inf {t : y in A + t k}``.

Two independent evaluation routes are provided. ``phi_eval`` solves the
one-dimensional feasibility problem in closed form on polyhedral
expressions; ``phi_oracle`` bisects along ``k`` against a membership test and
therefore also works for catalog oracle sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sets
from .extvalues import ExtScalar, NegInf, Nu, Real
from .sets import TOL, UnsupportedError, UslevError, as_vector

# kind codes of the vectorized evaluator
KIND_REAL = 0
KIND_NEG_INF = 1
KIND_NU = 2

ZERO_DIR_EPS = 1e-12
ORACLE_MEMBERSHIP_TOL = 1e-12
# brackets beyond 2**40 count as unbounded: a row with a.k ~ 1e-16 would
# otherwise be "reached" at t ~ 1e16 although it is parallel to k
MAX_DOUBLINGS = 40


class PreconditionError(UslevError):
    """A hypothesis needed by an operation could not be certified."""


@dataclass(frozen=True, eq=False)
class PhiProblem:
    A: object
    k: np.ndarray
    tol: float = TOL

    def __post_init__(self):
        k = as_vector(self.k, sets.dim(self.A))
        if not np.any(k):
            raise ValueError("direction k must be nonzero")
        k.setflags(write=False)
        object.__setattr__(self, "k", k)

    @property
    def dim(self) -> int:
        return self.k.size


def _polyhedron_bounds(P, k, Y, tol):
    """Lower bound and feasibility of ``{t : A(y - t k) <= b}`` for each row of Y."""
    A, b = P.normals, P.offsets
    d = A @ k
    c = Y @ A.T - b
    scale = 1.0 + np.linalg.norm(A, axis=1) * np.linalg.norm(k)
    zero = np.abs(d) <= ZERO_DIR_EPS * scale
    pos = (~zero) & (d > 0)
    neg = (~zero) & (d < 0)
    feasible = np.all(c[:, zero] <= tol * (1.0 + np.abs(b[zero])), axis=1)
    if np.any(pos):
        L = np.max(c[:, pos] / d[pos], axis=1)
    else:
        L = np.full(len(Y), -np.inf)
    if np.any(neg):
        U = np.min(c[:, neg] / d[neg], axis=1)
        feasible &= L <= U
    return L, feasible


def phi_many(A, k, Y, tol: float = TOL):
    """Closed-form values for a batch of points.

    Returns ``(kinds, values)``: ``kinds`` holds KIND_REAL / KIND_NEG_INF /
    KIND_NU per row, ``values`` the real value where the kind is real.
    Raises UnsupportedError for expressions containing oracle sets.
    """
    k = as_vector(k, sets.dim(A))
    Y = sets._as_batch(Y, k.size)
    polys = sets.to_polyhedra(A)
    best = np.full(len(Y), np.inf)
    any_feasible = np.zeros(len(Y), dtype=bool)
    for P in polys:
        L, feasible = _polyhedron_bounds(P, k, Y, tol)
        best = np.where(feasible, np.minimum(best, L), best)
        any_feasible |= feasible
    kinds = np.full(len(Y), KIND_NU, dtype=np.int8)
    kinds[any_feasible & np.isneginf(best)] = KIND_NEG_INF
    real = any_feasible & np.isfinite(best)
    kinds[real] = KIND_REAL
    values = np.where(real, best, 0.0)
    return kinds, values


def to_ext(kind: int, value: float) -> ExtScalar:
    if kind == KIND_REAL:
        return Real(value)
    return NegInf if kind == KIND_NEG_INF else Nu


def phi_eval(P: PhiProblem, y) -> ExtScalar:
    y = as_vector(y, P.dim)
    try:
        kinds, values = phi_many(P.A, P.k, y[None, :], P.tol)
    except UnsupportedError as exc:
        raise UnsupportedError(f"{exc}; use phi_oracle") from exc
    return to_ext(int(kinds[0]), float(values[0]))


def phi_eval_many(P: PhiProblem, Y) -> list:
    kinds, values = phi_many(P.A, P.k, Y, P.tol)
    return [to_ext(int(c), float(v)) for c, v in zip(kinds, values)]


def check_oracle_preconditions(P: PhiProblem) -> None:
    if not sets.is_closed(P.A):
        raise PreconditionError(
            "oracle invalid: sublevel sets not monotone along k (A not declared closed)")
    if not sets.direction_admits_bisection(P.A, P.k):
        raise PreconditionError(
            "oracle invalid: sublevel sets not monotone along k (k ∈ −0⁺A not certified)")


def phi_oracle(P: PhiProblem, y, bracket_init: float = 1.0, max_doublings: int = MAX_DOUBLINGS,
               check: bool = True) -> ExtScalar:
    """Bisection along ``k`` on the predicate ``y - t k in A``.

    The predicate is an up-set in ``t`` when ``k in -0+A``, which is checked
    first unless ``check`` is False.
    """
    if check:
        check_oracle_preconditions(P)
    y = as_vector(y, P.dim)
    k = P.k
    A = P.A

    def member(t):
        return sets.contains(A, y - t * k, ORACLE_MEMBERSHIP_TOL)

    hi = bracket_init
    for _ in range(max_doublings + 1):
        if member(hi):
            break
        hi *= 2.0
    else:
        return Nu

    lo = -bracket_init
    for _ in range(max_doublings + 1):
        if not member(lo):
            break
        lo *= 2.0
    else:
        return NegInf

    for _ in range(400):
        width = hi - lo
        if width <= 0.25 * P.tol * max(1.0, abs(hi)):
            break
        mid = lo + 0.5 * width
        if mid <= lo or mid >= hi:
            break
        if member(mid):
            hi = mid
        else:
            lo = mid
    return Real(hi)


def phi_value(P: PhiProblem, y) -> ExtScalar:
    """Closed form where available, bisection otherwise."""
    if sets.is_polyhedral(P.A):
        return phi_eval(P, y)
    return phi_oracle(P, y)


def sublevel_contains(P: PhiProblem, y, t: float) -> bool:
    """``y in A + t k`` by membership alone."""
    if not math.isfinite(t):
        raise ValueError("level t must be finite")
    y = as_vector(y, P.dim)
    return sets.contains(sets.Shift(t * P.k, P.A), y)


def dom_contains(P: PhiProblem, y) -> bool:
    return not phi_value(P, y).is_nu
