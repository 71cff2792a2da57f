"""Set expressions over R^n.

A set is described compositionally: halfspace polyhedra, orthants, shifts,
negations, finite unions and a small catalog of named oracle sets. Every
operation works by structural recursion and is vectorized over a batch of
points (rows of a 2-D array).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.optimize import nnls

logger = logging.getLogger(__name__)

TOL = 1e-9
MARGIN = 1e-9


class UslevError(Exception):
    pass


class DimensionError(UslevError, ValueError):
    pass


class UnsupportedError(UslevError):
    pass


class SetSchemaError(UslevError, ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


def as_vector(y, n: Optional[int] = None) -> np.ndarray:
    v = np.asarray(y, dtype=float).reshape(-1)
    if v.size == 0:
        raise DimensionError("vectors need at least one coordinate")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"vector entries must be finite: {v}")
    if n is not None and v.size != n:
        raise DimensionError(f"expected dimension {n}, got {v.size}")
    return v


def _as_batch(Y, n: int) -> np.ndarray:
    Y = np.asarray(Y, dtype=float)
    if Y.ndim == 1:
        Y = Y[None, :]
    if Y.ndim != 2 or Y.shape[1] != n:
        raise DimensionError(f"expected points of dimension {n}, got shape {Y.shape}")
    return Y


# --------------------------------------------------------------------------
# expression nodes


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """``{y : normals @ y <= offsets}``."""

    normals: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.normals, dtype=float))
        b = np.asarray(self.offsets, dtype=float).reshape(-1)
        if A.shape[0] < 1 or A.shape[1] < 1:
            raise DimensionError("a polyhedron needs at least one row and one column")
        if b.size != A.shape[0]:
            raise DimensionError(
                f"{A.shape[0]} normal rows but {b.size} offsets")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise ValueError("polyhedron data must be finite")
        if np.any(np.all(A == 0.0, axis=1)):
            raise ValueError("all-zero normal row")
        A.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "normals", A)
        object.__setattr__(self, "offsets", b)

    @property
    def dim(self) -> int:
        return self.normals.shape[1]


@dataclass(frozen=True)
class Orthant:
    dim: int
    sign: str = "nonneg"

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("orthant dimension must be positive")
        if self.sign not in ("nonneg", "nonpos"):
            raise ValueError(f"orthant sign must be 'nonneg' or 'nonpos', not {self.sign!r}")


@dataclass(frozen=True, eq=False)
class Shift:
    offset: np.ndarray
    base: "SetExpr"

    def __post_init__(self):
        o = as_vector(self.offset, dim(self.base))
        o.setflags(write=False)
        object.__setattr__(self, "offset", o)


@dataclass(frozen=True)
class Negate:
    base: "SetExpr"


@dataclass(frozen=True)
class Union:
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a union needs at least one part")
        dims = {dim(p) for p in parts}
        if len(dims) != 1:
            raise DimensionError(f"union parts disagree on dimension: {sorted(dims)}")
        object.__setattr__(self, "parts", parts)


@dataclass(frozen=True, eq=False)
class Oracle:
    name: str
    params: dict = field(default_factory=dict)
    closed: bool = True
    recession: tuple = ()

    def __post_init__(self):
        if self.name not in ORACLES:
            raise ValueError(f"unknown oracle set {self.name!r}; known: {sorted(ORACLES)}")
        n = ORACLES[self.name].dim(self.params)
        dirs = tuple(as_vector(d, n) for d in self.recession)
        object.__setattr__(self, "recession", dirs)

    @property
    def spec(self) -> "OracleSpec":
        return ORACLES[self.name]


SetExpr = (Polyhedron, Orthant, Shift, Negate, Union, Oracle)


def halfspaces(normals, offsets) -> Polyhedron:
    return Polyhedron(np.asarray(normals, dtype=float), np.asarray(offsets, dtype=float))


def zero_set(n: int) -> Polyhedron:
    """The singleton ``{0}`` written as a polyhedron."""
    eye = np.eye(n)
    return Polyhedron(np.vstack([eye, -eye]), np.zeros(2 * n))


def dim(S) -> int:
    if isinstance(S, Polyhedron):
        return S.dim
    if isinstance(S, Orthant):
        return S.dim
    if isinstance(S, (Shift, Negate)):
        return dim(S.base)
    if isinstance(S, Union):
        return dim(S.parts[0])
    if isinstance(S, Oracle):
        return S.spec.dim(S.params)
    raise TypeError(f"not a set expression: {S!r}")


# --------------------------------------------------------------------------
# oracle catalog


class OracleSpec(NamedTuple):
    dim: Callable[[dict], int]
    contains: Callable[[np.ndarray, dict, float], np.ndarray]
    core: Optional[Callable[[np.ndarray, dict, float], np.ndarray]]
    sample: Callable[[np.random.Generator, int, dict], np.ndarray]
    recession: Callable[[dict], list]


def _hyp_c(params):
    return float(params.get("c", 1.0))


def _hyperbola_contains(Y, params, tol):
    c = _hyp_c(params)
    y1, y2 = Y[:, 0], Y[:, 1]
    out = np.zeros(len(Y), dtype=bool)
    pos = y1 > 0
    q = c / y1[pos]
    out[pos] = y2[pos] - q >= -tol * (1.0 + np.abs(q))
    return out


def _hyperbola_core(Y, params, margin):
    c = _hyp_c(params)
    y1, y2 = Y[:, 0], Y[:, 1]
    out = np.zeros(len(Y), dtype=bool)
    pos = y1 > margin
    q = c / y1[pos]
    out[pos] = y2[pos] - q >= margin * (1.0 + np.abs(q))
    return out


def _hyperbola_sample(rng, n, params):
    c = _hyp_c(params)
    y1 = np.exp(rng.normal(0.0, 1.0, n))
    y2 = c / y1 + np.abs(rng.normal(0.0, 2.0, n))
    return np.column_stack([y1, y2])


def _ball_center(params):
    if "center" in params:
        return as_vector(params["center"])
    return np.zeros(int(params.get("dim", 2)))


def _ball_norm(Y, params):
    p = params.get("p", 2)
    return np.linalg.norm(Y - _ball_center(params), ord=float(p), axis=1)


def _ball_contains(Y, params, tol):
    r = float(params.get("radius", 1.0))
    return _ball_norm(Y, params) <= r + tol * (1.0 + r)


def _ball_core(Y, params, margin):
    r = float(params.get("radius", 1.0))
    return _ball_norm(Y, params) <= r - margin * (1.0 + r)


def _ball_sample(rng, n, params):
    c = _ball_center(params)
    r = float(params.get("radius", 1.0))
    p = float(params.get("p", 2))
    g = rng.normal(size=(n, c.size))
    g /= np.linalg.norm(g, ord=p, axis=1)[:, None]
    rad = r * rng.uniform(0.0, 1.0, n) ** (1.0 / c.size)
    return c + g * rad[:, None]


ORACLES: dict = {
    # y2 >= c / y1 with y1 > 0; recession cone is the nonnegative quadrant.
    "hyperbola": OracleSpec(
        dim=lambda params: 2,
        contains=_hyperbola_contains,
        core=_hyperbola_core,
        sample=_hyperbola_sample,
        recession=lambda params: [[-1.0, 0.0], [0.0, -1.0]],
    ),
    # bounded, so the recession cone is {0}
    "norm-ball": OracleSpec(
        dim=lambda params: _ball_center(params).size,
        contains=_ball_contains,
        core=_ball_core,
        sample=_ball_sample,
        recession=lambda params: [],
    ),
}


def oracle(name: str, params: Optional[dict] = None, closed: bool = True,
           recession: Optional[Sequence] = None) -> Oracle:
    """Catalog oracle; ``recession`` defaults to the catalog's declared directions."""
    params = dict(params or {})
    if recession is None:
        if name not in ORACLES:
            raise ValueError(f"unknown oracle set {name!r}")
        recession = ORACLES[name].recession(params)
    return Oracle(name, params, closed, tuple(recession))


# --------------------------------------------------------------------------
# membership


def contains_many(S, Y, tol: float = TOL) -> np.ndarray:
    """Boolean membership for each row of ``Y``."""
    n = dim(S)
    Y = _as_batch(Y, n)
    return _contains(S, Y, tol)


def _contains(S, Y, tol):
    if isinstance(S, Polyhedron):
        b = S.offsets
        return np.all(Y @ S.normals.T <= b + tol * (1.0 + np.abs(b)), axis=1)
    if isinstance(S, Orthant):
        if S.sign == "nonneg":
            return np.all(Y >= -tol, axis=1)
        return np.all(Y <= tol, axis=1)
    if isinstance(S, Shift):
        return _contains(S.base, Y - S.offset, tol)
    if isinstance(S, Negate):
        return _contains(S.base, -Y, tol)
    if isinstance(S, Union):
        out = np.zeros(len(Y), dtype=bool)
        for part in S.parts:
            out |= _contains(part, Y, tol)
        return out
    if isinstance(S, Oracle):
        return np.asarray(S.spec.contains(Y, S.params, tol), dtype=bool)
    raise TypeError(f"not a set expression: {S!r}")


def contains(S, y, tol: float = TOL) -> bool:
    return bool(contains_many(S, as_vector(y, dim(S))[None, :], tol)[0])


def contains_core_many(S, Y, margin: float = MARGIN) -> np.ndarray:
    """Membership in the algebraic interior, shrunk by ``margin``.

    For unions the union of the parts' cores is used, which can miss
    interior points where pieces touch.
    """
    n = dim(S)
    Y = _as_batch(Y, n)
    return _core(S, Y, margin)


def _core(S, Y, margin):
    if isinstance(S, Polyhedron):
        b = S.offsets
        return np.all(Y @ S.normals.T <= b - margin * (1.0 + np.abs(b)), axis=1)
    if isinstance(S, Orthant):
        if S.sign == "nonneg":
            return np.all(Y >= margin, axis=1)
        return np.all(Y <= -margin, axis=1)
    if isinstance(S, Shift):
        return _core(S.base, Y - S.offset, margin)
    if isinstance(S, Negate):
        return _core(S.base, -Y, margin)
    if isinstance(S, Union):
        out = np.zeros(len(Y), dtype=bool)
        for part in S.parts:
            out |= _core(part, Y, margin)
        return out
    if isinstance(S, Oracle):
        if S.spec.core is None:
            raise UnsupportedError(f"oracle {S.name!r} declares no core predicate")
        return np.asarray(S.spec.core(Y, S.params, margin), dtype=bool)
    raise TypeError(f"not a set expression: {S!r}")


def contains_core(S, y, margin: float = MARGIN) -> bool:
    return bool(contains_core_many(S, as_vector(y, dim(S))[None, :], margin)[0])


# --------------------------------------------------------------------------
# polyhedral normal form


def to_polyhedra(S) -> list:
    """Flatten an oracle-free expression into a list of polyhedra (a union).

    Raises UnsupportedError when an oracle leaf is present.
    """
    if isinstance(S, Polyhedron):
        return [S]
    if isinstance(S, Orthant):
        eye = np.eye(S.dim)
        A = -eye if S.sign == "nonneg" else eye
        return [Polyhedron(A, np.zeros(S.dim))]
    if isinstance(S, Shift):
        return [Polyhedron(P.normals, P.offsets + P.normals @ S.offset)
                for P in to_polyhedra(S.base)]
    if isinstance(S, Negate):
        return [Polyhedron(-P.normals, P.offsets) for P in to_polyhedra(S.base)]
    if isinstance(S, Union):
        out = []
        for part in S.parts:
            out.extend(to_polyhedra(part))
        return out
    if isinstance(S, Oracle):
        raise UnsupportedError(f"oracle set {S.name!r} has no polyhedral form")
    raise TypeError(f"not a set expression: {S!r}")


def is_polyhedral(S) -> bool:
    if isinstance(S, (Polyhedron, Orthant)):
        return True
    if isinstance(S, (Shift, Negate)):
        return is_polyhedral(S.base)
    if isinstance(S, Union):
        return all(is_polyhedral(p) for p in S.parts)
    return False


def is_closed(S) -> bool:
    """Closedness from the representation; oracles report their declared flag."""
    if isinstance(S, Oracle):
        return bool(S.closed)
    if isinstance(S, (Shift, Negate)):
        return is_closed(S.base)
    if isinstance(S, Union):
        return all(is_closed(p) for p in S.parts)
    return True


def intersect_polyhedra(*sets) -> Polyhedron:
    """Intersection of single-polyhedron expressions, by stacking rows."""
    rows, offs = [], []
    for S in sets:
        polys = to_polyhedra(S)
        if len(polys) != 1:
            raise UnsupportedError("intersection needs single-polyhedron operands")
        rows.append(polys[0].normals)
        offs.append(polys[0].offsets)
    return Polyhedron(np.vstack(rows), np.concatenate(offs))


# --------------------------------------------------------------------------
# recession cones and directions


def recession_cone(S):
    """``0+S`` for polyhedral expressions without unions."""
    if isinstance(S, Polyhedron):
        return Polyhedron(S.normals, np.zeros_like(S.offsets))
    if isinstance(S, Orthant):
        return S
    if isinstance(S, Shift):
        return recession_cone(S.base)
    if isinstance(S, Negate):
        return Negate(recession_cone(S.base))
    raise UnsupportedError(
        f"recession cone unsupported for {type(S).__name__} representation")


class DirectionClass(NamedTuple):
    in_minus_recession: bool
    in_minus_core_recession: bool


def classify_direction(S, k, tol: float = TOL, margin: float = MARGIN) -> DirectionClass:
    """Is ``k`` in ``-0+S`` (weakly), and in ``-core 0+S`` (by margin)?"""
    k = as_vector(k, dim(S))
    if not np.any(k):
        raise ValueError("direction k must be nonzero")
    R = recession_cone(S)
    return DirectionClass(contains(R, -k, tol), contains_core(R, -k, margin))


def _in_declared_cone(k, dirs, tol=1e-9) -> bool:
    if not dirs:
        return False
    G = np.column_stack(dirs)
    coef, resid = nnls(G, k)
    return resid <= tol * (1.0 + np.linalg.norm(k))


def direction_admits_bisection(S, k) -> bool:
    """Whether ``{t : y in S + t k}`` is an up-set for every ``y``.

    Holds when ``k`` lies in ``-0+S``; oracle sets must declare it. For a union
    it suffices that it holds for each part.
    """
    k = as_vector(k, dim(S))
    if isinstance(S, Oracle):
        return _in_declared_cone(k, list(S.recession))
    if isinstance(S, Shift):
        return direction_admits_bisection(S.base, k)
    if isinstance(S, Negate):
        # k in -0+(-B)  <=>  -k in -0+B
        return direction_admits_bisection(S.base, -k)
    if isinstance(S, Union):
        return all(direction_admits_bisection(p, k) for p in S.parts)
    return classify_direction(S, k).in_minus_recession


# --------------------------------------------------------------------------
# structural flags


@dataclass(frozen=True)
class ConeFlags:
    contains_zero: bool
    pointed: Optional[bool]
    is_cone: Optional[bool]
    core_nonempty: Optional[bool]

    def to_json(self) -> dict:
        def tri(v):
            return "unknown" if v is None else v
        return {"contains_zero": self.contains_zero, "pointed": tri(self.pointed),
                "is_cone": tri(self.is_cone), "core_nonempty": tri(self.core_nonempty)}


def cone_flags(S, rng: Optional[np.random.Generator] = None, n_probe: int = 256) -> ConeFlags:
    """Structural flags, decided from the representation where possible.

    Undecidable flags stay ``None`` ("unknown"); core nonemptiness is only
    ever reported True on a found witness.
    """
    n = dim(S)
    zero = np.zeros(n)
    has_zero = contains(S, zero)
    is_cone = None
    pointed = None
    core_nonempty = None
    if is_polyhedral(S):
        polys = to_polyhedra(S)
        homogeneous = all(np.all(P.offsets == 0.0) for P in polys)
        if homogeneous:
            is_cone = True
        elif not has_zero:
            is_cone = False
        if is_cone and len(polys) == 1:
            # lineality space of {A u <= 0} is ker A
            pointed = bool(np.linalg.matrix_rank(polys[0].normals) == n)
    elif not has_zero:
        is_cone = False
    rng = rng if rng is not None else np.random.default_rng(0)
    try:
        cands = [zero]
        if is_polyhedral(S):
            for P in to_polyhedra(S):
                u = -(P.normals / np.linalg.norm(P.normals, axis=1)[:, None]).sum(axis=0)
                cands.append(u)
                cands.append(10.0 * u)
        cands.extend(sample_members(S, rng, n_probe))
        if np.any(contains_core_many(S, np.array(cands))):
            core_nonempty = True
    except UnsupportedError:
        pass
    return ConeFlags(has_zero, pointed, is_cone, core_nonempty)


# --------------------------------------------------------------------------
# sampling


def sample_members(S, rng: np.random.Generator, n: int, scale: float = 5.0,
                   max_rounds: int = 50) -> np.ndarray:
    """Up to ``n`` random points of ``S`` (rejection sampling for polyhedra).

    Fewer than ``n`` rows are returned when the set is too thin to hit.
    """
    d = dim(S)
    if n <= 0:
        return np.zeros((0, d))
    pts = _sample(S, rng, n, scale, max_rounds)
    return pts[:n]


def _sample(S, rng, n, scale, max_rounds):
    d = dim(S)
    if isinstance(S, Orthant):
        g = np.abs(rng.normal(0.0, scale, size=(n, d)))
        # put some mass on the boundary faces
        mask = rng.uniform(size=(n, d)) < 0.1
        g[mask] = 0.0
        return g if S.sign == "nonneg" else -g
    if isinstance(S, Shift):
        return S.offset + _sample(S.base, rng, n, scale, max_rounds)
    if isinstance(S, Negate):
        return -_sample(S.base, rng, n, scale, max_rounds)
    if isinstance(S, Union):
        which = rng.integers(0, len(S.parts), size=n)
        chunks = [_sample(p, rng, int(np.sum(which == i)), scale, max_rounds)
                  for i, p in enumerate(S.parts)]
        out = np.vstack([c for c in chunks if len(c)] or [np.zeros((0, d))])
        return out[rng.permutation(len(out))]
    if isinstance(S, Oracle):
        if n == 0:
            return np.zeros((0, d))
        return S.spec.sample(rng, n, S.params)
    if isinstance(S, Polyhedron):
        return _sample_polyhedron(S, rng, n, scale, max_rounds)
    raise TypeError(f"not a set expression: {S!r}")


def _sample_polyhedron(P, rng, n, scale, max_rounds):
    d = P.dim
    if n == 0:
        return np.zeros((0, d))
    # center the proposal on a feasible point when one is easy to find
    center = np.zeros(d)
    A, b = P.normals, P.offsets
    if not np.all(A @ center <= b):
        # least-squares point on the active constraints is a cheap guess
        center = np.linalg.lstsq(A, np.minimum(b, 0.0) - 1.0, rcond=None)[0]
        if not np.all(A @ center <= b + TOL * (1 + np.abs(b))):
            center = np.zeros(d)
    found = []
    total = 0
    for _ in range(max_rounds):
        Y = center + rng.normal(0.0, scale, size=(4 * n, d))
        ok = np.all(Y @ A.T <= b, axis=1)
        if np.any(ok):
            found.append(Y[ok])
            total += int(ok.sum())
        if total >= n:
            break
    if not found:
        return np.zeros((0, d))
    return np.vstack(found)[:n]


# --------------------------------------------------------------------------
# free disposal


class DisposalResult(NamedTuple):
    holds: bool
    witness: Optional[tuple]


def free_disposal_check(S, C, rng: np.random.Generator, n_samples: int = 256) -> DisposalResult:
    """Sampled test of ``S - C subset S``; a counterexample carries ``(a, c)``."""
    A = sample_members(S, rng, n_samples)
    Cs = sample_members(C, rng, n_samples)
    m = min(len(A), len(Cs))
    if m == 0:
        return DisposalResult(True, None)
    # every sampled a against every sampled c would be m^2; pair them twice over
    for perm in (np.arange(m), rng.permutation(m)):
        diff = A[:m] - Cs[perm]
        ok = contains_many(S, diff)
        if not np.all(ok):
            i = int(np.argmin(ok))
            return DisposalResult(False, (A[i].tolist(), Cs[perm][i].tolist()))
    return DisposalResult(True, None)


# --------------------------------------------------------------------------
# JSON


def set_from_json(obj, path: str = "$"):
    if not isinstance(obj, dict):
        raise SetSchemaError("expected an object", path)
    kind = obj.get("kind")
    try:
        if kind == "halfspaces":
            _require(obj, ("normals", "offsets"), path)
            normals = obj["normals"]
            offsets = obj["offsets"]
            if not isinstance(normals, list) or not normals:
                raise SetSchemaError("normals must be a nonempty list of rows", path + ".normals")
            if not isinstance(offsets, list):
                raise SetSchemaError("offsets must be a list", path + ".offsets")
            widths = {len(r) if isinstance(r, list) else -1 for r in normals}
            if len(widths) != 1 or -1 in widths:
                raise SetSchemaError("normal rows must be lists of equal length", path + ".normals")
            if len(offsets) != len(normals):
                raise SetSchemaError(
                    f"{len(normals)} normal rows but {len(offsets)} offsets", path + ".offsets")
            return halfspaces(normals, offsets)
        if kind == "orthant":
            _require(obj, ("dim",), path)
            d = obj["dim"]
            if not isinstance(d, int) or isinstance(d, bool):
                raise SetSchemaError("dim must be an integer", path + ".dim")
            return Orthant(d, obj.get("sign", "nonneg"))
        if kind == "shift":
            _require(obj, ("offset", "base"), path)
            base = set_from_json(obj["base"], path + ".base")
            return Shift(np.asarray(obj["offset"], dtype=float), base)
        if kind == "negate":
            _require(obj, ("base",), path)
            return Negate(set_from_json(obj["base"], path + ".base"))
        if kind == "union":
            _require(obj, ("parts",), path)
            parts = obj["parts"]
            if not isinstance(parts, list) or not parts:
                raise SetSchemaError("parts must be a nonempty list", path + ".parts")
            return Union(tuple(set_from_json(p, f"{path}.parts[{i}]")
                               for i, p in enumerate(parts)))
        if kind == "oracle":
            _require(obj, ("name",), path)
            return oracle(obj["name"], obj.get("params"), bool(obj.get("closed", True)),
                          obj.get("recession"))
    except SetSchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SetSchemaError(str(exc), path) from exc
    raise SetSchemaError(f"unknown kind {kind!r}", path + ".kind")


def _require(obj, keys, path):
    for key in keys:
        if key not in obj:
            raise SetSchemaError(f"missing field {key!r}", path)


def set_to_json(S) -> dict:
    if isinstance(S, Polyhedron):
        return {"kind": "halfspaces", "normals": S.normals.tolist(), "offsets": S.offsets.tolist()}
    if isinstance(S, Orthant):
        return {"kind": "orthant", "dim": S.dim, "sign": S.sign}
    if isinstance(S, Shift):
        return {"kind": "shift", "offset": S.offset.tolist(), "base": set_to_json(S.base)}
    if isinstance(S, Negate):
        return {"kind": "negate", "base": set_to_json(S.base)}
    if isinstance(S, Union):
        return {"kind": "union", "parts": [set_to_json(p) for p in S.parts]}
    if isinstance(S, Oracle):
        return {"kind": "oracle", "name": S.name, "params": dict(S.params),
                "closed": S.closed, "recession": [d.tolist() for d in S.recession]}
    raise TypeError(f"not a set expression: {S!r}")
