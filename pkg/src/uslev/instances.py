"""Seeded random instances for property suites and tests."""

from __future__ import annotations

import numpy as np

from . import sets


def random_direction(rng: np.random.Generator, n: int) -> np.ndarray:
    k = rng.normal(size=n)
    return k / np.linalg.norm(k)


def random_polyhedron_with_direction(rng, n, m=None, zero_rows=0, scale=5.0, k=None):
    """A polyhedron ``{A y <= b}`` together with a direction ``k`` in ``-0+A``.

    Every row satisfies ``a_i . k >= 0``; ``zero_rows`` rows are orthogonal to
    ``k`` so that points outside their slab have value nu.
    """
    m = m if m is not None else int(rng.integers(1, 2 * n + 2))
    if m == 0 and zero_rows == 0:
        raise ValueError("need at least one row")
    given = k is not None
    k = random_direction(rng, n) if k is None else np.asarray(k, float) / np.linalg.norm(k)
    rows = []
    while len(rows) < m:
        g = rng.normal(size=n)
        if g @ k < 0:
            g = -g
        if g @ k < 0.05 * np.linalg.norm(g):
            continue
        rows.append(g)
    for _ in range(zero_rows):
        g = rng.normal(size=n)
        g = g - (g @ k) * k
        if np.linalg.norm(g) > 1e-3:
            rows.append(g)
    A = np.array(rows)
    b = rng.uniform(-scale, scale, size=len(A))
    return sets.Polyhedron(A, b), (k if given else k * rng.uniform(0.5, 2.0))


def random_pointed_cone(rng, n, m=None):
    """``D = {u : G u >= 0}`` with full row rank ``G`` and ``k`` with ``G k > 0``.

    Returns ``(D, k)``; ``k`` lies in the core of ``D`` with room to spare.
    """
    m = m if m is not None else int(rng.integers(n, n + 3))
    center = np.abs(rng.normal(size=n)) + 0.3
    center /= np.linalg.norm(center)
    while True:
        rows = []
        while len(rows) < m:
            g = rng.normal(size=n)
            g /= np.linalg.norm(g)
            # keep the cone reasonably wide around center
            if g @ center < 0.35:
                continue
            rows.append(g)
        G = np.array(rows)
        if np.linalg.matrix_rank(G) == n:
            break
    D = sets.Polyhedron(-G, np.zeros(m))
    return D, center


def random_cloud(rng, n, size, kind="mixed"):
    """Outcome cloud: box samples mixed with points scattered near a concave front.

    ``kind="grid"`` snaps coordinates to a half-integer grid so that ties
    (and hence weakly but not strictly efficient points) actually occur.
    """
    if kind == "box":
        return rng.uniform(0.0, 10.0, size=(size, n))
    if kind == "grid":
        return np.round(2.0 * random_cloud(rng, n, size, "mixed")) / 2.0
    n_front = size // 2
    u = np.abs(rng.normal(size=(n_front, n)))
    u /= np.linalg.norm(u, axis=1)[:, None]
    front = 10.0 - 8.0 * u + rng.uniform(0.0, 0.5, size=(n_front, n))
    box = rng.uniform(0.0, 10.0, size=(size - n_front, n))
    P = np.vstack([front, box])
    return P[rng.permutation(len(P))]


def random_domination_set(rng, n):
    """An antisymmetric (or asymmetric) polyhedral domination set."""
    choice = int(rng.integers(0, 3))
    if choice == 0:
        return sets.Orthant(n, "nonneg")
    D, k = random_pointed_cone(rng, n)
    if choice == 1:
        return D
    return sets.Shift(k * rng.uniform(0.1, 1.0), D)
