import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from uslev import instances, sets
from uslev.efficiency import (PointCloud, argmin_indices, eff, eff_algebra_check, scalar_filter,
                              weff)
from uslev.extvalues import NegInf, Nu, Real
from uslev.phi import phi_many, to_ext
from uslev.sets import Orthant, halfspaces

ORTH = Orthant(2, "nonneg")
F4 = np.array([[0.0, 3.0], [1.0, 1.0], [3.0, 0.0], [2.0, 2.0]])


def test_eff_examples():
    assert eff(F4, ORTH).indices == [0, 1, 2]
    assert eff([[0, 0], [0, 1]], ORTH).indices == [0]


def test_eff_with_empty_domination_set():
    empty = halfspaces([[1, 0], [-1, 0]], [-1, -1])     # y1 <= -1 and y1 >= 1
    assert eff(F4, empty).indices == [0, 1, 2, 3]


def test_weff_examples():
    assert weff([[0, 0], [0, 1]], ORTH).indices == [0, 1]
    assert weff(F4, ORTH).indices == [0, 1, 2]
    assert weff([[3, 4]], ORTH).indices == [0]


def test_duplicates_do_not_dominate_each_other():
    assert eff([[1, 1], [1, 1], [2, 2]], ORTH).indices == [0, 1]


def test_cloud_validation():
    with pytest.raises(ValueError):
        PointCloud(np.zeros((0, 2)))
    with pytest.raises(ValueError):
        PointCloud([[np.nan, 1.0]])
    with pytest.raises(ValueError):
        PointCloud([[1.0, 2.0]], labels=("a", "b"))


def test_argmin_skips_nu_and_prefers_neg_inf():
    assert argmin_indices([Nu, Real(1.0), Real(1.0 + 1e-12), Real(2.0)]) == [1, 2]
    assert argmin_indices([Real(0.0), NegInf, Nu]) == [1]
    assert argmin_indices([Nu, Nu]) == []


def _values(F):
    A = sets.Shift(np.array([4.0, 4.0]), sets.Negate(ORTH))
    kinds, vals = phi_many(A, (1, 1), F)
    return [to_ext(int(c), float(v)) for c, v in zip(kinds, vals)]


def test_scalar_filter_reference_example():
    vals = _values(F4)
    assert [v.value for v in vals] == [-1.0, -3.0, -1.0, -2.0]
    res, how = scalar_filter(F4, vals, ORTH, "monotone")
    assert res.indices == [1] and how == "certified"


def test_scalar_filter_constant_values():
    res, how = scalar_filter(F4, [Real(0.0)] * 4, ORTH)
    assert res.indices == eff(F4, ORTH).indices and how == "filtered"


def test_scalar_filter_all_nu():
    res, how = scalar_filter(F4, [Nu] * 4, ORTH)
    assert res.indices == [] and how == "empty"


def test_scalar_filter_strict_monotone(rng):
    P = rng.uniform(0, 10, (80, 2))
    vals = [Real(float(p[0] + 2 * p[1])) for p in P]
    res, _ = scalar_filter(P, vals, ORTH, "strict")
    assert set(res.indices) <= set(eff(P, ORTH).indices)


def test_algebra_check_on_example(rng):
    report = eff_algebra_check(F4, ORTH, rng, n_aug=50)
    assert all(e["passed"] for e in report), report


def test_algebra_check_non_pointed_cone_is_flagged(rng):
    half = halfspaces([[0, -1]], [0])                    # y2 >= 0, not pointed
    report = {e["check"]: e for e in eff_algebra_check(F4, half, rng)}
    aug = report["augmentation-invariance"]
    assert aug["guaranteed"] is False and "not pointed" in aug["note"]


def test_algebra_check_whole_cloud_slice(rng):
    # y above every point: F ∩ (y - D) = F and the slice identity is immediate
    report = {e["check"]: e for e in eff_algebra_check(F4, ORTH, rng, n_slices=0)}
    assert report["slice-identity"]["passed"]


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_eff_inside_weff_and_order_free(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    P = instances.random_cloud(rng, n, 40, "grid")
    D, _ = instances.random_pointed_cone(rng, n)
    e, w = eff(P, D).indices, weff(P, D).indices
    assert set(e) <= set(w)
    perm = rng.permutation(len(P))
    assert sorted(int(perm[i]) for i in eff(P[perm], D).indices) == e


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_smaller_domination_set_keeps_more(seed):
    rng = np.random.default_rng(seed)
    P = instances.random_cloud(rng, 3, 40)
    D1 = sets.intersect_polyhedra(Orthant(3, "nonneg"), halfspaces([rng.normal(size=3)], [0.0]))
    assert set(eff(P, Orthant(3, "nonneg")).indices) <= set(eff(P, D1).indices)
