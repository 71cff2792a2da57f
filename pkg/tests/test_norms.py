import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from uslev import instances, norms, sets
from uslev.extvalues import Real
from uslev.norms import (GaugeUndefinedError, OrderUnitSpec, minkowski_eval,
                         norm_phi_coincidence_check, order_interval, order_unit_norm)
from uslev.phi import PhiProblem, PreconditionError, phi_eval
from uslev.sets import Orthant

CK = sets.Shift(np.array([1.0, 1.0]), Orthant(2, "nonpos"))


@pytest.mark.parametrize("y, expected", [((0.5, -7), 0.5), ((-1, -1), 0.0), ((2, 1), 2.0)])
def test_gauge_of_shifted_cone(y, expected):
    v = minkowski_eval(CK, y)
    assert v.is_real and v.value == pytest.approx(expected, abs=1e-9)


def test_gauge_needs_origin():
    with pytest.raises(GaugeUndefinedError, match="gauge undefined here"):
        minkowski_eval(sets.Shift(np.array([-1.0, -1.0]), Orthant(2, "nonpos")), (1, 1))


def test_gauge_zero_and_nu():
    # y1 <= 1 contains every dilate of (-3, 5) direction-wise: gauge 0
    assert minkowski_eval(sets.halfspaces([[1, 0]], [1]), (-3, 5)) == Real(0.0)
    # y2 <= 0 has no dilate containing (0, 1): inf of the empty set
    assert minkowski_eval(sets.halfspaces([[0, 1]], [0]), (0, 1)).is_nu


@pytest.fixture
def cheb():
    return OrderUnitSpec.validated(Orthant(2, "nonneg"), (1, 1))


@pytest.mark.parametrize("y, expected", [((1, -2), 2.0), ((0, 0), 0.0), ((3, 3), 3.0)])
def test_order_unit_norm_examples(cheb, y, expected):
    assert order_unit_norm(cheb, y) == pytest.approx(expected, abs=1e-12)


def test_order_unit_norm_matches_interval_gauge(cheb, rng):
    box = order_interval(cheb.C, cheb.k)
    for y in rng.uniform(-5, 5, (50, 2)):
        assert minkowski_eval(box, y).value == pytest.approx(order_unit_norm(cheb, y), abs=1e-8)


def test_order_unit_spec_refusals():
    with pytest.raises(PreconditionError, match="core C"):
        OrderUnitSpec.validated(Orthant(2, "nonneg"), (1, 0))
    with pytest.raises(PreconditionError, match="not pointed"):
        OrderUnitSpec.validated(sets.halfspaces([[0, -1]], [0]), (0, 1))
    with pytest.raises(PreconditionError, match="not a cone"):
        OrderUnitSpec.validated(sets.Shift(np.array([1.0, 1.0]), Orthant(2, "nonneg")), (3, 3))


def test_coincidence_examples(cheb):
    a = np.array([-1.0, -1.0])
    rep = norm_phi_coincidence_check(cheb, a, [[1, 1], a])
    assert rep.passed and rep.max_diff == 0.0
    A = sets.Shift(a, sets.Negate(cheb.C))
    assert phi_eval(PhiProblem(A, cheb.k), (1, 1)) == Real(2.0)


def test_coincidence_breaks_off_the_shifted_cone(cheb):
    # outside a + C the norm is an absolute value, the functional is not
    a = np.zeros(2)
    rep = norm_phi_coincidence_check(cheb, a, [[-3, -1]])
    assert not rep.passed and rep.max_diff == pytest.approx(4.0)


def test_gauge_relation_example():
    C = Orthant(2, "nonpos")
    for y in [(0.5, -7), (-1, -1), (2, 1)]:
        assert norms.gauge_of_shifted_cone(C, (1, 1), y).value == pytest.approx(
            norms.phi_gauge_relation(C, (1, 1), y).value, abs=1e-8)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_norm_axioms(seed):
    rng = np.random.default_rng(seed)
    D, k = instances.random_pointed_cone(rng, int(rng.integers(2, 5)))
    spec = OrderUnitSpec(D, k, True)
    y, z = rng.uniform(-5, 5, (2, k.size))
    lam = rng.uniform(-4, 4)
    ny, nz, nyz, nly, n0 = norms.order_unit_norms(spec, np.vstack([y, z, y + z, lam * y,
                                                                   np.zeros(k.size)]))
    assert nly == pytest.approx(abs(lam) * ny, abs=1e-9 * (1 + ny))
    assert nyz <= ny + nz + 1e-9
    assert n0 == 0.0 and ny > 0.0


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_coincidence_on_shifted_cone(seed):
    rng = np.random.default_rng(seed)
    D, k = instances.random_pointed_cone(rng, int(rng.integers(2, 5)))
    a = rng.uniform(-3, 3, k.size)
    rep = norm_phi_coincidence_check(OrderUnitSpec(D, k, True), a,
                                     a + sets.sample_members(D, rng, 20))
    assert rep.max_diff <= 1e-9
