import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from uslev import sets
from uslev.sets import (DimensionError, Negate, Orthant, Polyhedron, SetSchemaError, Shift,
                        UnsupportedError, Union, halfspaces)

HYPERBOLA = sets.oracle("hyperbola", {"c": 1.0})


# membership ---------------------------------------------------------------

@pytest.mark.parametrize("S, y, expected", [
    (Orthant(2, "nonpos"), (-1.0, 0.0), True),
    (halfspaces([[1, 1]], [0]), (1.0, 0.0), False),
    (HYPERBOLA, (1.0, 1.0), True),
    (HYPERBOLA, (-1.0, 1.0), False),
    (HYPERBOLA, (2.0, 0.4), False),
])
def test_contains_examples(S, y, expected):
    assert sets.contains(S, y) is expected


@pytest.mark.parametrize("S, y, expected", [
    (Orthant(2, "nonneg"), (1.0, 1.0), True),
    (Orthant(2, "nonneg"), (0.0, 1.0), False),
    (halfspaces([[1, 0], [0, 1]], [0, 0]), (-1.0, -1.0), True),
])
def test_core_examples(S, y, expected):
    assert sets.contains_core(S, y) is expected


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        sets.contains(Orthant(2, "nonneg"), (1.0, 2.0, 3.0))


def test_polyhedron_validation():
    with pytest.raises(ValueError):
        Polyhedron(np.zeros((1, 2)), np.zeros(1))
    with pytest.raises(ValueError):
        Polyhedron(np.ones((2, 2)), np.zeros(3))
    with pytest.raises(ValueError):
        Polyhedron(np.array([[np.inf, 0.0]]), np.zeros(1))


def test_union_core_is_union_of_cores():
    U = Union((halfspaces([[1, 0]], [0]), halfspaces([[-1, 0]], [0])))
    # the seam y1 = 0 is interior to the true union but not to either part
    assert sets.contains(U, (0.0, 0.0))
    assert not sets.contains_core(U, (0.0, 0.0))
    assert sets.contains_core(U, (1.0, 0.0))


def test_oracle_without_core_refuses(monkeypatch):
    bare = sets.ORACLES["hyperbola"]._replace(core=None)
    monkeypatch.setitem(sets.ORACLES, "bare-hyperbola", bare)
    S = sets.oracle("bare-hyperbola")
    assert sets.contains(S, (1.0, 1.0))
    with pytest.raises(UnsupportedError):
        sets.contains_core(S, (1.0, 2.0))


def test_unknown_oracle_rejected():
    with pytest.raises(ValueError):
        sets.oracle("no-such-set")


# recession cones and directions -------------------------------------------

def test_recession_drops_offsets():
    P = halfspaces([[1, 1], [-1, 0]], [3, 1])
    R = sets.recession_cone(P)
    assert np.array_equal(R.normals, P.normals)
    assert np.array_equal(R.offsets, [0.0, 0.0])


def test_recession_of_shifted_orthant():
    R = sets.recession_cone(Shift(np.array([5.0, 5.0]), Orthant(2, "nonpos")))
    assert isinstance(R, Orthant) and R.sign == "nonpos"
    assert sets.recession_cone(Orthant(2, "nonpos")) == Orthant(2, "nonpos")


def test_recession_rejects_union_and_oracle():
    with pytest.raises(UnsupportedError):
        sets.recession_cone(Union((Orthant(2, "nonpos"),)))
    with pytest.raises(UnsupportedError):
        sets.recession_cone(HYPERBOLA)


@pytest.mark.parametrize("S, k, expected", [
    (Orthant(2, "nonpos"), (1.0, 1.0), (True, True)),
    (Orthant(2, "nonpos"), (1.0, 0.0), (True, False)),
    (halfspaces([[1, 1]], [0]), (1.0, 1.0), (True, True)),
    (Orthant(2, "nonpos"), (-1.0, 1.0), (False, False)),
])
def test_classify_direction(S, k, expected):
    assert tuple(sets.classify_direction(S, k)) == expected


def test_classify_rejects_zero_direction():
    with pytest.raises(ValueError):
        sets.classify_direction(Orthant(2, "nonpos"), (0.0, 0.0))


def test_bisection_admissibility_recurses():
    assert sets.direction_admits_bisection(Negate(Orthant(2, "nonneg")), (1.0, 1.0))
    assert not sets.direction_admits_bisection(Negate(Orthant(2, "nonneg")), (-1.0, -1.0))
    assert sets.direction_admits_bisection(HYPERBOLA, (-1.0, 0.0))
    assert not sets.direction_admits_bisection(HYPERBOLA, (1.0, 0.0))


# flags --------------------------------------------------------------------

def test_cone_flags_orthant():
    f = sets.cone_flags(Orthant(2, "nonneg"))
    assert (f.contains_zero, f.pointed, f.is_cone, f.core_nonempty) == (True, True, True, True)


def test_cone_flags_halfplane_not_pointed():
    f = sets.cone_flags(halfspaces([[0, -1]], [0]))
    assert f.is_cone is True and f.pointed is False


def test_cone_flags_unknown_stays_unknown():
    f = sets.cone_flags(HYPERBOLA)
    assert f.pointed is None
    assert f.to_json()["pointed"] == "unknown"


# free disposal ------------------------------------------------------------

def test_free_disposal_orthant(rng):
    assert sets.free_disposal_check(Orthant(2, "nonpos"), Orthant(2, "nonneg"), rng).holds


def test_free_disposal_halfplane(rng):
    S = halfspaces([[1, 1]], [0])
    assert sets.free_disposal_check(S, Orthant(2, "nonneg"), rng).holds
    # the cone spanned by (1,-2) and (1,0): subtracting (1,-2) raises y1+y2
    C = halfspaces([[0, 1], [-2, -1]], [0, 0])
    res = sets.free_disposal_check(S, C, rng)
    assert not res.holds
    a, c = res.witness
    assert not sets.contains(S, np.array(a) - np.array(c))


def test_free_disposal_square_fails(rng):
    square = halfspaces([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 0, 1, 0])
    assert not sets.free_disposal_check(square, Orthant(2, "nonneg"), rng).holds


# JSON schema ----------------------------------------------------------------

def test_json_orthant():
    assert sets.set_from_json({"kind": "orthant", "dim": 2}) == Orthant(2, "nonneg")


def test_json_shift_of_negate():
    S = sets.set_from_json({"kind": "shift", "offset": [4, 4],
                            "base": {"kind": "negate", "base": {"kind": "orthant", "dim": 2}}})
    assert sets.contains(S, (4.0, 4.0)) and sets.contains(S, (0.0, 3.0))
    assert not sets.contains(S, (5.0, 0.0))


def test_json_length_mismatch_names_the_field():
    with pytest.raises(SetSchemaError) as info:
        sets.set_from_json({"kind": "halfspaces", "normals": [[1, 0], [0, 1]], "offsets": [1]})
    assert info.value.path == "$.offsets"


def test_json_nested_error_path():
    with pytest.raises(SetSchemaError) as info:
        sets.set_from_json({"kind": "union", "parts": [{"kind": "orthant", "dim": 2},
                                                       {"kind": "blob"}]})
    assert info.value.path == "$.parts[1].kind"


def test_json_oracle_round_trip():
    obj = {"kind": "oracle", "name": "hyperbola", "closed": True, "recession": [[-1, 0]]}
    S = sets.set_from_json(obj)
    again = sets.set_from_json(json.loads(json.dumps(sets.set_to_json(S))))
    assert sets.contains(again, (1.0, 1.0)) and not sets.contains(again, (1.0, 0.5))


# properties ---------------------------------------------------------------

coords = st.floats(min_value=-20, max_value=20, allow_nan=False)


@settings(max_examples=200)
@given(st.lists(coords, min_size=2, max_size=2))
def test_double_negation_is_identity(y):
    P = halfspaces([[1, 2], [-1, 0.5], [0.3, -1]], [1, 2, 3])
    assert sets.contains(Negate(Negate(P)), y) == sets.contains(P, y)


@settings(max_examples=200)
@given(st.lists(coords, min_size=2, max_size=2))
def test_core_implies_membership(y):
    for S in (halfspaces([[1, 2], [-1, 0.5]], [1, 2]), Orthant(2, "nonpos"), HYPERBOLA):
        if sets.contains_core(S, y):
            assert sets.contains(S, y)


def test_recession_directions_give_rays(rng):
    P = halfspaces([[1, 1], [-1, 2], [0.5, -1]], [3, 1, 4])
    for u in sets.sample_members(sets.recession_cone(P), rng, 20):
        for a in sets.sample_members(P, rng, 10):
            for t in (0.1, 1.0, 10.0):
                assert sets.contains(P, a + t * u)
