"""Scalarization of vector optimization problems by functionals with uniform sublevel sets.

``phi_{A,k}(y) = inf {t : y in A + t k}`` evaluated in closed form on
polyhedral set expressions, with brute-force efficiency oracles and
characterization drivers for finite outcome sets.
"""

from .extvalues import ExtScalar, NegInf, Nu, Real
from .phi import PhiProblem, PreconditionError, phi_eval, phi_oracle, phi_value
from .sets import (Negate, Orthant, Polyhedron, Shift, Union, halfspaces, oracle,
                   set_from_json, set_to_json)
from .efficiency import PointCloud, eff, weff
from .scalarize import (bound_scalarize, characterize_eff, characterize_weff,
                        norm_characterize, reference_scalarize, separate)

__all__ = [
    "ExtScalar", "NegInf", "Nu", "Real",
    "PhiProblem", "PreconditionError", "phi_eval", "phi_oracle", "phi_value",
    "Negate", "Orthant", "Polyhedron", "Shift", "Union", "halfspaces", "oracle",
    "set_from_json", "set_to_json",
    "PointCloud", "eff", "weff",
    "bound_scalarize", "characterize_eff", "characterize_weff", "norm_characterize",
    "reference_scalarize", "separate",
]
