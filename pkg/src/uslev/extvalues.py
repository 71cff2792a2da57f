"""Extended scalars: finite reals, minus infinity, and the symbol ``nu``.

``nu`` stands for the infimum of the empty set. It is not a number and
compares false against everything, itself included. There is deliberately
no plus infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

REAL = "real"
NEG_INF_KIND = "-inf"
NU_KIND = "nu"


@dataclass(frozen=True)
class ExtScalar:
    kind: str
    value: float = 0.0

    def __post_init__(self):
        if self.kind == REAL:
            if not math.isfinite(self.value):
                raise ValueError(f"Real payload must be finite, got {self.value!r}")
        elif self.kind not in (NEG_INF_KIND, NU_KIND):
            raise ValueError(f"unknown ExtScalar kind {self.kind!r}")

    @property
    def is_real(self) -> bool:
        return self.kind == REAL

    @property
    def is_neg_inf(self) -> bool:
        return self.kind == NEG_INF_KIND

    @property
    def is_nu(self) -> bool:
        return self.kind == NU_KIND

    def __float__(self) -> float:
        if self.kind == REAL:
            return self.value
        if self.kind == NEG_INF_KIND:
            return -math.inf
        raise ValueError("nu has no numeric value")

    def __repr__(self) -> str:
        if self.kind == REAL:
            return f"Real({self.value!r})"
        return "NegInf" if self.kind == NEG_INF_KIND else "Nu"


def Real(x: float) -> ExtScalar:
    return ExtScalar(REAL, float(x))


NegInf = ExtScalar(NEG_INF_KIND)
Nu = ExtScalar(NU_KIND)


def ext_add(v: ExtScalar, t: float) -> ExtScalar:
    if not math.isfinite(t):
        raise ValueError("translation must be a finite real")
    if v.is_real:
        return Real(v.value + t)
    return v


def ext_scale(v: ExtScalar, lam: float) -> ExtScalar:
    """Value of the functional after the direction is multiplied by ``lam``.

    Scaling the direction by ``lam > 0`` divides real values by ``lam``.
    """
    if not (lam > 0 and math.isfinite(lam)):
        raise ValueError(f"scale factor must be a finite positive real, got {lam!r}")
    if v.is_real:
        return Real(v.value / lam)
    return v


def ext_le(v: ExtScalar, t: float) -> bool:
    if v.is_nu:
        return False
    return v.is_neg_inf or v.value <= t


def ext_lt(v: ExtScalar, t: float) -> bool:
    if v.is_nu:
        return False
    return v.is_neg_inf or v.value < t


def ext_ge(v: ExtScalar, t: float) -> bool:
    return v.is_real and v.value >= t


def ext_gt(v: ExtScalar, t: float) -> bool:
    return v.is_real and v.value > t


def ext_less(v: ExtScalar, w: ExtScalar) -> bool:
    """Strict order between two extended scalars; nu is incomparable."""
    if v.is_nu or w.is_nu:
        return False
    if v.is_neg_inf:
        return not w.is_neg_inf
    return w.is_real and v.value < w.value


def ext_min(values) -> ExtScalar:
    """Minimum over the non-nu entries; nu when there are none."""
    best = Nu
    for v in values:
        if v.is_neg_inf:
            return NegInf
        if v.is_real and (best.is_nu or v.value < best.value):
            best = v
    return best


JsonValue = Union[float, str]


def to_json(v: ExtScalar) -> JsonValue:
    if v.is_real:
        return v.value
    return v.kind


def from_json(obj: JsonValue) -> ExtScalar:
    if isinstance(obj, str):
        if obj == NEG_INF_KIND:
            return NegInf
        if obj == NU_KIND:
            return Nu
        raise ValueError(f"unknown extended scalar encoding {obj!r}")
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise ValueError(f"cannot decode extended scalar from {obj!r}")
    return Real(obj)
