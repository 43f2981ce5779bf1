"""Specialization of a tower over QQ(x_1, ..., x_m) at a rational point.

Evaluating coefficients is a ring map on elements whose coefficients are
defined at the point.  When every specialized radicand stays a non-square the
image is again a field tower of the same height, and the field generated by
the images of some elements has degree at most the degree of the field the
elements generate before specializing.  So a specialized degree is a lower
bound for the generic one.
"""

from __future__ import annotations

from .rational import QQ
from .tower import TowerElem, TowerField


class SpecializationError(ValueError):
    pass


class Specialization:
    """The tower ``field`` with its indeterminates set to ``point``."""

    def __init__(self, field: TowerField, point):
        names = field.base.names
        if len(point) != len(names):
            raise ValueError(f"need {len(names)} values, got {len(point)}")
        self.source = field
        self.point = tuple(QQ(v) for v in point)
        target = TowerField.over(QQ)
        for stage in field._chain[1:]:
            F, _ = target.adjoin_sqrt(self._image(target, stage.radicand.c), label=stage.label)
            if F is target:
                raise SpecializationError(f"radicand of {stage.label} becomes a square")
            target = F
        self.target = target

    def _value(self, f):
        den = f.den(*self.point)
        if not den:
            raise SpecializationError("a denominator vanishes at the point")
        return f.num(*self.point) / den

    def _image(self, owner: TowerField, coeffs) -> TowerElem:
        return TowerElem(owner, [self._value(c) for c in coeffs])

    def __call__(self, x) -> TowerElem:
        if not isinstance(x, TowerElem):
            x = self.source(x)
        x = self.source.lift(x)
        return self._image(self.target, x.c)
