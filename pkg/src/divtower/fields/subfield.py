"""Subfields of an ambient tower, given by generators.

A subfield is the smallest field containing the base and a list of
ambient elements.  It is stored as a reduced row-echelon basis of base
coefficient vectors, so membership is one exact elimination and the
degree over the base is the basis size.
"""

from __future__ import annotations

from .tower import TowerElem, TowerField, common_field


class Subfield:
    def __init__(self, ambient: TowerField, generators=(), name: str | None = None):
        self.ambient = ambient
        self.name = name
        self.generators: list[TowerElem] = []
        self._rows: list[list] = []
        self._pivots: list[int] = []
        self._elements: list[TowerElem] = []
        self._insert(ambient.one.c, ambient.one)
        for g in generators:
            self.adjoin(g)

    # -- linear algebra over the base ---------------------------------------

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self._rows, self._pivots):
            coeff = v[p]
            if coeff:
                v = [a - coeff * b for a, b in zip(v, row)]
        return v

    def _insert(self, v, element) -> bool:
        w = self._reduce(v)
        for p, coeff in enumerate(w):
            if coeff:
                break
        else:
            return False
        inv = 1 / coeff
        w = [a * inv for a in w]
        for i, row in enumerate(self._rows):
            c = row[p]
            if c:
                self._rows[i] = [a - c * b for a, b in zip(row, w)]
        self._rows.append(w)
        self._pivots.append(p)
        self._elements.append(element)
        return True

    def _grow_ambient(self, field: TowerField):
        if field is self.ambient:
            return
        field = common_field(self.ambient, field)
        pad = field.degree - self.ambient.degree
        zero = field.base.zero
        self._rows = [row + [zero] * pad for row in self._rows]
        self._elements = [field.lift(e) for e in self._elements]
        self.generators = [field.lift(g) for g in self.generators]
        self.ambient = field

    def _vector(self, x) -> list:
        x = self.ambient(x) if not isinstance(x, TowerElem) else x
        if x.owner is not self.ambient:
            self._grow_ambient(x.owner)
            x = self.ambient.lift(x)
        return x.c

    # -- public surface ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree over the base field of the ambient tower."""
        return len(self._rows)

    def basis(self) -> list[TowerElem]:
        """The echelon basis as ambient elements."""
        return [TowerElem(self.ambient, list(r)) for r in self._rows]

    def coordinates(self, x) -> list | None:
        """Coordinates of ``x`` over ``basis()``, or ``None`` if ``x`` is outside."""
        v = self._vector(x)
        coords = [v[p] for p in self._pivots]
        residue = self._reduce(v)
        if any(residue):
            return None
        return coords

    def __contains__(self, x) -> bool:
        return self.coordinates(x) is not None

    def expand(self, coords) -> TowerElem:
        total = self.ambient.zero
        for c, b in zip(coords, self.basis()):
            total = total + b * self.ambient(c)
        return total

    def adjoin(self, g) -> bool:
        """Enlarge to the field generated by self and ``g``; True if it grew."""
        v = self._vector(g)
        g = TowerElem(self.ambient, v)
        self.generators.append(g)
        if self.coordinates(g) is not None:
            return False
        queue = list(self._elements)
        while queue:
            w = g * queue.pop()
            if self._insert(w.c, w):
                queue.append(w)
        return True

    def extended(self, generators, name: str | None = None) -> "Subfield":
        """A new subfield generated by self's generators plus ``generators``."""
        new = Subfield.__new__(Subfield)
        new.ambient = self.ambient
        new.name = name
        new.generators = list(self.generators)
        new._rows = [list(r) for r in self._rows]
        new._pivots = list(self._pivots)
        new._elements = list(self._elements)
        for g in generators:
            new.adjoin(g)
        return new

    def contains_field(self, other: "Subfield") -> bool:
        return all(g in self for g in other.generators)

    def membership_witnesses(self, other: "Subfield") -> list:
        """Per generator of ``other``, its coordinates here (or ``None``)."""
        return [self.coordinates(g) for g in other.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subfield):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.contains_field(other)
            and other.contains_field(self)
        )

    __hash__ = None

    def __repr__(self) -> str:
        label = self.name or "Subfield"
        return f"<{label}: degree {self.degree} over {self.ambient.base.name}>"
