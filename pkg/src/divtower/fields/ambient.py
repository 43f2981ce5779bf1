"""A growing tower that every construction in a session extends in turn."""

from __future__ import annotations

from .tower import TowerElem, TowerField, common_field


class Ambient:
    """Holds the current top of one tower lineage.

    Every square root is adjoined on top of everything built so far, so any
    two elements produced through the same ``Ambient`` can be compared and
    combined.  ``log`` records each accepted adjunction as (label, radicand).
    """

    def __init__(self, field: TowerField):
        self.field = field
        self.log: list[tuple[str, TowerElem]] = []

    def __call__(self, value) -> TowerElem:
        return self.field(value)

    @property
    def base(self):
        return self.field.base

    def absorb(self, *items) -> TowerField:
        """Move the top to a descendant that contains ``items`` (fields or elements)."""
        for item in items:
            field = item.owner if isinstance(item, TowerElem) else item
            if field is None:
                continue
            new = common_field(self.field, field)
            if new is not self.field:
                for j in range(self.field.height, new.height):
                    stage = new.stage(j + 1)
                    self.log.append((stage.label, stage.radicand))
                self.field = new
        return self.field

    def sqrt(self, x, label: str | None = None) -> TowerElem:
        """A square root of ``x``, adjoining one only when ``x`` is not a square."""
        if isinstance(x, TowerElem):
            self.absorb(x)
        field, root = self.field.adjoin_sqrt(x, label=label)
        if field is not self.field:
            self.log.append((field.label, field.radicand))
            self.field = field
        return root

    @property
    def degree(self) -> int:
        return self.field.degree
