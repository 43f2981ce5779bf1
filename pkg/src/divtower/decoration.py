"""Decorations of the tree: the recursive quadratic assignment of field values.

A decoration sends every nonroot vertex to a nonzero field element.  Level 1
vertices get the differences a_i = alpha_{i+1} - alpha_{i+2}.  The two
children of a vertex v (with twin v') get the two roots of a quadratic
built from the values at v and v':

* children of a level 1 vertex: x^2 - 2(2 w' + w) x + c, where
  c = w^2 in the ``construction-consistent`` variant (the one the isogeny
  chain produces) and c = w'^2 in the ``paper-literal`` variant;
* deeper: x^2 - 2(w' - 2 w) x + w'^2, whose discriminant is
  16 w (w - w').

Values live either in one shared tower (``layout="ambient"``), so that every
value can be compared with every other, or in per-parent branch towers
(``layout="branch"``), which keeps the height linear in the level.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .fields import Ambient, RationalFunctionField, Subfield, TowerElem, TowerField
from .tree import ROOT, Vertex, children, enumerate_level, parent, twin
from .verdict import TheoremVerdict

VARIANTS = ("construction-consistent", "paper-literal")
POLICIES = ("first", "swapped", "random")
LAYOUTS = ("ambient", "branch")


class DegenerateDecorationError(ArithmeticError):
    """A quadratic in the recursion had a repeated or zero root."""


def level_one_values(alphas) -> tuple:
    """(a_1, a_2, a_3) with a_i = alpha_{i+1} - alpha_{i+2}."""
    a1, a2, a3 = alphas
    return (a2 - a3, a3 - a1, a1 - a2)


def child_quadratic(w, w_twin, parent_level: int, variant: str = "construction-consistent"):
    """(b, c) such that the children of a vertex are the roots of x^2 + b x + c."""
    if parent_level == 1:
        b = -2 * (2 * w_twin + w)
        c = w * w if variant == "construction-consistent" else w_twin * w_twin
    else:
        b = -2 * (w_twin - 2 * w)
        c = w_twin * w_twin
    return b, c


@dataclass
class Decoration:
    level: int
    values: dict[Vertex, TowerElem]
    variant: str
    policy: str
    layout: str
    seed: int | None = None
    ambient: Ambient | None = None
    branch_fields: dict[Vertex, TowerField] = field(default_factory=dict)
    quadratics: dict[Vertex, tuple] = field(default_factory=dict)
    defects: list[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        """Twin values distinct and all values nonzero."""
        return not self.defects

    @property
    def field(self) -> TowerField:
        """Field holding every value (ambient layout only)."""
        if self.ambient is None:
            raise ValueError("branch layout has no single field; use field_of(vertex)")
        return self.ambient.field

    def field_of(self, v: Vertex) -> TowerField:
        if self.ambient is not None:
            return self.ambient.field
        return self.branch_fields[v]

    def at_level(self, n: int) -> list[TowerElem]:
        return [self.values[v] for v in enumerate_level(n)]

    def __getitem__(self, v: Vertex) -> TowerElem:
        return self.values[v]

    def generated_field(self, over: Subfield, up_to: int | None = None, name=None) -> Subfield:
        """``over`` extended by every value of level <= ``up_to``."""
        if self.ambient is None:
            raise ValueError("generated fields need the ambient layout")
        n = self.level if up_to is None else up_to
        gens = [self.values[v] for m in range(1, n + 1) for v in enumerate_level(m)]
        return over.extended(gens, name=name)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "variant": self.variant,
            "policy": self.policy,
            "layout": self.layout,
            "seed": self.seed,
            "values": {str(v): format_value(x) for v, x in sorted(self.values.items())},
        }


def format_value(x: TowerElem) -> dict:
    return {"value": repr(x), "coefficients": x.to_nested(), "radicands": [repr(r) for r in x.owner.radicands]}


def _plus_first(policy: str, rng: random.Random | None) -> bool:
    if policy == "first":
        return True
    if policy == "swapped":
        return False
    return rng.random() < 0.5


def decorate(
    a_values,
    n: int,
    variant: str = "construction-consistent",
    policy: str = "first",
    layout: str = "ambient",
    ambient: Ambient | None = None,
    seed: int = 0,
    strict: bool = True,
) -> Decoration:
    """Build a decoration to level ``n`` from the three level 1 values.

    With ``strict=False`` a repeated or zero root is recorded in ``defects``
    instead of raising, so a degenerate recursion can still be compared.
    """
    if n < 1:
        raise ValueError("decoration level must be at least 1")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if layout not in LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}")
    rng = random.Random(seed) if policy == "random" else None
    if layout == "ambient" and ambient is None:
        ambient = Ambient(a_values[0].owner)
    if ambient is not None and layout == "ambient":
        ambient.absorb(*a_values)
        base = ambient.field
    else:
        ambient = None
        base = a_values[0].owner
    values: dict[Vertex, TowerElem] = {}
    branch: dict[Vertex, TowerField] = {}
    quadratics: dict[Vertex, tuple] = {}
    defects: list[str] = []

    def defect(message):
        if strict:
            raise DegenerateDecorationError(message)
        defects.append(message)

    for v, a in zip(children(ROOT), a_values):
        values[v] = base(a)
        branch[v] = base
        if not values[v]:
            defect(f"level 1 value at {v} is zero")
    for m in range(1, n):
        for v in enumerate_level(m):
            w, w_twin = values[v], values[twin(v)]
            b, c = child_quadratic(w, w_twin, m, variant)
            disc = b * b - 4 * c
            label = f"disc[{v}]"
            if not disc:
                defect(f"repeated root below {v}")
                F = ambient.field if ambient is not None else branch[v]
                s = F.zero
            elif ambient is not None:
                s = ambient.sqrt(disc, label=label)
                F = ambient.field
            else:
                F, s = branch[v].adjoin_sqrt(disc, label=label)
            plus, minus = (-F(b) + s) / 2, (-F(b) - s) / 2
            if not plus or not minus:
                defect(f"zero root below {v}")
            first, second = children(v)
            if _plus_first(policy, rng):
                values[first], values[second] = plus, minus
            else:
                values[first], values[second] = minus, plus
            branch[first] = branch[second] = F
            quadratics[v] = (b, c, disc)
    if ambient is not None:
        values = {v: ambient.field(x) for v, x in values.items()}
        branch = {}
    return Decoration(n, values, variant, policy, layout, seed if policy == "random" else None,
                      ambient, branch, quadratics, defects)


def discriminant_certificate(d: Decoration) -> dict:
    """Check every child quadratic: nonzero discriminant, Vieta relations, and
    for parents of level >= 2 the closed form 16 w (w - w')."""
    entries = []
    ok = True
    for v, (b, c, disc) in sorted(d.quadratics.items()):
        w, w_twin = d.values[v], d.values[twin(v)]
        x, y = (d.values[u] for u in children(v))
        entry = {
            "vertex": str(v),
            "discriminant": repr(disc),
            "nonzero": bool(disc),
            "vieta": x + y == -b and x * y == c,
            "distinct": x != y,
        }
        if v.level >= 2:
            entry["closed_form"] = disc == 16 * w * (w - w_twin)
        ok = ok and all(val for key, val in entry.items() if isinstance(val, bool))
        entries.append(entry)
    return {"holds": ok, "quadratics": len(entries), "entries": entries}


def symbolic_discriminant_identity() -> bool:
    """The discriminant of x^2 - 2(q - 2p) x + q^2 is 16 p (p - q) identically."""
    R = RationalFunctionField(("p", "q"))
    p, q = R.gens
    b = -2 * (q - 2 * p)
    return b * b - 4 * q * q == 16 * p * (p - q)


def multiset_equal(xs, ys) -> bool:
    """Multiset equality for exact elements that may not be hashable consistently."""
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        for j, y in enumerate(remaining):
            if x == y:
                del remaining[j]
                break
        else:
            return False
    return True


def per_level_multisets_equal(first: dict, second: dict, n: int) -> list[bool]:
    """Per-level comparison of two vertex -> value maps."""
    return [
        multiset_equal([first[v] for v in enumerate_level(m)], [second[v] for v in enumerate_level(m)])
        for m in range(1, n + 1)
    ]


def compare_chain_with_variants(chain_values: dict, a_values, n: int, ambient: Ambient, alphas=None,
                   over: Subfield | None = None) -> TheoremVerdict:
    """Compare the isogeny chain's values with both recursion variants.

    Passes when the construction-consistent variant agrees at every level and
    the paper-literal variant disagrees from level 2 on.  With ``over`` given,
    the level 2 fields of both variants are compared and reported.
    """
    started = time.perf_counter()
    verdict = TheoremVerdict(
        "chain-is-decoration",
        "per-level multisets of chain values a_v equal the decoration values "
        "(children of level 1 vertices: constant term w^2)",
        alphas=alphas,
    )
    agree, decs = {}, {}
    side = Ambient(ambient.field)
    for variant in VARIANTS:
        d = decs[variant] = decorate(a_values, n, variant=variant, ambient=side, strict=False)
        if d.defects:
            verdict.notes.append(f"{variant}: " + "; ".join(d.defects))
        levels = per_level_multisets_equal(chain_values, d.values, n)
        agree[variant] = levels
        expected = variant == "construction-consistent"
        verdict.check(f"{variant} agrees at all levels <= {n}", all(levels), expected=expected,
                      per_level=levels)
    verdict.check("both variants agree at level 1", agree[VARIANTS[0]][0] and agree[VARIANTS[1]][0])
    satisfied = [v for v, levels in agree.items() if all(levels)]
    verdict.notes.append("chain satisfies: " + (", ".join(satisfied) or "neither variant"))
    if over is not None and n >= 2:
        fields = {v: d.generated_field(over, up_to=2) for v, d in decs.items()}
        first, second = fields.values()
        same = first == second
        verdict.degrees["level_2_fields"] = {v: f.degree for v, f in fields.items()}
        verdict.notes.append(f"level 2 fields of the two variants {'coincide' if same else 'differ'}")
    return verdict.finish(started)


def independence_check(a_values, n: int, ambient: Ambient, over: Subfield,
                       policies=("first", "swapped"), seed: int = 0, alphas=None, mode="specialized") -> TheoremVerdict:
    """Two root-assignment policies give the same per-level multisets and the
    same generated field."""
    started = time.perf_counter()
    verdict = TheoremVerdict(
        "assignment-independence",
        "per-level value multisets and K(values) do not depend on the root assignment",
        mode=mode,
        alphas=alphas,
    )
    decs = [decorate(a_values, n, policy=p, ambient=ambient, seed=seed) for p in policies]
    levels = per_level_multisets_equal(decs[0].values, decs[1].values, n)
    verdict.check("per-level multisets equal", all(levels), per_level=levels)
    differ = any(decs[0].values[v] != decs[1].values[v] for v in decs[0].values)
    verdict.check("assignments actually differ", differ or n == 1)
    fields = [d.generated_field(over, name=p) for d, p in zip(decs, policies)]
    verdict.check("generated fields mutually contain each other",
                  fields[0].contains_field(fields[1]) and fields[1].contains_field(fields[0]),
                  degree=fields[0].degree)
    verdict.degrees = {p: f.degree for p, f in zip(policies, fields)}
    return verdict.finish(started)
