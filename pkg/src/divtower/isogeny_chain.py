"""Chains of 2-isogenies whose kernels are the cyclic subgroups of the tree.

For a vertex v at level m the node stores a curve E_v, the value a_v and a
list of steps (z, phi) whose composition phi_v : E -> E_v has kernel equal
to the cyclic subgroup N_v of order 2^m.

Level 1: phi = phi_{alpha_{i+1} - alpha_i, alpha_{i+2} - alpha_i} after
translating by -alpha_i, and a_v = alpha_{i+1} - alpha_{i+2}.
Children of v: the two nonzero roots r, r' of E_v's cubic; the child with
value a = r continues with phi_{-a, r' - a} after translating by -a.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import Point, TwoIsogeny, WeierstrassCurve, translate
from .fields import Ambient, TowerElem, TowerField
from .tree import ROOT, Vertex, children, enumerate_level, twin

MODES = ("unlabeled", "labeled")


class ChainConsistencyError(ArithmeticError):
    """An internal invariant of the construction failed."""


@dataclass
class ChainNode:
    vertex: Vertex
    curve: WeierstrassCurve
    a_value: TowerElem | None = None
    steps: list[tuple[TowerElem, TwoIsogeny]] = field(default_factory=list)
    field: TowerField | None = None

    @property
    def degree(self) -> int:
        return 1 << len(self.steps)

    def apply(self, P: Point) -> Point:
        """phi_v(P) for a point P on the root curve."""
        for z, phi in self.steps:
            P = translate(z, P, phi.source)
            P = phi.apply(P)
        return P

    def nonzero_root_quadratic(self):
        """(b, c) with the nonzero roots of E_v's cubic solving u^2 + b u + c."""
        if self.curve.c0:
            raise ChainConsistencyError("chain curve does not have (0, 0) as 2-torsion")
        return self.curve.c2, self.curve.c1

    def to_dict(self) -> dict:
        return {
            "vertex": str(self.vertex),
            "label": self.vertex.label_str(),
            "curve": [repr(self.curve.c2), repr(self.curve.c1), repr(self.curve.c0)],
            "a_value": None if self.a_value is None else repr(self.a_value),
            "degree": self.degree,
        }


@dataclass
class IsogenyChain:
    curve: WeierstrassCurve
    alphas: tuple
    convention: str
    mode: str
    nodes: dict[Vertex, ChainNode] = field(default_factory=dict)
    kernel_checks: list[dict] = field(default_factory=list)
    ambient: Ambient | None = None

    @property
    def level(self) -> int:
        return max(v.level for v in self.nodes)

    def at_level(self, n: int) -> list[ChainNode]:
        return [self.nodes[v] for v in enumerate_level(n)]

    def values(self) -> dict[Vertex, TowerElem]:
        return {v: node.a_value for v, node in self.nodes.items() if not v.is_root}

    def to_dict(self) -> dict:
        return {
            "convention": self.convention,
            "mode": self.mode,
            "nodes": [self.nodes[v].to_dict() for v in sorted(self.nodes)],
            "kernel_checks": self.kernel_checks,
        }


def root_chain(alphas, convention: str = "twisted", zeta4=None):
    """The root node (identity isogeny on E) and the three level 1 nodes."""
    a1, a2, a3 = alphas
    E = WeierstrassCurve.from_roots(a1, a2, a3)
    F = E.field
    root = ChainNode(ROOT, E, None, [], F)
    level_one = []
    al = [F(a) for a in alphas]
    for i, v in enumerate(children(ROOT)):
        ai, aj, ak = al[i], al[(i + 1) % 3], al[(i + 2) % 3]
        phi = TwoIsogeny(aj - ai, ak - ai, convention=convention, zeta4=zeta4)
        level_one.append(ChainNode(v, phi.target, aj - ak, [(-ai, phi)], F))
    return root, level_one


def _child(node: ChainNode, v: Vertex, a, a_twin, convention, zeta4, F) -> ChainNode:
    phi = TwoIsogeny(-a, a_twin - a, convention=convention, zeta4=zeta4)
    return ChainNode(v, phi.target, a, node.steps + [(-F(a), phi)], F)


def extend(node: ChainNode, mode: str = "unlabeled", convention: str = "twisted", zeta4=None,
           ambient: Ambient | None = None, generator=None) -> list[ChainNode]:
    """The two children of ``node``.

    Roots of the node's quadratic factor are found with one square root,
    adjoined in ``ambient`` when given and in a branch of the node's own field
    otherwise.  Unlabeled mode gives the "+" root to the first child.
    Labeled mode pushes ``generator(child)`` through phi_v and gives each
    child the root it lands on.
    """
    b, c = node.nonzero_root_quadratic()
    disc = b * b - 4 * c
    if not disc:
        raise ChainConsistencyError(f"repeated root on the curve of {node.vertex}")
    if ambient is not None:
        s = ambient.sqrt(disc, label=f"chain[{node.vertex}]")
        F = ambient.field
    else:
        F, s = node.field.adjoin_sqrt(disc, label=f"chain[{node.vertex}]")
    roots = [(-F(b) + s) / 2, (-F(b) - s) / 2]
    if not roots[0] or not roots[1]:
        raise ChainConsistencyError(f"zero root on the curve of {node.vertex}")
    kids = children(node.vertex)
    if mode == "unlabeled":
        assigned = roots
    elif mode == "labeled":
        assigned = []
        for kid in kids:
            image = node.apply(generator(kid))
            if image.is_infinity or image.y:
                raise ChainConsistencyError(f"generator of {kid} does not map to 2-torsion")
            matches = [r for r in roots if r == image.x]
            if len(matches) != 1:
                raise ChainConsistencyError(f"generator of {kid} maps to {image}, not a nonzero root")
            assigned.append(matches[0])
        if assigned[0] == assigned[1]:
            raise ChainConsistencyError(f"both children of {node.vertex} map to the same root")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return [
        _child(node, kids[0], assigned[0], assigned[1], convention, zeta4, F),
        _child(node, kids[1], assigned[1], assigned[0], convention, zeta4, F),
    ]


def build_chain(alphas, n: int, mode: str = "unlabeled", convention: str = "twisted", zeta4=None,
                ambient: Ambient | None = None, torsion=None, verify_kernels: bool = True) -> IsogenyChain:
    """All nodes to level ``n``.

    Labeled mode needs ``torsion`` with ``generator(v)`` (a generator of N_v
    for levels <= n) and ``half(v)`` (a point whose double generates N_v).
    Every kernel is then checked: phi_v kills the generator of N_v and does
    not kill a point of order 2^(m+1) above it.
    """
    if n < 1:
        raise ValueError("chain level must be at least 1")
    if mode == "labeled" and torsion is None:
        raise ValueError("labeled mode needs torsion points")
    root, level_one = root_chain(alphas, convention, zeta4)
    chain = IsogenyChain(root.curve, tuple(alphas), convention, mode, {ROOT: root}, ambient=ambient)
    for node in level_one:
        chain.nodes[node.vertex] = node
    for m in range(1, n):
        for v in enumerate_level(m):
            kids = extend(chain.nodes[v], mode, convention, zeta4, ambient,
                          torsion.generator if torsion is not None else None)
            for kid in kids:
                chain.nodes[kid.vertex] = kid
    for node in chain.nodes.values():
        node_twin = None if node.vertex.is_root else chain.nodes[twin(node.vertex)]
        if node_twin is not None and node.vertex.level >= 2:
            if node.a_value == node_twin.a_value:
                raise ChainConsistencyError(f"twin values coincide at {node.vertex}")
    if ambient is not None:
        for node in chain.nodes.values():
            node.field = ambient.field
    if mode == "labeled" and verify_kernels:
        for m in range(1, n + 1):
            for v in enumerate_level(m):
                chain.kernel_checks.append(check_kernel(chain.nodes[v], torsion))
    return chain


def check_kernel(node: ChainNode, torsion) -> dict:
    """phi_v(generator of N_v) = O and phi_v(half of it) != O."""
    gen = torsion.generator(node.vertex)
    half = torsion.half(node.vertex)
    if half.double() != gen:
        raise ChainConsistencyError("torsion half does not double back")
    kills = node.apply(gen).is_infinity
    image = node.apply(half)
    exact = not image.is_infinity
    return {
        "vertex": str(node.vertex),
        "label": node.vertex.label_str(),
        "kills_generator": kills,
        "half_survives": exact,
        "half_image_is_2_torsion": exact and not image.y,
        "holds": kills and exact,
    }
