"""The rooted 3-regular tree of cyclic 2-power subgroups.

A level-n vertex stands for a cyclic subgroup of order 2**n in
(Z/2**n)^2, written through a canonical generator: (1, b) with b mod 2**n,
or (2c, 1) with c mod 2**(n-1).  Coordinates refer to a fixed basis (P, Q)
of the 2-power torsion with 2**(n-1) P = (alpha_1, 0) and
2**(n-1) Q = (alpha_2, 0), so the three level-1 vertices <(alpha_i, 0)>
carry the labels (1,0), (0,1), (1,1) in that order.

Vertices are identified by their path of child indices from the root.
At level 1 the "twin" is the cyclic shift <(alpha_i, 0)> -> <(alpha_{i+1}, 0)>;
that is a naming convention, not a graph-theoretic sibling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

LEVEL_ONE_LABELS = ((1, 0), (0, 1), (1, 1))


def canonical(vec, n: int) -> tuple[int, int]:
    """Canonical generator of the cyclic subgroup generated by ``vec`` mod 2**n."""
    if n == 0:
        return (0, 0)
    m = 1 << n
    x, y = vec[0] % m, vec[1] % m
    if x & 1:
        return (1, y * pow(x, -1, m) % m)
    if y & 1:
        return (x * pow(y, -1, m) % m, 1)
    raise ValueError(f"{vec} is not primitive mod 2^{n}")


@dataclass(frozen=True)
class Vertex:
    path: tuple[int, ...]

    @property
    def level(self) -> int:
        return len(self.path)

    @property
    def label(self) -> tuple[int, int]:
        return _label(self.path)

    @property
    def is_root(self) -> bool:
        return not self.path

    def __str__(self) -> str:
        return f"{self.level}:" + "".join(str(i) for i in self.path)

    def label_str(self) -> str:
        a, b = self.label
        return f"⟨({a},{b})⟩ mod 2^{self.level}"

    def __lt__(self, other: "Vertex") -> bool:
        return (self.level, self.path) < (other.level, other.path)


ROOT = Vertex(())


def _lifts(label, n):
    """The two cyclic order-2**(n+1) subgroups reducing to <label> mod 2**n."""
    x, y = label
    step = 1 << n
    h = (0, 1) if x & 1 else (1, 0)
    first = canonical((x, y), n + 1)
    second = canonical((x + step * h[0], y + step * h[1]), n + 1)
    return tuple(sorted((first, second)))


@lru_cache(maxsize=None)
def _label(path) -> tuple[int, int]:
    if not path:
        return (0, 0)
    if len(path) == 1:
        return LEVEL_ONE_LABELS[path[0]]
    return _lifts(_label(path[:-1]), len(path) - 1)[path[-1]]


def children(v: Vertex) -> list[Vertex]:
    """Root: 3 children in the order <(alpha_1,0)>, <(alpha_2,0)>, <(alpha_3,0)>;
    otherwise 2 children, the smaller canonical label first."""
    count = 3 if v.is_root else 2
    return [Vertex(v.path + (i,)) for i in range(count)]


def parent(v: Vertex) -> Vertex:
    if v.is_root:
        raise ValueError("the root has no parent")
    return Vertex(v.path[:-1])


def twin(v: Vertex) -> Vertex:
    if v.is_root:
        raise ValueError("the root has no twin")
    if v.level == 1:
        return Vertex(((v.path[0] + 1) % 3,))
    return Vertex(v.path[:-1] + (1 - v.path[-1],))


def enumerate_level(n: int) -> list[Vertex]:
    if n < 0:
        raise ValueError("level must be non-negative")
    level = [ROOT]
    for _ in range(n):
        level = [c for v in level for c in children(v)]
    return level


def vertices_up_to(n: int, include_root: bool = False) -> list[Vertex]:
    start = 0 if include_root else 1
    return [v for m in range(start, n + 1) for v in enumerate_level(m)]


def vertex_from_label(label, n: int) -> Vertex:
    """The level-n vertex whose subgroup is generated by ``label`` mod 2**n."""
    if n == 0:
        return ROOT
    target = canonical(label, n)
    if n == 1:
        return Vertex((LEVEL_ONE_LABELS.index(target),))
    up = vertex_from_label(target, n - 1)
    return Vertex(up.path + (_lifts(up.label, n - 1).index(target),))


def parse_vertex(text: str) -> Vertex:
    """Inverse of ``str(Vertex)``: ``"n:b1b2...bn"``."""
    level, _, word = text.partition(":")
    path = tuple(int(ch) for ch in word)
    if len(path) != int(level):
        raise ValueError(f"malformed vertex {text!r}")
    if path and not (0 <= path[0] < 3 and all(b in (0, 1) for b in path[1:])):
        raise ValueError(f"malformed vertex {text!r}")
    return Vertex(path)
