"""Finite matrix groups GL_2(Z/2**n) acting on the subgroup tree."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .tree import Vertex, canonical, enumerate_level, vertex_from_label, vertices_up_to

EXHAUSTIVE_MAX_LEVEL = 3


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int
    level: int

    def __post_init__(self):
        m = 1 << self.level
        object.__setattr__(self, "a", self.a % m)
        object.__setattr__(self, "b", self.b % m)
        object.__setattr__(self, "c", self.c % m)
        object.__setattr__(self, "d", self.d % m)
        if self.level and not (self.a * self.d - self.b * self.c) & 1:
            raise ValueError("matrix is not invertible mod 2")

    @property
    def modulus(self) -> int:
        return 1 << self.level

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.modulus

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if other.level != self.level:
            raise ValueError("moduli differ")
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.level,
        )

    def reduce(self, level: int) -> "Mat2":
        if level > self.level:
            raise ValueError("cannot lift a matrix")
        return Mat2(self.a, self.b, self.c, self.d, level)

    def apply(self, vec) -> tuple[int, int]:
        x, y = vec
        m = self.modulus
        return ((self.a * x + self.b * y) % m, (self.c * x + self.d * y) % m)

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    @classmethod
    def scalar(cls, r: int, level: int) -> "Mat2":
        return cls(r, 0, 0, r, level)

    @classmethod
    def identity(cls, level: int) -> "Mat2":
        return cls.scalar(1, level)


def gl2(level: int) -> list[Mat2]:
    """Every invertible 2x2 matrix mod 2**level."""
    m = 1 << level
    return [
        Mat2(a, b, c, d, level)
        for a, b, c, d in product(range(m), repeat=4)
        if (a * d - b * c) & 1
    ]


def act(M: Mat2, v: Vertex) -> Vertex:
    """The vertex whose subgroup is M applied to v's subgroup."""
    if v.level > M.level:
        raise ValueError(f"vertex level {v.level} exceeds matrix level {M.level}")
    if v.is_root:
        return v
    image = M.reduce(v.level).apply(v.label)
    return vertex_from_label(canonical(image, v.level), v.level)


def fixes_level(M: Mat2, n: int | None = None) -> bool:
    n = M.level if n is None else n
    return all(act(M, v) == v for v in enumerate_level(n))


def full_level_stabilizer(n: int, exhaustive_cap: int = EXHAUSTIVE_MAX_LEVEL, samples: int = 2000, seed: int = 0):
    """Matrices mod 2**n fixing every vertex of level n.

    Up to ``exhaustive_cap`` this runs over all of GL_2(Z/2**n).  Above it,
    fixing <(1,0)>, <(0,1)> and <(1,1)> already forces b = c = 0 and a = d,
    so the candidates are the odd scalars; each candidate is checked on the
    whole level and a random sample of non-scalars is certified to move
    some vertex.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    if n <= exhaustive_cap:
        return {M for M in gl2(n) if fixes_level(M, n)}
    m = 1 << n
    scalars = {Mat2.scalar(r, n) for r in range(1, m, 2)}
    if not all(fixes_level(M, n) for M in scalars):
        raise ArithmeticError("a scalar failed to fix the level")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c, d = (rng.randrange(m) for _ in range(4))
        if not (a * d - b * c) & 1:
            continue
        M = Mat2(a, b, c, d, n)
        if not M.is_scalar() and fixes_level(M, n):
            raise ArithmeticError(f"non-scalar {M} fixes level {n}")
    return scalars


def relative_kernel(n: int) -> list[Mat2]:
    """Determinant-one matrices mod 2**(n+1) that reduce to the identity mod 2**n."""
    ident = Mat2.identity(n)
    return [M for M in gl2(n + 1) if M.det == 1 and M.reduce(n) == ident]


def relative_kernel_count(n: int) -> int:
    if n < 1:
        raise ValueError("level must be at least 1")
    return len(relative_kernel(n))


def nonroot_vertex_count(n: int) -> int:
    return len(vertices_up_to(n))
