"""Exact fields presented as towers of quadratic extensions.

A ``TowerField`` of height k is base(sqrt r_1)(sqrt r_2)...(sqrt r_k), where
each radicand r_j is a non-square element of the height j-1 field.  Fields
built from one another by ``adjoin_sqrt`` form a lineage; elements of an
ancestor are silently lifted into a descendant when they meet in
arithmetic.  Fields on different branches never mix.
"""

from __future__ import annotations

from . import _vec


class NotInLineageError(ValueError):
    """Raised when two fields have no common ambient tower."""


class TowerField:
    def __init__(self, base, parent: "TowerField | None" = None, radicand=None, label=None):
        self.base = base
        self.parent = parent
        if parent is None:
            self.height = 0
            self._rads = ()
            self._chain = (self,)
            self.radicand = None
            self.labels = ()
        else:
            self.height = parent.height + 1
            self._rads = parent._rads + (list(radicand.c),)
            self._chain = parent._chain + (self,)
            self.radicand = radicand
            self.labels = parent.labels + (label or f"sqrt({radicand})",)
        self._zero_list = [base.zero] * (1 << self.height)
        self._half = 1 / (base.one + base.one)
        self._children: dict = {}

    @classmethod
    def over(cls, base) -> "TowerField":
        """A fresh height-0 tower over ``base``."""
        return cls(base)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree over the base field."""
        return 1 << self.height

    @property
    def label(self) -> str | None:
        """Label of the last adjunction (None at height 0)."""
        return self.labels[-1] if self.labels else None

    @property
    def root(self) -> "TowerField":
        return self._chain[0]

    @property
    def radicands(self) -> tuple["TowerElem", ...]:
        return tuple(f.radicand for f in self._chain[1:])

    def is_ancestor_of(self, other: "TowerField") -> bool:
        """True if ``other`` is this field or one of its extensions."""
        return other.height >= self.height and other._chain[self.height] is self

    def stage(self, j: int) -> "TowerField":
        """The height-j field of this tower."""
        return self._chain[j]

    def __repr__(self) -> str:
        if not self.height:
            return f"TowerField({self.base.name})"
        return f"TowerField({self.base.name}; " + ", ".join(self.labels) + ")"

    # -- elements ------------------------------------------------------------

    def __call__(self, value) -> "TowerElem":
        if isinstance(value, TowerElem):
            if value.owner is self:
                return value
            if value.owner.is_ancestor_of(self):
                return self.lift(value)
            raise NotInLineageError("element does not belong to this tower")
        c = list(self._zero_list)
        c[0] = self.base(value)
        return TowerElem(self, c)

    def element(self, coeffs) -> "TowerElem":
        coeffs = [self.base(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return TowerElem(self, coeffs)

    @property
    def zero(self) -> "TowerElem":
        return TowerElem(self, list(self._zero_list))

    @property
    def one(self) -> "TowerElem":
        return self(self.base.one)

    def gen(self, j: int | None = None) -> "TowerElem":
        """The adjoined square root sqrt r_j (default: the top one)."""
        if j is None:
            j = self.height
        if not 1 <= j <= self.height:
            raise IndexError(f"no generator {j} in a height-{self.height} tower")
        c = list(self._zero_list)
        c[1 << (j - 1)] = self.base.one
        return TowerElem(self, c)

    def lift(self, x: "TowerElem") -> "TowerElem":
        if x.owner is self:
            return x
        if not x.owner.is_ancestor_of(self):
            raise NotInLineageError("cannot lift: not an ancestor field")
        return TowerElem(self, x.c + self._zero_list[len(x.c):])

    # -- decision procedures -------------------------------------------------

    def sqrt(self, x) -> "TowerElem | None":
        x = self(x)
        r = _vec.sqrt(x.c, self._rads, self.height, self.base.sqrt, self._half)
        return None if r is None else TowerElem(self, r)

    def is_square(self, x) -> bool:
        return self.sqrt(x) is not None

    def adjoin_sqrt(self, x, label=None) -> tuple["TowerField", "TowerElem"]:
        """Return ``(F, w)`` with ``w*w == x``; ``F`` is self when x is a square."""
        x = self(x)
        if not x:
            raise ValueError("cannot adjoin the square root of zero")
        w = self.sqrt(x)
        if w is not None:
            return self, w
        key = tuple(x.c)
        child = self._children.get(key)
        if child is None:
            child = TowerField(self.base, self, x, label)
            self._children[key] = child
        return child, child.gen()

    def norm_to_base(self, x):
        x = self(x)
        return _vec.base_norm(x.c, self._rads, self.height)


def common_field(a: TowerField, b: TowerField) -> TowerField:
    if a is b:
        return a
    if a.is_ancestor_of(b):
        return b
    if b.is_ancestor_of(a):
        return a
    raise NotInLineageError("fields are not embeddable in a common ambient tower")


class TowerElem:
    """An element of a ``TowerField`` as its 2**k base coefficients."""

    __slots__ = ("owner", "c")

    def __init__(self, owner: TowerField, coeffs):
        self.owner = owner
        self.c = coeffs

    def _pair(self, other):
        if isinstance(other, TowerElem):
            if other.owner is self.owner:
                return self.owner, self.c, other.c
            f = common_field(self.owner, other.owner)
            return f, f.lift(self).c, f.lift(other).c
        try:
            o = self.owner(other)
        except TypeError:
            return None
        return self.owner, self.c, o.c

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        f, x, y = p
        return TowerElem(f, _vec.add(x, y))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        f, x, y = p
        return TowerElem(f, _vec.sub(x, y))

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        f, x, y = p
        return TowerElem(f, _vec.sub(y, x))

    def __neg__(self):
        return TowerElem(self.owner, _vec.neg(self.c))

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        f, x, y = p
        return TowerElem(f, _vec.mul(x, y, f._rads, f.height))

    __rmul__ = __mul__

    def inverse(self) -> "TowerElem":
        if not self:
            raise ZeroDivisionError("division by zero in a tower field")
        f = self.owner
        return TowerElem(f, _vec.inverse(self.c, f._rads, f.height))

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        f, x, y = p
        if _vec.is_zero(y):
            raise ZeroDivisionError("division by zero in a tower field")
        return TowerElem(f, _vec.mul(x, _vec.inverse(y, f._rads, f.height), f._rads, f.height))

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        f, x, y = p
        return TowerElem(f, y) / TowerElem(f, x)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        f = self.owner
        result = f.one.c
        base = self.c
        while e:
            if e & 1:
                result = _vec.mul(result, base, f._rads, f.height)
            e >>= 1
            if e:
                base = _vec.square(base, f._rads, f.height)
        return TowerElem(f, result)

    def square(self) -> "TowerElem":
        f = self.owner
        return TowerElem(f, _vec.square(self.c, f._rads, f.height))

    def __bool__(self) -> bool:
        return not _vec.is_zero(self.c)

    def __eq__(self, other) -> bool:
        p = self._pair(other)
        if p is None:
            return False
        _, x, y = p
        return x == y

    def __hash__(self) -> int:
        return hash(tuple(self.trimmed()))

    def trimmed(self) -> list:
        """Coefficients in the smallest stage of the tower that holds them."""
        c = self.c
        while len(c) > 1 and _vec.is_zero(c[len(c) // 2 :]):
            c = c[: len(c) // 2]
        return c

    @property
    def level(self) -> int:
        """Height of the smallest stage containing this element."""
        return len(self.trimmed()).bit_length() - 1

    def in_base(self):
        """The base-field value if this element lies in the base, else ``None``."""
        if _vec.is_zero(self.c[1:]):
            return self.c[0]
        return None

    def sqrt(self) -> "TowerElem | None":
        return self.owner.sqrt(self)

    def to_nested(self):
        """Nested [lo, hi] coefficient arrays, base values serialized as strings."""
        fmt = self.owner.base.format

        def nest(c):
            if len(c) == 1:
                return fmt(c[0])
            h = len(c) // 2
            return [nest(c[:h]), nest(c[h:])]

        return nest(self.c)

    def __repr__(self) -> str:
        pretty = self.owner.base.pretty
        terms = []
        for idx, coeff in enumerate(self.c):
            if not coeff:
                continue
            gens = [f"s{j + 1}" for j in range(self.owner.height) if idx >> j & 1]
            text = pretty(coeff)
            if gens:
                if text == "1":
                    text = "*".join(gens)
                elif text == "-1":
                    text = "-" + "*".join(gens)
                else:
                    text = f"({text})*" + "*".join(gens)
            terms.append(text)
        return " + ".join(terms) if terms else "0"


def adjoin_sqrt(field: TowerField, x, label=None):
    return field.adjoin_sqrt(x, label)


def is_square(x: TowerElem) -> TowerElem | None:
    """Return a square root witness for ``x`` or ``None``."""
    return x.owner.sqrt(x)


def adjoin_zeta(field: TowerField, n: int, known: dict | None = None):
    """Adjoin a primitive 2**n-th root of unity.

    Returns ``(F, zeta, chain)`` where ``chain[m]`` is the chosen
    2**m-th root for every m <= n, compatible in the sense
    ``chain[m + 1]**2 == chain[m]``.  ``known`` seeds the chain so that
    repeated calls extend the same compatible system.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    chain = {1: field(-1)}
    if known:
        chain.update(known)
    F = field
    for m in range(2, n + 1):
        if m in chain:
            continue
        prev = F(chain[m - 1])
        if m == 2:
            F, z = F.adjoin_sqrt(-1, label="zeta4")
        elif m == 3:
            root2 = F.sqrt(2)
            if root2 is not None:
                z = root2 / 2 * (1 + F(chain[2]))
            else:
                F, z = F.adjoin_sqrt(prev, label="zeta8")
        else:
            F, z = F.adjoin_sqrt(prev, label=f"zeta{1 << m}")
        chain[m] = z
    chain = {m: F(z) for m, z in chain.items()}
    for m in range(2, n + 1):
        if chain[m] ** 2 != chain[m - 1]:
            raise ArithmeticError(f"incompatible root of unity at level {m}")
    return F, chain[n], chain


def member(x: TowerElem, L):
    """Coordinates of ``x`` in ``L`` or ``None`` when ``x`` is not in ``L``.

    ``L`` is either a ``TowerField`` in the lineage of ``x``'s owner (the
    answer is then an element of ``L``) or a ``Subfield`` of a common
    ambient tower (the answer is the coordinate list over its basis).
    """
    if isinstance(L, TowerField):
        M = x.owner
        if L.is_ancestor_of(M):
            if _vec.is_zero(x.c[L.degree :]):
                return TowerElem(L, x.c[: L.degree])
            return None
        if M.is_ancestor_of(L):
            return L.lift(x)
        raise NotInLineageError("fields are not embeddable in a common ambient tower")
    return L.coordinates(x)
