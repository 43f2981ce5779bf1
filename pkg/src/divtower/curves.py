"""Weierstrass cubics, their points, translations and 2-isogenies.

Curves are y^2 = x^3 + c2 x^2 + c1 x + c0 over a tower field.  The
2-isogeny from E_{b,g}: y^2 = x(x - b)(x - g) with kernel <(0,0)> is

    (x, y) -> (x - (b + g) + b g / x,  y (1 - b g / x^2)),

whose image satisfies y^2 = x^3 + 2(b + g) x^2 + (b - g)^2 x.  The curve
with the opposite x^2 sign is reached by composing with (X, Y) -> (-X, i Y),
which needs a square root of -1.  Three conventions are therefore offered:

* ``"corrected"`` keeps the map and uses the + sign target;
* ``"twisted"`` keeps the - sign target and twists the map (default);
* ``"literal"`` pairs the untwisted map with the - sign target.  It is not
  an isogeny onto that curve and exists only so the mismatch can be shown.
"""

from __future__ import annotations

from .fields import TowerElem, TowerField, common_field

CONVENTIONS = ("twisted", "corrected", "literal")


class NotOnCurveError(ValueError):
    pass


def _field_of(*elems) -> TowerField:
    field = None
    for e in elems:
        if isinstance(e, TowerElem):
            field = e.owner if field is None else common_field(field, e.owner)
    if field is None:
        raise TypeError("need at least one tower element")
    return field


class WeierstrassCurve:
    def __init__(self, c2, c1, c0, roots=None):
        field = _field_of(c2, c1, c0, *(roots or ()))
        self.c2, self.c1, self.c0 = field(c2), field(c1), field(c0)
        self.roots = tuple(field(r) for r in roots) if roots is not None else None
        if not self.discriminant():
            raise ValueError("singular cubic: Weierstrass roots must be distinct")
        if self.roots is not None:
            for r in self.roots:
                if self.rhs(r):
                    raise ValueError("declared root does not annihilate the cubic")

    @classmethod
    def from_roots(cls, r1, r2, r3) -> "WeierstrassCurve":
        field = _field_of(r1, r2, r3)
        r1, r2, r3 = field(r1), field(r2), field(r3)
        return cls(-(r1 + r2 + r3), r1 * r2 + r2 * r3 + r3 * r1, -(r1 * r2 * r3), roots=(r1, r2, r3))

    @classmethod
    def with_two_torsion_at_zero(cls, beta, gamma) -> "WeierstrassCurve":
        """y^2 = x (x - beta)(x - gamma)."""
        field = _field_of(beta, gamma)
        return cls.from_roots(field.zero, beta, gamma)

    @property
    def field(self) -> TowerField:
        return _field_of(self.c2, self.c1, self.c0)

    def rhs(self, x):
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def discriminant(self):
        b, c, d = self.c2, self.c1, self.c0
        return b * b * c * c - 4 * c**3 - 4 * b**3 * d - 27 * d * d + 18 * b * c * d

    def contains(self, x, y) -> bool:
        return y * y == self.rhs(x)

    def point(self, x, y) -> "Point":
        return Point(self, x, y)

    @property
    def infinity(self) -> "Point":
        return Point(self, None, None)

    def translated(self, z) -> "WeierstrassCurve":
        """E_z: the image of this curve under (x, y) -> (x + z, y)."""
        b, c, d = self.c2, self.c1, self.c0
        c2 = b - 3 * z
        c1 = 3 * z * z - 2 * b * z + c
        c0 = -(z**3) + b * z * z - c * z + d
        roots = tuple(r + z for r in self.roots) if self.roots is not None else None
        return WeierstrassCurve(c2, c1, c0, roots=roots)

    def two_torsion(self) -> list["Point"]:
        if self.roots is None:
            raise ValueError("roots of the cubic are not known")
        return [self.infinity] + [self.point(r, 0) for r in self.roots]

    def same_equation(self, other: "WeierstrassCurve") -> bool:
        return self.c2 == other.c2 and self.c1 == other.c1 and self.c0 == other.c0

    def __eq__(self, other) -> bool:
        return isinstance(other, WeierstrassCurve) and self.same_equation(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"y^2 = x^3 + ({self.c2})*x^2 + ({self.c1})*x + ({self.c0})"


class Point:
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: WeierstrassCurve, x, y):
        self.curve = curve
        if x is None:
            self.x = self.y = None
            return
        field = _field_of(x, y, curve.c2) if isinstance(x, TowerElem) or isinstance(y, TowerElem) else curve.field
        self.x, self.y = field(x), field(y)
        if not curve.contains(self.x, self.y):
            raise NotOnCurveError(f"({self.x}, {self.y}) is not on {curve}")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def _check(self, other: "Point"):
        if other.curve is not self.curve and not other.curve.same_equation(self.curve):
            raise ValueError("points on different curves")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return False
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    __hash__ = None

    def __neg__(self) -> "Point":
        if self.is_infinity:
            return self
        return Point(self.curve, self.x, -self.y)

    def __add__(self, other: "Point") -> "Point":
        self._check(other)
        if self.is_infinity:
            return other
        if other.is_infinity:
            return self
        E = self.curve
        if self.x == other.x:
            if self.y == -other.y:
                return E.infinity
            return self.double()
        slope = (other.y - self.y) / (other.x - self.x)
        x3 = slope * slope - E.c2 - self.x - other.x
        return Point(E, x3, slope * (self.x - x3) - self.y)

    def __sub__(self, other: "Point") -> "Point":
        return self + (-other)

    def double(self) -> "Point":
        if self.is_infinity or not self.y:
            return self.curve.infinity
        E = self.curve
        slope = (3 * self.x * self.x + 2 * E.c2 * self.x + E.c1) / (2 * self.y)
        x3 = slope * slope - E.c2 - 2 * self.x
        return Point(E, x3, slope * (self.x - x3) - self.y)

    def __mul__(self, n: int) -> "Point":
        if n < 0:
            return (-self) * (-n)
        result = self.curve.infinity
        addend = self
        while n:
            if n & 1:
                result = result + addend
            n >>= 1
            if n:
                addend = addend.double()
        return result

    __rmul__ = __mul__

    def order_two_power(self, limit: int = 64) -> int:
        """Smallest m with 2**m * P = O (the point must be 2-power torsion)."""
        P, m = self, 0
        while not P.is_infinity:
            if m >= limit:
                raise ValueError("point is not 2-power torsion within the limit")
            P, m = P.double(), m + 1
        return m

    def __repr__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


def translate(z, P: Point, target: WeierstrassCurve | None = None) -> Point:
    """t_z: (x, y) -> (x + z, y), landing on E_z."""
    target = target or P.curve.translated(z)
    if P.is_infinity:
        return target.infinity
    return Point(target, P.x + z, P.y)


def _quadratic_roots(b, c, field=None):
    """Roots of x^2 + b x + c, adjoining one square root when needed."""
    F = _field_of(b, c) if field is None else common_field(field, _field_of(b, c, field.one))
    b, c = F(b), F(c)
    disc = b * b - 4 * c
    if not disc:
        return [-F(b) / 2]
    F2, s = F.adjoin_sqrt(disc)
    return [(-F2(b) + s) / 2, (-F2(b) - s) / 2]


class TwoIsogeny:
    """The 2-isogeny with kernel <(0,0)> on y^2 = x(x - beta)(x - gamma)."""

    def __init__(self, beta, gamma, convention: str = "twisted", zeta4=None):
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        field = _field_of(beta, gamma)
        self.beta, self.gamma = field(beta), field(gamma)
        self.convention = convention
        self.zeta4 = zeta4
        if zeta4 is not None and zeta4 * zeta4 != -1:
            raise ValueError("zeta4 must square to -1")
        self.source = WeierstrassCurve.with_two_torsion_at_zero(self.beta, self.gamma)
        s, p = self.beta + self.gamma, self.beta * self.gamma
        d2 = (self.beta - self.gamma) ** 2
        sign = 1 if convention == "corrected" else -1
        # nonzero target roots: u^2 + sign*2s u + d2 = 0
        self.target = WeierstrassCurve(sign * 2 * s, d2, field.zero)
        self._corrected_target = WeierstrassCurve(2 * s, d2, field.zero)
        self._sum, self._prod = s, p

    def __repr__(self) -> str:
        return f"TwoIsogeny(beta={self.beta}, gamma={self.gamma}, {self.convention})"

    # -- forward map ---------------------------------------------------------

    def _corrected_image(self, x, y):
        p = self._prod
        X = x - self._sum + p / x
        Y = y * (1 - p / (x * x))
        return X, Y

    def _need_zeta4(self):
        if self.zeta4 is None:
            raise ValueError("the twisted convention needs a square root of -1 (zeta4)")
        return self.zeta4

    def image_coordinates(self, P: Point):
        """Raw image of an affine non-kernel point, no on-curve check."""
        X, Y = self._corrected_image(P.x, P.y)
        if self.convention == "twisted":
            return -X, (self._need_zeta4() * Y if Y else Y)
        return X, Y

    def apply(self, P: Point) -> Point:
        if not P.curve.same_equation(self.source):
            raise NotOnCurveError("point is not on the isogeny's source curve")
        if P.is_infinity or not P.x:
            return self.target.infinity
        X, Y = self.image_coordinates(P)
        return Point(self.target, X, Y)

    __call__ = apply

    def x_map(self, x):
        X = x - self._sum + self._prod / x
        return -X if self.convention == "twisted" else X

    # -- dual ----------------------------------------------------------------

    def _to_corrected(self, Q: Point):
        if self.convention == "twisted":
            if not Q.y:
                return -Q.x, Q.y
            return -Q.x, -self._need_zeta4() * Q.y
        if self.convention == "literal":
            raise ValueError("the literal convention has no consistent dual")
        return Q.x, Q.y

    def _from_corrected(self, X, Y):
        if self.convention == "twisted":
            return -X, (self._need_zeta4() * Y if Y else Y)
        return X, Y

    def dual_apply(self, Q: Point) -> Point:
        """Dual isogeny back to the source; composed with ``apply`` it is [2]."""
        if not Q.curve.same_equation(self.target):
            raise NotOnCurveError("point is not on the isogeny's target curve")
        E = self.source
        if Q.is_infinity:
            return E.infinity
        X, Y = self._to_corrected(Q)
        if not X:
            return E.infinity
        B = (self.beta - self.gamma) ** 2
        return Point(E, Y * Y / (4 * X * X), -Y * (B - X * X) / (8 * X * X))

    # -- preimages -----------------------------------------------------------

    def preimage(self, Q: Point, field: TowerField | None = None) -> list[Point]:
        """Both points P on the source with apply(P) == Q.

        New square roots are adjoined on top of ``field`` when given.
        """
        if not Q.curve.same_equation(self.target):
            raise NotOnCurveError("point is not on the isogeny's target curve")
        E = self.source
        if Q.is_infinity:
            return [E.infinity, E.point(0, 0)]
        U, V = self._to_corrected(Q)
        p = self._prod
        points = []
        xs = _quadratic_roots(-(U + self._sum), p, field)
        for x in xs:
            factor = 1 - p / (x * x)
            if factor:
                points.append(Point(E, x, V / factor))
            else:
                points.extend(_both_lifts(E, x))
        return _common(points)

    def dual_preimage(self, P: Point, field: TowerField | None = None) -> list[Point]:
        """Both points R on the target with dual_apply(R) == P."""
        E = self.source
        if not P.curve.same_equation(E):
            raise NotOnCurveError("point is not on the isogeny's source curve")
        Ec = self._corrected_target
        if P.is_infinity:
            return [self.target.infinity, self.target.point(0, 0)]
        A = 2 * self._sum
        B = (self.beta - self.gamma) ** 2
        corrected = []
        for X in _quadratic_roots(A - 4 * P.x, B, field):
            factor = B - X * X
            if factor:
                corrected.append(Point(Ec, X, -8 * X * X * P.y / factor))
            else:
                corrected.extend(_both_lifts(Ec, X))
        points = []
        for R in corrected:
            X, Y = self._from_corrected(R.x, R.y)
            points.append(Point(self.target, X, Y))
        return _common(points)


def _both_lifts(E: WeierstrassCurve, x) -> list[Point]:
    F, y = x.owner.adjoin_sqrt(E.rhs(x)) if E.rhs(x) else (x.owner, x.owner.zero)
    if not y:
        return [Point(E, x, y)]
    return [Point(E, x, y), Point(E, x, -y)]


def _common(points: list[Point]) -> list[Point]:
    affine = [P for P in points if not P.is_infinity]
    if not affine:
        return points
    F = _field_of(*[P.x for P in affine], *[P.y for P in affine])
    return [P if P.is_infinity else Point(P.curve, F(P.x), F(P.y)) for P in points]


def halving_isogeny(curve: WeierstrassCurve) -> tuple[object, TwoIsogeny]:
    """Translation and corrected 2-isogeny used to halve points on ``curve``."""
    if curve.roots is None:
        raise ValueError("halving needs the roots of the cubic")
    e, r2, r3 = curve.roots
    return e, TwoIsogeny(r2 - e, r3 - e, convention="corrected")


def halve(P: Point, field: TowerField | None = None) -> list[Point]:
    """All four Q with 2Q = P, via the dual and the isogeny (two square roots).

    Square roots are adjoined on top of ``field`` when given.  Every returned
    point is checked by doubling.
    """
    E = P.curve
    e, phi = halving_isogeny(E)
    P0 = translate(-e, P, phi.source)
    own = E.field if P.is_infinity else _field_of(P.x, P.y, E.c2)
    field = own if field is None else common_field(field, own)
    halves = []
    for R in phi.dual_preimage(P0, field):
        if not R.is_infinity:
            field = common_field(field, _field_of(R.x, R.y))
        for Q0 in phi.preimage(R, field):
            if not Q0.is_infinity:
                field = common_field(field, _field_of(Q0.x, Q0.y))
            halves.append(translate(e, Q0, E))
    halves = _common(halves)
    for Q in halves:
        if Q.double() != P:
            raise ArithmeticError("halving produced a point that does not double back")
    return halves


def halve_one(P: Point, field: TowerField | None = None) -> Point:
    """One Q with 2Q = P, adjoining at most two square roots (checked by doubling)."""
    E = P.curve
    if P.is_infinity:
        return E.infinity
    e, phi = halving_isogeny(E)
    field = common_field(field, _field_of(P.x, P.y, E.c2)) if field is not None else _field_of(P.x, P.y, E.c2)
    R = phi.dual_preimage(translate(-e, P, phi.source), field)[0]
    if not R.is_infinity:
        field = common_field(field, _field_of(R.x, R.y))
    Q0 = phi.preimage(R, field)[0]
    Q = translate(e, Q0, E)
    if Q.double() != P:
        raise ArithmeticError("halving produced a point that does not double back")
    return Q
