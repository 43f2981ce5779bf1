"""Multivariate rational functions over the rationals.

Numerators and denominators are ``flint.fmpq_mpoly`` polynomials in a lex
ordered context.  Every value is kept reduced, with the lex-leading
coefficient of the denominator equal to 1, so equality is a comparison of
two polynomial pairs.
"""

from __future__ import annotations

from itertools import permutations

from flint import fmpq, fmpq_mpoly, fmpq_mpoly_ctx, fmpz

from .rational import QQ


class RationalFunctionField:
    """The field QQ(x_1, ..., x_m) on the given indeterminate names."""

    def __init__(self, names):
        self.names = tuple(names)
        if not self.names:
            raise ValueError("need at least one indeterminate")
        self.ctx = fmpq_mpoly_ctx.get(self.names, "lex")
        self._one_poly = self.ctx.constant(1)
        self.zero = RatFunc(self, self.ctx.constant(0), self._one_poly)
        self.one = RatFunc(self, self._one_poly, self._one_poly)
        self.name = "QQ(" + ",".join(self.names) + ")"

    def __repr__(self) -> str:
        return f"RationalFunctionField({self.names!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunctionField) and other.names == self.names

    def __hash__(self) -> int:
        return hash(("ratfunc", self.names))

    @property
    def gens(self) -> tuple["RatFunc", ...]:
        return tuple(RatFunc(self, g, self._one_poly) for g in self.ctx.gens())

    def gen(self, name: str) -> "RatFunc":
        return self.gens[self.names.index(name)]

    def __call__(self, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.field != self:
                raise ValueError("rational function from another field")
            return value
        if isinstance(value, fmpq_mpoly):
            return RatFunc(self, value, self._one_poly)
        if isinstance(value, str):
            return self.parse(value)
        return RatFunc(self, self.ctx.constant(QQ(value)), self._one_poly)

    def from_fraction(self, num: fmpq_mpoly, den: fmpq_mpoly) -> "RatFunc":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        return _reduced(self, num, den)

    def sqrt(self, f: "RatFunc") -> "RatFunc | None":
        """Square root via squarefree factorization of numerator*denominator.

        ``p/q`` (coprime) is a square iff ``p*q`` is; ``p*q`` is a square iff
        every squarefree part has even multiplicity and the unit part is a
        square rational.
        """
        if f.num.is_zero():
            return self.zero
        unit, parts = (f.num * f.den).factor_squarefree()
        root_unit = QQ.sqrt(fmpq(unit))
        if root_unit is None:
            return None
        root = self.ctx.constant(root_unit)
        for poly, mult in parts:
            if mult % 2:
                return None
            root *= poly ** (mult // 2)
        return _reduced(self, root, f.den)

    def format(self, f: "RatFunc") -> str:
        return f"({f.num})/({f.den})"

    def pretty(self, f: "RatFunc") -> str:
        if f.den.is_one():
            return str(f.num)
        return f"({f.num})/({f.den})"

    def parse(self, text: str) -> "RatFunc":
        """Parse ``(num)/(den)`` or a bare polynomial in this field's names."""
        import sympy

        symbols = sympy.symbols(self.names)
        expr = sympy.sympify(text, locals=dict(zip(self.names, symbols)))
        num, den = sympy.fraction(sympy.together(expr))
        return self.from_fraction(self._poly(num, symbols), self._poly(den, symbols))

    def _poly(self, expr, symbols) -> fmpq_mpoly:
        import sympy

        terms = sympy.Poly(expr, *symbols).terms()
        return self.ctx.from_dict(
            {monom: fmpq(int(c.p), int(c.q)) for monom, c in terms}
        )

    def substitute(self, f: "RatFunc", values) -> fmpq:
        """Evaluate at rational values for every indeterminate."""
        vals = [QQ(v) for v in values]
        den = f.den(*vals)
        if den == 0:
            raise ZeroDivisionError("specialization hits a pole")
        return f.num(*vals) / den

    def is_symmetric(self, f: "RatFunc") -> bool:
        """True iff ``f`` is invariant under every permutation of the indeterminates."""
        gens = self.ctx.gens()
        for perm in permutations(range(len(gens))):
            images = [gens[i] for i in perm]
            num = f.num.compose(*images)
            den = f.den.compose(*images)
            if num * f.den != den * f.num:
                return False
        return True


def _normalize(field, num, den):
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return RatFunc(field, num, den)


def _reduced(field, num, den):
    if num.is_zero():
        return field.zero
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    return _normalize(field, num, den)


class RatFunc:
    """A reduced fraction of two polynomials; see ``RationalFunctionField``."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("rational functions from different fields")
            return other
        if isinstance(other, (int, fmpz, fmpq)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return _reduced(self.field, self.num + other.num, self.den)
        return _reduced(
            self.field, self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return self.field.zero
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_constant():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_constant():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        return _normalize(self.field, n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return _normalize(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.field, self.num**e, self.den**e)

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((str(self.num), str(self.den)))

    def __repr__(self) -> str:
        return self.field.pretty(self)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()
