"""The rational numbers as a base field for quadratic towers."""

from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpz


class RationalField:
    """Arbitrary-precision rationals backed by ``flint.fmpq``.

    Elements are plain ``fmpq`` values; they are always stored in lowest
    terms with a positive denominator.
    """

    name = "QQ"
    zero = fmpq(0)
    one = fmpq(1)

    def __call__(self, value) -> fmpq:
        if isinstance(value, fmpq):
            return value
        if isinstance(value, (int, fmpz)):
            return fmpq(value)
        if isinstance(value, Fraction):
            return fmpq(value.numerator, value.denominator)
        if isinstance(value, str):
            return parse_rational(value)
        raise TypeError(f"cannot convert {value!r} to a rational")

    def __repr__(self) -> str:
        return "RationalField()"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash(self.name)

    def sqrt(self, x: fmpq) -> fmpq | None:
        """Return the non-negative square root of ``x`` or ``None``."""
        if x < 0:
            return None
        p, q = fmpz(x.p), fmpz(x.q)
        if not (p.is_square() and q.is_square()):
            return None
        return fmpq(p.isqrt(), q.isqrt())

    def format(self, x: fmpq) -> str:
        return f"{x.p}/{x.q}"

    def parse(self, text: str) -> fmpq:
        return parse_rational(text)

    def pretty(self, x: fmpq) -> str:
        return str(x)


def parse_rational(text: str) -> fmpq:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        den_value = int(den)
        if den_value == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return fmpq(int(num), den_value)
    return fmpq(int(text))


QQ = RationalField()
