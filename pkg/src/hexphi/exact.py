"""Exact arithmetic in the real field obtained from the rationals by adjoining
sqrt(3) and sqrt(5).

Every element is stored as ``a + b*sqrt(3) + c*sqrt(5) + d*sqrt(15)`` with
rational coefficients.  Since ``{1, sqrt3, sqrt5, sqrt15}`` is a basis of the
field over the rationals, a value has exactly one coefficient quadruple, so
equality, hashing and zero tests are structural and tolerance-free.

Two questions cannot be answered coefficient-wise: the sign of an element and
its decimal rendering.  Both are decided by refining rational interval
enclosures of sqrt(3) and sqrt(5) (interval halving, seeded from three-digit
brackets) until the answer is unambiguous.  A nonzero element is bounded away
from zero, so both loops terminate.
"""

from __future__ import annotations

import math
from fractions import Fraction

HALF_EVEN = "half-even"
TRUNCATE = "truncate"

_ROUNDING_MODES = (HALF_EVEN, TRUNCATE)


class NotRepresentable(ArithmeticError):
    """A requested square root does not lie in the field."""


class NegativeInput(ValueError):
    """A square root was requested for a negative radicand."""


def _fraction(value: int | Fraction) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not exact; pass Fraction or int")
    return Fraction(value)


class QuadExt:
    """Field element ``a + b*sqrt(3) + c*sqrt(5) + d*sqrt(15)``.

    Coefficients are ``Fraction`` values and the representation is unique, so
    ``==`` is mathematical equality.  Arithmetic closes over the field;
    division uses the conjugate product, staying exact.
    """

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(
        self,
        a: int | Fraction = 0,
        b: int | Fraction = 0,
        c: int | Fraction = 0,
        d: int | Fraction = 0,
    ) -> None:
        self._a = _fraction(a)
        self._b = _fraction(b)
        self._c = _fraction(c)
        self._d = _fraction(d)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def c(self) -> Fraction:
        return self._c

    @property
    def d(self) -> Fraction:
        return self._d

    @property
    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    @property
    def is_rational(self) -> bool:
        return not (self._b or self._c or self._d)

    def __repr__(self) -> str:
        return f"QuadExt({self._a!r}, {self._b!r}, {self._c!r}, {self._d!r})"

    def __str__(self) -> str:
        terms = []
        for coeff, suffix in (
            (self._a, ""),
            (self._b, "*sqrt3"),
            (self._c, "*sqrt5"),
            (self._d, "*sqrt15"),
        ):
            if coeff:
                terms.append(f"{coeff}{suffix}")
        return " + ".join(terms) if terms else "0"

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self._a)
        return hash((self._a, self._b, self._c, self._d))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            return (
                self._a == other._a
                and self._b == other._b
                and self._c == other._c
                and self._d == other._d
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self._a == other
        return NotImplemented

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._a, -self._b, -self._c, -self._d)

    def __pos__(self) -> QuadExt:
        return self

    def __abs__(self) -> QuadExt:
        return -self if sign(self) < 0 else self

    def __add__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = _as_quadext(other)
        if o is None:
            return NotImplemented
        return QuadExt(self._a + o._a, self._b + o._b, self._c + o._c, self._d + o._d)

    __radd__ = __add__

    def __sub__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = _as_quadext(other)
        if o is None:
            return NotImplemented
        return QuadExt(self._a - o._a, self._b - o._b, self._c - o._c, self._d - o._d)

    def __rsub__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = _as_quadext(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = _as_quadext(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = o._a, o._b, o._c, o._d
        return QuadExt(
            a1 * a2 + 3 * b1 * b2 + 5 * c1 * c2 + 15 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 3 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = _as_quadext(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = _as_quadext(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> QuadExt:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __lt__(self, other: QuadExt | int | Fraction) -> bool:
        return sign(self - other) < 0

    def __le__(self, other: QuadExt | int | Fraction) -> bool:
        return sign(self - other) <= 0

    def __gt__(self, other: QuadExt | int | Fraction) -> bool:
        return sign(self - other) > 0

    def __ge__(self, other: QuadExt | int | Fraction) -> bool:
        return sign(self - other) >= 0

    def conj_sqrt3(self) -> QuadExt:
        """Image under the automorphism sending sqrt(3) to -sqrt(3)."""
        return QuadExt(self._a, -self._b, self._c, -self._d)

    def conj_sqrt5(self) -> QuadExt:
        """Image under the automorphism sending sqrt(5) to -sqrt(5)."""
        return QuadExt(self._a, self._b, -self._c, -self._d)

    def inverse(self) -> QuadExt:
        """Multiplicative inverse via the product of the three conjugates.

        ``x * conj3(x) * conj5(x) * conj3(conj5(x))`` is rational (the field
        norm), so the inverse is that conjugate product over the norm.
        """
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        partial = self.conj_sqrt3() * self.conj_sqrt5() * self.conj_sqrt3().conj_sqrt5()
        norm = self * partial
        # the norm is rational by construction
        scale = 1 / norm._a
        return QuadExt(
            partial._a * scale, partial._b * scale, partial._c * scale, partial._d * scale
        )

    def to_json(self) -> dict[str, str]:
        """Coefficients as canonical ``p/q`` strings plus a 12-digit decimal."""
        return {
            "a": format_fraction(self._a),
            "b": format_fraction(self._b),
            "c": format_fraction(self._c),
            "d": format_fraction(self._d),
            "decimal": to_decimal(self, 12),
        }


def _as_quadext(value: object) -> QuadExt | None:
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadExt(value)
    return None


def as_quadext(value: QuadExt | int | Fraction) -> QuadExt:
    """Coerce an int or Fraction to a field element; floats are rejected."""
    x = _as_quadext(value)
    if x is None:
        raise TypeError(f"cannot interpret {type(value).__name__} as a field element")
    return x


ZERO = QuadExt()
ONE = QuadExt(1)
SQRT3 = QuadExt(0, 1)
SQRT5 = QuadExt(0, 0, 1)
SQRT15 = QuadExt(0, 0, 0, 1)

#: The golden ratio (1 + sqrt5)/2, satisfying PHI**2 == PHI + 1 exactly.
PHI = QuadExt(Fraction(1, 2), 0, Fraction(1, 2))


class _RootEnclosure:
    """Monotonically refined rational bracket ``lo < sqrt(n) < hi``.

    Refinement halves the bracket; because ``sqrt(n)`` is irrational the
    midpoint never lands on it and the bracket stays strict.  The tightest
    bracket seen so far is kept, so repeated callers share the work.
    """

    __slots__ = ("_radicand", "_bounds")

    def __init__(self, radicand: int, lo: Fraction, hi: Fraction) -> None:
        self._radicand = radicand
        self._bounds = (lo, hi)

    def refined(self, width: Fraction) -> tuple[Fraction, Fraction]:
        lo, hi = self._bounds
        if hi - lo <= width:
            return lo, hi
        while hi - lo > width:
            mid = (lo + hi) / 2
            if mid * mid < self._radicand:
                lo = mid
            else:
                hi = mid
        self._bounds = (lo, hi)
        return lo, hi


_SQRT3_BOUNDS = _RootEnclosure(3, Fraction(1732, 1000), Fraction(1733, 1000))
_SQRT5_BOUNDS = _RootEnclosure(5, Fraction(2236, 1000), Fraction(2237, 1000))


def _enclosure(x: QuadExt, width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational interval containing x, with the roots refined to `width`."""
    lo3, hi3 = _SQRT3_BOUNDS.refined(width)
    lo5, hi5 = _SQRT5_BOUNDS.refined(width)
    lo = hi = x.a
    for coeff, clo, chi in (
        (x.b, lo3, hi3),
        (x.c, lo5, hi5),
        (x.d, lo3 * lo5, hi3 * hi5),
    ):
        if coeff >= 0:
            lo += coeff * clo
            hi += coeff * chi
        else:
            lo += coeff * chi
            hi += coeff * clo
    return lo, hi


def sign(value: QuadExt | int | Fraction) -> int:
    """Exact sign (-1, 0, +1).

    Zero is decided structurally from the coefficients; a nonzero irrational
    value is separated from zero by refining the root enclosures.
    """
    x = as_quadext(value)
    if x.is_zero:
        return 0
    if x.is_rational:
        return -1 if x.a < 0 else 1
    width = Fraction(1, 1_000_000)
    while True:
        lo, hi = _enclosure(x, width)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        width /= 1 << 16


def _rational_sqrt(value: Fraction) -> Fraction | None:
    num = math.isqrt(value.numerator)
    if num * num != value.numerator:
        return None
    den = math.isqrt(value.denominator)
    if den * den != value.denominator:
        return None
    return Fraction(num, den)


def sqrt_exact(radicand: int | Fraction) -> QuadExt:
    """Exact square root of a nonnegative rational, if it lies in the field.

    The representable radicands are exactly ``s**2``, ``3*s**2``, ``5*s**2``
    and ``15*s**2`` for rational ``s``; anything else raises
    ``NotRepresentable``.  Negative input raises ``NegativeInput``.
    """
    r = _fraction(radicand)
    if r < 0:
        raise NegativeInput("square root of a negative rational")
    if r == 0:
        return ZERO
    for divisor, unit in ((1, ONE), (3, SQRT3), (5, SQRT5), (15, SQRT15)):
        root = _rational_sqrt(r / divisor)
        if root is not None:
            return unit * root
    raise NotRepresentable(f"sqrt({r}) lies outside the field")


def _format_scaled(value: Fraction, frac_digits: int, rounding: str) -> str:
    scaled = value * 10**frac_digits
    if rounding == HALF_EVEN:
        units = round(scaled)
    elif rounding == TRUNCATE:
        units = math.trunc(scaled)
    else:
        raise ValueError(f"unknown rounding mode {rounding!r}; use one of {_ROUNDING_MODES}")
    prefix = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), 10**frac_digits)
    return f"{prefix}{whole}.{frac:0{frac_digits}d}"


def to_decimal(
    value: QuadExt | int | Fraction, frac_digits: int, rounding: str = HALF_EVEN
) -> str:
    """Decimal string with exactly `frac_digits` fractional digits.

    ``half-even`` rounds ties to the even last digit; ``truncate`` drops the
    tail toward zero.  Irrational values are enclosed ever more tightly until
    both interval ends render identically, which settles the rounding without
    ever leaving rational arithmetic.
    """
    if frac_digits < 1:
        raise ValueError("frac_digits must be at least 1")
    if rounding not in _ROUNDING_MODES:
        raise ValueError(f"unknown rounding mode {rounding!r}; use one of {_ROUNDING_MODES}")
    x = as_quadext(value)
    if x.is_rational:
        return _format_scaled(x.a, frac_digits, rounding)
    width = Fraction(1, 10 ** (frac_digits + 2))
    while True:
        lo, hi = _enclosure(x, width)
        rendered = _format_scaled(lo, frac_digits, rounding)
        if rendered == _format_scaled(hi, frac_digits, rounding):
            return rendered
        width /= 1 << 16


def format_fraction(value: Fraction) -> str:
    """Canonical ``p/q`` rendering (q positive, lowest terms)."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a finite decimal; both ``.`` and ``,`` separate decimals."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            return Fraction(int(num), int(den))
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
    try:
        return Fraction(s.replace(",", ".", 1))
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
