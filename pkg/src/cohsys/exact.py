"""Exact integer polynomials in one variable ``t``.

Python integers are already arbitrary precision and
:class:`fractions.Fraction` keeps rationals in lowest terms with a positive
denominator, so the only type defined here is :class:`IntPoly`.

    >>> (IntPoly.one() + IntPoly.t()) * (IntPoly.one() - IntPoly.t())
    IntPoly(1 - t^2)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidExponent, NonExactDivision

Rational = Fraction

__all__ = [
    "IntPoly",
    "Rational",
    "as_rational",
    "cyclotomic_product",
    "poly_div_exact",
    "poly_mul",
]


def as_rational(x: Union[int, str, Fraction]) -> Fraction:
    """Coerce ``x`` to a Fraction. Floats are refused; they are never exact here."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


class IntPoly:
    """Dense integer polynomial, coefficients in ascending degree.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def zero(cls) -> IntPoly:
        return cls()

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def t(cls, power: int = 1) -> IntPoly:
        """The monomial ``t**power``."""
        if power < 0:
            raise InvalidExponent(f"negative power {power}")
        return cls([0] * power + [1])

    @classmethod
    def const(cls, a: int) -> IntPoly:
        return cls((a,))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    @staticmethod
    def _lift(x) -> IntPoly:
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return IntPoly.const(x)
        return NotImplemented

    def __add__(self, other) -> IntPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-v for v in self._c)

    def __sub__(self, other) -> IntPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> IntPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise InvalidExponent(f"negative exponent {e}")
        result, base = IntPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __floordiv__(self, other) -> IntPoly:
        # only exact division is ever meaningful for these polynomials
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_div_exact(self, other)

    def __call__(self, x):
        acc = 0
        for v in reversed(self._c):
            acc = acc * x + v
        return acc

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t**k``."""
        if k < 0:
            raise InvalidExponent(f"negative shift {k}")
        if not self._c:
            return self
        return IntPoly([0] * k + list(self._c))

    def is_palindromic(self, top: int | None = None) -> bool:
        """``b_i == b_{top-i}`` for all i; ``top`` defaults to the degree."""
        if top is None:
            top = self.degree
        if self.degree > top:
            return False
        return all(self[i] == self[top - i] for i in range(top + 1))

    def has_nonnegative_coeffs(self) -> bool:
        return all(v >= 0 for v in self._c)

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, v in enumerate(self._c):
            if v == 0:
                continue
            mag = abs(v)
            if i == 0:
                term = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                term = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly()
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x == 0:
            continue
        for j, y in enumerate(bc):
            out[i + j] += x * y
    return IntPoly(out)


def poly_div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return ``q`` with ``q * b == a``; raise :class:`NonExactDivision` otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return IntPoly()
    if a.degree < b.degree:
        raise NonExactDivision(f"deg {a.degree} < deg {b.degree}: ({a}) / ({b})")
    rem = list(a.coeffs)
    bc = b.coeffs
    lead = bc[-1]
    db = b.degree
    q = [0] * (a.degree - db + 1)
    for shift in range(len(q) - 1, -1, -1):
        top = rem[shift + db]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise NonExactDivision(f"non-integral quotient: ({a}) / ({b})")
        q[shift] = c
        for j, y in enumerate(bc):
            rem[shift + j] -= c * y
    if any(rem):
        raise NonExactDivision(f"nonzero remainder: ({a}) / ({b})")
    return IntPoly(q)


def cyclotomic_product(exponents: Sequence[int]) -> IntPoly:
    """``prod_i (1 - t**e_i)``; the empty product is 1."""
    out = IntPoly.one()
    for e in exponents:
        if e < 1:
            raise InvalidExponent(f"exponent must be >= 1, got {e}")
        out = out * (IntPoly.one() - IntPoly.t(e))
    return out
