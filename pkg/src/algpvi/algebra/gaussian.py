"""Exact Gaussian-rational scalars.

The ground field for everything in this package is Q(i): numbers a + b*i
with a, b stored as `fractions.Fraction`.  All arithmetic is exact, so a
value is purely real iff its imaginary part is *identically* zero; no
tolerance is ever involved.

Gaussian integers (plain int pairs) appear only inside the polynomial gcd
machinery, where rational coefficients are cleared to integers first; the
small helpers at the bottom implement Euclidean division for them.
"""

from __future__ import annotations

import math
from fractions import Fraction

_RAT = (int, Fraction)


class GaussRational:
    """An element a + b*i of Q(i), components always in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            if im:
                raise TypeError("cannot add an imaginary part to a GaussRational")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- predicates ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, _RAT):
            return GaussRational(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm a^2 + b^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    # -- conversion / comparison -----------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        # purely real values hash like their Fraction so mixed-key dicts work
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def sqrt(self):
        """Exact square root inside Q(i), or None when there is none."""
        if self.is_zero:
            return GaussRational(0)
        n = _fraction_sqrt(self.norm())
        if n is None:
            return None
        # (x + y*i)^2 = self  =>  x^2 = (re + n)/2, y^2 = (n - re)/2
        x2 = (self.re + n) / 2
        y2 = (n - self.re) / 2
        x = _fraction_sqrt(x2)
        y = _fraction_sqrt(y2)
        if x is None or y is None:
            return None
        if 2 * x * y != self.im:
            y = -y
            if 2 * x * y != self.im:
                return None
        return GaussRational(x, y)

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{_imag_str(self.im)}"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"


def _imag_str(b: Fraction) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}*i"


def _fraction_sqrt(q: Fraction):
    """Exact rational square root of a nonnegative Fraction, else None."""
    if q < 0:
        return None
    pn, pd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Fraction(pn, pd)
    return None


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


# ---------------------------------------------------------------------------
# Gaussian integers: (a, b) pairs meaning a + b*i.  Used by the cleared-
# integer polynomial gcd; units (+-1, +-i) are not canonicalized here.
# ---------------------------------------------------------------------------

ZInt = tuple  # (int, int)


def zi_mul(x: ZInt, y: ZInt) -> ZInt:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def zi_norm(x: ZInt) -> int:
    a, b = x
    return a * a + b * b


def zi_divmod(x: ZInt, y: ZInt):
    """Euclidean division in Z[i]: q with norm(x - q*y) < norm(y)."""
    n = zi_norm(y)
    if n == 0:
        raise ZeroDivisionError("division by zero Gaussian integer")
    a, b = x
    c, d = y
    # x * conj(y) / n, rounded to the nearest Gaussian integer
    pr = a * c + b * d
    pi = b * c - a * d
    qr = (2 * pr + n) // (2 * n)
    qi = (2 * pi + n) // (2 * n)
    q = (qr, qi)
    r = zi_sub(x, zi_mul(q, y))
    return q, r


def zi_sub(x: ZInt, y: ZInt) -> ZInt:
    return (x[0] - y[0], x[1] - y[1])


def zi_gcd(x: ZInt, y: ZInt) -> ZInt:
    if x[1] == 0 and y[1] == 0:
        # purely real pairs dominate in practice; math.gcd runs in C
        return (math.gcd(x[0], y[0]), 0)
    while y != (0, 0):
        _, r = zi_divmod(x, y)
        x, y = y, r
    return x


def zi_exact_div(x: ZInt, y: ZInt) -> ZInt:
    q, r = zi_divmod(x, y)
    if r != (0, 0):
        raise ArithmeticError(f"inexact Gaussian integer division {x}/{y}")
    return q
