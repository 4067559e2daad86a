"""Reduced rational functions num/den over an exact coefficient domain.

Canonical form is enforced by the constructor: gcd(num, den) is a unit and
the denominator is monic.  Equality is therefore a plain syntactic check,
and `is_zero` means the numerator is the zero polynomial.

A FracField is the domain object that lets rational functions serve as the
coefficients of a higher polynomial layer (polynomials in x over Q(i)(s),
say), mirroring how GaussRationalField serves UniPoly.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussRational
from .polys import QQI, UniPoly, poly_gcd
from ..errors import FieldMismatchError, PoleError


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None, *,
                 _reduced=False, _coprime=False):
        if den is None:
            den = UniPoly.constant(num.var, num.domain.one, num.domain)
        if num.var != den.var or num.domain != den.domain:
            raise FieldMismatchError("numerator and denominator do not mix")
        if den.is_zero:
            raise ZeroDivisionError(f"zero denominator in {num.var}-rational")
        if not _reduced:
            if num.is_zero:
                den = UniPoly.constant(num.var, num.domain.one, num.domain)
            else:
                if not _coprime and den.degree > 0 and num.degree > 0:
                    g = poly_gcd(num, den)
                    if g.degree > 0:
                        num = num.exact_div(g)
                        den = den.exact_div(g)
                lead = den.lc()
                if lead != den.domain.one:
                    inv = den.domain.one / lead
                    num = num * inv
                    den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_value(cls, var, value, domain=QQI):
        return cls(UniPoly.constant(var, value, domain))

    @classmethod
    def gen(cls, var, domain=QQI):
        return cls(UniPoly.gen(var, domain))

    # -- structure ------------------------------------------------------------

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def domain(self):
        return self.num.domain

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var or other.domain != self.domain:
                raise FieldMismatchError(
                    f"rational functions in {self.var} and {other.var} do not mix"
                )
            return other
        if isinstance(other, UniPoly):
            if other.var != self.var or other.domain != self.domain:
                # a coefficient-layer value, not a same-layer polynomial
                try:
                    return RatFunc.from_value(self.var, other, self.domain)
                except FieldMismatchError:
                    return None
            return RatFunc(other)
        try:
            return RatFunc.from_value(self.var, self.domain.coerce(other), self.domain)
        except FieldMismatchError:
            return None

    # -- field operations -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError(f"inverse of zero {self.var}-rational")
        return RatFunc(self.den, self.num)

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

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.from_value(self.var, self.domain.one, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus / evaluation ----------------------------------------------------

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def eval(self, value):
        """Evaluate at a point or at an element of any higher layer."""
        den = self.den.eval(value)
        if _vanishes(den):
            raise PoleError(f"evaluation of {self.var}-rational at a pole")
        return self.num.eval(value) / den

    def eval_complex(self, value: complex) -> complex:
        num = _horner_complex(self.num, value)
        den = _horner_complex(self.den, value)
        if den == 0:
            raise PoleError(f"evaluation of {self.var}-rational at a pole")
        return num / den

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except FieldMismatchError:
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.__str__()!r})"

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _vanishes(v) -> bool:
    z = getattr(v, "is_zero", None)
    if z is None:
        return v == 0
    return z


def _horner_complex(p: UniPoly, value: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        if isinstance(c, GaussRational):
            acc = acc * value + c.to_complex()
        else:
            acc = acc * value + complex(c)
    return acc


class FracField:
    """Domain descriptor for RatFunc coefficients in a named variable."""

    __slots__ = ("var", "coeff_domain")

    def __init__(self, var: str, coeff_domain=QQI):
        self.var = var
        self.coeff_domain = coeff_domain

    @property
    def zero(self):
        return RatFunc.from_value(self.var, self.coeff_domain.zero, self.coeff_domain)

    @property
    def one(self):
        return RatFunc.from_value(self.var, self.coeff_domain.one, self.coeff_domain)

    def gen(self):
        return RatFunc.gen(self.var, self.coeff_domain)

    def coerce(self, value):
        if isinstance(value, RatFunc):
            if value.var == self.var and value.domain == self.coeff_domain:
                return value
            raise FieldMismatchError(
                f"{value!r} is not an element of {self!r}"
            )
        if isinstance(value, UniPoly):
            if value.var == self.var and value.domain == self.coeff_domain:
                return RatFunc(value)
            raise FieldMismatchError(f"{value!r} is not an element of {self!r}")
        return RatFunc.from_value(
            self.var, self.coeff_domain.coerce(value), self.coeff_domain
        )

    def __eq__(self, other):
        return (
            isinstance(other, FracField)
            and self.var == other.var
            and self.coeff_domain == other.coeff_domain
        )

    def __hash__(self):
        return hash(("FracField", self.var, self.coeff_domain))

    def __repr__(self):
        return f"{self.coeff_domain!r}({self.var})"
