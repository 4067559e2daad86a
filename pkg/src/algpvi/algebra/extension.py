"""Quadratic extension of a rational-function field by w = sqrt(D(u)).

A QuadExt fixes the base field Q(i)(u) (any variable name) and a squarefree
modulus polynomial D.  Its elements are ExtScalar values a + b*w with a, b
reduced rational functions; the rewrite w^2 -> D is applied eagerly, so the
(a, b) pair is a canonical representative and equality is syntactic.

Differentiation treats w implicitly: from w^2 = D we get
w' = D'(u) * w / (2 D(u)), which keeps derivatives inside the field.
"""

from __future__ import annotations

import cmath

from .gaussian import GaussRational
from .polys import QQI, UniPoly, poly_gcd
from .ratfunc import FracField, RatFunc
from ..errors import FieldMismatchError, PoleError


class QuadExt:
    """Field descriptor Q(i)(var)[w] / (w^2 - D(var))."""

    __slots__ = ("var", "modulus", "base", "wname", "_d_rf")

    def __init__(self, modulus: UniPoly, wname: str = "w"):
        if modulus.domain != QQI:
            raise FieldMismatchError("extension modulus must have Q(i) coefficients")
        if modulus.degree < 1:
            raise ValueError("extension modulus must be nonconstant")
        g = poly_gcd(modulus, modulus.derivative())
        if g.degree != 0:
            raise ValueError(f"extension modulus {modulus} is not squarefree")
        self.var = modulus.var
        self.modulus = modulus
        self.base = FracField(modulus.var, QQI)
        self._d_rf = RatFunc(modulus)
        self.wname = wname

    # QuadExt doubles as a coefficient domain for UniPoly-in-x layers.

    @property
    def zero(self):
        return ExtScalar(self.base.zero, self.base.zero, self)

    @property
    def one(self):
        return ExtScalar(self.base.one, self.base.zero, self)

    def coerce(self, value):
        if isinstance(value, ExtScalar):
            if value.field is not self and value.field != self:
                raise FieldMismatchError("element of a different quadratic extension")
            return value
        return ExtScalar(self.base.coerce(value), self.base.zero, self)

    def gen_u(self) -> "ExtScalar":
        return self.coerce(self.base.gen())

    def gen_w(self) -> "ExtScalar":
        return ExtScalar(self.base.zero, self.base.one, self)

    def coprime_witness(self, p: UniPoly, q: UniPoly) -> bool:
        """Certify gcd(p, q) = 1 for x-polynomials with coefficients in this
        field by specializing (u, w) into GF(P) and running one modular
        Euclid; False means inconclusive, never 'not coprime'."""
        from . import _zkernel as zk

        for u0 in (2, 3, 5, 7, 11, 13, 17, 19):
            d0 = _mod_eval_poly(self.modulus, u0)
            if d0 is None or d0 == 0:
                continue
            w0 = zk.gfp_sqrt(d0)
            if w0 is None:
                continue
            spec = []
            ok = True
            for poly in (p, q):
                cs = []
                for c in poly.coeffs:
                    av = _mod_eval_ratfunc(c.a, u0)
                    bv = _mod_eval_ratfunc(c.b, u0)
                    if av is None or bv is None:
                        ok = False
                        break
                    cs.append((av + bv * w0) % zk.WITNESS_P)
                if not ok:
                    break
                while cs and cs[-1] == 0:
                    cs.pop()
                if len(cs) != len(poly.coeffs):
                    ok = False  # leading coefficient vanished: unsound
                    break
                spec.append(cs)
            if ok:
                return zk.gfp_gcd_degree_public(spec[0], spec[1]) == 0
        return False

    def mul_hook(self, p: UniPoly, q: UniPoly) -> UniPoly:
        """Product of x-polynomials over this field through the cleared
        integer kernel: one canonical reduction per output coefficient
        instead of one per scalar operation."""
        from . import _extkernel as ek
        from .polys import _from_zp, _to_zp

        dmod, dl = _to_zp(self.modulus)
        if dl != 1:
            raise FieldMismatchError("kernel ops need an integral modulus")
        pa, pden, pl = _clear_ext_poly(p, with_scale=True)
        qa, qden, ql = _clear_ext_poly(q, with_scale=True)
        prod = ek.ep_mul(pa, qa, dmod)
        den = pden * qden * (pl * ql)
        coeffs = [
            ExtScalar(
                RatFunc(_from_zp(az, self.var), den),
                RatFunc(_from_zp(bz, self.var), den),
                self,
            )
            for az, bz in prod
        ]
        return UniPoly(p.var, coeffs, self)

    def div_hook(self, p: UniPoly, q: UniPoly) -> UniPoly:
        """Exact division of x-polynomials over this field via a cleared
        pseudo-division plus a single field-scalar correction."""
        from . import _extkernel as ek
        from .polys import _from_zp, _to_zp

        dmod, dl = _to_zp(self.modulus)
        if dl != 1:
            raise FieldMismatchError("kernel ops need an integral modulus")
        pa, pden, pl = _clear_ext_poly(p, with_scale=True)
        qa, qden, ql = _clear_ext_poly(q, with_scale=True)
        quo, k = ek.ep_pseudo_divmod_with_quotient(pa, qa, dmod)
        if quo is None:
            from ..errors import ExactDivisionError

            raise ExactDivisionError(f"inexact division over {self!r}")
        la, lb = qa[-1]
        lead = ExtScalar(
            RatFunc(_from_zp(la, self.var)), RatFunc(_from_zp(lb, self.var)), self
        )
        scale_num = self.coerce(RatFunc(qden * ql))
        scale_den = self.coerce(RatFunc(pden * pl)) * lead ** k
        scale = scale_num / scale_den
        coeffs = [
            ExtScalar(
                RatFunc(_from_zp(az, self.var)), RatFunc(_from_zp(bz, self.var)), self
            )
            * scale
            for az, bz in quo
        ]
        return UniPoly(p.var, coeffs, self)

    def gcd_hook(self, p: UniPoly, q: UniPoly) -> UniPoly:
        """Monic gcd of x-polynomials over this field via a cleared
        pseudo-remainder sequence in the order Z[i][u][w]."""
        from . import _extkernel as ek
        from . import _zkernel as zk
        from .polys import _from_zp, _to_zp

        dmod, dl = _to_zp(self.modulus)
        if dl != 1:
            raise FieldMismatchError(
                "extension gcd needs an integral modulus polynomial"
            )
        a = _clear_ext_poly(p)
        b = _clear_ext_poly(q)
        g = ek.ep_gcd(a, b, dmod)
        coeffs = [
            ExtScalar(RatFunc(_from_zp(az, self.var)), RatFunc(_from_zp(bz, self.var)), self)
            for az, bz in g
        ]
        return UniPoly(p.var, coeffs, self).monic()

    def __eq__(self, other):
        return (
            isinstance(other, QuadExt)
            and self.var == other.var
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash(("QuadExt", self.var, self.modulus))

    def __repr__(self):
        return f"QQ(i)({self.var})[{self.wname}], {self.wname}^2 = {self.modulus}"


class ExtScalar:
    """Element a + b*w of a QuadExt; b may be zero (a base-field element)."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a: RatFunc, b: RatFunc, field: QuadExt):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.a.is_zero and self.b.is_zero

    @property
    def in_base(self) -> bool:
        return self.b.is_zero

    def __bool__(self):
        return not self.is_zero

    def _lift(self, other):
        if isinstance(other, ExtScalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    "elements of different quadratic extensions do not mix"
                )
            return other
        try:
            return self.field.coerce(other)
        except FieldMismatchError:
            return None

    # -- field operations --------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.field._d_rf
        if self.b.is_zero:
            return ExtScalar(self.a * o.a, self.a * o.b, self.field)
        if o.b.is_zero:
            return ExtScalar(self.a * o.a, self.b * o.a, self.field)
        return ExtScalar(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ExtScalar(-self.a, -self.b, self.field)

    def conjugate(self) -> "ExtScalar":
        """The Galois conjugate a - b*w."""
        return ExtScalar(self.a, -self.b, self.field)

    def inverse(self) -> "ExtScalar":
        if self.is_zero:
            raise ZeroDivisionError("division by zero in quadratic extension")
        if self.b.is_zero:
            return ExtScalar(self.a.inverse(), self.b, self.field)
        n = self.a * self.a - self.b * self.b * self.field._d_rf
        if n.is_zero:
            # impossible for squarefree D (w is not in the base field)
            raise ZeroDivisionError("norm vanished for a nonzero element")
        inv = n.inverse()
        return ExtScalar(self.a * inv, -(self.b * inv), self.field)

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
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus ---------------------------------------------------------------

    def derivative(self) -> "ExtScalar":
        """d/du with the implicit rule w' = D' w / (2 D)."""
        da = self.a.derivative()
        if self.b.is_zero:
            return ExtScalar(da, self.b, self.field)
        d = self.field._d_rf
        db = self.b.derivative() + self.b * d.num.derivative() / (2 * d)
        return ExtScalar(da, db, self.field)

    # -- evaluation ---------------------------------------------------------------

    def eval_numeric(self, u0: complex, branch: int = +1) -> complex:
        """Floating evaluation with w := branch * sqrt(D(u0))."""
        if branch not in (+1, -1):
            raise ValueError("branch must be +1 or -1")
        d0 = _poly_complex(self.field.modulus, u0)
        if d0 == 0:
            raise PoleError(f"{u0} is a branch point of the extension")
        w0 = branch * cmath.sqrt(d0)
        return self.a.eval_complex(u0) + self.b.eval_complex(u0) * w0

    def eval_exact(self, u0, w0):
        """Exact evaluation at a rational point with a supplied square root.

        `w0` must satisfy w0^2 = D(u0) in Q(i); both values are returned as
        GaussRational, so zero tests stay exact.
        """
        u0 = GaussRational(u0)
        w0 = GaussRational(w0)
        d0 = self.field.modulus.eval(u0)
        if w0 * w0 != d0:
            raise ValueError(f"w0^2 = {w0 * w0} does not match D(u0) = {d0}")
        return self.a.eval(u0) + self.b.eval(u0) * w0

    # -- comparison ------------------------------------------------------------------

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except FieldMismatchError:
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"ExtScalar({self.__str__()!r})"

    def __str__(self):
        w = self.field.wname
        if self.b.is_zero:
            return str(self.a)
        bs = f"({self.b})*{w}"
        if self.a.is_zero:
            return bs
        return f"({self.a}) + {bs}"


def _poly_complex(p: UniPoly, value: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * value + c.to_complex()
    return acc


def _mod_eval_poly(p: UniPoly, u0: int):
    """Evaluate a Q(i)-coefficient polynomial at u0 in GF(P); None when a
    coefficient denominator vanishes mod P."""
    from . import _zkernel as zk

    P, R = zk.WITNESS_P, zk.WITNESS_R
    acc = 0
    for c in reversed(p.coeffs):
        dr, di = c.re.denominator % P, c.im.denominator % P
        if dr == 0 or di == 0:
            return None
        val = (
            c.re.numerator * pow(dr, P - 2, P) + c.im.numerator * pow(di, P - 2, P) * R
        ) % P
        acc = (acc * u0 + val) % P
    return acc


def _clear_ext_poly(p: UniPoly, with_scale: bool = False):
    """UniPoly over a QuadExt -> epoly over Z[i][u][w].

    With `with_scale` the common denominator polynomial and the integer
    lcm are returned too, so that p == epoly / (L * den) coefficient-wise;
    otherwise they are discarded (immaterial for gcds).
    """
    from .polys import poly_exact_div, poly_gcd

    den = None
    for c in p.coeffs:
        for comp in (c.a, c.b):
            if comp.den.degree > 0 or den is None:
                if den is None:
                    den = comp.den
                else:
                    g = poly_gcd(den, comp.den)
                    den = den * poly_exact_div(comp.den, g)
    cleared = []
    for c in p.coeffs:
        az = c.a.num * poly_exact_div(den, c.a.den)
        bz = c.b.num * poly_exact_div(den, c.b.den)
        cleared.append((az, bz))
    lcm = 1
    from math import gcd as _gcd

    for az, bz in cleared:
        for poly in (az, bz):
            for cc in poly.coeffs:
                for d in (cc.re.denominator, cc.im.denominator):
                    g = _gcd(lcm, d)
                    lcm = lcm // g * d
    out = []
    for az, bz in cleared:
        out.append((
            [((cc.re * lcm).numerator, (cc.im * lcm).numerator) for cc in az.coeffs],
            [((cc.re * lcm).numerator, (cc.im * lcm).numerator) for cc in bz.coeffs],
        ))
    if with_scale:
        return out, den, lcm
    return out


def _mod_eval_ratfunc(r, u0: int):
    num = _mod_eval_poly(r.num, u0)
    den = _mod_eval_poly(r.den, u0)
    if num is None or den is None or den == 0:
        return None
    from . import _zkernel as zk

    return (num * pow(den, zk.WITNESS_P - 2, zk.WITNESS_P)) % zk.WITNESS_P
