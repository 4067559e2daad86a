"""Dense univariate polynomials over an exact coefficient domain.

A UniPoly carries its variable name, a trimmed low-to-high coefficient
tuple, and a domain object that knows how to coerce raw values (ints,
Fractions, GaussRationals, lower-layer elements) into coefficients.  The
same class serves every layer of the tower: polynomials in a parameter
over Q(i), polynomials in x over a rational-function field, and
polynomials in x over a quadratic extension.

Leading coefficients are never zero (the zero polynomial has an empty
coefficient tuple and degree -1), so degree bookkeeping is exact.

The gcd has two code paths:

* coefficients in Q(i): clear denominators to Gaussian integers and run a
  primitive polynomial-remainder sequence, which keeps coefficient growth
  near-minimal on the large inputs the residual verifier produces;
* any other coefficient field: Euclid's algorithm with each remainder made
  monic, which is plenty for the small x-degrees that occur there.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .gaussian import GaussRational
from . import _zkernel as zk
from ..errors import ExactDivisionError, FieldMismatchError


class GaussRationalField:
    """Domain object for Q(i) coefficients."""

    name = "QQ(i)"

    @property
    def zero(self):
        return GaussRational(0)

    @property
    def one(self):
        return GaussRational(1)

    def coerce(self, value):
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussRational(value)
        raise FieldMismatchError(f"cannot coerce {value!r} into {self.name}")

    def __eq__(self, other):
        return isinstance(other, GaussRationalField)

    def __hash__(self):
        return hash("QQ(i)")

    def __repr__(self):
        return self.name


QQI = GaussRationalField()


class UniPoly:
    __slots__ = ("var", "coeffs", "domain")

    def __init__(self, var: str, coeffs, domain=QQI):
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "domain", domain)
        cs = [domain.coerce(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var, domain=QQI):
        return cls(var, (), domain)

    @classmethod
    def constant(cls, var, value, domain=QQI):
        return cls(var, (value,), domain)

    @classmethod
    def gen(cls, var, domain=QQI):
        return cls(var, (domain.zero, domain.one), domain)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            return self.domain.zero
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero

    def _check(self, other: "UniPoly"):
        if self.var != other.var or self.domain != other.domain:
            raise FieldMismatchError(
                f"polynomials in {self.var} over {self.domain} and "
                f"{other.var} over {other.domain} do not mix"
            )

    def _wrap(self, coeffs):
        return UniPoly(self.var, coeffs, self.domain)

    # -- ring operations ----------------------------------------------------

    def _as_poly(self, other):
        if isinstance(other, UniPoly):
            return other
        try:
            return UniPoly.constant(self.var, other, self.domain)
        except FieldMismatchError:
            return None

    def __add__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        self._check(o)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return self._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            try:
                scalar = self.domain.coerce(other)
            except FieldMismatchError:
                return NotImplemented
            return self._wrap([c * scalar for c in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return self._wrap(())
        if self.domain == QQI and len(self.coeffs) * len(other.coeffs) > 256:
            return _mul_via_kernel(self, other)
        if len(self.coeffs) * len(other.coeffs) > 16:
            hook = getattr(self.domain, "mul_hook", None)
            if hook is not None:
                return hook(self, other)
        zero = self.domain.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take nonnegative integers")
        result = UniPoly.constant(self.var, self.domain.one, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return self._wrap(()), self
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        zero = self.domain.zero
        quo = [zero] * (dq + 1)
        inv_lc = self.domain.one / other.lc()
        for k in range(dq, -1, -1):
            c = rem[other.degree + k] * inv_lc
            if not _is_zero(c):
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[j + k] = rem[j + k] - c * b
        return self._wrap(quo), self._wrap(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        return poly_exact_div(self, other)

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self) -> "UniPoly":
        return self._wrap([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, value):
        """Horner evaluation; `value` may live in any layer above the
        coefficients (mixed products resolve through the coercion ladder)."""
        if not self.coeffs:
            return self.domain.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.lc()
        if lead == self.domain.one:
            return self
        inv = self.domain.one / lead
        return self._wrap([c * inv for c in self.coeffs])

    def map_coefficients(self, fn, new_domain) -> "UniPoly":
        return UniPoly(self.var, [fn(c) for c in self.coeffs], new_domain)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return (
                self.var == other.var
                and self.domain == other.domain
                and self.coeffs == other.coeffs
            )
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.var!r}, {self.__str__()!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            cs = _coeff_str(c)
            if k == 0:
                term = cs
            else:
                xk = self.var if k == 1 else f"{self.var}^{k}"
                term = xk if cs == "1" else f"{cs}*{xk}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-") and not term.startswith("(-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


def _is_zero(c) -> bool:
    z = getattr(c, "is_zero", None)
    if z is None:
        return c == 0
    return z


def _coeff_str(c) -> str:
    s = str(c)
    if any(op in s for op in "+-*/") and not (s.startswith("-") and _atomic(s[1:])):
        return f"({s})"
    return s


def _atomic(s: str) -> bool:
    return not any(op in s for op in "+-*/")


# ---------------------------------------------------------------------------
# gcd and squarefree decomposition
# ---------------------------------------------------------------------------


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(p, 0) = monic(p).

    Q(i) coefficients are cleared to Gaussian integers, rational-function
    coefficients to a bivariate integer ring; both then run a primitive
    polynomial-remainder sequence in the kernel (plain Euclid over a
    fraction field is quadratically explosive in coefficient size).
    """
    if p.var != q.var or p.domain != q.domain:
        raise FieldMismatchError("gcd arguments live in different rings")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return UniPoly.constant(p.var, p.domain.one, p.domain)
    if p.domain == QQI:
        a, _ = _to_zp(p)
        b, _ = _to_zp(q)
        return _from_zp(zk.zp_gcd(a, b), p.var).monic()
    if _is_fracfield_over_qqi(p.domain):
        a, _, _ = _to_bip(p)
        b, _, _ = _to_bip(q)
        return _from_bip(zk.bip_gcd(a, b), p.var, p.domain).monic()
    witness = getattr(p.domain, "coprime_witness", None)
    if witness is not None and witness(p, q):
        return UniPoly.constant(p.var, p.domain.one, p.domain)
    hook = getattr(p.domain, "gcd_hook", None)
    if hook is not None:
        return hook(p, q)
    return _gcd_monic_euclid(p, q)


def _gcd_monic_euclid(p: UniPoly, q: UniPoly) -> UniPoly:
    a, b = p.monic(), q.monic()
    while not b.is_zero:
        q2, r = _divmod_generic(a, b)
        a, b = b, (r.monic() if not r.is_zero else r)
    return a


def poly_exact_div(p: UniPoly, q: UniPoly) -> UniPoly:
    """p / q with a zero-remainder guarantee, dispatched to the integer
    kernels for Q(i) and parametric-rational coefficient domains."""
    if p.var != q.var or p.domain != q.domain:
        raise FieldMismatchError("division arguments live in different rings")
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero:
        return p
    if q.degree == 0:
        inv = p.domain.one / q.lc()
        return p * inv
    if p.domain == QQI:
        a, la = _to_zp(p)
        b, lb = _to_zp(q)
        try:
            quo, dz = zk.zp_exact_div(a, b)
        except ArithmeticError as exc:
            raise ExactDivisionError(f"{p} is not divisible by {q}") from exc
        scale = GaussRational(Fraction(lb, la)) / GaussRational(
            Fraction(dz[0]), Fraction(dz[1])
        )
        return _from_zp(quo, p.var) * scale
    if _is_fracfield_over_qqi(p.domain):
        return _exact_div_bip(p, q)
    hook = getattr(p.domain, "div_hook", None)
    if hook is not None:
        return hook(p, q)
    q2, r = _divmod_generic(p, q)
    if not r.is_zero:
        raise ExactDivisionError(f"{p} is not divisible by {q} in {p.var}")
    return q2


def _divmod_generic(p: UniPoly, q: UniPoly):
    return p.__divmod__(q)


def _exact_div_bip(p: UniPoly, q: UniPoly) -> UniPoly:
    pa, pd, pl = _to_bip(p)
    qa, qd, ql = _to_bip(q)
    qprim, cont = zk.bip_extract_content(qa)
    quo, rem, k = zk.bip_pseudo_divmod(pa, qprim)
    if not zk.bip_is_zero(rem):
        raise ExactDivisionError(f"{p} is not divisible by {q} in {p.var}")
    # p/q = quo / (lc(qprim)^k * cont) * (ql*qd)/(pl*pd)
    den_zp = cont
    lead = qprim[-1]
    for _ in range(k):
        den_zp = zk.zp_mul(den_zp, lead)
    field = p.domain
    den_poly = _from_zp(den_zp, field.var)
    from .ratfunc import RatFunc  # local import to avoid a cycle

    scale = RatFunc(qd * ql, den_poly * (pd * pl))
    return _from_bip(quo, p.var, field) * scale


def _is_fracfield_over_qqi(domain) -> bool:
    return getattr(domain, "coeff_domain", None) == QQI


# -- conversions between object polynomials and kernel representations ------


def _to_zp(p: UniPoly):
    """UniPoly over Q(i) -> (zpoly, L) with p == zpoly / L."""
    lcm = 1
    for c in p.coeffs:
        for d in (c.re.denominator, c.im.denominator):
            g = _int_gcd(lcm, d)
            lcm = lcm // g * d
    out = []
    for c in p.coeffs:
        out.append(((c.re * lcm).numerator, (c.im * lcm).numerator))
    return out, lcm


def _from_zp(a, var: str) -> UniPoly:
    return UniPoly(
        var, [GaussRational(Fraction(re), Fraction(im)) for re, im in a], QQI
    )


def _to_bip(p: UniPoly):
    """UniPoly in x over Q(i)(t) -> (bipoly, D, L) with p == bipoly / (L*D),
    D the common polynomial denominator of the coefficients."""
    den = None
    for c in p.coeffs:
        if c.den.degree > 0 or den is None:
            if den is None:
                den = c.den
            else:
                g = poly_gcd(den, c.den)
                den = den * poly_exact_div(c.den, g)
    nums = [c.num * poly_exact_div(den, c.den) for c in p.coeffs]
    lcm = 1
    for n in nums:
        for c in n.coeffs:
            for d in (c.re.denominator, c.im.denominator):
                g = _int_gcd(lcm, d)
                lcm = lcm // g * d
    bip = []
    for n in nums:
        bip.append(
            [((c.re * lcm).numerator, (c.im * lcm).numerator) for c in n.coeffs]
        )
    return zk.bip_trim(bip), den, lcm


def _from_bip(a, xvar: str, field) -> UniPoly:
    from .ratfunc import RatFunc  # local import to avoid a cycle

    coeffs = [RatFunc(_from_zp(c, field.var)) for c in a]
    return UniPoly(xvar, coeffs, field)


def _mul_via_kernel(p: UniPoly, q: UniPoly) -> UniPoly:
    a, la = _to_zp(p)
    b, lb = _to_zp(q)
    prod = zk.zp_mul(a, b)
    l = la * lb
    return UniPoly(
        p.var,
        [GaussRational(Fraction(re, l), Fraction(im, l)) for re, im in prod],
        QQI,
    )





def squarefree_decomposition(p: UniPoly):
    """Yun's algorithm: monic pairwise-coprime squarefree factors with their
    multiplicities, so that lc(p) * prod f_i^m_i == p exactly."""
    if p.is_zero:
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = p.monic()
    if f.degree <= 0:
        return []
    g = poly_gcd(f, f.derivative())
    c = f.exact_div(g)
    d = f.derivative().exact_div(g) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out
