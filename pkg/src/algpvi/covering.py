"""Rational coverings z = R(x): fiber divisors and ramification analysis.

Everything works on multiplicity profiles obtained from squarefree
decomposition; roots are never isolated, so the analysis is exact over any
parametric coefficient field.  The point x = infinity is handled purely by
degree bookkeeping: a fiber polynomial of degree lower than the covering
degree puts x = infinity in that fiber with the deficit as multiplicity.

Ramification patterns come in two kinds: 'R3' for Belyi maps (three branch
points) and 'R4' for almost Belyi maps, whose fourth fiber is fixed to the
shape 2+1+...+1 and is therefore never written out.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.polys import UniPoly, squarefree_decomposition, poly_gcd
from .algebra.ratfunc import FracField, RatFunc
from .algebra.extension import QuadExt
from .errors import ExactDivisionError, FieldMismatchError

FIBERS = ("0", "1", "inf")


# ---------------------------------------------------------------------------
# ramification patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RamificationPattern:
    """Partitions of the degree over the fibers z = 0, 1, infinity."""

    kind: str  # 'R3' | 'R4'
    parts: tuple  # three tuples of positive ints, display order
    hats: frozenset = field(default_factory=frozenset)  # {(fiber_idx, part_idx)}

    def __post_init__(self):
        if self.kind not in ("R3", "R4"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if len(self.parts) != 3:
            raise ValueError("a pattern needs exactly three partitions")
        sums = {sum(p) for p in self.parts}
        if len(sums) != 1:
            raise ValueError(f"partitions of different integers: {self.parts}")
        for p in self.parts:
            if not p or any(int(m) != m or m < 1 for m in p):
                raise ValueError(f"bad partition {p}")
        for f_idx, p_idx in self.hats:
            if not (0 <= f_idx < 3 and 0 <= p_idx < len(self.parts[f_idx])):
                raise ValueError(f"hat ({f_idx}, {p_idx}) outside the pattern")

    @property
    def degree(self) -> int:
        return sum(self.parts[0])

    @property
    def total_parts(self) -> int:
        return sum(len(p) for p in self.parts)

    def profile(self, fiber_idx: int) -> Counter:
        return Counter(self.parts[fiber_idx])

    def equivalent(self, other: "RamificationPattern") -> bool:
        """Equality up to relabeling the three fibers."""
        if self.kind != other.kind or self.degree != other.degree:
            return False
        mine = sorted(tuple(sorted(p, reverse=True)) for p in self.parts)
        theirs = sorted(tuple(sorted(p, reverse=True)) for p in other.parts)
        return mine == theirs

    def __str__(self):
        chunks = []
        for f_idx, p in enumerate(self.parts):
            chunks.append(
                "+".join(
                    f"{m}^" if (f_idx, k) in self.hats else str(m)
                    for k, m in enumerate(p)
                )
            )
        return f"{self.kind[0]}{self.kind[1]}({' | '.join(chunks)})"


def parse_pattern(text: str) -> RamificationPattern:
    """Parse a pattern literal like R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1);
    a trailing ^ marks a part with a hat."""
    text = text.strip()
    if not (text.startswith("R3(") or text.startswith("R4(")) or not text.endswith(")"):
        raise ValueError(f"bad pattern literal {text!r}")
    kind = text[:2]
    body = text[3:-1]
    groups = body.split("|")
    if len(groups) != 3:
        raise ValueError(f"pattern needs three fibers, got {len(groups)}")
    parts = []
    hats = set()
    for f_idx, group in enumerate(groups):
        fiber = []
        for k, raw in enumerate(group.split("+")):
            raw = raw.strip()
            if raw.endswith("^"):
                hats.add((f_idx, k))
                raw = raw[:-1].strip()
            if not raw.isdigit():
                raise ValueError(f"bad part {raw!r} in pattern {text!r}")
            fiber.append(int(raw))
        parts.append(tuple(fiber))
    return RamificationPattern(kind, tuple(parts), frozenset(hats))


def hurwitz_parts_check(p: RamificationPattern) -> bool:
    """Riemann-Hurwitz parts count: n+3 for almost Belyi, n+2 for Belyi."""
    expected = p.degree + (3 if p.kind == "R4" else 2)
    return p.total_parts == expected


# ---------------------------------------------------------------------------
# coverings and fiber divisors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Covering:
    """A rational map z = R(x) with reduced numerator/denominator."""

    map: RatFunc

    @property
    def degree(self) -> int:
        return max(self.map.num.degree, self.map.den.degree)

    def fiber_poly(self, v: str) -> UniPoly:
        if v == "0":
            return self.map.num
        if v == "inf":
            return self.map.den
        if v == "1":
            return self.map.num - self.map.den
        raise ValueError(f"fiber must be one of {FIBERS}, got {v!r}")

    def scalar_field(self):
        return self.map.domain


@dataclass(frozen=True)
class FiberDivisor:
    value: str
    profile: tuple  # sorted ((multiplicity, distinct root count), ...)
    infinity_mult: int  # multiplicity at x = infinity, 0 if absent

    def multiplicity_counter(self) -> Counter:
        c = Counter()
        for mult, count in self.profile:
            c[mult] += count
        if self.infinity_mult:
            c[self.infinity_mult] += 1
        return c

    @property
    def total(self) -> int:
        return sum(m * c for m, c in self.profile) + self.infinity_mult

    def __str__(self):
        bits = [f"mult {m}: {c} root(s)" for m, c in self.profile]
        if self.infinity_mult:
            bits.append(f"x=inf with mult {self.infinity_mult}")
        return f"fiber z={self.value}: " + ", ".join(bits)


def fiber_divisor(c: Covering, v: str) -> FiberDivisor:
    poly = c.fiber_poly(v)
    if poly.is_zero:
        raise ValueError(f"covering is identically {v}")
    profile = tuple(
        sorted((mult, f.degree) for f, mult in squarefree_decomposition(poly))
    )
    return FiberDivisor(v, profile, c.degree - poly.degree)


# ---------------------------------------------------------------------------
# pattern verification and the extra ramification point
# ---------------------------------------------------------------------------


@dataclass
class FiberCheck:
    value: str
    expected: Counter
    observed: Counter

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class PatternReport:
    pattern: RamificationPattern
    degree_ok: bool
    parts_ok: bool
    fibers: list
    coprime_ok: bool
    extra_ok: bool
    extra_detail: str

    @property
    def passed(self) -> bool:
        return (
            self.degree_ok
            and self.parts_ok
            and self.coprime_ok
            and self.extra_ok
            and all(f.ok for f in self.fibers)
        )

    def lines(self):
        out = [f"pattern {self.pattern}: {'PASS' if self.passed else 'FAIL'}"]
        if not self.degree_ok:
            out.append("  degree mismatch between covering and pattern")
        if not self.parts_ok:
            expected = self.pattern.degree + (3 if self.pattern.kind == "R4" else 2)
            out.append(
                f"  parts count {self.pattern.total_parts} != {expected} "
                f"(Riemann-Hurwitz)"
            )
        for f in self.fibers:
            mark = "ok" if f.ok else "MISMATCH"
            out.append(
                f"  fiber z={f.value}: expected {_fmt_counter(f.expected)}, "
                f"observed {_fmt_counter(f.observed)} [{mark}]"
            )
        out.append(f"  fibers pairwise coprime: {'yes' if self.coprime_ok else 'NO'}")
        out.append(f"  extra ramification: {self.extra_detail}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _fmt_counter(c: Counter) -> str:
    return "+".join(str(m) for m in sorted(c.elements(), reverse=True)) or "-"


def verify_pattern(c: Covering, p: RamificationPattern) -> PatternReport:
    """Check fiber divisors, coprimality, Hurwitz count, and the extra
    simple ramification point; failures are reported, never raised."""
    fibers = []
    for f_idx, v in enumerate(FIBERS):
        observed = fiber_divisor(c, v).multiplicity_counter()
        fibers.append(FiberCheck(v, p.profile(f_idx), observed))

    polys = [c.fiber_poly(v) for v in FIBERS]
    coprime_ok = True
    for a in range(3):
        for b in range(a + 1, 3):
            if polys[a].degree > 0 and polys[b].degree > 0:
                if poly_gcd(polys[a], polys[b]).degree > 0:
                    coprime_ok = False

    if p.kind == "R4":
        try:
            point = extra_ramification_point(c)
            extra_ok, extra_detail = True, f"one simple extra point at x = {point}"
        except (ValueError, ExactDivisionError) as exc:
            extra_ok, extra_detail = False, str(exc)
    else:
        try:
            extra_ramification_point(c)
            extra_ok, extra_detail = False, "unexpected extra point for a Belyi map"
        except ValueError as exc:
            fully = "no extra ramification" in str(exc)
            extra_ok = fully
            extra_detail = "derivative fully accounted (Belyi)" if fully else str(exc)

    return PatternReport(
        pattern=p,
        degree_ok=(c.degree == p.degree),
        parts_ok=hurwitz_parts_check(p),
        fibers=fibers,
        coprime_ok=coprime_ok,
        extra_ok=extra_ok,
        extra_detail=extra_detail,
    )


def extra_ramification_point(c: Covering):
    """Root of what remains of d/dx R after dividing out the ramification
    forced by the three special fibers.

    Fiber roots of multiplicity m force a factor of multiplicity m-1 in the
    derivative numerator; an almost Belyi map leaves exactly one linear
    factor, whose root is returned as a scalar of the coefficient field.
    Any inexact forced division is a hard error: it falsifies the pattern
    hypothesis rather than merely failing a comparison.
    """
    num, den = c.map.num, c.map.den
    deriv_num = num.derivative() * den - num * den.derivative()
    if deriv_num.is_zero:
        raise ValueError("constant covering has no ramification")
    rest = deriv_num
    for v in FIBERS:
        poly = c.fiber_poly(v)
        if poly.degree <= 0:
            continue
        # gcd(p, p') is exactly prod f_i^(m_i - 1) in characteristic zero
        forced = poly_gcd(poly, poly.derivative())
        if forced.degree > 0:
            rest = rest.exact_div(forced)
    if rest.degree == 0:
        raise ValueError(
            "not almost Belyi: no extra ramification point "
            "(derivative fully accounted by the three fibers)"
        )
    if rest.degree != 1:
        raise ValueError(
            f"not almost Belyi: leftover ramification factor has degree "
            f"{rest.degree}: {rest}"
        )
    return -rest.coeff(0) / rest.coeff(1)


# ---------------------------------------------------------------------------
# degree formula (four-point pullback coverings)
# ---------------------------------------------------------------------------


def degree_formula(k, a, fiber_of) -> Fraction:
    """Degree of the pullback covering forced by the ramification data.

    k        -- (k0, k1, kInf), the uniform orders over z = 0, 1, infinity
    a        -- (a0, a1, at, aInf), ramification orders at x = 0, 1, t, inf
    fiber_of -- which of '0' / '1' / 'inf' each of the four points sits above

    A non-positive or non-integer value means no such covering exists;
    interpreting that is the caller's business.
    """
    k0, k1, kinf = (Fraction(v) for v in k)
    kcurv = Fraction(1, 1) / k0 + 1 / k1 + 1 / kinf - 1
    if kcurv == 0:
        raise ValueError("degenerate case 1/k0 + 1/k1 + 1/kInf = 1")
    kmap = {"0": k0, "1": k1, "inf": kinf}
    total = Fraction(-1)
    for order, point in zip(a, ("0", "1", "t", "inf")):
        fib = fiber_of[point]
        total += Fraction(order) / kmap[fib]
    return total / kcurv


def degree_linear_form(k):
    """Degree as a linear form c0*v0 + c1*v1 + ct*vt + cInf*vInf in the
    local monodromy differences of the target equation (vInf enters through
    1 - vInf, hence the sign)."""
    k0, k1, kinf = (Fraction(v) for v in k)
    kcurv = Fraction(1, 1) / k0 + 1 / k1 + 1 / kinf - 1
    if kcurv == 0:
        raise ValueError("degenerate case 1/k0 + 1/k1 + 1/kInf = 1")
    c = 1 / kcurv
    return (c, c, c, -c)


def degree_from_theta(k, theta) -> Fraction:
    c0, c1, ct, cinf = degree_linear_form(k)
    t0, t1, tt, tinf = (Fraction(v) for v in theta)
    return c0 * t0 + c1 * t1 + ct * tt + cinf * tinf


# ---------------------------------------------------------------------------
# normalization: parameter substitution plus a fractional-linear x-map
# ---------------------------------------------------------------------------


class MobiusMap:
    """x -> (a x + b) / (c x + d) with exact scalar coefficients."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d
        if (a * d - b * c).is_zero:
            raise ValueError("Mobius map must be invertible (ad - bc != 0)")

    @classmethod
    def identity(cls, domain):
        return cls(domain.one, domain.zero, domain.zero, domain.one)

    @classmethod
    def from_ratfunc(cls, rf: RatFunc) -> "MobiusMap":
        num, den = rf.num, rf.den
        if num.degree > 1 or den.degree > 1:
            raise ValueError(f"{rf} is not fractional-linear in {rf.var}")
        dom = num.domain
        return cls(num.coeff(1), num.coeff(0), den.coeff(1), den.coeff(0))

    @property
    def is_affine(self) -> bool:
        return self.c.is_zero

    def apply(self, value):
        return (self.a * value + self.b) / (self.c * value + self.d)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __repr__(self):
        return f"MobiusMap(({self.a})*x + ({self.b}) / ({self.c})*x + ({self.d}))"


def substitute_parameter(rf: RatFunc, value: RatFunc):
    """Substitute a rational function of a new parameter for the coefficient
    parameter of a rational function in x, e.g. s := s(u) turning Q(s)(x)
    into Q(u)(x).

    Coefficients are evaluated through shared power tables of value's
    numerator and denominator, keeping everything polynomial until a single
    reduction per coefficient.
    """
    if not isinstance(value, RatFunc):
        raise FieldMismatchError("parameter substitutions take rational values")
    new_domain = FracField(value.var, value.domain)
    max_deg = 0
    for poly in (rf.num, rf.den):
        for c in poly.coeffs:
            max_deg = max(max_deg, c.num.degree, c.den.degree)
    n_pow = [UniPoly.constant(value.var, value.domain.one, value.domain)]
    d_pow = [n_pow[0]]
    for _ in range(max_deg):
        n_pow.append(n_pow[-1] * value.num)
        d_pow.append(d_pow[-1] * value.den)

    def eval_poly(p: UniPoly, deg: int) -> UniPoly:
        acc = UniPoly.zero(value.var, value.domain)
        for k in range(p.degree + 1):
            c = p.coeff(k)
            if not c.is_zero:
                acc = acc + n_pow[k] * d_pow[deg - k] * c
        return acc

    def eval_coeff(c) -> RatFunc:
        dn, dd = c.num.degree, c.den.degree
        num = eval_poly(c.num, dn)
        den = eval_poly(c.den, dd)
        # c(value) = (num / D^dn) / (den / D^dd)
        if dn >= dd:
            return RatFunc(num, den * d_pow[dn - dd])
        return RatFunc(num * d_pow[dd - dn], den)

    num = rf.num.map_coefficients(eval_coeff, new_domain)
    den = rf.den.map_coefficients(eval_coeff, new_domain)
    return RatFunc(num, den)


def compose_with_mobius(rf: RatFunc, m: MobiusMap) -> RatFunc:
    """Exact composition R(M(x)) of a rational function with a Mobius map
    whose coefficients live in the same scalar domain as R's coefficients."""
    var, dom = rf.var, rf.num.domain
    lin_num = UniPoly(var, (m.b, m.a), dom)
    lin_den = UniPoly(var, (m.d, m.c), dom)
    n = max(rf.num.degree, rf.den.degree)
    pow_num = [UniPoly.constant(var, dom.one, dom)]
    pow_den = [UniPoly.constant(var, dom.one, dom)]
    for _ in range(n):
        pow_num.append(pow_num[-1] * lin_num)
        pow_den.append(pow_den[-1] * lin_den)

    def expand(p: UniPoly) -> UniPoly:
        acc = UniPoly.zero(var, dom)
        for k in range(p.degree + 1):
            c = p.coeff(k)
            if _nonzero(c):
                acc = acc + pow_num[k] * pow_den[n - k] * c
        return acc

    # composition with an invertible Mobius map preserves coprimality
    return RatFunc(expand(rf.num), expand(rf.den), _coprime=True)


def _nonzero(c):
    z = getattr(c, "is_zero", None)
    if z is None:
        return c != 0
    return not z


def lift_covering(c: Covering, field) -> Covering:
    """Coerce base-field coefficients into a quadratic extension (gcd and
    monic normalization survive field extension unchanged)."""
    num = c.map.num.map_coefficients(field.coerce, field)
    den = c.map.den.map_coefficients(field.coerce, field)
    return Covering(RatFunc(num, den, _reduced=True))


def normalize(c: Covering, param_value, x_map: MobiusMap | None = None) -> Covering:
    """Reparametrize the family parameter and move x by a fractional-linear
    map; with the catalog's substitutions this produces properly normalized
    coverings (simple special points at x = 0, 1, t and the deviating point
    at x = infinity).

    The x-map may have coefficients in a quadratic extension of the
    substituted base field; the covering is lifted into it first.
    """
    rf = substitute_parameter(c.map, param_value)
    if x_map is not None:
        target = getattr(x_map.a, "field", None)
        if target is not None and rf.num.domain != target:
            cov = lift_covering(Covering(rf), target)
            rf = cov.map
        rf = compose_with_mobius(rf, x_map)
    return Covering(rf)


# ---------------------------------------------------------------------------
# composite patterns (hats mark outer fiber points that carry the critical
# values of the inner map)
# ---------------------------------------------------------------------------


def compose_patterns(outer: RamificationPattern, inner: RamificationPattern,
                     assignment) -> RamificationPattern:
    """Combinatorial composite of coverings applied inner-first.

    `outer` is the second map; its hatted parts are the fiber points where
    the critical values of `inner` land.  `assignment` lists, for each hat
    in (fiber, index) order, which inner fiber (0, 1, 2 or '0','1','inf')
    that hat refers to.  Multiplicities multiply along the marked points;
    every unmarked point contributes deg(inner) unramified copies.
    """
    if inner.kind == "R4" and outer.kind == "R4":
        raise ValueError("composition of two almost Belyi patterns has five "
                         "branch points; not representable")
    hats = sorted(outer.hats)
    assigned = [_fiber_index(f) for f in assignment]
    if len(assigned) != len(hats):
        raise ValueError(
            f"{len(hats)} hat(s) in {outer} but {len(assigned)} assignment(s)"
        )
    hat_to_inner = dict(zip(hats, assigned))

    # consistency: inner's ramified labeled fibers must be exactly the
    # hat targets, one hat each
    ramified = {
        f_idx for f_idx in range(3) if any(m > 1 for m in inner.parts[f_idx])
    }
    if sorted(hat_to_inner.values()) != sorted(ramified):
        raise ValueError(
            f"hats point at inner fibers {sorted(hat_to_inner.values())} but the "
            f"inner pattern ramifies over {sorted(ramified)}"
        )

    deg_in = inner.degree
    parts = []
    for f_idx in range(3):
        fiber = []
        for p_idx, mult in enumerate(outer.parts[f_idx]):
            key = (f_idx, p_idx)
            if key in hat_to_inner:
                inner_fiber = inner.parts[hat_to_inner[key]]
                fiber.extend(m * mult for m in inner_fiber)
            else:
                fiber.extend([mult] * deg_in)
        parts.append(tuple(sorted(fiber, reverse=True)))

    kind = "R4" if (inner.kind == "R4" or outer.kind == "R4") else "R3"
    if kind == "R4":
        # the composite fourth fiber must keep the almost Belyi shape
        if inner.kind == "R4":
            fourth = sorted([2] + [1] * (deg_in - 2) + [1] * ((outer.degree - 1) * deg_in),
                            reverse=True)
        else:
            fourth = []
            for mult in [2] + [1] * (outer.degree - 2):
                fourth.extend([mult] * deg_in)
            fourth.sort(reverse=True)
        if fourth != [2] + [1] * (inner.degree * outer.degree - 2):
            raise ValueError(
                f"composite fourth fiber {fourth} is not 2+1+...+1; "
                "the composition is not almost Belyi"
            )
    return RamificationPattern(kind, tuple(parts))


def _fiber_index(f) -> int:
    if isinstance(f, int):
        if f in (0, 1, 2):
            return f
    else:
        names = {"0": 0, "1": 1, "inf": 2}
        if str(f) in names:
            return names[str(f)]
    raise ValueError(f"bad fiber label {f!r}")
