"""Integer kernels for the heavy polynomial arithmetic.

Exact rational coefficients carry a gcd normalization on every single
operation, which dominates runtime in remainder sequences.  These kernels
clear everything to Gaussian integers once, work on raw (int, int) pairs,
and convert back at the very end:

* zpoly  -- univariate polynomial over Z[i]: list of (re, im), low to high;
* bipoly -- polynomial in x whose coefficients are zpolys in the parameter.

Both gcds are primitive polynomial-remainder sequences (contents stripped
after every pseudo-remainder), which keeps coefficient growth polynomial.
Exact divisions go through pseudo-division: with a primitive divisor the
scaled quotient is integral by Gauss's lemma, so one exact scalar division
restores the true quotient.
"""

from __future__ import annotations

from math import gcd as _gcd_int

from .gaussian import zi_exact_div, zi_gcd, zi_mul, zi_sub

_ZI_UNITS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_ZI_ZERO = (0, 0)
_ZI_ONE = (1, 0)

# modular coprimality witness: one gcd over GF(p) certifies gcd = 1 and lets
# the expensive remainder sequence be skipped (the overwhelmingly common case
# in canonical-form reductions)
_P = 2147483629  # prime, 1 mod 4, so GF(p) contains a square root of -1


def _find_imag_unit(p):
    for a in range(2, 50):
        r = pow(a, (p - 1) // 4, p)
        if (r * r) % p == p - 1:
            return r
    raise RuntimeError("no sqrt(-1) mod p found")


_R = _find_imag_unit(_P)


def _gfp_from_zp(a):
    """zpoly -> coefficient list over GF(p), or None when the leading
    coefficient vanishes mod p (witness would be unsound)."""
    out = [(re + im * _R) % _P for re, im in a]
    if out and out[-1] == 0:
        return None
    return out


def _gfp_gcd_degree(a, b):
    while b:
        inv = pow(b[-1], _P - 2, _P)
        while len(a) >= len(b):
            lead = (a[-1] * inv) % _P
            shift = len(a) - len(b)
            for j, c in enumerate(b):
                a[shift + j] = (a[shift + j] - lead * c) % _P
            del a[-1]
            while a and a[-1] == 0:
                a.pop()
            if not a:
                break
        a, b = b, a
    return len(a) - 1


WITNESS_P = _P
WITNESS_R = _R


def gfp_gcd_degree_public(a, b) -> int:
    return _gfp_gcd_degree(list(a), list(b))


def gfp_sqrt(n: int):
    """Square root mod the witness prime (Tonelli-Shanks), or None."""
    p = _P
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    # p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = (t2 * t2) % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, (b * b) % p
        t, r = (t * c) % p, (r * b) % p
    return r


def zp_certified_coprime(a, b) -> bool:
    if not a or not b:
        return False
    fa, fb = _gfp_from_zp(a), _gfp_from_zp(b)
    if fa is None or fb is None:
        return False
    return _gfp_gcd_degree(fa, fb) == 0


def bip_certified_coprime(a, b) -> bool:
    """Specialize the parameter at a point where both leading coefficients
    survive mod p, then run the univariate witness."""
    if not a or not b:
        return False
    for s0 in (2, 3, 5, 7, 11, 13):
        ok = True
        spec = []
        for poly in (a, b):
            cs = []
            for c in poly:
                acc = 0
                for re, im in reversed(c):
                    acc = (acc * s0 + re + im * _R) % _P
                cs.append(acc)
            while cs and cs[-1] == 0:
                cs.pop()
            if len(cs) != len(poly):
                ok = False
                break
            spec.append(cs)
        if ok:
            return _gfp_gcd_degree(spec[0], spec[1]) == 0
    return False


# ---------------------------------------------------------------------------
# zpoly: univariate over Z[i]
# ---------------------------------------------------------------------------


def zp_trim(a):
    while a and a[-1] == _ZI_ZERO:
        a.pop()
    return a


def zp_is_zero(a) -> bool:
    return not a


def zp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        x, y = out[k]
        out[k] = (x + c[0], y + c[1])
    return zp_trim(out)


def zp_sub(a, b):
    out = list(a) + [_ZI_ZERO] * (len(b) - len(a))
    for k, c in enumerate(b):
        x, y = out[k]
        out[k] = (x - c[0], y - c[1])
    return zp_trim(out)


def zp_neg(a):
    return [(-x, -y) for x, y in a]


def zp_mul(a, b):
    if not a or not b:
        return []
    out = [(0, 0)] * (len(a) + len(b) - 1)
    for j, (ar, ai) in enumerate(a):
        if ar == 0 and ai == 0:
            continue
        for k, (br, bi) in enumerate(b):
            cr, ci = out[j + k]
            out[j + k] = (cr + ar * br - ai * bi, ci + ar * bi + ai * br)
    return zp_trim(out)


def zp_scale(a, c):
    cr, ci = c
    return zp_trim([(x * cr - y * ci, x * ci + y * cr) for x, y in a])


def zp_content(a):
    if all(c[1] == 0 for c in a):
        g = 0
        for c in a:
            g = _gcd_int(g, c[0])
            if g == 1:
                break
        return (g, 0) if g else _ZI_ONE
    g = _ZI_ZERO
    for c in a:
        if c != _ZI_ZERO:
            g = zi_gcd(g, c)
            if g in _ZI_UNITS:
                return _ZI_ONE
    return g if g != _ZI_ZERO else _ZI_ONE


def zp_exact_scalar_div(a, c):
    if c == _ZI_ONE:
        return list(a)
    return [zi_exact_div(x, c) for x in a]


def _canonical_unit(z):
    """Unit u such that u*z has re > 0 and im >= 0 (unique for z != 0)."""
    re, im = z
    if re > 0 and im >= 0:
        return _ZI_ONE
    if re <= 0 and im > 0:
        return (0, -1)  # -i: (re,im) -> (im,-re)
    if re < 0 and im <= 0:
        return (-1, 0)
    return (0, 1)


def zp_primitive(a):
    """(prim, cont) with prim * cont == a exactly and prim's leading
    coefficient normalized into the quarter plane (re > 0, im >= 0)."""
    a = zp_trim(list(a))
    if not a:
        return [], _ZI_ONE
    c = zp_content(a)
    prim = zp_exact_scalar_div(a, c)
    u = _canonical_unit(prim[-1])
    if u != _ZI_ONE:
        prim = zp_scale(prim, u)
        # cont must absorb u^-1 so that prim * cont == a still holds
        ur, ui = u
        u_inv = (ur, -ui)
        c = zi_mul(c, u_inv)
    return prim, c


def zp_pseudo_divmod(a, b):
    """lc(b)^k * a = q*b + r with deg r < deg b; returns (q, r, k)."""
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    db = len(b) - 1
    lead_b = b[-1]
    r = list(a)
    q = [_ZI_ZERO] * max(len(a) - db, 1)
    k = 0
    while len(r) - 1 >= db and r:
        lead_r = r[-1]
        shift = len(r) - 1 - db
        # r := lead_b * r - lead_r * x^shift * b ; scale q to match
        q = [zi_mul(lead_b, c) for c in q]
        q[shift] = (q[shift][0] + lead_r[0], q[shift][1] + lead_r[1])
        r = [zi_mul(lead_b, c) for c in r[:-1]]
        for j in range(db):
            r[shift + j] = zi_sub(r[shift + j], zi_mul(lead_r, b[j]))
        zp_trim(r)
        k += 1
    return zp_trim(q), r, k


def zp_gcd(a, b):
    """Primitive gcd with the canonical leading unit."""
    a, _ = zp_primitive(a)
    b, _ = zp_primitive(b)
    if len(a) == 1 or len(b) == 1:
        return [_ZI_ONE]
    if zp_certified_coprime(a, b):
        return [_ZI_ONE]
    if len(a) < len(b):
        a, b = b, a
    while b:
        _, r, _ = zp_pseudo_divmod(a, b)
        r, _ = zp_primitive(r)
        a, b = b, r
    return a


def zp_exact_div(a, b):
    """Exact quotient a/b over Q(i) scaled to Z[i]: returns (q, d) with
    a/b == q/d, d a Gaussian integer (b need not be primitive)."""
    bprim, cont = zp_primitive(b)
    q, r, k = zp_pseudo_divmod(zp_trim(list(a)), bprim)
    if not zp_is_zero(r):
        raise ArithmeticError("inexact zpoly division")
    lead = bprim[-1]
    scale = _ZI_ONE
    for _ in range(k):
        scale = zi_mul(scale, lead)
    # q/scale is integral (Gauss, primitive divisor); cont rides along
    q = zp_exact_scalar_div(q, scale) if scale != _ZI_ONE else q
    return q, cont


# ---------------------------------------------------------------------------
# bipoly: polynomials in x over Z[i][param]
# ---------------------------------------------------------------------------


def bip_trim(a):
    while a and zp_is_zero(a[-1]):
        a.pop()
    return a


def bip_is_zero(a) -> bool:
    return not a


def bip_extract_content(a):
    """(prim, cont) with cont a zpoly, prim a bipoly whose coefficients have
    trivial common factor, and (cont * prim_k) == a_k coefficient-wise."""
    a = bip_trim([zp_trim(list(c)) for c in a])
    if not a:
        return [], [_ZI_ONE]
    g = None
    for c in a:
        if not zp_is_zero(c):
            g = list(c) if g is None else zp_gcd(g, c)
            if len(g) == 1 and g[0] in _ZI_UNITS:
                g = None
                break
    if g is not None and len(g) == 1 and g[0] == _ZI_ONE:
        g = None
    if g is None:
        prim = a
        cont = [_ZI_ONE]
    else:
        prim = []
        for c in a:
            if zp_is_zero(c):
                prim.append([])
            else:
                q, d = zp_exact_div(c, g)
                if d != _ZI_ONE:
                    # g is primitive with canonical unit, so d is a unit
                    dr, di = d
                    q = zp_scale(q, (dr, -di))
                prim.append(q)
        cont = g
    # strip the shared Gaussian-integer content as well
    zc = _ZI_ZERO
    for c in prim:
        if not zp_is_zero(c):
            zc = zi_gcd(zc, zp_content(c))
            if zc in _ZI_UNITS:
                zc = _ZI_ONE
                break
    if zc != _ZI_ONE and zc != _ZI_ZERO:
        prim = [zp_exact_scalar_div(c, zc) for c in prim]
        cont = zp_scale(cont, zc)
    return prim, cont


def bip_primitive(a):
    prim, _ = bip_extract_content(a)
    return prim


def bip_pseudo_divmod(a, b):
    """lc(b)^k * a = q*b + r in Z[i][s][x]; returns (q, r, k)."""
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    db = len(b) - 1
    lead_b = b[-1]
    r = [list(c) for c in a]
    q = [[] for _ in range(max(len(a) - db, 1))]
    k = 0
    while len(r) - 1 >= db and r:
        lead_r = r[-1]
        shift = len(r) - 1 - db
        q = [zp_mul(c, lead_b) for c in q]
        q[shift] = zp_add(q[shift], lead_r)
        r = [zp_mul(c, lead_b) for c in r[:-1]]
        for j in range(db):
            r[shift + j] = zp_sub(r[shift + j], zp_mul(lead_r, b[j]))
        bip_trim(r)
        k += 1
    return bip_trim(q), r, k


def bip_gcd(a, b):
    if bip_certified_coprime(a, b):
        return [[_ZI_ONE]]
    a = bip_primitive([list(c) for c in a])
    b = bip_primitive([list(c) for c in b])
    if len(a) == 1 or len(b) == 1:
        return [[_ZI_ONE]]
    if len(a) < len(b):
        a, b = b, a
    while b:
        _, r, _ = bip_pseudo_divmod(a, b)
        a, b = b, bip_primitive(r)
    return a
