"""Integer kernel for x-polynomials over a quadratic extension.

An element (a + b*w)/c of Q(i)(u)[w]/(w^2 - D) clears to a pair of
Z[i][u]-polynomials plus a shared denominator.  A polynomial in x over the
extension therefore clears to a pair of bipolys (the w-free and w-parts).
Pseudo-remainder sequences run entirely in this order -- multiplication
uses the rewrite w^2 -> D -- with the shared Z[i][u]-content stripped after
every step to keep growth polynomial.  The last nonzero remainder, made
monic back in the field, is the gcd regardless of leftover content.
"""

from __future__ import annotations

from . import _zkernel as zk

# epoly: list of (az, bz) pairs of zpolys, low to high in x


def _pair_is_zero(p) -> bool:
    return zk.zp_is_zero(p[0]) and zk.zp_is_zero(p[1])


def ep_trim(a):
    while a and _pair_is_zero(a[-1]):
        a.pop()
    return a


def pair_mul(p, q, dmod):
    a1, b1 = p
    a2, b2 = q
    a = zk.zp_add(zk.zp_mul(a1, a2), zk.zp_mul(zk.zp_mul(b1, b2), dmod))
    b = zk.zp_add(zk.zp_mul(a1, b2), zk.zp_mul(b1, a2))
    return (a, b)


def pair_sub(p, q):
    return (zk.zp_sub(p[0], q[0]), zk.zp_sub(p[1], q[1]))


def ep_pseudo_divmod(a, b, dmod):
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    db = len(b) - 1
    lead_b = b[-1]
    r = [(list(p[0]), list(p[1])) for p in a]
    k = 0
    while len(r) - 1 >= db and r:
        lead_r = r[-1]
        shift = len(r) - 1 - db
        r = [pair_mul(c, lead_b, dmod) for c in r[:-1]]
        for j in range(db):
            r[shift + j] = pair_sub(r[shift + j], pair_mul(lead_r, b[j], dmod))
        ep_trim(r)
        k += 1
    return r, k


def ep_strip_content(a):
    """Divide every component polynomial by the shared Z[i][u] content."""
    g = None
    for az, bz in a:
        for comp in (az, bz):
            if not zk.zp_is_zero(comp):
                g = list(comp) if g is None else zk.zp_gcd(g, comp)
                if len(g) == 1:
                    return a
    if g is None or len(g) == 1:
        return a
    out = []
    for az, bz in a:
        qa = zk.zp_exact_div(az, g)[0] if not zk.zp_is_zero(az) else []
        qb = zk.zp_exact_div(bz, g)[0] if not zk.zp_is_zero(bz) else []
        out.append((qa, qb))
    return out


def ep_mul(a, b, dmod):
    if not a or not b:
        return []
    out = [([], []) for _ in range(len(a) + len(b) - 1)]
    for j, p in enumerate(a):
        if _pair_is_zero(p):
            continue
        for k, q in enumerate(b):
            if _pair_is_zero(q):
                continue
            prod = pair_mul(p, q, dmod)
            cur = out[j + k]
            out[j + k] = (zk.zp_add(cur[0], prod[0]), zk.zp_add(cur[1], prod[1]))
    return ep_trim(out)


def ep_pseudo_divmod_with_quotient(a, b, dmod):
    """Pseudo-division tracking the quotient: lc(b)^k * a = q*b + r.
    Returns (q, k), or (None, k) when the remainder is nonzero."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    db = len(b) - 1
    lead_b = b[-1]
    r = [(list(p[0]), list(p[1])) for p in a]
    q = [([], []) for _ in range(max(len(a) - db, 1))]
    k = 0
    while len(r) - 1 >= db and r:
        lead_r = r[-1]
        shift = len(r) - 1 - db
        q = [pair_mul(c, lead_b, dmod) for c in q]
        q[shift] = (zk.zp_add(q[shift][0], lead_r[0]), zk.zp_add(q[shift][1], lead_r[1]))
        r = [pair_mul(c, lead_b, dmod) for c in r[:-1]]
        for j in range(db):
            r[shift + j] = pair_sub(r[shift + j], pair_mul(lead_r, b[j], dmod))
        ep_trim(r)
        k += 1
    if not ep_trim(r):
        return ep_trim(q), k
    return None, k


def ep_gcd(a, b, dmod):
    a = ep_strip_content(ep_trim([(list(p[0]), list(p[1])) for p in a]))
    b = ep_strip_content(ep_trim([(list(p[0]), list(p[1])) for p in b]))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = ep_pseudo_divmod(a, b, dmod)
        a, b = b, ep_strip_content(r)
    return a
