"""Sparse linear combinations as plain dicts {basis_key: nonzero scalar}.

A combination is canonical iff it carries no zero coefficients; all
helpers below preserve that, so two combinations are equal iff the dicts
are equal.  Keys may be any hashable basis encoding (Lie symbols,
interned monomial ids, ...).
"""

from .scalars import Q, ZERO


def lc_zero():
    return {}


def lc_single(key, coef=None):
    c = Q(1) if coef is None else Q(coef)
    return {key: c} if c else {}


def lc_iadd(dst, src, coef=1):
    """In-place dst += coef * src, keeping canonical form. Returns dst."""
    if not coef:
        return dst
    get = dst.get
    if coef == 1:
        for k, v in src.items():
            c = get(k)
            c = v if c is None else c + v
            if c:
                dst[k] = c
            else:
                dst.pop(k, None)
    else:
        for k, v in src.items():
            c = get(k)
            c = coef * v if c is None else c + coef * v
            if c:
                dst[k] = c
            else:
                dst.pop(k, None)
    return dst


def lc_add(a, b):
    return lc_iadd(dict(a), b)


def lc_scale(a, coef):
    if not coef:
        return {}
    return {k: coef * v for k, v in a.items()}


def lc_combine(terms):
    """Sum of (coef, combination) pairs."""
    out = {}
    for coef, a in terms:
        lc_iadd(out, a, coef)
    return out


def lc_sub(a, b):
    return lc_iadd(dict(a), b, -1)


def lc_eq(a, b):
    return a == b


def lc_items_sorted(a):
    """Deterministic iteration order (sorted on the key encoding)."""
    return sorted(a.items(), key=lambda kv: repr(kv[0]))
