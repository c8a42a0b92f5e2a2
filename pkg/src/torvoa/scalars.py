"""Exact rational scalars and generalized binomial coefficients.

Every coefficient in this package is an exact rational; there is no
floating point anywhere.  ``Q`` is gmpy2's mpq when available (an order
of magnitude faster), otherwise ``fractions.Fraction``.  Both store
lowest terms with positive denominator and hash/compare compatibly with
Python ints.
"""

import os

if os.environ.get("TORVOA_PURE_FRACTIONS"):
    from fractions import Fraction as Q
else:
    try:
        from gmpy2 import mpq as Q
    except ImportError:  # pragma: no cover
        from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)


def qstr(x):
    """Canonical string form of a rational, e.g. '3/2', '-1', '0'."""
    return str(x)


def parse_q(text):
    """Parse 'p/q' or 'p' (int or str) into an exact rational."""
    if isinstance(text, (int,)):
        return Q(text)
    s = str(text).strip()
    if "/" in s:
        num, den = s.split("/")
        return Q(int(num), int(den))
    return Q(int(s))


def ifloor(x):
    """Floor of a rational as a Python int."""
    num, den = x.numerator, x.denominator
    return int(num // den)


_BINOM_CACHE = {}


def binom(n, j):
    """Binomial C(n, j) = n(n-1)...(n-j+1)/j! for any integer n, j >= 0.

    Defined for negative upper index as well; C(n, j) = 0 for j < 0.
    """
    if j < 0:
        return ZERO
    key = (n, j)
    out = _BINOM_CACHE.get(key)
    if out is None:
        num = 1
        for i in range(j):
            num *= n - i
        den = 1
        for i in range(2, j + 1):
            den *= i
        out = Q(num, den)
        _BINOM_CACHE[key] = out
    return out
