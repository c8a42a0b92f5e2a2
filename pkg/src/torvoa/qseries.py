"""Truncated one-variable power series with exact coefficients.

Used for graded-dimension bookkeeping: inverse eta-type products
prod_{k>=1} (1-q^k)^(-e) and the level-n quotient characters
(1-q^n) prod (1-q^k)^(-2).
"""

from .scalars import Q, ZERO


class QSeries:
    """Coefficients c_0..c_D of a series truncated at order D."""

    def __init__(self, coeffs, order):
        self.order = order
        cs = list(coeffs) + [ZERO] * (order + 1 - len(coeffs))
        self.coeffs = [Q(c) for c in cs[: order + 1]]

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __eq__(self, other):
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other):
        d = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], d)

    def __mul__(self, other):
        d = min(self.order, other.order)
        out = [ZERO] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: d + 1 - i]):
                out[i + j] += a * b
        return QSeries(out, d)

    def __repr__(self):
        return "QSeries(%s)" % (self.coeffs,)

    def ints(self):
        """Coefficients as plain ints (raises if non-integral)."""
        out = []
        for c in self.coeffs:
            n, d = c.numerator, c.denominator
            if d != 1:
                raise ValueError("non-integral coefficient %s" % c)
            out.append(int(n))
        return out


def geometric_inverse(n, e, order):
    """(1 - q^n)^(-e) truncated: prod of e copies of sum_j q^(nj)."""
    out = QSeries.one(order)
    base = [ZERO] * (order + 1)
    for j in range(0, order + 1, n):
        base[j] = Q(1)
    g = QSeries(base, order)
    for _ in range(e):
        out = out * g
    return out


def eta_inverse_power(e, order):
    """prod_{k>=1} (1-q^k)^(-e) to the given order, by DP over part sizes.

    dp[d] counts e-colored partitions of d with exact integer arithmetic:
    parts of each size k come in e colors, processed size by size.
    """
    if e < 1:
        raise ValueError("power must be a positive integer")
    dp = [Q(0)] * (order + 1)
    dp[0] = Q(1)
    for k in range(1, order + 1):
        for _ in range(e):
            # multiply by 1/(1-q^k): prefix-sum along stride k
            for d in range(k, order + 1):
                dp[d] += dp[d - k]
    return QSeries(dp, order)


def hvir_char(n, order):
    """(1 - q^n) * prod_{k>=1} (1-q^k)^(-2), truncated."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = eta_inverse_power(2, order)
    shift = [ZERO] * (order + 1)
    shift[0] = Q(1)
    if n <= order:
        shift[n] = Q(-1)
    return QSeries(shift, order) * base
