"""Heisenberg-Virasoro type spaces: the vacuum algebra and Verma modules.

The defining relations, with C_L, C_LI, C_I acting as scalars:

    [L(n), L(m)] = (n-m) L(n+m) + d(n,-m) (n^3-n)/12 c_L
    [L(n), I(m)] = -m I(n+m)    - d(n,-m) (n^2+n)   c_LI
    [I(n), I(m)] =                d(n,-m) n         c_I

Monomials are pairs (Ls, Is) of weakly decreasing tuples of positive
integers: L(-n_1)...L(-n_a) I(-m_1)...I(-m_b) applied to the top vector.
In the vacuum algebra the L-entries are >= 2 (the level-one string
L(-1)|top> is the translation image, not a basis direction); Verma
modules allow L(-1).  ``has_heisenberg=False`` gives the plain Virasoro
versions of both.
"""

from ..scalars import Q
from ..lincomb import lc_iadd, lc_single
from .state import Space


class HVirSpace(Space):
    def __init__(self, c_L, c_LI=0, c_I=0, mode="vacuum", h=0, h_I=0,
                 has_heisenberg=True):
        super().__init__()
        if mode not in ("vacuum", "verma"):
            raise ValueError("mode must be 'vacuum' or 'verma'")
        self.c_L = Q(c_L)
        self.c_LI = Q(c_LI)
        self.c_I = Q(c_I)
        self.mode = mode
        self.h = Q(h) if mode == "verma" else Q(0)
        self.h_I = Q(h_I) if mode == "verma" else Q(0)
        self.has_heisenberg = has_heisenberg
        self.min_L = 2 if mode == "vacuum" else 1
        self.vacuum = self.mid(((), ())) if mode == "vacuum" else None
        self.top = self.mid(((), ()))
        self.op_vacuum = self.top
        self.omega_state = self.state(((2,), ()))
        self.rank = self.c_L

    def _degree(self, mon):
        Ls, Is = mon
        return self.h + Q(sum(Ls) + sum(Is))

    def _level(self, mon):
        Ls, Is = mon
        return sum(Ls) + sum(Is)

    # -- generator action ---------------------------------------------------

    def _act_raw(self, gen, k, mon):
        Ls, Is = mon
        if gen == "L":
            if Ls:
                n1 = Ls[0]
                if k <= -n1:
                    return lc_single(((-k,) + Ls, Is))
                rest = (Ls[1:], Is)
                out = self._prepend("L", n1, self._act("L", k, rest))
                if k + n1:
                    lc_iadd(out, self._act("L", k - n1, rest), Q(k + n1))
                if k == n1:
                    lc_iadd(out, lc_single(rest), Q(k ** 3 - k, 12) * self.c_L)
                return out
            if Is:
                if k <= -self.min_L:
                    return lc_single(((-k,), Is))
                m1 = Is[0]
                rest = ((), Is[1:])
                out = self._prepend("I", m1, self._act("L", k, rest))
                lc_iadd(out, self._act("I", k - m1, rest), Q(m1))
                if k == m1:
                    lc_iadd(out, lc_single(rest), -Q(k * k + k) * self.c_LI)
                return out
            # top vector
            if k > 0:
                return {}
            if k == 0:
                return lc_single(mon, self.h) if self.h else {}
            if -k >= self.min_L:
                return lc_single(((-k,), ()))
            return {}  # vacuum algebra: L(-1)|1> = 0
        if gen != "I" or not self.has_heisenberg:
            raise ValueError("unknown generator %r" % (gen,))
        if Ls:
            n1 = Ls[0]
            rest = (Ls[1:], Is)
            out = self._prepend("L", n1, self._act("I", k, rest))
            if k:
                lc_iadd(out, self._act("I", k - n1, rest), Q(k))
            if k == n1:
                lc_iadd(out, lc_single(rest), Q(n1 * n1 - n1) * self.c_LI)
            return out
        if Is:
            m1 = Is[0]
            if k < 0 and -k >= m1:
                return lc_single(((), (-k,) + Is))
            rest = ((), Is[1:])
            out = self._prepend("I", m1, self._act("I", k, rest))
            if k == m1:
                lc_iadd(out, lc_single(rest), Q(k) * self.c_I)
            return out
        if k > 0:
            return {}
        if k == 0:
            return lc_single(mon, self.h_I) if self.h_I else {}
        return lc_single(((), (-k,)))

    def _prepend(self, gen, n, comb):
        """Apply the creation operator gen(-n) to a raw {mon: coef} dict."""
        out = {}
        for m, c in comb.items():
            lc_iadd(out, self._act(gen, -n, m), c)
        return out

    # -- peel / translate -----------------------------------------------------

    def peel(self, mid):
        """mid = gen_(voa mode) * rest; returns (gen, weight, kprime, rest_mid)."""
        out = self._peel_memo.get(mid)
        if out is None and mid not in self._peel_memo:
            Ls, Is = self._id2mon[mid]
            if Ls:
                out = ("L", 2, Ls[0] - 2, self.mid((Ls[1:], Is)))
            elif Is:
                out = ("I", 1, Is[0] - 1, self.mid(((), Is[1:])))
            self._peel_memo[mid] = out
        return out

    def translate_base(self, mid):
        if self.mode == "verma":
            return {self.mid(((1,), ())): Q(1)}
        return {}

    def trunc_bound(self, a_mid, c_mid):
        return self._levels[a_mid] + self._levels[c_mid]

    def base_nth(self, a_mid, n, c_mid):
        raise RuntimeError("all non-top monomials peel in this space")

    # -- enumeration -----------------------------------------------------------

    def basis_monomials(self, max_degree, charge_box=None):
        """All monomials with level <= max_degree, level-major then lex."""
        out = []
        for lpart in _partitions(max_degree, self.min_L):
            budget = max_degree - sum(lpart)
            if self.has_heisenberg:
                for ipart in _partitions(budget, 1):
                    out.append((lpart, ipart))
            else:
                out.append((lpart, ()))
        out.sort(key=lambda m: (self._level(m), m))
        return out

    def mon_str(self, mon):
        Ls, Is = mon
        parts = ["L(-%d)" % n for n in Ls] + ["I(-%d)" % n for n in Is]
        return "".join(parts) + ("|top>" if self.mode == "verma" else "|1>")


def _partitions(budget, min_part):
    """Weakly decreasing tuples with parts >= min_part and sum <= budget."""
    out = [()]

    def rec(prefix, remaining, cap):
        for p in range(min(cap, remaining), min_part - 1, -1):
            cur = prefix + (p,)
            out.append(cur)
            rec(cur, remaining - p, p)

    rec((), budget, budget)
    return out


def virasoro_space(c_L, mode="vacuum", h=0):
    return HVirSpace(c_L, 0, 0, mode=mode, h=h, has_heisenberg=False)


def build_hvir(c_L, c_LI, c_I, mode="vacuum", h=0, h_I=0):
    """Vacuum algebra or Verma module, warning outside the usual regime."""
    import warnings
    if mode == "vacuum" and (Q(c_I) != 0 or Q(c_LI) == 0):
        warnings.warn("vacuum space outside the usual regime: expected "
                      "c_I = 0 and c_LI != 0", stacklevel=2)
    return HVirSpace(c_L, c_LI, c_I, mode=mode, h=h, h_I=h_I)
