"""Affinization of a finite-dimensional algebra datum at a fixed level.

    [x(n), y(m)] = [x,y](n+m) + n d(n,-m) (x|y) * level

Monomials are tuples of (n, i) meaning g_i(-n), weakly decreasing in
(n, i).  With the one-dimensional abelian datum this is the Heisenberg
space; with sl_n it is the affine sl_n vacuum space.  The Virasoro
element is the standard quadratic expression in a dual pair of bases,
normalized by 1/(2(level + dual Coxeter number)).
"""

from ..scalars import Q
from ..lincomb import lc_iadd, lc_single
from ..linalg import rref
from .state import Space


class AffineSpace(Space):
    def __init__(self, data, level):
        super().__init__()
        self.data = data
        self.level_scalar = Q(level)
        self.vacuum = self.mid(())
        self.op_vacuum = self.vacuum
        self.rank = None
        self.omega_state = None
        if data.dual_coxeter is not None:
            if self.level_scalar == -data.dual_coxeter:
                raise ValueError("critical level: no Virasoro element")
            self.omega_state = self._sugawara()
            self.rank = self.level_scalar * data.dim / (self.level_scalar + data.dual_coxeter)

    def _degree(self, mon):
        return Q(sum(n for n, _ in mon))

    def _level(self, mon):
        return sum(n for n, _ in mon)

    def _act_raw(self, gen, k, mon):
        if not mon:
            if k >= 0:
                return {}
            return lc_single(((-k, gen),))
        n1, i1 = mon[0]
        if k < 0 and (-k, gen) >= (n1, i1):
            return lc_single(((-k, gen),) + mon)
        rest = mon[1:]
        out = self._prepend(i1, n1, self._act(gen, k, rest))
        for l, c in self.data.bracket(gen, i1).items():
            lc_iadd(out, self._act(l, k - n1, rest), c)
        if k == n1:
            pr = self.data.pair(gen, i1)
            if pr:
                lc_iadd(out, lc_single(rest), Q(k) * pr * self.level_scalar)
        return out

    def _prepend(self, gen, n, comb):
        out = {}
        for m, c in comb.items():
            lc_iadd(out, self._act(gen, -n, m), c)
        return out

    def peel(self, mid):
        out = self._peel_memo.get(mid)
        if out is None and mid not in self._peel_memo:
            mon = self._id2mon[mid]
            if mon:
                n1, i1 = mon[0]
                out = (i1, 1, n1 - 1, self.mid(mon[1:]))
            self._peel_memo[mid] = out
        return out

    def translate_base(self, mid):
        return {}

    def trunc_bound(self, a_mid, c_mid):
        return self._levels[a_mid] + self._levels[c_mid]

    def base_nth(self, a_mid, n, c_mid):
        raise RuntimeError("all non-vacuum monomials peel in this space")

    def _sugawara(self):
        """Quadratic Virasoro element from a dual pair of bases."""
        d = self.data
        norm = 1 / (2 * (self.level_scalar + d.dual_coxeter))
        ginv = _inverse(d.form)
        out = {}
        for i in range(d.dim):
            for j in range(d.dim):
                c = ginv[i][j]
                if not c:
                    continue
                inner = self.act(j, -1, self.vacuum)
                for m, cm in inner.items():
                    lc_iadd(out, self.act(i, -1, m), norm * c * cm)
        return out

    def basis_monomials(self, max_degree, charge_box=None):
        dim = self.data.dim
        out = []

        def rec(prefix, remaining, cap):
            out.append(prefix)
            for n in range(min(cap[0], remaining), 0, -1):
                istart = cap[1] if n == cap[0] else dim - 1
                for i in range(istart, -1, -1):
                    rec(prefix + ((n, i),), remaining - n, (n, i))

        rec((), max_degree, (max_degree, dim - 1))
        out.sort(key=lambda m: (self._level(m), m))
        return out

    def mon_str(self, mon):
        return "".join("%s(-%d)" % (self.data.names[i], n) for n, i in mon) + "|1>"


def build_affine(data, level):
    """Affine vacuum space at the given level (Virasoro element installed
    away from the critical level)."""
    return AffineSpace(data, level)


def sugawara_omega(space):
    """The quadratic Virasoro element of an affine space."""
    if space.omega_state is None:
        raise ValueError("no Virasoro element (critical level or abelian "
                         "datum without normalization)")
    return space.omega_state


def _inverse(form):
    n = len(form)
    aug = [list(map(Q, form[i])) + [Q(1) if j == i else Q(0) for j in range(n)]
           for i in range(n)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise ValueError("bilinear form is degenerate")
    return [row[n:] for row in red]
