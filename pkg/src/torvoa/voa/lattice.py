"""Rank-2N hyperbolic-lattice spaces built on the isotropic half.

The lattice pairs (u_i|v_j) = delta_ij with both halves isotropic.  The
algebra part is generated by oscillators u_i(n), v_i(n) at Heisenberg
level 1; group-algebra labels are e^{m.u} for the lattice space itself
and e^{(alpha+m).u + beta.v} for the coset modules (alpha rational,
beta integral, m the running charge).  The two-cocycle on pairs
(u-lattice x anything appearing here) is identically +1, which is
asserted rather than assumed.

Monomials are (osc, m) with osc a weakly decreasing tuple of entries
(n, kind, i), kind 0 = u, 1 = v, and m the charge tuple.  Degrees are
exact weights: oscillator level plus (x|x)/2 of the full label.

Exponential operators e^{r.u} are evaluated mode by mode: the
annihilation half contracts v-oscillators (finitely many terms), the
creation half contributes one graded layer per output degree, and z^x
shifts the exponent by (r.u | label) = r.beta.
"""

import itertools

from ..scalars import Q, ZERO, ifloor
from ..lincomb import lc_iadd, lc_single
from .state import Space, charges_in_box


class LatticePlusSpace(Space):
    def __init__(self, N, alpha=None, beta=None):
        super().__init__()
        if N < 1:
            raise ValueError("N must be >= 1")
        self.N = N
        self.charge_dim = N
        self.alpha = tuple(Q(a) for a in (alpha or [0] * N))
        self.beta = tuple(int(b) for b in (beta or [0] * N))
        if len(self.alpha) != N or len(self.beta) != N:
            raise ValueError("alpha and beta must have length N")
        self.is_module = any(self.alpha) or any(self.beta)
        self._shift_memo = {}
        self._peel_memo = {}
        zero = tuple(0 for _ in range(N))
        self.vacuum = None if self.is_module else self.mid(((), zero))
        self.op_vacuum = self.mid(((), zero))
        self.top_label = zero
        # omega = sum_p u_p(-1) v_p(-1) e^0 (meaningful for the lattice
        # space itself; the module reuses the same operator state)
        om = {}
        for p in range(N):
            mon = (((1, 1, p), (1, 0, p)), zero)
            om[self.mid(mon)] = Q(1)
        self.omega_state = om
        self.rank = Q(2 * N)

    # -- labels ------------------------------------------------------------

    def label_u(self, m):
        """u-part of the full label at charge m: alpha + m."""
        return tuple(a + Q(x) for a, x in zip(self.alpha, m))

    def label_weight(self, m):
        """(x|x)/2 for x = (alpha+m).u + beta.v."""
        return sum(u * Q(b) for u, b in zip(self.label_u(m), self.beta))

    def _degree(self, mon):
        osc, m = mon
        return Q(sum(n for n, _, _ in osc)) + self.label_weight(m)

    def _level(self, mon):
        osc, _ = mon
        return sum(n for n, _, _ in osc)

    def _charge(self, mon):
        return mon[1]

    # -- oscillator action ----------------------------------------------------

    def _pair_gen_label(self, kind, i, m):
        """(x_gen | full label): u_i pairs beta_i, v_i pairs alpha_i + m_i."""
        if kind == 0:
            return Q(self.beta[i])
        return self.label_u(m)[i]

    def _act_raw(self, gen, k, mon):
        kind, i = gen
        osc, m = mon
        if k < 0:
            entry = (-k, kind, i)
            new = tuple(sorted(osc + (entry,), reverse=True))
            return lc_single((new, m))
        if k == 0:
            c = self._pair_gen_label(kind, i, m)
            return lc_single(mon, c) if c else {}
        out = {}
        other = 1 - kind
        for pos, (n, kk, ii) in enumerate(osc):
            if n == k and kk == other and ii == i:
                rest = osc[:pos] + osc[pos + 1:]
                lc_iadd(out, lc_single((rest, m), Q(k)))
        return out

    def peel(self, mid):
        out = self._peel_memo.get(mid)
        if out is None and mid not in self._peel_memo:
            osc, m = self._id2mon[mid]
            if osc:
                n, kind, i = osc[0]
                out = ((kind, i), 1, n - 1, self.mid((osc[1:], m)))
            self._peel_memo[mid] = out
        return out

    def translate_base(self, mid):
        osc, m = self._id2mon[mid]
        assert not osc
        out = {}
        for p, c in enumerate(self.label_u(m)):
            if c:
                lc_iadd(out, lc_single(((((1, 0, p),), m)), c))
        for p, b in enumerate(self.beta):
            if b:
                lc_iadd(out, lc_single(((((1, 1, p),), m)), Q(b)))
        return {self.mid(mm): cc for mm, cc in out.items()}

    def _beta_shift(self, a_mid):
        out = self._shift_memo.get(a_mid)
        if out is None:
            _, r = self.mon(a_mid)
            out = sum(x * b for x, b in zip(r, self.beta))
            self._shift_memo[a_mid] = out
        return out

    def trunc_bound(self, a_mid, c_mid):
        return (self._levels[a_mid] + self._levels[c_mid]
                - self._beta_shift(a_mid))

    # -- exponential operator modes ---------------------------------------------

    def base_nth(self, a_mid, n, c_mid):
        """(e^{r.u})_(n) applied to a module monomial, exactly."""
        osc_a, r = self.mon(a_mid)
        assert not osc_a
        osc_c, m = self.mon(c_mid)
        s0 = sum(x * b for x, b in zip(r, self.beta))  # z^x exponent (r.u|label)
        # cocycle value on (u-lattice, any label here) is +1 by the sign table
        new_m = tuple(x + y for x, y in zip(m, r))
        layers = self._annihilation_layers(osc_c, new_m, r)
        out = {}
        for q, layer in layers.items():
            p = q - int(s0) - n - 1
            if p < 0:
                continue
            for mon2, c2 in layer.items():
                lc_iadd(out, self._creation_layer(p, mon2, r), c2)
        return {self.mid(mm): cc for mm, cc in out.items()}

    def _annihilation_layers(self, osc, m, r):
        """exp(-sum_j (r.u)(j)/j z^-j) on a monomial, keyed by z^-q power.

        Each v_i(-n) factor is either kept or contracted once with
        coefficient -r_i (the 1/j from the exponent cancels the j from
        the bracket), so the expansion is a sum over subsets.
        """
        vs = [(pos, e) for pos, e in enumerate(osc) if e[1] == 1 and r[e[2]]]
        layers = {}
        for size in range(len(vs) + 1):
            for subset in itertools.combinations(vs, size):
                coef = Q(1)
                q = 0
                for _, (nn, _, ii) in subset:
                    coef *= Q(-r[ii])
                    q += nn
                drop = {pos for pos, _ in subset}
                rest = tuple(e for pos, e in enumerate(osc) if pos not in drop)
                layer = layers.setdefault(q, {})
                lc_iadd(layer, {(rest, m): coef})
        return layers

    def _creation_layer(self, p, mon, r):
        """Coefficient of z^p in exp(sum_j (r.u)(-j)/j z^j) applied to mon."""
        if p == 0:
            return {mon: Q(1)}
        key = ("creation", p, mon, r)
        out = self._nth_memo.get(key)
        if out is not None:
            return out
        acc = {}
        for j in range(1, p + 1):
            prev = self._creation_layer(p - j, mon, r)
            for mm, cc in prev.items():
                osc, m = mm
                for i, ri in enumerate(r):
                    if ri:
                        entry = (j, 0, i)
                        new = tuple(sorted(osc + (entry,), reverse=True))
                        lc_iadd(acc, {(new, m): cc * Q(ri)})
        out = {mm: cc / Q(p) for mm, cc in acc.items()}
        self._nth_memo[key] = out
        return out

    # -- enumeration ---------------------------------------------------------------

    def min_degree(self, charge_box=None):
        if charge_box is None:
            return 0
        if isinstance(charge_box, int):
            charge_box = charges_in_box(self.N, charge_box)
        return min(min(self.label_weight(tuple(m)) for m in charge_box), 0)

    def basis_monomials(self, max_degree, charge_box=None):
        if charge_box is None:
            raise ValueError("lattice spaces need a charge box to enumerate")
        if isinstance(charge_box, int):
            charge_box = charges_in_box(self.N, charge_box)
        out = []
        for m in charge_box:
            m = tuple(m)
            budget = Q(max_degree) - self.label_weight(m)
            if budget < 0:
                continue
            for osc in self._osc_monomials(ifloor(budget)):
                out.append((osc, m))
        out.sort(key=lambda mon: (self._degree(mon), mon))
        return out

    def _osc_monomials(self, budget):
        entries = []
        for n in range(budget, 0, -1):
            for kind in (1, 0):
                for i in range(self.N - 1, -1, -1):
                    entries.append((n, kind, i))
        entries.sort(reverse=True)
        out = []

        def rec(prefix, remaining, start):
            out.append(prefix)
            for idx in range(start, len(entries)):
                e = entries[idx]
                if e[0] <= remaining:
                    rec(prefix + (e,), remaining - e[0], idx)

        rec((), budget, 0)
        return out

    def mon_str(self, mon):
        osc, m = mon
        names = {0: "u", 1: "v"}
        bits = ["%s%d(-%d)" % (names[k], i + 1, n) for n, k, i in osc]
        label = ",".join(str(x) for x in m)
        return "".join(bits) + "e[%s]" % label


def build_lattice_plus(N, alpha=None, beta=None):
    """The rank-2N lattice space (alpha = beta = 0) or a coset module."""
    return LatticePlusSpace(N, alpha=alpha, beta=beta)
