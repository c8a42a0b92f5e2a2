"""Tensor products of spaces, with componentwise fields.

A monomial is a tuple of factor monomial ids; degrees add, the charge is
the concatenation of factor charges, and the Virasoro element is the sum
of the embedded factor Virasoro elements.  Generators are addressed as
(factor index, factor generator).

The n-th product distributes over factors as a finite convolution: the
mode budget n - (k-1) is split over factors, with each factor's range
clipped by its truncation bound.
"""

import itertools

from ..scalars import Q, ifloor
from ..lincomb import lc_iadd, lc_single
from .state import Space


class TensorSpace(Space):
    def __init__(self, factors):
        super().__init__()
        self._fbound_memo = {}
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = list(factors)
        self.charge_dim = sum(f.charge_dim for f in factors)
        if all(f.vacuum is not None for f in factors):
            self.vacuum = self.mid(tuple(f.vacuum for f in factors))
        else:
            self.vacuum = None
        self.top = self.vacuum
        self.op_vacuum = self.mid(tuple(f.op_vacuum for f in factors))
        self.omega_state = {}
        for idx, f in enumerate(self.factors):
            if f.omega_state:
                lc_iadd(self.omega_state, self.embed(idx, f.omega_state))
        self.rank = sum((f.rank or Q(0)) for f in self.factors)

    def _degree(self, mon):
        return sum(f.degree(mid) for f, mid in zip(self.factors, mon))

    def _level(self, mon):
        return sum(f.level(mid) for f, mid in zip(self.factors, mon))

    def _charge(self, mon):
        out = ()
        for f, mid in zip(self.factors, mon):
            out = out + f.charge(mid)
        return out

    def embed(self, idx, factor_state):
        """1 x ... x (factor state) x ... x 1 as a tensor state."""
        base = [f.op_vacuum for f in self.factors]
        out = {}
        for mid, c in factor_state.items():
            mon = tuple(mid if i == idx else base[i]
                        for i in range(len(self.factors)))
            out[self.mid(mon)] = c
        return out

    def embed_product(self, factor_states):
        """Tensor product of one state per factor."""
        out = {}
        for combo in itertools.product(*[list(s.items()) for s in factor_states]):
            mon = tuple(mid for mid, _ in combo)
            c = Q(1)
            for _, cc in combo:
                c *= cc
            lc_iadd(out, lc_single(self.mid(mon), c))
        return out

    # -- generator action --------------------------------------------------

    def _act_raw(self, gen, k, mon):
        idx, fgen = gen
        f = self.factors[idx]
        inner = f.act(fgen, k, mon[idx])
        out = {}
        for mid, c in inner.items():
            out[mon[:idx] + (mid,) + mon[idx + 1:]] = c
        return out

    def act(self, gen, k, mid):
        key = (gen, k, mid)
        out = self._act_memo.get(key)
        if out is None:
            raw = self._act_raw(gen, k, self._id2mon[mid])
            out = {self.mid(m): c for m, c in raw.items()}
            self._act_memo[key] = out
        return out

    def peel(self, mid):
        return None  # products distribute over factors instead

    def gen_bound(self, mid):
        mon = self._id2mon[mid]
        return max(f.gen_bound(m) for f, m in zip(self.factors, mon))

    def translate_base(self, mid):
        raise RuntimeError("tensor translation is handled factorwise")

    def trunc_bound(self, a_mid, c_mid):
        # mode budget n-(k-1) splits over factors, each capped at B_i - 1,
        # so the product first vanishes identically at n = sum B_i
        amon = self._id2mon[a_mid]
        cmon = self._id2mon[c_mid]
        total = 0
        for f, a, c in zip(self.factors, amon, cmon):
            total += f.trunc_bound(a, c)
        return total

    def factor_bounds(self, a_mid, c_mid):
        key = (a_mid, c_mid)
        out = self._fbound_memo.get(key)
        if out is None:
            amon = self._id2mon[a_mid]
            cmon = self._id2mon[c_mid]
            out = [f.trunc_bound(a, c)
                   for f, a, c in zip(self.factors, amon, cmon)]
            self._fbound_memo[key] = out
        return out

    def basis_monomials(self, max_degree, charge_box=None):
        mins = [f.min_degree(charge_box if f.charge_dim else None)
                for f in self.factors]
        lists = []
        for i, f in enumerate(self.factors):
            box = charge_box if f.charge_dim else None
            budget = max_degree - (sum(mins) - mins[i])
            lists.append(f.basis_monomials(ifloor(Q(budget)), box))
        out = []
        for combo in itertools.product(*lists):
            mids = tuple(f.mid(m) for f, m in zip(self.factors, combo))
            mon_deg = sum(f.degree(m) for f, m in zip(self.factors, mids))
            if mon_deg <= max_degree:
                out.append(mids)
        out.sort(key=lambda mon: (self._degree(mon),
                                  tuple(f.mon(m) for f, m in zip(self.factors, mon))))
        return out

    def mon_str(self, mon):
        return " (x) ".join(f.mon_str(f.mon(m)) for f, m in zip(self.factors, mon))
