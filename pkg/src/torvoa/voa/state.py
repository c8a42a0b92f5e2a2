"""Space base class: interned monomials, states, generator actions.

A *state* is a dict {monomial id: nonzero scalar}.  Monomial ids are
per-space interned integers, so states hash-combine quickly and the
n-th-product cache keys stay small.  Concrete spaces implement:

    _degree(mon)        exact conformal weight (rational)
    _charge(mon)        lattice charge tuple (may be ())
    _level(mon)         integer grading above the top surface
    _act(gen, k, mon)   generator algebra mode applied to a monomial
    peel(mid)           leading-creation-operator factorization
    translate_base(mid) D on unpeelable monomials
    basis_monomials(...)

Everything is immutable after construction; all maps are pure, so the
memo tables never depend on call order.
"""

from ..scalars import Q
from ..lincomb import lc_iadd


class Space:
    charge_dim = 0

    def __init__(self):
        self._mon2id = {}
        self._id2mon = []
        self._degs = []
        self._charges = []
        self._levels = []
        self._act_memo = {}
        self._act_raw_memo = {}
        self._nth_memo = {}
        self._state2id = {}
        self._id2state = []
        self._translate_memo = {}
        self._peel_memo = {}

    # -- interning --------------------------------------------------------

    def mid(self, mon):
        i = self._mon2id.get(mon)
        if i is None:
            i = len(self._id2mon)
            self._mon2id[mon] = i
            self._id2mon.append(mon)
            self._degs.append(self._degree(mon))
            self._charges.append(self._charge(mon))
            self._levels.append(self._level(mon))
        return i

    def mon(self, mid):
        return self._id2mon[mid]

    def degree(self, mid):
        return self._degs[mid]

    def charge(self, mid):
        return self._charges[mid]

    def level(self, mid):
        return self._levels[mid]

    def state(self, mon, coef=1):
        c = Q(coef)
        return {self.mid(mon): c} if c else {}

    def sid(self, state):
        """Intern a whole state (used as an operator key)."""
        key = tuple(sorted(state.items()))
        i = self._state2id.get(key)
        if i is None:
            i = len(self._id2state)
            self._state2id[key] = i
            self._id2state.append(dict(state))
        return i

    def state_of(self, sid):
        return self._id2state[sid]

    # -- generator action ---------------------------------------------------

    def _act(self, gen, k, mon):
        """Memoized raw action; concrete spaces implement _act_raw."""
        key = (gen, k, mon)
        out = self._act_raw_memo.get(key)
        if out is None:
            out = self._act_raw(gen, k, mon)
            self._act_raw_memo[key] = out
        return out

    def act(self, gen, k, mid):
        """Generator mode on a monomial id, as a state {mid: coef}."""
        key = (gen, k, mid)
        out = self._act_memo.get(key)
        if out is None:
            raw = self._act(gen, k, self._id2mon[mid])
            out = {self.mid(m): c for m, c in raw.items()}
            self._act_memo[key] = out
        return out

    def act_many(self, gen, k, state, coef, out):
        """out += coef * gen(k) applied to a state; returns out."""
        memo = self._act_memo
        get = out.get
        for mid, c in state.items():
            key = (gen, k, mid)
            piece = memo.get(key)
            if piece is None:
                piece = self.act(gen, k, mid)
            f = coef * c
            for m2, c2 in piece.items():
                cur = get(m2)
                cur = f * c2 if cur is None else cur + f * c2
                if cur:
                    out[m2] = cur
                else:
                    del out[m2]
        return out

    def act_state(self, gen, k, state):
        out = {}
        for mid, c in state.items():
            lc_iadd(out, self.act(gen, k, mid), c)
        return out

    # -- defaults -------------------------------------------------------------

    def _charge(self, mon):
        return ()

    def gen_bound(self, mid):
        """Smallest B with act(gen, k, mid) = 0 for every gen and k >= B."""
        return self._levels[mid] + 1

    def min_degree(self, charge_box=None):
        """Lower bound for monomial degrees (0 except for coset modules)."""
        return 0

    def state_str(self, state):
        if not state:
            return "0"
        bits = []
        for mid, c in sorted(state.items(), key=lambda kv: self._id2mon[kv[0]]):
            bits.append("%s*%s" % (c, self.mon_str(self._id2mon[mid])))
        return " + ".join(bits)

    def mon_str(self, mon):
        return repr(mon)


def charges_in_box(dim, window):
    """All charge tuples with |m_i| <= window, lexicographically sorted."""
    import itertools
    return sorted(itertools.product(range(-window, window + 1), repeat=dim))
