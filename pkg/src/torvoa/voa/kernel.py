"""Mode calculus: n-th products, translation, mode operators.

The n-th product of states is computed by structural recursion.  On a
tensor space it distributes as a finite convolution over the factors.
Elsewhere the leading creation operator of the left argument is peeled
off and re-expressed through generator modes:

    (u_(-1-k) a)_(n) c = (-1)^k sum_j C(k+j, j) a_(n-1-k-j) u_(j) c
                       +        sum_j C(k+j, j) u_(-1-k-j) a_(n+j) c

which is the m = 0 slice of the cubic mode identity.  The recursion
bottoms out at the vacuum (identity field) or at a pure lattice label
(exponential operator).  Every value is exact and finitely supported;
results are memoized per (left monomial, mode, right monomial).
"""

from ..scalars import Q, binom
from ..lincomb import lc_iadd
from .tensor import TensorSpace


def nth_product_mon(space, a_mid, n, c_mid):
    """State a_(n) c for monomial ids a (operator side) and c."""
    key = (a_mid, n, c_mid)
    out = space._nth_memo.get(key)
    if out is not None:
        return out
    if a_mid == space.op_vacuum:
        out = {c_mid: Q(1)} if n == -1 else {}
    elif isinstance(space, TensorSpace):
        out = _tensor_nth(space, a_mid, n, c_mid)
    else:
        p = space.peel(a_mid)
        if p is None:
            out = space.base_nth(a_mid, n, c_mid)
        else:
            out = _peel_nth(space, p, n, c_mid)
    space._nth_memo[key] = out
    return out


def _peel_nth(space, peeled, n, c_mid):
    gen, w, kp, rest_mid = peeled
    out = {}
    get = out.get
    act = space.act
    sign = Q(-1) if kp % 2 else Q(1)
    # annihilation side: j runs while the generator mode can hit c
    jmax = space.gen_bound(c_mid) + w - 2  # natural mode j - w + 1 <= level
    for j in range(0, jmax + 1):
        uc = act(gen, j - w + 1, c_mid)
        if not uc:
            continue
        coef = sign * binom(kp + j, j)
        for mid, cc in uc.items():
            inner = nth_product_mon(space, rest_mid, n - 1 - kp - j, mid)
            if inner:
                f = coef * cc
                for k, v in inner.items():
                    c2 = get(k)
                    c2 = f * v if c2 is None else c2 + f * v
                    if c2:
                        out[k] = c2
                    else:
                        del out[k]
    # creation side: j runs while a_(n+j) c survives truncation
    jmax2 = space.trunc_bound(rest_mid, c_mid) - n - 1
    for j in range(0, jmax2 + 1):
        inner = nth_product_mon(space, rest_mid, n + j, c_mid)
        if not inner:
            continue
        coef = binom(kp + j, j)
        km = -kp - j - w
        for mid, cc in inner.items():
            f = coef * cc
            for k, v in act(gen, km, mid).items():
                c2 = get(k)
                c2 = f * v if c2 is None else c2 + f * v
                if c2:
                    out[k] = c2
                else:
                    del out[k]
    return out


def _tensor_nth(space, a_mid, n, c_mid):
    amon = space.mon(a_mid)
    cmon = space.mon(c_mid)
    factors = space.factors
    k = len(factors)
    bounds = space.factor_bounds(a_mid, c_mid)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i] - 1
    out = {}
    mid = space.mid

    def rec(i, budget, prefix, coef):
        # prefix: tuple of factor output mids fixed so far
        if i == k - 1:
            piece = nth_product_mon(factors[i], amon[i], budget, cmon[i])
            for fmid, c in piece.items():
                mon = prefix + (fmid,)
                key = mid(mon)
                cc = out.get(key)
                cc = coef * c if cc is None else cc + coef * c
                if cc:
                    out[key] = cc
                else:
                    del out[key]
            return
        lo = budget - suffix[i + 1]
        hi = bounds[i] - 1
        for p in range(lo, hi + 1):
            piece = nth_product_mon(factors[i], amon[i], p, cmon[i])
            for fmid, c in piece.items():
                rec(i + 1, budget - p, prefix + (fmid,), coef * c)

    rec(0, n - (k - 1), (), Q(1))
    return out


def nth_product(space, a_state, n, c_state):
    """Bilinear extension of the monomial-level product."""
    out = {}
    for a_mid, ca in a_state.items():
        for c_mid, cc in c_state.items():
            lc_iadd(out, nth_product_mon(space, a_mid, n, c_mid), ca * cc)
    return out


# -- translation --------------------------------------------------------------


def translate_mon(space, mid):
    out = space._translate_memo.get(mid)
    if out is not None:
        return out
    if isinstance(space, TensorSpace):
        mon = space.mon(mid)
        out = {}
        for idx, f in enumerate(space.factors):
            inner = translate_mon_factor(f, mon[idx])
            for fm, c in inner.items():
                out_mon = mon[:idx] + (fm,) + mon[idx + 1:]
                lc_iadd(out, {space.mid(out_mon): c})
    else:
        out = translate_mon_factor(space, mid)
    space._translate_memo[mid] = out
    return out


def translate_mon_factor(space, mid):
    p = space.peel(mid)
    if p is None:
        return space.translate_base(mid)
    gen, w, kp, rest_mid = p
    # [D, u_(m)] = -m u_(m-1) with m = -1-kp the leading VOA mode
    out = {}
    for mid2, c in space.act(gen, -kp - w - 1, rest_mid).items():
        lc_iadd(out, {mid2: c * Q(kp + 1)})
    inner = translate_mon(space, rest_mid)
    for mid2, c in inner.items():
        lc_iadd(out, space.act(gen, -kp - w, mid2), c)
    return out


def translate(space, state):
    out = {}
    for mid, c in state.items():
        lc_iadd(out, translate_mon(space, mid), c)
    return out


def translate_power(space, state, k):
    for _ in range(k):
        state = translate(space, state)
    return state


# -- mode operators -------------------------------------------------------------


class ModeOp:
    """Finite combination of field modes acting on one space's states.

    Terms:  ('nth', coef, sid, n)   the n-th mode of an operator state
            ('gen', coef, gen, k)   a generator algebra mode
            ('id',  coef)           a multiple of the identity
    """

    def __init__(self, space, terms):
        self.space = space
        self.terms = tuple(terms)
        self._memo = {}

    @classmethod
    def zero(cls, space):
        return cls(space, ())

    @classmethod
    def nth(cls, space, state, n, coef=1):
        c = Q(coef)
        if not c or not state:
            return cls.zero(space)
        return cls(space, (("nth", c, space.sid(state), n),))

    @classmethod
    def gen(cls, space, gen, k, coef=1):
        return cls(space, (("gen", Q(coef), gen, k),))

    @classmethod
    def ident(cls, space, coef=1):
        return cls(space, (("id", Q(coef)),))

    def __add__(self, other):
        assert self.space is other.space
        return ModeOp(self.space, self.terms + other.terms)

    def scaled(self, coef):
        c = Q(coef)
        out = []
        for t in self.terms:
            out.append((t[0], t[1] * c) + t[2:])
        return ModeOp(self.space, out)

    def apply_mon(self, mid):
        out = self._memo.get(mid)
        if out is not None:
            return out
        sp = self.space
        out = {}
        for t in self.terms:
            if t[0] == "nth":
                _, coef, sid, n = t
                for a_mid, ca in sp.state_of(sid).items():
                    lc_iadd(out, nth_product_mon(sp, a_mid, n, mid), coef * ca)
            elif t[0] == "gen":
                _, coef, gen, k = t
                lc_iadd(out, sp.act(gen, k, mid), coef)
            else:
                lc_iadd(out, {mid: t[1]})
        self._memo[mid] = out
        return out

    def apply(self, state):
        out = {}
        for mid, c in state.items():
            lc_iadd(out, self.apply_mon(mid), c)
        return out

    def graded_shift(self):
        """(degree shift, charge shift), asserting all terms agree."""
        sp = self.space
        shifts = set()
        for t in self.terms:
            if t[0] == "nth":
                _, _, sid, n = t
                for a_mid in sp.state_of(sid):
                    shifts.add((sp.level(a_mid) - n - 1, sp.charge(a_mid)))
            elif t[0] == "gen":
                shifts.add((-t[3], tuple(0 for _ in range(sp.charge_dim))))
            else:
                shifts.add((0, tuple(0 for _ in range(sp.charge_dim))))
        if len(shifts) != 1:
            raise ValueError("mode operator is not graded: shifts %s" % (shifts,))
        return shifts.pop()


def commutator_apply(op1, op2, state):
    """[op1, op2] applied to a state."""
    from ..lincomb import lc_sub
    return lc_sub(op1.apply(op2.apply(state)), op2.apply(op1.apply(state)))


def delta_expand(space, ope_terms, j, k):
    """Mode-level right side of a commutator from its singular part.

    ope_terms: iterable of (state, deriv_order, shift); the commutator of
    the j-th and k-th modes picks up C(j, n) (state)_(j+k-n-s) per term.
    """
    op = ModeOp.zero(space)
    for state, n, s in ope_terms:
        c = binom(j, n)
        if c and state:
            op = op + ModeOp.nth(space, state, j + k - n - s, c)
    return op


class ShiftedFieldSum:
    """Finite sum over shifts s of z^-s Y(a^s, z), with a weight offset.

    The mode j is read off as the coefficient of z^(-j-weight).
    z-derivatives are rewritten through the translation axiom before any
    mode is taken, so entries are plain shifted fields.
    """

    def __init__(self, space, weight):
        self.space = space
        self.weight = weight
        self.terms = {}

    def add(self, shift, state, coef=1):
        from ..lincomb import lc_iadd
        cur = self.terms.setdefault(shift, {})
        lc_iadd(cur, state, Q(coef))
        if not cur:
            del self.terms[shift]
        return self

    def add_z_derivative(self, shift, state, coef=1):
        """coef * z^-shift * (d/dz)Y(state, z) as a shifted field entry."""
        return self.add(shift, translate(self.space, state), coef)

    def mode(self, j):
        """Coefficient operator of z^(-j-weight)."""
        op = ModeOp.zero(self.space)
        for s, state in sorted(self.terms.items()):
            if state:
                op = op + ModeOp.nth(self.space, state,
                                     j + self.weight - s - 1)
        return op
