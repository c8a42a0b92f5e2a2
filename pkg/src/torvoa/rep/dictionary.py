"""Symbol-to-operator dictionaries for the four target subalgebras.

Field conventions (exponent of z carried by the t_0-degree j):

    one-form k_0     coefficient of z^-j      ->  mode j-1 of its state
    k_a, currents,
    vector field d_a coefficient of z^-j-1    ->  mode j
    d_0 row, dhat    coefficient of z^-j-2    ->  mode j+1

The d_0 assignment folds the half-integer one-form counterterm of the
shifted energy-momentum field into the mode map, so callers address the
plain basis symbol t_0^j t^r d_0 directly.  In the divergence-free and
pure-lattice targets the corresponding counterterm is integral, matching
the d_0 |-> Id - omega_(1) special case at (j, r) = 0.

Operator states (everything the modes are taken of) are built once per
symbol and cached on the context.
"""

from ..scalars import Q, HALF
from ..lincomb import lc_iadd, lc_scale
from ..voa.kernel import ModeOp, nth_product
from ..voa.gln import psi1_coeffs


class DictionaryError(ValueError):
    pass


class ElementOp:
    """Linear combination of mode operators (one per symbol)."""

    def __init__(self, space, parts):
        self.space = space
        self.parts = list(parts)

    def apply(self, state):
        out = {}
        for coef, op in self.parts:
            lc_iadd(out, op.apply(state), coef)
        return out

    def apply_mon(self, mid):
        return self.apply({mid: Q(1)})


# -- operator states -----------------------------------------------------------


def _lat_state(ctx, osc, r):
    st = ctx.lattice.state((osc, tuple(r)))
    if ctx.space is ctx.lattice:
        return st
    return ctx.space.embed(ctx.lattice_idx, st)


def k0_state(ctx, r):
    return _lat_state(ctx, (), r)


def ka_state(ctx, a, r):
    return _lat_state(ctx, ((1, 0, a - 1),), r)


def g_state(ctx, i, r):
    states = []
    for idx, f in enumerate(ctx.space.factors):
        if idx == ctx.affine_idx:
            states.append(f.state(((1, i),)))
        elif idx == ctx.lattice_idx:
            states.append(f.state(((), tuple(r))))
        else:
            states.append({f.op_vacuum: Q(1)})
    return ctx.space.embed_product(states)


def _e_with_label(ctx, p, a, r, lat_osc=()):
    """(lattice monomial) x E_pa(-1), split across the matrix factors."""
    mc = ctx.mc
    out = {}
    lat = ctx.lattice.state((lat_osc, tuple(r)))
    if mc.sln is not None:
        idx, data = mc.sln
        f = ctx.space.factors[idx]
        for gi, c in psi1_coeffs(data, mc.N, p, a).items():
            states = []
            for j, fac in enumerate(ctx.space.factors):
                if j == ctx.lattice_idx:
                    states.append(lat)
                elif j == idx:
                    states.append(fac.state(((1, gi),), c))
                else:
                    states.append({fac.op_vacuum: Q(1)})
            lc_iadd(out, ctx.space.embed_product(states))
    if p == a and mc.scalar is not None:
        idx, gen = mc.scalar
        f = ctx.space.factors[idx]
        mon = ((), (1,)) if gen == "I" else ((1, gen),)
        states = []
        for j, fac in enumerate(ctx.space.factors):
            if j == ctx.lattice_idx:
                states.append(lat)
            elif j == idx:
                states.append(fac.state(mon, Q(1, mc.N)))
            else:
                states.append({fac.op_vacuum: Q(1)})
        lc_iadd(out, ctx.space.embed_product(states))
    return out


def da_state(ctx, a, r):
    out = _lat_state(ctx, ((1, 1, a - 1),), r)
    if ctx.mc is not None:
        for p in range(1, ctx.cfg.N + 1):
            if r[p - 1]:
                lc_iadd(out, _e_with_label(ctx, p, a, r), Q(r[p - 1]))
    return out


def d0_state(ctx, r):
    """omega_(-1) e^{r.u} plus the dressed matrix-current sum."""
    out = nth_product(ctx.space, ctx.space.omega_state, -1, k0_state(ctx, r))
    if ctx.mc is not None:
        for p in range(1, ctx.cfg.N + 1):
            if not r[p - 1]:
                continue
            for s in range(1, ctx.cfg.N + 1):
                lc_iadd(out,
                        _e_with_label(ctx, p, s, r, lat_osc=((1, 0, s - 1),)),
                        Q(r[p - 1]))
    return out


# -- symbol assignment ------------------------------------------------------------


def _sym_allowed(ctx, sym):
    kind, e, p = sym
    target = ctx.cfg.target
    if target == "exceptional" and kind == "g":
        return "currents do not act on the pure one-form/vector-field module"
    if kind == "d":
        if target == "gstar" and p == 0:
            return "the t_0-derivation row is outside this subalgebra"
        if target in ("gdiv", "exceptional") and e[p]:
            return ("vector-field symbols must be divergence free; use the "
                    "hatted combinations for e_a != 0")
    return None


def symbol_op(ctx, sym):
    """Mode operator for one Lie symbol (cached per context)."""
    cache = getattr(ctx, "_symbol_ops", None)
    if cache is None:
        cache = ctx._symbol_ops = {}
    op = cache.get(sym)
    if op is None:
        op = _symbol_op(ctx, sym)
        cache[sym] = op
    return op


def _symbol_op(ctx, sym):
    kind, e, p = sym
    j, r = e[0], e[1:]
    space = ctx.space
    c = ctx.cfg.c if ctx.cfg.target != "exceptional" else Q(1)
    if kind == "g":
        return ModeOp.nth(space, g_state(ctx, p, r), j)
    if kind == "k":
        if p == 0:
            return ModeOp.nth(space, k0_state(ctx, r), j - 1, c)
        return ModeOp.nth(space, ka_state(ctx, p, r), j, c)
    if p == 0:
        # counterterm coefficient: j + 1/2 on the mixed module, j + 1 in
        # the divergence-free pictures (the half shifts into the
        # embedded Virasoro weight)
        shift = (Q(j) + HALF) if ctx.cfg.target in ("full", "gstar") else Q(j + 1)
        op = ModeOp.nth(space, k0_state(ctx, r), j - 1, shift)
        return op + ModeOp.nth(space, d0_state(ctx, r), j + 1, -1)
    return ModeOp.nth(space, da_state(ctx, p, r), j)


def assign(ctx, sym):
    """Public symbol assignment with target legality checks."""
    why = _sym_allowed(ctx, sym)
    if why:
        raise DictionaryError("%r: %s" % (sym, why))
    return symbol_op(ctx, sym)


def assign_element(ctx, element):
    """Linear extension to canonical Lie elements, with legality checks."""
    target = ctx.cfg.target
    if target in ("gdiv", "exceptional"):
        d_part = {s: cc for s, cc in element.items() if s[0] == "d"}
        if not ctx.lie.is_divergence_free(d_part):
            raise DictionaryError("vector-field part is not divergence free")
    parts = []
    for sym, coef in sorted(element.items()):
        kind, e, p = sym
        if target == "exceptional" and kind == "g":
            raise DictionaryError("currents do not act on this module")
        if target == "gstar" and kind == "d" and p == 0:
            raise DictionaryError("the t_0-derivation row is outside this "
                                  "subalgebra")
        parts.append((coef, symbol_op(ctx, sym)))
    return ElementOp(ctx.space, parts)


def dhat_op(ctx, j, r, a):
    """Operator of the divergence-free hatted combination at (j, r)."""
    el = ctx.lie.dhat_element(j, r, a, ctx.cfg.c
                              if ctx.cfg.target != "exceptional" else 1)
    return assign_element(ctx, el)
