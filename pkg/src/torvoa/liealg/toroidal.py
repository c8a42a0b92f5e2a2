"""Toroidal Lie algebra over Laurent polynomials in t_0..t_N.

Elements are sparse combinations of symbols

    ('g', e, i)   current  t^e (x) g_i
    ('k', e, p)   one-form t^e k_p        (k_p = t_p^{-1} dt_p)
    ('d', e, p)   vector field t^e d_p    (d_p = t_p d/dt_p)

where e is the full exponent multi-index (e_0, ..., e_N).  One-forms
live in the quotient by exact forms d(t^e) = sum_p e_p t^e k_p; the
canonical form eliminates, at each exponent e != 0, the k_p with the
smallest index p such that e_p != 0.  The derivation bracket is twisted
by the two-parameter cocycle family tau = mu*tau1 + nu*tau2.
"""

from ..scalars import Q, ZERO
from ..lincomb import lc_iadd, lc_scale


class ToroidalLie:
    def __init__(self, N, algebra, mu=0, nu=0):
        if N < 1:
            raise ValueError("N must be >= 1")
        self.N = N
        self.alg = algebra
        self.mu = Q(mu)
        self.nu = Q(nu)

    # -- symbol helpers -------------------------------------------------

    def current(self, e, i, coef=1):
        return self.canonicalize_k({("g", tuple(e), i): Q(coef)})

    def kform(self, e, p, coef=1):
        return self.canonicalize_k({("k", tuple(e), p): Q(coef)})

    def dfield(self, e, p, coef=1):
        return {("d", tuple(e), p): Q(coef)}

    def exact_form(self, e):
        """d(t^e) = sum_p e_p t^e k_p, NOT canonicalized (it is zero in K)."""
        e = tuple(e)
        return {("k", e, p): Q(ep) for p, ep in enumerate(e) if ep}

    # -- canonical form of the K-part -----------------------------------

    @staticmethod
    def _pivot(e):
        for p, ep in enumerate(e):
            if ep:
                return p
        return None

    def canonicalize_k(self, x):
        out = {}
        for sym, c in x.items():
            kind, e, p = sym
            if kind != "k":
                lc_iadd(out, {sym: c})
                continue
            piv = self._pivot(e)
            if piv is None or p != piv:
                lc_iadd(out, {sym: c})
                continue
            # t^e k_piv = -(1/e_piv) sum_{q != piv} e_q t^e k_q
            f = -c / Q(e[piv])
            repl = {("k", e, q): f * Q(eq)
                    for q, eq in enumerate(e) if q != piv and eq}
            lc_iadd(out, repl)
        return out

    # -- bracket ---------------------------------------------------------

    def _bracket_syms(self, s1, c1, s2, c2, out):
        kind1, e, a = s1
        kind2, f, b = s2
        coef = c1 * c2
        ef = tuple(x + y for x, y in zip(e, f))
        if kind1 == "k" and kind2 == "k":
            return
        if kind1 == "g" and kind2 == "k" or kind1 == "k" and kind2 == "g":
            return
        if kind1 == "g" and kind2 == "g":
            for k, v in self.alg.bracket(a, b).items():
                lc_iadd(out, {("g", ef, k): coef * v})
            pr = self.alg.pair(a, b)
            if pr:
                # central term (g1|g2) f2 d(f1)
                for q, eq in enumerate(e):
                    if eq:
                        lc_iadd(out, {("k", ef, q): coef * pr * Q(eq)})
            return
        if kind1 == "d" and kind2 == "g":
            if f[a]:
                lc_iadd(out, {("g", ef, b): coef * Q(f[a])})
            return
        if kind1 == "g" and kind2 == "d":
            self._bracket_syms(s2, -c2, s1, c1, out)
            return
        if kind1 == "d" and kind2 == "k":
            if f[a]:
                lc_iadd(out, {("k", ef, b): coef * Q(f[a])})
            if a == b:
                for q, eq in enumerate(e):
                    if eq:
                        lc_iadd(out, {("k", ef, q): coef * Q(eq)})
            return
        if kind1 == "k" and kind2 == "d":
            self._bracket_syms(s2, -c2, s1, c1, out)
            return
        # d--d with cocycle tau = mu*tau1 + nu*tau2
        if f[a]:
            lc_iadd(out, {("d", ef, b): coef * Q(f[a])})
        if e[b]:
            lc_iadd(out, {("d", ef, a): -coef * Q(e[b])})
        t1 = self.mu * Q(f[a]) * Q(e[b])
        t2 = self.nu * Q(e[a]) * Q(f[b])
        tc = coef * (t1 + t2)
        if tc:
            for p, fp in enumerate(f):
                if fp:
                    lc_iadd(out, {("k", ef, p): tc * Q(fp)})

    def bracket(self, x, y):
        out = {}
        for s1, c1 in x.items():
            for s2, c2 in y.items():
                self._bracket_syms(s1, c1, s2, c2, out)
        return self.canonicalize_k(out)

    def jacobi_residual(self, x, y, z):
        out = {}
        lc_iadd(out, self.bracket(x, self.bracket(y, z)))
        lc_iadd(out, self.bracket(y, self.bracket(z, x)))
        lc_iadd(out, self.bracket(z, self.bracket(x, y)))
        return out

    # -- divergence ------------------------------------------------------

    def divergence(self, x):
        """Divergence of a pure vector-field element, as {exponent: scalar}."""
        out = {}
        for (kind, e, p), c in x.items():
            if kind != "d":
                raise ValueError("divergence expects only vector-field terms")
            if e[p]:
                lc_iadd(out, {e: c * Q(e[p])})
        return out

    def is_divergence_free(self, x):
        d_part = {s: c for s, c in x.items() if s[0] == "d"}
        return not self.divergence(d_part)

    def dhat_element(self, j, r, a, c):
        """Divergence-free combination at exponent (j, r), direction a.

        -r_a t^e d_0 + (1/c) r_a (j+1) t^e k_0 + j t^e d_a with e = (j, r).
        """
        c = Q(c)
        if not c:
            raise ValueError("parameter c must be nonzero")
        if not 1 <= a <= self.N:
            raise ValueError("a must be in 1..N")
        e = (j,) + tuple(r)
        ra = Q(e[a])
        out = {}
        if ra:
            lc_iadd(out, self.dfield(e, 0), -ra)
            kc = ra * Q(j + 1) / c
            if kc:
                lc_iadd(out, {("k", e, 0): kc})
        if j:
            lc_iadd(out, self.dfield(e, a), Q(j))
        return self.canonicalize_k(out)

    # -- invariant bilinear form on the divergence-free subalgebra --------

    def invariant_form(self, x, y):
        for z in (x, y):
            d_part = {s: c for s, c in z.items() if s[0] == "d"}
            if self.divergence(d_part):
                raise ValueError(
                    "invariant form needs divergence-free vector-field parts")
        s = ZERO
        for (k1, e, a), c1 in x.items():
            for (k2, f, b), c2 in y.items():
                if any(u + v for u, v in zip(e, f)):
                    continue
                if k1 == "g" and k2 == "g":
                    s += c1 * c2 * self.alg.pair(a, b)
                elif (k1 == "d" and k2 == "k") or (k1 == "k" and k2 == "d"):
                    if a == b:
                        s += c1 * c2
        return s

    # -- graded blocks of the divergence-free subalgebra ------------------

    def gdiv_block(self, e):
        """Basis of the (j, r) = e graded piece of the form's domain.

        Currents, canonical one-forms, and divergence-free vector fields
        at exponent e, each as a canonical element.
        """
        e = tuple(e)
        out = [self.current(e, i) for i in range(self.alg.dim)]
        piv = self._pivot(e)
        for p in range(self.N + 1):
            if p != piv:
                out.append(self.kform(e, p))
        # vector fields sum_p a_p t^e d_p with sum_p a_p e_p = 0
        if piv is None:
            for p in range(self.N + 1):
                out.append(self.dfield(e, p))
        else:
            for p in range(self.N + 1):
                if p == piv:
                    continue
                vec = self.dfield(e, p, Q(e[piv]))
                if e[p]:
                    lc_iadd(vec, self.dfield(e, piv), -Q(e[p]))
                out.append(vec)
        return out

    def block_pairing_rank(self, e):
        """Rank of the pairing matrix between blocks at e and -e."""
        left = self.gdiv_block(e)
        right = self.gdiv_block(tuple(-x for x in e))
        rows = [[self.invariant_form(u, v) for v in right] for u in left]
        from ..linalg import rank
        return rank(rows), len(left)
