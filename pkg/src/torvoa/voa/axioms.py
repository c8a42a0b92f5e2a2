"""Axiom and identity harness for a constructed vacuum space.

Unary checks (vacuum behavior, omega_(0) = D, omega_(1) = grading) run
over every basis state to the cutoff.  Pairwise and triple identities
(skew symmetry, derivation rule, translation covariance, commutator
consistency) run over seeded deterministic samples, so a report is
reproducible given (space, cutoff, samples, seed).
"""

import random

from ..scalars import Q, binom
from ..lincomb import lc_iadd, lc_scale, lc_sub
from .kernel import (nth_product, nth_product_mon, translate,
                     translate_power)


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


class AxiomReport:
    def __init__(self):
        self.checks = {}

    def record(self, name, ok, detail=None):
        entry = self.checks.setdefault(name, {"cases": 0, "failures": []})
        entry["cases"] += 1
        if not ok:
            entry["failures"].append(detail or "")

    @property
    def passed(self):
        return all(not e["failures"] for e in self.checks.values())

    def summary(self):
        return {name: {"cases": e["cases"], "failures": e["failures"][:20],
                       "failure_count": len(e["failures"])}
                for name, e in sorted(self.checks.items())}


def check_axioms(space, max_degree, samples=200, seed=0, charge_box=None,
                 mode_window=2, commutator_degree=None):
    """Run the axiom suite; returns an AxiomReport.

    The commutator-consistency triples act on states up to
    ``commutator_degree`` (defaults to the full cutoff); everything else
    samples from the full window.
    """
    if space.vacuum is None:
        raise ValueError("axiom suite needs a vacuum space")
    if space.charge_dim and charge_box is None:
        charge_box = 1
    basis = [space.mid(m) for m in space.basis_monomials(max_degree, charge_box)]
    if commutator_degree is None:
        comm_basis = basis
    else:
        comm_basis = [m for m in basis
                      if space.level(m) <= commutator_degree]
    rep = AxiomReport()
    rng = random.Random(seed)
    vac = space.vacuum

    def sample_tuples(arity, count, pool=None):
        pool = pool or basis
        out = []
        for _ in range(count):
            out.append(tuple(rng.choice(pool) for _ in range(arity)))
        return out

    def st(mid):
        return {mid: Q(1)}

    # vacuum as identity field and self-replication
    for a in basis:
        ok = nth_product_mon(space, vac, -1, a) == st(a)
        ok = ok and not nth_product_mon(space, vac, 0, a)
        rep.record("vacuum.identity-field", ok, space.mon_str(space.mon(a)))
        ok = nth_product_mon(space, a, -1, vac) == st(a)
        for n in range(0, space.level(a) + 1):
            ok = ok and not nth_product_mon(space, a, n, vac)
        ok = ok and nth_product_mon(space, a, -2, vac) == translate(space, st(a))
        rep.record("vacuum.self-replication", ok, space.mon_str(space.mon(a)))

    # omega modes against D and the grading
    om = space.omega_state
    if om:
        for a in basis:
            got0 = {}
            got1 = {}
            for o_mid, oc in om.items():
                lc_iadd(got0, nth_product_mon(space, o_mid, 0, a), oc)
                lc_iadd(got1, nth_product_mon(space, o_mid, 1, a), oc)
            rep.record("omega.translation", got0 == translate(space, st(a)),
                       space.mon_str(space.mon(a)))
            rep.record("omega.grading",
                       got1 == lc_scale(st(a), space.degree(a)),
                       space.mon_str(space.mon(a)))

    # truncation at the degree bound
    for a, b in sample_tuples(2, samples):
        bound = space.trunc_bound(a, b)
        ok = not nth_product_mon(space, a, bound, b)
        ok = ok and not nth_product_mon(space, a, bound + 1, b)
        rep.record("grading.truncation", ok,
                   "%s , %s" % (space.mon_str(space.mon(a)), space.mon_str(space.mon(b))))

    # deg(a_(n) b) = deg a + deg b - n - 1 on homogeneous outputs
    for a, b in sample_tuples(2, samples // 2):
        for n in range(-mode_window, space.trunc_bound(a, b)):
            out = nth_product_mon(space, a, n, b)
            want = space.level(a) + space.degree(b) - n - 1
            ok = all(space.degree(m) == want for m in out)
            rep.record("grading.nth-degree", ok, "n=%d" % n)

    # skew symmetry
    for a, b in sample_tuples(2, samples):
        top = space.trunc_bound(a, b)
        for n in range(-2, top + 1):
            lhs = nth_product_mon(space, a, n, b)
            rhs = {}
            j = 0
            while n + j < space.trunc_bound(b, a):
                term = nth_product_mon(space, b, n + j, a)
                if term:
                    term = translate_power(space, term, j)
                    sign = Q(-1) if (n + j + 1) % 2 else Q(1)
                    lc_iadd(rhs, term, sign / _fact(j))
                j += 1
            rep.record("skew-symmetry", lhs == rhs,
                       "n=%d : %s , %s" % (n, space.mon_str(space.mon(a)),
                                           space.mon_str(space.mon(b))))

    # derivation rule and translation covariance
    for a, b in sample_tuples(2, samples):
        for n in range(-2, space.trunc_bound(a, b)):
            prod = nth_product_mon(space, a, n, b)
            lhs = translate(space, prod)
            rhs = nth_product(space, translate(space, st(a)), n, st(b))
            lc_iadd(rhs, nth_product(space, st(a), n, translate(space, st(b))))
            rep.record("translation.derivation", lhs == rhs, "n=%d" % n)
            # (Da)_(n) = -n a_(n-1)
            got = nth_product(space, translate(space, st(a)), n, st(b))
            want = lc_scale(nth_product_mon(space, a, n - 1, b), -n)
            rep.record("translation.mode-shift", got == want, "n=%d" % n)
        # a_(-1-k) = (1/k!) (D^k a)_(-1)
        for k in (1, 2):
            lhs = nth_product_mon(space, a, -1 - k, b)
            rhs = lc_scale(nth_product(space, translate_power(space, st(a), k),
                                       -1, st(b)), Q(1, _fact(k)))
            rep.record("translation.negative-modes", lhs == rhs, "k=%d" % k)

    # commutator formula consistency
    for a, b, c in sample_tuples(3, samples, pool=comm_basis):
        products = {}
        for j in range(0, space.trunc_bound(a, b)):
            pj = nth_product_mon(space, a, j, b)
            if pj:
                products[j] = pj
        for n in range(-mode_window, mode_window + 1):
            for m in range(-mode_window, mode_window + 1):
                direct = {}
                for mid, cc in nth_product_mon(space, b, m, c).items():
                    lc_iadd(direct, nth_product_mon(space, a, n, mid), cc)
                for mid, cc in nth_product_mon(space, a, n, c).items():
                    lc_iadd(direct, nth_product_mon(space, b, m, mid), -cc)
                expansion = {}
                for j, pj in products.items():
                    coef = binom(n, j)
                    if coef:
                        lc_iadd(expansion,
                                nth_product(space, pj, n + m - j, st(c)), coef)
                rep.record("commutator-formula", direct == expansion,
                           "n=%d m=%d" % (n, m))
    return rep

