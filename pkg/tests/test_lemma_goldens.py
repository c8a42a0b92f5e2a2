"""Golden identities for the shipped spaces, every index in the window.

Each block pins the displayed values of one family of structural
relations: mixed Virasoro-Heisenberg modes, lattice vertex operators,
affine currents, matrix currents, and tensor-factor products.  Windows
are N <= 2 and |r_i|, |m_i| <= 2 throughout.
"""

import itertools

import pytest

from torvoa.scalars import Q
from torvoa.lincomb import lc_iadd, lc_scale, lc_sub, lc_add
from torvoa.liealg import sl2_data, sl3_data
from torvoa.voa import (HVirSpace, AffineSpace, LatticePlusSpace, TensorSpace,
                        nth_product, nth_product_mon, translate)
from torvoa.voa.gln import gln_space, gln_vir_space

CLI = Q(1, 2)


def om_mode(space, n, state):
    return nth_product(space, space.omega_state, n, state)


# -- mixed Virasoro-Heisenberg vacuum relations --------------------------------

class TestHeisenbergVirasoroModes:
    space = HVirSpace(9, CLI, 0)

    def i1(self):
        return self.space.state(((), (1,)))

    def test_omega0_is_translation(self):
        sp = self.space
        assert om_mode(sp, 0, self.i1()) == translate(sp, self.i1())
        assert om_mode(sp, 0, self.i1()) == sp.state(((), (2,)))

    def test_omega1_is_grading(self):
        assert om_mode(self.space, 1, self.i1()) == self.i1()

    def test_omega2_central(self):
        sp = self.space
        assert om_mode(sp, 2, self.i1()) == {sp.vacuum: -2 * CLI}

    def test_higher_modes_vanish(self):
        # degree counting kills j >= 3 (j = 2 is the central value above)
        for j in range(3, 7):
            assert om_mode(self.space, j, self.i1()) == {}


# -- lattice vertex operators ---------------------------------------------------

RM_WINDOW = [-2, -1, 0, 1, 2]


def lattice_cases(N):
    sp = LatticePlusSpace(N)
    charges = list(itertools.product(RM_WINDOW, repeat=N))
    return sp, charges


@pytest.mark.parametrize("N", [1, 2])
class TestLatticeOmega:
    def test_on_labels(self, N):
        sp, charges = lattice_cases(N)
        for m in charges:
            em = sp.state(((), m))
            want = {}
            for p, mp in enumerate(m):
                lc_iadd(want, sp.state((((1, 0, p),), m), mp))
            assert om_mode(sp, 0, em) == want
            assert translate(sp, em) == want
            for j in range(1, 4):
                assert om_mode(sp, j, em) == {}

    def test_on_u_oscillators(self, N):
        sp, charges = lattice_cases(N)
        for m in charges:
            for a in range(N):
                st = sp.state((((1, 0, a),), m))
                assert om_mode(sp, 0, st) == translate(sp, st)
                assert om_mode(sp, 1, st) == st
                for j in range(2, 5):
                    assert om_mode(sp, j, st) == {}

    def test_on_v_oscillators(self, N):
        sp, charges = lattice_cases(N)
        for m in charges:
            for a in range(N):
                st = sp.state((((1, 1, a),), m))
                assert om_mode(sp, 0, st) == translate(sp, st)
                assert om_mode(sp, 1, st) == st
                assert om_mode(sp, 2, st) == sp.state(((), m), m[a])
                for j in range(3, 5):
                    assert om_mode(sp, j, st) == {}


@pytest.mark.parametrize("N", [1, 2])
class TestLatticeExponentials:
    def test_products_of_labels(self, N):
        sp, charges = lattice_cases(N)
        for r in charges:
            er = sp.state(((), r))
            for m in charges:
                em = sp.state(((), m))
                rm = tuple(x + y for x, y in zip(r, m))
                assert nth_product(sp, er, -1, em) == sp.state(((), rm))
                for j in range(0, 3):
                    assert nth_product(sp, er, j, em) == {}

    def test_on_v_oscillator_states(self, N):
        sp, charges = lattice_cases(N)
        for r in charges:
            er = sp.state(((), r))
            der = translate(sp, er)
            for m in charges:
                rm = tuple(x + y for x, y in zip(r, m))
                for a in range(N):
                    vam = sp.state((((1, 1, a),), m))
                    assert nth_product(sp, er, 0, vam) == \
                        sp.state(((), rm), -r[a])
                    assert nth_product(sp, er, 1, vam) == {}
                    assert nth_product(sp, er, 2, vam) == {}
                    want = sp.state((((1, 1, a),), rm))
                    lc_iadd(want,
                            nth_product(sp, der, -1, sp.state(((), m))), -r[a])
                    assert nth_product(sp, er, -1, vam) == want

    def test_commute_past_omega(self, N):
        sp, charges = lattice_cases(N)
        om = sp.omega_state
        for r in [c for c in charges if any(c)][:6] + [tuple(0 for _ in range(N))]:
            er = sp.state(((), r))
            der = translate(sp, er)
            for m in charges[:5]:
                for a in range(N):
                    w = sp.state((((1, 1, a),), m))
                    for j in (-1, 0, 1):
                        for n in (0, 1, 2):
                            lhs = nth_product(sp, er, j, om_mode(sp, n, w))
                            rhs = om_mode(sp, n, nth_product(sp, er, j, w))
                            lc_iadd(rhs, nth_product(sp, der, n + j, w), -1)
                            assert lhs == rhs

    def test_dressed_exponentials_on_v(self, N):
        sp, charges = lattice_cases(N)
        for r in charges:
            der = translate(sp, sp.state(((), r)))
            for m in charges:
                rm = tuple(x + y for x, y in zip(r, m))
                for s in range(N):
                    use = sp.state((((1, 0, s),), r))
                    for a in range(N):
                        vam = sp.state((((1, 1, a),), m))
                        got0 = nth_product(sp, use, 0, vam)
                        want0 = sp.state((((1, 0, s),), rm), -r[a])
                        if s == a:
                            lc_iadd(want0,
                                    nth_product(sp, der, -1, sp.state(((), m))))
                        assert got0 == want0
                        got1 = nth_product(sp, use, 1, vam)
                        assert got1 == (sp.state(((), rm)) if s == a else {})
                        assert nth_product(sp, use, 2, vam) == {}
                        assert nth_product(sp, use, 3, vam) == {}

    def test_on_translated_v_states(self, N):
        sp, charges = lattice_cases(N)
        for r in charges:
            er = sp.state(((), r))
            for m in charges:
                rm = tuple(x + y for x, y in zip(r, m))
                for a in range(N):
                    dv = translate(sp, sp.state((((1, 1, a),), m)))
                    want0 = lc_scale(translate(sp, sp.state(((), rm))), -r[a])
                    assert nth_product(sp, er, 0, dv) == want0
                    assert nth_product(sp, er, 1, dv) == sp.state(((), rm), -r[a])


# -- affine currents --------------------------------------------------------------

@pytest.mark.parametrize("data,level", [
    (sl2_data(), 1), (sl2_data(), Q(3, 4)), (sl3_data(), 1), (sl3_data(), Q(2, 5)),
])
def test_affine_omega_on_currents(data, level):
    sp = AffineSpace(data, level)
    for i in range(data.dim):
        g = sp.state(((1, i),))
        assert om_mode(sp, 0, g) == translate(sp, g) == sp.state(((2, i),))
        assert om_mode(sp, 1, g) == g
        for j in range(2, 5):
            assert om_mode(sp, j, g) == {}


@pytest.mark.parametrize("data,level", [(sl2_data(), 1), (sl2_data(), Q(5, 7)),
                                        (sl3_data(), 2)])
def test_sugawara_rank(data, level):
    sp = AffineSpace(data, level)
    want = Q(level) * data.dim / (Q(level) + data.dual_coxeter)
    assert sp.rank == want
    om = sp.omega_state
    assert nth_product(sp, om, 3, om) == {sp.vacuum: want / 2}
    assert nth_product(sp, om, 2, om) == {}


# -- matrix currents ---------------------------------------------------------------

@pytest.mark.parametrize("N,c1,cI", [(1, 0, 0), (1, 1, 0), (2, 0, 0),
                                     (2, Q(2, 3), Q(5, 7))])
def test_matrix_current_products(N, c1, cI):
    mc = gln_space(N, c1, cI)
    sp = mc.space
    vac = {sp.vacuum: Q(1)}
    rng = range(1, N + 1)
    for a, b, c, d in itertools.product(rng, repeat=4):
        eab = mc.e_state(a, b)
        ecd = mc.e_state(c, d)
        got0 = nth_product(sp, eab, 0, ecd)
        want0 = {}
        if b == c:
            lc_iadd(want0, mc.e_state(a, d))
        if a == d:
            lc_iadd(want0, mc.e_state(c, b), -1)
        assert got0 == want0
        got1 = nth_product(sp, eab, 1, ecd)
        coef = Q(0)
        if a == d and b == c:
            coef += Q(c1)
        if a == b and c == d:
            coef += Q(cI) / N ** 2 - Q(c1) / N
        assert got1 == lc_scale(vac, coef)
        for j in (2, 3):
            assert nth_product(sp, eab, j, ecd) == {}


def test_psi1_traceless_projection():
    mc = gln_space(2, 1, 0)
    # E_11 - I/2 in the traceless factor: coefficient 1/2 on H1
    st = mc.psi1_state(1, 1)
    (mid, c), = st.items()
    assert c == Q(1, 2)


@pytest.mark.parametrize("N,c1", [(1, 0), (2, 0), (2, Q(1, 3))])
def test_matrix_currents_under_omega(N, c1):
    c_L, c_LI, c_I = Q(9), Q(N, 2), Q(0)
    mc = gln_vir_space(N, c1, c_L, c_LI, c_I)
    sp = mc.space
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            eab = mc.e_state(a, b)
            assert om_mode(sp, 0, eab) == translate(sp, eab)
            assert om_mode(sp, 1, eab) == eab
            want2 = {}
            if a == b:
                want2 = {sp.vacuum: -2 * c_LI / N}
            assert om_mode(sp, 2, eab) == want2
            for j in (3, 4):
                assert om_mode(sp, j, eab) == {}


def test_gln_vir_rank():
    mc = gln_vir_space(2, Q(1, 2), 7, 1, 0)
    assert mc.space.rank == Q(1, 2) * 3 / (Q(1, 2) + 2) + 7


# -- tensor factor products ----------------------------------------------------------

def test_tensor_factor_products():
    af = AffineSpace(sl2_data(), 1)
    hv = HVirSpace(9, CLI, 0)
    T = TensorSpace([af, hv])
    a = T.embed(0, af.state(((1, 0),)))
    b = T.embed(1, hv.state(((), (1,))))
    both = T.embed_product([af.state(((1, 0),)), hv.state(((), (1,)))])
    assert nth_product(T, a, -1, b) == both
    for n in range(0, 4):
        assert nth_product(T, a, n, b) == {}
    # when a annihilates c from mode 0 up, products factor through
    # negative a-modes against b-modes
    aaf = af.state(((1, 0),))     # e(-1): all nonnegative modes kill it
    caf = af.state(((1, 0),))
    for j in range(0, 5):
        assert nth_product(af, aaf, j, caf) == {}
    c = T.embed(0, caf)
    d = T.embed(1, hv.state(((2,), ())))
    ab = nth_product(T, a, -1, b)   # e(-1) x I(-1)
    cd = nth_product(T, c, -1, d)   # e(-1) x L(-2)
    for n in range(-2, 4):
        got = nth_product(T, ab, n, cd)
        want = {}
        for j in range(0, 9):
            right = nth_product(hv, hv.state(((), (1,))), n + j,
                                hv.state(((2,), ())))
            if right:
                left = nth_product(af, aaf, -1 - j, caf)
                lc_iadd(want, T.embed_product([left, right]))
        assert got == want
