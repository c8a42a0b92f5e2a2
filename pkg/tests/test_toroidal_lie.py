import random

import pytest

from torvoa.scalars import Q
from torvoa.lincomb import lc_iadd, lc_scale, lc_add, lc_sub
from torvoa.liealg import ToroidalLie, sl2_data, sl3_data, sln_data, AlgebraDataError
from torvoa.liealg.simple import SimpleAlgebraData


def sl2_tor(N=1, mu=1, nu=0):
    return ToroidalLie(N, sl2_data(), mu=mu, nu=nu)


# -- sanity of the preset algebra data ---------------------------------

def test_sl2_data_validates():
    d = sl2_data()
    assert d.dim == 3
    assert d.bracket(0, 2) == {1: Q(1)}          # [e,f] = h
    assert d.bracket(1, 0) == {0: Q(2)}          # [h,e] = 2e
    assert d.pair(1, 1) == 2 and d.pair(0, 2) == 1


def test_sl3_data_validates():
    d = sl3_data()
    assert d.dim == 8
    assert d.dual_coxeter == 3
    # longest-root normalization: (E12+E21 direction) gives (theta|theta)=2
    i12 = d.names.index("E1_2")
    i21 = d.names.index("E2_1")
    assert d.pair(i12, i21) == 1


def test_bad_structure_constants_rejected():
    # [e,h] = -2e + f breaks Jacobi/invariance
    br = {(0, 1): {0: Q(-2), 2: Q(1)}, (0, 2): {1: Q(1)}, (1, 2): {2: Q(-2)}}
    form = [[0, 0, 1], [0, 2, 0], [1, 0, 0]]
    with pytest.raises(AlgebraDataError):
        SimpleAlgebraData("bad", ["e", "h", "f"], br, form, 2)


# -- canonical K form ---------------------------------------------------

def test_exact_form_canonicalizes_to_zero():
    t = sl2_tor()
    # d(t_0 t_1) = t_0 t_1 k_0 + t_0 t_1 k_1
    assert t.canonicalize_k(t.exact_form((1, 1))) == {}


def test_pivot_elimination():
    t = sl2_tor()
    # t_0 t_1 k_0 -> -t_0 t_1 k_1 (pivot p*=0)
    assert t.kform((1, 1), 0) == {("k", (1, 1), 1): Q(-1)}
    # zero exponent: k_p unchanged
    assert t.kform((0, 0), 0) == {("k", (0, 0), 0): Q(1)}
    # idempotent
    x = t.kform((1, 1), 0)
    assert t.canonicalize_k(x) == x


# -- bracket instances straight from the defining formulas --------------

def test_d_on_current():
    t = ToroidalLie(2, sl2_data(), mu=1)
    x = t.dfield((0, 1, 0), 1)
    y = t.current((0, 2, 1), 0)
    assert t.bracket(x, y) == {("g", (0, 3, 1), 0): Q(2)}


def test_d_d_with_cocycle():
    t = sl2_tor(mu=1, nu=0)
    x = t.dfield((0, 1), 1)    # t_1 d_1
    y = t.dfield((0, -1), 1)   # t_1^{-1} d_1
    got = t.bracket(x, y)
    want = lc_add(t.dfield((0, 0), 1, -2), t.kform((0, 0), 1))
    assert got == want


def test_current_current_central_term():
    t = sl2_tor()
    # [t^e e, t^{-e} f] = h + (e|f) d-term; with e=(1,0): k_0 coefficient 1
    x = t.current((1, 0), 0)
    y = t.current((-1, 0), 2)
    got = t.bracket(x, y)
    want = lc_add(t.current((0, 0), 1), t.kform((0, 0), 0))
    assert got == want


def random_element(t, rng, nterms=3, window=2):
    out = {}
    kinds = ["g", "k", "d"]
    for _ in range(nterms):
        kind = rng.choice(kinds)
        e = tuple(rng.randint(-window, window) for _ in range(t.N + 1))
        if kind == "g":
            idx = rng.randrange(t.alg.dim)
            piece = t.current(e, idx)
        elif kind == "k":
            piece = t.kform(e, rng.randrange(t.N + 1))
        else:
            piece = t.dfield(e, rng.randrange(t.N + 1))
        lc_iadd(out, lc_scale(piece, Q(rng.randint(-3, 3), rng.randint(1, 3))))
    return t.canonicalize_k(out)


@pytest.mark.parametrize("N,mu,nu", [(1, 1, 0), (1, 2, 3), (2, 1, 0), (2, 2, 3), (3, 0, 1)])
def test_antisymmetry_and_jacobi_sampled(N, mu, nu):
    t = ToroidalLie(N, sl2_data(), mu=mu, nu=nu)
    rng = random.Random(1234 + N + 10 * int(mu) + 100 * int(nu))
    for _ in range(60):
        x = random_element(t, rng)
        y = random_element(t, rng)
        z = random_element(t, rng)
        assert t.bracket(x, y) == lc_scale(t.bracket(y, x), -1)
        assert t.bracket(x, x) == {}
        assert t.jacobi_residual(x, y, z) == {}


def test_bracket_grading():
    t = sl2_tor()
    x = t.dfield((2, -1), 0)
    y = t.current((1, 1), 1)
    for (kind, e, p) in t.bracket(x, y):
        assert e == (3, 0)


# -- divergence and dhat -------------------------------------------------

def test_divergence_basics():
    t = ToroidalLie(2, sl2_data(), mu=1)
    assert t.is_divergence_free(t.dfield((0, 0, 0), 1))
    x = t.dfield((0, 1, 0), 1)   # t_1 d_1
    assert t.divergence(x) == {(0, 1, 0): Q(1)}
    assert not t.is_divergence_free(x)
    with pytest.raises(ValueError):
        t.divergence(t.current((0, 0, 0), 0))


def test_dhat_element():
    t = sl2_tor()
    assert t.dhat_element(0, (0,), 1, 1) == {}
    got = t.dhat_element(1, (1,), 1, 1)
    raw = {("d", (1, 1), 0): Q(-1), ("k", (1, 1), 0): Q(2), ("d", (1, 1), 1): Q(1)}
    assert got == t.canonicalize_k(raw)
    t2 = ToroidalLie(2, sl2_data(), mu=1)
    el = t2.dhat_element(2, (1, 0), 1, 1)
    d_part = {s: c for s, c in el.items() if s[0] == "d"}
    assert t2.divergence(d_part) == {}
    with pytest.raises(ValueError):
        t.dhat_element(1, (1,), 1, 0)


# -- invariant form -------------------------------------------------------

def test_form_current_pairing():
    t = sl2_tor()
    x = t.current((1, -2), 0)
    y = t.current((-1, 2), 2)
    assert t.invariant_form(x, y) == 1         # (e|f)
    assert t.invariant_form(x, t.current((1, 2), 2)) == 0


def test_form_kernel_property_before_canonicalization():
    t = ToroidalLie(2, sl2_data(), mu=1)
    x = lc_add(t.dfield((0, 1, -1), 1), t.dfield((0, 1, -1), 2))  # div-free
    raw = t.exact_form((0, -1, 1))
    assert t.invariant_form(x, raw) == 0


def test_form_k_k_zero():
    t = ToroidalLie(2, sl2_data(), mu=1)
    assert t.invariant_form(t.kform((0, 0, 0), 1), t.kform((0, 0, 0), 2)) == 0


def test_form_rejects_nondivfree():
    t = sl2_tor()
    with pytest.raises(ValueError):
        t.invariant_form(t.dfield((0, 1), 1), t.kform((0, -1), 1))


def random_gdiv_element(t, rng, window=2):
    out = {}
    for _ in range(3):
        e = tuple(rng.randint(-window, window) for _ in range(t.N + 1))
        block = t.gdiv_block(e)
        piece = block[rng.randrange(len(block))]
        lc_iadd(out, lc_scale(piece, Q(rng.randint(-3, 3), rng.randint(1, 2))))
    return t.canonicalize_k(out)


@pytest.mark.parametrize("N", [1, 2])
def test_form_invariance_on_gdiv(N):
    t = ToroidalLie(N, sl2_data(), mu=1)
    rng = random.Random(77 + N)
    for _ in range(40):
        x = random_gdiv_element(t, rng)
        y = random_gdiv_element(t, rng)
        z = random_gdiv_element(t, rng)
        lhs = t.invariant_form(t.bracket(x, y), z)
        rhs = t.invariant_form(x, t.bracket(y, z))
        assert lhs == rhs


@pytest.mark.parametrize("N", [1, 2])
def test_block_nondegeneracy(N):
    t = ToroidalLie(N, sl2_data(), mu=1)
    exps = range(-2, 3)
    import itertools
    for e in itertools.product(exps, repeat=N + 1):
        r, dim = t.block_pairing_rank(e)
        assert r == dim, "degenerate block at %s" % (e,)


def test_nu_irrelevant_on_divergence_free():
    # tau2 trivializes on the divergence-free subalgebra
    t0 = ToroidalLie(2, sl2_data(), mu=1, nu=0)
    t5 = ToroidalLie(2, sl2_data(), mu=1, nu=5)
    rng = random.Random(9)
    for _ in range(25):
        x = random_gdiv_element(t0, rng)
        y = random_gdiv_element(t0, rng)
        assert t0.bracket(x, y) == t5.bracket(x, y)


def test_gdiv_closed_under_bracket():
    t = ToroidalLie(2, sl2_data(), mu=1)
    rng = random.Random(21)
    for _ in range(30):
        x = random_gdiv_element(t, rng)
        y = random_gdiv_element(t, rng)
        z = t.bracket(x, y)
        d_part = {s: c for s, c in z.items() if s[0] == "d"}
        assert t.divergence(d_part) == {}


# -- LinComb utilities (shared plumbing) ---------------------------------

def test_lincomb_canonicity():
    a = {"x": Q(1)}
    assert lc_sub(a, a) == {}
    assert lc_scale(lc_scale({"b": Q(1, 2)}, 2), 1) == {"b": Q(1)}
    assert lc_add(lc_add(a, {"y": Q(1)}), lc_sub(a, {"y": Q(1)})) == {"x": Q(2)}
