"""Seeded batch checks for the bracket oracle: Jacobi, antisymmetry,
form invariance, and graded-block nondegeneracy of the pairing."""

import itertools
import random

from ..scalars import Q
from ..lincomb import lc_iadd, lc_scale
from .simple import preset
from .toroidal import ToroidalLie


def _random_element(t, rng, nterms=3, window=2):
    out = {}
    for _ in range(nterms):
        kind = rng.choice(["g", "k", "d"])
        e = tuple(rng.randint(-window, window) for _ in range(t.N + 1))
        if kind == "g":
            piece = t.current(e, rng.randrange(t.alg.dim))
        elif kind == "k":
            piece = t.kform(e, rng.randrange(t.N + 1))
        else:
            piece = t.dfield(e, rng.randrange(t.N + 1))
        lc_iadd(out, lc_scale(piece, Q(rng.randint(-3, 3), rng.randint(1, 3))))
    return t.canonicalize_k(out)


def _random_gdiv_element(t, rng, window=2):
    out = {}
    for _ in range(3):
        e = tuple(rng.randint(-window, window) for _ in range(t.N + 1))
        block = t.gdiv_block(e)
        piece = block[rng.randrange(len(block))]
        lc_iadd(out, lc_scale(piece, Q(rng.randint(-3, 3), rng.randint(1, 2))))
    return t.canonicalize_k(out)


def lie_check(N, mu, nu, algebra="sl2", samples=200, seed=0, window=2,
              block_window=2):
    """Run the bracket-oracle suite; returns a result dict."""
    t = ToroidalLie(N, preset(algebra), mu=mu, nu=nu)
    rng = random.Random(seed)
    rows = {}

    def record(tag, ok):
        entry = rows.setdefault(tag, {"cases": 0, "failures": 0})
        entry["cases"] += 1
        if not ok:
            entry["failures"] += 1

    for _ in range(samples):
        x = _random_element(t, rng, window=window)
        y = _random_element(t, rng, window=window)
        z = _random_element(t, rng, window=window)
        record("antisymmetry",
               t.bracket(x, y) == lc_scale(t.bracket(y, x), -1)
               and t.bracket(x, x) == {})
        record("jacobi", t.jacobi_residual(x, y, z) == {})
        record("canonical-idempotent",
               t.canonicalize_k(t.canonicalize_k(x)) == t.canonicalize_k(x))

    for _ in range(samples):
        x = _random_gdiv_element(t, rng, window=window)
        y = _random_gdiv_element(t, rng, window=window)
        z = _random_gdiv_element(t, rng, window=window)
        lhs = t.invariant_form(t.bracket(x, y), z)
        rhs = t.invariant_form(x, t.bracket(y, z))
        record("form-invariance", lhs == rhs)
        # exact one-form kernel: pairing with d(t^e) vanishes raw
        e = tuple(rng.randint(-window, window) for _ in range(t.N + 1))
        record("form-kernel", t.invariant_form(x, t.exact_form(e)) == 0)

    blocks = 0
    degenerate = []
    for e in itertools.product(range(-block_window, block_window + 1),
                               repeat=N + 1):
        r, dim = t.block_pairing_rank(e)
        blocks += 1
        if r != dim:
            degenerate.append(e)
    rows["block-pairing"] = {"cases": blocks, "failures": len(degenerate)}
    ok = all(v["failures"] == 0 for v in rows.values())
    return {"N": N, "mu": str(Q(mu)), "nu": str(Q(nu)), "algebra": algebra,
            "samples": samples, "seed": seed, "rows": rows, "pass": ok}
