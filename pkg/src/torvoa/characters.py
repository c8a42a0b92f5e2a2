"""Graded-dimension comparisons: enumeration against closed formulas.

The enumerated side walks actual basis multisets (streaming, nothing
materialized beyond counters); the formula side is the exact q-series
engine.  Reports are row lists ready for CSV: one row per degree with
both values and a match flag.
"""

from .scalars import Q
from .lincomb import lc_iadd
from .qseries import eta_inverse_power, hvir_char
from .voa.kernel import nth_product


def count_colored_oscillators(colors, max_degree):
    """Dimensions of the free oscillator space on `colors` colors.

    Counts multisets of (mode, color) pairs, mode >= 1, by direct
    enumeration over weakly decreasing choices; returns per-degree
    counts 0..max_degree.
    """
    out = [0] * (max_degree + 1)
    entries = [(n, c) for n in range(max_degree, 0, -1)
               for c in range(colors - 1, -1, -1)]

    def rec(start, used):
        out[used] += 1
        for i in range(start, len(entries)):
            n = entries[i][0]
            if used + n <= max_degree:
                rec(i, used + n)

    rec(0, 0)
    return out


def lattice_fixed_charge_dims(N, max_degree):
    """Enumerated graded dimensions of the charge-zero slice (2N colors)."""
    return count_colored_oscillators(2 * N, max_degree)


def char_compare_rows(name, enumerated, series):
    """Rows (name, degree, enumerated, coefficient, match)."""
    rows = []
    coeffs = series.ints()
    for d, dim in enumerate(enumerated):
        rows.append({
            "series": name, "degree": d, "enumerated": dim,
            "coefficient": coeffs[d], "match": dim == coeffs[d],
        })
    return rows


def hyp_plus_character_report(N, max_degree):
    """Fixed-charge dimensions of the rank-2N lattice space vs the
    2N-fold inverse eta power."""
    dims = lattice_fixed_charge_dims(N, max_degree)
    series = eta_inverse_power(2 * N, max_degree)
    rows = char_compare_rows("eta^-%d" % (2 * N), dims, series)
    return {"rows": rows, "pass": all(r["match"] for r in rows)}


def hvir_vacuum_character_report(space, max_degree):
    """Vacuum-space dimensions against (1-q) * eta^-2."""
    dims = [0] * (max_degree + 1)
    for m in space.basis_monomials(max_degree):
        dims[space._level(m)] += 1
    rows = char_compare_rows("(1-q)*eta^-2", dims, hvir_char(1, max_degree))
    return {"rows": rows, "pass": all(r["match"] for r in rows)}


def verma_quotient_character_report(space, n, max_degree):
    """Irreducible-quotient dimensions against (1-q^n) * eta^-2."""
    from .voa.singular import quotient_dimensions
    dims = quotient_dimensions(space, max_degree)
    rows = char_compare_rows("(1-q^%d)*eta^-2" % n, dims,
                             hvir_char(n, max_degree))
    return {"rows": rows, "pass": all(r["match"] for r in rows)}


def d0_spectrum_report(ctx, max_degree, charge=None):
    """Eigenvalues of the assigned t_0-grading operator on a fixed charge.

    On the pure-lattice module the operator acts as Id - omega_(1); its
    eigenvalue on a degree-k vector must be 1 - k, with multiplicities
    given by the inverse eta power.
    """
    from .rep.dictionary import assign_element
    space = ctx.space
    N = ctx.cfg.N
    charge = tuple(charge or (0,) * N)
    op = assign_element(ctx, ctx.lie.dfield((0,) + (0,) * N, 0))
    if space is not ctx.lattice:
        raise ValueError("the spectrum check runs on the pure-lattice target")
    mons = ctx.lattice.basis_monomials(max_degree, [charge])
    spectrum = {}
    fails = []
    for m in mons:
        mid = space.mid(m)
        got = op.apply({mid: Q(1)})
        k = space.level(mid)
        eig = Q(1) - space.degree(mid)
        want = {mid: eig} if eig else {}
        if got != want:
            fails.append(space.mon_str(m))
        spectrum.setdefault(1 - k, 0)
        spectrum[1 - k] += 1
    series = eta_inverse_power(2 * N, max_degree).ints()
    ok = not fails and all(spectrum.get(1 - k, 0) == series[k]
                           for k in range(max_degree + 1))
    return {"spectrum": {str(e): n for e, n in sorted(spectrum.items())},
            "pass": ok, "failures": fails[:10]}
