import pytest

from torvoa.scalars import Q
from torvoa.characters import (count_colored_oscillators,
                               lattice_fixed_charge_dims,
                               hyp_plus_character_report,
                               hvir_vacuum_character_report,
                               verma_quotient_character_report,
                               d0_spectrum_report)
from torvoa.qseries import eta_inverse_power
from torvoa.rep import RepConfig
from torvoa.voa.hvir import HVirSpace
from torvoa.voa.lattice import LatticePlusSpace


def test_counter_matches_materialized_enumeration():
    # the streaming counter agrees with the actual basis enumeration
    for N, deg in [(1, 6), (2, 4)]:
        sp = LatticePlusSpace(N)
        zero = tuple(0 for _ in range(N))
        mons = sp.basis_monomials(deg, [zero])
        dims = [0] * (deg + 1)
        for m in mons:
            dims[sp._level(m)] += 1
        assert dims == count_colored_oscillators(2 * N, deg)


def test_counter_matches_series():
    for colors in (2, 4, 24):
        assert count_colored_oscillators(colors, 5) == \
            eta_inverse_power(colors, 5).ints()


def test_rank12_fixed_charge_dimensions():
    dims = lattice_fixed_charge_dims(12, 6)
    assert dims == [1, 24, 324, 3200, 25650, 176256, 1073720]


def test_hyp_plus_report():
    rep = hyp_plus_character_report(12, 6)
    assert rep["pass"]
    assert [r["enumerated"] for r in rep["rows"]][:3] == [1, 24, 324]


def test_hvir_vacuum_report():
    rep = hvir_vacuum_character_report(HVirSpace(9, Q(1, 2), 0), 6)
    assert rep["pass"]
    assert [r["coefficient"] for r in rep["rows"]] == [1, 1, 3, 5, 10, 16, 29]


@pytest.mark.parametrize("ratio,n", [(2, 1), (3, 2)])
def test_verma_quotient_report(ratio, n):
    sp = HVirSpace(9, 1, 0, mode="verma", h=Q(2, 3), h_I=ratio)
    rep = verma_quotient_character_report(sp, n, 6)
    assert rep["pass"]


def test_d0_spectrum():
    ctx = RepConfig(target="exceptional", N=12, active_coords=2).build()
    rep = d0_spectrum_report(ctx, 2)
    assert rep["pass"]
    assert rep["spectrum"] == {"-1": 324, "0": 24, "1": 1}


def test_d0_spectrum_nonzero_charge():
    ctx = RepConfig(target="exceptional", N=12, active_coords=2).build()
    rep = d0_spectrum_report(ctx, 2, charge=(1, -1) + (0,) * 10)
    assert rep["pass"]
