"""Matrix-current states inside tensor spaces.

The rank-N matrix algebra splits into traceless and scalar parts; the
scalar direction is identified with the Heisenberg current I of either a
pure Heisenberg factor or the mixed Virasoro-Heisenberg factor.  A
matrix unit state E_pq(-1)|1> therefore lives across two tensor factors:

    E_pq(-1) = (traceless part)(-1) in the sl_N factor
             + delta_pq (1/N) I(-1) in the scalar factor

For N = 1 the traceless factor is absent and the matrix unit is the
scalar current alone.  Indices p, q are 1-based.
"""

from ..scalars import Q
from ..lincomb import lc_iadd
from ..liealg.simple import sln_data, abelian_data
from .affine import AffineSpace
from .hvir import HVirSpace
from .tensor import TensorSpace


def psi2_coeff(N, p, q):
    """Scalar-projection coefficient of E_pq: tr/N on the diagonal."""
    return Q(1, N) if p == q else Q(0)


def psi1_coeffs(data, N, p, q):
    """Traceless projection of E_pq on the sl_N basis, as {index: coef}."""
    if p != q:
        return {data.names.index("E%d_%d" % (p, q)): Q(1)}
    out = {}
    acc = Q(0)
    for i in range(N - 1):
        acc += (Q(1) if i + 1 == p else Q(0)) - Q(1, N)
        if acc:
            out[data.names.index("H%d" % (i + 1,))] = acc
    return out


class MatrixCurrents:
    """Addressing helper for E_pq states in a flat tensor space.

    sln: (factor index, algebra data) or None when N = 1.
    scalar: (factor index, generator) for the I current, or None when the
    scalar direction is absent (pure divergence-free data).
    """

    def __init__(self, N, space, sln, scalar):
        self.N = N
        self.space = space
        self.sln = sln
        self.scalar = scalar

    def e_state(self, p, q):
        """E_pq(-1)|1> as a tensor state."""
        out = {}
        if self.sln is not None:
            idx, data = self.sln
            f = self.space.factors[idx]
            for gi, c in psi1_coeffs(data, self.N, p, q).items():
                lc_iadd(out, self.space.embed(idx, f.state(((1, gi),), c)))
        if p == q and self.scalar is not None:
            idx, gen = self.scalar
            f = self.space.factors[idx]
            if gen == "I":
                mon = ((), (1,))
            else:
                mon = ((1, gen),)
            lc_iadd(out, self.space.embed(idx, f.state(mon, Q(1, self.N))))
        return out

    def psi1_state(self, p, q):
        """psi1(E_pq)(-1)|1>, the traceless part only."""
        out = {}
        if self.sln is not None:
            idx, data = self.sln
            f = self.space.factors[idx]
            for gi, c in psi1_coeffs(data, self.N, p, q).items():
                lc_iadd(out, self.space.embed(idx, f.state(((1, gi),), c)))
        return out


def gln_space(N, c_1, c_I):
    """Tensor of affine sl_N at level c_1 with the Heisenberg current."""
    factors = []
    sln = None
    if N >= 2:
        sln = (0, sln_data(N))
        factors.append(AffineSpace(sln[1], c_1))
    hei = AffineSpace(abelian_data("I"), c_I)
    scalar = (len(factors), 0)
    factors.append(hei)
    space = TensorSpace(factors)
    return MatrixCurrents(N, space, sln, scalar)


def gln_vir_space(N, c_1, c_L, c_LI, c_I):
    """Tensor of affine sl_N with the mixed Virasoro-Heisenberg factor."""
    factors = []
    sln = None
    if N >= 2:
        sln = (0, sln_data(N))
        factors.append(AffineSpace(sln[1], c_1))
    hv = HVirSpace(c_L, c_LI, c_I)
    scalar = (len(factors), "I")
    factors.append(hv)
    space = TensorSpace(factors)
    return MatrixCurrents(N, space, sln, scalar)
