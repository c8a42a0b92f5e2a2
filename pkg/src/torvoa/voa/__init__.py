from .state import Space, charges_in_box
from .hvir import HVirSpace, virasoro_space, build_hvir
from .affine import AffineSpace, build_affine, sugawara_omega
from .lattice import LatticePlusSpace, build_lattice_plus
from .tensor import TensorSpace
from .kernel import (nth_product, nth_product_mon, translate, translate_power,
                     ModeOp, commutator_apply, delta_expand, ShiftedFieldSum)
from .gln import MatrixCurrents, gln_space, gln_vir_space, psi1_coeffs, psi2_coeff
