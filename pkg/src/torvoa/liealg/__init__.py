from .simple import SimpleAlgebraData, AlgebraDataError, sl2_data, sl3_data, sln_data, abelian_data, preset
from .toroidal import ToroidalLie
