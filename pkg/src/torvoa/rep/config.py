"""Run configuration for the operator-dictionary verifier.

A RepConfig fixes the torus rank N, the structure algebra, the central
parameters, the target subalgebra, optional module choices for the
tensor factors, and the verification windows.  ``validate`` returns
human-readable diagnostics for every violated constraint; ``build``
assembles the tensor space, the bracket oracle with the derived cocycle
parameters, and the matrix-current addressing.
"""

from dataclasses import dataclass, field

from ..scalars import Q, parse_q
from ..liealg import preset, ToroidalLie
from ..liealg.simple import sln_data, abelian_data, SimpleAlgebraData
from ..voa.affine import AffineSpace
from ..voa.hvir import HVirSpace, virasoro_space
from ..voa.lattice import LatticePlusSpace
from ..voa.tensor import TensorSpace
from ..voa.gln import MatrixCurrents

TARGETS = ("full", "gstar", "gdiv", "exceptional")


class ConfigError(ValueError):
    pass


@dataclass
class RepConfig:
    target: str = "full"
    N: int = 1
    algebra: str = "sl2"
    c: object = 1
    c_1: object = 0
    c_I: object = 0
    c_L: object = 9
    c_LI: object = "1/2"
    cbar_L: object = 21
    # module choices (empty -> the vacuum spaces themselves)
    lattice_alpha: list = field(default_factory=list)
    lattice_beta: list = field(default_factory=list)
    hvir_h: object = None
    hvir_h_I: object = None
    # verification windows
    max_degree: int = 3
    mode_window: int = 2
    charge_window: int = 1
    state_charge_window: int = 1
    active_coords: int = 0  # 0 = all; else restrict charges to leading coords
    # cost controls: reduced windows for the classes not touching the
    # derivation row, and a deterministic per-class pair budget (0 = all)
    base_mode_window: int = 0
    base_max_degree: int = 0
    pairs_per_class: int = 0

    def __post_init__(self):
        for name in ("c", "c_1", "c_I", "c_L", "c_LI", "cbar_L"):
            setattr(self, name, parse_q(getattr(self, name)))
        if self.target not in TARGETS:
            raise ConfigError("unknown target %r" % (self.target,))

    # -- derived quantities -------------------------------------------------

    def algebra_data(self):
        return preset(self.algebra)

    def affine_rank(self):
        d = self.algebra_data()
        return self.c * d.dim / (self.c + d.dual_coxeter)

    def cocycle_parameters(self):
        """(mu, nu) forced by the target's parameters."""
        if self.target == "gstar":
            mu = (1 - self.c_1) / self.c
            nu = self.c_1 / (self.c * self.N) - self.c_I / (self.c * self.N ** 2)
            return mu, nu
        if self.target == "exceptional":
            return Q(1), Q(0)
        return 1 / self.c, Q(0)

    def validate(self):
        """List of violated-constraint messages (empty = valid)."""
        msgs = []
        if self.N < 1:
            msgs.append("N must be at least 1")
        if self.target == "exceptional":
            if self.N != 12:
                msgs.append("the pure one-form/vector-field module needs N = 12")
            return msgs
        d = self.algebra_data()
        if self.c == 0:
            msgs.append("level c must be nonzero")
            return msgs
        if self.c == -d.dual_coxeter:
            msgs.append("level c at the critical value -h^vee has no "
                        "Virasoro element")
            return msgs
        if self.target == "full":
            if self.c_1 != 0:
                msgs.append("full target needs c_1 = 0")
            if self.c_I != 0:
                msgs.append("full target needs c_I = 0")
            if self.c_LI != Q(self.N, 2):
                msgs.append("full target needs c_LI = N/2 = %s, got %s"
                            % (Q(self.N, 2), self.c_LI))
            total = self.affine_rank() + 2 * self.N + self.c_L
            if total != 12:
                msgs.append("central charges must satisfy rank sum "
                            "c dim/(c+h) + 2N + c_L = 12, got %s" % total)
        elif self.target == "gdiv":
            total = self.affine_rank() + 2 * self.N + self.cbar_L
            if total != 24:
                msgs.append("central charges must satisfy rank sum "
                            "c dim/(c+h) + 2N + cbar_L = 24 "
                            "(equivalently +2(N+1) = 26), got %s" % total)
        return msgs

    # -- space assembly ---------------------------------------------------------

    def build(self, enforce=True):
        msgs = self.validate()
        if msgs and enforce:
            raise ConfigError("; ".join(msgs))
        return RepContext(self)


class RepContext:
    def __init__(self, cfg):
        self.cfg = cfg
        N = cfg.N
        mu, nu = cfg.cocycle_parameters()
        gdata = cfg.algebra_data() if cfg.target != "exceptional" else _dummy_g()
        self.lie = ToroidalLie(N, gdata, mu=mu, nu=nu)
        factors = []
        self.affine_idx = None
        self.sln_idx = None
        self.scalar_idx = None
        if cfg.target != "exceptional":
            self.affine_idx = len(factors)
            factors.append(AffineSpace(gdata, cfg.c))
        self.lattice_idx = len(factors)
        alpha = cfg.lattice_alpha or None
        beta = cfg.lattice_beta or None
        factors.append(LatticePlusSpace(N, alpha=alpha, beta=beta))
        sln = None
        if cfg.target != "exceptional" and N >= 2:
            self.sln_idx = len(factors)
            data = sln_data(N)
            level = cfg.c_1 if cfg.target == "gstar" else Q(0)
            factors.append(AffineSpace(data, level))
            sln = (self.sln_idx, data)
        scalar = None
        if cfg.target == "full":
            self.scalar_idx = len(factors)
            kwargs = {}
            if cfg.hvir_h is not None:
                kwargs = dict(mode="verma", h=parse_q(cfg.hvir_h),
                              h_I=parse_q(cfg.hvir_h_I or 0))
            factors.append(HVirSpace(cfg.c_L, cfg.c_LI, cfg.c_I, **kwargs))
            scalar = (self.scalar_idx, "I")
        elif cfg.target == "gstar":
            self.scalar_idx = len(factors)
            factors.append(AffineSpace(abelian_data("I"), cfg.c_I))
            scalar = (self.scalar_idx, 0)
        elif cfg.target == "gdiv":
            self.scalar_idx = len(factors)
            factors.append(virasoro_space(cfg.cbar_L))
            scalar = None  # only the traceless part acts here
        self.lattice = factors[self.lattice_idx]
        # a single factor needs no tensor wrapper (pure-lattice target)
        self.space = factors[0] if len(factors) == 1 else TensorSpace(factors)
        self.mc = None
        if cfg.target != "exceptional":
            self.mc = MatrixCurrents(N, self.space, sln, scalar)

    def states(self, max_degree=None, charge_window=None):
        cfg = self.cfg
        deg = cfg.max_degree if max_degree is None else max_degree
        win = (cfg.state_charge_window if charge_window is None
               else charge_window)
        box = _charge_box(cfg.N, win, cfg.active_coords)
        mons = self.space.basis_monomials(deg, box)
        if cfg.active_coords:
            mons = [m for m in mons if self._osc_active(m)]
        return [self.space.mid(m) for m in mons]

    def _osc_active(self, mon):
        """Oscillator colors restricted to the active coordinates."""
        if self.space is self.lattice:
            osc, _ = mon
        else:
            osc, _ = self.lattice.mon(mon[self.lattice_idx])
        return all(i < self.cfg.active_coords for _, _, i in osc)

    def active_range(self):
        """1-based coordinate indices the verification grid runs over."""
        n = self.cfg.active_coords or self.cfg.N
        return range(1, min(n, self.cfg.N) + 1)

    def charges(self, window=None):
        cfg = self.cfg
        win = cfg.charge_window if window is None else window
        return _charge_box(cfg.N, win, cfg.active_coords)


def _charge_box(N, window, active_coords):
    import itertools
    active = N if not active_coords else min(active_coords, N)
    out = []
    for head in itertools.product(range(-window, window + 1), repeat=active):
        out.append(tuple(head) + tuple(0 for _ in range(N - active)))
    return sorted(out)


def _dummy_g():
    """Placeholder structure algebra for the current-free target."""
    return abelian_data("g")
