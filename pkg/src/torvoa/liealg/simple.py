"""Finite-dimensional Lie algebra data: basis, structure constants, form.

Structure constants and the invariant bilinear form are validated at
load time (antisymmetry, Jacobi, invariance, symmetry).  Presets: sl2,
sl3 and general sl_n built from matrix units with the trace form, which
is the normalization giving (theta|theta) = 2 for the longest root.
An abelian one-dimensional datum backs Heisenberg-type affinizations.
"""

from ..scalars import Q, ZERO
from ..lincomb import lc_iadd


class AlgebraDataError(ValueError):
    pass


class SimpleAlgebraData:
    """Bracket table [x_i, x_j] = sum_k c_ijk x_k plus form matrix (x_i|x_j).

    ``brackets`` maps (i, j) with i < j to {k: scalar}; the table is
    completed by antisymmetry.  ``dual_coxeter`` may be None for abelian
    data (no Sugawara element there).
    """

    def __init__(self, name, names, brackets, form, dual_coxeter,
                 theta_normalized=True, validate=True):
        self.name = name
        self.names = list(names)
        self.dim = len(names)
        self.form = [[Q(x) for x in row] for row in form]
        self.dual_coxeter = None if dual_coxeter is None else Q(dual_coxeter)
        self.theta_normalized = theta_normalized
        table = {}
        for (i, j), comb in brackets.items():
            comb = {k: Q(v) for k, v in comb.items() if Q(v)}
            table[(i, j)] = comb
            table[(j, i)] = {k: -v for k, v in comb.items()}
        self.table = table
        if validate:
            self._validate()

    def bracket(self, i, j):
        """[x_i, x_j] as {k: scalar}."""
        if i == j:
            return {}
        return self.table.get((i, j), {})

    def pair(self, i, j):
        return self.form[i][j]

    def _bracket_comb(self, a, b):
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                lc_iadd(out, self.bracket(i, j), ca * cb)
        return out

    def _pair_comb(self, a, b):
        s = ZERO
        for i, ca in a.items():
            for j, cb in b.items():
                s += ca * cb * self.form[i][j]
        return s

    def _validate(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                if self.form[i][j] != self.form[j][i]:
                    raise AlgebraDataError("form is not symmetric at (%d,%d)" % (i, j))
        for i in range(n):
            if self.bracket(i, i):
                raise AlgebraDataError("[x,x] != 0 at %d" % i)
        # Jacobi on all basis triples
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc = {}
                    lc_iadd(acc, self._bracket_comb({i: Q(1)}, self.bracket(j, k)))
                    lc_iadd(acc, self._bracket_comb({j: Q(1)}, self.bracket(k, i)))
                    lc_iadd(acc, self._bracket_comb({k: Q(1)}, self.bracket(i, j)))
                    if acc:
                        raise AlgebraDataError(
                            "Jacobi fails on basis triple (%d,%d,%d)" % (i, j, k))
        # invariance ([x,y]|z) = (x|[y,z])
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self._pair_comb(self.bracket(i, j), {k: Q(1)})
                    rhs = self._pair_comb({i: Q(1)}, self.bracket(j, k))
                    if lhs != rhs:
                        raise AlgebraDataError(
                            "form not invariant on (%d,%d,%d)" % (i, j, k))


def abelian_data(name="I"):
    """One-dimensional abelian datum with (x|x) = 1 (Heisenberg seed)."""
    return SimpleAlgebraData(name, [name], {}, [[1]], None,
                             theta_normalized=False)


def sl2_data():
    """sl2 with basis e, h, f; (h|h)=2, (e|f)=1; dual Coxeter number 2."""
    names = ["e", "h", "f"]
    br = {
        (0, 1): {0: Q(-2)},          # [e,h] = -2e
        (0, 2): {1: Q(1)},           # [e,f] = h
        (1, 2): {2: Q(-2)},          # [h,f] = -2f
    }
    form = [[0, 0, 1], [0, 2, 0], [1, 0, 0]]
    return SimpleAlgebraData("sl2", names, br, form, 2)


def sln_data(n):
    """sl_n from matrix units, trace form, dual Coxeter number n."""
    if n < 2:
        raise AlgebraDataError("sl_n needs n >= 2")
    basis = []  # each element: n x n integer matrix (list of rows)
    names = []
    eidx = {}
    for a in range(n):
        for b in range(n):
            if a != b:
                m = [[0] * n for _ in range(n)]
                m[a][b] = 1
                eidx[(a, b)] = len(basis)
                basis.append(m)
                names.append("E%d_%d" % (a + 1, b + 1))
    hidx = {}
    for i in range(n - 1):
        m = [[0] * n for _ in range(n)]
        m[i][i] = 1
        m[i + 1][i + 1] = -1
        hidx[i] = len(basis)
        basis.append(m)
        names.append("H%d" % (i + 1,))

    def mat_mul(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    def mat_sub(x, y):
        return [[x[i][j] - y[i][j] for j in range(n)] for i in range(n)]

    def expand(m):
        # traceless matrix -> coefficients on the basis above
        out = {}
        for a in range(n):
            for b in range(n):
                if a != b and m[a][b]:
                    out[eidx[(a, b)]] = Q(m[a][b])
        # diagonal part via partial sums of the H_i
        acc = 0
        for i in range(n - 1):
            acc += m[i][i]
            if acc:
                out[hidx[i]] = Q(acc)
        return out

    br = {}
    dim = len(basis)
    for i in range(dim):
        for j in range(i + 1, dim):
            comm = mat_sub(mat_mul(basis[i], basis[j]), mat_mul(basis[j], basis[i]))
            c = expand(comm)
            if c:
                br[(i, j)] = c
    form = [[Q(sum(mat_mul(basis[i], basis[j])[k][k] for k in range(n)))
             for j in range(dim)] for i in range(dim)]
    return SimpleAlgebraData("sl%d" % n, names, br, form, n)


def sl3_data():
    return sln_data(3)


_PRESETS = {"sl2": sl2_data, "sl3": sl3_data}


def preset(name):
    if name in _PRESETS:
        return _PRESETS[name]()
    if name.startswith("sl"):
        return sln_data(int(name[2:]))
    raise AlgebraDataError("unknown algebra preset %r" % name)
