"""Exact linear algebra over the rationals (dense, desk scale).

Row reduction is plain Gauss-Jordan with exact arithmetic; matrices here
are a few hundred rows at most (graded pieces of Verma modules, pairing
blocks), so nothing clever is needed.
"""

from .scalars import Q, ZERO


def rref(rows):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    m = [list(map(Q, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def kernel_basis(rows, ncols):
    """Basis of the right kernel {x : rows @ x = 0}, as lists of length ncols."""
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = Q(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -m[ri][fc]
        basis.append(vec)
    return basis
