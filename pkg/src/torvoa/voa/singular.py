"""Singular vectors and quotient characters of Verma-type modules.

A homogeneous vector is singular when every positive mode kills it; on a
fixed graded piece it suffices to check L(1), L(2) and (when present)
I(1), which generate the raising side.  The kernel is computed by exact
row reduction.  Quotient dimensions come from the rank of the explicit
spanning set {X . v} of the generated submodule, so the character
comparison is enumeration against the closed product formula.
"""

from ..scalars import Q
from ..lincomb import lc_iadd
from ..linalg import kernel_basis, rank
from .hvir import _partitions


def _graded_basis(space, level):
    return [space.mid(m) for m in space.basis_monomials(level)
            if space.level(space.mid(m)) == level]


def _coords(space, state, basis_index):
    row = [Q(0)] * len(basis_index)
    for mid, c in state.items():
        row[basis_index[mid]] = c
    return row


def singular_vector_search(space, level):
    """Basis of singular vectors in the given graded piece, as states."""
    if space.mode != "verma":
        raise ValueError("singular vectors are searched in Verma modules")
    if level < 1:
        raise ValueError("search levels start at 1")
    basis = _graded_basis(space, level)
    raising = [("L", 1), ("L", 2)]
    if space.has_heisenberg:
        raising.append(("I", 1))
    rows = []
    for mid in basis:
        row = []
        for gen, k in raising:
            if level - k < 0:
                continue
            target = _graded_basis(space, level - k)
            index = {m: i for i, m in enumerate(target)}
            row.extend(_coords(space, space.act(gen, k, mid), index))
        rows.append(row)
    # solve for combinations of basis vectors killed by every raising mode
    cols = [[rows[i][j] for i in range(len(basis))]
            for j in range(len(rows[0]))]
    ker = kernel_basis(cols, len(basis))
    return [{basis[i]: c for i, c in enumerate(vec) if c} for vec in ker]


def submodule_dimensions(space, vec, max_level):
    """Graded dimensions of U(negative modes) . vec up to max_level."""
    base = min(space.level(mid) for mid in vec)
    assert all(space.level(mid) == base for mid in vec)
    dims = {}
    for w in range(0, max_level - base + 1):
        images = []
        for lpart in _partitions(w, 1):
            rem = w - sum(lpart)
            iparts = _partitions(rem, 1) if space.has_heisenberg else [()]
            for ipart in iparts:
                if sum(lpart) + sum(ipart) != w:
                    continue
                st = dict(vec)
                for m in reversed(ipart):
                    st = space.act_state("I", -m, st)
                for n in reversed(lpart):
                    st = space.act_state("L", -n, st)
                if st:
                    images.append(st)
        target = _graded_basis(space, base + w)
        index = {m: i for i, m in enumerate(target)}
        rows = [_coords(space, st, index) for st in images]
        dims[base + w] = rank(rows) if rows else 0
    return dims


def quotient_dimensions(space, max_level):
    """Graded dimensions of the Verma module modulo all singular vectors.

    Scans levels 1..max_level for singular vectors, accumulates the
    submodule they generate, and subtracts ranks levelwise.
    """
    sub_states = {lvl: [] for lvl in range(max_level + 1)}
    for lvl in range(1, max_level + 1):
        for vec in singular_vector_search(space, lvl):
            for w in range(0, max_level - lvl + 1):
                for lpart in _partitions(w, 1):
                    rem = w - sum(lpart)
                    iparts = (_partitions(rem, 1)
                              if space.has_heisenberg else [()])
                    for ipart in iparts:
                        if sum(lpart) + sum(ipart) != w:
                            continue
                        st = dict(vec)
                        for m in reversed(ipart):
                            st = space.act_state("I", -m, st)
                        for n in reversed(lpart):
                            st = space.act_state("L", -n, st)
                        if st:
                            sub_states[lvl + w].append(st)
    out = []
    for lvl in range(0, max_level + 1):
        basis = _graded_basis(space, lvl)
        index = {m: i for i, m in enumerate(basis)}
        rows = [_coords(space, st, index) for st in sub_states[lvl]]
        sub_rank = rank(rows) if rows else 0
        out.append(len(basis) - sub_rank)
    return out
