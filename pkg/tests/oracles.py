"""Independent reference computations used only by the tests.

Everything here is dense, unoptimized and shares no code with the
elimination kernels: plain Gaussian elimination over ``Fraction``.
"""
from fractions import Fraction
from itertools import product


def dense_rref(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def dense_rank(rows):
    if not rows or not rows[0]:
        return 0
    return len(dense_rref(rows)[1])


def dense_nullity(rows, ncols):
    return ncols - dense_rank(rows)


def dense_solve(rows, b):
    """Some solution of ``rows x = b`` or ``None``."""
    ncols = len(rows[0])
    aug = [list(r) + [v] for r, v in zip(rows, b)]
    red, piv = dense_rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, piv):
        x[p] = row[-1]
    return x


def dense_matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def dense_kron(a, b):
    return [[a[i][j] * b[k][l] for j in range(len(a[0])) for l in range(len(b[0]))]
            for i in range(len(a)) for k in range(len(b))]


def operator_from_images(apply, ncols):
    """Dense matrix whose column ``t`` is ``apply`` of the ``t``-th unit vector."""
    cols = []
    for t in range(ncols):
        e = [0] * ncols
        e[t] = 1
        cols.append(apply(e))
    nrows = len(cols[0]) if cols else 0
    return [[cols[t][i] for t in range(ncols)] for i in range(nrows)]


def commutant_dim(psi_dense):
    """``dim {f : psi f = f psi}`` by brute force over the matrix units."""
    d = len(psi_dense)
    eqs = []
    for i, j in product(range(d), range(d)):
        row = []
        for a, b in product(range(d), range(d)):
            # coefficient of f[a][b] in (psi f - f psi)[i][j]
            v = (psi_dense[i][a] if b == j else 0) - (psi_dense[b][j] if a == i else 0)
            row.append(v)
        eqs.append(row)
    return dense_nullity(eqs, d * d)
