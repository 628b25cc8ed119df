"""Pure-Python hot kernels.

The compiled module ``coderco._kernels`` implements the same functions with
the same signatures; ``coderco._backend`` picks one at import time.

Sparse integer rows are pairs ``(cols, vals)`` of equal-length lists with
``cols`` strictly increasing and every value a nonzero ``int``.
"""
from math import gcd

BACKEND = "python"


def primitive(cols, vals):
    """Divide a row by the gcd of its entries and make the leading entry positive."""
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            break
    if vals[0] < 0:
        g = -g
    if g != 1:
        vals = [v // g for v in vals]
    return cols, vals


def combine(a, cols1, vals1, b, cols2, vals2):
    """Return the sparse row ``a*row1 - b*row2`` with zero entries dropped."""
    out_c = []
    out_v = []
    i = j = 0
    n1 = len(cols1)
    n2 = len(cols2)
    while i < n1 and j < n2:
        c1 = cols1[i]
        c2 = cols2[j]
        if c1 < c2:
            out_c.append(c1)
            out_v.append(a * vals1[i])
            i += 1
        elif c2 < c1:
            out_c.append(c2)
            out_v.append(-b * vals2[j])
            j += 1
        else:
            v = a * vals1[i] - b * vals2[j]
            if v:
                out_c.append(c1)
                out_v.append(v)
            i += 1
            j += 1
    while i < n1:
        out_c.append(cols1[i])
        out_v.append(a * vals1[i])
        i += 1
    while j < n2:
        out_c.append(cols2[j])
        out_v.append(-b * vals2[j])
        j += 1
    return out_c, out_v


def _position(cols, c):
    lo, hi = 0, len(cols)
    while lo < hi:
        mid = (lo + hi) // 2
        if cols[mid] < c:
            lo = mid + 1
        else:
            hi = mid
    if lo < len(cols) and cols[lo] == c:
        return lo
    return -1


def rref(rows, limit):
    """Fraction-free reduced row echelon form over the integers.

    Only columns ``< limit`` may hold pivots. Returns ``(pivots, residual)``:
    ``pivots`` is a list of primitive rows sorted by leading column, each
    with a positive leading entry and zeros in every other pivot column;
    ``residual`` holds the rows whose entries all lie in columns ``>= limit``
    after elimination (mutually reduced, in echelon form).
    """
    table = {}
    residual = {}
    for cols, vals in rows:
        if not cols:
            continue
        cols, vals = primitive(list(cols), list(vals))
        while cols:
            lead = cols[0]
            target = table if lead < limit else residual
            piv = target.get(lead)
            if piv is None:
                target[lead] = (cols, vals)
                break
            pv = piv[1][0]
            rv = vals[0]
            g = gcd(pv, rv)
            cols, vals = combine(pv // g, cols, vals, rv // g, piv[0], piv[1])
            if cols:
                cols, vals = primitive(cols, vals)
    order = sorted(table)
    # back substitution, largest pivot first
    for k in range(len(order) - 1, -1, -1):
        p = order[k]
        pcols, pvals = table[p]
        pv = pvals[0]
        for q in order[:k]:
            qcols, qvals = table[q]
            pos = _position(qcols, p)
            if pos < 0:
                continue
            qv = qvals[pos]
            g = gcd(pv, qv)
            qcols, qvals = combine(pv // g, qcols, qvals, qv // g, pcols, pvals)
            table[q] = primitive(qcols, qvals)
    pivots = [table[p] for p in order]
    res = [residual[p] for p in sorted(residual)]
    return pivots, res


def matmul_cols(acols, bcols):
    """Sparse product in column-dict form: ``{j: {i: v}}`` for ``A @ B``."""
    out = {}
    for j, bcol in bcols.items():
        acc = {}
        for k, bv in bcol.items():
            acol = acols.get(k)
            if acol is None:
                continue
            for i, av in acol.items():
                v = acc.get(i)
                if v is None:
                    acc[i] = av * bv
                else:
                    acc[i] = v + av * bv
        acc = {i: v for i, v in acc.items() if v}
        if acc:
            out[j] = acc
    return out
