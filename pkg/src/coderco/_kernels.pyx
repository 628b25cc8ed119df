# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same contract as ``coderco._kernels_py``."""
from math import gcd

BACKEND = "cython"


def primitive(list cols, list vals):
    cdef Py_ssize_t k, n = len(vals)
    cdef object g = 0
    for k in range(n):
        g = gcd(g, vals[k])
        if g == 1:
            break
    if vals[0] < 0:
        g = -g
    if g != 1:
        vals = [v // g for v in vals]
    return cols, vals


def combine(object a, list cols1, list vals1, object b, list cols2, list vals2):
    cdef list out_c = []
    cdef list out_v = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t n1 = len(cols1), n2 = len(cols2)
    cdef Py_ssize_t c1, c2
    cdef object v
    cdef bint a_one = a == 1
    cdef bint b_one = b == 1
    while i < n1 and j < n2:
        c1 = <Py_ssize_t>cols1[i]
        c2 = <Py_ssize_t>cols2[j]
        if c1 < c2:
            out_c.append(cols1[i])
            out_v.append(vals1[i] if a_one else a * vals1[i])
            i += 1
        elif c2 < c1:
            out_c.append(cols2[j])
            out_v.append(-vals2[j] if b_one else -b * vals2[j])
            j += 1
        else:
            v = a * vals1[i] - b * vals2[j]
            if v:
                out_c.append(cols1[i])
                out_v.append(v)
            i += 1
            j += 1
    while i < n1:
        out_c.append(cols1[i])
        out_v.append(vals1[i] if a_one else a * vals1[i])
        i += 1
    while j < n2:
        out_c.append(cols2[j])
        out_v.append(-vals2[j] if b_one else -b * vals2[j])
        j += 1
    return out_c, out_v


cdef Py_ssize_t _position(list cols, Py_ssize_t c):
    cdef Py_ssize_t lo = 0, hi = len(cols), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if <Py_ssize_t>cols[mid] < c:
            lo = mid + 1
        else:
            hi = mid
    if lo < len(cols) and <Py_ssize_t>cols[lo] == c:
        return lo
    return -1


def rref(rows, Py_ssize_t limit):
    cdef dict table = {}
    cdef dict residual = {}
    cdef dict target
    cdef list cols, vals, pcols, pvals, qcols, qvals
    cdef Py_ssize_t lead, k, pos, p
    cdef object piv, pv, rv, qv, g
    for row in rows:
        cols = list(row[0])
        vals = list(row[1])
        if not cols:
            continue
        cols, vals = primitive(cols, vals)
        while cols:
            lead = <Py_ssize_t>cols[0]
            target = table if lead < limit else residual
            piv = target.get(lead)
            if piv is None:
                target[lead] = (cols, vals)
                break
            pv = (<list>piv[1])[0]
            rv = vals[0]
            g = gcd(pv, rv)
            cols, vals = combine(pv // g, cols, vals, rv // g, piv[0], piv[1])
            if cols:
                cols, vals = primitive(cols, vals)
    cdef list order = sorted(table)
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
    return [table[p] for p in order], [residual[p] for p in sorted(residual)]


def matmul_cols(dict acols, dict bcols):
    cdef dict out = {}
    cdef dict acc, bcol, acol
    cdef object v, av, bv
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
