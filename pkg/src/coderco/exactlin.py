"""Exact rational sparse linear algebra.

Scalars are :class:`fractions.Fraction` values; integral scalars are stored as
plain ``int`` (an integer is already a fraction in lowest terms) which keeps
the common 0/1/binomial-coefficient structure maps cheap.

Tensor products use the big-endian flat index: ``e_{j1} (x) ... (x) e_{jn}``
sits at ``sum_t j_t * d**(n - t)``.  Cochain coordinates are column-major
vectorizations of their matrices.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Optional, Sequence

from . import config
from ._backend import kernels
from .errors import ContainmentError, DimensionOverflowError, ShapeMismatchError

Vector = list


def scalar(x) -> int | Fraction:
    """Coerce ``x`` to a normalized exact scalar (``int`` when integral)."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        f = Fraction(x.strip())
    elif isinstance(x, Rational):
        f = Fraction(x.numerator, x.denominator)
    elif isinstance(x, float):
        raise TypeError("floating-point scalars are not accepted; use Fraction or str")
    else:
        f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def _norm(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def check_bound(size: int, what: str = "dimension") -> None:
    bound = config.index_bound()
    if size > bound:
        raise DimensionOverflowError(f"{what} {size} exceeds index bound {bound}")


class SparseMat:
    """Immutable exact sparse matrix stored by columns (``{col: {row: value}}``)."""

    __slots__ = ("rows", "cols", "_c")

    def __init__(self, rows: int, cols: int, columns: Optional[dict] = None, *, _trusted=False):
        if rows < 0 or cols < 0:
            raise ShapeMismatchError("negative shape")
        self.rows = rows
        self.cols = cols
        if columns is None:
            self._c = {}
        elif _trusted:
            self._c = columns
        else:
            clean = {}
            for j, col in columns.items():
                if not 0 <= j < cols:
                    raise ShapeMismatchError(f"column {j} out of range for {rows}x{cols}")
                out = {}
                for i, v in col.items():
                    if not 0 <= i < rows:
                        raise ShapeMismatchError(f"row {i} out of range for {rows}x{cols}")
                    v = scalar(v)
                    if v:
                        out[i] = v
                if out:
                    clean[j] = out
            self._c = clean

    # construction -----------------------------------------------------
    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable) -> "SparseMat":
        """Build from ``(i, j, value)`` triples; repeated positions are summed."""
        c: dict = {}
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeMismatchError(f"entry ({i},{j}) out of range for {rows}x{cols}")
            col = c.setdefault(j, {})
            col[i] = col.get(i, 0) + scalar(v)
        return cls(rows, cols, c)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMat":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ShapeMismatchError("ragged dense matrix")
        return cls.from_entries(rows, cols, ((i, j, v) for i, r in enumerate(data) for j, v in enumerate(r)))

    @classmethod
    def identity(cls, n: int) -> "SparseMat":
        return cls(n, n, {i: {i: 1} for i in range(n)}, _trusted=True)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMat":
        return cls(rows, cols, {}, _trusted=True)

    @classmethod
    def diag(cls, values: Sequence) -> "SparseMat":
        n = len(values)
        return cls(n, n, {i: {i: v} for i, v in enumerate(values)})

    @classmethod
    def from_columns(cls, rows: int, vectors: Sequence[Sequence]) -> "SparseMat":
        """Matrix whose ``j``-th column is the dense vector ``vectors[j]``."""
        c = {}
        for j, vec in enumerate(vectors):
            if len(vec) != rows:
                raise ShapeMismatchError("vector length does not match row count")
            col = {i: scalar(v) for i, v in enumerate(vec) if v}
            if col:
                c[j] = col
        return cls(rows, len(vectors), c, _trusted=True)

    # access -----------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._c.get(j, {}).get(i, 0)

    def column(self, j: int) -> dict:
        """Read-only view of column ``j`` as ``{row: value}``."""
        return self._c.get(j, {})

    def columns(self) -> dict:
        return self._c

    def entries(self):
        """Yield ``(i, j, value)`` sorted by ``(i, j)``."""
        out = [(i, j, v) for j, col in self._c.items() for i, v in col.items()]
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self._c.values())

    def is_zero(self) -> bool:
        return not self._c

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, col in self._c.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def row_dicts(self) -> dict:
        r: dict = {}
        for j, col in self._c.items():
            for i, v in col.items():
                r.setdefault(i, {})[j] = v
        return r

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows, self.row_dicts(), _trusted=True)

    @property
    def T(self):
        return self.transpose()

    def vec(self) -> list:
        """Column-major vectorization as a dense list."""
        out = [0] * (self.rows * self.cols)
        for j, col in self._c.items():
            base = j * self.rows
            for i, v in col.items():
                out[base + i] = v
        return out

    @classmethod
    def unvec(cls, vec: Sequence, rows: int, cols: int) -> "SparseMat":
        if len(vec) != rows * cols:
            raise ShapeMismatchError("vector length does not match shape")
        c: dict = {}
        for k, v in enumerate(vec):
            if v:
                j, i = divmod(k, rows)
                c.setdefault(j, {})[i] = scalar(v)
        return cls(rows, cols, c, _trusted=True)

    # comparison and arithmetic ---------------------------------------
    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        return self.shape == other.shape and self._c == other._c

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries())))

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __matmul__(self, other):
        return compose(self, other)

    def __rmul__(self, c):
        return scale(c, self)

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        out = [0] * self.rows
        for j, col in self._c.items():
            xj = x[j]
            if not xj:
                continue
            for i, v in col.items():
                out[i] += v * xj
        return [_norm(v) for v in out]


def kron(a: SparseMat, b: SparseMat) -> SparseMat:
    """Kronecker product, left factor most significant."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    check_bound(rows, "kron row count")
    check_bound(cols, "kron column count")
    br, bc = b.rows, b.cols
    out = {}
    bitems = list(b._c.items())
    for ja, acol in a._c.items():
        aitems = list(acol.items())
        for jb, bcol in bitems:
            col = {}
            for ia, va in aitems:
                base = ia * br
                for ib, vb in bcol.items():
                    col[base + ib] = _norm(va * vb)
            out[ja * bc + jb] = col
    return SparseMat(rows, cols, out, _trusted=True)


def kron_all(*mats: SparseMat) -> SparseMat:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def compose(a: SparseMat, b: SparseMat) -> SparseMat:
    """Matrix product ``a @ b``."""
    if a.cols != b.rows:
        raise ShapeMismatchError(f"cannot compose {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    out = kernels.matmul_cols(a._c, b._c)
    for col in out.values():
        for i, v in col.items():
            if type(v) is Fraction:
                col[i] = _norm(v)
    return SparseMat(a.rows, b.cols, out, _trusted=True)


def add(a: SparseMat, b: SparseMat) -> SparseMat:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"cannot add {a.shape} and {b.shape}")
    out = {j: dict(col) for j, col in a._c.items()}
    for j, col in b._c.items():
        tgt = out.setdefault(j, {})
        for i, v in col.items():
            s = _norm(tgt.get(i, 0) + v)
            if s:
                tgt[i] = s
            else:
                tgt.pop(i, None)
        if not tgt:
            del out[j]
    return SparseMat(a.rows, a.cols, out, _trusted=True)


def scale(c, a: SparseMat) -> SparseMat:
    c = scalar(c)
    if not c:
        return SparseMat.zeros(a.rows, a.cols)
    out = {j: {i: _norm(c * v) for i, v in col.items()} for j, col in a._c.items()}
    return SparseMat(a.rows, a.cols, out, _trusted=True)


def hstack(mats: Sequence[SparseMat]) -> SparseMat:
    rows = mats[0].rows
    out = {}
    off = 0
    for m in mats:
        if m.rows != rows:
            raise ShapeMismatchError("hstack row mismatch")
        for j, col in m._c.items():
            out[off + j] = dict(col)
        off += m.cols
    return SparseMat(rows, off, out, _trusted=True)


def vstack(mats: Sequence[SparseMat]) -> SparseMat:
    cols = mats[0].cols
    out: dict = {}
    off = 0
    for m in mats:
        if m.cols != cols:
            raise ShapeMismatchError("vstack column mismatch")
        for j, col in m._c.items():
            tgt = out.setdefault(j, {})
            for i, v in col.items():
                tgt[off + i] = v
        off += m.rows
    return SparseMat(off, cols, out, _trusted=True)


# elimination ----------------------------------------------------------

def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def _int_row(items) -> tuple:
    """Scale a sorted ``[(col, value)]`` row to a sparse integer row."""
    den = 1
    for _, v in items:
        if type(v) is Fraction:
            den = _lcm(den, v.denominator)
    cols = [c for c, _ in items]
    if den == 1:
        vals = [v for _, v in items]
    else:
        vals = [int(v * den) for _, v in items]
    return cols, vals


def _rows_of(a: SparseMat) -> list:
    rd = a.row_dicts()
    return [_int_row(sorted(rd[i].items())) for i in sorted(rd)]


class Echelon(NamedTuple):
    """Reduced row echelon form: ``pivot_cols[k]`` leads ``rows[k]``.

    Each row is a primitive integer sparse row; dividing it by its leading
    entry gives the corresponding row of the rational RREF.
    """

    ncols: int
    pivot_cols: list
    rows: list


def echelon(a: SparseMat) -> Echelon:
    pivots, _ = kernels.rref(_rows_of(a), a.cols)
    return Echelon(a.cols, [r[0][0] for r in pivots], pivots)


def rank(a: SparseMat) -> int:
    """Exact rank over the rationals."""
    if a.is_zero():
        return 0
    # rank is orientation independent; eliminate the side with fewer nonzero rows
    nrows = len({i for col in a._c.values() for i in col})
    if len(a._c) < nrows:
        a = a.transpose()
    pivots, _ = kernels.rref(_rows_of(a), a.cols)
    return len(pivots)


def _kernel_from_echelon(ech: Echelon) -> list:
    pivset = set(ech.pivot_cols)
    free = [c for c in range(ech.ncols) if c not in pivset]
    basis = {f: [0] * ech.ncols for f in free}
    for f in free:
        basis[f][f] = 1
    for (cols, vals) in ech.rows:
        p = cols[0]
        pv = vals[0]
        for c, v in zip(cols[1:], vals[1:]):
            # c is necessarily free (row is reduced)
            basis[c][p] = _norm(Fraction(-v, pv))
    return [basis[f] for f in free]


def kernel_basis(a: SparseMat) -> list:
    """Basis of ``{v : a v = 0}`` from the RREF, one vector per free column.

    Free columns are taken in ascending order; each vector has a 1 in its
    free column and 0 in every other free column.
    """
    return _kernel_from_echelon(echelon(a))


def solve_many(a: SparseMat, rhs: Sequence[Sequence]) -> list:
    """Solve ``a x = b`` for each ``b`` in ``rhs`` with one elimination.

    Returns one entry per right-hand side: the particular solution with all
    free variables zero, or ``None`` when the system is inconsistent.
    """
    k = len(rhs)
    for b in rhs:
        if len(b) != a.rows:
            raise ShapeMismatchError(f"right-hand side of length {len(b)} for {a.rows} rows")
    n = a.cols
    rd = a.row_dicts()
    for t, b in enumerate(rhs):
        for i, v in enumerate(b):
            if v:
                rd.setdefault(i, {})[n + t] = scalar(v)
    rows = [_int_row(sorted(rd[i].items())) for i in sorted(rd)]
    pivots, residual = kernels.rref(rows, n)
    bad = set()
    for cols, _ in residual:
        bad.update(c - n for c in cols)
    sols = []
    for t in range(k):
        if t in bad:
            sols.append(None)
            continue
        x = [0] * n
        tc = n + t
        for cols, vals in pivots:
            if cols[-1] >= tc:
                v = dict(zip(cols, vals)).get(tc)
                if v:
                    x[cols[0]] = _norm(Fraction(v, vals[0]))
        sols.append(x)
    return sols


def solve(a: SparseMat, b: Sequence) -> Optional[list]:
    """Particular solution of ``a x = b`` (free variables zero) or ``None``."""
    return solve_many(a, [b])[0]


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return rank(SparseMat.from_columns(len(vectors[0]), vectors))


class Quotient(NamedTuple):
    dim: int
    representatives: list


def quotient_dim(big: Sequence[Sequence], sub: Sequence[Sequence]) -> Quotient:
    """Dimension of ``span(big) / span(sub)`` with coset representatives.

    Representatives are members of ``big`` that complete ``sub`` to a basis
    of ``span(big)``, chosen greedily in input order.
    """
    if big:
        length = len(big[0])
    elif sub:
        length = len(sub[0])
    else:
        return Quotient(0, [])
    rb = span_rank(big)
    if sub and span_rank(list(big) + list(sub)) != rb:
        raise ContainmentError("sub is not contained in span(big)")
    # greedy completion: incremental echelon over columns of sub then big
    table: dict = {}

    def insert(vec) -> bool:
        items = sorted((i, scalar(v)) for i, v in enumerate(vec) if v)
        if not items:
            return False
        cols, vals = _int_row(items)
        cols, vals = kernels.primitive(cols, vals)
        while cols:
            piv = table.get(cols[0])
            if piv is None:
                table[cols[0]] = (cols, vals)
                return True
            from math import gcd
            pv, rv = piv[1][0], vals[0]
            g = gcd(pv, rv)
            cols, vals = kernels.combine(pv // g, cols, vals, rv // g, piv[0], piv[1])
            if cols:
                cols, vals = kernels.primitive(cols, vals)
        return False

    for v in sub:
        if len(v) != length:
            raise ShapeMismatchError("vectors of unequal length")
        insert(v)
    rs = len(table)
    reps = []
    for v in big:
        if len(v) != length:
            raise ShapeMismatchError("vectors of unequal length")
        if insert(v):
            reps.append(list(v))
    assert len(reps) == rb - rs
    return Quotient(rb - rs, reps)


def normalize_leading(vec: Sequence) -> list:
    """Scale so that the first nonzero coordinate is 1."""
    for v in vec:
        if v:
            return [_norm(Fraction(x) / v) if x else 0 for x in vec]
    return list(vec)


def column_space_basis(a: SparseMat) -> list:
    """Basis of the column space: RREF rows of the transpose, leading entry 1."""
    ech = echelon(a.transpose())
    out = []
    for cols, vals in ech.rows:
        v = [0] * a.rows
        lead = vals[0]
        for c, x in zip(cols, vals):
            v[c] = _norm(Fraction(x, lead))
        out.append(v)
    return out
