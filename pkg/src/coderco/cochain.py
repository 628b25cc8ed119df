"""Hochschild coboundary, the omega operator and the Coder-pair differential.

Two independent routes are provided.  ``delta_c``, ``omega`` and ``d_coder``
act on a single cochain by composing Kronecker products of structure maps.
``delta_matrix``, ``omega_matrix`` and ``d_coder_matrix`` assemble the same
operators as explicit matrices on vectorized cochains by direct index
arithmetic on tensor words.  Tests check one route against the other.

An ``n``-cochain is a ``d**n x m`` matrix (degree 0: ``1 x m``); its coordinate
vector is the column-major vectorization, so basis cochain ``E[w, k]`` (sends
``u_k`` to the word ``w``) has coordinate index ``k * d**n + w``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import config
from .coalg import Coalgebra, CoderPair
from .comodule import Bicomodule, BicomodulePair
from .errors import DimensionOverflowError, ShapeMismatchError
from .exactlin import SparseMat, add, check_bound, hstack, kron, kron_all, scale, vstack


@dataclass(frozen=True)
class Cochain:
    degree: int
    dim_c: int
    map: SparseMat

    def __post_init__(self):
        if self.degree < 0:
            raise ShapeMismatchError("cochain degree must be nonnegative")
        if self.map.rows != self.dim_c ** self.degree:
            raise ShapeMismatchError(
                f"degree-{self.degree} cochain needs {self.dim_c ** self.degree} rows, got {self.map.rows}")

    @property
    def dim_m(self) -> int:
        return self.map.cols

    def vec(self) -> list:
        return self.map.vec()

    @classmethod
    def from_vec(cls, vec, degree: int, dim_c: int, dim_m: int) -> "Cochain":
        return cls(degree, dim_c, SparseMat.unvec(vec, dim_c ** degree, dim_m))

    @classmethod
    def zero(cls, degree: int, dim_c: int, dim_m: int) -> "Cochain":
        return cls(degree, dim_c, SparseMat.zeros(dim_c ** degree, dim_m))

    def is_zero(self) -> bool:
        return self.map.is_zero()

    def __add__(self, other):
        _same_space(self, other)
        return Cochain(self.degree, self.dim_c, add(self.map, other.map))

    def __sub__(self, other):
        _same_space(self, other)
        return Cochain(self.degree, self.dim_c, add(self.map, scale(-1, other.map)))

    def __neg__(self):
        return Cochain(self.degree, self.dim_c, scale(-1, self.map))

    def scaled(self, c) -> "Cochain":
        return Cochain(self.degree, self.dim_c, scale(c, self.map))


def _same_space(a: Cochain, b: Cochain):
    if (a.degree, a.dim_c, a.dim_m) != (b.degree, b.dim_c, b.dim_m):
        raise ShapeMismatchError("cochains live in different spaces")


@dataclass(frozen=True)
class CoderCochain:
    """``(f, g)`` with ``deg f = n`` and ``deg g = n - 1``; ``g`` is ``None`` when ``n = 1``."""

    degree: int
    f: Cochain
    g: Optional[Cochain] = None

    def __post_init__(self):
        if self.degree < 1:
            raise ShapeMismatchError("Coder cochains start in degree 1")
        if self.f.degree != self.degree:
            raise ShapeMismatchError("first component has the wrong degree")
        if self.degree == 1:
            if self.g is not None:
                raise ShapeMismatchError("degree-1 Coder cochains have no second component")
        elif self.g is None or self.g.degree != self.degree - 1:
            raise ShapeMismatchError("second component must have degree n-1")

    def vec(self) -> list:
        return self.f.vec() + (self.g.vec() if self.g is not None else [])

    @classmethod
    def from_vec(cls, vec, degree: int, dim_c: int, dim_m: int) -> "CoderCochain":
        split = dim_c ** degree * dim_m
        f = Cochain.from_vec(vec[:split], degree, dim_c, dim_m)
        g = Cochain.from_vec(vec[split:], degree - 1, dim_c, dim_m) if degree > 1 else None
        return cls(degree, f, g)

    def is_zero(self) -> bool:
        return self.f.is_zero() and (self.g is None or self.g.is_zero())

    def __add__(self, other):
        return CoderCochain(self.degree, self.f + other.f, None if self.g is None else self.g + other.g)

    def __sub__(self, other):
        return CoderCochain(self.degree, self.f - other.f, None if self.g is None else self.g - other.g)


def coder_cochain_dim(dim_c: int, dim_m: int, n: int) -> int:
    if n < 1:
        return 0
    return dim_c ** n * dim_m + (dim_c ** (n - 1) * dim_m if n > 1 else 0)


# element-wise route ---------------------------------------------------

def _eye(k: int) -> SparseMat:
    return SparseMat.identity(k)


def _check_cochain(dim_c: int, m: Bicomodule, f: Cochain):
    if f.dim_c != dim_c or f.dim_m != m.dim_m:
        raise ShapeMismatchError(
            f"cochain is {f.map.rows}x{f.map.cols}; expected coefficients of dimension {m.dim_m} over C of dim {dim_c}")


def delta_c(c: Coalgebra, m: Bicomodule, f: Cochain) -> Cochain:
    """Hochschild coboundary of ``f``; raises the degree by one."""
    _check_cochain(c.dim, m, f)
    d, n = c.dim, f.degree
    out = kron(_eye(d), f.map) @ m.rho_l
    for i in range(1, n + 1):
        leg = kron_all(_eye(d ** (i - 1)), c.delta, _eye(d ** (n - i)))
        out = add(out, scale((-1) ** i, leg @ f.map))
    out = add(out, scale((-1) ** (n + 1), kron(f.map, _eye(d)) @ m.rho_r))
    return Cochain(n + 1, d, out)


def omega(cp: CoderPair, mp: BicomodulePair, f: Cochain) -> Cochain:
    """Sum of ``psi_C`` inserted in each tensor leg of ``f``, minus ``f psi_M``."""
    _check_cochain(cp.dim, mp.bicomodule, f)
    d, n = cp.dim, f.degree
    out = scale(-1, f.map @ mp.psi_m)
    for i in range(1, n + 1):
        leg = kron_all(_eye(d ** (i - 1)), cp.psi, _eye(d ** (n - i)))
        out = add(out, leg @ f.map)
    return Cochain(n, d, out)


def d_coder(cp: CoderPair, mp: BicomodulePair, x: CoderCochain) -> CoderCochain:
    c, m = cp.coalgebra, mp.bicomodule
    n = x.degree
    df = delta_c(c, m, x.f)
    wf = omega(cp, mp, x.f).scaled((-1) ** n)
    if n == 1:
        return CoderCochain(2, df, wf)
    return CoderCochain(n + 1, df, delta_c(c, m, x.g) + wf)


# assembled route ------------------------------------------------------

def _guard(d: int, m: int, n: int, out_degree: int):
    if n < 0:
        raise ShapeMismatchError("degree must be nonnegative")
    if n > config.max_degree():
        raise DimensionOverflowError(
            f"degree {n} exceeds the maximum assembled degree {config.max_degree()} (CODERCO_MAX_DEGREE)")
    check_bound(d ** out_degree * m, f"degree-{out_degree} cochain space dimension")


def delta_matrix(c: Coalgebra, m: Bicomodule, n: int) -> SparseMat:
    """Matrix of the coboundary ``C^n -> C^{n+1}`` on vectorized cochains."""
    if m.rho_l.shape != (c.dim * m.dim_m, m.dim_m):
        raise ShapeMismatchError("bicomodule does not match coalgebra")
    _guard(c.dim, m.dim_m, n, n + 1)
    return _delta_matrix(c, m, n)


@lru_cache(maxsize=128)
def _delta_matrix(c: Coalgebra, m: Bicomodule, n: int) -> SparseMat:
    d, dm = c.dim, m.dim_m
    dn, dn1 = d ** n, d ** (n + 1)
    # rho_l grouped by the M index k: (j, out column i, coeff)
    left = {}
    for r, i, v in ((r, i, v) for i in range(dm) for r, v in m.rho_l.column(i).items()):
        j, k = divmod(r, dm)
        left.setdefault(k, []).append((j, i, v))
    right = {}
    for r, i, v in ((r, i, v) for i in range(dm) for r, v in m.rho_r.column(i).items()):
        k, b = divmod(r, d)
        right.setdefault(k, []).append((b, i, v))
    cop = [list(c.delta.column(a).items()) for a in range(d)]
    sign_r = (-1) ** (n + 1)
    cols = {}
    for k in range(dm):
        lk = left.get(k, ())
        rk = right.get(k, ())
        for w in range(dn):
            col = {}
            for j, i, v in lk:
                key = i * dn1 + j * dn + w
                col[key] = col.get(key, 0) + v
            for leg in range(1, n + 1):
                low = d ** (n - leg)
                prefix, rest = divmod(w, low * d)
                a, suffix = divmod(rest, low)
                base = prefix * low * d * d + suffix
                sgn = -1 if leg % 2 else 1
                for r, v in cop[a]:
                    key = k * dn1 + base + r * low
                    col[key] = col.get(key, 0) + sgn * v
            for b, i, v in rk:
                key = i * dn1 + w * d + b
                col[key] = col.get(key, 0) + sign_r * v
            col = {key: v for key, v in col.items() if v}
            if col:
                cols[k * dn + w] = col
    return SparseMat(dn1 * dm, dn * dm, cols, _trusted=True)


def omega_matrix(cp: CoderPair, mp: BicomodulePair, n: int) -> SparseMat:
    _guard(cp.dim, mp.dim_m, n, n)
    return _omega_matrix(cp, mp, n)


@lru_cache(maxsize=128)
def _omega_matrix(cp: CoderPair, mp: BicomodulePair, n: int) -> SparseMat:
    d, dm = cp.dim, mp.dim_m
    dn = d ** n
    psi = [list(cp.psi.column(a).items()) for a in range(d)]
    psim = {k: [] for k in range(dm)}
    for k, i, v in mp.psi_m.entries():
        psim[k].append((i, v))
    cols = {}
    for k in range(dm):
        for w in range(dn):
            col = {}
            for leg in range(1, n + 1):
                low = d ** (n - leg)
                a = (w // low) % d
                for b, v in psi[a]:
                    key = k * dn + w + (b - a) * low
                    col[key] = col.get(key, 0) + v
            for i, v in psim[k]:
                key = i * dn + w
                col[key] = col.get(key, 0) - v
            col = {key: v for key, v in col.items() if v}
            if col:
                cols[k * dn + w] = col
    return SparseMat(dn * dm, dn * dm, cols, _trusted=True)


def d_coder_matrix(cp: CoderPair, mp: BicomodulePair, n: int) -> SparseMat:
    """Block matrix ``[[delta^n, 0], [(-1)^n omega^n, delta^{n-1}]]``.

    In degree 1 the second block column is absent (there are no Coder
    0-cochains), so ``d^1 = [[delta^1], [-omega^1]]``.
    """
    if n < 1:
        raise ShapeMismatchError("the Coder differential starts in degree 1")
    _guard(cp.dim, mp.dim_m, n, n + 1)
    return _d_coder_matrix(cp, mp, n)


@lru_cache(maxsize=128)
def _d_coder_matrix(cp: CoderPair, mp: BicomodulePair, n: int) -> SparseMat:
    c, m = cp.coalgebra, mp.bicomodule
    top = delta_matrix(c, m, n)
    low = scale((-1) ** n, omega_matrix(cp, mp, n))
    if n == 1:
        return vstack([top, low])
    prev = delta_matrix(c, m, n - 1)
    return vstack([
        hstack([top, SparseMat.zeros(top.rows, prev.cols)]),
        hstack([low, prev]),
    ])


def full_cone_matrix(cp: CoderPair, mp: BicomodulePair, n: int) -> SparseMat:
    """Differential of the untruncated mapping cone of omega.

    Unlike :func:`d_coder_matrix` this keeps ``C^0`` in cone degree 1 (and
    cone degree 0 is ``C^0`` alone).  Provided for comparison only.
    """
    c, m = cp.coalgebra, mp.bicomodule
    if n == 0:
        return vstack([delta_matrix(c, m, 0), omega_matrix(cp, mp, 0)])
    top = delta_matrix(c, m, n)
    prev = delta_matrix(c, m, n - 1)
    low = scale((-1) ** n, omega_matrix(cp, mp, n))
    return vstack([
        hstack([top, SparseMat.zeros(top.rows, prev.cols)]),
        hstack([low, prev]),
    ])
