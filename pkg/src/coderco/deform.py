"""Truncated formal deformations of Coder pairs over the coadjoint bicomodule.

A deformation of order ``n`` is a pair of polynomials
``Delta_t = sum Delta_i t^i`` and ``psi_t = sum psi_i t^i`` (``i <= n``) whose
coassociativity and coderivation identities hold modulo ``t^(n+1)``.
Gauges are power series ``Phi_t = Id + sum phi_i t^i`` acting by
``(Phi (x) Phi) Delta_t Phi^-1`` and ``Phi psi_t Phi^-1``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coalg import CoderPair
from .cochain import Cochain, CoderCochain, d_coder, d_coder_matrix
from .cohomology import coder_class_coordinates, coder_cohomology
from .comodule import coadjoint
from .errors import InternalInconsistencyError, InvalidDeformationError, ShapeMismatchError
from .exactlin import (SparseMat, hstack, kernel_basis, kron, quotient_dim, scale, solve,
                       column_space_basis)
from .report import Failure, Report


@dataclass(frozen=True)
class Deformation:
    """Coefficients ``deltas[0..order]`` and ``psis[0..order]``; index 0 is the base pair."""

    base: CoderPair
    deltas: tuple
    psis: tuple

    def __post_init__(self):
        d = self.base.dim
        if len(self.deltas) != len(self.psis) or not self.deltas:
            raise ShapeMismatchError("need the same positive number of coproduct and coderivation coefficients")
        for k, (dl, ps) in enumerate(zip(self.deltas, self.psis)):
            if dl.shape != (d * d, d) or ps.shape != (d, d):
                raise ShapeMismatchError(f"coefficient {k} has the wrong shape")
        if self.deltas[0] != self.base.delta or self.psis[0] != self.base.psi:
            raise ShapeMismatchError("order-0 coefficients must equal the base Coder pair")

    @property
    def order(self) -> int:
        return len(self.deltas) - 1

    @property
    def dim(self) -> int:
        return self.base.dim

    @classmethod
    def trivial(cls, base: CoderPair, order: int) -> "Deformation":
        d = base.dim
        zd, zp = SparseMat.zeros(d * d, d), SparseMat.zeros(d, d)
        return cls(base, (base.delta,) + (zd,) * order, (base.psi,) + (zp,) * order)

    @classmethod
    def from_coefficients(cls, base: CoderPair, deltas: Sequence[SparseMat], psis: Sequence[SparseMat]) -> "Deformation":
        """Build from the higher coefficients (orders ``1..n``)."""
        return cls(base, (base.delta,) + tuple(deltas), (base.psi,) + tuple(psis))

    def truncate(self, order: int) -> "Deformation":
        return Deformation(self.base, self.deltas[:order + 1], self.psis[:order + 1])

    def coefficient(self, k: int) -> CoderCochain:
        d = self.dim
        return CoderCochain(2, Cochain(2, d, self.deltas[k]), Cochain(1, d, self.psis[k]))

    def is_trivial(self) -> bool:
        return all(m.is_zero() for m in self.deltas[1:] + self.psis[1:])


@dataclass(frozen=True)
class Gauge:
    phis: tuple

    def __post_init__(self):
        if not self.phis:
            raise ShapeMismatchError("a gauge needs at least its constant term")
        d = self.phis[0].rows
        if self.phis[0] != SparseMat.identity(d):
            raise ShapeMismatchError("the constant term of a gauge must be the identity")
        if any(p.shape != (d, d) for p in self.phis):
            raise ShapeMismatchError("gauge coefficients must be square of equal size")

    @property
    def order(self) -> int:
        return len(self.phis) - 1

    @property
    def dim(self) -> int:
        return self.phis[0].rows

    @classmethod
    def identity(cls, dim: int, order: int = 0) -> "Gauge":
        return cls((SparseMat.identity(dim),) + (SparseMat.zeros(dim, dim),) * order)

    @classmethod
    def from_coefficients(cls, phis: Sequence[SparseMat]) -> "Gauge":
        """Build from ``phi_1..phi_n``."""
        d = phis[0].rows
        return cls((SparseMat.identity(d),) + tuple(phis))

    def coefficient(self, k: int) -> SparseMat:
        if k < len(self.phis):
            return self.phis[k]
        return SparseMat.zeros(self.dim, self.dim)


@dataclass(frozen=True)
class ObstructionPair:
    ob_c: SparseMat
    ob_psi: SparseMat
    is_cocycle: bool

    def coder_cochain(self) -> CoderCochain:
        d = self.ob_psi.cols
        return CoderCochain(3, Cochain(3, d, self.ob_c), Cochain(2, d, self.ob_psi))

    def is_zero(self) -> bool:
        return self.ob_c.is_zero() and self.ob_psi.is_zero()


# series helpers ---------------------------------------------------------

def _zero_like(m: SparseMat) -> SparseMat:
    return SparseMat.zeros(m.rows, m.cols)


def _series_mul(a: Sequence[SparseMat], b: Sequence[SparseMat], order: int, rows: int, cols: int) -> list:
    out = []
    for k in range(order + 1):
        acc = SparseMat.zeros(rows, cols)
        for i in range(k + 1):
            j = k - i
            if i < len(a) and j < len(b) and not a[i].is_zero() and not b[j].is_zero():
                acc = acc + a[i] @ b[j]
        out.append(acc)
    return out


def _tensor_square(phis: Sequence[SparseMat], order: int) -> list:
    d = phis[0].rows
    out = []
    for s in range(order + 1):
        acc = SparseMat.zeros(d * d, d * d)
        for a in range(s + 1):
            b = s - a
            if a < len(phis) and b < len(phis) and not phis[a].is_zero() and not phis[b].is_zero():
                acc = acc + kron(phis[a], phis[b])
        out.append(acc)
    return out


# validation -------------------------------------------------------------

def _eq3(deltas, k, eye) -> SparseMat:
    d = eye.rows
    acc = SparseMat.zeros(d ** 3, d)
    for i in range(k + 1):
        di, dj = deltas[i], deltas[k - i]
        if di.is_zero() or dj.is_zero():
            continue
        acc = acc + kron(eye, di) @ dj - kron(di, eye) @ dj
    return acc


def _eq4(deltas, psis, k, eye) -> SparseMat:
    d = eye.rows
    acc = SparseMat.zeros(d * d, d)
    for i in range(k + 1):
        j = k - i
        if not deltas[i].is_zero() and not psis[j].is_zero():
            acc = acc + deltas[i] @ psis[j]
        if not psis[i].is_zero() and not deltas[j].is_zero():
            acc = acc - kron(psis[i], eye) @ deltas[j] - kron(eye, psis[i]) @ deltas[j]
    return acc


def validate_deformation(d: Deformation) -> Report:
    """Check the coefficient identities for every ``k <= order``; report the first failure."""
    eye = SparseMat.identity(d.dim)
    for k in range(d.order + 1):
        e3 = _eq3(d.deltas, k, eye)
        if not e3.is_zero():
            return Report((Failure("coassociativity", e3, k),))
        e4 = _eq4(d.deltas, d.psis, k, eye)
        if not e4.is_zero():
            return Report((Failure("coderivation", e4, k),))
    return Report()


def _require_valid(d: Deformation):
    report = validate_deformation(d)
    if not report:
        raise InvalidDeformationError(report)


# infinitesimal and obstruction ---------------------------------------------

@dataclass(frozen=True)
class Infinitesimal:
    order: int
    cochain: CoderCochain
    is_cocycle: bool


def infinitesimal(d: Deformation) -> Infinitesimal:
    """First nonzero coefficient pair (order ``r >= 1``) with a 2-cocycle certificate.

    For the identically trivial deformation the zero cochain at order 1 is returned.
    """
    if d.order < 1:
        raise ShapeMismatchError("an infinitesimal needs order >= 1")
    _require_valid(d)
    r = next((k for k in range(1, d.order + 1) if not (d.deltas[k].is_zero() and d.psis[k].is_zero())), 1)
    x = d.coefficient(r)
    cp = d.base
    image = d_coder_matrix(cp, coadjoint(cp), 2).matvec(x.vec())
    return Infinitesimal(r, x, not any(image))


def obstruction(d: Deformation) -> ObstructionPair:
    """Obstruction cochains to extending ``d`` from order ``n`` to ``n + 1``."""
    _require_valid(d)
    n, dim = d.order, d.dim
    eye = SparseMat.identity(dim)
    ob_c = SparseMat.zeros(dim ** 3, dim)
    ob_psi = SparseMat.zeros(dim ** 2, dim)
    for i in range(1, n + 1):
        j = n + 1 - i
        di, dj, pi, pj = d.deltas[i], d.deltas[j], d.psis[i], d.psis[j]
        if not di.is_zero() and not dj.is_zero():
            ob_c = ob_c + kron(di, eye) @ dj - kron(eye, di) @ dj
        if not di.is_zero() and not pj.is_zero():
            ob_psi = ob_psi + di @ pj
        if not pi.is_zero() and not dj.is_zero():
            ob_psi = ob_psi - kron(eye, pi) @ dj - kron(pi, eye) @ dj
    cp = d.base
    vec = ob_c.vec() + ob_psi.vec()
    image = d_coder_matrix(cp, coadjoint(cp), 3).matvec(vec)
    return ObstructionPair(ob_c, ob_psi, not any(image))


@dataclass(frozen=True)
class ExtendResult:
    status: str  # "extended" or "obstructed"
    obstruction: ObstructionPair
    deformation: Optional[Deformation] = None
    class_coordinates: Optional[list] = None

    @property
    def extended(self) -> bool:
        return self.status == "extended"


def extend(d: Deformation, correction: Optional[CoderCochain] = None) -> ExtendResult:
    """Extend to order ``n + 1`` by solving ``d^2 (Delta_{n+1}, psi_{n+1}) = Ob``.

    The particular solution has all free variables zero.  ``correction`` (a
    2-cocycle) may be added to it to explore other extensions.
    """
    ob = obstruction(d)
    cp = d.base
    mp = coadjoint(cp)
    dim = d.dim
    rhs = ob.ob_c.vec() + ob.ob_psi.vec()
    x = solve(d_coder_matrix(cp, mp, 2), rhs)
    if x is None:
        coords, _ = coder_class_coordinates(cp, mp, 3, rhs)
        return ExtendResult("obstructed", ob, None, coords)
    nxt = CoderCochain.from_vec(x, 2, dim, dim)
    if correction is not None:
        nxt = nxt + correction
    out = Deformation(cp, d.deltas + (nxt.f.map,), d.psis + (nxt.g.map,))
    if not validate_deformation(out):
        raise InternalInconsistencyError("extension failed to validate")
    return ExtendResult("extended", ob, out, None)


# gauges ---------------------------------------------------------------------

def gauge_inverse(g: Gauge, order: int) -> Gauge:
    """Coefficients of ``Phi^-1`` up to ``t^order``."""
    dim = g.dim
    inv = [SparseMat.identity(dim)]
    for k in range(1, order + 1):
        acc = SparseMat.zeros(dim, dim)
        for i in range(1, k + 1):
            phi = g.coefficient(i)
            if not phi.is_zero() and not inv[k - i].is_zero():
                acc = acc - phi @ inv[k - i]
        inv.append(acc)
    return Gauge(tuple(inv))


def compose_gauges(outer: Gauge, inner: Gauge, order: int) -> Gauge:
    """Truncated product ``outer * inner`` (apply ``inner`` first)."""
    dim = outer.dim
    phis = _series_mul([outer.coefficient(i) for i in range(order + 1)],
                       [inner.coefficient(i) for i in range(order + 1)], order, dim, dim)
    return Gauge(tuple(phis))


def apply_gauge(d: Deformation, g: Gauge) -> Deformation:
    """Transport ``d`` along ``g``: ``(Phi (x) Phi) Delta_t Phi^-1`` and ``Phi psi_t Phi^-1``."""
    if g.dim != d.dim:
        raise ShapeMismatchError("gauge and deformation dimensions differ")
    _require_valid(d)
    n, dim = d.order, d.dim
    phis = [g.coefficient(i) for i in range(n + 1)]
    inv = gauge_inverse(g, n).phis
    tsq = _tensor_square(phis, n)
    deltas = _series_mul(_series_mul(tsq, d.deltas, n, dim * dim, dim), inv, n, dim * dim, dim)
    psis = _series_mul(_series_mul(phis, d.psis, n, dim, dim), inv, n, dim, dim)
    out = Deformation(d.base, tuple(deltas), tuple(psis))
    if not validate_deformation(out):
        raise InternalInconsistencyError("gauge transform produced an invalid deformation")
    return out


def check_equivalence(d1: Deformation, d2: Deformation, g: Gauge) -> Report:
    """Check that ``g`` intertwines ``d1`` and ``d2`` coefficient by coefficient."""
    if d1.order != d2.order:
        raise ShapeMismatchError("deformations of different orders")
    if d1.dim != d2.dim or g.dim != d1.dim:
        raise ShapeMismatchError("dimension mismatch")
    n, dim = d1.order, d1.dim
    phis = [g.coefficient(i) for i in range(n + 1)]
    lhs_c = _series_mul(d2.deltas, phis, n, dim * dim, dim)
    rhs_c = _series_mul(_tensor_square(phis, n), d1.deltas, n, dim * dim, dim)
    lhs_p = _series_mul(d2.psis, phis, n, dim, dim)
    rhs_p = _series_mul(phis, d1.psis, n, dim, dim)
    for k in range(n + 1):
        diff = lhs_c[k] - rhs_c[k]
        if not diff.is_zero():
            return Report((Failure("coproduct intertwining", diff, k),))
        diff = lhs_p[k] - rhs_p[k]
        if not diff.is_zero():
            return Report((Failure("coderivation intertwining", diff, k),))
    return Report()


@dataclass(frozen=True)
class InfinitesimalComparison:
    ok: bool
    difference: CoderCochain
    coboundary: CoderCochain
    representative: CoderCochain


def equivalent_infinitesimals_check(d1: Deformation, d2: Deformation, g: Gauge) -> InfinitesimalComparison:
    """Verify ``(Delta'_1, psi'_1) = (Delta_1, psi_1) + d^1(phi_1)`` exactly."""
    if d1.order < 1:
        raise ShapeMismatchError("infinitesimals need order >= 1")
    cp = d1.base
    dim = d1.dim
    diff = d2.coefficient(1) - d1.coefficient(1)
    cob = d_coder(cp, coadjoint(cp), CoderCochain(1, Cochain(1, dim, g.coefficient(1))))
    ok = (diff.f.map == cob.f.map) and (diff.g.map == cob.g.map)
    return InfinitesimalComparison(ok, diff, cob, d1.coefficient(1))


# trivialization -------------------------------------------------------------

@dataclass(frozen=True)
class TrivializeResult:
    status: str  # "trivialized" or "blocked"
    gauge: Gauge
    order: Optional[int] = None
    blocking: Optional[CoderCochain] = None
    class_coordinates: Optional[list] = None

    @property
    def trivialized(self) -> bool:
        return self.status == "trivialized"


def trivialize(d: Deformation, budget: int) -> TrivializeResult:
    """Gauge away coefficients order by order up to ``min(order, budget)``.

    At the lowest nonzero order ``r`` solve ``d^1(phi) = -(Delta_r, psi_r)``
    and apply ``Id + phi t^r``.  Stops at the first order whose coefficient
    is a nontrivial class in ``H^2``.
    """
    _require_valid(d)
    top = min(d.order, budget)
    cur = d.truncate(top)
    cp = d.base
    mp = coadjoint(cp)
    dim = d.dim
    total = Gauge.identity(dim, top)
    d1 = d_coder_matrix(cp, mp, 1)
    for r in range(1, top + 1):
        coeff = cur.coefficient(r)
        if coeff.is_zero():
            continue
        x = solve(d1, [-v for v in coeff.vec()])
        if x is None:
            coords, _ = coder_class_coordinates(cp, mp, 2, coeff.vec())
            return TrivializeResult("blocked", total, r, coeff, coords)
        phi = SparseMat.unvec(x, dim, dim)
        step = Gauge(tuple([SparseMat.identity(dim)] + [SparseMat.zeros(dim, dim)] * (r - 1) + [phi]))
        cur = apply_gauge(cur, step)
        total = compose_gauges(step, total, top)
    if not cur.is_trivial():
        raise InternalInconsistencyError("trivialization left nonzero coefficients")
    return TrivializeResult("trivialized", total)


# sampling -------------------------------------------------------------------

def order_one_system(cp: CoderPair) -> SparseMat:
    """Matrix of the order-1 deformation equations in ``(Delta_1, psi_1)``.

    Built by evaluating the coefficient identities on basis pairs, so it is
    independent of the assembled Coder differential.
    """
    dim = cp.dim
    zd, zp = SparseMat.zeros(dim * dim, dim), SparseMat.zeros(dim, dim)
    eye = SparseMat.identity(dim)
    cols = []
    n_delta = dim ** 3
    for idx in range(n_delta + dim * dim):
        if idx < n_delta:
            d1 = SparseMat.unvec([1 if t == idx else 0 for t in range(n_delta)], dim * dim, dim)
            p1 = zp
        else:
            d1 = zd
            p1 = SparseMat.unvec([1 if t == idx - n_delta else 0 for t in range(dim * dim)], dim, dim)
        deltas, psis = (cp.delta, d1), (cp.psi, p1)
        cols.append(_eq3(deltas, 1, eye).vec() + _eq4(deltas, psis, 1, eye).vec())
    return SparseMat.from_columns(dim ** 4 + dim ** 3, cols)


def _random_combination(basis: list, rng: random.Random, spread: int) -> list:
    if not basis:
        return []
    out = [0] * len(basis[0])
    for v in basis:
        c = rng.randint(-spread, spread)
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return out


_kernel_cache: dict = {}


def _order_one_kernel(cp: CoderPair) -> list:
    key = cp
    if key not in _kernel_cache:
        _kernel_cache[key] = kernel_basis(order_one_system(cp))
    return _kernel_cache[key]


def sample_order_one(cp: CoderPair, rng: random.Random, spread: int = 2) -> Deformation:
    """Random valid order-1 deformation from the kernel of the order-1 system."""
    dim = cp.dim
    vec = _random_combination(_order_one_kernel(cp), rng, spread)
    if not vec:
        return Deformation.trivial(cp, 1)
    x = CoderCochain.from_vec(vec, 2, dim, dim)
    return Deformation.from_coefficients(cp, [x.f.map], [x.g.map])


def sample_deformation(cp: CoderPair, order: int, rng: random.Random, spread: int = 2) -> Deformation:
    """Random valid deformation built by repeated :func:`extend`.

    Each extension adds a random 2-cocycle to the particular solution.
    Stops early (returning a lower order) if an obstruction is met.
    """
    d = sample_order_one(cp, rng, spread)
    kern = _order_one_kernel(cp)
    dim = cp.dim
    while d.order < order:
        vec = _random_combination(kern, rng, spread)
        corr = CoderCochain.from_vec(vec, 2, dim, dim) if vec else None
        res = extend(d, corr)
        if not res.extended:
            break
        d = res.deformation
    return d


def sample_gauge(dim: int, order: int, rng: random.Random, spread: int = 2) -> Gauge:
    phis = [SparseMat.from_dense([[rng.randint(-spread, spread) for _ in range(dim)] for _ in range(dim)])
            for _ in range(order)]
    return Gauge.from_coefficients(phis) if phis else Gauge.identity(dim)
