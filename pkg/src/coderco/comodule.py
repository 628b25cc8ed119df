"""Bicomodules over coalgebras and Coder pairs; coadjoint and semi-direct constructions.

``rho_l`` has shape ``d*m x m`` in the basis ``e_j (x) u_k`` (index ``j*m + k``);
``rho_r`` has shape ``m*d x m`` in the basis ``u_j (x) e_k`` (index ``j*d + k``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .coalg import Coalgebra, CoderPair
from .errors import AxiomViolationError, InternalInconsistencyError, ShapeMismatchError
from .exactlin import SparseMat, kron
from .report import Report, collect


@dataclass(frozen=True)
class Bicomodule:
    dim_m: int
    rho_l: SparseMat
    rho_r: SparseMat

    def __post_init__(self):
        if self.dim_m < 1:
            raise ShapeMismatchError("bicomodules must have positive dimension")
        if self.rho_l.cols != self.dim_m or self.rho_r.cols != self.dim_m:
            raise ShapeMismatchError("coaction column count must equal dim M")
        if self.rho_l.rows % self.dim_m or self.rho_l.rows != self.rho_r.rows:
            raise ShapeMismatchError("coaction row counts must both be d*m")

    @property
    def dim_c(self) -> int:
        return self.rho_l.rows // self.dim_m


def _shape_check(c: Coalgebra, m: Bicomodule):
    if m.rho_l.shape != (c.dim * m.dim_m, m.dim_m) or m.rho_r.shape != (m.dim_m * c.dim, m.dim_m):
        raise ShapeMismatchError(f"coactions do not match coalgebra dimension {c.dim}")


def check_bicomodule(c: Coalgebra, m: Bicomodule) -> Report:
    """Left/right coassociativity and left-right compatibility."""
    _shape_check(c, m)
    ic = SparseMat.identity(c.dim)
    im = SparseMat.identity(m.dim_m)
    rl, rr, delta = m.rho_l, m.rho_r, c.delta
    return collect([
        ("left coassociativity", kron(delta, im) @ rl - kron(ic, rl) @ rl),
        ("right coassociativity", kron(im, delta) @ rr - kron(rr, ic) @ rr),
        ("compatibility", kron(ic, rr) @ rl - kron(rl, ic) @ rr),
    ])


@dataclass(frozen=True)
class BicomodulePair:
    """A bicomodule together with ``psi_m``; validated against a base Coder pair
    by :func:`new_bicomodule_pair`, not at construction."""

    bicomodule: Bicomodule
    psi_m: SparseMat

    def __post_init__(self):
        if self.psi_m.shape != (self.bicomodule.dim_m,) * 2:
            raise ShapeMismatchError("psi_m must be m x m")

    @property
    def dim_m(self) -> int:
        return self.bicomodule.dim_m

    @property
    def rho_l(self) -> SparseMat:
        return self.bicomodule.rho_l

    @property
    def rho_r(self) -> SparseMat:
        return self.bicomodule.rho_r


def check_comodule_pair(cp: CoderPair, mp: BicomodulePair) -> Report:
    m = mp.bicomodule
    _shape_check(cp.coalgebra, m)
    ic = SparseMat.identity(cp.dim)
    im = SparseMat.identity(m.dim_m)
    psi, pm = cp.psi, mp.psi_m
    rl, rr = m.rho_l, m.rho_r
    return collect([
        ("left pair law", rl @ pm - kron(ic, pm) @ rl - kron(psi, im) @ rl),
        ("right pair law", rr @ pm - kron(pm, ic) @ rr - kron(im, psi) @ rr),
    ])


def new_bicomodule_pair(cp: CoderPair, bicomodule: Bicomodule, psi_m: SparseMat) -> BicomodulePair:
    mp = BicomodulePair(bicomodule, psi_m)
    report = Report(check_bicomodule(cp.coalgebra, bicomodule).failures + check_comodule_pair(cp, mp).failures)
    if not report:
        raise AxiomViolationError(report)
    return mp


def coadjoint(cp: CoderPair) -> BicomodulePair:
    """``M = C`` with both coactions equal to the coproduct and ``psi_M = psi_C``."""
    return BicomodulePair(Bicomodule(cp.dim, cp.delta, cp.delta), cp.psi)


def semidirect(cp: CoderPair, mp: BicomodulePair) -> CoderPair:
    """Coder pair on ``C (+) M`` (basis: C first, then M) with the semi-direct coproduct."""
    d, m = cp.dim, mp.dim_m
    n = d + m
    entries = []
    for i in range(d):
        for r, v in cp.delta.column(i).items():
            j, k = divmod(r, d)
            entries.append((j * n + k, i, v))
    for i in range(m):
        for r, v in mp.rho_l.column(i).items():
            j, k = divmod(r, m)
            entries.append((j * n + d + k, d + i, v))
        for r, v in mp.rho_r.column(i).items():
            j, k = divmod(r, d)
            entries.append(((d + j) * n + k, d + i, v))
    psi = [(i, j, v) for i, j, v in cp.psi.entries()]
    psi += [(d + i, d + j, v) for i, j, v in mp.psi_m.entries()]
    try:
        return CoderPair(Coalgebra(n, SparseMat.from_entries(n * n, n, entries)),
                         SparseMat.from_entries(n, n, psi))
    except AxiomViolationError as exc:
        raise InternalInconsistencyError(f"semi-direct product is not a Coder pair: {exc.report}") from exc
