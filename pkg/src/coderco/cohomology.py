"""Cocycles, coboundaries and cohomology of the Hochschild and Coder complexes.

Every dimension is an exact rank computation over the rationals.  A basis of
``B^n`` is read off as the pivot columns of the previous differential, so a
single elimination per differential yields both ``Z^n`` and ``B^{n+1}``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .coalg import Coalgebra, CoderPair
from .cochain import (Cochain, CoderCochain, d_coder_matrix, delta_matrix, full_cone_matrix,
                      omega_matrix)
from .comodule import Bicomodule, BicomodulePair
from .errors import ShapeMismatchError
from .exactlin import (SparseMat, _kernel_from_echelon, echelon, kron, normalize_leading,
                       quotient_dim, rank, scale, solve, solve_many, vstack)


@dataclass
class DegreeData:
    degree: int
    dim_cochains: int
    dim_z: int
    dim_b: int
    representatives: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def dim_h(self) -> int:
        return self.dim_z - self.dim_b


@dataclass
class CohomologyReport:
    """Per-degree ``dim Z``, ``dim B``, ``dim H`` and coset representatives.

    Representatives are coordinate vectors normalized to leading coefficient
    1; :meth:`cochains` converts them to cochain objects.
    """

    complex: str
    dim_c: int
    dim_m: int
    degrees: dict = field(default_factory=dict)

    def dim_h(self, n: int) -> int:
        return self.degrees[n].dim_h

    def dims(self) -> dict:
        return {n: d.dim_h for n, d in sorted(self.degrees.items())}

    def cochains(self, n: int) -> list:
        reps = self.degrees[n].representatives
        if self.complex == "coder":
            return [CoderCochain.from_vec(v, n, self.dim_c, self.dim_m) for v in reps]
        return [Cochain.from_vec(v, n, self.dim_c, self.dim_m) for v in reps]

    def to_dict(self, timings: bool = False) -> dict:
        out = {"complex": self.complex, "dim_c": self.dim_c, "dim_m": self.dim_m, "degrees": []}
        for n, d in sorted(self.degrees.items()):
            row = {
                "degree": n,
                "dim_cochains": d.dim_cochains,
                "dim_Z": d.dim_z,
                "dim_B": d.dim_b,
                "dim_H": d.dim_h,
                "representatives": [_sparse_vec(v) for v in d.representatives],
            }
            if timings:
                row["seconds"] = round(d.seconds, 6)
            out["degrees"].append(row)
        return out


def _sparse_vec(v) -> list:
    return [[i, str(x)] for i, x in enumerate(v) if x]


class _Differential:
    """Kernel basis, rank and image basis of one assembled differential."""

    def __init__(self, mat: SparseMat):
        self.mat = mat
        self.ech = echelon(mat)

    @property
    def rank(self) -> int:
        return len(self.ech.pivot_cols)

    def kernel(self) -> list:
        return _kernel_from_echelon(self.ech)

    def image(self) -> list:
        """Independent columns of the matrix (its pivot columns), normalized."""
        out = []
        for p in self.ech.pivot_cols:
            v = [0] * self.mat.rows
            for i, x in self.mat.column(p).items():
                v[i] = x
            out.append(normalize_leading(v))
        return out


def _build(kind, dim_c, dim_m, degrees, matrix_of, lowest, reps=True) -> CohomologyReport:
    report = CohomologyReport(kind, dim_c, dim_m)
    prev: Optional[_Differential] = None
    for n in degrees:
        t0 = time.perf_counter()
        cur = _Differential(matrix_of(n))
        if n == lowest or prev is None:
            boundary = [] if n == lowest else _Differential(matrix_of(n - 1)).image()
        else:
            boundary = prev.image()
        zs = cur.kernel()
        if reps:
            q = quotient_dim(zs, boundary)
            representatives = [normalize_leading(v) for v in q.representatives]
        else:
            representatives = []
        report.degrees[n] = DegreeData(n, cur.mat.cols, len(zs), len(boundary), representatives,
                                       time.perf_counter() - t0)
        prev = cur
    return report


def hochschild_cohomology(c: Coalgebra, m: Bicomodule, nmax: int, representatives: bool = True) -> CohomologyReport:
    """Hochschild cohomology of ``c`` with coefficients in ``m`` for degrees ``0..nmax``."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    return _build("hochschild", c.dim, m.dim_m, range(nmax + 1),
                  lambda n: delta_matrix(c, m, n), 0, representatives)


def coder_cohomology(cp: CoderPair, mp: BicomodulePair, nmax: int, representatives: bool = True) -> CohomologyReport:
    """Coder-pair cohomology for degrees ``1..nmax`` (there are no 0-cochains, so ``B^1 = 0``)."""
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    return _build("coder", cp.dim, mp.dim_m, range(1, nmax + 1),
                  lambda n: d_coder_matrix(cp, mp, n), 1, representatives)


def full_cone_cohomology(cp: CoderPair, mp: BicomodulePair, nmax: int) -> CohomologyReport:
    """Cohomology of the untruncated cone of omega (keeps 0-cochains); dimensions only."""
    return _build("full_cone", cp.dim, mp.dim_m, range(nmax + 1),
                  lambda n: full_cone_matrix(cp, mp, n), 0, reps=False)


def commutator_matrix(cp: CoderPair, mp: BicomodulePair) -> SparseMat:
    """Matrix of ``f -> psi_C f - f psi_M`` on vectorized ``d x m`` maps."""
    d, m = cp.dim, mp.dim_m
    return kron(SparseMat.identity(m), cp.psi) - kron(mp.psi_m.transpose(), SparseMat.identity(d))


def h1_coder_direct(cp: CoderPair, mp: BicomodulePair) -> list:
    """Basis of ``{f in Z^1 : psi_C f = f psi_M}``, built without the Coder differential."""
    stacked = vstack([delta_matrix(cp.coalgebra, mp.bicomodule, 1), commutator_matrix(cp, mp)])
    return _kernel_from_echelon(echelon(stacked))


def same_span(a: list, b: list) -> bool:
    """Mutual containment of two spans, each vector checked by an exact solve."""
    if not a or not b:
        return not a and not b
    n = len(a[0])
    ma = SparseMat.from_columns(n, a)
    mb = SparseMat.from_columns(n, b)
    return (all(x is not None for x in solve_many(ma, b))
            and all(x is not None for x in solve_many(mb, a)))


def class_coordinates(report: CohomologyReport, n: int, boundary: list, vec: list) -> Optional[list]:
    """Coordinates of the class of cocycle ``vec`` in the basis of representatives.

    ``boundary`` is a basis of ``B^n``.  Returns ``None`` if ``vec`` is not in
    ``span(B^n, representatives)`` (i.e. not a cocycle).
    """
    reps = report.degrees[n].representatives
    cols = list(boundary) + list(reps)
    if not cols:
        return [] if not any(vec) else None
    x = solve(SparseMat.from_columns(len(vec), cols), vec)
    if x is None:
        return None
    return x[len(boundary):]


def coder_class_coordinates(cp: CoderPair, mp: BicomodulePair, n: int, vec: list):
    """Class of a Coder ``n``-cochain in ``H^n_Coder``.

    Returns ``(coordinates or None, report)``, where the report covers degree
    ``n`` only and fixes the basis of representatives.
    """
    report = _build("coder", cp.dim, mp.dim_m, [n], lambda k: d_coder_matrix(cp, mp, k), 1)
    boundary = [] if n == 1 else _Differential(d_coder_matrix(cp, mp, n - 1)).image()
    return class_coordinates(report, n, boundary, vec), report


@dataclass
class LESRow:
    degree: int
    dim_h_coder: int
    dim_ker: int
    dim_coker: int
    dim_h_truncated: int

    @property
    def holds(self) -> bool:
        return self.dim_h_coder == self.dim_ker + self.dim_coker


@dataclass
class LESReport:
    rows: list

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.rows)

    def to_dict(self) -> dict:
        return {"holds": self.ok, "degrees": [
            {"degree": r.degree, "dim_H_coder": r.dim_h_coder, "dim_ker_omega_star": r.dim_ker,
             "dim_coker_omega_star_prev": r.dim_coker, "dim_H_truncated": r.dim_h_truncated,
             "holds": r.holds} for r in self.rows]}


def omega_star(cp: CoderPair, mp: BicomodulePair, n: int, reps: list, boundary: list) -> SparseMat:
    """Matrix of the map induced by omega on ``Z^n / boundary`` in the basis ``reps``."""
    h = len(reps)
    if h == 0:
        return SparseMat.zeros(0, 0)
    om = omega_matrix(cp, mp, n)
    basis = SparseMat.from_columns(om.rows, list(boundary) + list(reps))
    images = [om.matvec(z) for z in reps]
    sols = solve_many(basis, images)
    cols = []
    for x in sols:
        if x is None:
            raise ShapeMismatchError("omega does not preserve cocycles")  # excluded by theory
        cols.append(x[len(boundary):])
    return SparseMat.from_columns(h, cols)


def les_check(cp: CoderPair, mp: BicomodulePair, nmax: int, coder: Optional[CohomologyReport] = None) -> LESReport:
    """Check ``dim H^n_Coder = dim ker(omega_*|H^n) + dim coker(omega_*|H^{n-1})``.

    The Coder complex is the mapping cone of omega on the Hochschild complex
    with its degree-0 term removed (there are no Coder 0-cochains).  The
    cohomology ``H~`` of that truncated complex agrees with Hochschild
    cohomology from degree 2 on, while ``H~^0 = 0`` and ``H~^1 = Z^1``.
    """
    if coder is None:
        coder = coder_cohomology(cp, mp, nmax, representatives=False)
    c, m = cp.coalgebra, mp.bicomodule
    dims_ker = {0: 0}
    dims_coker = {0: 0}
    dims_h = {0: 0}
    prev_image: list = []
    for n in range(1, nmax + 1):
        cur = _Differential(delta_matrix(c, m, n))
        zs = cur.kernel()
        boundary = prev_image if n >= 2 else []
        q = quotient_dim(zs, boundary)
        w = omega_star(cp, mp, n, q.representatives, boundary)
        r = rank(w) if q.dim else 0
        dims_h[n] = q.dim
        dims_ker[n] = q.dim - r
        dims_coker[n] = q.dim - r
        prev_image = cur.image()
    rows = [LESRow(n, coder.dim_h(n), dims_ker[n], dims_coker[n - 1], dims_h[n]) for n in range(1, nmax + 1)]
    return LESReport(rows)
