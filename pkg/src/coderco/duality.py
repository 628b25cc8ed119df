"""Finite-dimensional duality between Coder pairs and Der pairs.

With dual bases identified index by index, both directions are plain
transposes: ``mult = Delta^T`` (shape ``d x d*d``) and ``phi = psi^T``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coalg import Coalgebra, CoderPair
from .errors import AxiomViolationError, InternalInconsistencyError, ShapeMismatchError
from .exactlin import SparseMat, kron
from .report import Report, collect


@dataclass(frozen=True)
class DerPair:
    """Algebra ``mult: A (x) A -> A`` (column ``j*d + k`` is ``e_j e_k``) with a derivation."""

    dim: int
    mult: SparseMat
    phi: SparseMat

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeMismatchError("algebras must have positive dimension")
        if self.mult.shape != (self.dim, self.dim * self.dim):
            raise ShapeMismatchError(f"multiplication must be {self.dim}x{self.dim ** 2}")
        if self.phi.shape != (self.dim, self.dim):
            raise ShapeMismatchError(f"derivation must be {self.dim}x{self.dim}")


def check_der_pair(a: DerPair) -> Report:
    eye = SparseMat.identity(a.dim)
    u, phi = a.mult, a.phi
    return collect([
        ("associativity", u @ kron(u, eye) - u @ kron(eye, u)),
        ("Leibniz", phi @ u - u @ kron(phi, eye) - u @ kron(eye, phi)),
    ])


def dual_der_pair(cp: CoderPair) -> DerPair:
    out = DerPair(cp.dim, cp.delta.transpose(), cp.psi.transpose())
    report = check_der_pair(out)
    if not report:
        raise InternalInconsistencyError(f"dual of a Coder pair failed validation: {report}")
    return out


def dual_coder_pair(a: DerPair) -> CoderPair:
    """Coder pair on the dual space.  Invalid input raises :class:`AxiomViolationError`."""
    report = check_der_pair(a)
    if not report:
        raise AxiomViolationError(report)
    try:
        return CoderPair(Coalgebra(a.dim, a.mult.transpose()), a.phi.transpose())
    except AxiomViolationError as exc:
        raise InternalInconsistencyError(f"dual of a Der pair failed validation: {exc.report}") from exc


def double_dual_check(cp: CoderPair) -> Report:
    back = dual_coder_pair(dual_der_pair(cp))
    return collect([
        ("double dual coproduct", back.delta - cp.delta),
        ("double dual coderivation", back.psi - cp.psi),
    ])
