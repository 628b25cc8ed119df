"""Coalgebras, coderivations and Coder pairs, with example constructors.

A coalgebra of dimension ``d`` is stored as its coproduct matrix of shape
``d*d x d``: column ``i`` holds ``Delta(e_i)`` in the basis ``e_j (x) e_k``
(flat index ``j*d + k``).  No counit is modelled.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import AxiomViolationError, ShapeMismatchError
from .exactlin import SparseMat, kron, scalar
from .report import Report, collect

Endo = SparseMat


@dataclass(frozen=True, eq=True)
class Coalgebra:
    dim: int
    delta: SparseMat
    check: bool = True

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeMismatchError("coalgebras must have positive dimension")
        if self.delta.shape != (self.dim * self.dim, self.dim):
            raise ShapeMismatchError(
                f"coproduct must be {self.dim**2}x{self.dim}, got {self.delta.rows}x{self.delta.cols}")
        if self.check:
            report = check_coassoc(self)
            if not report:
                raise AxiomViolationError(report)

    def __eq__(self, other):
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return self.dim == other.dim and self.delta == other.delta

    def __hash__(self):
        return hash((self.dim, self.delta))

    @property
    def identity(self) -> SparseMat:
        return SparseMat.identity(self.dim)

    def coproduct_of(self, i: int) -> dict:
        """``{(j, k): c}`` with ``Delta(e_i) = sum c e_j (x) e_k``."""
        d = self.dim
        return {divmod(r, d): v for r, v in sorted(self.delta.column(i).items())}


def coassoc_discrepancy(delta: SparseMat, dim: int) -> SparseMat:
    eye = SparseMat.identity(dim)
    return kron(eye, delta) @ delta - kron(delta, eye) @ delta


def check_coassoc(c: Coalgebra) -> Report:
    """Compare ``(Id (x) Delta) Delta`` with ``(Delta (x) Id) Delta``.

    Discrepancy rows index ``C (x) C (x) C`` slots, columns index the basis
    element ``e_i`` being expanded.
    """
    if c.delta.shape != (c.dim * c.dim, c.dim):
        raise ShapeMismatchError("coproduct shape does not match dimension")
    return collect([("coassociativity", coassoc_discrepancy(c.delta, c.dim))])


def coderivation_discrepancy(c: Coalgebra, psi: SparseMat) -> SparseMat:
    eye = c.identity
    return c.delta @ psi - kron(psi, eye) @ c.delta - kron(eye, psi) @ c.delta


def check_coderivation(c: Coalgebra, psi: SparseMat) -> Report:
    if psi.shape != (c.dim, c.dim):
        raise ShapeMismatchError(f"coderivation must be {c.dim}x{c.dim}")
    return collect([("coderivation", coderivation_discrepancy(c, psi))])


@dataclass(frozen=True, eq=True)
class CoderPair:
    coalgebra: Coalgebra
    psi: SparseMat

    def __post_init__(self):
        c = self.coalgebra
        if self.psi.shape != (c.dim, c.dim):
            raise ShapeMismatchError(f"coderivation must be {c.dim}x{c.dim}")
        failures = check_coassoc(c).failures + check_coderivation(c, self.psi).failures
        if failures:
            raise AxiomViolationError(Report(failures))

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def delta(self) -> SparseMat:
        return self.coalgebra.delta


def new_coder_pair(c: Coalgebra, psi: SparseMat) -> CoderPair:
    """Validated Coder pair; raises :class:`AxiomViolationError` with the report."""
    return CoderPair(c, psi)


# constructors ---------------------------------------------------------

def _from_coproducts(dim: int, coproducts) -> Coalgebra:
    """``coproducts[i]`` is an iterable of ``(j, k, coeff)`` for ``Delta(e_i)``."""
    entries = [(j * dim + k, i, c) for i, terms in enumerate(coproducts) for j, k, c in terms]
    return Coalgebra(dim, SparseMat.from_entries(dim * dim, dim, entries))


def grouplike() -> Coalgebra:
    """One-dimensional coalgebra with ``Delta(g) = g (x) g``."""
    return _from_coproducts(1, [[(0, 0, 1)]])


def zero_coproduct(dim: int) -> Coalgebra:
    return Coalgebra(dim, SparseMat.zeros(dim * dim, dim))


def divided_power(n: int) -> Coalgebra:
    """Span of ``v_0..v_n`` with ``Delta(v_m) = sum_i C(m, i) v_{m-i} (x) v_i``."""
    if n < 0:
        raise ValueError("truncation degree must be nonnegative")
    return _from_coproducts(n + 1, [[(m - i, i, comb(m, i)) for i in range(m + 1)] for m in range(n + 1)])


def binomial_bialgebra(n: int) -> Coalgebra:
    """Span of ``1, x, ..., x^n`` with ``Delta(x^m) = sum_i C(m, i) x^i (x) x^{m-i}``."""
    if n < 0:
        raise ValueError("truncation degree must be nonnegative")
    return _from_coproducts(n + 1, [[(i, m - i, comb(m, i)) for i in range(m + 1)] for m in range(n + 1)])


def comatrix(n: int) -> Coalgebra:
    """Basis ``e_ij`` (index ``i*n + j``) with ``Delta(e_ij) = sum_k e_ik (x) e_kj``."""
    if n < 1:
        raise ValueError("comatrix size must be positive")
    return _from_coproducts(
        n * n, [[(i * n + k, k * n + j, 1) for k in range(n)] for i in range(n) for j in range(n)])


def tensor_words(v: int, n: int) -> list:
    """Words of length ``<= n`` over ``v`` letters: by length, then lexicographic."""
    words = [()]
    layer = [()]
    for _ in range(n):
        layer = [w + (a,) for w in layer for a in range(v)]
        words.extend(layer)
    return words


def truncated_tensor_coalgebra(v: int, n: int) -> Coalgebra:
    """Deconcatenation coproduct on words of length at most ``n``."""
    if v < 1 or n < 0:
        raise ValueError("need v >= 1 and n >= 0")
    from .exactlin import check_bound
    size = n + 1 if v == 1 else (v ** (n + 1) - 1) // (v - 1)
    check_bound(size * size, "tensor coalgebra coproduct rows")
    words = tensor_words(v, n)
    index = {w: i for i, w in enumerate(words)}
    return _from_coproducts(
        len(words), [[(index[w[:s]], index[w[s:]], 1) for s in range(len(w) + 1)] for w in words])


def grading_coderivation(weights: Sequence) -> SparseMat:
    """Diagonal endomorphism with the given weights."""
    return SparseMat.diag([scalar(w) for w in weights])


def degree_grading(c: Coalgebra) -> SparseMat:
    """Weights ``0, 1, ..., d-1`` (the degree map of the divided-power families)."""
    return grading_coderivation(range(c.dim))


def word_length_grading(v: int, n: int) -> SparseMat:
    return grading_coderivation([len(w) for w in tensor_words(v, n)])
