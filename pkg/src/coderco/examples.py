"""Named example Coder pairs shared by the CLI, the tests and the benchmarks."""
from __future__ import annotations

from .coalg import (CoderPair, Coalgebra, binomial_bialgebra, comatrix, degree_grading, divided_power,
                    grouplike, truncated_tensor_coalgebra, word_length_grading, zero_coproduct)
from .exactlin import SparseMat

EXAMPLE_NAMES = ("divided_power", "binomial_bialgebra", "comatrix", "tensor", "grouplike", "zero_coproduct")


def build(name: str, params: tuple = ()) -> CoderPair:
    """Coder pair for a named family.

    ``divided_power N`` and ``binomial_bialgebra N`` carry the degree grading,
    ``tensor V N`` the word-length grading, ``comatrix n`` and
    ``zero_coproduct d`` the zero coderivation (``zero_coproduct d w_1 .. w_d``
    uses the diagonal coderivation with weights ``w``).
    """
    p = [int(x) for x in params]
    if name == "grouplike":
        _arity(name, p, 0)
        return CoderPair(grouplike(), SparseMat.zeros(1, 1))
    if name == "divided_power":
        _arity(name, p, 1)
        c = divided_power(p[0])
        return CoderPair(c, degree_grading(c))
    if name == "binomial_bialgebra":
        _arity(name, p, 1)
        c = binomial_bialgebra(p[0])
        return CoderPair(c, degree_grading(c))
    if name == "comatrix":
        _arity(name, p, 1)
        c = comatrix(p[0])
        return CoderPair(c, SparseMat.zeros(c.dim, c.dim))
    if name == "tensor":
        _arity(name, p, 2)
        return CoderPair(truncated_tensor_coalgebra(p[0], p[1]), word_length_grading(p[0], p[1]))
    if name == "zero_coproduct":
        if not p:
            raise ValueError("zero_coproduct needs a dimension")
        c = zero_coproduct(p[0])
        if len(p) == 1:
            return CoderPair(c, SparseMat.zeros(p[0], p[0]))
        if len(p) != p[0] + 1:
            raise ValueError("zero_coproduct d takes either no weights or exactly d weights")
        return CoderPair(c, SparseMat.diag(p[1:]))
    raise KeyError(name)


def _arity(name, p, n):
    if len(p) != n:
        raise ValueError(f"{name} takes {n} integer parameter(s), got {len(p)}")


# (label, family, params) for the axiom suite: every family at desk sizes
AXIOM_SUITE = tuple(
    [("grouplike", "grouplike", ())]
    + [(f"divided_power({n})", "divided_power", (n,)) for n in range(7)]
    + [(f"binomial_bialgebra({n})", "binomial_bialgebra", (n,)) for n in range(7)]
    + [(f"comatrix({n})", "comatrix", (n,)) for n in range(1, 4)]
    + [(f"tensor({v},{n})", "tensor", (v, n)) for v in (1, 2) for n in range(4)]
    + [("zero_coproduct(2)", "zero_coproduct", (2, 0, 1)), ("zero_coproduct(3)", "zero_coproduct", (3,))]
)

# pairs on which cohomology and the complex laws are run through degree 3
SHIPPED = (
    ("grouplike", "grouplike", ()),
    ("zero_coproduct(2)", "zero_coproduct", (2, 0, 1)),
    ("divided_power(2)", "divided_power", (2,)),
    ("divided_power(3)", "divided_power", (3,)),
    ("binomial_bialgebra(2)", "binomial_bialgebra", (2,)),
    ("binomial_bialgebra(3)", "binomial_bialgebra", (3,)),
    ("comatrix(2)", "comatrix", (2,)),
    ("comatrix(3)", "comatrix", (3,)),
    ("tensor(1,3)", "tensor", (1, 3)),
    ("tensor(2,1)", "tensor", (2, 1)),
    ("tensor(2,2)", "tensor", (2, 2)),
)


def shipped() -> list:
    return [(label, build(name, params)) for label, name, params in SHIPPED]


def negative_cases() -> dict:
    """The two documented invalid inputs.

    ``bad_coproduct``: ``Delta(e_0) = e_0 (x) e_1`` on a 2-dimensional space.
    ``bad_coderivation``: grouplike coalgebra with ``psi = Id``.
    """
    bad = Coalgebra(2, SparseMat.from_entries(4, 2, [(1, 0, 1)]), check=False)
    return {"bad_coproduct": bad, "bad_coderivation": (grouplike(), SparseMat.identity(1))}
