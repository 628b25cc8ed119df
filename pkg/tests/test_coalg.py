from math import comb

import pytest

from coderco.coalg import (Coalgebra, CoderPair, binomial_bialgebra, check_coassoc, check_coderivation, comatrix,
                           degree_grading, divided_power, grouplike, tensor_words, truncated_tensor_coalgebra,
                           word_length_grading, zero_coproduct)
from coderco.errors import AxiomViolationError, ShapeMismatchError
from coderco.examples import AXIOM_SUITE, build, negative_cases
from coderco.exactlin import SparseMat


@pytest.mark.parametrize("label,name,params", AXIOM_SUITE, ids=[x[0] for x in AXIOM_SUITE])
def test_axiom_suite_examples_are_coder_pairs(label, name, params):
    cp = build(name, params)
    assert check_coassoc(cp.coalgebra).ok
    assert check_coderivation(cp.coalgebra, cp.psi).ok


def test_divided_power_coproduct():
    c = divided_power(2)
    assert c.coproduct_of(2) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    c = divided_power(5)
    assert c.coproduct_of(5) == {(5 - i, i): comb(5, i) for i in range(6)}


def test_binomial_is_flip_of_divided_power():
    for n in range(5):
        a, b = divided_power(n), binomial_bialgebra(n)
        for m in range(n + 1):
            assert {(k, j): v for (j, k), v in a.coproduct_of(m).items()} == b.coproduct_of(m)


def test_comatrix_coproduct():
    c = comatrix(2)
    # e_01 -> e_00 (x) e_01 + e_01 (x) e_11
    assert c.coproduct_of(1) == {(0, 1): 1, (1, 3): 1}


def test_tensor_words_order():
    assert tensor_words(2, 2) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]
    c = truncated_tensor_coalgebra(2, 2)
    assert c.dim == 7
    # Delta(ab) = 1 (x) ab + a (x) b + ab (x) 1
    assert c.coproduct_of(4) == {(0, 4): 1, (1, 2): 1, (4, 0): 1}
    assert word_length_grading(2, 2).to_dense()[3][3] == 2


def test_negative_coproduct_discrepancy():
    bad = negative_cases()["bad_coproduct"]
    report = check_coassoc(bad)
    f = report.failure("coassociativity")
    # (Id (x) Delta)Delta(e0) - (Delta (x) Id)Delta(e0) = 0 - e0 (x) e1 (x) e1
    assert f.locations() == [(3, 0, -1)]
    with pytest.raises(AxiomViolationError) as exc:
        Coalgebra(2, bad.delta)
    assert "coassociativity" in str(exc.value)


def test_negative_coderivation_discrepancy():
    c, psi = negative_cases()["bad_coderivation"]
    f = check_coderivation(c, psi).failure("coderivation")
    # Delta(g) - 2 g (x) g
    assert f.locations() == [(0, 0, -1)]
    with pytest.raises(AxiomViolationError):
        CoderPair(c, psi)


def test_grading_is_coderivation_and_identity_is_not():
    c = divided_power(3)
    assert check_coderivation(c, degree_grading(c)).ok
    assert not check_coderivation(c, SparseMat.identity(4)).ok


def test_zero_coproduct_accepts_any_endomorphism():
    c = zero_coproduct(3)
    assert check_coderivation(c, SparseMat.from_dense([[1, 2, 3], [4, 5, 6], [7, 8, 9]])).ok


def test_shape_errors():
    with pytest.raises(ShapeMismatchError):
        Coalgebra(2, SparseMat.zeros(3, 2))
    with pytest.raises(ShapeMismatchError):
        CoderPair(grouplike(), SparseMat.zeros(2, 2))
    with pytest.raises(ValueError):
        comatrix(0)
