"""Exactness checks for the module matrices."""

from fractions import Fraction

import pytest

from nilcone.sl2 import (EndMatrix, casimir_scalar, commutator, expected_casimir,
                         make_irrep)


def test_n0_is_all_zero():
    rep = make_irrep(0)
    for mat in (rep.rho_h, rep.rho_x, rep.rho_y):
        assert mat.rows == ((Fraction(0),),)


def test_n1_matrices_match_weight_formulas():
    rep = make_irrep(1)
    assert rep.rho_h == EndMatrix(1, [[-1, 0], [0, 1]])
    assert rep.rho_x == EndMatrix(1, [[0, 0], [1, 0]])
    assert rep.rho_y == EndMatrix(1, [[0, 1], [0, 0]])


def test_n2_casimir_matrix_is_four_identity():
    # hand computation: (1/2)diag(4,0,4) + diag(0,2,2) + diag(2,2,0) = 4*Id
    rep = make_irrep(2)
    mat = (Fraction(1, 2) * (rep.rho_h * rep.rho_h)
           + rep.rho_x * rep.rho_y + rep.rho_y * rep.rho_x)
    assert mat == 4 * EndMatrix.identity(2)


def test_commutator_examples():
    rep1 = make_irrep(1)
    assert commutator(rep1.rho_h, rep1.rho_x) == 2 * rep1.rho_x
    assert commutator(rep1.rho_x, rep1.rho_x).is_zero()
    rep3 = make_irrep(3)
    expected_h = EndMatrix(3, [[-3 + 2 * i if i == j else 0 for i in range(4)]
                               for j in range(4)])
    assert commutator(rep3.rho_x, rep3.rho_y) == expected_h


def test_commutator_dimension_mismatch():
    with pytest.raises(ValueError):
        commutator(make_irrep(1).rho_x, make_irrep(2).rho_y)


@pytest.mark.parametrize("n,value", [(0, Fraction(0)), (1, Fraction(3, 2)), (2, Fraction(4))])
def test_casimir_scalar_small(n, value):
    assert casimir_scalar(make_irrep(n)) == value


def test_casimir_scalar_rejects_corrupted_module():
    rep = make_irrep(2)
    broken = type(rep)(2, rep.rho_h, rep.rho_x, rep.rho_x)  # lowering replaced by raising
    with pytest.raises(ValueError):
        casimir_scalar(broken)


@pytest.mark.parametrize("n", range(17))
def test_structure_relations_exact(n):
    rep = make_irrep(n)
    assert commutator(rep.rho_h, rep.rho_x) == 2 * rep.rho_x
    assert commutator(rep.rho_h, rep.rho_y) == (-2) * rep.rho_y
    assert commutator(rep.rho_x, rep.rho_y) == rep.rho_h
    assert casimir_scalar(rep) == expected_casimir(n)


@pytest.mark.parametrize("n", range(17))
def test_ladder_operators_nilpotent(n):
    rep = make_irrep(n)
    assert (rep.rho_x ** (n + 1)).is_zero()
    assert (rep.rho_y ** (n + 1)).is_zero()
    if n:
        assert not (rep.rho_x ** n).is_zero()
        assert not (rep.rho_y ** n).is_zero()


def test_matrix_arithmetic_basics():
    a = EndMatrix(1, [[1, 2], [3, 4]])
    b = EndMatrix(1, [[0, 1], [1, 0]])
    assert a + b - b == a
    assert (-a) + a == EndMatrix.zero(1)
    assert a * EndMatrix.identity(1) == a
    assert (Fraction(1, 2) * a).rows[0][1] == 1
    assert (a ** 0) == EndMatrix.identity(1)
    assert a.scalar_value() is None
    assert (3 * EndMatrix.identity(1)).scalar_value() == 3
