"""Character arithmetic against brute-force weight enumeration."""

import pytest

from nilcone.characters import (Character, adjoint_character,
                                decompose_into_irreducibles, invariant_dim,
                                irrep_character, sym_power, sym_power_brute,
                                tensor_decompose)


def test_irrep_character_small():
    assert irrep_character(0) == Character({0: 1})
    assert irrep_character(1) == Character({-1: 1, 1: 1})
    assert irrep_character(2) == Character({-2: 1, 0: 1, 2: 1})


def test_characters_are_genuine():
    for n in range(10):
        assert irrep_character(n).is_genuine()
        assert irrep_character(n).dimension() == n + 1


def test_tensor_decompose_examples():
    for a in range(6):
        assert tensor_decompose(a, 0) == (a,)
    # hand peeling: {-1,1}^2 = {-2:1, 0:2, 2:1} -> V_2 then V_0
    assert tensor_decompose(1, 1) == (2, 0)
    # {-2,0,2}^2 = {-4:1,-2:2,0:3,2:2,4:1} -> V_4, V_2, V_0
    assert tensor_decompose(2, 2) == (4, 2, 0)


def test_tensor_decompose_clebsch_gordan_range():
    for a in range(7):
        for b in range(7):
            expected = tuple(range(a + b, abs(a - b) - 1, -2))
            assert tensor_decompose(a, b) == expected


@pytest.mark.parametrize("a", range(13))
@pytest.mark.parametrize("b", range(13))
def test_tensor_dimension_sum(a, b):
    assert sum(w + 1 for w in tensor_decompose(a, b)) == (a + 1) * (b + 1)


def test_sym_power_trivial_and_small():
    adj = adjoint_character()
    assert sym_power(0, adj) == Character({0: 1})
    assert sym_power(1, adj) == adj
    # degree-2 monomials in weights {-2,0,2}: {-4:1,-2:1,0:2,2:1,4:1}
    assert sym_power(2, adj) == Character({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})
    assert sym_power(2, adj) == irrep_character(4) + irrep_character(0)
    assert sym_power(3, adj) == irrep_character(6) + irrep_character(2)


@pytest.mark.parametrize("m", range(13))
def test_sym_power_matches_brute_force(m):
    adj = adjoint_character()
    assert sym_power(m, adj) == sym_power_brute(m, adj)


def test_sym_power_of_standard_module():
    std = irrep_character(1)
    for m in range(9):
        assert sym_power(m, std) == irrep_character(m)
        assert sym_power(m, std) == sym_power_brute(m, std)


def test_sym_power_rejects_non_genuine():
    with pytest.raises(ValueError):
        sym_power(2, Character({1: 1}))


def test_adjoint_sym_power_decomposition_shape():
    for m in range(11):
        pieces = decompose_into_irreducibles(sym_power(m, adjoint_character()))
        expected = {}
        for j in range(m // 2 + 1):
            expected[2 * m - 4 * j] = expected.get(2 * m - 4 * j, 0) + 1
        assert pieces == expected


def test_invariant_dim_examples():
    for m in range(21):
        assert invariant_dim(0, m) == (1 if m % 2 == 0 else 0)
        assert invariant_dim(1, m) == 0
    assert invariant_dim(2, 1) == 1


def test_invariant_dim_positive_needs_even_n():
    for n in range(11):
        for m in range(15):
            if invariant_dim(n, m) > 0:
                assert n % 2 == 0


def test_decompose_rejects_asymmetric():
    with pytest.raises(ValueError):
        decompose_into_irreducibles(Character({3: 1}))
