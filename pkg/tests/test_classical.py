from math import comb, factorial

import pytest

from chowkit.chow import aug_chow_poly, chow_poly
from chowkit.classical import (
    binomial_eulerian, decomposition_sums, eulerian, eulerian_data, gamma_binomial_eulerian,
    gamma_eulerian, verify_decomposition,
)
from chowkit.descent import EnumerationBoundError
from chowkit.polynomial import IntPoly, gamma_contract, gamma_expand, is_palindromic, real_rooted
from chowkit.poset import boolean_lattice

P = IntPoly.from_text


def test_eulerian_examples():
    assert eulerian(0) == eulerian(1) == P("1")
    assert eulerian(3) == P("1,4,1")
    assert eulerian(4)(1) == 24
    for n in range(1, 8):
        assert eulerian(n)(1) == factorial(n)


def test_binomial_eulerian_examples():
    assert binomial_eulerian(2) == P("1,3,1")
    assert binomial_eulerian(2) == aug_chow_poly(boolean_lattice(2))
    assert binomial_eulerian(3) == aug_chow_poly(boolean_lattice(3)) == P("1,7,7,1")
    for n in range(1, 8):
        assert binomial_eulerian(n)(1) == 1 + sum(comb(n, i) * factorial(i) for i in range(1, n + 1))


def test_binomial_eulerian_equals_full_binomial_sum():
    # 1 + x * sum_{i>=1} C(n,i) A_i  ==  sum_{i>=0} C(n,i) A_i x^(n-i)
    for n in range(1, 8):
        alt = IntPoly()
        for i in range(n + 1):
            alt = alt + eulerian(i).shift(n - i).scale(comb(n, i))
        assert binomial_eulerian(n) == alt


def test_gamma_examples():
    assert gamma_eulerian(3) == [1, 2]
    assert gamma_expand(eulerian(3)) == P("1,2")
    assert gamma_binomial_eulerian(2) == [1, 1]
    for n in range(1, 9):
        assert gamma_eulerian(n)[0] == gamma_binomial_eulerian(n)[0] == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_gamma_counts_match_expansion(n):
    assert gamma_expand(eulerian(n)) == IntPoly(gamma_eulerian(n))
    assert gamma_expand(binomial_eulerian(n)) == IntPoly(gamma_binomial_eulerian(n))
    assert is_palindromic(eulerian(n)) and is_palindromic(binomial_eulerian(n))
    assert real_rooted(eulerian(n)) and real_rooted(binomial_eulerian(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_boolean_lattice_identities(n):
    B = boolean_lattice(n + 1)
    assert chow_poly(B) == eulerian(n + 1)
    assert aug_chow_poly(B) == binomial_eulerian(n + 1)


def test_eulerian_data_bundle():
    d = eulerian_data(4)
    assert d.eulerian == P("1,11,11,1") and d.gamma_coeffs == [1, 8]
    assert d.binomial_eulerian(1) == 1 + 4 * 1 + 6 * 2 + 4 * 6 + 24


@pytest.mark.parametrize("n", range(2, 6))
def test_decomposition(n):
    v = verify_decomposition(n)
    assert v, v.failures


def test_decomposition_small_case_by_hand():
    s_low, s_full = decomposition_sums(2)
    assert s_low == P("1,2")  # 1 + x + x
    assert gamma_contract(s_low, 2) == eulerian(3)


def test_decomposition_detects_perturbation():
    def perturbed(n):
        lo, full = decomposition_sums(n)
        return lo, full + IntPoly([0, 1])

    v = verify_decomposition(3, perturbed)
    assert not v and "binomial" in v.failures[0]

    def too_long(n):
        lo, full = decomposition_sums(n)
        return lo + IntPoly([0, 0, 0, 1]), full

    assert not verify_decomposition(3, too_long)


def test_bounds_and_errors(monkeypatch):
    with pytest.raises(ValueError):
        verify_decomposition(1)
    with pytest.raises(ValueError):
        eulerian(-1)
    monkeypatch.setenv("CHOWKIT_ENUM_BOUND", "3")
    with pytest.raises(EnumerationBoundError):
        verify_decomposition(4)


def test_enumeration_bound_applies_after_caching(monkeypatch):
    assert eulerian(5)(1) == 120
    monkeypatch.setenv("CHOWKIT_ENUM_BOUND", "3")
    with pytest.raises(EnumerationBoundError):
        eulerian(5)
