import itertools

import pytest
import sympy

from chowkit.chow import (
    ConsistencyError, analyze, aug_chow_poly, chow_poly, flag_beta_via_h, gamma_chow_via_p,
)
from chowkit.classical import binomial_eulerian, eulerian
from chowkit.polynomial import IntPoly, gamma_expand, is_palindromic, multiplicity_at
from chowkit.poset import (
    GradedPoset, InvalidPosetError, add_top, boolean_lattice, dual, face_poset, flag_beta,
    h_vector, remove_top, uniform_flats,
)
from helpers import simplicial_corpus

P = IntPoly.from_text


@pytest.fixture(scope="module")
def corpus():
    return simplicial_corpus()


def test_chow_examples():
    assert chow_poly(uniform_flats(3, 4)) == P("1,7,1")
    assert aug_chow_poly(uniform_flats(3, 4)) == P("1,11,11,1")
    assert chow_poly(dual(uniform_flats(3, 4))) == P("1,5,1")
    for m in range(1, 6):
        rank_two = add_top(face_poset([(v,) for v in range(m)]))
        assert chow_poly(rank_two) == P("1,1")
        assert aug_chow_poly(rank_two) == IntPoly([1, m + 1, 1])


def test_boolean_lattice_gives_eulerian_polynomials():
    for n in range(1, 7):
        B = boolean_lattice(n + 1)
        assert chow_poly(B) == eulerian(n + 1)
        assert aug_chow_poly(B) == binomial_eulerian(n + 1)


def test_rank_one_top_is_rejected():
    with pytest.raises(ValueError):
        chow_poly(boolean_lattice(1))


def test_flag_beta_via_h_examples():
    assert flag_beta_via_h([1, 2, 3], {1}) == 3
    assert flag_beta_via_h([1, 2, 3], {2}) == 5
    assert flag_beta_via_h([1, 2, 3], ()) == 1
    assert flag_beta_via_h([1, 2, 3], {1, 2}) == 3
    for n in range(1, 5):
        B = boolean_lattice(n + 1)
        for r in range(n + 1):
            for S in itertools.combinations(range(1, n + 1), r):
                assert flag_beta_via_h([1] * (n + 1), S) == flag_beta(B, S)
    with pytest.raises(ValueError):
        flag_beta_via_h([1, 2, 3], {3})


def test_gamma_via_descent_family_examples():
    h = [1, 2, 3]
    assert gamma_chow_via_p(h, "chow") == P("1,5")
    assert gamma_chow_via_p(h, "chow_dual") == P("1,3")
    assert gamma_chow_via_p(h, "aug") == P("1,8")
    with pytest.raises(ValueError):
        gamma_chow_via_p([1, 2], "chow")
    with pytest.raises(ValueError):
        gamma_chow_via_p(h, "other")


def test_analyze_worked_example():
    res = analyze(face_poset([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]))
    assert (res.chow, res.chow_dual, res.aug) == (P("1,7,1"), P("1,5,1"), P("1,11,11,1"))
    assert (res.gamma_chow, res.gamma_chow_dual, res.gamma_aug) == (P("1,5"), P("1,3"), P("1,8"))
    assert res.conjecture_holds and res.h_positive and res.simplicial
    assert res.routes == ("flag-beta", "descent-family")


def test_analyze_boolean_truncation():
    for n in range(2, 6):
        res = analyze(remove_top(boolean_lattice(n)))
        assert res.chow == eulerian(n) and res.aug == binomial_eulerian(n)
        assert res.conjecture_holds


def test_analyze_rank_one():
    for m in (1, 2, 5):
        res = analyze(face_poset([(v,) for v in range(m)]))
        assert res.chow == res.chow_dual == P("1,1")
        assert res.aug == IntPoly([1, m + 1, 1])
        assert res.all_real_rooted and res.routes == ("flag-beta", "closed-form")


def test_analyze_non_simplicial_input():
    res = analyze(uniform_flats(3, 4))
    assert not res.simplicial and res.routes == ("flag-beta",)
    assert res.chow == P("1,8,8,1")
    with pytest.raises(InvalidPosetError):
        analyze(uniform_flats(3, 4), require_simplicial=True)


def test_analyze_rejects_invalid_posets():
    bad = GradedPoset(("0", "a", "b"), {"0": 0, "a": 1, "b": 2}, frozenset({("0", "a"), ("0", "b")}))
    with pytest.raises(InvalidPosetError):
        analyze(bad)


def test_consistency_error_is_raised_on_disagreement(monkeypatch):
    import chowkit.chow as chow_mod

    real = chow_mod.gamma_chow_via_p
    monkeypatch.setattr(chow_mod, "gamma_chow_via_p", lambda h, v: real(h, v) + IntPoly([0, 1]))
    with pytest.raises(ConsistencyError):
        analyze(remove_top(uniform_flats(3, 4)))


def test_gamma_routes_agree_on_corpus(corpus):
    for name, P_ in corpus:
        Phat = add_top(P_)
        h = h_vector(P_)
        assert gamma_expand(chow_poly(Phat)) == gamma_chow_via_p(h, "chow"), name
        assert gamma_expand(chow_poly(dual(Phat))) == gamma_chow_via_p(h, "chow_dual"), name
        assert gamma_expand(aug_chow_poly(Phat)) == gamma_chow_via_p(h, "aug"), name


def test_flag_beta_via_h_on_corpus(corpus):
    for name, P_ in corpus:
        Phat = add_top(P_)
        h = h_vector(P_)
        n = len(h) - 1
        for r in range(n + 1):
            for S in itertools.combinations(range(1, n + 1), r):
                assert flag_beta_via_h(h, S) == flag_beta(Phat, S), (name, S)


def test_palindromic_and_self_dual_aug_on_corpus(corpus):
    for name, P_ in corpus:
        Phat = add_top(P_)
        assert is_palindromic(chow_poly(Phat)), name
        assert is_palindromic(aug_chow_poly(Phat)), name
        assert aug_chow_poly(Phat) == aug_chow_poly(dual(Phat)), name


def test_h_positive_corpus_is_real_rooted_and_interlacing(corpus):
    seen = 0
    for name, P_ in corpus:
        res = analyze(P_)
        if res.h_positive:
            seen += 1
            assert res.all_real_rooted, name
            assert res.interlace_dual_aug, name
    assert seen >= 50


def test_disjoint_triangles_break_real_rootedness():
    # h = (1, 3, -3, 1) has a negative entry
    res = analyze(face_poset([(1, 2, 3), (4, 5, 6)]))
    assert res.h_vector == [1, 3, -3, 1]
    assert res.aug == P("1,15,27,15,1")
    assert res.gamma_aug == IntPoly([1, 11, -1])
    assert not res.real_rooted["aug"]
    x = sympy.Symbol("x")
    assert len(sympy.real_roots(sympy.Poly([1, 15, 27, 15, 1], x))) == 2
    assert not res.conjecture_holds


def test_tetrahedra_sharing_a_vertex():
    res = analyze(face_poset([(1, 3, 6, 8), (2, 3, 5, 7)]))
    assert res.h_vector == [1, 3, -3, 1, 0]
    assert res.chow == P("1,23,43,23,1") and not res.real_rooted["chow"]
    assert res.real_rooted["chow_dual"] and res.real_rooted["aug"]
    assert not res.interlace_dual_aug
    assert multiplicity_at(res.aug, -1) == 1


def test_enumeration_bound_applies_after_caching(monkeypatch):
    from chowkit.descent import EnumerationBoundError

    assert flag_beta_via_h([1, 1, 1, 1], {2}) == flag_beta(boolean_lattice(4), {2})
    monkeypatch.setenv("CHOWKIT_ENUM_BOUND", "2")
    with pytest.raises(EnumerationBoundError):
        flag_beta_via_h([1, 3, 3, 1], {2})
