"""Eulerian and binomial Eulerian polynomials, as independent references for
the Chow pipeline on Boolean lattices."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from .descent import Verdict, _check_bound, descent_set, is_isolated, p
from .polynomial import ONE, IntPoly, gamma_contract, gamma_expand

__all__ = [
    "EulerianData", "eulerian", "binomial_eulerian", "gamma_eulerian",
    "gamma_binomial_eulerian", "eulerian_data", "decomposition_sums", "verify_decomposition",
    "gamma_check",
]


def _descent_sets(n: int) -> tuple[frozenset[int], ...]:
    # bound checked outside the cache so a lowered bound still applies
    _check_bound(n - 1)
    return _descent_sets_cached(n)


@lru_cache(maxsize=None)
def _descent_sets_cached(n: int) -> tuple[frozenset[int], ...]:
    return tuple(descent_set(w) for w in itertools.permutations(range(1, n + 1)))


def eulerian(n: int) -> IntPoly:
    """``A_n(x) = Σ_{w ∈ S_n} x^des(w)``, with ``A_0 = 1``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return ONE
    coeffs = [0] * n
    for d in _descent_sets(n):
        coeffs[len(d)] += 1
    return IntPoly(coeffs)


def binomial_eulerian(n: int) -> IntPoly:
    """``Ã_n(x) = 1 + x Σ_{i=1}^{n} C(n, i) A_i(x)``, so ``Ã_2 = 1 + 3x + x²``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    out = IntPoly()
    for i in range(1, n + 1):
        out = out + eulerian(i).scale(comb(n, i))
    return ONE + out.shift(1)


def _isolated_descent_counts(n: int, hi: int) -> list[int]:
    counts = [1]
    for d in _descent_sets(n):
        if is_isolated(d) and all(i <= hi for i in d):
            while len(counts) <= len(d):
                counts.append(0)
            if d:
                counts[len(d)] += 1
    return counts


def gamma_eulerian(n: int) -> list[int]:
    """``γ_{n,i}``: permutations of ``S_n`` whose descent set is an isolated
    subset of ``[1, n-2]`` of size ``i``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _isolated_descent_counts(n, n - 2)


def gamma_binomial_eulerian(n: int) -> list[int]:
    """``γ̃_{n,i}``: the same count with descents allowed in ``[1, n-1]``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _isolated_descent_counts(n, n - 1)


@dataclass(frozen=True)
class EulerianData:
    n: int
    eulerian: IntPoly
    binomial_eulerian: IntPoly
    gamma_coeffs: list[int]
    gamma_coeffs_binomial: list[int]


def eulerian_data(n: int) -> EulerianData:
    return EulerianData(n, eulerian(n), binomial_eulerian(n), gamma_eulerian(n), gamma_binomial_eulerian(n))


def decomposition_sums(n: int) -> tuple[IntPoly, IntPoly]:
    """``Σ_k p(n, k, ∅, [1, n-1])`` and ``Σ_k p(n, k, ∅, [1, n])``."""
    lower, full = frozenset(range(1, n)), frozenset(range(1, n + 1))
    s_low, s_full = IntPoly(), IntPoly()
    for k in range(n + 1):
        s_low = s_low + p(n, k, (), lower)
        s_full = s_full + p(n, k, (), full)
    return s_low, s_full


def verify_decomposition(n: int,
                         sums: Callable[[int], tuple[IntPoly, IntPoly]] = decomposition_sums) -> Verdict:
    """``A_{n+1} = contract(Σ_k p(n,k,∅,[1,n-1]), n)`` and
    ``Ã_{n+1} = contract(Σ_k p(n,k,∅,[1,n]), n+1)``.

    ``sums`` is injectable so tests can feed perturbed inputs.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    _check_bound(n)
    s_low, s_full = sums(n)
    verdict = Verdict(f"decomposition n={n}", True, checked=2)
    for label, g, d, want in (("eulerian", s_low, n, eulerian(n + 1)),
                              ("binomial eulerian", s_full, n + 1, binomial_eulerian(n + 1))):
        try:
            got = gamma_contract(g, d)
        except ValueError as exc:
            got, err = None, str(exc)
        else:
            err = None
        if got != want:
            verdict.passed = False
            verdict.failures.append(
                f"{label}: expected {want.to_text()}, got {err or got.to_text()}")
    return verdict


def gamma_check(n: int) -> bool:
    """Combinatorial γ counts agree with the γ-expansions of ``A_n`` and ``Ã_n``."""
    return (gamma_expand(eulerian(n)) == IntPoly(gamma_eulerian(n))
            and gamma_expand(binomial_eulerian(n)) == IntPoly(gamma_binomial_eulerian(n)))
