"""Chow and augmented Chow polynomials of ``P̂ = P + 1̂``.

Both are sums over isolated rank sets ``S`` of the flag h-value ``β(S)``
times ``x^|S| (1+x)^(d - 2|S|)``.  The direct route reads ``β`` off the
poset; for simplicial ``P`` the gamma polynomials can also be assembled
from the h-vector and the descent family ``p(n, k, ∅, T)``.  :func:`analyze`
runs both and insists they agree.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .descent import _check_bound, isolated_subsets, p
from .polynomial import (
    IntPoly, gamma_contract, gamma_expand, interlaces, real_rooted,
)
from .poset import (
    GradedPoset, add_top, dual, f_vector, flag_beta, h_vector, is_simplicial, validate,
    InvalidPosetError,
)

__all__ = [
    "ChowResult", "ConsistencyError", "VARIANTS", "chow_poly", "aug_chow_poly",
    "flag_beta_via_h", "gamma_chow_via_p", "analyze",
]

# rank window T of the descent family for each polynomial
VARIANTS = ("chow", "chow_dual", "aug")


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _rank_n(poset_with_top: GradedPoset) -> int:
    n = poset_with_top.top_rank - 1
    if n < 1:
        raise ValueError(f"need a poset with top of rank >= 2, got rank {n + 1}")
    return n


def _isolated_sum(poset_with_top: GradedPoset, lo: int, hi: int, d: int) -> IntPoly:
    one_plus_x = IntPoly([1, 1])
    out = IntPoly()
    for S in isolated_subsets(lo, hi):
        b = flag_beta(poset_with_top, S)
        if b:
            out = out + (one_plus_x ** (d - 2 * len(S))).shift(len(S)).scale(b)
    return out


def chow_poly(poset_with_top: GradedPoset) -> IntPoly:
    """``H(x) = Σ β(S) x^|S| (1+x)^(n-2|S|)`` over isolated ``S ⊆ [2, n]``."""
    n = _rank_n(poset_with_top)
    return _isolated_sum(poset_with_top, 2, n, n)


def aug_chow_poly(poset_with_top: GradedPoset) -> IntPoly:
    """``Haug(x) = Σ β(S) x^|S| (1+x)^(n+1-2|S|)`` over isolated ``S ⊆ [1, n]``."""
    n = _rank_n(poset_with_top)
    return _isolated_sum(poset_with_top, 1, n, n + 1)


def _first_letter_descents(m: int) -> dict[tuple[int, frozenset[int]], int]:
    """``(w(1), Des(w)) -> count`` over all of ``S_m``."""
    _check_bound(m - 1)
    return _first_letter_descents_cached(m)


@lru_cache(maxsize=None)
def _first_letter_descents_cached(m: int) -> dict[tuple[int, frozenset[int]], int]:
    out = Counter()
    for w in itertools.permutations(range(1, m + 1)):
        des = frozenset(i + 1 for i in range(m - 1) if w[i] > w[i + 1])
        out[(w[0], des)] += 1
    return dict(out)


def flag_beta_via_h(h: Sequence[int], S: Iterable[int]) -> int:
    """``β(S) = Σ_k h_k #{w ∈ S_{n+1} : w(1) = k+1, Des(w) = n+1-S}``."""
    n = len(h) - 1
    S = frozenset(S)
    if not S <= set(range(1, n + 1)):
        raise ValueError(f"S = {sorted(S)} is not inside [1, {n}]")
    target = frozenset(n + 1 - s for s in S)
    table = _first_letter_descents(n + 1)
    return sum(hk * table.get((k + 1, target), 0) for k, hk in enumerate(h))


def _window(variant: str, n: int) -> range:
    if variant == "chow":
        return range(1, n)
    if variant == "chow_dual":
        return range(2, n + 1)
    if variant == "aug":
        return range(1, n + 1)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def gamma_chow_via_p(h: Sequence[int], variant: str) -> IntPoly:
    """``Σ_k h_k p(n, k, ∅, T)`` with ``T`` = [1,n-1] (chow), [2,n] (chow_dual)
    or [1,n] (aug)."""
    n = len(h) - 1
    if n < 2:
        raise ValueError(f"the descent-family route needs n >= 2, got n = {n}")
    T = frozenset(_window(variant, n))
    out = IntPoly()
    for k, hk in enumerate(h):
        if hk:
            out = out + p(n, k, (), T).scale(hk)
    return out


def _gamma_or_none(poly: IntPoly, d: int) -> IntPoly | None:
    padded = list(poly.coeffs) + [0] * (d + 1 - len(poly.coeffs))
    if poly.is_zero or padded != padded[::-1]:
        return None
    return gamma_expand(poly, d)


def _safe_interlaces(f: IntPoly, g: IntPoly, f_rr: bool, g_rr: bool) -> bool:
    # interlacing is only meaningful between real-rooted polynomials
    if not (f_rr and g_rr):
        return False
    return interlaces(f, g)


@dataclass(frozen=True)
class ChowResult:
    n: int
    f_vector: list[int]
    h_vector: list[int]
    chow: IntPoly
    chow_dual: IntPoly
    aug: IntPoly
    gamma_chow: IntPoly | None
    gamma_chow_dual: IntPoly | None
    gamma_aug: IntPoly | None
    simplicial: bool
    h_positive: bool
    real_rooted: dict[str, bool] = field(default_factory=dict)
    interlace_dual_aug: bool = False
    interlace_chow_aug: bool = False
    routes: tuple[str, ...] = ()

    @property
    def polys(self) -> dict[str, IntPoly]:
        return {"chow": self.chow, "chow_dual": self.chow_dual, "aug": self.aug}

    @property
    def gammas(self) -> dict[str, IntPoly | None]:
        return {"chow": self.gamma_chow, "chow_dual": self.gamma_chow_dual, "aug": self.gamma_aug}

    @property
    def all_real_rooted(self) -> bool:
        return all(self.real_rooted.values())

    @property
    def conjecture_holds(self) -> bool:
        """Real-rootedness of all three plus both interlacings."""
        return self.all_real_rooted and self.interlace_dual_aug and self.interlace_chow_aug


def analyze(P: GradedPoset, require_simplicial: bool = False) -> ChowResult:
    """Add a top to ``P`` and compute everything.

    For simplicial ``P`` the polynomials are computed a second way (closed
    forms when ``n = 1``, the descent family when ``n >= 2``); any
    disagreement raises :class:`ConsistencyError`.  Non-simplicial inputs get
    the direct computation only.
    """
    problems = validate(P)
    if problems:
        raise InvalidPosetError("; ".join(problems))
    simplicial = is_simplicial(P)
    if require_simplicial and not simplicial:
        raise InvalidPosetError("poset is not simplicial")
    Phat = add_top(P)
    n = _rank_n(Phat)
    Pstar = dual(Phat)

    chow = chow_poly(Phat)
    chow_dual = chow_poly(Pstar)
    aug = aug_chow_poly(Phat)
    aug_of_dual = aug_chow_poly(Pstar)
    if aug != aug_of_dual:
        raise ConsistencyError(
            f"augmented Chow of P̂ ({aug.to_text()}) differs from that of its dual ({aug_of_dual.to_text()})")

    f = f_vector(P)
    h = h_vector(P)
    routes = ["flag-beta"]
    gammas = {"chow": _gamma_or_none(chow, n), "chow_dual": _gamma_or_none(chow_dual, n),
              "aug": _gamma_or_none(aug, n + 1)}
    if simplicial:
        polys = {"chow": chow, "chow_dual": chow_dual, "aug": aug}
        if n == 1:
            m = f[1]
            other = {"chow": IntPoly([1, 1]), "chow_dual": IntPoly([1, 1]), "aug": IntPoly([1, m + 1, 1])}
            routes.append("closed-form")
        else:
            other = {}
            for v in VARIANTS:
                d = n + 1 if v == "aug" else n
                g = gamma_chow_via_p(h, v)
                if gammas[v] != g:
                    raise ConsistencyError(
                        f"{v}: gamma from flag data is {gammas[v]!r}, descent family gives {g.to_text()}")
                other[v] = gamma_contract(g, d)
            routes.append("descent-family")
        for v in VARIANTS:
            if polys[v] != other[v]:
                raise ConsistencyError(f"{v}: {polys[v].to_text()} vs {other[v].to_text()}")

    rr = {name: real_rooted(poly) for name, poly in (("chow", chow), ("chow_dual", chow_dual), ("aug", aug))}
    return ChowResult(
        n=n, f_vector=f, h_vector=h, chow=chow, chow_dual=chow_dual, aug=aug,
        gamma_chow=gammas["chow"], gamma_chow_dual=gammas["chow_dual"], gamma_aug=gammas["aug"],
        simplicial=simplicial, h_positive=all(x >= 0 for x in h), real_rooted=rr,
        interlace_dual_aug=_safe_interlaces(chow_dual, aug, rr["chow_dual"], rr["aug"]),
        interlace_chow_aug=_safe_interlaces(chow, aug, rr["chow"], rr["aug"]),
        routes=tuple(routes),
    )
