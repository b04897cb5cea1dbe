"""Descent-restricted permutation polynomials and their interlacing diagrams.

For ``S ⊆ T ⊆ [1, n]`` and ``0 <= k <= n`` the polynomial ``p(n, k, S, T)``
sums ``x**des(w)`` over permutations ``w`` of ``1..n+1`` with ``w(1) = k+1``,
an isolated descent set, and ``S ⊆ Des(w) ⊆ T``.  Two independent routes are
provided: enumeration (:func:`p_bruteforce`) and the first-letter recursion
(:func:`p_recursive`).  Diagrams ``D_n(T)`` are 3 x (n+1) grids of these
polynomials; :func:`verify_interlacing_diagram` checks that every directed
path in a diagram is an interlacing sequence.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .polynomial import (
    ONE, X, ZERO, IntPoly, NotRealRootedError, interlaces, real_rooted,
)

__all__ = [
    "PKey", "DiagramCell", "Verdict", "EnumerationBoundError", "OracleMismatch",
    "enum_bound", "descent_set", "is_isolated", "isolated_subsets",
    "p_bruteforce", "p_recursive", "check_deletion_identity",
    "build_diagram", "build_general_diagram", "diagram_edges",
    "verify_interlacing_diagram", "verify_five_conditions",
    "verify_general_diagram", "interlacing_sequence_check",
]

DEFAULT_ENUM_BOUND = 9
ROWS = ("top", "mid", "bot")


class EnumerationBoundError(ValueError):
    pass


class OracleMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""


def enum_bound() -> int:
    """Largest ``n`` for which permutations of ``n+1`` letters are enumerated.

    ``CHOWKIT_ENUM_BOUND`` overrides the default of 9.
    """
    raw = os.environ.get("CHOWKIT_ENUM_BOUND")
    return int(raw) if raw else DEFAULT_ENUM_BOUND


def _check_bound(n: int, bound: int | None = None) -> None:
    bound = enum_bound() if bound is None else bound
    if n > bound:
        raise EnumerationBoundError(
            f"n = {n} exceeds the enumeration bound {bound} (set CHOWKIT_ENUM_BOUND to raise it)")


def descent_set(w: Sequence[int]) -> frozenset[int]:
    """Positions ``i`` (1-based) with ``w(i) > w(i+1)``."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def is_isolated(s: Iterable[int]) -> bool:
    s = set(s)
    return not any(i + 1 in s for i in s)


def isolated_subsets(lo: int, hi: int) -> list[frozenset[int]]:
    """Subsets of ``[lo, hi]`` without two consecutive integers, ordered by
    size and then lexicographically."""
    if lo > hi + 1:
        raise ValueError(f"empty range needs lo <= hi + 1, got [{lo}, {hi}]")
    items = list(range(lo, hi + 1))
    out = []
    for r in range(len(items) // 2 + 2):
        for combo in itertools.combinations(items, r):
            if all(b - a > 1 for a, b in zip(combo, combo[1:])):
                out.append(frozenset(combo))
    return out


def _as_mask(s: Iterable[int]) -> int:
    m = 0
    for i in s:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class PKey:
    """Index ``(n, k, S, T)`` of one member of the family."""

    n: int
    k: int
    S: frozenset[int] = frozenset()
    T: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k = {self.k} outside [0, {self.n}]")
        if not self.S <= self.T:
            raise ValueError(f"S = {sorted(self.S)} is not a subset of T = {sorted(self.T)}")
        if not self.T <= set(range(1, self.n + 1)):
            raise ValueError(f"T = {sorted(self.T)} is not inside [1, {self.n}]")

    def __str__(self):
        return f"p[n={self.n},k={self.k},S={sorted(self.S)},T={sorted(self.T)}]"


@lru_cache(maxsize=None)
def _descent_profile(n: int, k: int) -> Counter:
    """Multiset of descent-set masks over ``w`` in S_{n+1} with ``w(1) = k+1``
    and isolated descent set."""
    first = k + 1
    rest = [v for v in range(1, n + 2) if v != first]
    prof = Counter()
    for tail in itertools.permutations(rest):
        w = (first,) + tail
        des = 0
        prev_desc = False
        ok = True
        for i in range(n):
            d = w[i] > w[i + 1]
            if d:
                if prev_desc:
                    ok = False
                    break
                des |= 1 << (i + 1)
            prev_desc = d
        if ok:
            prof[des] += 1
    return prof


def p_bruteforce(key: PKey, bound: int | None = None) -> IntPoly:
    """Enumerate permutations directly.  Works for any ``S`` (isolated or not)."""
    _check_bound(key.n, bound)
    smask, tmask = _as_mask(key.S), _as_mask(key.T)
    coeffs = [0] * (key.n + 2)
    for des, count in _descent_profile(key.n, key.k).items():
        if des & smask == smask and des & ~tmask == 0:
            coeffs[bin(des).count("1")] += count
    return IntPoly(coeffs)


def _shift_down(s: frozenset[int]) -> frozenset[int]:
    # drop position 1, renumber the rest: {i - 1 : i in s, i >= 2}
    return frozenset(i - 1 for i in s if i >= 2)


@lru_cache(maxsize=None)
def _p_rec(n: int, k: int, S: frozenset[int], T: frozenset[int]) -> IntPoly:
    if n == 1:
        if k == 0 and not S:
            return ONE
        if k == 1 and T == frozenset({1}):
            return X
        return ZERO
    S1, T1 = _shift_down(S), _shift_down(T)
    out = ZERO
    if 1 in T:
        # w(1) > w(2): position 1 is a descent, so position 2 may not be one
        T1_no1 = T1 - {1}
        if S1 <= T1_no1:
            acc = ZERO
            for j in range(k):
                acc = acc + _p_rec(n - 1, j, S1, T1_no1)
            out = out + acc.shift(1)
    if 1 not in S:
        for j in range(k, n):
            out = out + _p_rec(n - 1, j, S1, T1)
    return out


def p_recursive(key: PKey) -> IntPoly:
    """First-letter recursion, memoized.  Requires an isolated ``S``."""
    if not is_isolated(key.S):
        raise ValueError(f"recursion is only defined for isolated S, got {sorted(key.S)}")
    return _p_rec(key.n, key.k, key.S, key.T)


def p(n: int, k: int, S: Iterable[int] = (), T: Iterable[int] = ()) -> IntPoly:
    """Shorthand for ``p_recursive(PKey(n, k, S, T))``."""
    return p_recursive(PKey(n, k, frozenset(S), frozenset(T)))


def check_deletion_identity(n: int, k: int, S: Iterable[int], T: Iterable[int], s: int,
                            bound: int | None = None) -> bool:
    """``p(S - s ⊆ T) == p(S ⊆ T) + p(S - s ⊆ T - s)``, all by enumeration."""
    S, T = frozenset(S), frozenset(T)
    if s not in S:
        raise ValueError(f"{s} is not in S = {sorted(S)}")
    lhs = p_bruteforce(PKey(n, k, S - {s}, T), bound)
    rhs = p_bruteforce(PKey(n, k, S, T), bound) + p_bruteforce(PKey(n, k, S - {s}, T - {s}), bound)
    return lhs == rhs


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class DiagramCell:
    row: str
    column: int
    poly: IntPoly
    key: PKey | None = None

    @property
    def node(self) -> tuple[str, int]:
        return (self.row, self.column)


@dataclass
class Verdict:
    """Outcome of a verification.  ``failures`` lists human-readable reasons."""

    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    def __bool__(self):
        return self.passed


def _cell(row: str, key: PKey, cross_check: bool) -> DiagramCell:
    poly = p_recursive(key)
    if cross_check and key.n <= enum_bound():
        brute = p_bruteforce(key)
        if brute != poly:
            raise OracleMismatch(f"{key}: recursion gives {poly.pretty()}, enumeration gives {brute.pretty()}")
    return DiagramCell(row, key.k, poly, key)


def build_general_diagram(n: int, rows: Sequence[tuple[Iterable[int], Iterable[int]]],
                          cross_check: bool = True) -> list[DiagramCell]:
    """3 x (n+1) grid whose rows are ``p(n, k, S_r, T_r)`` for the given
    ``(S_r, T_r)`` pairs (top, mid, bot)."""
    cells = []
    for row, (S, T) in zip(ROWS, rows):
        S, T = frozenset(S), frozenset(T)
        for k in range(n + 1):
            cells.append(_cell(row, PKey(n, k, S, T), cross_check))
    return cells


def build_diagram(n: int, T: Iterable[int], cross_check: bool = True) -> list[DiagramCell]:
    """Cells of ``D_n(T)``: rows ``p(∅ ⊆ T-{1})``, ``p(∅ ⊆ T)``, ``p({1} ⊆ T)``."""
    T = frozenset(T)
    if n < 2:
        raise ValueError(f"diagrams need n >= 2, got {n}")
    if 1 not in T:
        raise ValueError(f"T = {sorted(T)} must contain 1")
    return build_general_diagram(n, [((), T - {1}), ((), T), ({1}, T)], cross_check)


def diagram_edges(n: int) -> list[tuple[tuple[str, int], tuple[str, int]]]:
    """Arrows: rightward in each row, downward in each column, and the
    diagonal from the top-right cell to the bottom-left cell."""
    edges = []
    for row in ROWS:
        edges += [((row, k), (row, k + 1)) for k in range(n)]
    for k in range(n + 1):
        edges += [(("top", k), ("mid", k)), (("mid", k), ("bot", k))]
    edges.append((("top", n), ("bot", 0)))
    return edges


def _reachable_pairs(n: int) -> list[tuple[tuple[str, int], tuple[str, int]]]:
    succ: dict = {}
    for u, v in diagram_edges(n):
        succ.setdefault(u, []).append(v)
    nodes = [(r, k) for r in ROWS for k in range(n + 1)]
    pairs = []
    for u in nodes:
        seen, stack = set(), list(succ.get(u, []))
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ.get(v, []))
        # deterministic order: row-major
        pairs += [(u, v) for v in nodes if v in seen]
    return pairs


def _check_pairs(cells: Sequence[DiagramCell], name: str) -> Verdict:
    n = max(c.column for c in cells)
    by_node = {c.node: c.poly for c in cells}
    failures = []
    for node, poly in by_node.items():
        if not poly.is_zero and not real_rooted(poly):
            failures.append(f"{node} = {poly.pretty()} is not real-rooted")
    pairs = _reachable_pairs(n)
    for u, v in pairs:
        f, g = by_node[u], by_node[v]
        try:
            ok = interlaces(f, g)
        except NotRealRootedError:
            continue  # already reported above
        if not ok:
            failures.append(f"{u} = {f.pretty()} does not interlace {v} = {g.pretty()}")
    return Verdict(name, not failures, failures, checked=len(pairs))


def verify_interlacing_diagram(n: int, T: Iterable[int]) -> Verdict:
    """Exact check that every directed path of ``D_n(T)`` is interlacing.

    A path is an interlacing sequence iff each earlier entry interlaces each
    later one, so this checks ``interlaces(u, v)`` for every ordered pair of
    cells with ``v`` reachable from ``u``.
    """
    T = frozenset(T)
    return _check_pairs(build_diagram(n, T), f"D_{n}({sorted(T)})")


def verify_general_diagram(n: int, S: Iterable[int], T: Iterable[int]) -> Verdict:
    """The generalized grid with rows ``p(S-m ⊆ T-m)``, ``p(S-m ⊆ T)``,
    ``p(S ⊆ T)`` where ``m = min T``.  Failures are findings, not errors."""
    S, T = frozenset(S), frozenset(T)
    if not T:
        raise ValueError("T must be non-empty")
    m = min(T)
    if m not in S or not S <= T or not is_isolated(S):
        raise ValueError(f"need min(T) in S ⊆ T with S isolated, got S={sorted(S)}, T={sorted(T)}")
    cells = build_general_diagram(n, [(S - {m}, T - {m}), (S - {m}, T), (S, T)])
    return _check_pairs(cells, f"general(n={n}, S={sorted(S)}, T={sorted(T)})")


def interlacing_sequence_check(polys: Sequence[IntPoly], method: str = "pairwise") -> bool:
    """Is ``polys`` an interlacing sequence?

    ``method="pairwise"`` checks all real-rooted and ``f_i ⪯ f_j`` for i < j.
    ``method="adjacent"`` uses the shortcut of consecutive pairs plus
    first-last, valid only when no entry is zero.
    """
    if any(not f.is_zero and not real_rooted(f) for f in polys):
        return False
    if method == "pairwise":
        return all(interlaces(polys[i], polys[j])
                   for i in range(len(polys)) for j in range(i + 1, len(polys)))
    if method == "adjacent":
        if any(f.is_zero for f in polys):
            raise ValueError("the adjacent-pair shortcut needs nonzero polynomials")
        if len(polys) < 2:
            return True
        return (all(interlaces(a, b) for a, b in zip(polys, polys[1:]))
                and interlaces(polys[0], polys[-1]))
    raise ValueError(f"unknown method {method!r}")


def verify_five_conditions(n: int, T: Iterable[int]) -> Verdict:
    """The induction-step conditions for ``D_n(T)``, each checked directly:
    the three rows are interlacing sequences, every column triple is, and
    ``p(n, n-1, ∅, T-{1}) ⪯ p(n, 1, {1}, T)``."""
    T = frozenset(T)
    cells = build_diagram(n, T)
    grid = {c.node: c.poly for c in cells}
    row = lambda r: [grid[(r, k)] for k in range(n + 1)]
    failures = []
    checks = [
        ("top row", row("top")),
        ("middle row", row("mid")),
        ("bottom row", row("bot")),
    ] + [(f"column {k}", [grid[("top", k)], grid[("mid", k)], grid[("bot", k)]]) for k in range(n + 1)]
    for label, seq in checks:
        if not interlacing_sequence_check(seq):
            failures.append(f"{label} is not an interlacing sequence")
    # the diagonal arrow joins two zero cells; the condition it encodes is
    # top row column n-1 against bottom row column 1
    f, g = grid[("top", n - 1)], grid[("bot", 1)]
    if not (interlacing_sequence_check([f, g])):
        failures.append(f"diagonal: {f.pretty()} does not interlace {g.pretty()}")
    return Verdict(f"five conditions D_{n}({sorted(T)})", not failures, failures, checked=len(checks) + 1)
