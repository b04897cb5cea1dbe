"""Finite graded posets given by cover relations.

A :class:`GradedPoset` stores opaque string ids, a rank function and the
cover pairs ``(lower, upper)``.  Chain statistics (flag f- and h-vectors)
are computed by dynamic programming over rank layers; the simplicial test
checks that every lower interval is boolean.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Mapping, Sequence

from .polynomial import IntPoly

__all__ = [
    "GradedPoset", "FlagStats", "InvalidPosetError", "SplitMix64",
    "validate", "is_simplicial", "add_top", "remove_top", "dual", "f_vector", "h_vector",
    "flag_alpha", "flag_beta", "flag_stats", "boolean_lattice", "uniform_flats",
    "face_poset", "random_pure_complex", "sample_facets",
]


class InvalidPosetError(ValueError):
    pass


def _label(face: Iterable) -> str:
    return "{" + ",".join(str(v) for v in face) + "}"


@dataclass(frozen=True, eq=False)
class GradedPoset:
    elements: tuple[str, ...]
    rank: Mapping[str, int]
    covers: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "rank", dict(self.rank))
        object.__setattr__(self, "covers", frozenset((a, b) for a, b in self.covers))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GradedPoset({len(self.elements)} elements, rank {self.top_rank})"

    @cached_property
    def lower_covers(self) -> dict[str, list[str]]:
        out = {x: [] for x in self.elements}
        for a, b in sorted(self.covers):
            if b in out:
                out[b].append(a)
        return out

    @cached_property
    def upper_covers(self) -> dict[str, list[str]]:
        out = {x: [] for x in self.elements}
        for a, b in sorted(self.covers):
            if a in out:
                out[a].append(b)
        return out

    @cached_property
    def top_rank(self) -> int:
        return max(self.rank.values(), default=-1)

    def layer(self, r: int) -> list[str]:
        return [x for x in self.elements if self.rank[x] == r]

    @cached_property
    def minimal(self) -> list[str]:
        return [x for x in self.elements if not self.lower_covers[x]]

    @cached_property
    def maximal(self) -> list[str]:
        return [x for x in self.elements if not self.upper_covers[x]]

    @property
    def has_bottom(self) -> bool:
        return len(self.minimal) == 1 and self.rank[self.minimal[0]] == 0

    @property
    def has_top(self) -> bool:
        return len(self.maximal) == 1 and self.rank[self.maximal[0]] == self.top_rank

    @property
    def bottom(self) -> str:
        if not self.has_bottom:
            raise InvalidPosetError("poset has no bottom element")
        return self.minimal[0]

    @property
    def top(self) -> str:
        if not self.has_top:
            raise InvalidPosetError("poset has no top element")
        return self.maximal[0]

    @cached_property
    def down_sets(self) -> dict[str, frozenset[str]]:
        """``x -> {y : y <= x}``, built bottom-up through the rank layers."""
        out: dict[str, frozenset[str]] = {}
        for x in sorted(self.elements, key=lambda e: self.rank[e]):
            acc = {x}
            for y in self.lower_covers[x]:
                acc |= out[y]
            out[x] = frozenset(acc)
        return out

    def leq(self, a: str, b: str) -> bool:
        return a in self.down_sets[b]


def validate(poset: GradedPoset) -> list[str]:
    """Violated invariants as messages; empty when the poset is valid."""
    problems = []
    elems = set(poset.elements)
    if len(elems) != len(poset.elements):
        problems.append("duplicate element ids")
    for x in poset.elements:
        r = poset.rank.get(x)
        if not isinstance(r, int) or r < 0:
            problems.append(f"element {x!r} has invalid rank {r!r}")
    if problems:
        return problems
    for a, b in sorted(poset.covers):
        if a not in elems or b not in elems:
            problems.append(f"cover ({a!r}, {b!r}) names an unknown element")
        elif poset.rank[b] != poset.rank[a] + 1:
            problems.append(f"cover ({a!r}, {b!r}) jumps from rank {poset.rank[a]} to {poset.rank[b]}")
    if problems:
        return problems
    bottoms = poset.layer(0)
    if len(bottoms) != 1:
        problems.append(f"expected exactly one element of rank 0 (the bottom), found {len(bottoms)}")
    for x in poset.minimal:
        if poset.rank[x] != 0:
            problems.append(f"element {x!r} of rank {poset.rank[x]} has no lower cover (not graded)")
    return problems


def _require_valid(poset: GradedPoset) -> None:
    problems = validate(poset)
    if problems:
        raise InvalidPosetError("; ".join(problems))


def _is_boolean_interval(poset: GradedPoset, x: str) -> bool:
    interval = poset.down_sets[x]
    r = poset.rank[x]
    if len(interval) != 2 ** r:
        return False
    atoms = [y for y in interval if poset.rank[y] == 1]
    if len(atoms) != r:
        return False
    atom_sets = {}
    for y in interval:
        s = frozenset(a for a in atoms if poset.leq(a, y))
        if len(s) != poset.rank[y]:
            return False
        atom_sets[y] = s
    if len(set(atom_sets.values())) != len(interval):
        return False
    interval_covers = [(a, b) for b in interval for a in poset.lower_covers[b]]
    # a bijection onto the subsets, compatible with covers, with the right
    # number of covers is an isomorphism of Hasse diagrams
    return (len(interval_covers) == r * 2 ** (r - 1) if r else True) and all(
        atom_sets[a] < atom_sets[b] for a, b in interval_covers)


def is_simplicial(poset: GradedPoset) -> bool:
    """Every interval ``[0, x]`` is boolean and all maximal elements share a rank."""
    _require_valid(poset)
    if len({poset.rank[m] for m in poset.maximal}) > 1:
        return False
    return all(_is_boolean_interval(poset, x) for x in poset.elements)


def _fresh_id(poset: GradedPoset, base: str) -> str:
    name = base
    while name in poset.rank:
        name += "'"
    return name


def add_top(poset: GradedPoset, top_id: str = "top") -> GradedPoset:
    """Adjoin a new element covering every maximal element."""
    _require_valid(poset)
    t = _fresh_id(poset, top_id)
    r = poset.top_rank + 1
    rank = dict(poset.rank)
    rank[t] = r
    covers = set(poset.covers) | {(m, t) for m in poset.maximal}
    return GradedPoset(poset.elements + (t,), rank, frozenset(covers))


def remove_top(poset: GradedPoset) -> GradedPoset:
    t = poset.top
    return GradedPoset(
        tuple(x for x in poset.elements if x != t),
        {x: r for x, r in poset.rank.items() if x != t},
        frozenset(c for c in poset.covers if t not in c),
    )


def dual(poset: GradedPoset) -> GradedPoset:
    """Reverse the order; ranks become ``top_rank - rank``."""
    _require_valid(poset)
    if not poset.has_top:
        raise InvalidPosetError("the dual needs a top element")
    n = poset.top_rank
    return GradedPoset(
        poset.elements,
        {x: n - r for x, r in poset.rank.items()},
        frozenset((b, a) for a, b in poset.covers),
    )


def f_vector(poset: GradedPoset) -> list[int]:
    """``(f_{-1}, ..., f_{n-1})``: element counts by rank 0..n."""
    n = poset.top_rank
    return [len(poset.layer(i)) for i in range(n + 1)]


def h_vector(poset: GradedPoset) -> list[int]:
    """Coefficients of ``sum_i f_{i-1} x^i (1-x)^(n-i)``."""
    f = f_vector(poset)
    n = len(f) - 1
    one_minus_x = IntPoly([1, -1])
    h = IntPoly()
    for i, fi in enumerate(f):
        h = h + (one_minus_x ** (n - i)).shift(i).scale(fi)
    return [h[i] for i in range(n + 1)]


def _check_rank_subset(poset: GradedPoset, T: Iterable[int]) -> list[int]:
    ranks = sorted(set(T))
    n = poset.top_rank - 1
    for t in ranks:
        if not 1 <= t <= n:
            raise ValueError(f"rank {t} is outside [1, {n}]")
    return ranks


def flag_alpha(poset_with_top: GradedPoset, T: Iterable[int]) -> int:
    """Number of chains whose ranks are exactly ``T``."""
    ranks = _check_rank_subset(poset_with_top, T)
    if not ranks:
        return 1
    counts = {x: 1 for x in poset_with_top.layer(ranks[0])}
    for t in ranks[1:]:
        down = poset_with_top.down_sets
        counts = {x: sum(c for y, c in counts.items() if y in down[x]) for x in poset_with_top.layer(t)}
    return sum(counts.values())


def flag_beta(poset_with_top: GradedPoset, S: Iterable[int]) -> int:
    """Inclusion-exclusion of ``flag_alpha`` over subsets of ``S``."""
    S = _check_rank_subset(poset_with_top, S)
    total = 0
    for r in range(len(S) + 1):
        for T in itertools.combinations(S, r):
            total += (-1) ** (len(S) - r) * flag_alpha(poset_with_top, T)
    return total


@dataclass(frozen=True)
class FlagStats:
    """Flag f-vector ``alpha`` and flag h-vector ``beta`` over all subsets of
    ``[1, n_top]``, keyed by sorted tuples."""

    n_top: int
    alpha: dict[tuple[int, ...], int] = field(default_factory=dict)
    beta: dict[tuple[int, ...], int] = field(default_factory=dict)

    def subsets(self) -> list[tuple[int, ...]]:
        return sorted(self.alpha, key=lambda s: (len(s), s))


def flag_stats(poset_with_top: GradedPoset) -> FlagStats:
    n = poset_with_top.top_rank - 1
    subsets = [c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]
    alpha = {T: flag_alpha(poset_with_top, T) for T in subsets}
    beta = {}
    for S in subsets:
        beta[S] = sum((-1) ** (len(S) - r) * alpha[T]
                      for r in range(len(S) + 1) for T in itertools.combinations(S, r))
    return FlagStats(n, alpha, beta)


# ---------------------------------------------------------------------------
# generators


def _subset_poset(faces: Iterable[tuple], top: str | None = None, top_rank: int | None = None) -> GradedPoset:
    faces = sorted(set(faces), key=lambda f: (len(f), f))
    face_set = set(faces)
    ids = {f: _label(f) for f in faces}
    rank = {ids[f]: len(f) for f in faces}
    covers = set()
    for f in faces:
        for i in range(len(f)):
            g = f[:i] + f[i + 1:]
            if g in face_set:
                covers.add((ids[g], ids[f]))
    elements = [ids[f] for f in faces]
    if top is not None:
        maximal = [f for f in faces if not any(set(f) < set(g) for g in faces if len(g) == len(f) + 1)]
        rank[top] = top_rank
        elements.append(top)
        covers |= {(ids[f], top) for f in maximal}
    return GradedPoset(tuple(elements), rank, frozenset(covers))


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of ``{1..n}`` under inclusion (rank ``n``)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    ground = range(1, n + 1)
    return _subset_poset(c for r in range(n + 1) for c in itertools.combinations(ground, r))


def uniform_flats(k: int, n: int) -> GradedPoset:
    """Lattice of flats of ``U_{k,n}``: subsets of size ``< k`` plus the full set."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    ground = tuple(range(1, n + 1))
    faces = [c for r in range(k) for c in itertools.combinations(ground, r)]
    return _subset_poset(faces, top=_label(ground), top_rank=k)


def face_poset(facets: Sequence[Iterable]) -> GradedPoset:
    """All faces of a pure simplicial complex, ``∅`` at the bottom, ranked by size."""
    facets = [tuple(sorted(set(f), key=_vertex_key)) for f in facets]
    if not facets:
        raise ValueError("a face poset needs at least one facet")
    sizes = {len(f) for f in facets}
    if len(sizes) != 1:
        raise ValueError(f"facets of mixed sizes {sorted(sizes)}; the complex must be pure")
    faces = set()
    for f in facets:
        for r in range(len(f) + 1):
            faces.update(itertools.combinations(f, r))
    return _subset_poset(faces)


def _vertex_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


class SplitMix64:
    """SplitMix64 generator (Steele, Lea and Flood).  Fixed so facet samples
    are replayable in any language."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """``next() % bound`` (modulo bias accepted for replayability)."""
        return self.next() % bound


def sample_facets(num_vertices: int, rank: int, num_facets: int, seed: int) -> list[tuple[int, ...]]:
    """Partial Fisher-Yates over the lexicographic list of ``rank``-subsets of
    ``{1..num_vertices}``: for ``i < num_facets`` swap position ``i`` with
    ``i + below(N - i)``; the first ``num_facets`` entries, sorted, are returned."""
    if not 0 <= rank <= num_vertices:
        raise ValueError(f"rank {rank} must lie in [0, {num_vertices}]")
    pool = list(itertools.combinations(range(1, num_vertices + 1), rank))
    if not 1 <= num_facets <= len(pool):
        raise ValueError(f"num_facets must lie in [1, {len(pool)}], got {num_facets}")
    rng = SplitMix64(seed)
    for i in range(num_facets):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return sorted(pool[:num_facets])


def random_pure_complex(num_vertices: int, rank: int, num_facets: int, seed: int) -> GradedPoset:
    return face_poset(sample_facets(num_vertices, rank, num_facets, seed))


def max_facets(num_vertices: int, rank: int) -> int:
    return comb(num_vertices, rank)
