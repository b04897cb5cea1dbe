"""Seeded generators and brute-force oracles shared by the test modules."""
from __future__ import annotations

import itertools
import random
from math import comb

from chowkit.descent import build_diagram
from chowkit.polynomial import IntPoly, gamma_contract
from chowkit.poset import boolean_lattice, random_pure_complex, remove_top, uniform_flats

ONE_PLUS_X = IntPoly([1, 1])


def poly_from_neg_roots(bs, c: int = 1) -> IntPoly:
    """``c * prod (x + b)``: real-rooted with non-negative coefficients for b >= 0."""
    out = IntPoly([c])
    for b in bs:
        out = out * IntPoly([b, 1])
    return out


def random_rooted(rng: random.Random, deg: int, hi: int = 6) -> IntPoly:
    return poly_from_neg_roots([rng.randint(0, hi) for _ in range(deg)], rng.randint(1, 3))


def interlacing_family(rng: random.Random, length: int, hi: int = 9) -> list[IntPoly]:
    """``f_i = c_i * g / (x + b_i)`` with ``b_1 <= b_2 <= ...``: removing a
    smaller root of ``g`` first gives ``f_1 ⪯ f_2 ⪯ ...``.  Ties among the
    ``b`` produce shared roots."""
    bs = sorted(rng.randint(0, hi) for _ in range(length))
    return [poly_from_neg_roots(bs[:i] + bs[i + 1:], rng.randint(1, 4)) for i in range(length)]


def diagram_rows(n_max: int = 5) -> list[list[IntPoly]]:
    """Rows of the diagrams D_n([1,n]) and D_n([1,n-1]) with zero cells dropped."""
    rows = []
    for n in range(2, n_max + 1):
        for T in (range(1, n + 1), range(1, n)):
            cells = build_diagram(n, T)
            for r in ("top", "mid", "bot"):
                row = [c.poly for c in cells if c.row == r and not c.poly.is_zero]
                if len(row) >= 2:
                    rows.append(row)
    return rows


def random_gamma(rng: random.Random, deg: int, hi: int = 12) -> IntPoly:
    """Non-negative gamma vector with constant term 1."""
    return IntPoly([1] + [rng.randint(0, hi) for _ in range(deg)])


def rooted_gamma(rng: random.Random, deg: int, hi: int = 8) -> IntPoly:
    """``prod (1 + a x)``: real-rooted gamma polynomial with negative roots."""
    out = IntPoly([1])
    for _ in range(deg):
        out = out * IntPoly([1, rng.randint(1, hi)])
    return out


def palindromic_real_rooted(rng: random.Random, d: int) -> IntPoly:
    g = rooted_gamma(rng, rng.randint(0, d // 2))
    return gamma_contract(g, d)


# ---------------------------------------------------------------------------
# posets


def simplicial_corpus(random_count: int = 100, seed: int = 2024) -> list[tuple[str, object]]:
    """Boolean truncations, uniform-matroid truncations and seeded random pure
    complexes, all of rank >= 2."""
    corpus = []
    for n in range(3, 8):
        corpus.append((f"B_{n} minus top", remove_top(boolean_lattice(n))))
    for n in range(3, 8):
        for k in range(3, n):  # k = n would repeat the Boolean case
            corpus.append((f"U_{k},{n} minus top", remove_top(uniform_flats(k, n))))
    rng = random.Random(seed)
    target = len(corpus) + random_count
    while len(corpus) < target:
        m = rng.randint(3, 8)
        r = rng.randint(2, min(4, m))
        f = rng.randint(1, comb(m, r))
        s = rng.randrange(1 << 32)
        corpus.append((f"random(m={m}, r={r}, f={f}, seed={s})", random_pure_complex(m, r, f, s)))
    return corpus


def chains_by_rank_set(poset_with_top) -> dict[tuple[int, ...], int]:
    """Brute-force count of chains of elements strictly between bottom and top,
    keyed by their exact set of ranks."""
    n = poset_with_top.top_rank - 1
    inner = [x for x in poset_with_top.elements if 1 <= poset_with_top.rank[x] <= n]
    inner.sort(key=lambda x: poset_with_top.rank[x])
    counts: dict[tuple[int, ...], int] = {}

    def extend(chain, start):
        key = tuple(poset_with_top.rank[x] for x in chain)
        counts[key] = counts.get(key, 0) + 1
        for i in range(start, len(inner)):
            y = inner[i]
            if not chain or (poset_with_top.rank[y] > poset_with_top.rank[chain[-1]]
                             and poset_with_top.leq(chain[-1], y)):
                extend(chain + [y], i + 1)

    extend([], 0)
    return counts


def exact_beta_by_chains(poset_with_top) -> dict[tuple[int, ...], int]:
    """Flag h-vector from brute-force chain counts by inclusion-exclusion."""
    alpha = chains_by_rank_set(poset_with_top)
    n = poset_with_top.top_rank - 1
    out = {}
    for r in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), r):
            out[S] = sum((-1) ** (len(S) - len(T)) * alpha.get(T, 0)
                         for q in range(len(S) + 1) for T in itertools.combinations(S, q))
    return out


def float_interlaces(f: IntPoly, g: IntPoly) -> bool:
    """Floating point version of the alternation test, for well-separated roots."""
    import numpy as np

    if f.is_zero or g.is_zero:
        return True
    if f.degree <= 1 and g.degree <= 1:
        return True
    if g.degree not in (f.degree, f.degree + 1):
        return False
    a = sorted(np.roots(list(f.coeffs)[::-1]).real, reverse=True) if f.degree else []
    b = sorted(np.roots(list(g.coeffs)[::-1]).real, reverse=True)
    eps = 1e-9
    for i, x in enumerate(a):
        if b[i] < x - eps:
            return False
        if i + 1 < len(b) and x < b[i + 1] - eps:
            return False
    return True


# ---------------------------------------------------------------------------
# seeded property suites: each returns (instances checked, failure messages)

from chowkit.descent import interlacing_sequence_check  # noqa: E402
from chowkit.polynomial import X, gamma_expand, interlaces, multiplicity_at, real_rooted  # noqa: E402


# sample-coverage guards only mean something on large samples
COVERAGE_MIN = 100


def _random_sequence(rng: random.Random) -> list[IntPoly]:
    if rng.random() < 0.25:
        rows = diagram_rows(4)
        return rng.choice(rows)
    return interlacing_family(rng, rng.randint(2, 5))


def suite_sum_rules(seed: int, count: int) -> tuple[int, list[str]]:
    """Sum rules on members of interlacing sequences (f_a ⪯ f_b for a < b):
    f, g ⪯ h gives f + g ⪯ h; f ⪯ g, h gives f ⪯ g + h; f ⪯ g gives g ⪯ x f."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        seq = _random_sequence(rng)
        n = len(seq)
        a, b = sorted(rng.sample(range(n), 2))
        f, g = seq[a], seq[b]
        a2, b2 = rng.randint(0, b - 1), rng.randint(a + 1, n - 1)
        if not interlaces(f + seq[a2], g):
            bad.append(f"rule 1 at {a},{a2} < {b} in {seq!r}")
        if not interlaces(f, g + seq[b2]):
            bad.append(f"rule 2 at {a} < {b},{b2} in {seq!r}")
        if not interlaces(g, X * f):
            bad.append(f"rule 3 at {a} < {b} in {seq!r}")
    return count, bad


def suite_adjacent_shortcut(seed: int, count: int) -> tuple[int, list[str]]:
    """Consecutive pairs plus first-last agree with the full pairwise test on
    nonzero sequences; half of the samples are scrambled to hit both answers."""
    rng = random.Random(seed)
    bad, positives, negatives = [], 0, 0
    for _ in range(count):
        seq = list(_random_sequence(rng))
        if rng.random() < 0.5:
            rng.shuffle(seq)
        if rng.random() < 0.2:
            seq[rng.randrange(len(seq))] = random_rooted(rng, rng.randint(1, 4))
        full = interlacing_sequence_check(seq, "pairwise")
        short = interlacing_sequence_check(seq, "adjacent")
        positives += full
        negatives += not full
        if full != short:
            bad.append(f"disagree on {seq!r}")
    if count >= COVERAGE_MIN and not (positives and negatives):
        bad.append(f"degenerate sample: {positives} interlacing, {negatives} not")
    return count, bad


def suite_partial_sums(seed: int, count: int) -> tuple[int, list[str]]:
    """Non-negative combinations, lower and upper partial sums, windows, and the
    mixed sums x*(f_1+..+f_{k-1}) + (f_k+..+f_n) of interlacing sequences."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        f = _random_sequence(rng)
        n = len(f)
        lam = [rng.randint(0, 3) for _ in range(n)]
        if not any(lam):
            lam[0] = 1
        comb_ = sum((fi.scale(c) for fi, c in zip(f, lam)), IntPoly())
        if not (real_rooted(comb_) and interlaces(f[0], comb_) and interlaces(comb_, f[-1])):
            bad.append(f"combination of {f!r} with {lam}")
        lower = [sum(f[:k], IntPoly()) for k in range(1, n + 1)]
        upper = [sum(f[k:], IntPoly()) for k in range(n)]
        ell = rng.randrange(n)
        window = [sum(f[k:k + ell + 1], IntPoly()) for k in range(n - ell)]
        mixed = [X * sum(f[:k], IntPoly()) + sum(f[k:], IntPoly()) for k in range(n + 1)]
        for label, seq in (("lower", lower), ("upper", upper), ("window", window), ("mixed", mixed)):
            if not interlacing_sequence_check(seq):
                bad.append(f"{label} sums of {f!r}")
    return count, bad


def suite_gamma_real_rooted(seed: int, count: int) -> tuple[int, list[str]]:
    """For palindromic f with non-negative gamma vector: f real-rooted iff
    gamma(f) real-rooted.  Samples mix real-rooted and other gamma vectors."""
    rng = random.Random(seed)
    bad, seen = [], {True: 0, False: 0}
    for _ in range(count):
        deg = rng.randint(1, 4)
        g = rooted_gamma(rng, deg) if rng.random() < 0.5 else random_gamma(rng, deg)
        d = 2 * deg + rng.randint(0, 2)
        f = gamma_contract(g, d)
        a, b = real_rooted(f), real_rooted(g)
        seen[a] += 1
        if a != b or gamma_expand(f, d) != g:
            bad.append(f"gamma {g!r} at degree {d}: f real-rooted {a}, gamma real-rooted {b}")
    if count >= COVERAGE_MIN and not (seen[True] and seen[False]):
        bad.append(f"degenerate sample {seen}")
    return count, bad


def suite_gamma_interlacing(seed: int, count: int) -> tuple[int, list[str]]:
    """For palindromic real-rooted f, g with deg g = deg f + 1 (both gamma
    vectors non-negative): f ⪯ g implies gamma(f) ⪯ gamma(g) always, and the
    converse holds once deg gamma(g) - deg gamma(f) is 0 or 1 and one gamma
    has degree at least two.  Below that the degree-one convention makes any
    two gamma polynomials interlace while f and g need not."""
    rng = random.Random(seed)
    bad, seen = [], {True: 0, False: 0}
    converse = 0
    for _ in range(count):
        d = rng.randint(2, 8)
        df = rng.randint(0, d // 2)
        dg = min(df + rng.randint(0, 1), (d + 1) // 2) if rng.random() < 0.8 else rng.randint(0, (d + 1) // 2)
        gf, gg = rooted_gamma(rng, df), rooted_gamma(rng, dg)
        f, g = gamma_contract(gf, d), gamma_contract(gg, d + 1)
        lhs, rhs = interlaces(f, g), interlaces(gf, gg)
        seen[lhs] += 1
        if lhs and not rhs:
            bad.append(f"f={f!r} g={g!r}: f ⪯ g but gamma does not interlace")
        if dg - df in (0, 1) and dg >= 2:
            converse += 1
            if rhs and not lhs:
                bad.append(f"f={f!r} g={g!r}: gamma interlaces but f, g do not")
    if count >= COVERAGE_MIN and (not (seen[True] and seen[False]) or converse < count // 4):
        bad.append(f"degenerate sample {seen}, {converse} converse cases")
    return count, bad


def suite_minus_one_multiplicity(seed: int, count: int) -> tuple[int, list[str]]:
    """Palindromic real-rooted h of degree d: mult of -1 is d - 2 deg gamma(h)."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        d = rng.randint(1, 9)
        h = palindromic_real_rooted(rng, d)
        if multiplicity_at(h, -1) != d - 2 * gamma_expand(h).degree:
            bad.append(f"{h!r}")
    return count, bad
