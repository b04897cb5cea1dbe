"""Exact univariate integer polynomials with certified real-root tools.

Everything here is exact: coefficients are Python ints, root locations are
isolating intervals with :class:`fractions.Fraction` endpoints, and every
decision (real-rootedness, interlacing, multiplicities) is obtained from
Sturm sequences and exact division rather than floating point.

Text format: coefficients low to high, comma separated, so ``"1,7,1"`` is
``x^2 + 7x + 1`` and ``"0"`` is the zero polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from typing import Iterable, Sequence

__all__ = [
    "IntPoly", "ZERO", "ONE", "X", "RootIsolation",
    "poly_gcd", "exact_div", "squarefree_decomposition", "squarefree_part",
    "sturm_sequence", "sign_variations", "count_roots_in",
    "count_real_roots", "real_rooted", "isolate_roots", "interlaces",
    "multiplicity_at", "is_palindromic", "gamma_expand", "gamma_contract",
    "NotRealRootedError", "NotPalindromicError",
]


class NotRealRootedError(ValueError):
    pass


class NotPalindromicError(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Dense polynomial with integer coefficients, ``coeffs[i]`` of ``x**i``.

    Instances are immutable and hashable.  The zero polynomial has an empty
    coefficient tuple and ``degree is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(a) for a in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        """Monic polynomial ``prod(x - r)``."""
        p = ONE
        for r in roots:
            p = p * IntPoly([-r, 1])
        return p

    @classmethod
    def from_text(cls, text: str) -> IntPoly:
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        return cls(int(tok) for tok in text.split(","))

    def to_text(self) -> str:
        return ",".join(str(a) for a in self.coeffs) if self.coeffs else "0"

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> IntPoly:
        return IntPoly(c * a for a in self.coeffs)

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``x**k``."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else ZERO

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = igcd(g, a)
        return g

    def primitive(self) -> IntPoly:
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return ZERO
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly(a // g for a in self.coeffs)

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of ``self(x)`` using integer arithmetic only."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        acc = 0
        qpow = 1
        # sum a_i p^i q^(d-i), evaluated from the top so powers stay small
        for a in reversed(self.coeffs):
            acc = acc * p + a * qpow
            qpow *= q
        return (acc > 0) - (acc < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if not self.coeffs:
            return 0
        s = 1 if self.coeffs[-1] > 0 else -1
        if not positive and (len(self.coeffs) - 1) % 2:
            s = -s
        return s


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


# ---------------------------------------------------------------------------
# division and gcd over Q, returned as primitive integer polynomials


def _qdivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        shift = len(a) - 1 - db
        c = a[-1] / lb
        q[shift] = c
        for i in range(db + 1):
            a[shift + i] -= c * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _to_primitive(coeffs: Sequence[Fraction]) -> IntPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return ZERO
    den = 1
    for c in coeffs:
        den = den * c.denominator // igcd(den, c.denominator)
    return IntPoly(int(c * den) for c in coeffs).primitive()


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient; ``gcd(0, 0) = 0``."""
    a, b = p.primitive(), q.primitive()
    while b:
        _, r = _qdivmod([Fraction(c) for c in a.coeffs], [Fraction(c) for c in b.coeffs])
        a, b = b, _to_primitive(r)
    return a


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """``p / q`` when ``q`` divides ``p`` in ``Z[x]``; raises otherwise."""
    qq, r = _qdivmod([Fraction(c) for c in p.coeffs], [Fraction(c) for c in q.coeffs])
    if any(r) or any(c.denominator != 1 for c in qq):
        raise ArithmeticError(f"{q!r} does not divide {p!r} over the integers")
    return IntPoly(int(c) for c in qq)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Factor ``p = c * prod(f_i ** m_i)`` with the ``f_i`` squarefree,
    primitive and pairwise coprime (Musser's gcd algorithm).

    Constant factors are dropped, so constants decompose to ``[]``.
    """
    if p.is_zero:
        raise ValueError("square-free decomposition of the zero polynomial")
    f = p.primitive()
    if f.degree == 0:
        return []
    y = poly_gcd(f, f.derivative())
    w = exact_div(f, y)
    out = []
    m = 1
    while w.degree:
        z = poly_gcd(w, y)
        factor = exact_div(w, z)
        if factor.degree:
            out.append((factor, m))
        w = z
        y = exact_div(y, z)
        m += 1
    return out


def squarefree_part(p: IntPoly) -> IntPoly:
    f = p.primitive()
    if f.degree in (None, 0):
        return f
    return exact_div(f, poly_gcd(f, f.derivative()))


# ---------------------------------------------------------------------------
# Sturm sequences and root counting


@lru_cache(maxsize=4096)
def sturm_sequence(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain ``p, p', -rem, ...`` with every term replaced by a positive
    multiple of its primitive part (signs are what count)."""
    if p.is_zero:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    if seq[1].is_zero:
        return (p,)
    while True:
        a, b = seq[-2], seq[-1]
        _, r = _qdivmod([Fraction(c) for c in a.coeffs], [Fraction(c) for c in b.coeffs])
        if not any(r):
            break
        # next term is a positive multiple of -r
        prim = _to_primitive(r)
        seq.append(prim if r[-1] < 0 else -prim)
    return tuple(seq)


def _signs_at(seq: Sequence[IntPoly], x) -> list[int]:
    if x == "+inf":
        return [q.sign_at_infinity(True) for q in seq]
    if x == "-inf":
        return [q.sign_at_infinity(False) for q in seq]
    return [q.sign_at(x) for q in seq]


def sign_variations(seq: Sequence[IntPoly], x) -> int:
    """Sign changes of the chain at ``x`` (a Fraction, ``"-inf"`` or ``"+inf"``),
    zeros skipped."""
    signs = [s for s in _signs_at(seq, x) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_roots_in(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval
    ``(lo, hi]``; endpoints may be ``"-inf"`` / ``"+inf"``."""
    seq = sturm_sequence(p)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def count_real_roots(p: IntPoly) -> int:
    """Real roots of ``p`` counted with multiplicity."""
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    return sum(m * count_roots_in(f, "-inf", "+inf") for f, m in squarefree_decomposition(p))


def real_rooted(p: IntPoly) -> bool:
    """True iff every complex root of ``p`` is real.  Constants are real-rooted."""
    if p.is_zero:
        raise ValueError("real-rootedness of the zero polynomial is a caller convention")
    return count_real_roots(p) == p.degree


def _root_bound(p: IntPoly) -> Fraction:
    # Cauchy: every root satisfies |r| < 1 + max |a_i / a_d|
    lead = abs(p.leading)
    return 1 + Fraction(max(abs(a) for a in p.coeffs[:-1]), lead) if p.degree else Fraction(1)


def _isolate_squarefree(f: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open intervals ``(lo, hi]``, ascending, one per real root."""
    if not f.degree:
        return []
    seq = sturm_sequence(f)
    bound = _root_bound(f)
    out = []
    stack = [(-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = sign_variations(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    return out


@dataclass(frozen=True)
class RootIsolation:
    """Distinct real roots of a polynomial, each in its own interval.

    ``isolating_intervals`` holds ``(lo, hi, multiplicity)`` in ascending
    order; the root lies in ``lo < r <= hi``.  ``kernel`` is the squarefree
    part used to decide containment and refinement.
    """

    squarefree_factors: tuple[tuple[IntPoly, int], ...]
    isolating_intervals: tuple[tuple[Fraction, Fraction, int], ...]
    kernel: IntPoly = field(repr=False)
    degree: int = 0

    @property
    def real_root_count(self) -> int:
        return sum(m for _, _, m in self.isolating_intervals)

    @property
    def all_real(self) -> bool:
        return self.real_root_count == self.degree

    def refine(self, width: Fraction | int = Fraction(1, 1000)) -> RootIsolation:
        """Bisect every interval until it is no wider than ``width``."""
        width = Fraction(width)
        refined = []
        for lo, hi, m in self.isolating_intervals:
            while hi - lo > width:
                mid = (lo + hi) / 2
                if count_roots_in(self.kernel, lo, mid):
                    hi = mid
                else:
                    lo = mid
            refined.append((lo, hi, m))
        return RootIsolation(self.squarefree_factors, tuple(refined), self.kernel, self.degree)

    def approximate(self) -> list[float]:
        """Midpoints as floats, repeated by multiplicity.  For display only."""
        out = []
        for lo, hi, m in self.isolating_intervals:
            out.extend([float((lo + hi) / 2)] * m)
        return out


def _joint_roots(polys: Sequence[IntPoly]) -> tuple[list[tuple[Fraction, Fraction]], list[list[int]]]:
    """Isolate the union of real roots of several nonzero polynomials.

    Returns ascending intervals, one per distinct real root of any input, and
    for each input its multiplicity at each of those roots.  Shared roots are
    identified exactly because the intervals come from the squarefree part of
    the product, so every interval holds one root of the union.
    """
    product = ONE
    for p in polys:
        product = product * p.primitive()
    kernel = squarefree_part(product)
    intervals = _isolate_squarefree(kernel)
    mults = []
    for p in polys:
        row = [0] * len(intervals)
        for f, m in squarefree_decomposition(p):
            if not f.degree:
                continue
            for j, (lo, hi) in enumerate(intervals):
                if count_roots_in(f, lo, hi):
                    row[j] += m
        mults.append(row)
    return intervals, mults


def isolate_roots(p: IntPoly) -> RootIsolation:
    if p.is_zero:
        raise ValueError("root isolation of the zero polynomial")
    intervals, (mult,) = _joint_roots([p])
    return RootIsolation(
        squarefree_factors=tuple(squarefree_decomposition(p)),
        isolating_intervals=tuple((lo, hi, m) for (lo, hi), m in zip(intervals, mult)),
        kernel=squarefree_part(p),
        degree=p.degree,
    )


def interlaces(f: IntPoly, g: IntPoly) -> bool:
    """Decide ``f ⪯ g`` exactly.

    Conventions: anything involving the zero polynomial interlaces, as do any
    two polynomials of degree at most one.  Otherwise ``deg g`` must be
    ``deg f`` or ``deg f + 1`` and the roots, sorted decreasingly with
    multiplicity, must weakly alternate ``b1 >= a1 >= b2 >= a2 >= ...`` where
    the ``a`` are roots of ``f`` and the ``b`` roots of ``g``.

    Raises :class:`NotRealRootedError` when a nonzero input has non-real roots.
    """
    for p, name in ((f, "f"), (g, "g")):
        if not p.is_zero and not real_rooted(p):
            raise NotRealRootedError(f"{name} = {p.pretty()} is not real-rooted")
    if f.is_zero or g.is_zero:
        return True
    df, dg = f.degree, g.degree
    if df <= 1 and dg <= 1:
        return True
    if dg not in (df, df + 1):
        return False
    _, (mf, mg) = _joint_roots([f, g])
    # root identities in descending order, repeated by multiplicity
    alpha = [j for j in range(len(mf) - 1, -1, -1) for _ in range(mf[j])]
    beta = [j for j in range(len(mg) - 1, -1, -1) for _ in range(mg[j])]
    for i, a in enumerate(alpha):
        if beta[i] < a:
            return False
        if i + 1 < len(beta) and a < beta[i + 1]:
            return False
    return True


def multiplicity_at(p: IntPoly, r) -> int:
    """Largest ``m`` with ``(x - r)**m`` dividing ``p``; ``r`` rational."""
    if p.is_zero:
        raise ValueError("multiplicity in the zero polynomial")
    r = Fraction(r)
    lin = [Fraction(-r.numerator), Fraction(r.denominator)]
    cur = [Fraction(c) for c in p.coeffs]
    m = 0
    while len(cur) > 1:
        q, rem = _qdivmod(cur, lin)
        if any(rem):
            break
        cur = q
        m += 1
    return m


# ---------------------------------------------------------------------------
# palindromes and gamma expansions


def is_palindromic(p: IntPoly) -> bool:
    """Coefficient symmetry about ``deg p``; the zero polynomial counts."""
    return p.coeffs == p.coeffs[::-1]


@lru_cache(maxsize=256)
def _one_plus_x_pow(k: int) -> IntPoly:
    return IntPoly([1, 1]) ** k


def gamma_contract(g: IntPoly, d: int) -> IntPoly:
    """``sum_i g_i x^i (1+x)^(d-2i)``."""
    if g.is_zero:
        return ZERO
    if 2 * g.degree > d:
        raise ValueError(f"gamma polynomial of degree {g.degree} does not fit degree {d}")
    out = ZERO
    for i, c in enumerate(g.coeffs):
        if c:
            out = out + _one_plus_x_pow(d - 2 * i).shift(i).scale(c)
    return out


def gamma_expand(p: IntPoly, d: int | None = None) -> IntPoly:
    """The gamma polynomial of a palindromic ``p`` (taken about degree ``d``,
    default ``deg p``).  Coefficients may come out negative."""
    if p.is_zero:
        return ZERO
    if d is None:
        d = p.degree
    padded = list(p.coeffs) + [0] * (d - p.degree)
    if p.degree > d or padded != padded[::-1]:
        raise NotPalindromicError(f"{p.pretty()} is not palindromic about degree {d}")
    rest = p
    gam = []
    for i in range(d // 2 + 1):
        c = rest[i]
        gam.append(c)
        if c:
            rest = rest - _one_plus_x_pow(d - 2 * i).shift(i).scale(c)
    if not rest.is_zero:
        raise NotPalindromicError(f"{p.pretty()} has no gamma expansion")
    return IntPoly(gam)
