"""Two-bridge knots: the polynomial sequences p_m, q_m, r_{k,m}, the Burau
matrices at t = -1, continued fractions and their four-strand plat braids."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .braid import BraidWord, reverse
from .errors import NotAKnot, ParseError
from .ncalg import NcPoly
from .phirep import phi

__all__ = [
    "UniPoly",
    "p_poly",
    "q_poly",
    "r_poly",
    "gcd_primitive",
    "burau_minus1",
    "mat_vec",
    "reverse",
    "ContinuedFraction",
    "cf_to_plat",
    "cf_to_fraction",
    "fraction_to_cf",
    "parse_cf",
    "parse_fraction",
    "verify_burau_lemma",
    "two_bridge_ring",
    "character_roots_check",
    "pretzel_braid",
]


class UniPoly:
    """Integer polynomial in x, coefficients stored constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _other(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly((other,))

    def __add__(self, other):
        o = self._other(other).coeffs
        s = self.coeffs
        n = max(len(s), len(o))
        return UniPoly([(s[k] if k < len(s) else 0) + (o[k] if k < len(o) else 0) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other).coeffs
        if not o or not self.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(o) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        from .abelian import render_univariate

        return render_univariate(self.coeffs)


@lru_cache(maxsize=None)
def _seq(kind: str, m: int) -> UniPoly:
    x = UniPoly.x()
    if kind == "p":
        first = (UniPoly((2, -1)), UniPoly((-2, 1)))
    else:
        first = (UniPoly((-2,)), UniPoly((0, -1)))
    if m < 2:
        return first[m]
    return x * _seq(kind, m - 1) - _seq(kind, m - 2)


def p_poly(m: int) -> UniPoly:
    if m < 0:
        raise IndexError(f"p_m is defined for m >= 0, got {m}")
    for k in range(m):  # warm the cache iteratively to keep recursion shallow
        _seq("p", k)
    return _seq("p", m)


def q_poly(k: int) -> UniPoly:
    k = abs(k)
    for t in range(k):
        _seq("q", t)
    return _seq("q", k)


def r_poly(k: int, m: int) -> UniPoly:
    return q_poly(k) - q_poly(k - m)


def gcd_primitive(f: UniPoly, g: UniPoly) -> UniPoly:
    """gcd over Q[x], scaled to a primitive integer polynomial with positive
    leading coefficient."""
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    while b:
        a, b = b, _qrem(a, b)
    den = math.lcm(*[c.denominator for c in a])
    ints = [int(c * den) for c in a]
    cont = math.gcd(*ints)
    ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return UniPoly(ints)


def _qrem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for t, c in enumerate(b):
            a[shift + t] -= q * c
        while a and a[-1] == 0:
            a.pop()
    return a


# Burau representation at t = -1

def _burau_generator(k: int, sign: int, n: int) -> list[list[int]]:
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    block = ((2, -1), (1, 0)) if sign == 1 else ((0, 1), (-1, 2))
    for di in range(2):
        for dj in range(2):
            m[k - 1 + di][k - 1 + dj] = block[di][dj]
    return m


def _matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def burau_minus1(w: BraidWord) -> list[list[int]]:
    n = w.strands
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for letter in w.letters:
        out = _matmul(out, _burau_generator(abs(letter), 1 if letter > 0 else -1, n))
    return out


def mat_vec(m: list[list[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in m]


def evaluate_commutative(p: NcPoly, values) -> UniPoly:
    """Substitute commuting polynomial values for the generators."""
    acc = UniPoly()
    for mono, c in p.terms.items():
        term = UniPoly((c,))
        for g in mono:
            term = term * values(g)
        acc = acc + term
    return acc


def verify_burau_lemma(w: BraidWord, v: Sequence[int]) -> bool:
    n = w.strands
    if len(v) != n:
        raise ValueError(f"vector of length {len(v)} for B_{n}")
    table = phi(w)
    moved = mat_vec(burau_minus1(reverse(w)), v)

    def values(g):
        return q_poly(v[g[0] - 1] - v[g[1] - 1])

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                lhs = evaluate_commutative(table[(i, j)], values)
                if lhs != q_poly(moved[i - 1] - moved[j - 1]):
                    return False
    return True


# continued fractions

@dataclass(frozen=True)
class ContinuedFraction:
    """Exponents a1, b1, a2, ..., alternating between the two generators."""

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if not self.terms:
            raise ParseError("a continued fraction needs at least one term")

    def odd_form(self) -> tuple[int, ...]:
        """Rewrite an even-length list so it ends on an a-term: the final b is
        replaced by (b - 1, 1), which leaves the fraction unchanged."""
        t = self.terms
        if len(t) % 2:
            return t
        last = t[-1]
        unit = 1 if last > 0 else -1
        return t[:-1] + (last - unit, unit)


def parse_cf(text: str) -> ContinuedFraction:
    try:
        return ContinuedFraction(tuple(int(t) for t in text.replace(",", " ").split()))
    except ValueError:
        raise ParseError(f"bad continued fraction {text!r}") from None


def parse_fraction(text: str) -> tuple[int, int]:
    try:
        num, den = text.split("/") if "/" in text else (text, "1")
        m, n = int(num), int(den)
    except ValueError:
        raise ParseError(f"bad fraction {text!r}") from None
    if n == 0:
        raise ParseError("zero denominator")
    return m, n


def cf_to_fraction(cf: ContinuedFraction) -> tuple[int, int]:
    # a1 + 1/(b1 + 1/(a2 + ...)), evaluated from the innermost term outwards
    m, n = cf.terms[-1], 1
    for t in reversed(cf.terms[:-1]):
        m, n = t * m + n, m
    g = math.gcd(m, n) or 1
    m, n = m // g, n // g
    if n < 0:
        m, n = -m, -n
    return m, n


def fraction_to_cf(m: int, n: int) -> ContinuedFraction:
    if n == 0:
        raise ParseError("zero denominator")
    if n < 0:
        m, n = -m, -n
    sign = -1 if m < 0 else 1
    a, b = abs(m), n
    terms = []
    while b:
        q, r = divmod(a, b)
        terms.append(q)
        a, b = b, r
    cf = ContinuedFraction(tuple(sign * t for t in terms))
    return ContinuedFraction(cf.odd_form())


def cf_to_plat(cf: ContinuedFraction) -> BraidWord:
    letters: list[int] = []
    for pos, e in enumerate(cf.odd_form()):
        if pos % 2 == 0:
            letters.extend([-2 if e > 0 else 2] * abs(e))
        else:
            letters.extend([1 if e > 0 else -1] * abs(e))
    return BraidWord(4, tuple(letters))


def two_bridge_ring(cf: ContinuedFraction) -> UniPoly:
    m, _ = cf_to_fraction(cf)
    if m % 2 == 0:
        raise NotAKnot(f"even determinant {abs(m)}: the closure is a two-component link")
    return p_poly((abs(m) + 1) // 2)


def character_roots_check(m: int, tol: float = 1e-9) -> bool:
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be a positive odd integer")
    coeffs = p_poly((m + 1) // 2).coeffs
    high_first = np.array(coeffs[::-1], dtype=float)
    deriv = np.polyder(high_first)
    roots = np.roots(high_first)
    if np.max(np.abs(roots.imag), initial=0.0) > 1e-6:
        return False
    roots = roots.real
    for _ in range(3):
        d = np.polyval(deriv, roots)
        safe = np.where(d == 0, 1.0, d)
        roots = roots - np.where(d == 0, 0.0, np.polyval(high_first, roots) / safe)
    expected = 2 * np.cos(2 * np.pi * np.arange((m + 1) // 2) / m)
    return bool(np.allclose(np.sort(roots), np.sort(expected), rtol=0, atol=tol))


def pretzel_braid(p: int, q: int, r: int) -> BraidWord:
    """Six-strand braid whose plat closure is the pretzel knot P(p, q, r)."""
    core = [1 if p > 0 else -1] * abs(p) + [3 if q > 0 else -3] * abs(q) + [5 if r > 0 else -5] * abs(r)
    return BraidWord(6, (2, 3, 4, 5, *core, -5, -4, -3, -2))
