"""Cords as free-group words and the map psi into A_n.

A cord from puncture i to puncture j is recorded by a word in the free group
F_n.  ``psi(i, j, w)`` substitutes ``x_k -> -1 - y_k`` into the reduced
y-algebra (where ``y_k^2 = -2 y_k``) and then splices the resulting
monomials into chains of generators a_ij.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .braid import BraidWord
from .errors import ParseError
from .ncalg import NcPoly

Letter = tuple[int, int]  # (generator index, exponent +-1)


@dataclass(frozen=True)
class FreeWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if not 1 <= g <= self.n or e not in (1, -1):
                raise ValueError(f"bad free-group letter x{g}^{e} in F_{self.n}")
        object.__setattr__(self, "letters", letters)

    def reduced(self) -> "FreeWord":
        stack: list[Letter] = []
        for g, e in self.letters:
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        return FreeWord(self.n, tuple(stack))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.n, tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(max(self.n, other.n), self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return render_free_word(self)


def x(g: int, n: int, e: int = 1) -> FreeWord:
    return FreeWord(n, ((g, e),))


_FW_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_free_word(text: str, n: int) -> FreeWord:
    """Parse tokens like ``x3^-1 x2 x1^2``; powers are expanded."""
    letters: list[Letter] = []
    for tok in text.replace("*", " ").split():
        m = _FW_TOKEN.fullmatch(tok)
        if not m:
            raise ParseError(f"bad free-group token {tok!r}")
        g = int(m.group(1))
        p = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= g <= n:
            raise ParseError(f"x{g} is not a generator of F_{n}")
        letters.extend([(g, 1 if p > 0 else -1)] * abs(p))
    return FreeWord(n, tuple(letters))


def render_free_word(w: FreeWord) -> str:
    return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in w.letters)


# the reduced y-algebra

class YPoly:
    """Element of Z<y_1..y_n> / (y_i^2 + 2 y_i), kept in reduced form."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms = {}
        for m, c in (terms or {}).items():
            coeff, mono = _reduce_y(m, c)
            if coeff:
                self.terms[mono] = self.terms.get(mono, 0) + coeff
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def const(cls, c: int) -> "YPoly":
        return cls({(): c})

    @classmethod
    def y(cls, i: int) -> "YPoly":
        return cls({(i,): 1})

    def __add__(self, other: "YPoly") -> "YPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return YPoly(out)

    def __neg__(self):
        return YPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "YPoly") -> "YPoly":
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                # both factors are reduced, so only the junction can collapse
                if m1 and m2 and m1[-1] == m2[0]:
                    m, c = m1 + m2[1:], -2 * c
                else:
                    m = m1 + m2
                out[m] = out.get(m, 0) + c
        return YPoly(out)

    def __eq__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "YPoly(0)"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            body = "*".join(f"y{i}" for i in m) or "1"
            parts.append(f"{c}*{body}")
        return "YPoly(" + " + ".join(parts) + ")"


def _reduce_y(mono: Iterable[int], coeff: int) -> tuple[int, tuple[int, ...]]:
    out: list[int] = []
    for i in mono:
        if out and out[-1] == i:
            coeff *= -2
        else:
            out.append(i)
    return coeff, tuple(out)


def y_of_word(w: FreeWord) -> YPoly:
    acc = YPoly.const(1)
    for g, _ in w.letters:
        acc = acc * YPoly({(): -1, (g,): -1})
    return acc


def alpha(i: int, j: int, p: YPoly) -> NcPoly:
    """Splice each y-monomial y_{i1}..y_{im} into a_{i i1} a_{i1 i2} .. a_{im j}."""
    out = NcPoly()
    for mono, c in p.terms.items():
        path = (i,) + mono + (j,)
        out = out + NcPoly.from_factors(zip(path, path[1:]), c)
    return out


def psi(i: int, j: int, w: FreeWord) -> NcPoly:
    return alpha(i, j, y_of_word(w))


def check_skein(i: int, k: int, j: int, w1: FreeWord, w2: FreeWord) -> bool:
    n = max(w1.n, w2.n, i, j, k)
    through = w1 * x(k, n) * w2
    total = psi(i, j, w1 * w2) + psi(i, j, through) + psi(i, k, w1) * psi(k, j, w2)
    return total.is_zero()


# Artin action on cords, used to calibrate psi against phi.
#
# sigma_k sends the cord (i, j, w) to (t(i), t(j), c(i) A(w) c(j)^-1) where
# t = (k k+1), A is x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k, and c is x_k^-1
# at index k and trivial elsewhere.

@dataclass(frozen=True)
class Cord:
    i: int
    j: int
    word: FreeWord


def _subst(w: FreeWord, images: dict[int, FreeWord]) -> FreeWord:
    out: list[Letter] = []
    for g, e in w.letters:
        img = images.get(g)
        if img is None:
            out.append((g, e))
        else:
            out.extend(img.letters if e == 1 else img.inverse().letters)
    return FreeWord(w.n, tuple(out)).reduced()


def _transpose(i: int, k: int) -> int:
    return k + 1 if i == k else k if i == k + 1 else i


def act_generator(k: int, sign: int, cord: Cord) -> Cord:
    n = cord.word.n
    xk, xk1 = x(k, n), x(k + 1, n)
    one = FreeWord(n)

    def c(idx):
        return x(k, n, -1) if idx == k else one

    if sign == 1:
        a_map = {k: xk * xk1 * xk.inverse(), k + 1: xk}
        body = c(cord.i) * _subst(cord.word, a_map) * c(cord.j).inverse()
        return Cord(_transpose(cord.i, k), _transpose(cord.j, k), body.reduced())
    inv_map = {k: xk1, k + 1: xk1.inverse() * xk * xk1}
    i, j = _transpose(cord.i, k), _transpose(cord.j, k)
    body = _subst(c(i).inverse() * cord.word * c(j), inv_map)
    return Cord(i, j, body.reduced())


def act(b: BraidWord, cord: Cord) -> Cord:
    """Left action of a braid; the rightmost letter acts first."""
    for letter in reversed(b.letters):
        cord = act_generator(abs(letter), 1 if letter > 0 else -1, cord)
    return cord


def psi_cord(cord: Cord) -> NcPoly:
    return psi(cord.i, cord.j, cord.word)
