"""The free noncommutative algebra A_n over Z on generators a_ij (i != j).

Monomials are tuples of index pairs; a polynomial is an immutable mapping
from monomials to nonzero integers.  Diagonal symbols a_ii never appear in a
monomial: they are replaced by the scalar -2 as soon as they are formed.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .errors import DegreeCapExceeded, IncompleteTable, ParseError, UndefinedDegree

Gen = tuple[int, int]
Monomial = tuple[Gen, ...]

DIAGONAL = -2


def monomial_key(m: Monomial):
    """Fixed total order on monomials: length first, then lexicographic."""
    return (len(m), m)


def gen_name(i: int, j: int) -> str:
    if i <= 9 and j <= 9:
        return f"a{i}{j}"
    return f"a{i}_{j}"


class NcPoly:
    """Integer polynomial in noncommuting generators a_ij."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[tuple(m)] = int(c)
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "NcPoly":
        return cls({(): c})

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    @classmethod
    def from_factors(cls, factors: Iterable[Gen], coeff: int = 1) -> "NcPoly":
        """Product of generators; diagonal pairs contribute the scalar -2."""
        mono = []
        for i, j in factors:
            if i == j:
                coeff *= DIAGONAL
            else:
                mono.append((i, j))
        return cls({tuple(mono): coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def constant(self) -> int:
        return self._terms.get((), 0)

    def max_index(self) -> int:
        return max((max(g) for m in self._terms for g in m), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return NcPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return NcPoly(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in A_n")
        out = NcPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"NcPoly({render(self)!r})"

    def __str__(self):
        return render(self)


def _coerce(x):
    if isinstance(x, NcPoly):
        return x
    if isinstance(x, int):
        return NcPoly.const(x)
    return NotImplemented


def generator(i: int, j: int, n: int) -> NcPoly:
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"generator index ({i},{j}) outside 1..{n}")
    if i == j:
        return NcPoly.const(DIAGONAL)
    return NcPoly({((i, j),): 1})


def all_generators(n: int) -> list[Gen]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def add(p: NcPoly, q: NcPoly) -> NcPoly:
    return p + q


def mul(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def scale(c: int, p: NcPoly) -> NcPoly:
    return NcPoly({m: c * v for m, v in p.terms.items()})


def degree(p: NcPoly) -> int:
    if p.is_zero():
        raise UndefinedDegree("the zero polynomial has no degree")
    return max(len(m) for m in p.terms)


class GeneratorImageTable:
    """An algebra endomorphism of A_n, given by the images of generators."""

    __slots__ = ("n", "images")

    def __init__(self, n: int, images: Mapping[Gen, NcPoly]):
        self.n = n
        self.images = dict(images)

    @classmethod
    def identity(cls, n: int) -> "GeneratorImageTable":
        return cls(n, {g: generator(*g, n) for g in all_generators(n)})

    def __getitem__(self, g: Gen) -> NcPoly:
        i, j = g
        if i == j:
            return NcPoly.const(DIAGONAL)
        try:
            return self.images[g]
        except KeyError:
            raise IncompleteTable(f"no image for {gen_name(i, j)}") from None

    def is_identity(self) -> bool:
        return self == GeneratorImageTable.identity(self.n)

    def __eq__(self, other):
        if not isinstance(other, GeneratorImageTable):
            return NotImplemented
        return self.n == other.n and all(
            self[g] == other[g] for g in all_generators(self.n)
        )

    def __repr__(self):
        body = ", ".join(f"{gen_name(*g)}: {self[g]}" for g in all_generators(self.n))
        return f"GeneratorImageTable(n={self.n}, {{{body}}})"

    def then(self, other: "GeneratorImageTable", max_degree=None) -> "GeneratorImageTable":
        """The composite ``other o self``: apply self first, then other."""
        return GeneratorImageTable(
            self.n,
            {g: apply_endomorphism(other, self[g], max_degree) for g in all_generators(self.n)},
        )


def apply_endomorphism(
    table: GeneratorImageTable | Mapping[Gen, NcPoly],
    p: NcPoly,
    max_degree: int | None = None,
) -> NcPoly:
    """Substitute the image of every factor and expand."""
    lookup = table.__getitem__ if isinstance(table, GeneratorImageTable) else None
    out: dict[Monomial, int] = {}
    cache: dict[Gen, list[tuple[Monomial, int]]] = {}
    for mono, coeff in p.terms.items():
        partial: dict[Monomial, int] = {(): coeff}
        for g in mono:
            img = cache.get(g)
            if img is None:
                if lookup is not None:
                    poly = lookup(g)
                else:
                    try:
                        poly = table[g]
                    except KeyError:
                        raise IncompleteTable(f"no image for {gen_name(*g)}") from None
                img = list(poly.terms.items())
                cache[g] = img
            nxt: dict[Monomial, int] = {}
            for m1, c1 in partial.items():
                for m2, c2 in img:
                    m = m1 + m2
                    nxt[m] = nxt.get(m, 0) + c1 * c2
            partial = {m: c for m, c in nxt.items() if c}
            if max_degree is not None:
                for m in partial:
                    if len(m) > max_degree:
                        raise DegreeCapExceeded(len(m), max_degree)
        for m, c in partial.items():
            out[m] = out.get(m, 0) + c
    return NcPoly(out)


# text and JSON forms

def render(p: NcPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for idx, (mono, c) in enumerate(p.sorted_items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono:
            body = "*".join(gen_name(i, j) for i, j in mono)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        if idx == 0:
            pieces.append(f"-{body}" if sign == "-" else body)
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)


_GEN_RE = re.compile(r"a(\d+)_(\d+)|a(\d)(\d)")
_TERM_SPLIT = re.compile(r"([+-])")


def parse_ncpoly(text: str) -> NcPoly:
    """Inverse of :func:`render` (whitespace-insensitive)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    parts = _TERM_SPLIT.split(s)[1:]
    if len(parts) % 2:
        raise ParseError(f"cannot parse polynomial {text!r}")
    out = NcPoly()
    for sign, body in zip(parts[::2], parts[1::2]):
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = -1 if sign == "-" else 1
        factors: list[Gen] = []
        for tok in body.split("*"):
            if tok.isdigit():
                coeff *= int(tok)
                continue
            m = _GEN_RE.fullmatch(tok)
            if not m:
                raise ParseError(f"bad factor {tok!r} in {text!r}")
            if m.group(1) is not None:
                factors.append((int(m.group(1)), int(m.group(2))))
            else:
                factors.append((int(m.group(3)), int(m.group(4))))
        out = out + NcPoly.from_factors(factors, coeff)
    return out


def to_json_obj(p: NcPoly) -> list[dict]:
    return [
        {"coeff": c, "factors": [[i, j] for i, j in mono]}
        for mono, c in p.sorted_items()
    ]


def from_json_obj(obj) -> NcPoly:
    try:
        return NcPoly(
            {tuple((int(i), int(j)) for i, j in t["factors"]): int(t["coeff"]) for t in obj}
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polynomial JSON: {exc}") from None
