"""Braid words, their group operations, and strand permutations.

A braid in B_n is stored as a tuple of signed letters: ``k`` stands for the
Artin generator sigma_k and ``-k`` for its inverse.  Letters are read left to
right; ``sigma_k`` swaps the punctures in positions ``k`` and ``k+1``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidGenerator, OddStrands, ParseError, StrandMismatch

_TOKEN_SPLIT = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise InvalidGenerator(
                    f"generator {letter} is not valid in B_{self.strands}"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __str__(self):
        return render_braid(self)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        if len(self) != len(other):
            raise StrandMismatch("permutations of different sizes")
        return Permutation(tuple(other(self(i)) for i in range(1, len(self) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def is_full_cycle(self) -> bool:
        return len(self.cycles()) == 1


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a comma/whitespace separated list of signed generator indices."""
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    letters = []
    for tok in tokens:
        try:
            letters.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer braid letter: {tok!r}") from None
    return BraidWord(strands, tuple(letters))


def render_braid(w: BraidWord) -> str:
    return ",".join(str(x) for x in w.letters)


def _check_same(w1: BraidWord, w2: BraidWord):
    if w1.strands != w2.strands:
        raise StrandMismatch(f"B_{w1.strands} vs B_{w2.strands}")


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    _check_same(w1, w2)
    return BraidWord(w1.strands, free_reduce(w1.letters + w2.letters))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """The braid g w g^-1."""
    return compose(compose(g, w), inverse(g))


def reverse(w: BraidWord) -> BraidWord:
    """Read the word backwards, keeping the exponent signs."""
    return BraidWord(w.strands, tuple(reversed(w.letters)))


def power(w: BraidWord, e: int) -> BraidWord:
    if e < 0:
        w, e = inverse(w), -e
    return BraidWord(w.strands, w.letters * e)


def full_twist(n: int) -> BraidWord:
    """(sigma_1 ... sigma_{n-1})^n, the generator of the center of B_n."""
    return BraidWord(n, tuple(range(1, n)) * n)


def permutation(w: BraidWord) -> Permutation:
    """Where each strand ends up: ``images[i-1]`` is the final position of the
    strand starting at position ``i``."""
    at = list(range(1, w.strands + 1))
    for letter in w.letters:
        k = abs(letter)
        at[k - 1], at[k] = at[k], at[k - 1]
    images = [0] * w.strands
    for pos, strand in enumerate(at, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def markov_stabilize(w: BraidWord, sign: int) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    n = w.strands
    return BraidWord(n + 1, w.letters + (sign * n,))


def closure_is_knot(w: BraidWord) -> bool:
    return permutation(w).is_full_cycle()


def plat_components(w: BraidWord) -> int:
    """Number of components of the plat closure (caps join 2i-1 and 2i at
    both ends)."""
    if w.strands % 2:
        raise OddStrands(f"plat closure needs an even strand count, got {w.strands}")
    n = w.strands
    perm = permutation(w)
    # nodes 0..n-1 bottom ends, n..2n-1 top ends
    parent = list(range(2 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in range(1, n + 1):
        union(i - 1, n + perm(i) - 1)
    for p in range(0, n, 2):
        union(p, p + 1)
        union(n + p, n + p + 1)
    return len({find(x) for x in range(2 * n)})


def plat_is_knot(w: BraidWord) -> bool:
    return plat_components(w) == 1


def random_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    if strands < 2:
        return BraidWord(strands, ())
    letters = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    return BraidWord(strands, tuple(letters))


def word(strands: int, letters: Sequence[int]) -> BraidWord:
    """Shorthand constructor used throughout the tests and suites."""
    return BraidWord(strands, tuple(letters))
