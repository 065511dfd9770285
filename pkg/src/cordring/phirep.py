"""The braid action phi on A_n, its extension by an extra puncture, and the
coefficient matrices Phi^L, Phi^R.

Convention: ``phi(w1*w2) = phi(w1) o phi(w2)`` as algebra maps, i.e. the
image of a generator under ``phi(w)`` is obtained by applying the letter
tables from the last letter of ``w`` to the first.
"""

from __future__ import annotations

from functools import lru_cache

from .braid import BraidWord
from .errors import ExtractionError
from .ncalg import (
    GeneratorImageTable,
    NcPoly,
    all_generators,
    apply_endomorphism,
    generator,
)


@lru_cache(maxsize=None)
def phi_generator(k: int, sign: int, n: int) -> GeneratorImageTable:
    """Image table of sigma_k (sign +1) or its inverse (sign -1) in B_n."""
    if not 1 <= k <= n - 1:
        raise IndexError(f"sigma_{k} is not a generator of B_{n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a = lambda i, j: generator(i, j, n)  # noqa: E731
    k1 = k + 1
    images = {g: a(*g) for g in all_generators(n)}
    for i in range(1, n + 1):
        if i in (k, k1):
            continue
        if sign == 1:
            images[(k, i)] = -a(k1, i) - a(k1, k) * a(k, i)
            images[(i, k)] = -a(i, k1) - a(i, k) * a(k, k1)
            images[(k1, i)] = a(k, i)
            images[(i, k1)] = a(i, k)
        else:
            images[(k, i)] = a(k1, i)
            images[(i, k)] = a(i, k1)
            images[(k1, i)] = -a(k, i) - a(k, k1) * a(k1, i)
            images[(i, k1)] = -a(i, k) - a(i, k1) * a(k1, k)
    images[(k, k1)] = a(k1, k)
    images[(k1, k)] = a(k, k1)
    return GeneratorImageTable(n, images)


def phi(w: BraidWord, max_degree: int | None = None) -> GeneratorImageTable:
    n = w.strands
    images = {g: generator(*g, n) for g in all_generators(n)}
    for letter in reversed(w.letters):
        table = phi_generator(abs(letter), 1 if letter > 0 else -1, n)
        images = {g: apply_endomorphism(table, p, max_degree) for g, p in images.items()}
    return GeneratorImageTable(n, images)


def phi_ext(w: BraidWord, max_degree: int | None = None) -> GeneratorImageTable:
    """phi of the same word in B_{n+1}; index n+1 is the extra puncture."""
    return phi(BraidWord(w.strands + 1, w.letters), max_degree)


class NcMatrix:
    """Dense matrix with entries in A_n."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, n: int) -> "NcMatrix":
        return cls([[NcPoly.const(int(i == j)) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "NcMatrix") -> "NcMatrix":
        r, m = self.shape
        m2, c = other.shape
        if m != m2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                acc = NcPoly()
                for t in range(m):
                    x, y = self.rows[i][t], other.rows[t][j]
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return NcMatrix(out)

    def __sub__(self, other: "NcMatrix") -> "NcMatrix":
        return NcMatrix(
            [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __eq__(self, other):
        if not isinstance(other, NcMatrix):
            return NotImplemented
        return self.rows == other.rows

    def entries(self):
        for row in self.rows:
            yield from row

    def __repr__(self):
        return "NcMatrix([" + ", ".join(
            "[" + ", ".join(str(x) for x in r) + "]" for r in self.rows
        ) + "])"


def base_matrix(n: int) -> NcMatrix:
    return NcMatrix([[generator(i, j, n) for j in range(1, n + 1)] for i in range(1, n + 1)])


def _strip(poly: NcPoly, star: int, n: int, trailing: bool) -> list[NcPoly]:
    """Split ``poly`` by its terminal (or leading) factor involving ``star``."""
    parts: list[dict] = [dict() for _ in range(n)]
    for mono, c in poly.terms.items():
        if not mono:
            raise ExtractionError("constant term in an extended image")
        edge = mono[-1] if trailing else mono[0]
        rest = mono[:-1] if trailing else mono[1:]
        other = edge[0] if trailing else edge[1]
        if (edge[1] if trailing else edge[0]) != star or any(star in g for g in rest):
            raise ExtractionError(f"monomial {mono} has a misplaced puncture factor")
        bucket = parts[other - 1]
        bucket[rest] = bucket.get(rest, 0) + c
    return [NcPoly(b) for b in parts]


def phi_left(w: BraidWord, max_degree: int | None = None) -> NcMatrix:
    n = w.strands
    ext = phi_ext(w, max_degree)
    star = n + 1
    return NcMatrix([_strip(ext[(i, star)], star, n, trailing=True) for i in range(1, n + 1)])


def phi_right(w: BraidWord, max_degree: int | None = None) -> NcMatrix:
    n = w.strands
    ext = phi_ext(w, max_degree)
    star = n + 1
    cols = [_strip(ext[(star, j)], star, n, trailing=False) for j in range(1, n + 1)]
    return NcMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def check_matrix_identity(w: BraidWord) -> bool:
    """Entrywise phi_w(A) == Phi^L A Phi^R (diagonal of the left side is -2)."""
    n = w.strands
    table = phi(w)
    rhs = phi_left(w) @ base_matrix(n) @ phi_right(w)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = table[(i, j)]
            if lhs != rhs[(i - 1, j - 1)]:
                return False
    return True
