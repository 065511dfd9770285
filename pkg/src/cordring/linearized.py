"""The linearized abelian cord group and integer Smith normal form.

Substituting a_ij = -2 + x_ij into the diagram relators and keeping the
degree-one part gives a presentation of a finitely generated abelian group
on the symbols x_ij = x_ji (i < j).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError
from .invariants import hc0_diagram
from .ncalg import DIAGONAL, NcPoly
from .pd import PdCode

Matrix = list[list[int]]


@dataclass(frozen=True)
class AbelianGroupPresentation:
    generators: int
    relations: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()


def linear_part(p: NcPoly, index: dict[tuple[int, int], int], size: int) -> list[int]:
    """Degree-one part at the augmentation a -> -2; the constant must vanish."""
    row = [0] * size
    constant = 0
    for mono, c in p.terms.items():
        m = len(mono)
        constant += c * DIAGONAL**m
        if m == 0:
            continue
        weight = c * DIAGONAL ** (m - 1)
        for g in mono:
            row[index[g]] += weight
    if constant:
        raise InternalError(f"relator {p} does not vanish at the augmentation")
    return row


def lin_presentation(pd: PdCode) -> AbelianGroupPresentation:
    pres = hc0_diagram(pd)
    n = pres.n
    index = {}
    names = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            index[(i, j)] = index[(j, i)] = len(names)
            names.append(f"x{i}{j}" if j <= 9 else f"x{i}_{j}")
    rows = tuple(tuple(linear_part(r, index, len(names))) for r in pres.relators)
    return AbelianGroupPresentation(len(names), rows, tuple(names))


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(mat: Matrix) -> tuple[list[int], Matrix, Matrix]:
    """Return (diagonal, U, V) with U * M * V = D, U and V unimodular."""
    a = [list(r) for r in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def add_row(dst, src, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for m in (a, v):
            for row in m:
                row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                clean &= a[i][t] == 0
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                clean &= a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and t < cols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    diag = [a[t][t] for t in range(min(rows, cols))]
    return diag, u, v


def matmul(x: Matrix, y: Matrix) -> Matrix:
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]


def invariant_factors(g: AbelianGroupPresentation) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients > 1)."""
    if not g.relations or g.generators == 0:
        return g.generators, []
    diag, _, _ = smith_normal_form([list(r) for r in g.relations])
    nonzero = [d for d in diag if d]
    return g.generators - len(nonzero), [d for d in nonzero if d > 1]


def min_generators(g: AbelianGroupPresentation) -> int:
    rank, torsion = invariant_factors(g)
    return rank + len(torsion)


def render_group(g: AbelianGroupPresentation) -> str:
    rank, torsion = invariant_factors(g)
    parts = []
    if rank:
        parts.append("Z" if rank == 1 else f"Z^{rank}")
    parts.extend(f"Z/{d}" for d in torsion)
    return " + ".join(parts) if parts else "0"
