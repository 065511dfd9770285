"""Cord-ring presentations of braids and knots.

Four constructions are provided: the braid conjugacy invariant, the knot
invariant through a braid closure, the plat presentation, and the diagram
presentation from a PD code.  Zero relators are dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .braid import BraidWord, closure_is_knot, plat_is_knot
from .errors import NotAKnot, OddStrands, ParseError
from .ncalg import (
    NcPoly,
    all_generators,
    apply_endomorphism,
    from_json_obj,
    generator,
    render,
    to_json_obj,
)
from .pd import PdCode, components_from_pd
from .phirep import base_matrix, phi, phi_left, phi_right


@dataclass(frozen=True)
class Presentation:
    """The quotient of A_n by the two-sided ideal generated by ``relators``."""

    n: int
    relators: tuple[NcPoly, ...]
    source: str = ""
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def generator_count(self) -> int:
        return self.n * (self.n - 1)


def _nonzero(polys, labels=None):
    keep = [t for t, p in enumerate(polys) if not p.is_zero()]
    rels = tuple(polys[t] for t in keep)
    labs = tuple(labels[t] for t in keep) if labels else ()
    return rels, labs


def hc0_braid(w: BraidWord, max_degree: int | None = None) -> Presentation:
    n = w.strands
    table = phi(w, max_degree)
    polys = [generator(*g, n) - table[g] for g in all_generators(n)]
    rels, _ = _nonzero(polys)
    return Presentation(n, rels, "braid")


def hc0_closure(w: BraidWord, max_degree: int | None = None) -> Presentation:
    if not closure_is_knot(w):
        raise NotAKnot(f"closure of {w.letters} in B_{w.strands} is not a knot")
    n = w.strands
    a = base_matrix(n)
    left = a - phi_left(w, max_degree) @ a
    right = a - a @ phi_right(w, max_degree)
    rels, _ = _nonzero(list(left.entries()) + list(right.entries()))
    return Presentation(n, rels, "closure")


def plat_kernel_generators(n2: int) -> list[NcPoly]:
    """Generators of the kernel of eta: A_{2n} -> A_n."""
    if n2 % 2:
        raise OddStrands(f"plat closure needs an even strand count, got {n2}")
    a = lambda i, j: generator(i, j, n2)  # noqa: E731
    out = []
    for p in range(1, n2 // 2 + 1):
        out.append(2 + a(2 * p - 1, 2 * p))
        out.append(2 + a(2 * p, 2 * p - 1))
    half = n2 // 2
    for big_i in range(1, half + 1):
        for big_j in range(1, half + 1):
            if big_i == big_j:
                continue
            rep = (2 * big_i - 1, 2 * big_j) if big_i < big_j else (2 * big_i, 2 * big_j - 1)
            members = [
                (i, j)
                for i in (2 * big_i - 1, 2 * big_i)
                for j in (2 * big_j - 1, 2 * big_j)
                if (i, j) != rep
            ]
            out.extend(a(*rep) - a(*m) for m in members)
    return out


def eta(p: NcPoly, n2: int) -> NcPoly:
    """a_ij -> a_{ceil(i/2), ceil(j/2)} (diagonal images become -2)."""
    n = n2 // 2
    table = {g: generator((g[0] + 1) // 2, (g[1] + 1) // 2, n) for g in all_generators(n2)}
    return apply_endomorphism(table, p)


def plat_images(w: BraidWord, max_degree: int | None = None) -> list[tuple[NcPoly, NcPoly]]:
    """Pairs (kernel generator g, eta(phi_w(g)))."""
    if w.strands % 2:
        raise OddStrands(f"plat closure needs an even strand count, got {w.strands}")
    table = phi(w, max_degree)
    return [
        (g, eta(apply_endomorphism(table, g, max_degree), w.strands))
        for g in plat_kernel_generators(w.strands)
    ]


def hc0_plat(w: BraidWord, max_degree: int | None = None) -> Presentation:
    if w.strands % 2:
        raise OddStrands(f"plat closure needs an even strand count, got {w.strands}")
    if not plat_is_knot(w):
        raise NotAKnot("plat closure has more than one component")
    pairs = plat_images(w, max_degree)
    rels, labels = _nonzero([img for _, img in pairs], [render(g) for g, _ in pairs])
    return Presentation(w.strands // 2, rels, "plat", labels)


def hc0_diagram(pd: PdCode) -> Presentation:
    comps = components_from_pd(pd)
    n = comps.count
    a = lambda i, j: generator(i, j, n)  # noqa: E731
    polys = []
    for i, j, k in comps.crossings:
        for l in range(1, n + 1):
            polys.append(a(l, j) + a(l, k) + a(l, i) * a(i, j))
            polys.append(a(j, l) + a(k, l) + a(j, i) * a(i, l))
    rels, _ = _nonzero(polys)
    return Presentation(n, rels, "diagram")


# rendering

def render_presentation(p: Presentation, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(presentation_to_json(p), sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"free ring on {p.generator_count} generators"]
    if p.relators:
        lines[0] += f" modulo {len(p.relators)} relators"
    for t, r in enumerate(p.relators):
        if p.labels:
            lines.append(f"  {p.labels[t]} -> {render(r)}")
        else:
            lines.append(f"  {render(r)}")
    return "\n".join(lines)


def presentation_to_json(p: Presentation) -> dict:
    obj = {"n": p.n, "source": p.source, "relators": [to_json_obj(r) for r in p.relators]}
    if p.labels:
        obj["labels"] = list(p.labels)
    return obj


def presentation_from_json(obj) -> Presentation:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    try:
        return Presentation(
            int(obj["n"]),
            tuple(from_json_obj(r) for r in obj["relators"]),
            str(obj.get("source", "")),
            tuple(obj.get("labels", ())),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed presentation JSON: {exc}") from None
