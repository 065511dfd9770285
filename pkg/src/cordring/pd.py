"""Planar diagram (PD) codes for knots.

``X[a,b,c,d]`` lists the four edge labels around a crossing counterclockwise,
starting at the incoming under-edge ``a``; ``a -> c`` is the under-strand and
``b, d`` belong to the over-strand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import count

from .braid import BraidWord, closure_is_knot
from .errors import NotAKnot, ParseError

_X_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")

Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PdCode:
    crossings: tuple[Crossing, ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        _validate(self.crossings)

    def __len__(self):
        return len(self.crossings)

    def __str__(self):
        return render_pd(self)


@dataclass(frozen=True)
class DiagramComponents:
    """Segments between undercrossings; per crossing (over, under-in, under-out)."""

    count: int
    crossings: tuple[tuple[int, int, int], ...]
    arc_component: dict


def _validate(crossings):
    if not crossings:
        raise ParseError("a PD code needs at least one crossing")
    labels = [v for x in crossings for v in x]
    expected = set(range(1, 2 * len(crossings) + 1))
    if set(labels) != expected or any(labels.count(v) != 2 for v in expected):
        raise ParseError("every edge label 1..2N must occur exactly twice")


def parse_pd(text: str) -> PdCode:
    body = text.strip()
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    found = _X_RE.findall(body)
    leftover = re.sub(r"[\s,]", "", _X_RE.sub("", body))
    if not found or leftover:
        raise ParseError(f"cannot parse PD code {text!r}")
    return PdCode(tuple(tuple(int(v) for v in x) for x in found))


def render_pd(pd: PdCode) -> str:
    return " ".join("X[" + ",".join(str(v) for v in x) + "]" for x in pd.crossings)


class _DisjointSets:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def link_components(pd: PdCode) -> int:
    """Number of closed curves traced by the code."""
    ds = _DisjointSets()
    for a, b, c, d in pd.crossings:
        ds.union(a, c)
        ds.union(b, d)
    return len({ds.find(v) for x in pd.crossings for v in x})


def components_from_pd(pd: PdCode) -> DiagramComponents:
    if link_components(pd) != 1:
        raise NotAKnot("PD code describes a link, not a knot")
    ds = _DisjointSets()
    for a, b, c, d in pd.crossings:
        ds.find(a)
        ds.find(c)
        ds.union(b, d)
    labels = sorted({v for x in pd.crossings for v in x})
    roots = sorted({ds.find(v) for v in labels}, key=lambda r: min(v for v in labels if ds.find(v) == r))
    index = {r: t for t, r in enumerate(roots, start=1)}
    arc_component = {v: index[ds.find(v)] for v in labels}
    triples = tuple(
        (arc_component[b], arc_component[a], arc_component[c]) for a, b, c, d in pd.crossings
    )
    return DiagramComponents(len(roots), triples, arc_component)


def pd_from_braid(w: BraidWord) -> PdCode:
    """PD code of the braid closure.  For a positive letter the strand moving
    from position k+1 to k passes under."""
    if not closure_is_knot(w):
        raise NotAKnot("braid closure is not a knot")
    if not w.letters:
        raise ParseError("the trivial one-strand braid has no crossings")
    fresh = count(1)
    start = [next(fresh) for _ in range(w.strands)]
    at = list(start)
    raw: list[Crossing] = []
    succ: dict[int, int] = {}
    for letter in w.letters:
        k = abs(letter) - 1
        bl, br = at[k], at[k + 1]
        tl, tr = next(fresh), next(fresh)
        if letter > 0:
            # under strand BR -> TL, over BL -> TR
            raw.append((br, tr, tl, bl))
        else:
            # under strand BL -> TR, over BR -> TL
            raw.append((bl, br, tr, tl))
        succ[bl], succ[br] = tr, tl
        at[k], at[k + 1] = tl, tr
    alias = {end: s for end, s in zip(at, start)}

    def canon(v):
        return alias.get(v, v)

    nxt = {canon(a): canon(b) for a, b in succ.items()}
    order = {}
    v = start[0]
    while v not in order:
        order[v] = len(order) + 1
        v = nxt[v]
    crossings = tuple(tuple(order[canon(v)] for v in x) for x in raw)
    return PdCode(crossings)
