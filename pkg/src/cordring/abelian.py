"""Abelianization, commutative polynomials over Z, and strong Groebner bases.

Polynomials are dictionaries from exponent tuples to nonzero ints.  The
Groebner engine is Buchberger's algorithm over a Euclidean domain: S-pairs
and G-pairs (gcd combinations of leading coefficients) are reduced with
remainders taken in ``[0, lc)``.  With positive leading coefficients the
reduced strong basis is unique, which is what makes it a canonical form.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DegreeCapExceeded
from .invariants import Presentation
from .ncalg import NcPoly

Exps = tuple[int, ...]
Terms = dict[Exps, int]

GREVLEX = "grevlex"
LEX = "lex"


def _grevlex_key(e: Exps):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e: Exps):
    return e


ORDER_KEYS: dict[str, Callable] = {GREVLEX: _grevlex_key, LEX: _lex_key}


class CommPoly:
    """Integer polynomial in commuting variables ``names``."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[Exps, int] | None = None):
        self.names = tuple(names)
        self.terms: Terms = {tuple(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, names, c: int) -> "CommPoly":
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names, idx: int) -> "CommPoly":
        e = [0] * len(names)
        e[idx] = 1
        return cls(names, {tuple(e): 1})

    @property
    def nvars(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def _wrap(self, terms) -> "CommPoly":
        return CommPoly(self.names, terms)

    def _other(self, other) -> Terms:
        if isinstance(other, CommPoly):
            return other.terms
        if isinstance(other, int):
            return {(0,) * self.nvars: other} if other else {}
        raise TypeError(other)

    def __add__(self, other):
        return self._wrap(_add(self.terms, self._other(other)))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self._wrap(_add(self.terms, {e: -c for e, c in self._other(other).items()}))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._wrap(_mul(self.terms, self._other(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CommPoly.const(self.names, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self._other(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading(self, order: str = GREVLEX) -> tuple[Exps, int]:
        e = max(self.terms, key=ORDER_KEYS[order])
        return e, self.terms[e]

    def __repr__(self):
        return f"CommPoly({render_comm(self)!r})"

    def __str__(self):
        return render_comm(self)


def _add(a: Terms, b: Terms) -> Terms:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _shift(a: Terms, e: Exps, c: int) -> Terms:
    return {tuple(x + y for x, y in zip(k, e)): v * c for k, v in a.items()}


def render_comm(p: CommPoly, order: str = GREVLEX) -> str:
    if p.is_zero():
        return "0"
    key = ORDER_KEYS[order]
    parts = []
    for t, e in enumerate(sorted(p.terms, key=key, reverse=True)):
        c = p.terms[e]
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(p.names, e) if k
        )
        mag = abs(c)
        body = (mono if mag == 1 else f"{mag}*{mono}") if mono else str(mag)
        if t == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# abelianization

def variable_names(n: int) -> list[str]:
    return [f"b{i}{j}" if j <= 9 else f"b{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _var_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    t = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            idx[(i, j)] = idx[(j, i)] = t
            t += 1
    return idx


def abelianize_poly(p: NcPoly, n: int) -> CommPoly:
    idx = _var_index(n)
    names = variable_names(n)
    nv = len(names)
    out: Terms = {}
    for mono, c in p.terms.items():
        e = [0] * nv
        for g in mono:
            e[idx[g]] += 1
        t = tuple(e)
        out[t] = out.get(t, 0) + c
    return CommPoly(names, out)


def abelianize(p: Presentation) -> list[CommPoly]:
    return [abelianize_poly(r, p.n) for r in p.relators]


# Groebner bases over Z

def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


class _Elem:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: Terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _reduce(terms: Terms, basis: list[_Elem], key, full: bool = True) -> Terms:
    """E-reduction: each reducible term's coefficient is replaced by its
    remainder modulo the smallest applicable leading coefficient."""
    p = dict(terms)
    heap = [(_neg_key(key(e)), e) for e in p]
    heapq.heapify(heap)
    rem: Terms = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.get(e)
        if not c:
            continue
        best = None
        for g in basis:
            if (c < 0 or c >= g.lc) and _divides(g.lm, e):
                if best is None or g.lc < best.lc:
                    best = g
        if best is not None:
            q = c // best.lc
            if q:
                shift = _sub_exps(e, best.lm)
                for ge, gc in best.terms.items():
                    t = tuple(x + y for x, y in zip(ge, shift))
                    v = p.get(t, 0) - q * gc
                    if v:
                        if t not in p:
                            heapq.heappush(heap, (_neg_key(key(t)), t))
                        p[t] = v
                    else:
                        p.pop(t, None)
                c = p.get(e, 0)
        if c:
            rem[e] = c
            p.pop(e, None)
            if not full:
                rem.update(p)
                return rem
    return rem


def _neg_key(k):
    # heapq is a min-heap; flatten the key and negate for max-first order
    flat = []
    for part in k:
        if isinstance(part, tuple):
            flat.extend(-x for x in part)
        else:
            flat.append(-part)
    return tuple(flat)


def _normalize_sign(terms: Terms, key) -> Terms:
    lm = max(terms, key=key)
    if terms[lm] < 0:
        return {e: -c for e, c in terms.items()}
    return terms


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class GroebnerBasisZ:
    names: tuple[str, ...]
    order: str
    polys: tuple[CommPoly, ...]

    def is_unit_ideal(self) -> bool:
        zero = (0,) * len(self.names)
        return any(p.terms == {zero: 1} for p in self.polys)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def signature(self):
        key = ORDER_KEYS[self.order]
        return tuple(
            tuple(sorted(p.terms.items(), key=lambda t: key(t[0]), reverse=True))
            for p in self.polys
        )


def groebner(
    gens: Iterable[CommPoly],
    order: str = GREVLEX,
    names: Sequence[str] | None = None,
) -> GroebnerBasisZ:
    gens = list(gens)
    if names is None:
        names = gens[0].names if gens else ()
    key = ORDER_KEYS[order]
    basis: list[_Elem] = []
    pairs: list = []
    counter = itertools.count()
    todo: list = []

    def push_todo(terms: Terms):
        lm = max(terms, key=key)
        heapq.heappush(todo, (key(lm), next(counter), terms))

    for g in gens:
        if g.terms:
            push_todo(g.terms)

    while todo or pairs:
        if todo and (not pairs or todo[0][0] <= pairs[0][0]):
            _, _, cand = heapq.heappop(todo)
            candidates = [cand]
        else:
            _, _, f, g = heapq.heappop(pairs)
            if f.lm is None or g.lm is None:  # a member was retired
                continue
            candidates = _pair_polys(f, g)
        for cand in candidates:
            r = _reduce(cand, basis, key, full=False)
            if not r:
                continue
            elem = _Elem(_normalize_sign(r, key), key)
            keep = []
            for old in basis:
                if _divides(elem.lm, old.lm) and old.lc % elem.lc == 0:
                    push_todo(old.terms)
                    old.lm = None  # retire; its pairs are skipped
                else:
                    keep.append(old)
            basis[:] = keep
            for old in basis:
                heapq.heappush(pairs, (key(_lcm(old.lm, elem.lm)), next(counter), old, elem))
            basis.append(elem)

    return GroebnerBasisZ(tuple(names), order, tuple(_interreduce(basis, key, names)))


def _pair_polys(f: _Elem, g: _Elem) -> list[Terms]:
    """The S-polynomial and, when neither leading coefficient divides the
    other, the G-polynomial of a pair."""
    lcm = _lcm(f.lm, g.lm)
    out = []
    coprime_lm = all(min(x, y) == 0 for x, y in zip(f.lm, g.lm))
    if not (coprime_lm and math.gcd(f.lc, g.lc) == 1):
        m = f.lc * g.lc // math.gcd(f.lc, g.lc)
        s = _add(
            _shift(f.terms, _sub_exps(lcm, f.lm), m // f.lc),
            _shift(g.terms, _sub_exps(lcm, g.lm), -(m // g.lc)),
        )
        if s:
            out.append(s)
    if f.lc % g.lc and g.lc % f.lc:
        _, u, v = _xgcd(f.lc, g.lc)
        out.append(
            _add(
                _shift(f.terms, _sub_exps(lcm, f.lm), u),
                _shift(g.terms, _sub_exps(lcm, g.lm), v),
            )
        )
    return out


def _interreduce(basis: list[_Elem], key, names) -> list[CommPoly]:
    elems = [_Elem(_normalize_sign(b.terms, key), key) for b in basis]
    # drop elements whose leading term is strongly divisible by another's
    elems.sort(key=lambda g: (key(g.lm), g.lc))
    kept: list[_Elem] = []
    for g in elems:
        if any(_divides(h.lm, g.lm) and g.lc % h.lc == 0 for h in kept):
            continue
        kept.append(g)
    out = []
    for g in kept:
        others = [h for h in kept if h is not g]
        tail = dict(g.terms)
        del tail[g.lm]
        tail = _reduce(tail, others, key) if tail else {}
        tail[g.lm] = g.lc
        out.append(tail)
    out.sort(key=lambda t: key(max(t, key=key)))
    return [CommPoly(names, t) for t in out]


def normal_form(p: CommPoly, gb: GroebnerBasisZ) -> CommPoly:
    key = ORDER_KEYS[gb.order]
    basis = [_Elem(g.terms, key) for g in gb.polys]
    return CommPoly(p.names, _reduce(p.terms, basis, key))


# canonical ring forms

@dataclass(frozen=True)
class RingForm:
    """Canonical description of Z[b]/I.

    ``kind`` is ``"univariate"`` when the ring was recognised as Z[x]/(f) (with
    ``coeffs`` the coefficients of f, constant first; an empty tuple means no
    relation), ``"Z"`` or ``"0"`` for the degenerate cases, and ``"general"``
    otherwise, in which case ``basis`` holds the reduced grevlex basis.
    """

    kind: str
    coeffs: tuple[int, ...] = ()
    basis: GroebnerBasisZ | None = None

    def render(self) -> str:
        if self.kind == "Z":
            return "Z"
        if self.kind == "0":
            return "0"
        if self.kind == "univariate":
            if not self.coeffs:
                return "Z[x]"
            return f"Z[x]/({render_univariate(self.coeffs)})"
        names = ",".join(self.basis.names)
        body = ", ".join(render_comm(p) for p in self.basis.polys)
        return f"Z[{names}]/({body})"

    def __str__(self):
        return self.render()


def render_univariate(coeffs: Sequence[int], var: str = "x") -> str:
    names = (var,)
    return render_comm(CommPoly(names, {(k,): c for k, c in enumerate(coeffs)}))


def _normalize_univariate(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)


def negate_variable(coeffs: Sequence[int]) -> tuple[int, ...]:
    """f(x) -> f(-x), renormalized to a positive leading coefficient."""
    return _normalize_univariate([c if k % 2 == 0 else -c for k, c in enumerate(coeffs)])


def _permute_terms(terms: Terms, perm: Sequence[int]) -> Terms:
    return {tuple(e[perm[t]] for t in range(len(e))): c for e, c in terms.items()}


def univariate_form(gens: Sequence[CommPoly], names: Sequence[str] | None = None):
    """Try to read Z[b]/(gens) as Z[x]/(f).

    Returns ``(pivot_index, coeffs)`` on success (``pivot_index`` is None when
    there are no variables) or None.  The lex basis is computed with the pivot
    as the smallest variable.
    """
    gens = [g for g in gens if not g.is_zero()]
    if names is None:
        names = gens[0].names if gens else ()
    nv = len(names)
    if nv == 0:
        const = math.gcd(*[g.terms.get((), 0) for g in gens]) if gens else 0
        return None, ((const,) if const else ())
    first = groebner(gens, GREVLEX, names)
    if first.is_unit_ideal():
        return 0, (1,)
    for pivot in range(nv):
        # reorder so that the pivot is the last (smallest lex) variable
        order = [t for t in range(nv) if t != pivot] + [pivot]
        moved = [CommPoly(names, _permute_terms(g.terms, order)) for g in first.polys]
        gb = groebner(moved, LEX, names)
        linear = set()
        uni = []
        ok = True
        for p in gb.polys:
            lm, lc = p.leading(LEX)
            support = [t for t in range(nv) if any(e[t] for e in p.terms)]
            if support == [nv - 1] or not support:
                uni.append(p)
            elif (
                lc == 1
                and sum(lm) == 1
                and lm.index(1) < nv - 1
                and all(e[t] == 0 for e in p.terms for t in range(nv - 1) if e != lm)
            ):
                linear.add(lm.index(1))
            else:
                ok = False
                break
        if not ok or len(linear) != nv - 1 or len(uni) > 1:
            continue
        if not uni:
            return pivot, ()
        coeffs = [0] * (max(e[nv - 1] for e in uni[0].terms) + 1)
        for e, c in uni[0].terms.items():
            coeffs[e[nv - 1]] = c
        return pivot, _normalize_univariate(coeffs)
    return None


# routes whose natural variable is minus the pivot generator
NEGATED_ROUTES = frozenset({"plat"})


def canonical_ring(p: Presentation) -> RingForm:
    names = variable_names(p.n)
    gens = [g for g in abelianize(p) if not g.is_zero()]
    if not names:
        const = math.gcd(*[g.terms.get((), 0) for g in gens]) if gens else 0
        if const == 1:
            return RingForm("0")
        if const == 0:
            return RingForm("Z")
        return RingForm("univariate", (const,))
    uf = univariate_form(gens, names)
    if uf is not None:
        _, coeffs = uf
        if coeffs == (1,):
            return RingForm("0")
        if len(coeffs) == 2 and coeffs[1] == 1:
            return RingForm("Z")
        if p.source in NEGATED_ROUTES:
            coeffs = negate_variable(coeffs)
        return RingForm("univariate", coeffs)
    return RingForm("general", basis=groebner(gens, GREVLEX, names))


def rings_equivalent(r1: RingForm, r2: RingForm) -> bool:
    """Equality of canonical forms, up to x -> -x or a variable relabelling."""
    if r1.kind != r2.kind:
        return False
    if r1.kind in ("Z", "0"):
        return True
    if r1.kind == "univariate":
        return r1.coeffs == r2.coeffs or r1.coeffs == negate_variable(r2.coeffs)
    b1, b2 = r1.basis, r2.basis
    if len(b1.names) != len(b2.names):
        return False
    target = b1.signature()
    nv = len(b1.names)
    for perm in itertools.permutations(range(nv)):
        moved = [CommPoly(b2.names, _permute_terms(p.terms, perm)) for p in b2.polys]
        if groebner(moved, b2.order, b2.names).signature() == target:
            return True
    return False


def point_count(gens: Sequence[CommPoly], prime: int) -> int:
    """Number of common zeros over F_p (the number of ring maps to F_p)."""
    gens = [g for g in gens if not g.is_zero()]
    nv = len(gens[0].names) if gens else 0
    total = 0
    for pt in itertools.product(range(prime), repeat=nv):
        if all(_eval_mod(g.terms, pt, prime) == 0 for g in gens):
            total += 1
    return total


def _eval_mod(terms: Terms, pt, prime: int) -> int:
    acc = 0
    for e, c in terms.items():
        v = c
        for x, k in zip(pt, e):
            if k:
                v = v * pow(x, k, prime)
        acc = (acc + v) % prime
    return acc


# the braid action on the abelianization

def substitute(p: CommPoly, images: Sequence[CommPoly]) -> CommPoly:
    """Ring map sending variable t to ``images[t]``."""
    names = images[0].names if images else p.names
    powers: dict[tuple[int, int], Terms] = {}

    def power(t: int, k: int) -> Terms:
        if k == 0:
            return {(0,) * len(names): 1}
        got = powers.get((t, k))
        if got is None:
            got = _mul(power(t, k - 1), images[t].terms)
            powers[(t, k)] = got
        return got

    out: Terms = {}
    for e, c in p.terms.items():
        term: Terms = {(0,) * len(names): c}
        for t, k in enumerate(e):
            if k:
                term = _mul(term, power(t, k))
        out = _add(out, term)
    return CommPoly(names, out)


def phi_abelian(w, max_degree: int | None = None) -> list[CommPoly]:
    """Images of b_ij (in variable order) under the map induced by phi_w.

    The braid action preserves the ideal defining the abelianization, so this
    agrees with abelianizing the noncommutative images, at a fraction of the
    cost.
    """
    from .phirep import phi_generator

    n = w.strands
    names = variable_names(n)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    images = [CommPoly.var(names, t) for t in range(len(names))]
    for letter in reversed(w.letters):
        table = phi_generator(abs(letter), 1 if letter > 0 else -1, n)
        step = [abelianize_poly(table[g], n) for g in pairs]
        images = [substitute(p, step) for p in images]
        if max_degree is not None:
            for p in images:
                d = max((sum(e) for e in p.terms), default=0)
                if d > max_degree:
                    raise DegreeCapExceeded(d, max_degree)
    return images


def hc0_braid_abelian(w, max_degree: int | None = None) -> list[CommPoly]:
    """Abelianized relators b - phi_w(b), zero ones dropped."""
    names = variable_names(w.strands)
    images = phi_abelian(w, max_degree)
    out = [CommPoly.var(names, t) - img for t, img in enumerate(images)]
    return [p for p in out if not p.is_zero()]
