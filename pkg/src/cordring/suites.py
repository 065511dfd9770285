"""Seeded verification suites shared by the command line and the tests."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .abelian import (
    canonical_ring,
    groebner,
    hc0_braid_abelian,
    phi_abelian,
    point_count,
    rings_equivalent,
    substitute,
    variable_names,
)
from .braid import (
    BraidWord,
    closure_is_knot,
    conjugate,
    full_twist,
    markov_stabilize,
    random_word,
    word,
)
from .cords import FreeWord, check_skein, psi, x
from .invariants import hc0_closure, hc0_diagram, hc0_plat
from .pd import parse_pd
from .phirep import check_matrix_identity, phi, phi_ext
from .twobridge import (
    ContinuedFraction,
    burau_minus1,
    cf_to_fraction,
    cf_to_plat,
    character_roots_check,
    fraction_to_cf,
    gcd_primitive,
    mat_vec,
    p_poly,
    r_poly,
    two_bridge_ring,
    verify_burau_lemma,
)

DEFAULT_SEED = 20240601

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
FIVE_TWO_PD = "X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]"

# knot name -> (closure braid, continued fraction for the plat, PD code)
SMALL_KNOTS = {
    "3_1": (word(2, [1, 1, 1]), (3,), TREFOIL_PD),
    "4_1": (word(3, [1, -2, 1, -2]), (2, 2), FIGURE_EIGHT_PD),
    "5_2": (word(3, [1, 1, 1, 2, -1, 2]), (3, 1, 1), FIVE_TWO_PD),
}

# fractions m/n for 3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1, 7_4
TWO_BRIDGE_FRACTIONS = [(3, 1), (5, 2), (5, 1), (7, 2), (9, 2), (11, 3), (13, 5), (7, 1), (15, 4)]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what: str):
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked - len(self.failures)}/{self.checked} checks"


def random_free_word(n: int, length: int, rng: random.Random) -> FreeWord:
    return FreeWord(n, tuple((rng.randint(1, n), rng.choice((1, -1))) for _ in range(length)))


def suite_matrix_identity(seed: int = DEFAULT_SEED, count: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("matrix-identity")
    for _ in range(count):
        w = random_word(rng.choice((3, 4)), rng.randint(0, 6), rng)
        res.record(check_matrix_identity(w), f"B_{w.strands} word {w}")
    return res


def suite_center(seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("center")
    for n in (2, 3, 4):
        res.record(phi(full_twist(n)).is_identity(), f"full twist acts trivially in B_{n}")
    for n in (2, 3):
        res.record(not phi_ext(full_twist(n)).is_identity(), f"extended full twist is nontrivial in B_{n}")
    return res


def suite_skein(seed: int = DEFAULT_SEED, count: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("skein")
    for _ in range(count):
        n = rng.choice((2, 3, 4))
        i, k, j = (rng.randint(1, n) for _ in range(3))
        w1 = random_free_word(n, rng.randint(0, 5), rng)
        w2 = random_free_word(n, rng.randint(0, 5), rng)
        res.record(check_skein(i, k, j, w1, w2), f"skein ({i},{k},{j}) {w1} | {w2}")
    for _ in range(count):
        n = rng.choice((2, 3, 4))
        i, j = rng.randint(1, n), rng.randint(1, n)
        w = random_free_word(n, rng.randint(0, 5), rng)
        base = psi(i, j, w)
        e = rng.choice((1, -1))
        ok = base == psi(i, j, x(i, n, e) * w) and base == psi(i, j, w * x(j, n, e))
        res.record(ok, f"endpoint invariance ({i},{j}) {w}")
    return res


def conjugacy_check(b: BraidWord, g: BraidWord) -> tuple[bool, str]:
    """Compare the abelian ideal of g b g^-1 with the transport of the ideal
    of b along the ring automorphism induced by g, plus point counts mod p."""
    names = variable_names(b.strands)
    ideal_b = hc0_braid_abelian(b)
    ideal_c = hc0_braid_abelian(conjugate(b, g))
    images = phi_abelian(g)
    moved = [substitute(p, images) for p in ideal_b]
    same_basis = groebner(ideal_c, names=names).signature() == groebner(moved, names=names).signature()
    counts = [(point_count(ideal_b, p), point_count(ideal_c, p)) for p in (2, 3, 5)]
    same_counts = all(u == v for u, v in counts)
    return same_basis and same_counts, f"basis={same_basis} counts={counts}"


def suite_conjugacy(seed: int = DEFAULT_SEED, count: int = 20) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("conjugacy")
    for _ in range(count):
        b = random_word(3, rng.randint(1, 5), rng)
        g = random_word(3, rng.randint(1, 2), rng)
        ok, detail = conjugacy_check(b, g)
        res.record(ok, f"B={b} g={g}: {detail}")
    return res


def random_knot_braid(rng: random.Random, max_len: int = 6) -> BraidWord:
    while True:
        b = random_word(rng.choice((2, 3)), rng.randint(1, max_len), rng)
        if closure_is_knot(b):
            return b


def suite_markov(seed: int = DEFAULT_SEED, count: int = 10) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("markov")
    for _ in range(count):
        b = random_knot_braid(rng)
        sign = rng.choice((1, -1))
        r1 = canonical_ring(hc0_closure(b))
        r2 = canonical_ring(hc0_closure(markov_stabilize(b, sign)))
        res.record(rings_equivalent(r1, r2), f"B={b} sign={sign}: {r1} vs {r2}")
    return res


def random_positive_cf(rng: random.Random) -> ContinuedFraction:
    return ContinuedFraction(tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 5))))


def suite_burau_lemma(seed: int = DEFAULT_SEED, count: int = 100, cf_count: int = 20) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("burau-lemma")
    for _ in range(count):
        n = rng.choice((3, 4))
        w = random_word(n, rng.randint(0, 5), rng)
        v = [rng.randint(-3, 3) for _ in range(n)]
        res.record(verify_burau_lemma(w, v), f"word {w} v={v}")
    for _ in range(cf_count):
        cf = random_positive_cf(rng)
        m, n = cf_to_fraction(cf)
        got = mat_vec(burau_minus1(cf_to_plat(cf)), [0, 0, 1, 1])
        res.record(got == [-n + 1, m - n + 1, m + 1, 1], f"cf {cf.terms}: {got}")
    return res


def suite_gcd_lemma(seed: int = DEFAULT_SEED, max_m: int = 31) -> SuiteResult:
    res = SuiteResult("gcd-lemma")
    for m in range(3, max_m + 1, 2):
        target = p_poly((m + 1) // 2)
        for n in range(1, m):
            if math.gcd(m, n) == 1:
                got = gcd_primitive(r_poly(m, m), r_poly(n, m))
                res.record(got == target, f"m={m} n={n}: {got}")
    return res


def suite_two_bridge_sweep(seed: int = DEFAULT_SEED) -> SuiteResult:
    from .abelian import RingForm

    res = SuiteResult("two-bridge-sweep")
    for m, n in TWO_BRIDGE_FRACTIONS:
        cf = fraction_to_cf(m, n)
        ring = canonical_ring(hc0_plat(cf_to_plat(cf)))
        expected = RingForm("univariate", two_bridge_ring(cf).coeffs)
        res.record(rings_equivalent(ring, expected), f"{m}/{n}: {ring} vs {expected}")
    return res


def suite_char_roots(seed: int = DEFAULT_SEED, max_m: int = 31) -> SuiteResult:
    res = SuiteResult("char-roots")
    for m in range(1, max_m + 1, 2):
        res.record(character_roots_check(m), f"m={m}")
    return res


def suite_cross_method(seed: int = DEFAULT_SEED) -> SuiteResult:
    res = SuiteResult("cross-method")
    for name, (closure, cf, pd) in SMALL_KNOTS.items():
        rings = [
            canonical_ring(hc0_closure(closure)),
            canonical_ring(hc0_plat(cf_to_plat(ContinuedFraction(cf)))),
            canonical_ring(hc0_diagram(parse_pd(pd))),
        ]
        ok = all(rings_equivalent(rings[0], r) for r in rings[1:])
        res.record(ok, f"{name}: " + " | ".join(str(r) for r in rings))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "matrix-identity": suite_matrix_identity,
    "center": suite_center,
    "skein": suite_skein,
    "conjugacy": suite_conjugacy,
    "markov": suite_markov,
    "burau-lemma": suite_burau_lemma,
    "gcd-lemma": suite_gcd_lemma,
    "two-bridge-sweep": suite_two_bridge_sweep,
    "char-roots": suite_char_roots,
    "cross-method": suite_cross_method,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> SuiteResult:
    return SUITES[name](seed=seed)
