"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 degree cap exceeded, 4 a
verification suite failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .abelian import abelianize, canonical_ring, groebner, render_comm, variable_names
from .braid import parse_braid
from .cords import parse_free_word, psi
from .errors import CordRingError, DegreeCapExceeded
from .invariants import (
    Presentation,
    hc0_closure,
    hc0_diagram,
    hc0_plat,
    presentation_to_json,
    render_presentation,
)
from .linearized import invariant_factors, lin_presentation, min_generators, render_group
from .ncalg import render, to_json_obj
from .pd import parse_pd
from .suites import DEFAULT_SEED, SUITES, run_suite
from .twobridge import (
    cf_to_fraction,
    cf_to_plat,
    fraction_to_cf,
    parse_cf,
    parse_fraction,
    two_bridge_ring,
)
from .braid import render_braid

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_SUITE = 0, 2, 3, 4


def _max_degree(value):
    if value is not None:
        return value
    env = os.environ.get("HC0_MAX_DEGREE")
    if env:
        try:
            return int(env)
        except ValueError:
            raise argparse.ArgumentTypeError(f"HC0_MAX_DEGREE must be an integer, got {env!r}")
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--abelianize", action="store_true", help="list abelianized relators")
    common.add_argument("--groebner", action="store_true", help="append the canonical quotient ring")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-degree", type=int, default=None, help="cap on intermediate degrees")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(prog="cordring", description="Cord rings of knots and braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", parents=[common], help="knot given as a braid closure")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("plat", parents=[common], help="knot given as a plat closure")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("diagram", parents=[common], help="knot given by a PD code")
    p.add_argument("--pd", required=True)

    p = sub.add_parser("twobridge", parents=[common], help="two-bridge knot from a fraction")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cf", help="exponent list a1,b1,a2,...")
    src.add_argument("--fraction", help="m/n")

    p = sub.add_parser("lin", parents=[common], help="linearized abelian group of a PD code")
    p.add_argument("--pd", required=True)

    p = sub.add_parser("psi", parents=[common], help="image of a cord in A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--word", default="", help='free-group word such as "x3^-1 x2^-1"')

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    return parser


def _emit_presentation(pres: Presentation, args, out) -> None:
    if args.format == "json":
        obj = presentation_to_json(pres)
        if args.abelianize:
            obj["abelian"] = _abelian_lines(pres)
        if args.groebner:
            obj["ring"] = canonical_ring(pres).render()
        out.write(json.dumps(obj, sort_keys=True) + "\n")
        return
    out.write(render_presentation(pres) + "\n")
    if args.abelianize:
        out.write("abelianized:\n")
        for line in _abelian_lines(pres):
            out.write(f"  {line}\n")
    if args.groebner:
        if args.abelianize:
            gens = [g for g in abelianize(pres) if not g.is_zero()]
            if gens:
                gb = groebner(gens, names=variable_names(pres.n))
                out.write("groebner basis:\n")
                for p in gb.polys:
                    out.write(f"  {render_comm(p)}\n")
        out.write(canonical_ring(pres).render() + "\n")


def _abelian_lines(pres: Presentation) -> list[str]:
    seen = []
    for g in abelianize(pres):
        if g.is_zero():
            continue
        text = render_comm(g)
        if text not in seen:
            seen.append(text)
    return seen


def _cmd_closure(args, out):
    w = parse_braid(args.word, args.strands)
    _emit_presentation(hc0_closure(w, args.max_degree), args, out)


def _cmd_plat(args, out):
    w = parse_braid(args.word, args.strands)
    _emit_presentation(hc0_plat(w, args.max_degree), args, out)


def _cmd_diagram(args, out):
    _emit_presentation(hc0_diagram(parse_pd(args.pd)), args, out)


def _cmd_twobridge(args, out):
    if args.cf is not None:
        cf = parse_cf(args.cf)
    else:
        cf = fraction_to_cf(*parse_fraction(args.fraction))
    m, n = cf_to_fraction(cf)
    poly = two_bridge_ring(cf)
    k = (abs(m) + 1) // 2
    braid = cf_to_plat(cf)
    info = {
        "fraction": f"{m}/{n}",
        "continued_fraction": list(cf.terms),
        "plat_word": render_braid(braid),
        "ring": f"Z[x]/(p_{k})",
        f"p_{k}": str(poly),
    }
    if args.groebner:
        info["plat_ring"] = canonical_ring(hc0_plat(braid, args.max_degree)).render()
    if args.format == "json":
        out.write(json.dumps(info, sort_keys=True) + "\n")
        return
    out.write(f"fraction {info['fraction']}\n")
    out.write(f"continued fraction {','.join(str(t) for t in cf.terms)}\n")
    out.write(f"plat word (B_4) {info['plat_word']}\n")
    out.write(f"Z[x]/(p_{k})\n")
    out.write(f"p_{k} = {poly}\n")
    if args.groebner:
        out.write(info["plat_ring"] + "\n")


def _cmd_lin(args, out):
    g = lin_presentation(parse_pd(args.pd))
    rank, torsion = invariant_factors(g)
    if args.format == "json":
        obj = {"generators": g.generators, "rank": rank, "torsion": torsion,
               "min_generators": min_generators(g)}
        out.write(json.dumps(obj, sort_keys=True) + "\n")
        return
    out.write(f"{render_group(g)}\n")
    out.write(f"minimal generators {min_generators(g)}\n")


def _cmd_psi(args, out):
    w = parse_free_word(args.word, args.n)
    for idx in (args.start, args.end):
        if not 1 <= idx <= args.n:
            raise IndexError(f"puncture {idx} outside 1..{args.n}")
    poly = psi(args.start, args.end, w)
    if args.format == "json":
        out.write(json.dumps(to_json_obj(poly)) + "\n")
    else:
        out.write(render(poly) + "\n")


def _cmd_verify(args, out):
    res = run_suite(args.suite, seed=args.seed)
    if args.format == "json":
        out.write(json.dumps({"suite": res.name, "checked": res.checked,
                              "failures": res.failures, "passed": res.passed}) + "\n")
    else:
        out.write(res.summary() + "\n")
        for f in res.failures:
            out.write(f"  failed: {f}\n")
    return EXIT_OK if res.passed else EXIT_SUITE


COMMANDS = {
    "closure": _cmd_closure,
    "plat": _cmd_plat,
    "diagram": _cmd_diagram,
    "twobridge": _cmd_twobridge,
    "lin": _cmd_lin,
    "psi": _cmd_psi,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        args.max_degree = _max_degree(args.max_degree)
        code = COMMANDS[args.command](args, out)
    except DegreeCapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (CordRingError, ValueError, IndexError, argparse.ArgumentTypeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())
