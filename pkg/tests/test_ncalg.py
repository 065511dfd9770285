import pytest
from hypothesis import given, settings

from cordring.errors import DegreeCapExceeded, IncompleteTable, ParseError, UndefinedDegree
from cordring.ncalg import (
    GeneratorImageTable,
    NcPoly,
    add,
    apply_endomorphism,
    degree,
    from_json_obj,
    generator,
    mul,
    parse_ncpoly,
    render,
    scale,
    to_json_obj,
)
from cordring.phirep import phi_generator

from strategies import nc_polys


def a(i, j, n=3):
    return generator(i, j, n)


def test_generator():
    assert render(a(1, 2)) == "a12"
    assert a(2, 2) == NcPoly.const(-2)
    with pytest.raises(IndexError):
        generator(4, 1, 3)


def test_ring_operations():
    assert add(a(1, 2), scale(-1, a(1, 2))).is_zero()
    assert mul(a(1, 2), a(2, 3)).terms == {((1, 2), (2, 3)): 1}
    assert mul(a(1, 2) * a(2, 3), NcPoly.one()) == a(1, 2) * a(2, 3)
    assert a(1, 2) * a(2, 1) != a(2, 1) * a(1, 2)


def test_degree():
    assert degree(a(1, 2)) == 1
    assert degree(a(1, 2) * a(2, 3) + a(1, 3)) == 2
    assert degree(NcPoly.const(5)) == 0
    with pytest.raises(UndefinedDegree):
        degree(NcPoly())


def test_apply_endomorphism_examples():
    t = phi_generator(1, 1, 3)
    ident = GeneratorImageTable.identity(3)
    p = a(1, 2) * a(2, 3) - 3 * a(3, 1)
    assert apply_endomorphism(ident, p) == p
    assert apply_endomorphism(t, a(1, 3)) == -a(2, 3) - a(2, 1) * a(1, 3)
    # a12 -> a21 and a23 -> a13
    assert apply_endomorphism(t, a(1, 2) * a(2, 3)) == a(2, 1) * a(1, 3)


def test_incomplete_table_and_cap():
    with pytest.raises(IncompleteTable):
        apply_endomorphism({(1, 2): a(2, 1)}, a(2, 1))
    t = phi_generator(1, 1, 3)
    with pytest.raises(DegreeCapExceeded):
        apply_endomorphism(t, a(1, 3) * a(1, 3), max_degree=3)


def test_render_and_parse():
    p = NcPoly.const(2) - 3 * a(1, 2) + a(1, 2) * a(2, 1) * a(1, 2)
    assert render(p) == "2 - 3*a12 + a12*a21*a12"
    assert parse_ncpoly("2 - 3*a12 + a12*a21*a12") == p
    assert render(-a(1, 3) + a(1, 2) * a(2, 3)) == "-a13 + a12*a23"
    assert render(NcPoly()) == "0"
    assert render(generator(1, 12, 12)) == "a1_12"
    assert parse_ncpoly("a1_12 - a11") == generator(1, 12, 12) + 2
    with pytest.raises(ParseError):
        parse_ncpoly("2 + b12")


@given(nc_polys(), nc_polys(), nc_polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p
    assert p * NcPoly.one() == p == NcPoly.one() * p


@settings(max_examples=50)
@given(nc_polys(), nc_polys())
def test_endomorphism_is_multiplicative(p, q):
    t = phi_generator(2, -1, 3)
    assert apply_endomorphism(t, p * q) == apply_endomorphism(t, p) * apply_endomorphism(t, q)


@given(nc_polys(), nc_polys())
def test_degree_bound(p, q):
    if p.is_zero() or q.is_zero():
        return
    assert degree(p * q) <= degree(p) + degree(q)
    # leading terms of a free algebra never cancel
    assert degree(p * q) == degree(p) + degree(q)


@given(nc_polys(n=4))
def test_text_and_json_round_trip(p):
    assert parse_ncpoly(render(p)) == p
    assert from_json_obj(to_json_obj(p)) == p
