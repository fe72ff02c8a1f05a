"""Ring-level properties: sign rule, canonical form, star, exact scalars."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from z22field import (DEG00, DEG01, DEG10, DEG11, GaussianRational,
                      GradedExpr, coord, field, gexp, param, parity, scalar)
from z22field.core import QI, QONE, QZERO


# ----------------------------------------------------------------------
# exact scalars
# ----------------------------------------------------------------------

fractions = st.fractions(min_value=-40, max_value=40, max_denominator=12)
rationals = st.builds(GaussianRational, fractions, fractions)


@given(rationals, rationals, rationals)
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(rationals)
def test_scalar_conjugation(a):
    assert a.conj().conj() == a
    norm = a * a.conj()
    assert norm.im == 0
    if a != QZERO:
        assert a / a == QONE
        assert (QONE / a) * a == QONE


def test_imaginary_unit():
    assert QI * QI == GaussianRational(-1)
    assert QI.conj() == -QI


# ----------------------------------------------------------------------
# grading and the sign rule
# ----------------------------------------------------------------------

def test_parity_uses_scalar_product():
    # the scalar product a1 a2 + b1 b2, not total parity
    assert parity(DEG10, DEG01) == 0
    assert parity(DEG10, DEG10) == 1
    assert parity(DEG01, DEG01) == 1
    assert parity(DEG11, DEG11) == 0
    assert parity(DEG11, DEG10) == 1
    assert parity(DEG11, DEG01) == 1
    for d in (DEG00, DEG10, DEG01, DEG11):
        assert parity(DEG00, d) == 0


def test_cross_sector_fermions_commute():
    psi10 = gexp(field("psi10", 0, 0, "x"))
    psi01 = gexp(field("psi01", 0, 0, "x"))
    lam10 = gexp(field("lam10", 0, 0, "x"))
    lam01 = gexp(field("lam01", 0, 0, "x"))
    assert psi01 * psi10 == psi10 * psi01
    assert lam01 * lam10 == lam10 * lam01
    assert psi10 * lam01 == lam01 * psi10


def test_same_sector_fermions_anticommute():
    psi10 = gexp(field("psi10", 0, 0, "x"))
    lam10 = gexp(field("lam10", 0, 0, "x"))
    psi01 = gexp(field("psi01", 0, 0, "x"))
    lam01 = gexp(field("lam01", 0, 0, "x"))
    assert lam10 * psi10 == -(psi10 * lam10)
    assert lam01 * psi01 == -(psi01 * lam01)


def test_exotic_boson_anticommutes_with_thetas():
    z = gexp(coord("z"))
    th10 = gexp(coord("th10"))
    th01 = gexp(coord("th01"))
    assert z * th10 == -(th10 * z)
    assert z * th01 == -(th01 * z)
    assert th10 * th01 == th01 * th10


def test_nilpotency():
    for name in ("th10", "th01"):
        g = gexp(coord(name))
        assert (g * g).is_zero()
    for base in ("psi10", "psi01", "lam10", "lam01"):
        g = gexp(field(base, 0, 0, "x"))
        assert (g * g).is_zero()


def test_z_square_folds_to_y():
    z = gexp(coord("z"))
    assert z * z == gexp(coord("y"))
    assert z * z * z == gexp(coord("y")) * z


def test_rational_exponents_on_even_coordinates():
    half = Fraction(1, 2)
    rx = gexp(coord("y"), half)
    assert rx * rx == gexp(coord("y"))
    assert gexp(coord("x"), half) * gexp(coord("x"), -half) == scalar(1)


# ----------------------------------------------------------------------
# expression-level algebra
# ----------------------------------------------------------------------

_POOL = [
    coord("t"), coord("y"), coord("z"), coord("th10"), coord("th01"),
    field("phi00", 0, 0, "y"), field("phi11", 0, 0, "y"),
    field("psi10", 0, 0, "y"), field("psi01", 0, 0, "y"),
    field("lam10", 1, 0, "y"), field("A00", 0, 0, "y"),
    param("eps10"), param("alpha"),
]

small_coeff = st.builds(GaussianRational,
                        st.fractions(min_value=-6, max_value=6, max_denominator=4),
                        st.fractions(min_value=-6, max_value=6, max_denominator=4))


@st.composite
def exprs(draw):
    n_terms = draw(st.integers(0, 3))
    total = GradedExpr.zero()
    for _ in range(n_terms):
        acc = scalar(draw(small_coeff))
        for g in draw(st.lists(st.sampled_from(_POOL), max_size=3)):
            acc = acc * gexp(g)
        total = total + acc
    return total


@given(exprs(), exprs(), exprs())
@settings(max_examples=60, deadline=None)
def test_expression_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == GradedExpr.zero()


@given(exprs(), exprs())
@settings(max_examples=60, deadline=None)
def test_star_is_an_involutive_antihomomorphism(a, b):
    assert a.star().star() == a
    assert (a + b).star() == a.star() + b.star()
    assert (a * b).star() == b.star() * a.star()


@given(exprs())
@settings(max_examples=60, deadline=None)
def test_degree_additive_on_products(a):
    z = gexp(coord("z"))
    da = a.degree()
    if da is not None and not a.is_zero():
        prod = z * a
        if not prod.is_zero():
            got = prod.degree()
            assert got == ((da[0] + 1) % 2, (da[1] + 1) % 2)


def test_canonical_order_is_stable():
    psi = gexp(field("psi10", 0, 0, "x"))
    lam = gexp(field("lam10", 0, 0, "x"))
    t = gexp(coord("t"))
    lhs = lam * t * psi
    rhs = -(t * (psi * lam))
    assert lhs == rhs
    assert str(lhs) == str(rhs)


def test_equality_ignores_construction_path():
    a = gexp(field("phi00", 1, 0, "x"))
    e1 = (a + a) * scalar(Fraction(1, 2))
    assert e1 == a
    assert scalar(0) * a == GradedExpr.zero()
