"""Potential handling: parsing, series, closed forms, displayed pairs."""

from fractions import Fraction

import pytest

from z22field import GradedExpr, field, gexp, scalar
from z22field.core import fjet, pairjet, trig
from z22field.potential import (FunctionSymbol, parse_potential,
                                potential_components, series_pair,
                                specialize_potential, trig_series)
from z22field import reference


# ----------------------------------------------------------------------
# the CLI grammar
# ----------------------------------------------------------------------

def test_parse_named_potentials():
    assert parse_potential("cos").kind == "cos"
    assert parse_potential("sin").kind == "sin"
    assert parse_potential("abstract").kind == "abstract"


def test_parse_polynomial():
    V = parse_potential("poly:0,0,1/2")
    assert V.kind == "poly"


@pytest.mark.parametrize("bad", ["tan", "poly:", "poly:1,x", ""])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_potential(bad)


# ----------------------------------------------------------------------
# closed forms against the displayed specializations
# ----------------------------------------------------------------------

def test_quadratic_pair_matches_display():
    pair = potential_components(parse_potential("poly:0,0,1/2"), stage="x")
    spec = reference.quadratic_specialization()
    assert pair.v00 == spec["V00"]
    assert pair.v11 == spec["V11"]


def test_trigonometric_pair_matches_display():
    pair = potential_components(parse_potential("cos"), stage="x")
    spec = reference.trigonometric_specialization()
    assert pair.v00 == spec["V00"]
    assert pair.v11 == spec["V11"]


def test_higher_tower_matches_display():
    spec = reference.trigonometric_specialization()
    V = parse_potential("cos")
    assert specialize_potential(gexp(pairjet(2, 0, "x")), V) == spec["V00_1"]
    assert specialize_potential(gexp(pairjet(2, 1, "x")), V) == spec["V11_1"]


@pytest.mark.parametrize("order", [2, 3, 5])
def test_trig_closed_form_agrees_with_series(order):
    # potential_components re-derives the series internally and raises
    # on disagreement; surviving construction is the assertion
    pair = potential_components(parse_potential("cos"), stage="x",
                                truncation_order=order)
    assert pair.closed


def test_sin_closed_form_agrees_with_series():
    pair = potential_components(parse_potential("sin"), stage="x",
                                truncation_order=4)
    assert pair.closed


# ----------------------------------------------------------------------
# series behavior
# ----------------------------------------------------------------------

def test_abstract_series_truncates_in_the_odd_square():
    sp = series_pair(parse_potential("abstract"), stage="x",
                     truncation_order=2)
    # even slot: odd powers of the (1,1) field square away, leaving
    # derivative jumps of two per series step
    off = {g: GradedExpr.zero() for g in sp.v00.generators()
           if g.kind == "field" and g.base == "phi11"}
    assert sp.v00.substitute(off) == gexp(fjet(1))


def test_polynomial_specialization_is_exact():
    # V = c2 Phi^2/2 + c4 Phi^4 with rational coefficients
    V = parse_potential("poly:0,0,1/2,0,1")
    pair = potential_components(V, stage="x")
    f00 = gexp(field("phi00", 0, 0, "x"))
    f11 = gexp(field("phi11", 0, 0, "x"))
    want00 = f00 + scalar(4) * (f00 * f00 * f00
                                + scalar(3) * f00 * f11 * f11)
    assert pair.v00 == want00


def test_derivative_order_cap_enforced():
    V = parse_potential("poly:0,1")  # linear: second derivative vanishes
    pair = potential_components(V, stage="x", truncation_order=0)
    assert pair.v00 == scalar(1)
    assert pair.v11.is_zero()


def test_rejects_bad_truncation():
    with pytest.raises(ValueError):
        potential_components(parse_potential("cos"), truncation_order=-1)
    with pytest.raises(ValueError):
        potential_components(parse_potential("cos"), stage="w")
