"""Exact polynomial arithmetic, Buchberger, quotients and saturation."""

import itertools
from fractions import Fraction as F

import pytest

from su3forms.errors import ParseError, ResourceBudgetExceeded
from su3forms.groebner import (
    Budget,
    Ideal,
    MonomialOrder,
    Poly,
    buchberger,
    divide_exact,
    format_poly,
    groebner_basis,
    ideal_equal,
    ideal_quotient_principal,
    normal_form,
    parse_order,
    parse_poly,
    reduce_poly,
    saturate,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, variables=XY):
    return parse_poly(text, variables)


def _monic_set(basis, order):
    return {p.monic(order) for p in basis}


# -- polynomial core --------------------------------------------------------


def test_parse_format_round_trip():
    for text in ("x^2 - 1", "x*y - 1", "2*x^3*y + 1/2*y^2 - 7", "x", "-x + y"):
        p = P(text)
        assert P(format_poly(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_poly("x + ", XY)
    with pytest.raises(ParseError):
        parse_poly("w^2", XY)  # undeclared variable
    with pytest.raises(ParseError):
        parse_poly("x ** 2", XY)


def test_poly_invariants_no_zero_terms():
    p = P("x^2 + y") - P("x^2")
    assert set(p.terms) == {(0, 1)}
    assert (p - P("y")).is_zero()
    q = P("x") * 0
    assert q.is_zero() and not q.terms


def test_poly_arithmetic():
    x, y = Poly.variable(XY, "x"), Poly.variable(XY, "y")
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + 1) ** 3 == x ** 3 + 3 * x ** 2 + 3 * x + 1
    assert x.substitute("x", F(2)) == Poly.constant(XY, 2)
    assert (x * y + y).evaluate({"x": F(1, 2), "y": F(4)}) == 6


def test_primitive_and_monic():
    order = MonomialOrder.grevlex()
    p = P("4*x^2 - 6*y")
    assert p.primitive() == P("2*x^2 - 3*y")
    assert (-p).primitive() == P("2*x^2 - 3*y")  # sign normalized to the lead
    assert p.monic(order) == P("x^2 - 3/2*y")


def test_divide_exact():
    g = P("x^2*y + x*y^2")
    f = P("x*y")
    assert divide_exact(g, f) == P("x + y")
    with pytest.raises(ValueError):
        divide_exact(P("x^2 + y"), f)


# -- monomial orders --------------------------------------------------------


def test_order_comparisons():
    lex = MonomialOrder.lex()
    grevlex = MonomialOrder.grevlex()
    x2 = (2, 0, 0)
    xy = (1, 1, 0)
    y3 = (0, 3, 0)
    # lex: x^2 > x*y > y^3; grevlex ranks by total degree first
    assert lex.key(x2) > lex.key(xy) > lex.key(y3)
    assert grevlex.key(y3) > grevlex.key(x2)
    assert grevlex.key(x2) > grevlex.key(xy)


def test_block_order_eliminates_front_variables():
    block = MonomialOrder.block(1)
    # any monomial containing x beats any x-free monomial
    assert block.key((1, 0, 0)) > block.key((0, 5, 5))
    assert block.key((0, 2, 1)) > block.key((0, 1, 2))


def test_parse_order():
    assert parse_order("grevlex") == MonomialOrder.grevlex()
    assert parse_order("lex") == MonomialOrder.lex()
    assert parse_order("block:2") == MonomialOrder.block(2)
    with pytest.raises(ParseError):
        parse_order("degrevlex")


# -- reduction and Buchberger ----------------------------------------------


def test_reduce_poly_examples():
    order = MonomialOrder.lex()
    assert reduce_poly(P("x^2"), [P("x")], order).is_zero()
    assert reduce_poly(P("x^2 + y"), [P("x^2 - 1")], order) == P("y + 1")
    assert reduce_poly(P("x^17 - 3"), [P("1")], order).is_zero()


def test_reduce_poly_is_exact_over_rationals():
    order = MonomialOrder.grevlex()
    r = reduce_poly(P("x^2"), [P("3*x - 2")], order)
    assert r == Poly.constant(XY, F(4, 9))


def test_buchberger_spec_examples():
    lex = MonomialOrder.lex()
    gb = groebner_basis([P("x^2 - 1"), P("x*y - 1")], lex)
    assert _monic_set(gb, lex) == {P("x - y"), P("y^2 - 1")}
    assert groebner_basis([P("x")], lex) == [P("x")]
    gb_unit = groebner_basis([P("x"), P("1 - x")], lex)
    assert gb_unit == [P("1")]


def test_groebner_basis_properties():
    order = MonomialOrder.grevlex()
    gens = [P("x^2 + y^2 - 1", XYZ), P("x*y - z", XYZ), P("x - y*z", XYZ)]
    gb = groebner_basis(gens, order)
    for g in gens:
        assert reduce_poly(g, gb, order).is_zero()
    # every S-polynomial of basis pairs reduces to zero
    for a, b in itertools.combinations(gb, 2):
        ea, ca = a.leading(order)
        eb, cb = b.leading(order)
        lcm = tuple(max(i, j) for i, j in zip(ea, eb))
        sa = tuple(i - j for i, j in zip(lcm, ea))
        sb = tuple(i - j for i, j in zip(lcm, eb))
        spoly = Poly(a.variables, {sa: F(1) / ca}) * a - Poly(
            b.variables, {sb: F(1) / cb}
        ) * b
        assert reduce_poly(spoly, gb, order).is_zero()


def test_groebner_basis_permutation_invariant():
    order = MonomialOrder.grevlex()
    gens = [P("x^2 + y^2 - 1", XYZ), P("x*y - z", XYZ), P("x - y*z", XYZ)]
    reference = groebner_basis(gens, order)
    for perm in itertools.permutations(gens):
        assert groebner_basis(list(perm), order) == reference


CYCLIC4_VARS = ("a", "b", "c", "d")


def _cyclic4():
    return [
        parse_poly("a + b + c + d", CYCLIC4_VARS),
        parse_poly("a*b + b*c + c*d + d*a", CYCLIC4_VARS),
        parse_poly("a*b*c + b*c*d + c*d*a + d*a*b", CYCLIC4_VARS),
        parse_poly("a*b*c*d - 1", CYCLIC4_VARS),
    ]


def test_cyclic4_grevlex():
    order = MonomialOrder.grevlex()
    gb = groebner_basis(_cyclic4(), order)
    assert len(gb) == 7
    for g in _cyclic4():
        assert reduce_poly(g, gb, order).is_zero()
    gens = _cyclic4()
    member = gens[1] * gens[3] + gens[0] * gens[2]
    assert reduce_poly(member, gb, order).is_zero()
    assert not reduce_poly(parse_poly("b*d", CYCLIC4_VARS), gb, order).is_zero()


def test_budget_exhaustion_raises():
    budget = Budget(seconds=0, mib=4096).start()
    with pytest.raises(ResourceBudgetExceeded):
        groebner_basis(_cyclic4(), MonomialOrder.grevlex(), budget)


def test_stop_hook_truncated_membership():
    # homogeneous input: once the frontier passes deg(candidate), the partial
    # basis decides membership for it
    order = MonomialOrder.grevlex()
    gens = [P("x^2 - x*y"), P("y^3 + x*y^2")]
    seen = []

    def stop(basis, frontier):
        seen.append((frontier, len(basis)))
        return frontier > 4

    partial = groebner_basis(gens, order, stop=stop)
    assert seen and all(b >= a for a, b in zip([f for f, _ in seen], [f for f, _ in seen][1:]))
    full = groebner_basis(gens, order)
    probe = P("x^3*y - x*y^3")
    assert reduce_poly(probe, full, order).is_zero() == reduce_poly(
        probe, partial, order
    ).is_zero()


# -- Ideal wrapper ----------------------------------------------------------


def test_ideal_normal_form_and_cache():
    lex = MonomialOrder.lex()
    ideal = buchberger([P("x^2 - 1")], lex)
    assert normal_form(P("x^2 + y"), ideal, lex) == P("y + 1")
    assert ideal.groebner(lex) is ideal.groebner(lex)
    assert ideal.contains(P("x^4 - 1"), lex)
    assert not ideal.contains(P("x - 1"), lex)


def test_ideal_is_unit():
    assert Ideal([P("x"), P("1 - x")]).is_unit()
    assert not Ideal([P("x")]).is_unit()


def test_ideal_equal():
    assert ideal_equal(Ideal([P("x"), P("y")]), Ideal([P("y"), P("x + y")]))
    assert not ideal_equal(Ideal([P("x")]), Ideal([P("x^2")]))
    with pytest.raises(ValueError):
        ideal_equal(Ideal([P("x")]), Ideal([parse_poly("x", XYZ)]))


# -- quotients and saturation ------------------------------------------------


def test_quotient_examples():
    q = ideal_quotient_principal(Ideal([P("x*y")]), P("x"))
    assert ideal_equal(q, Ideal([P("y")]))
    q2 = ideal_quotient_principal(Ideal([P("x")]), P("1"))
    assert ideal_equal(q2, Ideal([P("x")]))
    with pytest.raises(ValueError):
        ideal_quotient_principal(Ideal([P("x")]), Poly.zero(XY))


def test_quotient_soundness():
    order = MonomialOrder.grevlex()
    Q = Ideal([P("x^2*y - y"), P("x*y^2")])
    f = P("y")
    quot = ideal_quotient_principal(Q, f)
    for g in quot.generators:
        assert Q.normal_form(g * f, order).is_zero()


def test_saturate_examples():
    s = saturate(Ideal([P("x^2*y")]), P("x"))
    assert ideal_equal(s, Ideal([P("y")]))
    s2 = saturate(Ideal([P("x")]), P("y"))
    assert ideal_equal(s2, Ideal([P("x")]))
    f = P("x^2 + y^2")
    assert saturate(Ideal([f]), f).is_unit()


def test_saturation_contains_ideal():
    order = MonomialOrder.grevlex()
    I = Ideal([P("x^2*y - x"), P("y^2")])
    s = saturate(I, P("x"))
    for g in I.generators:
        assert reduce_poly(g, s.groebner(order), order).is_zero()
