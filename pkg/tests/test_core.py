from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsos.core import (
    GREVLEX,
    LEX,
    GaussRational,
    Polynomial,
    RingContext,
    block_order,
    coefficient_vector,
    conjugate,
    field_ops,
    leading_term,
    monomials_of_degree,
    parse_coefficient,
    parse_polynomial,
)
from hsos.core.parsing import infer_ring, parse_polynomial_list
from hsos.errors import NonHomogeneousError, ParseError, RingMismatchError, ZeroPolynomialError

G = GaussRational


def test_field_ops_examples():
    assert field_ops(G(1, 1), G(1, -1), "mul") == 2
    assert field_ops(G(Fraction(1, 2), Fraction(1, 3)), G(Fraction(1, 2), Fraction(-1, 3)), "add") == 1
    assert field_ops(G(3, 4), G(3, 4), "div") == 1
    assert field_ops(G(3, 4), G(1), "sub") == G(2, 4)


def test_division_by_zero_is_distinct():
    with pytest.raises(ZeroDivisionError):
        G(1, 1) / G(0)
    with pytest.raises(ZeroDivisionError):
        G(0).inverse()


def test_conjugate():
    assert conjugate(G(2, 3)) == G(2, -3)
    assert conjugate(G(5)) == 5
    # (1+i)(2-i) = 2 - i + 2i - i^2 = 3 + i, conjugate 3 - i
    assert conjugate(G(1, 1) * G(2, -1)) == G(3, -1)
    assert conjugate(G(1, 1)) * conjugate(G(2, -1)) == G(3, -1)


def test_canonical_rationals():
    a = G(Fraction(2, 4), Fraction(-6, 8))
    assert a.re == Fraction(1, 2) and a.re.denominator == 2
    assert a.im == Fraction(-3, 4)


gauss = st.builds(G, st.fractions(max_denominator=12).map(lambda q: q.limit_denominator(12)),
                  st.fractions(max_denominator=12).map(lambda q: q.limit_denominator(12)))


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    n = a.norm_sq()
    assert n >= 0 and (n == 0) == (not a)
    assert a * conjugate(a) == n
    if b:
        assert (a / b) * b == a


def test_parse_examples(R4, xy):
    p = parse_polynomial("z2*z3 + z1*z4", R4)
    assert len(p) == 2
    assert parse_polynomial("0", R4).terms == {}
    x, y = xy.gens()
    assert parse_polynomial("(x+y)^2", xy) == x * x + 2 * x * y + y * y
    assert parse_polynomial("  3 / 4 * x ^ 2 - i*y", xy) == x * x * Fraction(3, 4) - y * G(0, 1)


@pytest.mark.parametrize("text, pos", [("x + q", 4), ("x + * y", 4), ("(x + y", 6), ("x ^ y", 4), ("", 0),
                                       ("x $ y", 2), ("1/0", 2)])
def test_parse_errors_carry_position(xy, text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, xy)
    assert info.value.pos == pos


def test_unknown_identifier_message(xy):
    with pytest.raises(ParseError, match="unknown identifier 'z'"):
        parse_polynomial("x*z", xy)


def test_coefficient_parsing():
    assert parse_coefficient("-1/2") == Fraction(-1, 2)
    assert parse_coefficient("3*i") == G(0, 3)
    assert parse_coefficient("(1/2 - i)") == G(Fraction(1, 2), -1)


def test_list_parsing_and_inference():
    ring = infer_ring("[z10, z2*z1]")
    assert ring.names == ("z1", "z2", "z10")
    assert len(parse_polynomial_list("[x^2, (x+y)*(x-y), y]", infer_ring("x y"))) == 3


def test_poly_arith(xy, R4):
    x, y = xy.gens()
    assert (x + y) * (x - y) == x * x - y * y
    p = x * 3 + y * G(0, 2)
    assert (p + (-p)).terms == {}
    z1, z2, z3, z4 = R4.gens()
    # term-by-term: z2^2*z3 + z2*z4*z3
    assert (z2 * z2 + z2 * z4) * z3 == Polynomial(R4, {(0, 2, 1, 0): 1, (0, 1, 1, 1): 1})


def test_ring_mismatch(xy, R4):
    with pytest.raises(RingMismatchError):
        xy.gens()[0] + R4.gens()[0]


def test_leading_term_examples():
    ring = RingContext.standard(3)
    z1, z2, z3 = ring.gens()
    assert leading_term(z1 + z2, LEX) == ((1, 0, 0), 1)
    # grevlex: equal degree; compare last variable, smaller exponent wins -> z1*z2^2
    assert leading_term(z1 * z2 * z2 + z1 * z1 * z3, GREVLEX) == ((1, 2, 0), 1)
    q = z3 * z3
    for order in (LEX, GREVLEX, block_order(1)):
        assert leading_term(q, order) == ((0, 0, 2), 1)
    with pytest.raises(ZeroPolynomialError):
        leading_term(Polynomial.zero(ring))
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero(ring).degree()


def test_block_order_eliminates_first_block():
    order = block_order(1)
    # t * z2 beats any monomial free of t, however large
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))


def test_monomials_of_degree_examples(xy, R4):
    assert monomials_of_degree(xy, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_of_degree(R4, 1) == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert len(monomials_of_degree(R4, 3)) == 20


def test_monomial_counts_exhaustive():
    for n in range(1, 7):
        ring = RingContext.standard(n)
        for d in range(9):
            monos = monomials_of_degree(ring, d)
            assert len(monos) == comb(n + d - 1, d)
            assert len(set(monos)) == len(monos)
            keys = [GREVLEX.key(e) for e in monos]
            assert keys == sorted(keys, reverse=True)


def test_coefficient_vector_examples(R4, xy):
    v = coefficient_vector(parse_polynomial("z2*z3 + z1*z4", R4), 2)
    assert sorted(v, key=lambda c: c.re) == [0] * 8 + [1, 1]
    assert all(c == 0 for c in coefficient_vector(Polynomial.zero(R4), 2))
    v = coefficient_vector(parse_polynomial("3*x^2 - 1/2*y^2", xy), 2)
    assert v == [3, 0, Fraction(-1, 2)]
    with pytest.raises(NonHomogeneousError):
        coefficient_vector(parse_polynomial("x^2 + y", xy), 2)


R3 = RingContext.standard(3)
coef = st.integers(-3, 3).flatmap(lambda a: st.integers(-2, 2).map(lambda b: G(Fraction(a, 2), b)))
exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, coef, max_size=5).map(lambda t: Polynomial(R3, t))


def _homog(d):
    monos = monomials_of_degree(R3, d)
    return st.dictionaries(st.sampled_from(monos), coef, max_size=6).map(lambda t: Polynomial(R3, t))


@settings(max_examples=60)
@given(polys)
def test_parse_render_roundtrip(p):
    assert parse_polynomial(str(p), R3) == p
    assert str(parse_polynomial(str(p), R3)) == str(p)


@settings(max_examples=60)
@given(polys, polys)
def test_leading_term_multiplicative(p, q):
    if not p or not q:
        return
    for order in (LEX, GREVLEX, block_order(1), block_order(2)):
        ep, cp = p.leading_term(order)
        eq, cq = q.leading_term(order)
        assert (p * q).leading_term(order) == (tuple(a + b for a, b in zip(ep, eq)), cp * cq)


@settings(max_examples=40)
@given(polys, polys)
def test_degree_of_product(p, q):
    if p and q:
        assert (p * q).degree() == p.degree() + q.degree()
    assert p * q == q * p
    assert (p + q) - q == p


@settings(max_examples=40)
@given(_homog(2), _homog(2))
def test_coefficient_vector_linear(p, q):
    assert coefficient_vector(p + q, 2) == [a + b for a, b in zip(coefficient_vector(p, 2), coefficient_vector(q, 2))]


def test_orders_are_total_and_multiplicative():
    monos = [e for d in range(4) for e in monomials_of_degree(R3, d)]
    for order in (LEX, GREVLEX, block_order(1)):
        keys = {order.key(e) for e in monos}
        assert len(keys) == len(monos)
        one = (0, 0, 0)
        assert all(order.key(one) <= order.key(e) for e in monos)
        for u, v, w in product(monos[:10], monos[:10], monos[:6]):
            if order.key(u) < order.key(v):
                uw = tuple(a + b for a, b in zip(u, w))
                vw = tuple(a + b for a, b in zip(v, w))
                assert order.key(uw) < order.key(vw)
