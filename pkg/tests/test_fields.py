"""Field arithmetic: literals, canonical forms, axioms, inverses."""

import math
from fractions import Fraction

import pytest

from tetrig import (DivisionByZero, FieldElement, FieldSpec, InvalidFieldSpec,
                    MalformedLiteral, MixedFields, ZeroDenominator, invert,
                    parse_element, render)
from support import Q, rng

F7 = FieldSpec.prime(7)


def xgcd(a, b):
    """Extended Euclid; independent oracle for modular inverses."""
    old_r, r = a, b
    old_s, s = 1, 0
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    return old_r, old_s


# ---------------------------------------------------------------------------
# parsing and rendering
# ---------------------------------------------------------------------------

def test_parse_zero():
    e = parse_element("0", Q)
    assert e.is_zero
    assert (e.numerator, e.denominator) == (0, 1)
    assert render(e) == "0"


def test_parse_reduces_by_gcd():
    g = math.gcd(6, 4)
    e = parse_element("6/4", Q)
    assert (e.numerator, e.denominator) == (6 // g, 4 // g) == (3, 2)
    assert render(e) == "3/2"


def test_parse_reduces_mod_p():
    assert parse_element("-3", F7).residue == -3 % 7 == 4


@pytest.mark.parametrize("bad", ["", "1/", "/2", "a", "1.5", "+3", "1/-2", "--1", " 1"])
def test_parse_rejects_malformed_rational(bad):
    with pytest.raises(MalformedLiteral):
        parse_element(bad, Q)


def test_parse_rejects_fraction_over_prime_field():
    with pytest.raises(MalformedLiteral):
        parse_element("3/2", F7)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_element("3/0", Q)


def test_round_trip_is_identity():
    rnd = rng(1)
    for spec in (Q, F7, FieldSpec.prime(101)):
        for _ in range(200):
            x = spec.random_element(rnd)
            assert parse_element(render(x), spec) == x


# ---------------------------------------------------------------------------
# field spec validation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 1, 0, -7, 9, 15, 10001])
def test_invalid_moduli_rejected(p):
    with pytest.raises(InvalidFieldSpec):
        FieldSpec.prime(p)


def test_odd_primes_accepted():
    for p in (3, 7, 101, 10007):
        assert FieldSpec.prime(p).p == p


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------

def test_invert_one():
    for spec in (Q, F7):
        assert invert(spec.one()) == spec.one()


def test_invert_rational_is_reciprocal():
    e = parse_element("3/2", Q)
    assert invert(e) == parse_element("2/3", Q)


def test_invert_prime_matches_extended_euclid():
    g, x = xgcd(3, 7)
    assert g == 1
    expected = x % 7
    assert expected == 5 and 3 * expected % 7 == 1
    assert invert(F7.element(3)) == F7.element(expected)


def test_invert_property():
    rnd = rng(2)
    for spec in (Q, FieldSpec.prime(101)):
        for _ in range(100):
            x = spec.random_element(rnd)
            if x.is_zero:
                continue
            assert x * invert(x) == spec.one()


def test_invert_zero_raises():
    for spec in (Q, F7):
        with pytest.raises(DivisionByZero):
            invert(spec.zero())
        with pytest.raises(DivisionByZero):
            spec.one() / spec.zero()


# ---------------------------------------------------------------------------
# axioms and canonical form
# ---------------------------------------------------------------------------

def test_field_axioms_random_triples():
    rnd = rng(3)
    for spec in (Q, F7, FieldSpec.prime(10007)):
        for _ in range(150):
            a = spec.random_element(rnd)
            b = spec.random_element(rnd)
            c = spec.random_element(rnd)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == spec.zero()
            if not a.is_zero:
                assert a * a.inverse() == spec.one()


def test_fermat_inverse_exponent():
    rnd = rng(4)
    for p in (7, 101, 10007):
        spec = FieldSpec.prime(p)
        for _ in range(50):
            x = spec.random_element(rnd)
            if x.is_zero:
                continue
            assert x ** (p - 1) == spec.one()


def test_canonical_negative_denominator():
    e = Q.one() / Q.element(-2)
    assert e.denominator == 2 and e.numerator == -1
    assert render(e) == "-1/2"
    assert Q.element(Fraction(4, -6)) == parse_element("-2/3", Q)


def test_powers():
    x = parse_element("3/2", Q)
    assert x ** 0 == Q.one()
    assert x ** 3 == parse_element("27/8", Q)
    assert x ** -1 == invert(x)
    y = F7.element(3)
    assert y ** -2 == invert(y) * invert(y)


def test_int_coercion_in_arithmetic():
    x = parse_element("3/2", Q)
    assert x + 1 == parse_element("5/2", Q)
    assert 2 * x == Q.element(3)
    assert x / 3 == parse_element("1/2", Q)
    assert 1 - x == parse_element("-1/2", Q)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        Q.one() + F7.one()
    with pytest.raises(MixedFields):
        F7.one() * FieldSpec.prime(11).one()


def test_element_type_guards():
    with pytest.raises(TypeError):
        FieldElement(F7, Fraction(1, 2))
    with pytest.raises(TypeError):
        FieldElement(Q, "1/2")
