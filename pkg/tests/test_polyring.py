import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from idemring.errors import ModulusMismatch, NotConstant, PolyParseError
from idemring.polyring import Poly, coeffs_divisible, divide_coeffs, parse_poly

N = 105


def P(*coeffs):
    return Poly(N, coeffs)


def test_normalization_drops_trailing_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert Poly(N, P(5, 7).coeffs) == P(5, 7)


def test_degree_sentinel():
    assert P().degree == float("-inf")
    assert P(3).degree == 0
    assert P(0, 0, 4).degree == 2
    assert P().degree < -10**9


def test_add_cancellation():
    # (x + 1) + (n-1)*x collapses to the constant 1
    assert P(1, 1) + P(0, N - 1) == P(1)
    assert P(3, 5) + P() == P(3, 5)


def test_add_example_mod_105():
    assert P(0, 70) + P(0, 70) == P(0, 35)


def test_mul_degree_collapse():
    assert P(0, 15) * P(0, 7) == P()
    assert P(9, 4, 1) * 1 == P(9, 4, 1)


def test_mul_small_expansion():
    assert P(1, 1) * P(1, 1) == P(1, 2, 1)


def test_scale_examples():
    assert 0 * P(3, 1, 4) == P()
    assert 15 * P(7, 1) == P(0, 15)


def test_sub_self_is_zero():
    a = P(10, 20, 30)
    assert (a - a).is_zero()
    assert (1 - P(0, 1)) == P(1, N - 1)


def test_const_value():
    assert P(36).const_value() == 36
    assert P().const_value() == 0
    with pytest.raises(NotConstant):
        P(1, 1).const_value()


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        Poly(105, (1,)) + Poly(385, (1,))
    with pytest.raises(ModulusMismatch):
        Poly(105, (1,)) * Poly(385, (1,))


def test_int_equality():
    assert P(36) == 36
    assert P(36) == 36 + N
    assert P(0, 1) != 1


def test_ring_axioms_bulk():
    rng = random.Random(42)

    def rand_poly():
        return Poly(N, [rng.randrange(N) for _ in range(rng.randint(0, 7))])

    for _ in range(10_000):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


poly_st = st.builds(
    lambda cs: Poly(N, cs), st.lists(st.integers(0, N - 1), max_size=7)
)


@given(poly_st, poly_st)
def test_degree_laws(a, b):
    assert (a + b).degree <= max(a.degree, b.degree)
    assert (a * b).degree <= a.degree + b.degree


@given(poly_st)
def test_render_parse_round_trip(a):
    assert parse_poly(N, a.render()) == a


def test_parse_grammar():
    assert parse_poly(N, " 3 +  2*x + x^2 ") == P(3, 2, 1)
    assert parse_poly(N, "x") == P(0, 1)
    assert parse_poly(N, "7x") == P(0, 7)
    assert parse_poly(N, "-x + 1") == P(1, N - 1)
    assert parse_poly(N, "x^3 + x^3") == P(0, 0, 0, 2)
    assert parse_poly(N, "0") == P()


def test_parse_rejects_garbage():
    for bad in ("", "x^", "3**x", "y + 1", "1 + + 2"):
        with pytest.raises(PolyParseError):
            parse_poly(N, bad)


def test_divisibility_helpers():
    a = P(0, 15, 30)
    assert coeffs_divisible(a, 15)
    assert not coeffs_divisible(a, 7)
    assert divide_coeffs(a, 15) == P(0, 1, 2)
    with pytest.raises(ValueError):
        divide_coeffs(P(1, 15), 15)
