import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idemring.errors import ModuliNotCoprime, NotCoprime, NotFactorable, NotSquarefree
from idemring.modarith import (
    Modulus,
    crt_combine,
    ext_gcd,
    factor_squarefree,
    is_prime,
    mod_inverse,
    mod_pow,
)

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def test_factor_105():
    assert factor_squarefree(105).primes == (3, 5, 7)


def test_factor_385():
    assert factor_squarefree(385).primes == (5, 7, 11)


def test_factor_rejects_square():
    with pytest.raises(NotSquarefree):
        factor_squarefree(4)
    with pytest.raises(NotSquarefree):
        factor_squarefree(12)


def test_factor_prime_cofactor_certified():
    # 2 * 1009: cofactor 1009 <= bound**2 even for a tiny bound
    assert factor_squarefree(2 * 1009, bound=40).primes == (2, 1009)


def test_factor_unresolved_cofactor():
    # 1009 * 1013 has no factor below 40 and exceeds 40**2
    with pytest.raises(NotFactorable):
        factor_squarefree(1009 * 1013, bound=40)


def test_modulus_validation():
    with pytest.raises(ValueError):
        Modulus(12, (3, 4))
    with pytest.raises(ValueError):
        Modulus(9, (3, 3))
    with pytest.raises(ValueError):
        Modulus(15, (3, 7))


def test_mod_pow_examples():
    assert mod_pow(35, 2, 105) == 70
    assert mod_pow(3, 24, 105) == 36
    assert mod_pow(123456, 0, 7) == 1


@settings(max_examples=200)
@given(st.integers(-10**6, 10**6), st.integers(0, 400), st.integers(0, 400), st.integers(2, 10**6))
def test_mod_pow_additive_exponents(a, k1, k2, n):
    assert mod_pow(a, k1 + k2, n) == mod_pow(a, k1, n) * mod_pow(a, k2, n) % n


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**6))
def test_fermat_little(p, a):
    if a % p != 0:
        assert mod_pow(a, p - 1, p) == 1


def test_ext_gcd_examples():
    g, s, t = ext_gcd(35, 11)
    assert g == 1 and 35 * s + 11 * t == 1
    assert ext_gcd(0, 5) == (5, 0, 1)
    assert ext_gcd(0, -5) == (5, 0, -1)
    assert ext_gcd(6, 4) == (2, 1, -1)


@settings(max_examples=300)
@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_ext_gcd_certificate(a, b):
    g, s, t = ext_gcd(a, b)
    assert g >= 0
    assert a * s + b * t == g
    if a or b:
        assert a % g == 0 and b % g == 0


def test_mod_inverse_examples():
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(35, 11) == 6
    with pytest.raises(NotCoprime):
        mod_inverse(5, 105)


@settings(max_examples=200)
@given(st.integers(-10**6, 10**6), st.integers(2, 10**5))
def test_mod_inverse_property(a, n):
    from math import gcd

    if gcd(a, n) == 1:
        assert mod_inverse(a, n) * a % n == 1
    else:
        with pytest.raises(NotCoprime):
            mod_inverse(a, n)


def test_crt_examples():
    assert crt_combine([(0, 3), (1, 5), (1, 7)]) == 36
    assert crt_combine([(0, 3), (0, 5), (1, 7)]) == 15
    assert crt_combine([(4, 9)]) == 4


def test_crt_rejects_common_factor():
    with pytest.raises(ModuliNotCoprime):
        crt_combine([(1, 6), (2, 4)])


@settings(max_examples=200)
@given(
    st.lists(st.sampled_from(SMALL_PRIMES), min_size=1, max_size=5, unique=True),
    st.data(),
)
def test_crt_round_trip(moduli, data):
    system = [(data.draw(st.integers(0, m - 1)), m) for m in moduli]
    x = crt_combine(system)
    total = 1
    for r, m in system:
        assert x % m == r
        total *= m
    assert 0 <= x < total


@given(st.integers(2, 2000))
def test_factor_recomposes(n):
    try:
        mod = factor_squarefree(n)
    except NotSquarefree:
        return
    prodval = 1
    for p in mod.primes:
        assert is_prime(p)
        prodval *= p
    assert prodval == n
