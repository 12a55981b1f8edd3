from math import gcd, prod

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import naive_sigma, trial_is_prime
from oddperfect.arithmetic import (
    Factorization,
    factorize,
    is_perfect,
    is_prime,
    primes_below,
    sigma,
    sigma_prime_power,
)


@pytest.mark.parametrize("n, expected", [(2, True), (1, False), (49, False), (0, False), (3, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(20000) if is_prime(n)] == [n for n in range(20000) if trial_is_prime(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**64 - 59, True),  # largest 64-bit prime
        (2**64 - 1, False),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases 2..23
        (318665857834031151167461, False),  # strong pseudoprime to bases 2..37
    ],
)
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


def test_primes_below():
    assert primes_below(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_below(2) == []
    assert len(primes_below(10**5)) == 9592


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, ()),
        (45, ((3, 2), (5, 1))),
        (33550336, ((2, 12), (8191, 1))),
    ],
)
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


def test_factorize_zero_raises():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_large_semiprime():
    p, q = 1000003, 999999000001
    assert factorize(p * q).factors == ((p, 1), (q, 1))
    f = factorize((2**31 - 1) ** 2 * 3)
    assert f.factors == ((3, 1), (2**31 - 1, 2))


def test_reconstruction_exhaustive_small():
    for n in range(1, 20001):
        f = factorize(n)
        assert f.value == n
        assert all(is_prime(p) for p, _ in f)


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=1, max_value=10**12))
def test_factorize_is_canonical(n):
    f = factorize(n)
    assert f.value == n
    primes = [p for p, _ in f]
    assert primes == sorted(set(primes))
    assert all(is_prime(p) and e >= 1 for p, e in f)


def test_factorization_rejects_noncanonical():
    with pytest.raises(ValueError):
        Factorization(((5, 1), (3, 2)))
    with pytest.raises(ValueError):
        Factorization(((3, 0),))


@pytest.mark.parametrize("p, alpha, expected", [(2, 1, 3), (13, 5, 402234), (5, 1, 6)])
def test_sigma_prime_power_examples(p, alpha, expected):
    assert sigma_prime_power(p, alpha) == expected


def test_sigma_prime_power_matches_direct_sum():
    for p in (2, 3, 13, 997):
        for alpha in range(1, 30):
            assert sigma_prime_power(p, alpha) == sum(p**i for i in range(alpha + 1))


def test_sigma_prime_power_rejects_composite():
    with pytest.raises(ValueError):
        sigma_prime_power(9, 1)


@pytest.mark.parametrize("n, expected", [(6, 12), (28, 56), (45, 78), (1, 1)])
def test_sigma_examples(n, expected):
    assert sigma(factorize(n)) == expected


@pytest.mark.parametrize("n, expected", [(6, True), (12, False), (8128, True), (1, False), (496, True)])
def test_is_perfect(n, expected):
    assert is_perfect(n) is expected


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_multiplicative(a, b):
    assume(gcd(a, b) == 1)
    assert sigma(factorize(a * b)) == sigma(factorize(a)) * sigma(factorize(b))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**7))
def test_sigma_matches_naive(n):
    assert sigma(factorize(n)) == naive_sigma(n)


def test_p_plus_one_divides_small():
    for p in primes_below(1000):
        for alpha in range(1, 14, 2):
            assert sigma_prime_power(p, alpha) % (p + 1) == 0


def test_sigma_of_product_of_factorization():
    f = factorize(2**5 * 3**3 * 7)
    assert sigma(f) == prod(sum(p**i for i in range(e + 1)) for p, e in f)
