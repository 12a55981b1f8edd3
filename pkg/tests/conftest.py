from math import isqrt

import pytest


def naive_sigma(n):
    """Sum of divisors by direct enumeration up to sqrt(n)."""
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
    return total


def trial_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


@pytest.fixture(scope="session")
def naive_sigma_table():
    """naive_sigma(n) for n < 10**5 via an additive sieve (index = n)."""
    limit = 10**5 + 1
    table = [0] * limit
    for d in range(1, limit):
        for m in range(d, limit, d):
            table[m] += d
    return table
