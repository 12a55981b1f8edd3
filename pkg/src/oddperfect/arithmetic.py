"""Exact integer arithmetic: primality, factorization and the divisor sum."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Iterator

# First 13 primes as Miller-Rabin witnesses; deterministic below this bound.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_BOUND = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Trial division bound before handing the cofactor to Pollard-Brent.
_TRIAL_LIMIT = 1 << 12


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition, primes strictly increasing."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"not a canonical factorization: {self.factors!r}")
            last = p

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Miller-Rabin with the first 13 prime witnesses is exact below
    3.3e24, which covers every 64-bit input. Larger inputs fall back to
    trial division up to sqrt(n), which is slow but never wrong.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 47 * 47:
        return True
    if n >= _MR_BOUND:
        return _trial_division_is_prime(n)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division_is_prime(n: int) -> bool:
    r = isqrt(n)
    d = 53
    while d <= r:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard-Brent failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Factor n >= 1 into a canonical Factorization; factorize(1) is empty."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    found: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    d = 5
    while d <= _TRIAL_LIMIT and d * d <= n:
        for q in (d, d + 2):
            while n % q == 0:
                found[q] = found.get(q, 0) + 1
                n //= q
        d += 6
    if n > 1:
        if d * d > n:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, found)
    return Factorization(tuple(sorted(found.items())))


def sigma_prime_power(p: int, alpha: int) -> int:
    """1 + p + ... + p**alpha, exactly."""
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return (p ** (alpha + 1) - 1) // (p - 1)


def sigma(f: Factorization) -> int:
    """Sum of divisors of the number f factors; sigma of the empty product is 1."""
    return prod(sigma_prime_power(p, e) for p, e in f)


def is_perfect(n: int) -> bool:
    if n < 1:
        raise ValueError(f"is_perfect needs n >= 1, got {n}")
    return sigma(factorize(n)) == 2 * n


def primes_below(limit: int) -> list[int]:
    """All primes p < limit, by a plain sieve of Eratosthenes."""
    if limit < 3:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return [i for i, flag in enumerate(sieve) if flag]
