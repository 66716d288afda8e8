"""Exact integer primitives shared by every other module.

Python integers never wrap, so "checked" arithmetic here means bounding
results to the unsigned 128-bit range and raising :class:`NatOverflow`
outside it. Range scans catch that error, log it and move on.
"""
from __future__ import annotations

import math

import numpy as np

NAT_BITS = 128
NAT_MAX = (1 << NAT_BITS) - 1

# Deterministic Miller-Rabin for n < 3.3e24 (covers all 64-bit inputs).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NatOverflow(ArithmeticError):
    """A quantity left the 128-bit unsigned range."""


def check_nat(value: int) -> int:
    """Return ``value`` unchanged if it fits in a 128-bit unsigned integer."""
    if value < 0:
        raise NatOverflow(f"negative value {value} where a natural number is required")
    if value > NAT_MAX:
        raise NatOverflow(f"value needs {value.bit_length()} bits (limit {NAT_BITS})")
    return value


def check_signed(value: int) -> int:
    """Bound a signed intermediate by the same magnitude limit."""
    if abs(value) > NAT_MAX:
        raise NatOverflow(f"intermediate needs {abs(value).bit_length()} bits (limit {NAT_BITS})")
    return value


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    check_nat(a)
    check_nat(b)
    while b:
        a, b = b, a % b
    return a


def gcd3(a: int, b: int, c: int) -> int:
    return gcd(gcd(a, b), c)


def ceil_div(a: int, b: int) -> int:
    """Smallest n with n*b >= a, for a >= 0 and b > 0."""
    if b <= 0:
        raise ZeroDivisionError("ceil_div needs a positive divisor")
    check_nat(a)
    return -(-a // b)


def isqrt(n: int) -> int:
    """Largest s with s*s <= n.

    Newton iteration from a power-of-two overestimate; the iterates
    decrease monotonically until they cross the root, and a final
    downward correction guards the result.
    """
    check_nat(n)
    if n < 2:
        return n
    s = 1 << ((n.bit_length() + 1) // 2)
    while True:
        t = (s + n // s) >> 1
        if t >= s:
            break
        s = t
    while s * s > n:
        s -= 1
    return s


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    s = isqrt(n)
    return s * s == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return [int(q) for q in np.flatnonzero(sieve) if q >= lo]


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation; only used on small search parameters."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors_from_factors(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for q, e in factors.items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)
