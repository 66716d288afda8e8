"""The equation 4/p = 1/x + 1/y + 1/z over the positive integers.

Everything is evaluated with integers only; rational expressions are
compared by cross-multiplication.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .integer_kernel import (
    check_nat,
    check_signed,
    divisors_from_factors,
    factorize,
    gcd,
    is_prime,
)


class NoSolution(ValueError):
    """A recovery formula did not produce a valid solution."""


class SolutionClass(enum.Enum):
    TRIVIAL = "trivial"
    TYPE_I = "typeI"
    TYPE_II = "typeII"
    INVALID = "invalid"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class EscSolution:
    p: int
    x: int
    y: int
    z: int

    @property
    def xyz(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def _require_positive(*values: int) -> None:
    if any(v <= 0 for v in values):
        raise ValueError("arguments must be positive integers")


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def verify_identity(p: int, x: int, y: int, z: int) -> bool:
    """True iff 4xyz == p(yz + xz + xy)."""
    _require_positive(p, x, y, z)
    lhs = check_nat(4 * x * y * z)
    rhs = check_nat(p * (y * z + x * z + x * y))
    return lhs == rhs


def trivial_solutions(p: int) -> list[EscSolution]:
    """Closed-form solutions with x == y or y == z (p = 2 or p = 3 mod 4)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return [EscSolution(2, 1, 2, 2)]
    if p % 4 == 1:
        return []
    return [
        EscSolution(p, (p + 1) // 2, (p + 1) // 2, p * (p + 1) // 4),
        EscSolution(p, (p + 1) // 4, p * (p + 1) // 2, p * (p + 1) // 2),
    ]


def classify(sol: EscSolution) -> SolutionClass:
    p, x, y, z = sol.p, sol.x, sol.y, sol.z
    if min(p, x, y, z) <= 0 or not (x <= y <= z):
        return SolutionClass.INVALID
    if not verify_identity(p, x, y, z):
        return SolutionClass.INVALID
    if x == y or y == z:
        return SolutionClass.TRIVIAL
    return SolutionClass.TYPE_I if gcd(p, y) == 1 else SolutionClass.TYPE_II


def recover_z(p: int, x: int, y: int) -> int:
    """z from (p, x, y): xyp / (gcd(p,y) gcd(xy, x+y))."""
    _require_positive(p, x, y)
    if not x < y:
        raise ValueError("recover_z needs x < y")
    num = check_nat(x * y * p)
    den = gcd(p, y) * gcd(x * y, x + y)
    if num % den:
        raise NoSolution(f"non-integral z for p={p}, x={x}, y={y}")
    z = num // den
    if not verify_identity(p, x, y, z):
        raise NoSolution(f"z={z} does not satisfy the equation for p={p}, x={x}, y={y}")
    return z


def recover_y(p: int, x: int, z: int, assumed_gcd_py: int) -> int:
    """y from (p, x, z) under a hypothesis for gcd(p, y) (either 1 or p).

    The formula mentions y on its right-hand side through gcd(p, y), so the
    caller supplies that value and the result is checked against it.
    """
    _require_positive(p, x, z)
    if assumed_gcd_py not in (1, p):
        raise ValueError("assumed_gcd_py must be 1 or p")
    if not x < z:
        raise ValueError("recover_y needs x < z")
    num = check_nat(x * z * assumed_gcd_py)
    den = p * gcd(x * z, x + z)
    if num % den:
        raise NoSolution(f"non-integral y for p={p}, x={x}, z={z}")
    y = num // den
    if gcd(p, y) != assumed_gcd_py:
        raise NoSolution(f"y={y} contradicts gcd(p, y) = {assumed_gcd_py}")
    if not verify_identity(p, x, y, z):
        raise NoSolution(f"y={y} does not satisfy the equation for p={p}, x={x}, z={z}")
    return y


def recover_x(p: int, y: int, z: int) -> int:
    """x from (p, y, z): yz / (p gcd(yz, y+z))."""
    _require_positive(p, y, z)
    if not y < z:
        raise ValueError("recover_x needs y < z")
    num = check_nat(y * z)
    den = p * gcd(y * z, y + z)
    if num % den:
        raise NoSolution(f"non-integral x for p={p}, y={y}, z={z}")
    x = num // den
    if not verify_identity(p, x, y, z):
        raise NoSolution(f"x={x} does not satisfy the equation for p={p}, y={y}, z={z}")
    return x


def _leg_condition(p: int, u: int, v: int) -> Fraction:
    # 2(2uv/g) - p/(v-u) * (v^2 - u^2)/g, with g = gcd(uv, u+v)
    g = gcd(u * v, u + v)
    two_a = Fraction(check_nat(4 * u * v), g)
    rest = Fraction(check_signed(p * (v * v - u * u)), check_nat((v - u) * g))
    return two_a - rest


def check_eq5(p: int, x: int, y: int) -> tuple[tuple[int, int], bool]:
    """Necessary condition on (x, y): the leg expression equals gcd(p, y).

    Returns the exact value as ``(numerator, denominator)`` and whether it
    matches.
    """
    _require_positive(p, x, y)
    if not x < y:
        raise ValueError("check_eq5 needs x < y")
    value = _leg_condition(p, x, y)
    return (value.numerator, value.denominator), value == gcd(p, y)


def check_eq6(p: int, x: int, z: int, gcd_py: int) -> bool:
    """Necessary condition on (x, z): the leg expression equals p^2 / gcd(p, y)."""
    _require_positive(p, x, z)
    if not x < z:
        raise ValueError("check_eq6 needs x < z")
    if gcd_py not in (1, p):
        raise ValueError("gcd_py must be 1 or p")
    return _leg_condition(p, x, z) == Fraction(p * p, gcd_py)


def check_eq7(p: int, y: int, z: int) -> bool:
    """Necessary condition on (y, z): the leg expression equals p^2."""
    _require_positive(p, y, z)
    if not y < z:
        raise ValueError("check_eq7 needs y < z")
    return _leg_condition(p, y, z) == p * p


def x_range(p: int) -> range:
    """Admissible x for a solution with x <= y <= z.

    1/x < 4/p (the other two terms are positive) gives x > p/4, and
    4/p <= 3/x (x is the largest term) gives x <= 3p/4.
    """
    return range(p // 4 + 1, (3 * p) // 4 + 1)


def enumerate_nontrivial(p: int, use_numba: bool | None = None) -> list[EscSolution]:
    """Every solution with x < y < z, by exhaustive scan (the reference oracle).

    For each admissible x, 4/p - 1/x = a/n with a = 4x - p and n = px.
    Since y < z, 1/y < a/n <= 2/y, so y runs over (n/a, 2n/a] and each
    candidate is kept when z = ny / (ay - n) is an integer greater than y.
    """
    _require_odd_prime(p)
    xs = x_range(p)
    n_max = p * xs[-1]
    if kernels.fits_int64(2 * n_max * n_max):
        x_arr, y_arr = kernels.pair_scan(p, xs[0], xs[-1], use_numba=use_numba)
        pairs = zip(x_arr.tolist(), y_arr.tolist())
    else:
        pairs = _pair_scan_exact(p)
    out = []
    for x, y in pairs:
        n, a = p * x, 4 * x - p
        z = n * y // (a * y - n)
        if z > y:
            out.append(EscSolution(p, x, y, z))
    out.sort()
    return out


def _pair_scan_exact(p: int):
    # same scan in Python integers, for primes past the int64 kernels
    for x in x_range(p):
        a, n = 4 * x - p, p * x
        for y in range(max(x + 1, n // a + 1), (2 * n) // a + 1):
            if (n * y) % (a * y - n) == 0:
                yield x, y


def first_nontrivial(p: int) -> EscSolution | None:
    """Lexicographically smallest solution with x < y < z, or None.

    Writing a/n = 4/p - 1/x, the pairs y < z with 1/y + 1/z = a/n match the
    divisors d < n of n^2 with d = -n (mod a), via (ay - n)(az - n) = n^2.
    The smallest such d gives the smallest y for that x.
    """
    _require_odd_prime(p)
    for x in x_range(p):
        a, n = 4 * x - p, p * x
        factors = factorize(x)
        factors[p] = factors.get(p, 0) + 1
        square = {q: 2 * e for q, e in factors.items()}
        target = (-n) % a
        for d in divisors_from_factors(square):
            if d >= n:
                break
            if d % a != target:
                continue
            y = (n + d) // a
            if y <= x:
                continue
            num = n * y
            if num % d:
                continue
            z = num // d
            if not verify_identity(p, x, y, z):
                raise AssertionError(f"divisor construction gave a non-solution ({p}, {x}, {y}, {z})")
            return EscSolution(p, x, y, z)
    return None
