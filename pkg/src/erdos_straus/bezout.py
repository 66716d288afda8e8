"""Bézout coefficient families and the square-discriminant search.

A non-trivial solution has x + y = m*b_k and x*y = m*c_k for some m >= 1
and a coprime family pair (b_k, c_k). Type I pairs satisfy
4c - pb = 1 = gcd(c, b); type II pairs satisfy 4c - pb = p = p*gcd(c, b).
The candidates x, y are the roots of T^2 - m b_k T + m c_k, which are
integers exactly when m^2 b_k^2 - 4 m c_k is a square.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import EscSolution, NoSolution, SolutionClass, classify, recover_z, verify_identity
from .integer_kernel import NatOverflow, ceil_div, check_nat, check_signed, gcd, is_perfect_square, is_prime, isqrt

log = logging.getLogger(__name__)


class FamilyKind(enum.Enum):
    TYPE_I = "typeI"
    TYPE_II = "typeII"

    def __str__(self) -> str:
        return self.value

    @property
    def solution_class(self) -> SolutionClass:
        return SolutionClass.TYPE_I if self is FamilyKind.TYPE_I else SolutionClass.TYPE_II


class NotSquare(ValueError):
    """The discriminant is negative or not a perfect square, or the roots are not integers."""


@dataclass(frozen=True)
class BezoutPair:
    k: int
    b: int
    c: int
    kind: FamilyKind
    coprime: bool


@dataclass(frozen=True)
class SearchCertificate:
    p: int
    m: int
    k: int
    kind: FamilyKind
    discriminant: int
    x: int
    y: int
    z: int

    @property
    def solution(self) -> EscSolution:
        return EscSolution(self.p, self.x, self.y, self.z)


def type1_b1(p: int) -> int:
    return 4 * ceil_div(p, 4) - p


def type1_family(p: int, k: int) -> BezoutPair:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    b1 = type1_b1(p)
    c1 = (b1 * p + 1) // 4
    b = 4 * (k - 1) + b1
    c = check_nat(p * (k - 1) + c1)
    return BezoutPair(k, b, c, FamilyKind.TYPE_I, gcd(b, c) == 1)


def type2_family(p: int, k: int) -> BezoutPair:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    b = 4 * k - 1
    c = check_nat(p * k)
    return BezoutPair(k, b, c, FamilyKind.TYPE_II, gcd(b, c) == 1)


def family(kind: FamilyKind, p: int, k: int) -> BezoutPair:
    return type1_family(p, k) if kind is FamilyKind.TYPE_I else type2_family(p, k)


def family_identity_check(pair: BezoutPair, p: int) -> bool:
    lhs = 4 * pair.c - p * pair.b
    g = gcd(pair.c, pair.b)
    return lhs == (g if pair.kind is FamilyKind.TYPE_I else p * g)


def discriminant(kind: FamilyKind, p: int, m: int, k: int) -> int:
    """The square-test polynomial in (m, k), written out per family.

    Signed: negative values simply mean "not a square".
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    if kind is FamilyKind.TYPE_I:
        b = 4 * k - (4 - 4 * ceil_div(p, 4) + p)
        return check_signed(m * m * b * b - p * m * b - m)
    return check_signed(m * m * (4 * k - 1) ** 2 - 4 * p * m * k)


def roots_if_square(m: int, pair: BezoutPair) -> tuple[int, int]:
    """Integer roots x <= y of T^2 - m b T + m c."""
    if m < 1:
        raise ValueError("m must be >= 1")
    s_sum = m * pair.b
    d = check_signed(s_sum * s_sum - 4 * m * pair.c)
    if d < 0:
        raise NotSquare(f"negative discriminant {d}")
    s = isqrt(d)
    if s * s != d:
        raise NotSquare(f"discriminant {d} is not a square")
    if (s_sum - s) % 2:
        raise NotSquare(f"roots ({s_sum} -/+ {s})/2 are not integers")
    return (s_sum - s) // 2, (s_sum + s) // 2


def _certify(p: int, kind: FamilyKind, pair: BezoutPair, m: int, x: int, y: int) -> SearchCertificate | None:
    if not 0 < x < y:
        return None
    try:
        z = recover_z(p, x, y)
    except NoSolution:
        return None
    sol = EscSolution(p, x, y, z)
    if classify(sol) is not kind.solution_class:
        return None
    d = (m * pair.b) ** 2 - 4 * m * pair.c
    return SearchCertificate(p, m, pair.k, kind, d, x, y, z)


def _family_arrays(kind: FamilyKind, p: int, k_max: int):
    ks = np.arange(1, k_max + 1, dtype=np.int64)
    if kind is FamilyKind.TYPE_I:
        b1 = type1_b1(p)
        b = 4 * (ks - 1) + b1
        c = p * (ks - 1) + (b1 * p + 1) // 4
    else:
        b = 4 * ks - 1
        c = p * ks
    return ks, b, c


def search_solutions(
    p: int, kind: FamilyKind, m_max: int, k_max: int, use_numba: bool | None = None
) -> list[SearchCertificate]:
    """Scan k <= k_max (outer) and m <= m_max (inner) for verified solutions.

    Only coprime family pairs are scanned. Type II rows drop out exactly when
    p divides 4k - 1 (for p = 3, whenever k = 1 mod 3).
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if m_max < 1 or k_max < 1:
        raise ValueError("bounds must be >= 1")

    b_max = 4 * k_max + 3
    c_max = p * (k_max + 1)
    if kernels.fits_int64(m_max * m_max * b_max * b_max, 4 * m_max * c_max):
        ks, b, c = _family_arrays(kind, p, k_max)
        coprime = np.gcd(b, c) == 1
        ks, b, c = ks[coprime], b[coprime], c[coprime]
        rows, ms, roots = kernels.discriminant_grid(b, c, m_max, use_numba=use_numba)
        cells = ((int(ks[i]), int(m), int(s)) for i, m, s in zip(rows, ms, roots))
    else:
        cells = _exact_cells(kind, p, m_max, k_max)

    out = []
    for k, m, s in cells:
        pair = family(kind, p, k)
        cert = _certify(p, kind, pair, m, (m * pair.b - s) // 2, (m * pair.b + s) // 2)
        if cert is not None:
            out.append(cert)
    return out


def _exact_cells(kind: FamilyKind, p: int, m_max: int, k_max: int):
    # arbitrary-size fallback for bounds beyond int64
    for k in range(1, k_max + 1):
        pair = family(kind, p, k)
        if not pair.coprime:
            continue
        for m in range(1, m_max + 1):
            try:
                x, y = roots_if_square(m, pair)
            except NotSquare:
                continue
            except NatOverflow as exc:
                log.warning("p=%d k=%d m=%d skipped: %s", p, k, m, exc)
                continue
            yield k, m, y - x


# --- reduced type II -----------------------------------------------------------
#
# For a type II solution put y* = y/p, z* = z/p and m = gcd(y*z*, y*+z*).
# Then y* + z* = m*b and y* z* = m*(b + p)/4 with b the type I b_k, and
# x = y* z* / m, which bounds k - 1 <= ceil(p/4).


def reduced_discriminant(p: int, m: int, k: int) -> int:
    b = type1_b1(p) + 4 * (k - 1)
    return check_signed(m * m * b * b - m * b - m * p)


def reduced_type2_check(p: int, m: int, k: int) -> tuple[int, int]:
    """Return (y*, z*) for the cell (m, k) when its discriminant is a square."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    if k - 1 > ceil_div(p, 4):
        raise ValueError(f"k - 1 = {k - 1} exceeds ceil(p/4) = {ceil_div(p, 4)}")
    b = type1_b1(p) + 4 * (k - 1)
    d = reduced_discriminant(p, m, k)
    if not is_perfect_square(d):
        raise NotSquare(f"reduced discriminant {d} is not a non-negative square")
    s = isqrt(d)
    if (m * b - s) % 2:
        raise NotSquare("reduced roots are not integers")
    y_star, z_star = (m * b - s) // 2, (m * b + s) // 2
    if y_star <= 0:
        raise NotSquare("reduced roots are not positive")
    return y_star, z_star


def lift_reduced(p: int, y_star: int, z_star: int) -> EscSolution:
    """Rebuild (x, y, z) from reduced roots and verify it."""
    g = gcd(y_star * z_star, y_star + z_star)
    x = y_star * z_star // g
    y, z = p * y_star, p * z_star
    if not (x < y < z and verify_identity(p, x, y, z)):
        raise NoSolution(f"reduced roots ({y_star}, {z_star}) do not lift to a solution for p={p}")
    return EscSolution(p, x, y, z)


def search_reduced(
    p: int, m_max: int, k_max: int | None = None, use_numba: bool | None = None
) -> list[SearchCertificate]:
    """Scan the reduced type II grid, 1 <= m <= m_max and 1 <= k <= ceil(p/4) + 1.

    ``k_max`` can only tighten the k range.

    The reduced discriminant is m^2 b^2 - 4m(b + p)/4, the same shape as the
    family discriminant, so the grid kernel does the square tests. Every hit
    is re-checked through :func:`reduced_type2_check` and lifted.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    k_top = ceil_div(p, 4) + 1
    if k_max is not None:
        k_top = min(k_top, k_max)
    if k_top < 1:
        return []
    ks = np.arange(1, k_top + 1, dtype=np.int64)
    b = type1_b1(p) + 4 * (ks - 1)
    c = (b + p) // 4
    if kernels.fits_int64(m_max * m_max * int(b[-1]) ** 2, 4 * m_max * int(c[-1])):
        rows, ms, _ = kernels.discriminant_grid(b, c, m_max, use_numba=use_numba)
        cells = [(int(ks[i]), int(m)) for i, m in zip(rows, ms)]
    else:
        cells = [(k, m) for k in range(1, k_top + 1) for m in range(1, m_max + 1)]

    out = []
    for k, m in cells:
        try:
            y_star, z_star = reduced_type2_check(p, m, k)
            sol = lift_reduced(p, y_star, z_star)
        except (NotSquare, NoSolution):
            continue
        out.append(SearchCertificate(p, m, k, FamilyKind.TYPE_II, reduced_discriminant(p, m, k), sol.x, sol.y, sol.z))
    return out
