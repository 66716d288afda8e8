"""Pythagorean triples built from pairs of solution denominators.

For u < v and g = gcd(uv, u+v), the legs A = 2uv/g and B = (v^2 - u^2)/g
always complete to a Pythagorean triple. The pair (u, v) is (x, y) for the
first kind, (x, z) for the second and (y, z) for the third.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import EscSolution, verify_identity
from .integer_kernel import check_nat, gcd, gcd3, isqrt


class TripleKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"

    def __str__(self) -> str:
        return self.value


class InverseMapError(ValueError):
    """Base class for inverse-map failures."""


class DivisibilityError(InverseMapError):
    """A divisibility precondition of the inverse formulas failed."""


class VerificationError(InverseMapError):
    """The formulas produced integers that are not a valid ordered solution."""


@dataclass(frozen=True)
class PythTriple:
    A: int
    B: int
    C: int

    def __post_init__(self):
        if min(self.A, self.B, self.C) <= 0:
            raise ValueError("triple entries must be positive")
        if self.A * self.A + self.B * self.B != self.C * self.C:
            raise ValueError(f"{self.as_tuple()} is not a Pythagorean triple")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)


def legs_for(kind: TripleKind, sol: EscSolution) -> tuple[int, int]:
    if kind is TripleKind.FIRST:
        return sol.x, sol.y
    if kind is TripleKind.SECOND:
        return sol.x, sol.z
    return sol.y, sol.z


def forward(kind: TripleKind, u: int, v: int) -> PythTriple:
    if not 0 < u < v:
        raise ValueError("forward needs 0 < u < v")
    g = gcd(u * v, u + v)
    a = check_nat(2 * u * v) // g
    b = check_nat(v * v - u * u) // g
    c2 = check_nat(a * a + b * b)
    c = isqrt(c2)
    # (2uv)^2 + (v^2 - u^2)^2 = (u^2 + v^2)^2, and dividing by g keeps it exact.
    assert c * c == c2, f"{kind}: A^2 + B^2 is not square for u={u}, v={v}"
    return PythTriple(a, b, c)


def forward_solution(kind: TripleKind, sol: EscSolution) -> PythTriple:
    return forward(kind, *legs_for(kind, sol))


def _exact(num: int, den: int, what: str) -> int:
    if den <= 0 or num <= 0 or num % den:
        raise DivisibilityError(f"{what}: {num}/{den} is not a positive integer")
    return num // den


def _scale(p: int, two_a: int, target: int) -> int:
    # (2A - target) / p, which must be a positive integer
    diff = two_a - target
    if diff <= 0 or diff % p:
        raise DivisibilityError(f"p={p} does not divide 2A - {target} = {diff} positively")
    return diff // p


def _finish(p: int, x: int, y: int, z: int) -> tuple[int, int, int]:
    if not x < y < z:
        raise VerificationError(f"({x}, {y}, {z}) is not strictly increasing")
    if not verify_identity(p, x, y, z):
        raise VerificationError(f"({x}, {y}, {z}) does not solve the equation for p={p}")
    return x, y, z


def _check_gcd_py(p: int, gcd_py: int) -> None:
    if gcd_py not in (1, p):
        raise ValueError("gcd_py must be 1 or p")


def inverse_first(p: int, t: PythTriple, gcd_py: int) -> tuple[int, int, int]:
    _check_gcd_py(p, gcd_py)
    A, B, C = t.as_tuple()
    s = 2 * _scale(p, 2 * A, gcd_py)
    x = _exact(A - B + C, s, "x")
    y = _exact(A + B + C, s, "y")
    z = _exact(A * p, 2 * gcd_py, "z")
    return _finish(p, x, y, z)


def inverse_second(p: int, t: PythTriple, gcd_py: int) -> tuple[int, int, int]:
    _check_gcd_py(p, gcd_py)
    A, B, C = t.as_tuple()
    s = 2 * _scale(p, 2 * A, p * p // gcd_py)
    x = _exact(A - B + C, s, "x")
    y = _exact(A * gcd_py, 2 * p, "y")
    z = _exact(A + B + C, s, "z")
    return _finish(p, x, y, z)


def inverse_third(p: int, t: PythTriple) -> tuple[int, int, int]:
    A, B, C = t.as_tuple()
    s = 2 * _scale(p, 2 * A, p * p)
    x = _exact(A, 2 * p, "x")
    y = _exact(A - B + C, s, "y")
    z = _exact(A + B + C, s, "z")
    return _finish(p, x, y, z)


def inverse(kind: TripleKind, p: int, t: PythTriple, gcd_py: int) -> tuple[int, int, int]:
    """Dispatch to the inverse map for ``kind``; the third kind ignores ``gcd_py``."""
    if kind is TripleKind.FIRST:
        return inverse_first(p, t, gcd_py)
    if kind is TripleKind.SECOND:
        return inverse_second(p, t, gcd_py)
    return inverse_third(p, t)


def predicted_gcd_AB(kind: TripleKind, sol: EscSolution) -> int:
    """Closed form for gcd(A, B) of the triple of the given kind."""
    u, v = legs_for(kind, sol)
    base = gcd3(sol.x, sol.y, sol.z) * gcd(2, (v * v - u * u) // gcd(u, v) ** 2)
    if kind is TripleKind.THIRD:
        return gcd(sol.p, sol.y) * base
    return base
