"""Hot inner loops.

Each kernel exists twice: a scalar loop compiled with numba and a
vectorised numpy version. Both work in int64, so callers must stay inside
:data:`INT64_SAFE` (checked by :func:`fits_int64`) and use exact Python
arithmetic otherwise. ``USE_NUMBA`` picks which one the dispatchers call.
"""
from __future__ import annotations

import numpy as np

from ._jit import USE_NUMBA, optional_njit

# Largest magnitude any kernel intermediate may reach.
INT64_SAFE = 1 << 62

_CHUNK = 1 << 20


def fits_int64(*bounds: int) -> bool:
    return all(0 <= b < INT64_SAFE for b in bounds)


# --- unit-fraction pair scan -------------------------------------------------
#
# For each x in [x_lo, x_hi] put a = 4x - p and n = p*x, so that
# 4/p - 1/x = a/n. Then y works iff z = n*y / (a*y - n) is a positive
# integer, with y ranging over (n/a, 2n/a] and y > x.


@optional_njit(cache=True)
def _divides(num, den):
    # exact while num < 2**53: an integral quotient is representable, so
    # the rounded float quotient is that integer
    if num < 9007199254740992:
        q = np.int64(np.float64(num) / np.float64(den))
        return q * den == num
    return num % den == 0


@optional_njit(cache=True)
def _next_pair(n, a, y, y_hi):
    while y <= y_hi:
        if _divides(n * y, a * y - n):
            return y
        y += 1
    return -1


@optional_njit(cache=True)
def _grow(buf, count):
    out = np.empty(max(64, 2 * count), dtype=np.int64)
    out[:count] = buf[:count]
    return out


@optional_njit(cache=True)
def _pair_scan_loop(p, x_lo, x_hi):
    xs = np.empty(64, dtype=np.int64)
    ys = np.empty(64, dtype=np.int64)
    count = 0
    for x in range(x_lo, x_hi + 1):
        a = 4 * x - p
        if a <= 0:
            continue
        n = p * x
        y = max(x + 1, n // a + 1)
        y_hi = (2 * n) // a
        while True:
            y = _next_pair(n, a, y, y_hi)
            if y < 0:
                break
            if count == xs.shape[0]:
                xs = _grow(xs, count)
                ys = _grow(ys, count)
            xs[count] = x
            ys[count] = y
            count += 1
            y += 1
    return xs[:count], ys[:count]


def _pair_scan_numpy(p, x_lo, x_hi):
    xs, ys = [], []
    for x in range(max(x_lo, p // 4 + 1), x_hi + 1):
        a, n = 4 * x - p, p * x
        y_lo, y_hi = max(x + 1, n // a + 1), (2 * n) // a
        for start in range(y_lo, y_hi + 1, _CHUNK):
            y = np.arange(start, min(start + _CHUNK, y_hi + 1), dtype=np.int64)
            hit = y[(n * y) % (a * y - n) == 0]
            xs.append(np.full(hit.shape[0], x, dtype=np.int64))
            ys.append(hit)
    if not xs:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(xs), np.concatenate(ys)


def pair_scan(p: int, x_lo: int, x_hi: int, use_numba: bool | None = None):
    """``(x, y)`` arrays of every pair for which 4/p - 1/x - 1/y is a unit fraction.

    Pairs come out ordered by x, then y. Requires ``fits_int64(2 * (p*x_hi)**2)``.
    """
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba:
        return _pair_scan_loop(np.int64(p), np.int64(x_lo), np.int64(x_hi))
    return _pair_scan_numpy(p, x_lo, x_hi)


# --- discriminant grid -------------------------------------------------------
#
# For each row i with coefficients (b[i], c[i]) and each m in 1..m_max,
# D = m^2 b^2 - 4 m c. A hit is D >= 0 square with m*b - sqrt(D) even, so
# that T^2 - m b T + m c has integer roots. Rows are scanned in order, m
# ascending within a row.


# squares mod 64: cheap rejection before the square root
_SQ64 = np.zeros(64, dtype=np.bool_)
_SQ64[(np.arange(64) ** 2) % 64] = True


@optional_njit(cache=True)
def _isqrt64(d):
    s = np.int64(np.sqrt(np.float64(d)))
    while s * s > d:
        s -= 1
    while (s + 1) * (s + 1) <= d:
        s += 1
    return s


@optional_njit(cache=True)
def _next_square(b, c, m, m_max):
    # first m' >= m with a square discriminant and even m'b - sqrt(D); -1 if none
    bb = b * b
    c4 = 4 * c
    while m <= m_max:
        t = m * bb - c4
        if t >= 0:
            d = m * t
            if _SQ64[d & 63]:
                s = _isqrt64(d)
                if s * s == d and (m * b - s) % 2 == 0:
                    return m
        m += 1
    return -1


@optional_njit(cache=True)
def _disc_grid_loop(b, c, m_max):
    rows = np.empty(64, dtype=np.int64)
    ms = np.empty(64, dtype=np.int64)
    roots = np.empty(64, dtype=np.int64)
    count = 0
    for i in range(b.shape[0]):
        m = 1
        while True:
            m = _next_square(b[i], c[i], m, m_max)
            if m < 0:
                break
            if count == rows.shape[0]:
                rows = _grow(rows, count)
                ms = _grow(ms, count)
                roots = _grow(roots, count)
            rows[count] = i
            ms[count] = m
            roots[count] = _isqrt64(m * (m * b[i] * b[i] - 4 * c[i]))
            count += 1
            m += 1
    return rows[:count], ms[:count], roots[:count]


def _disc_grid_numpy(b, c, m_max):
    m = np.arange(1, m_max + 1, dtype=np.int64)
    rows, ms, roots = [], [], []
    for i in range(b.shape[0]):
        d = m * (m * (b[i] * b[i]) - 4 * c[i])
        ok = d >= 0
        mi, di = m[ok], d[ok]
        s = np.sqrt(di.astype(np.float64)).astype(np.int64)
        s -= s * s > di
        s += (s + 1) * (s + 1) <= di
        hit = (s * s == di) & ((mi * b[i] - s) % 2 == 0)
        if hit.any():
            rows.append(np.full(int(hit.sum()), i, dtype=np.int64))
            ms.append(mi[hit])
            roots.append(s[hit])
    if not rows:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    return np.concatenate(rows), np.concatenate(ms), np.concatenate(roots)


def discriminant_grid(b: np.ndarray, c: np.ndarray, m_max: int, use_numba: bool | None = None):
    """Return ``(row_index, m, sqrt_D)`` arrays for every square-discriminant cell."""
    if use_numba is None:
        use_numba = USE_NUMBA
    b = np.ascontiguousarray(b, dtype=np.int64)
    c = np.ascontiguousarray(c, dtype=np.int64)
    if use_numba:
        return _disc_grid_loop(b, c, np.int64(m_max))
    return _disc_grid_numpy(b, c, m_max)
