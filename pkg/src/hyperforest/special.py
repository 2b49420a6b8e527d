"""Stirling numbers, Bell polynomials, generalized Hermite and associated Laguerre polynomials."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .exact import UniPoly

__all__ = [
    "stirling2",
    "stirling2_row",
    "bell_poly",
    "bell_number",
    "gen_hermite",
    "hermite_he",
    "genbinom",
    "assoc_laguerre",
]

# Rows of the Stirling triangle, row n holds {n, k} for k = 0..n.
_stirling_rows: list[tuple[int, ...]] = [(1,)]
_stirling_lock = threading.Lock()


def stirling2_row(n: int) -> tuple[int, ...]:
    """Row ``({n,0}, ..., {n,n})`` of Stirling numbers of the second kind."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                prev = _stirling_rows[-1]
                m = len(prev)
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
                _stirling_rows.append(tuple(row))
    return _stirling_rows[n]


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > n:
        return 0
    return stirling2_row(n)[k]


def bell_poly(n: int, var: str = "x") -> UniPoly:
    """Bell (exponential) polynomial ``b_n(x) = sum_k {n,k} x^k``."""
    return UniPoly(stirling2_row(n), var)


def bell_number(n: int) -> int:
    return sum(stirling2_row(n))


def gen_hermite(s: int, k: int, var: str = "x") -> UniPoly:
    """``H_s^(k)``: coefficient of ``z^s/s!`` in ``exp(x z + (1-k) z^k / k!)``.

    Evaluated from the finite sum over q of
    ``((1-k)/k!)^q / q! * s!/(s-kq)! * x^(s-kq)``.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    if k < 2:
        raise ValueError("k must be >= 2")
    c = Fraction(1 - k, factorial(k))
    coeffs = [Fraction(0)] * (s + 1)
    for q in range(s // k + 1):
        coeffs[s - k * q] = c**q / factorial(q) * (factorial(s) // factorial(s - k * q))
    return UniPoly(coeffs, var)


def hermite_he(s: int, var: str = "x") -> UniPoly:
    """Probabilists' Hermite polynomial via ``He_{s+1} = x He_s - s He_{s-1}``."""
    x = UniPoly.variable(var)
    prev, cur = UniPoly([1], var), x
    if s == 0:
        return prev
    for m in range(1, s):
        prev, cur = cur, x * cur - m * prev
    return cur


def genbinom(a, j: int) -> Fraction:
    """Binomial ``a(a-1)...(a-j+1)/j!`` for any exact rational ``a``; zero for ``j < 0``."""
    if j < 0:
        return Fraction(0)
    a = Fraction(a)
    num = Fraction(1)
    for i in range(j):
        num *= a - i
    return num / factorial(j)


def assoc_laguerre(m: int, alpha, x) -> Fraction:
    """Associated Laguerre polynomial ``L_m^(alpha)(x)`` from its finite sum definition.

    ``alpha`` may be any rational, including negative integers.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    top = Fraction(alpha) + m
    x = Fraction(x)
    total = Fraction(0)
    xp = Fraction(1)
    for nu in range(m + 1):
        if nu:
            xp *= -x
        total += genbinom(top, m - nu) * xp / factorial(nu)
    return total
