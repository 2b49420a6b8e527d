"""Large-n approximations for k-uniform forest counts, evaluated in log space.

Exact values from :mod:`forest_counts` are big integers; they are compared
through :func:`log_abs`, which never converts a big integer to float directly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb, factorial, lgamma, log

__all__ = [
    "log_abs",
    "relative_error",
    "laguerre_expansion",
    "log_unrooted_uniform_asymptotic",
    "unrooted_uniform_asymptotic",
    "unrooted_uniform_asymptotic_exact",
    "log_unrooted_uniform_stirling",
    "log_partition_sum_approx",
    "partition_sum_approx",
    "log_partition_sum_approx_finite",
]

_MANTISSA_BITS = 64
_LOG2 = log(2.0)


def _log_int(m: int) -> float:
    b = m.bit_length()
    if b <= _MANTISSA_BITS:
        return log(m)
    shift = b - _MANTISSA_BITS
    return log(m >> shift) + shift * _LOG2


def log_abs(x) -> float:
    """Natural log of ``|x|`` for an int or Fraction of any size (bit length plus mantissa)."""
    x = Fraction(x)
    if x == 0:
        return -math.inf
    return _log_int(abs(x.numerator)) - _log_int(x.denominator)


def relative_error(exact, log_approx: float) -> float:
    """``approx/exact - 1`` with the approximation given by its logarithm."""
    return math.expm1(log_approx - log_abs(exact))


def laguerre_expansion(s: int, n: int, p: int, k: int) -> tuple[float, float]:
    """Leading two approximations of ``L_s^((n-p)/(k-1) - p)(k n/(k-1))`` for large n.

    Returns ``(a0, a0 * (1 + s[s+1+2k(p-s)] / (2n(k-1))))`` with ``a0 = (-n)^s / s!``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    a0 = float(Fraction((-n) ** s, factorial(s)))
    correction = Fraction(s * (s + 1 + 2 * k * (p - s)), 2 * n * (k - 1))
    return a0, a0 * float(1 + correction)


def _lattice(n, p, k):
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 1 <= p <= n:
        raise ValueError("need 1 <= p <= n")
    if (n - p) % (k - 1):
        raise ValueError(f"(k-1)={k - 1} does not divide n-p={n - p}")
    return (n - p) // (k - 1)


def unrooted_uniform_asymptotic_exact(n: int, p: int, k: int) -> Fraction:
    """Large-n form of ``u_{n,p}(e_k)`` as an exact rational.

    ``C(n-1,p-1) (n-p)!/v! n^(v-1) / ((k-1)!)^v ((k-1)/k)^(p-1)`` with
    ``v = (n-p)/(k-1)``; for ``p = 1`` it equals the exact count.
    """
    v = _lattice(n, p, k)
    return (
        comb(n - 1, p - 1)
        * Fraction(factorial(n - p), factorial(v))
        * Fraction(n) ** (v - 1)
        / factorial(k - 1) ** v
        * Fraction(k - 1, k) ** (p - 1)
    )


def log_unrooted_uniform_asymptotic(n: int, p: int, k: int) -> float:
    v = _lattice(n, p, k)
    return (
        lgamma(n) - lgamma(p) - lgamma(n - p + 1)
        + lgamma(n - p + 1) - lgamma(v + 1)
        + (v - 1) * log(n)
        - v * lgamma(k)
        + (p - 1) * log((k - 1) / k)
    )


def unrooted_uniform_asymptotic(n: int, p: int, k: int) -> float:
    """Float value of the large-n form; ``inf`` if it overflows."""
    try:
        return math.exp(log_unrooted_uniform_asymptotic(n, p, k))
    except OverflowError:
        return math.inf


def log_unrooted_uniform_stirling(n: int, p: int, k: int) -> float:
    """Log of the Stirling-simplified per-p form
    ``n^(n-2) e^(-n(k-2)/(k-1)) sqrt(k-1) / ((k-2)!)^((n-p)/(k-1)) / (p-1)! ((k-1)/k)^(p-1)``.
    """
    if k < 2 or p < 1:
        raise ValueError("need k >= 2 and p >= 1")
    return (
        (n - 2) * log(n)
        - n * (k - 2) / (k - 1)
        + 0.5 * log(k - 1)
        - (n - p) / (k - 1) * lgamma(k - 1)
        - lgamma(p)
        + (p - 1) * log((k - 1) / k)
    )


def log_partition_sum_approx(n: int, k: int, lam: float) -> float:
    """Log of the large-n approximation to ``sum_p u_{n,p}(e_k) lam^p``.

    ``n^(n-2) e^(-n(k-2)/(k-1)) sqrt(k-1) / ((k-2)!)^(n/(k-1)) lam exp(c lam)``
    with ``c = (k-1)/k ((k-2)!)^(1/(k-1))``; at k = 2 this is ``n^(n-2) lam e^(lam/2)``.
    No claim is made about the range of ``lam`` where it is accurate.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 2:
        raise ValueError("k must be >= 2")
    if lam <= 0:
        raise ValueError("lam must be positive for the log form")
    lf = lgamma(k - 1)
    c = (k - 1) / k * math.exp(lf / (k - 1))
    return (
        (n - 2) * log(n)
        - n * (k - 2) / (k - 1)
        + 0.5 * log(k - 1)
        - n / (k - 1) * lf
        + log(lam)
        + c * lam
    )


def log_partition_sum_approx_finite(n: int, lam: float) -> float:
    """k = 2 form before the limit: ``n^(n-2) lam (1 + lam/(2n))^(n-1)``."""
    if n < 2 or lam <= 0:
        raise ValueError("need n >= 2 and lam > 0")
    return (n - 2) * log(n) + log(lam) + (n - 1) * math.log1p(lam / (2 * n))


def partition_sum_approx(n: int, k: int, lam: float) -> float:
    try:
        return math.exp(log_partition_sum_approx(n, k, lam))
    except OverflowError:
        return math.inf
