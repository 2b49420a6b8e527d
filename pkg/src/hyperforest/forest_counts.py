"""Closed-form weights of rooted and unrooted hyperforests on the complete hypergraph.

Notation follows the usual one for this problem: ``P_s(x; w)`` generates the
rooted counts through ``t_{n,r} = C(n-1, r-1) P_{n-r}(n; w)``, and the monic
polynomials ``Pi_s(lam; w)`` turn rooted counts into unrooted ones via
``u_{n,p} = sum_s pi_{s,p} t_{n,s}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import TruncatedSeries, UniPoly, series_exp
from .special import assoc_laguerre, stirling2
from .weights import RootedTable, UnrootedTable, WeightSpec

__all__ = [
    "p_poly",
    "p_poly_uniform",
    "rooted_counts",
    "rooted_total",
    "rooted_uniform",
    "pi_poly",
    "unrooted_counts",
    "unrooted_total",
    "unrooted_uniform_laguerre",
    "pi_allones_explicit",
    "rooted_polynomial",
    "unrooted_polynomial",
]


@lru_cache(maxsize=None)
def _p_polys(smax: int, w: WeightSpec) -> tuple[UniPoly, ...]:
    x = UniPoly.variable("x")
    polys = [UniPoly([1], "x")]
    for s in range(1, smax + 1):
        acc = UniPoly((), "x")
        for k, wk in w.items(s + 1):
            acc = acc + polys[s - k + 1] * (wk * comb(s - 1, k - 2))
        polys.append(x * acc)
    return tuple(polys)


def p_poly(s: int, w: WeightSpec) -> UniPoly:
    """``P_s(x; w)`` from ``P_s = x sum_k w_k C(s-1, k-2) P_{s-k+1}``, ``P_0 = 1``."""
    if s < 0:
        raise ValueError("s must be >= 0")
    return _p_polys(s, w)[s]


def p_poly_uniform(s: int, k: int) -> UniPoly:
    """Closed form of ``P_s(x; e_k)``: a single monomial, or zero off the lattice ``(k-1) | s``."""
    if s % (k - 1):
        return UniPoly((), "x")
    l = s // (k - 1)
    return UniPoly.monomial(l, Fraction(factorial(s), factorial(l) * factorial(k - 1) ** l))


def rooted_counts(n: int, w: WeightSpec) -> RootedTable:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return RootedTable(0, [1])
    polys = _p_polys(n, w)
    values = [Fraction(0)] + [comb(n - 1, r - 1) * polys[n - r](n) for r in range(1, n + 1)]
    return RootedTable(n, values)


def rooted_total(n: int, w: WeightSpec) -> Fraction:
    """``E_n(1; w)``, the total weight of rooted hyperforests on n labelled vertices."""
    return rooted_counts(n, w).total


def rooted_polynomial(n: int, w: WeightSpec) -> UniPoly:
    """``E_n(t; w) = sum_r t_{n,r} t^r``."""
    return rooted_counts(n, w).polynomial()


def rooted_uniform(n: int, r: int, k: int) -> int:
    """Rooted forests of the k-uniform complete hypergraph with r trees, counted directly."""
    if r < 1 or r > n or (n - r) % (k - 1):
        return 0
    l = (n - r) // (k - 1)
    groupings = factorial(n - r) // (factorial(l) * factorial(k - 1) ** l)
    return comb(n - 1, r - 1) * groupings * n**l


@lru_cache(maxsize=None)
def _pi_polys(smax: int, w: WeightSpec) -> tuple[UniPoly, ...]:
    # lam*K(y) with K(y) = y + sum_k w_k (1-k) y^k / k!, coefficients live in Q[lam]
    inner = [UniPoly((), "λ")] * (smax + 1)
    if smax >= 1:
        inner[1] = UniPoly([0, 1], "λ")
    for k, wk in w.items(smax):
        inner[k] = inner[k] + UniPoly([0, wk * (1 - k) / factorial(k)], "λ")
    e = series_exp(TruncatedSeries(inner, smax))
    polys = []
    for s, c in enumerate(e.egf_coeffs()):
        polys.append(c if isinstance(c, UniPoly) else UniPoly([c], "λ"))
    return tuple(polys)


def pi_poly(s: int, w: WeightSpec) -> UniPoly:
    """``Pi_s(lam; w) = s! [y^s] exp(lam K(y))``; monic of degree s."""
    if s < 0:
        raise ValueError("s must be >= 0")
    return _pi_polys(s, w)[s]


def unrooted_counts(n: int, w: WeightSpec) -> UnrootedTable:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return UnrootedTable(0, [1])
    t = rooted_counts(n, w)
    pis = _pi_polys(n, w)
    values = [Fraction(0)] * (n + 1)
    for s in range(1, n + 1):
        ts = t[s]
        if ts == 0:
            continue
        for p, c in enumerate(pis[s].coeffs):
            values[p] += c * ts
    return UnrootedTable(n, values)


def unrooted_polynomial(n: int, w: WeightSpec) -> UniPoly:
    """``F_n(lam; w) = sum_p u_{n,p} lam^p``."""
    return unrooted_counts(n, w).polynomial()


def unrooted_total(n: int, w: WeightSpec) -> Fraction:
    """``F_n(1; w) = sum_s Pi_s(1; w) t_{n,s}``."""
    if n == 0:
        return Fraction(1)
    t = rooted_counts(n, w)
    pis = _pi_polys(n, w)
    return sum((pis[s](1) * t[s] for s in range(1, n + 1)), Fraction(0))


def unrooted_uniform_laguerre(n: int, p: int, k: int) -> Fraction:
    """Unrooted forests with p trees on the k-uniform complete hypergraph, via Laguerre polynomials.

    Returns 0 when ``(k-1)`` does not divide ``n-p``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 1 <= p <= n:
        raise ValueError("need 1 <= p <= n")
    if (n - p) % (k - 1):
        return Fraction(0)
    v = (n - p) // (k - 1)
    alpha = v - p
    x = Fraction(k * n, k - 1)
    bracket = p * assoc_laguerre(p, alpha, x) + (n - p) * assoc_laguerre(p - 1, alpha, x)
    prefactor = (
        Fraction(factorial(n - 1), factorial(v))
        * Fraction(n, factorial(k - 1)) ** v
        * Fraction(-(k - 1), k * n) ** p
    )
    return prefactor * bracket


def pi_allones_explicit(s: int, p: int) -> Fraction:
    """``pi_{s,p}`` for all-ones weights as a finite alternating sum of Stirling numbers."""
    if s < 0 or p < 0:
        raise ValueError("s and p must be >= 0")
    total = 0
    for q in range(0, s - p + 1):
        m = s - p - q
        if m > p:
            continue
        total += (-1) ** m * comb(p, m) * stirling2(p + q, p) * (factorial(s) // factorial(p + q))
    return Fraction(total)
