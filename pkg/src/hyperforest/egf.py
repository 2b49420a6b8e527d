"""Exponential-generating-function route to the same forest counts.

Nothing here touches the closed forms in :mod:`forest_counts`: the rooted tree
series is solved from its functional equation and forests are read off
``exp(t T)`` and ``exp(lam U)`` directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import TruncatedSeries, UniPoly, series_compose, series_exp
from .weights import RootedTable, UnrootedTable, WeightSpec

__all__ = [
    "branch_series",
    "tree_series",
    "tree_series_lagrange",
    "lagrange_power_coeff",
    "unrooted_series",
    "unrooted_series_integral",
    "forest_coeffs_via_egf",
]


def branch_series(w: WeightSpec, order: int) -> TruncatedSeries:
    """``phi(y) = sum_k w_k y^(k-1) / (k-1)!`` so that ``T = z exp(phi(T))``."""
    cs = [Fraction(0)] * (order + 1)
    for k, wk in w.items(order + 1):
        cs[k - 1] += wk / factorial(k - 1)
    return TruncatedSeries(cs, order)


def tree_series(w: WeightSpec, order: int) -> TruncatedSeries:
    """Rooted hypertree EGF ``T(z)`` by fixed-point iteration of ``T = z exp(phi(T))``.

    Starting from ``T = 0`` every pass fixes one more coefficient, so ``order``
    passes give ``T`` exactly through ``z**order``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    phi = branch_series(w, order)
    t = TruncatedSeries([0], order)
    for _ in range(order):
        t = series_exp(series_compose(phi, t)).shift(1).truncate(order)
    return t


def _theta_power_coeff(w: WeightSpec, power: int, degree: int) -> Fraction:
    # [y^degree] exp(phi(y))^power = [y^degree] exp(power * phi(y))
    if degree < 0:
        return Fraction(0)
    theta_n = series_exp(branch_series(w, max(degree, 1)) * power)
    return theta_n[degree]


def lagrange_power_coeff(w: WeightSpec, n: int, r: int) -> Fraction:
    """``[z^n] T(z)^r = (r/n) [y^(n-r)] theta(y)^n`` with ``theta = exp(phi)``."""
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    return Fraction(r, n) * _theta_power_coeff(w, n, n - r)


def tree_series_lagrange(w: WeightSpec, order: int) -> TruncatedSeries:
    """``T(z)`` again, coefficient by coefficient from Lagrange inversion."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return TruncatedSeries(
        [0] + [lagrange_power_coeff(w, n, 1) for n in range(1, order + 1)], order
    )


def unrooted_series(w: WeightSpec, order: int) -> TruncatedSeries:
    """Unrooted hypertree EGF ``U = K(T)`` with ``K(y) = y + sum_k w_k (1-k) y^k / k!``."""
    t = tree_series(w, order)
    k_cs = [Fraction(0)] * (order + 1)
    k_cs[1] = Fraction(1)
    for k, wk in w.items(order):
        k_cs[k] += wk * (1 - k) / factorial(k)
    return series_compose(TruncatedSeries(k_cs, order), t)


def unrooted_series_integral(w: WeightSpec, order: int) -> TruncatedSeries:
    """``U(z) = int_0^z T(s)/s ds``, the other definition of the same series."""
    return tree_series(w, order).shift(-1).integral()


def forest_coeffs_via_egf(n: int, w: WeightSpec) -> tuple[RootedTable, UnrootedTable]:
    """``t_{n,r} = n! [z^n][t^r] exp(t T)`` and ``u_{n,p} = n! [z^n][lam^p] exp(lam U)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return RootedTable(0, [1]), UnrootedTable(0, [1])
    t_series = tree_series(w, n)
    u_series = unrooted_series(w, n)

    def _coeffs(series, var):
        lifted = TruncatedSeries([UniPoly([0, c], var) for c in series], n)
        top = series_exp(lifted)[n] * factorial(n)
        top = top if isinstance(top, UniPoly) else UniPoly([top], var)
        return [top[i] for i in range(n + 1)]

    return RootedTable(n, _coeffs(t_series, "t")), UnrootedTable(n, _coeffs(u_series, "λ"))
