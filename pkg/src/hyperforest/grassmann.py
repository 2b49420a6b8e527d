"""Exact Berezin integration over pairs of anticommuting generators.

Each vertex ``i`` (1-based) carries ``psibar_i`` and ``psi_i``.  The canonical
generator order is ``psibar_1 < psi_1 < psibar_2 < psi_2 < ...``; a monomial is
stored as a bitmask (bit ``2(i-1)`` for ``psibar_i``, ``2(i-1)+1`` for ``psi_i``)
and stands for the product of its generators in canonical order.

Coefficients come from any exact commutative ring that supports ``+ - *``,
division by an int and ``== 0``: ``Fraction`` or :class:`UniPoly`.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import ResourceLimitError
from .hypergraph import Hypergraph
from .weights import WeightSpec

__all__ = [
    "GrassmannElement",
    "f_element",
    "berezin_integrate",
    "partition_function",
    "rooted_correlator",
    "diagonal_reduction_check",
    "edge_sum",
    "reduced_edge_sum",
    "vertex_cap",
    "DEFAULT_VERTEX_CAP",
    "TOP_SIGN",
]

DEFAULT_VERTEX_CAP = 6


def vertex_cap() -> int:
    """Vertex cap for the engine, ``HF_MAX_N`` from the environment if set."""
    raw = os.environ.get("HF_MAX_N")
    return int(raw) if raw else DEFAULT_VERTEX_CAP


def _check_cap(n, max_n):
    cap = vertex_cap() if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError("grassmann vertex", cap, n)


def _bar(i):
    return 1 << (2 * (i - 1))


def _psi(i):
    return 1 << (2 * (i - 1) + 1)


def _reorder_sign(a, b):
    """Sign of ``mono(a) * mono(b)`` relative to ``mono(a | b)`` (disjoint masks)."""
    swaps = 0
    while b:
        low = b & -b
        swaps += (a >> low.bit_length()).bit_count()
        b ^= low
    return -1 if swaps & 1 else 1


class GrassmannElement:
    """Immutable element of the exterior algebra on ``2n`` generators."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # constructors

    @classmethod
    def scalar(cls, n, c):
        return cls(n, {0: c})

    @classmethod
    def monomial(cls, n, masks, coeff=1):
        """Product of single generators (bit masks) in the order given."""
        acc, sign = 0, 1
        for g in masks:
            if acc & g:
                return cls(n)
            sign *= _reorder_sign(acc, g)
            acc |= g
        return cls(n, {acc: coeff if sign > 0 else -coeff})

    @classmethod
    def psibar(cls, n, i):
        return cls(n, {_bar(i): Fraction(1)})

    @classmethod
    def psi(cls, n, i):
        return cls(n, {_psi(i): Fraction(1)})

    @classmethod
    def pair(cls, n, i):
        """``psibar_i psi_i``."""
        return cls(n, {_bar(i) | _psi(i): Fraction(1)})

    @classmethod
    def tau(cls, n, A):
        """``prod_{i in A} psibar_i psi_i`` (the pairs are even, so order is immaterial)."""
        mask = 0
        for i in A:
            mask |= _bar(i) | _psi(i)
        return cls(n, {mask: Fraction(1)})

    @classmethod
    def scalar_product(cls, n):
        """``(psibar, psi) = sum_i psibar_i psi_i``."""
        return cls(n, {_bar(i) | _psi(i): Fraction(1) for i in range(1, n + 1)})

    @classmethod
    def j_product(cls, n):
        """``(psibar, J psi) = sum_{i,j} psibar_i psi_j``."""
        out = cls(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                out = out + cls.monomial(n, [_bar(i), _psi(j)], Fraction(1))
        return out

    @classmethod
    def of_scalar_product(cls, n, coeffs):
        """``g((psibar, psi))`` for the polynomial ``g(z) = sum_m coeffs[m] z^m``."""
        s = cls.scalar_product(n)
        acc = cls(n)
        power = cls.scalar(n, Fraction(1))
        for m, c in enumerate(coeffs):
            if m:
                power = power * s
            if c != 0:
                acc = acc + power * c
            if not power.terms:
                break
        return acc

    # structure

    @staticmethod
    def key_sets(mask):
        """Split a monomial mask into (psibar indices, psi indices), 1-based."""
        bars, psis = [], []
        bit = 0
        while mask:
            if mask & 1:
                (psis if bit & 1 else bars).append(bit // 2 + 1)
            mask >>= 1
            bit += 1
        return tuple(bars), tuple(psis)

    def is_even(self):
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def is_balanced(self):
        return all(len(b) == len(p) for b, p in map(self.key_sets, self.terms))

    def scalar_part(self):
        return self.terms.get(0, Fraction(0))

    def __len__(self):
        return len(self.terms)

    # arithmetic

    def _same_n(self, other):
        if other.n != self.n:
            raise ValueError(f"generator count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement.scalar(self.n, other)
        self._same_n(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return GrassmannElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            return GrassmannElement(self.n, {m: c * other for m, c in self.terms.items()})
        self._same_n(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                c = ca * cb
                if _reorder_sign(ma, mb) < 0:
                    c = -c
                key = ma | mb
                out[key] = out[key] + c if key in out else c
        return GrassmannElement(self.n, out)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __truediv__(self, c):
        return GrassmannElement(self.n, {m: v / c for m, v in self.terms.items()})

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = GrassmannElement.scalar(self.n, Fraction(1))
        for _ in range(e):
            out = out * self
            if not out.terms:
                break
        return out

    def exp(self):
        """``exp`` of a nilpotent even element, as the finite sum of ``X^m / m!``."""
        if self.scalar_part() != 0:
            raise ValueError("exp needs an element without scalar part")
        if not self.is_even():
            raise ValueError("exp is only defined here for even elements")
        result = GrassmannElement.scalar(self.n, Fraction(1))
        term = result
        m = 0
        while True:
            m += 1
            term = (term * self) / m
            if not term.terms:
                return result
            result = result + term

    def __eq__(self, other):
        if isinstance(other, GrassmannElement):
            return self.n == other.n and self.terms == other.terms
        return self == GrassmannElement.scalar(self.n, other)

    __hash__ = None

    def __repr__(self):
        parts = []
        for m in sorted(self.terms):
            bars, psis = self.key_sets(m)
            parts.append(f"{self.terms[m]}*[{bars}|{psis}]")
        return f"GrassmannElement(n={self.n}, " + " + ".join(parts) + ")"


def _full_mask(n):
    return (1 << (2 * n)) - 1


def _calibrate_top_sign():
    # Orientation making  int D_1 (psibar, psi) = 1,  so that the integral of
    # (psibar, psi)^n / n! is 1; the interleaved order keeps this n-independent.
    el = GrassmannElement.scalar_product(1)
    return int(1 / el.terms[_full_mask(1)])


TOP_SIGN = _calibrate_top_sign()


def berezin_integrate(el: GrassmannElement, n=None):
    """Coefficient of the top monomial (every psibar_i and psi_i), oriented by ``TOP_SIGN``."""
    n = el.n if n is None else n
    if n != el.n:
        raise ValueError(f"element lives on {el.n} vertices, not {n}")
    return el.terms.get(_full_mask(n), Fraction(0)) * TOP_SIGN


def f_element(n, A, lam) -> GrassmannElement:
    """``lam (1-|A|) tau_A + sum_i tau_{A-i} - sum_{i != j} psibar_i psi_j tau_{A-{i,j}}``."""
    A = sorted(set(A))
    if len(A) < 2:
        raise ValueError("hyperedges need at least 2 vertices")
    if A[0] < 1 or A[-1] > n:
        raise ValueError(f"hyperedge {A} not inside 1..{n}")
    out = GrassmannElement(n)
    if lam != 0:
        out = out + GrassmannElement.tau(n, A) * (lam * (1 - len(A)))
    for i in A:
        out = out + GrassmannElement.tau(n, [v for v in A if v != i])
    for i in A:
        for j in A:
            if i == j:
                continue
            rest = GrassmannElement.tau(n, [v for v in A if v not in (i, j)])
            hop = GrassmannElement.monomial(n, [_bar(i), _psi(j)], Fraction(1))
            out = out - hop * rest
    return out


def _edge_factor(G: Hypergraph, lam):
    acc = GrassmannElement.scalar(G.n, Fraction(1))
    for A, w in zip(G.edges, G.weights):
        if w == 0:
            continue
        acc = acc * (f_element(G.n, A, lam) * w).exp()
    return acc


def partition_function(G: Hypergraph, lam, t, max_n=None):
    """``int D_{V,t} exp(sum_A w_A f_A^(lam))`` with every vertex weight ``t_i = t``.

    ``lam = t`` gives the unrooted forest polynomial in ``lam``; ``lam = 0`` gives
    the rooted one in ``t``.
    """
    _check_cap(G.n, max_n)
    integrand = _edge_factor(G, lam)
    for i in range(1, G.n + 1):
        integrand = integrand * (GrassmannElement.pair(G.n, i) * t + 1)
    return berezin_integrate(integrand)


def rooted_correlator(G: Hypergraph, roots, max_n=None):
    """``int D_V (psibar psi)_{i_1} ... (psibar psi)_{i_r} exp(sum_A w_A f_A^(0))``."""
    _check_cap(G.n, max_n)
    integrand = _edge_factor(G, 0)
    for i in roots:
        if not 1 <= i <= G.n:
            raise ValueError(f"root {i} not inside 1..{G.n}")
        integrand = GrassmannElement.pair(G.n, i) * integrand
    return berezin_integrate(integrand)


def edge_sum(n, w: WeightSpec) -> GrassmannElement:
    """``sum_A w_{|A|} f_A^(0)`` over every hyperedge of the complete hypergraph on n vertices."""
    out = GrassmannElement(n)
    for k, wk in w.items(n):
        for A in combinations(range(1, n + 1), k):
            out = out + f_element(n, A, 0) * wk
    return out


def reduced_edge_sum(n, w: WeightSpec) -> GrassmannElement:
    """``sum_k w_k [ n S^(k-1)/(k-1)! - (psibar, J psi) S^(k-2)/(k-2)! ]`` with ``S = (psibar, psi)``."""
    s = GrassmannElement.scalar_product(n)
    jp = GrassmannElement.j_product(n)
    out = GrassmannElement(n)
    for k, wk in w.items(n):
        out = out + (s ** (k - 1)) * Fraction(n * wk, factorial(k - 1))
        out = out - jp * (s ** (k - 2)) * Fraction(wk, factorial(k - 2))
    return out


def diagonal_reduction_check(n, w: WeightSpec, max_n=None) -> bool:
    """Check the scalar-product reduction of the complete-hypergraph integrand.

    Two things must hold: the edge sum equals its ``(psibar, J psi)`` form
    element by element, and for a symbolic vertex weight ``t``
    ``int e^{tS} exp(edge sum)`` equals
    ``int e^{tS} [1 - sum_k w_k S^(k-1)/(k-2)!] exp(n sum_k w_k S^(k-1)/(k-1)!)``.
    """
    from .exact import UniPoly

    _check_cap(n, max_n)
    full = edge_sum(n, w)
    if full != reduced_edge_sum(n, w):
        return False
    t = UniPoly([0, 1], "t")
    s = GrassmannElement.scalar_product(n)
    measure = (s * t).exp()
    lhs = berezin_integrate(measure * full.exp())
    linear = [Fraction(0)] * (n + 1)
    branch = [Fraction(0)] * (n + 1)
    for k, wk in w.items(n + 1):
        if k - 1 <= n:
            linear[k - 1] += Fraction(wk, factorial(k - 2))
            branch[k - 1] += Fraction(n * wk, factorial(k - 1))
    prefactor = GrassmannElement.scalar(n, Fraction(1)) - GrassmannElement.of_scalar_product(n, linear)
    rhs = berezin_integrate(measure * prefactor * GrassmannElement.of_scalar_product(n, branch).exp())
    return lhs == rhs
