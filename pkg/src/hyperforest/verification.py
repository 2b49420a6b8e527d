"""Cross-checks between the closed forms, the EGF route, the enumerator and the Grassmann engine.

Every check returns :class:`Check` records instead of raising, so callers can
report all of them and pick the first failure as the counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .egf import forest_coeffs_via_egf
from .exact import UniPoly
from .forest_counts import rooted_counts, unrooted_counts
from .grassmann import (
    GrassmannElement,
    berezin_integrate,
    diagonal_reduction_check,
    partition_function,
    rooted_correlator,
)
from .hypergraph import (
    DEFAULT_MAX_EDGES,
    Hypergraph,
    forest_polynomial,
    oracle_tables,
    rooted_forest_polynomial,
    rooted_weight,
)
from .weights import WeightSpec

__all__ = [
    "Check",
    "OEIS_REFERENCE",
    "oeis_sequence",
    "oeis_checks",
    "oracle_checks",
    "grassmann_checks",
    "scalar_product_checks",
    "top_power_identity",
    "polynomial_integral_identity",
    "root_insertion_identity",
    "source_term_identity",
    "random_poly",
]

# Reference prefixes, indexed from n = 1.
OEIS_REFERENCE = {
    "A001858": (1, 2, 7, 38, 291, 2932, 36961, 561948),
    "A030019": (1, 1, 4, 29, 311, 4447, 79745, 1722681),
}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def oeis_sequence(oeis_id: str, terms: int) -> list[Fraction]:
    """Our values for the supported OEIS ids, n = 1..terms."""
    if oeis_id == "A001858":
        from .forest_counts import unrooted_total

        return [unrooted_total(n, WeightSpec.uniform(2)) for n in range(1, terms + 1)]
    if oeis_id == "A030019":
        return [unrooted_counts(n, WeightSpec.ones())[1] for n in range(1, terms + 1)]
    raise ValueError(f"unsupported OEIS id {oeis_id!r}; known: {', '.join(OEIS_REFERENCE)}")


def oeis_checks(oeis_id: str, terms: int) -> list[Check]:
    ref = OEIS_REFERENCE.get(oeis_id)
    if ref is None:
        raise ValueError(f"unsupported OEIS id {oeis_id!r}; known: {', '.join(OEIS_REFERENCE)}")
    if not 1 <= terms <= len(ref):
        raise ValueError(f"{oeis_id}: between 1 and {len(ref)} reference terms are available")
    ours = oeis_sequence(oeis_id, terms)
    return [
        Check(f"{oeis_id}[n={n}]", ours[n - 1] == ref[n - 1], f"got {ours[n - 1]}, expected {ref[n - 1]}")
        for n in range(1, terms + 1)
    ]


def oracle_checks(n: int, w: WeightSpec, max_edges=DEFAULT_MAX_EDGES) -> list[Check]:
    """Closed forms vs EGF route vs enumeration, for every size 1..n."""
    out = []
    for m in range(1, n + 1):
        closed = (rooted_counts(m, w), unrooted_counts(m, w))
        via_egf = forest_coeffs_via_egf(m, w)
        brute = oracle_tables(Hypergraph.complete(m, w), max_edges=max_edges)
        for label, idx in (("rooted", 0), ("unrooted", 1)):
            out.append(
                Check(f"{label} n={m}: closed form = egf", closed[idx] == via_egf[idx],
                      f"{closed[idx]!r} vs {via_egf[idx]!r}")
            )
            out.append(
                Check(f"{label} n={m}: closed form = enumeration", closed[idx] == brute[idx],
                      f"{closed[idx]!r} vs {brute[idx]!r}")
            )
    return out


def grassmann_checks(G: Hypergraph, complete_w: WeightSpec | None = None, lam=None,
                     max_n=None, max_edges=DEFAULT_MAX_EDGES) -> list[Check]:
    """Grassmann integrals on ``G`` against enumeration (and closed forms if ``G`` is complete).

    ``lam=None`` keeps the component weight symbolic; otherwise polynomials are
    compared at that rational value.
    """
    n = G.n
    out = []
    sym_lam = UniPoly([0, 1], "λ")
    sym_t = UniPoly([0, 1], "t")

    def at(poly):
        return poly if lam is None else poly(lam)

    lam_val = sym_lam if lam is None else Fraction(lam)
    engine = partition_function(G, lam_val, lam_val, max_n=max_n)
    brute = at(forest_polynomial(G, max_edges))
    out.append(Check("unrooted: engine = enumeration", engine == brute, f"{engine} vs {brute}"))
    if complete_w is not None:
        closed = at(unrooted_counts(n, complete_w).polynomial())
        out.append(Check("unrooted: engine = closed form", engine == closed, f"{engine} vs {closed}"))

    engine_r = partition_function(G, 0, sym_t, max_n=max_n)
    brute_r = rooted_forest_polynomial(G, max_edges)
    out.append(Check("rooted: engine = enumeration", engine_r == brute_r, f"{engine_r} vs {brute_r}"))
    if complete_w is not None:
        closed_r = rooted_counts(n, complete_w).polynomial()
        out.append(Check("rooted: engine = closed form", engine_r == closed_r, f"{engine_r} vs {closed_r}"))

    for r in range(0, n + 1):
        roots = list(range(1, r + 1))
        corr = rooted_correlator(G, roots, max_n=max_n)
        want = rooted_weight(G, roots, max_edges)
        out.append(Check(f"correlator roots={roots}: engine = enumeration", corr == want, f"{corr} vs {want}"))
        if complete_w is not None and r >= 1:
            per_root = rooted_counts(n, complete_w)[r] / comb(n, r)
            out.append(Check(f"correlator roots={roots}: engine = t(n,r)/C(n,r)", corr == per_root,
                             f"{corr} vs {per_root}"))

    if complete_w is not None and n >= 1:
        out.append(Check("diagonal reduction", diagonal_reduction_check(n, complete_w, max_n=max_n)))
    return out


# Identities for integrals of functions of the scalar product (psibar, psi).


def random_poly(rng: random.Random, degree: int, zero_constant=False) -> list[Fraction]:
    cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1)]
    if zero_constant:
        cs[0] = Fraction(0)
    return cs


def _coeff(cs, i):
    return cs[i] if 0 <= i < len(cs) else Fraction(0)


def _poly_exp_coeffs(cs, order):
    from .exact import TruncatedSeries, series_exp

    return list(series_exp(TruncatedSeries(cs, order)).coeffs)


def top_power_identity(n: int, s: int) -> bool:
    """``int D_n S^s / s! == [s == n]``."""
    el = GrassmannElement.scalar_product(n) ** s / factorial(s)
    return berezin_integrate(el) == int(s == n)


def polynomial_integral_identity(n: int, g) -> bool:
    """``int D_n g(S) == n! [z^n] g``."""
    return berezin_integrate(GrassmannElement.of_scalar_product(n, g)) == factorial(n) * _coeff(g, n)


def root_insertion_identity(n: int, roots, g) -> bool:
    """Root insertions: ``int D_n prod_i (psibar psi)_i g(S)`` equals both
    ``(n-r)!/n! int D_n S^r g(S)`` and ``(n-r)! [z^(n-r)] g``."""
    r = len(roots)
    gs = GrassmannElement.of_scalar_product(n, g)
    ins = GrassmannElement.scalar(n, Fraction(1))
    for i in roots:
        ins = ins * GrassmannElement.pair(n, i)
    lhs = berezin_integrate(ins * gs)
    mid = Fraction(factorial(n - r), factorial(n)) * berezin_integrate(
        GrassmannElement.scalar_product(n) ** r * gs
    )
    rhs = factorial(n - r) * _coeff(g, n - r)
    return lhs == mid == rhs


def source_term_identity(n: int, r: int, h, g) -> bool:
    """``int S^r exp(h(S) + (psibar,J psi) g(S)) == int S^r exp(h(S)) (1 + S g(S))``; ``h(0) = 0``."""
    s = GrassmannElement.scalar_product(n)
    sr = s ** r
    hs = GrassmannElement.of_scalar_product(n, h)
    gs = GrassmannElement.of_scalar_product(n, g)
    jp = GrassmannElement.j_product(n)
    lhs = berezin_integrate(sr * (hs + jp * gs).exp())
    rhs = berezin_integrate(sr * hs.exp() * (s * gs + 1))
    # independent scalar route: n! [z^n] z^r e^{h(z)} (1 + z g(z))
    eh = _poly_exp_coeffs(h, n)
    one_zg = [Fraction(1)] + [_coeff(g, i - 1) for i in range(1, n + 1)]
    target = n - r
    scalar = sum((eh[i] * one_zg[target - i] for i in range(0, target + 1)), Fraction(0)) if target >= 0 else 0
    return lhs == rhs == factorial(n) * scalar


def scalar_product_checks(seed: int = 0, instances: int = 50, max_n: int = 5) -> list[Check]:
    """Randomized instances of the scalar-product integral identities."""
    rng = random.Random(seed)
    out = []
    for n in range(1, max_n + 1):
        for s in range(0, max_n + 2):
            out.append(Check(f"top_power_identity n={n} s={s}", top_power_identity(n, s)))
    for idx in range(instances):
        n = 1 + idx % max_n
        g = random_poly(rng, rng.randint(0, n))
        out.append(Check(f"polynomial_integral_identity #{idx} n={n}", polynomial_integral_identity(n, g), f"g={g}"))
        r = rng.randint(0, n)
        roots = sorted(rng.sample(range(1, n + 1), r))
        out.append(Check(f"root_insertion_identity #{idx} n={n} roots={roots}", root_insertion_identity(n, roots, g), f"g={g}"))
        h = random_poly(rng, rng.randint(1, n), zero_constant=True)
        g2 = random_poly(rng, rng.randint(0, n))
        r2 = rng.randint(0, n)
        out.append(Check(f"source_term_identity #{idx} n={n} r={r2}", source_term_identity(n, r2, h, g2), f"h={h} g={g2}"))
    return out
