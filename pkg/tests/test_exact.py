from fractions import Fraction
from math import factorial, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperforest.egf import tree_series
from hyperforest.exact import (
    TruncatedSeries,
    UniPoly,
    poly_eval,
    series_compose,
    series_exp,
    series_reversion,
)
from hyperforest.special import bell_poly
from hyperforest.weights import WeightSpec

rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
coeff_lists = st.lists(rationals, max_size=6)


def series_strategy(order, zero_constant=False, unit_linear=False):
    def build(cs):
        if zero_constant:
            cs[0] = Fraction(0)
        if unit_linear and cs[1] == 0:
            cs[1] = Fraction(1)
        return TruncatedSeries(cs, order)

    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(build)


# poly_eval


def test_poly_eval_examples():
    assert poly_eval(UniPoly([0, 1, 1]), 3) == 12
    assert poly_eval(UniPoly(), 7) == 0
    assert poly_eval(bell_poly(2), 3) == 12


def test_zero_polynomial_has_degree_minus_one():
    assert UniPoly().degree == -1
    assert UniPoly([0, 0, 0]).degree == -1
    assert UniPoly([1, 2, 0, 0]).degree == 1


@given(coeff_lists)
def test_trailing_coefficient_nonzero(cs):
    p = UniPoly(cs)
    assert p.degree == len(p.coeffs) - 1
    if p.degree >= 0:
        assert p[p.degree] != 0


@given(coeff_lists, coeff_lists, rationals)
def test_evaluation_is_a_ring_homomorphism(a, b, v):
    p, q = UniPoly(a), UniPoly(b)
    assert poly_eval(p + q, v) == poly_eval(p, v) + poly_eval(q, v)
    assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
    assert poly_eval(p(q), v) == poly_eval(p, poly_eval(q, v))


@given(coeff_lists, rationals)
def test_results_stay_reduced_rationals(cs, v):
    r = poly_eval(UniPoly(cs), v)
    assert isinstance(r, Fraction)
    assert r.denominator > 0
    assert gcd(abs(r.numerator), r.denominator) == 1


@given(coeff_lists, coeff_lists)
def test_derivative_product_rule(a, b):
    p, q = UniPoly(a), UniPoly(b)
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_floats_rejected():
    with pytest.raises(TypeError):
        UniPoly([0.5])


# series_exp


def test_exp_of_z():
    e = series_exp(TruncatedSeries.z(3))
    assert list(e.coeffs) == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_exp_of_zero():
    assert list(series_exp(TruncatedSeries([0], 4)).coeffs) == [1, 0, 0, 0, 0]


def test_exp_of_rooted_tree_series_counts_rooted_forests():
    e = series_exp(tree_series(WeightSpec.uniform(2), 3))
    assert e.egf_coeffs() == [1, 1, 3, 16]


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries([1, 1], 3))


@settings(max_examples=40)
@given(series_strategy(5, zero_constant=True), series_strategy(5, zero_constant=True))
def test_exp_turns_sums_into_products(a, b):
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


@settings(max_examples=40)
@given(series_strategy(6, zero_constant=True))
def test_exp_satisfies_its_differential_equation(s):
    e = series_exp(s)
    assert e.derivative() == (s.derivative() * e).truncate(5)


# compose and reversion


def test_reversion_catalan_shift():
    r = series_reversion(TruncatedSeries([0, 1, -1], 3))
    assert list(r.coeffs) == [0, 1, 1, 2]


def test_compose_with_identity():
    e = series_exp(TruncatedSeries.z(6))
    assert series_compose(e, TruncatedSeries.z(6)) == e


def test_reversion_of_z_exp_minus_z_gives_rooted_trees():
    s = TruncatedSeries.z(4) * series_exp(-TruncatedSeries.z(4))
    r = series_reversion(s)
    assert list(r.coeffs) == [0, 1, 1, Fraction(3, 2), Fraction(8, 3)]
    assert r.egf_coeffs() == [n ** (n - 1) if n else 0 for n in range(5)]


def test_reversion_needs_linear_term():
    with pytest.raises(ValueError):
        series_reversion(TruncatedSeries([0, 0, 1], 3))
    with pytest.raises(ValueError):
        series_reversion(TruncatedSeries([1, 1], 3))


def test_compose_needs_zero_constant_inner():
    with pytest.raises(ValueError):
        series_compose(TruncatedSeries.z(3), TruncatedSeries([1, 1], 3))


@settings(max_examples=40)
@given(series_strategy(5, zero_constant=True, unit_linear=True))
def test_reversion_is_a_two_sided_inverse(s):
    r = series_reversion(s)
    z = TruncatedSeries.z(5)
    assert series_compose(s, r) == z
    assert series_compose(r, s) == z


@settings(max_examples=40)
@given(series_strategy(4), series_strategy(4, zero_constant=True), series_strategy(4, zero_constant=True))
def test_composition_is_associative(a, b, c):
    assert series_compose(series_compose(a, b), c) == series_compose(a, series_compose(b, c))


def test_egf_coeffs_scale_by_factorial():
    s = TruncatedSeries([Fraction(1, factorial(n)) for n in range(6)], 5)
    assert s.egf_coeffs() == [1] * 6


def test_series_over_polynomial_coefficients():
    lam = UniPoly.variable("λ")
    s = TruncatedSeries([UniPoly(), lam], 3)
    e = series_exp(s)
    assert e[3] == lam ** 3 / 6
