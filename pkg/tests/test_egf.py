from fractions import Fraction
from math import factorial

from hypothesis import given, settings
from hypothesis import strategies as st

from hyperforest.egf import (
    forest_coeffs_via_egf,
    lagrange_power_coeff,
    tree_series,
    tree_series_lagrange,
    unrooted_series,
    unrooted_series_integral,
)
from hyperforest.exact import series_compose, series_exp
from hyperforest.forest_counts import rooted_counts, unrooted_counts
from hyperforest.special import bell_poly
from hyperforest.weights import WeightSpec

E2, ONES = WeightSpec.uniform(2), WeightSpec.ones()

weight_maps = st.dictionaries(
    st.integers(2, 7), st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)), min_size=1, max_size=4
).map(WeightSpec.from_map)


def test_tree_series_e2():
    assert tree_series(E2, 5).egf_coeffs()[1:] == [1, 2, 9, 64, 625]


def test_tree_series_all_ones_is_bell():
    assert tree_series(ONES, 5).egf_coeffs()[1:] == [1, 2, 12, 116, 1555]
    assert tree_series(ONES, 5).egf_coeffs()[1:] == [bell_poly(n - 1)(n) for n in range(1, 6)]


def test_tree_series_uniform_closed_form():
    for k in (2, 3, 4):
        got = tree_series(WeightSpec.uniform(k), 13).egf_coeffs()
        for n in range(1, 14):
            if (n - 1) % (k - 1):
                assert got[n] == 0
                continue
            v = (n - 1) // (k - 1)
            want = Fraction(n ** v * factorial(n - 1), factorial(v) * factorial(k - 1) ** v)
            assert got[n] == want


def test_unrooted_series_examples():
    assert unrooted_series(E2, 5).egf_coeffs()[1:] == [1, 1, 3, 16, 125]
    assert unrooted_series(ONES, 5).egf_coeffs()[1:] == [1, 1, 4, 29, 311]


@settings(max_examples=15, deadline=None)
@given(weight_maps)
def test_both_unrooted_definitions_agree(w):
    assert unrooted_series(w, 12) == unrooted_series_integral(w, 12)


@settings(max_examples=15, deadline=None)
@given(weight_maps)
def test_fixed_point_matches_lagrange_inversion(w):
    assert tree_series(w, 10) == tree_series_lagrange(w, 10)


@settings(max_examples=10, deadline=None)
@given(weight_maps, st.integers(1, 4))
def test_lagrange_powers(w, r):
    T = tree_series(w, 9)
    Tr = T ** r
    for n in range(1, 10):
        assert Tr[n] == lagrange_power_coeff(w, n, r)


def test_rooted_forest_egf_is_exp_of_tree_series():
    # sum_n E_n(1) z^n/n! = exp(T)
    e = series_exp(tree_series(E2, 8)).egf_coeffs()
    assert e == [(n + 1) ** (n - 1) if n else 1 for n in range(9)]


def test_forest_coeffs_examples():
    t, u = forest_coeffs_via_egf(3, E2)
    assert list(t) == [0, 9, 6, 1]
    assert list(forest_coeffs_via_egf(3, ONES)[1]) == [0, 4, 3, 1]
    t1, u1 = forest_coeffs_via_egf(1, ONES)
    assert list(t1) == [0, 1] and list(u1) == [0, 1]


def test_forest_coeffs_match_closed_forms():
    for w in (E2, WeightSpec.uniform(3), ONES, WeightSpec.from_map({2: Fraction(2, 3), 4: -1})):
        for n in range(0, 8):
            t, u = forest_coeffs_via_egf(n, w)
            assert t == rooted_counts(n, w)
            assert u == unrooted_counts(n, w)


def test_rooted_forest_polynomial_at_two():
    # E_n(t) = n! [z^n] exp(t T(z)); check t = 2 for e_2 against t(t+n)^(n-1)
    T = tree_series(E2, 7)
    e = series_exp(T * 2).egf_coeffs()
    assert e[1:] == [2 * (2 + n) ** (n - 1) for n in range(1, 8)]


def test_unrooted_series_is_branch_integral_composed_with_trees():
    # U = K(T) with K(y) = y + sum_k w_k (1-k) y^k / k!
    T = tree_series(E2, 8)
    U = unrooted_series(E2, 8)
    assert U == T - series_compose(T.z(8) ** 2 / 2, T)
