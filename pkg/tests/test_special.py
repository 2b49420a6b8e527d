from fractions import Fraction
from itertools import product
from math import comb, factorial

from hypothesis import given
from hypothesis import strategies as st

from hyperforest.exact import TruncatedSeries, UniPoly, series_exp
from hyperforest.special import (
    assoc_laguerre,
    bell_number,
    bell_poly,
    gen_hermite,
    hermite_he,
    stirling2,
)


def partitions_by_blocks(n):
    """Block counts of every set partition of {0..n-1}, via restricted growth strings."""
    counts = {}
    for rgs in product(range(n), repeat=n):
        if rgs and rgs[0] != 0:
            continue
        ok = all(rgs[i] <= max(rgs[:i]) + 1 for i in range(1, n))
        if ok:
            k = max(rgs) + 1
            counts[k] = counts.get(k, 0) + 1
    return counts


def test_stirling_small_values():
    assert stirling2(3, 2) == 3
    assert stirling2(6, 3) == 90
    assert stirling2(0, 0) == 1
    for n in range(1, 8):
        assert stirling2(n, n) == 1
        assert stirling2(n, 0) == 0
        assert stirling2(n, n + 1) == 0


def test_stirling_matches_partition_enumeration():
    for n in range(1, 7):
        counts = partitions_by_blocks(n)
        assert [stirling2(n, k) for k in range(1, n + 1)] == [counts.get(k, 0) for k in range(1, n + 1)]


@given(st.integers(1, 40), st.integers(1, 40))
def test_stirling_recurrence(n, k):
    assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_bell_polynomials():
    assert bell_poly(0) == 1
    assert bell_poly(3) == UniPoly([0, 1, 3, 1])
    assert bell_poly(3)(1) == 5
    assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_bell_polynomial_egf():
    # sum_n b_n(x) z^n/n! = exp(x(e^z - 1))
    x = UniPoly.variable()
    order = 8
    ez = series_exp(TruncatedSeries.z(order))
    inner = TruncatedSeries([UniPoly()] + [x * c for c in ez.coeffs[1:]], order)
    e = series_exp(inner)
    for n in range(order + 1):
        assert e[n] * factorial(n) == bell_poly(n)


def test_generalized_hermite_examples():
    x = UniPoly.variable()
    assert gen_hermite(2, 2) == x ** 2 - 1
    assert gen_hermite(2, 2) == hermite_he(2)
    assert gen_hermite(3, 3) == x ** 3 - 2
    for k in range(2, 6):
        for s in range(k):
            assert gen_hermite(s, k) == x ** s


def test_generalized_hermite_from_series():
    # H_s^(k)(x) = s! [z^s] exp(x z + (1-k) z^k/k!)
    x = UniPoly.variable()
    order = 9
    for k in (2, 3, 4):
        cs = [UniPoly()] * (order + 1)
        cs[1] = x
        cs[k] = cs[k] + Fraction(1 - k, factorial(k))
        e = series_exp(TruncatedSeries(cs, order))
        for s in range(order + 1):
            assert e[s] * factorial(s) == gen_hermite(s, k)


def test_k2_hermite_is_probabilists_hermite():
    for s in range(12):
        assert gen_hermite(s, 2) == hermite_he(s)


def test_laguerre_low_orders():
    for alpha in (Fraction(0), Fraction(3, 2), Fraction(-7, 3)):
        for x in (Fraction(0), Fraction(5), Fraction(-2, 9)):
            assert assoc_laguerre(0, alpha, x) == 1
            assert assoc_laguerre(1, alpha, x) == alpha + 1 - x


def test_laguerre_at_zero_is_binomial():
    for m in range(8):
        for a in range(5):
            assert assoc_laguerre(m, a, 0) == comb(m + a, m)


small_q = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))


@given(small_q, st.integers(1, 10), small_q)
def test_laguerre_parameter_shift_relation(z, p, k):
    # z L_{p-1}^(k+1)(z) = (p+k) L_{p-1}^(k)(z) - p L_p^(k)(z)
    lhs = z * assoc_laguerre(p - 1, k + 1, z)
    rhs = (p + k) * assoc_laguerre(p - 1, k, z) - p * assoc_laguerre(p, k, z)
    assert lhs == rhs


def test_laguerre_relation_without_parameter_shift_is_not_an_identity():
    z, p, k = Fraction(1), 1, Fraction(0)
    assert z * assoc_laguerre(p - 1, k, z) != p * assoc_laguerre(p, k, z) - (p + k) * assoc_laguerre(p - 1, k, z)


@given(small_q, st.integers(1, 10), small_q)
def test_laguerre_recurrence_in_degree(x, m, alpha):
    # (m+1) L_{m+1} = (2m+1+alpha-x) L_m - (m+alpha) L_{m-1}
    lhs = (m + 1) * assoc_laguerre(m + 1, alpha, x)
    rhs = (2 * m + 1 + alpha - x) * assoc_laguerre(m, alpha, x) - (m + alpha) * assoc_laguerre(m - 1, alpha, x)
    assert lhs == rhs
