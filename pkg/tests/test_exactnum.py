import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divbeta.exactnum import (
    FpPoly,
    bernoulli,
    binomial_mod,
    check_prime,
    is_prime,
    factor_multiplicity,
    fp_poly_divrem,
    linear_power_coeffs,
    taylor_compose,
)

import oracles

PRIMES = [3, 5, 7, 11, 13, 677]

coeff_lists = st.lists(st.integers(0, 10**6), max_size=25)


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(10) == Fraction(5, 66)
    assert bernoulli(7) == 0
    # the normalisations that make E4 and E10 integral
    assert -2 * 4 / bernoulli(4) == 240
    assert -2 * 10 / bernoulli(10) == -264


def test_bernoulli_matches_recurrence_to_700():
    ref = oracles.bernoulli_recurrence(700)
    for t in range(0, 701):
        assert bernoulli(t) == ref[t], t


def test_bernoulli_recurrence_identity():
    B = [bernoulli(k) for k in range(0, 121)]
    for n in range(1, 120):
        assert sum(math.comb(n + 1, k) * B[k] for k in range(n + 1)) == 0


def test_check_prime_rejects_bad_moduli():
    for bad in (0, 1, 2, 4, 9, 15, 676):
        with pytest.raises(ValueError):
            check_prime(bad)
    assert check_prime(677) == 677


@given(st.integers(0, 2000), st.integers(0, 2000), st.sampled_from([5, 7, 11, 13]))
def test_binomial_mod_lucas(n, k, p):
    assert binomial_mod(n, k, p) == math.comb(n, k) % p


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 30), st.sampled_from([None, 5, 13]))
def test_linear_power_coeffs(alpha, beta, b, p):
    got = linear_power_coeffs(alpha, beta, b, p)
    want = [math.comb(b, k) * alpha**k * beta ** (b - k) for k in range(b + 1)]
    if p is not None:
        want = [c % p for c in want]
    assert oracles.trim(got) == oracles.trim(want)


def test_polynomial_basics():
    x = FpPoly.x(5)
    assert (x + 1) * (x + 4) == x**2 + 4
    assert FpPoly([1, 2, 0, 0], 5).degree == 1
    assert FpPoly([], 5).degree == -1
    assert FpPoly([0, 5, 10], 5).is_zero()
    assert (x**3 + 2)(2) == 0
    assert str(FpPoly([1, 0, 3], 7)) == "3*x^2 + 1"
    assert FpPoly.from_roots([1, 2], 7) == FpPoly([2, 4, 1], 7)
    with pytest.raises(ValueError):
        FpPoly([1], 5) + FpPoly([1], 7)


def test_divrem_examples():
    p = 11
    x = FpPoly.x(p)
    q, r = fp_poly_divrem(x**10 - 1, (x + 1) * (x + 3) * (x + 4))
    assert r.is_zero()
    assert q * ((x + 1) * (x + 3) * (x + 4)) == x**10 - 1
    y = FpPoly.x(5)
    assert fp_poly_divrem(y, y) == (FpPoly([1], 5), FpPoly([], 5))
    z = FpPoly.x(13)
    assert fp_poly_divrem(z**14 - 1, z**2 + 5 * z + 1)[1].is_zero()


def test_divrem_errors():
    with pytest.raises(ZeroDivisionError):
        fp_poly_divrem(FpPoly([1, 1], 5), FpPoly([], 5))
    with pytest.raises(ValueError):
        fp_poly_divrem(FpPoly([1, 1], 5), FpPoly([1, 1], 7))
    with pytest.raises(TypeError):
        fp_poly_divrem([1, 1], FpPoly([1, 1], 7))


@settings(max_examples=200)
@given(coeff_lists, coeff_lists.filter(lambda c: any(v % 13 for v in c)), st.sampled_from(PRIMES))
def test_divrem_reconstructs(a, b, p):
    A, B = FpPoly(a, p), FpPoly(b, p)
    if B.is_zero():
        return
    q, r = fp_poly_divrem(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@given(coeff_lists, coeff_lists, st.sampled_from(PRIMES))
def test_product_matches_schoolbook(a, b, p):
    got = (FpPoly(a, p) * FpPoly(b, p)).coeffs
    want = oracles.poly_mul([c % p for c in a], [c % p for c in b], p)
    assert list(got) == want


def test_python_fallback_for_large_modulus():
    p = next(n for n in range(2**31 + 1, 2**31 + 200, 2) if is_prime(n))  # too large for the int64 path
    a = FpPoly([3, 1, 4, 1, 5, 9, 2, 6], p)
    b = FpPoly([2, 7, 1], p)
    q, r = fp_poly_divrem(a * b + FpPoly([5], p), b)
    assert q == a and r == FpPoly([5], p)


def test_factor_multiplicity_examples():
    y = FpPoly.x(5)
    assert factor_multiplicity(3 * y**25 + y**29, y) == 25
    assert factor_multiplicity(y + 1, y + 2) == 0
    assert factor_multiplicity(FpPoly([], 5), y) == math.inf
    with pytest.raises(ValueError):
        factor_multiplicity(y, FpPoly([3], 5))


@settings(max_examples=100)
@given(
    coeff_lists.filter(lambda c: any(v % 7 for v in c)),
    st.lists(st.integers(0, 6), min_size=2, max_size=4).filter(lambda c: c[-1] != 0),
    st.integers(0, 6),
)
def test_factor_multiplicity_adds(a, e, k):
    p = 7
    A, E = FpPoly(a, p), FpPoly(e, p)
    if A.is_zero():
        return
    assert factor_multiplicity(A * E**k, E) == factor_multiplicity(A, E) + k


def test_powmod_agrees_with_direct_power():
    p = 13
    m = FpPoly([1, 5, 1], p)
    x = FpPoly.x(p)
    for e in (0, 1, 2, 13, 14, 100, 169):
        assert x.powmod(e, m) == (x**e) % m


@settings(max_examples=100)
@given(coeff_lists, st.integers(0, 4), st.integers(0, 4), st.sampled_from([5, 7, 13]))
def test_taylor_compose_matches_binomial_expansion(a, alpha, beta, p):
    a = [c % p for c in a]
    got = oracles.trim(taylor_compose(a, alpha, beta, p))
    assert got == oracles.compose_linear(a, alpha, beta, p)


def test_taylor_compose_truncation():
    a = [1, 2, 3, 4, 0, 1]
    full = taylor_compose(a, 4, 1, 5)
    assert taylor_compose(a, 4, 1, 5, terms=3) == full[:3]
    assert FpPoly(a, 5).compose_linear(4, 1) == FpPoly(full, 5)
