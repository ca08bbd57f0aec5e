import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padicrep import series as S
from padicrep.errors import DomainError, PrecisionError, ShapeError
from padicrep.fileformat import format_series, parse_series
from padicrep.series import TruncatedSeries
from padicrep.verify import haar_kernel, stirling_moment

from conftest import PRIMES, rationals

N = 10


def series_st(p=5, n=N, degree=None):
    top = n if degree is None else degree
    return st.lists(rationals(20, 6), min_size=1, max_size=top + 1).map(
        lambda vals: TruncatedSeries.from_values(vals, p, n))


@given(series_st(), series_st(), series_st())
def test_ring_axioms(F, G, H):
    assert S.mul(F, G) == S.mul(G, F)
    assert S.mul(S.mul(F, G), H) == S.mul(F, S.mul(G, H))
    assert S.mul(F, G + H) == S.mul(F, G) + S.mul(F, H)
    assert S.mul(F.one_like(), F) == F
    assert F - F == F.zero_like()


@given(PRIMES, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_dirac_group_law(p, a, b):
    assert S.mul(S.dirac(a, p, N), S.dirac(b, p, N)) == S.dirac(a + b, p, N)


def test_dirac_examples():
    assert S.dirac(2, 5, 3).lifts() == [1, 2, 1, 0]
    assert S.dirac(0, 5, 4) == TruncatedSeries.one(5, 4)
    assert [m.lift() for m in S.moments(S.dirac(3, 5, 8), 8)] == [3**k for k in range(9)]
    with pytest.raises(DomainError):
        S.dirac(Fraction(1, 5), 5, 4)


def test_log1p_coefficients():
    assert S.log1p(5, 4).lifts() == [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)]
    assert S.lie_mult(TruncatedSeries.one(5, 4)) == S.log1p(5, 4)


def test_delta_of_log_is_one():
    L = S.log1p(5, 8)
    D = S.delta_op(L)
    assert D.reliable == 7
    assert D.agrees(TruncatedSeries.one(5, 8))


@given(series_st(n=14), st.integers(-20, 20))
def test_moment_pairing_translate(F, b):
    K = 8
    m = S.moments(F, K)
    mt = S.moments(S.translate(b, F), K)
    for k in range(K + 1):
        assert mt[k] == sum((m[j] * (Fraction(b) ** (k - j) * _comb(k, j))
                             for j in range(k + 1)), F.zero_like()[0])


def _comb(k, j):
    from math import comb
    return comb(k, j)


@given(series_st(n=14), st.integers(1, 30).filter(lambda b: b % 5))
def test_moment_pairing_pushforward_and_lie(F, b):
    K = 8
    m = S.moments(F, K)
    assert S.moments(S.pushforward(b, F), K) == [m[k] * b**k for k in range(K + 1)]
    ml = S.moments(S.lie_mult(F), K)
    assert ml[0] == 0 and all(ml[k] == m[k - 1] * k for k in range(1, K + 1))


@given(series_st(n=12))
def test_moments_match_stirling_oracle(F):
    assert all(S.moment(F, k) == stirling_moment(F, k) for k in range(F.reliable + 1))


def test_pushforward_functorial():
    F = TruncatedSeries.from_values([1, 2, -3, Fraction(1, 7), 4], 5, 8)
    assert S.pushforward(1, F) == F
    assert S.pushforward(2, S.pushforward(3, F)) == S.pushforward(6, F)


def test_moments_beyond_horizon_raise():
    F = S.delta_op(S.log1p(5, 6))
    with pytest.raises(PrecisionError):
        S.moments(F, 6)


def test_haar_kernel_trivial():
    assert haar_kernel(20) == []


@given(series_st(n=20, degree=5), series_st(n=20, degree=5),
       st.sampled_from([Fraction(1, 3), Fraction(1), Fraction(5, 2)]))
def test_gauss_norm_multiplicative(F, G, s):
    if F.is_zero() or G.is_zero():
        return
    assert S.gauss_norm(S.mul(F, G), s) == S.gauss_norm(F, s) + S.gauss_norm(G, s)


def test_gauss_norm_errors():
    with pytest.raises(DomainError):
        S.gauss_norm(TruncatedSeries.zero(5, 4), 1)
    with pytest.raises(DomainError):
        S.gauss_norm(TruncatedSeries.one(5, 4), 0)


def test_entire_series_stabilizes():
    # exp(x) truncated: terms past order N cannot contribute
    b = [Fraction(1, _fact(k)) for k in range(30)]
    F = S.dirac(2, 5, 8)
    short = S.entire_series_apply(b[:9], F)
    full = S.entire_series_apply(b, F)
    assert short == full


def _fact(k):
    from math import factorial
    return factorial(k)


def test_divide_by_log1p():
    F = TruncatedSeries.from_values([3, -1, 2], 5, 10)
    L = S.log1p(5, 10)
    Q = S.divide_by_log1p(S.mul(L, F))
    assert Q.agrees(F)
    with pytest.raises(DomainError):
        S.divide_by_log1p(F)


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        S.mul(TruncatedSeries.one(5, 4), TruncatedSeries.one(5, 5))


def test_inverse():
    F = S.dirac(3, 5, 8)
    assert S.mul(F, S.inverse(F)) == F.one_like()
    assert S.inverse(F) == S.dirac(-3, 5, 8)


def test_approx_backend_matches_exact():
    F = S.pushforward(7, S.dirac(11, 5, 12, "approx", 10))
    G = S.pushforward(7, S.dirac(11, 5, 12))
    assert all(a == b.lift() for a, b in zip(F, G))


def test_round_trip_two_hundred_random_series():
    rng = random.Random(3)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        n = rng.randint(0, 12)
        backend = rng.choice(["exact", "approx"])
        M = rng.randint(4, 20)
        vals = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) if rng.random() < .7 else 0
                for _ in range(n + 1)]
        F = TruncatedSeries.from_values(vals, p, n, backend, M)
        text = format_series(F)
        G = parse_series(text)
        assert format_series(G) == text
        assert [format(c) for c in G] == [format(c) for c in F]
