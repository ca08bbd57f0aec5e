from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PRIMES = st.sampled_from([2, 3, 5, 7])


def rationals(bound=50, max_den=12):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


def unit_rationals(p, bound=40):
    """Rationals with numerator and denominator prime to p."""
    return st.builds(Fraction,
                     st.integers(-bound, bound).filter(lambda n: n % p),
                     st.integers(1, 12).filter(lambda d: d % p))
