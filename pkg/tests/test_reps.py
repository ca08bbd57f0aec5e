import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from padicrep import reps as R
from padicrep import series as S
from padicrep.errors import DegreeOverflowError, DomainError, ParseError, PrecisionError
from padicrep.reps import Character, PolyFunction, c_coeff, eps_twist, weyl_twist
from padicrep.series import TruncatedSeries
from padicrep.uea import GENERATORS, PBWElement, bracket

from conftest import rationals

P = 5
chars = st.builds(Character, st.integers(-5, 5), st.integers(-5, 5))


def mono(k, N=12):
    return PolyFunction.monomial(k, P, N)


def test_characters():
    chi = Character(1, 3)
    assert chi.c == 2 and R.c_of(weyl_twist(chi)) == -2
    assert str(chi) == "chi(1,3)"
    assert R.parse_character("chi(1,3)") == chi == R.parse_character("1,3")
    assert eps_twist(chi, 2) == Character(-1, 5)
    with pytest.raises(ParseError):
        R.parse_character("chi(1)")


@pytest.mark.parametrize("side", ["plus", "minus"])
@pytest.mark.parametrize("chi", [Character(0, 0), Character(1, 3), Character(-2, 1)])
def test_function_side_brackets(side, chi):
    gens = [PBWElement.gen(g) for g in GENERATORS]
    for i, x in enumerate(GENERATORS):
        for j, y in enumerate(GENERATORS):
            br = bracket(gens[i], gens[j])
            for k in range(11):
                f = mono(k)
                lhs = (R.rho(x, chi, R.rho(y, chi, f, side), side)
                       - R.rho(y, chi, R.rho(x, chi, f, side), side))
                assert lhs == R.rho_element(br, chi, f, side)


def test_theta_overflow():
    with pytest.raises(DegreeOverflowError):
        R.rho_theta(mono(12))


@given(rationals(30, 7))
def test_c_recurrence(c):
    for m in range(1, 13):
        for i in range(1, m + 1):
            assert c_coeff(i, m, c) * (c - m - i) + c_coeff(i - 1, m, c) == c_coeff(i, m + 1, c)


def test_c_coeff_endpoints():
    assert c_coeff(3, 3, Fraction(5, 2)) == 1
    assert c_coeff(0, 3, 7) == 7 * 6 * 5
    with pytest.raises(DomainError):
        c_coeff(4, 3, 1)


@pytest.mark.parametrize("c", [0, 1, 2, -3, Fraction(5, 2)])
def test_uminus_power_operator_identity(c):
    for m in range(1, 5):
        for k in range(9):
            f = mono(k, 16)
            lhs = f
            for _ in range(m):
                lhs = R.rho_uminus_c(c, lhs)
            rhs = f * 0
            for i in range(m + 1):
                g = f
                for _ in range(i):
                    g = R.rho_uplus(g)
                for _ in range(m + i):
                    g = R.rho_theta(g)
                rhs = rhs + g * ((-1) ** m * c_coeff(i, m, c))
            assert lhs == rhs


def test_uplus_theta_identity():
    for m in range(6):
        for k in range(8):
            f = mono(k, 16)
            g = f
            for _ in range(m):
                g = R.rho_theta(g)
            lhs = R.rho_uplus(g)
            rhs = R.rho_uplus(f)
            for _ in range(m):
                rhs = R.rho_theta(rhs)
            if m:
                h = f
                for _ in range(m - 1):
                    h = R.rho_theta(h)
                rhs = rhs - h * m
            assert lhs == rhs


def _rand_series(seed, N=14):
    import random
    rng = random.Random(seed)
    return TruncatedSeries.from_values(
        [Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 7])) for _ in range(N + 1)], P, N)


def _pair_mono(F, k):
    return S.pair(F, [0] * k + [1])


@pytest.mark.parametrize("side", ["plus", "minus"])
@pytest.mark.parametrize("x", GENERATORS)
def test_lie_transposes(side, x):
    chi = Character(1, -2)
    F = _rand_series(1)
    G = R.dual_action(x, chi, F, side)
    for k in range(11):
        assert _pair_mono(G, k) == -S.pair(F, R.rho(x, chi, mono(k), side).lifts())


@pytest.mark.parametrize("side", ["plus", "minus"])
def test_group_transposes(side):
    chi = Character(2, 3)
    F = _rand_series(2)
    b = Fraction(3, 7)
    G = R.dual_diag(chi, b, F, side)
    for k in range(11):
        assert _pair_mono(G, k) == S.pair(F, R.rho_diag(chi, 1 / b, mono(k), side).lifts())
    G = R.dual_lower_unip(4, F)
    for k in range(11):
        assert _pair_mono(G, k) == S.pair(F, R.rho_lower_unip(-4, mono(k)).lifts())


def test_dual_uminus_examples():
    chi = Character(0, 2)
    one = TruncatedSeries.one(P, 10)
    assert R.dual_uminus_power(chi, 1, one).is_zero()
    a = 3
    F = S.dirac(a, P, 10)
    L = S.log1p(P, 10)
    G = R.dual_uminus_power(chi, 1, F)
    assert G == F * (chi.c * a) - S.mul(L, F) * (a * a)
    assert G.reliable == 8
    with pytest.raises(PrecisionError):
        R.dual_uminus_power(chi, 6, F)


def test_dual_uplus_examples():
    Z = TruncatedSeries.zero(P, 8)
    assert R.dual_uplus(Z).is_zero()
    F = _rand_series(3, 8)
    assert R.dual_uplus(R.dual_uplus(F)).t_adic_order() >= 2


def test_dual_diag_group_law_and_eigenfunctions():
    chi = Character(1, 2)
    F = _rand_series(4, 10)
    assert R.dual_diag(chi, 1, F) == F
    assert R.dual_diag(chi, 2, R.dual_diag(chi, 3, F)) == R.dual_diag(chi, 6, F)
    L = S.log1p(P, 10)
    for k in range(4):
        assert R.dual_diag(chi, 3, L**k) == (L**k) * Fraction(3) ** (k - chi.m2)
    with pytest.raises(DomainError):
        R.dual_diag(chi, 5, F)


def test_function_side_trivial_group_elements():
    chi = Character(1, 2)
    f = PolyFunction.from_values([1, 2, 3], P, 6)
    assert R.rho_diag(chi, 1, f) == f
    assert R.rho_upper_unip(chi, 0, f) == f
    with pytest.raises(DomainError):
        R.rho_upper_unip(chi, 1, f)


@pytest.mark.parametrize("c", [-2, 0, 1, 3])
def test_upper_unip_matches_symbolic_oracle(c):
    a = sympy.symbols("a")
    b = sympy.Rational(5, 3)
    coeffs = [1, -2, sympy.Rational(1, 3), 4]
    fa = sum(q * a**j for j, q in enumerate(coeffs))
    expr = (1 - a * b) ** c * fa.subs(a, a / (1 - a * b))
    N = 8
    f = PolyFunction.from_values([Fraction(int(q.p), int(q.q)) if isinstance(q, sympy.Rational)
                                  else q for q in coeffs], P, N)
    got = R.rho_upper_unip(Character(0, c), Fraction(5, 3), f)
    ser = sympy.series(expr, a, 0, N + 1).removeO()
    for m in range(N + 1):
        exp = sympy.Rational(ser.coeff(a, m))
        assert got.coeffs[m].lift() == Fraction(int(exp.p), int(exp.q))
    assert got.truncated


@pytest.mark.parametrize("c", [-1, 0, 2, 3])
def test_derivative_formula_at_zero(c):
    b = Fraction(10)
    f = PolyFunction.from_values([3, -1, Fraction(2, 7), 5, 1], P, 10)
    g = R.rho_upper_unip(Character(0, c), b, f)
    for m in range(6):
        lhs = g.coeffs[m].lift() * math.factorial(m)
        rhs = sum((-1) ** (m + i) * c_coeff(i, m, c) * b ** (m - i)
                  * f.coeffs[i].lift() * math.factorial(i) for i in range(m + 1))
        assert lhs == rhs
    # at c = m - 1 only the top term survives
    for m in range(1, 7):
        assert all(c_coeff(i, m, m - 1) == 0 for i in range(m))


def test_casimir_scalars():
    assert R.casimir_scalar(Character(0, 0), "plus") == 0
    assert R.casimir_scalar(Character(0, 0), "minus") == 0
    assert R.casimir_scalar(Character(1, 3), "plus") == 0
    assert R.casimir_scalar(Character(1, 3), "minus") == 4


@pytest.mark.parametrize("side", ["plus", "minus"])
@pytest.mark.parametrize("c", range(-3, 4))
def test_casimir_function_side(side, c):
    chi = Character(0, c)
    s = R.casimir_scalar(chi, side)
    for k in range(11):
        f = mono(k)
        out = (R.rho_h(chi, R.rho_h(chi, f, side), side) * Fraction(1, 2)
               + R.rho_uplus(R.rho_uminus(chi, f, side), chi, side)
               + R.rho_uminus(chi, R.rho_uplus(f, chi, side), side))
        assert out == f * s


def test_ode_solutions():
    N = 16
    L = S.log1p(P, N)
    for c in range(4):
        sol = R.solve_ode_recursion(c, N, P)
        assert sol.solvable and sol.series == L**c
    assert R.solve_ode_recursion(1, 3, P).series.lifts() == [0, 1, Fraction(-1, 2), Fraction(1, 3)]
    for c in (Fraction(1, 2), -1, Fraction(7, 3)):
        sol = R.solve_ode_recursion(c, N, P)
        assert sol.no_solution and sol.series.is_zero()


def test_ode_residual_examples():
    N = 12
    one = TruncatedSeries.one(P, N)
    L = S.log1p(P, N)
    assert R.ode_residual(3, 3, one).is_zero()
    r = R.ode_residual(2, 0, L)
    assert r.is_zero(r.reliable)
    r = R.ode_residual(2, 0, L**2)
    assert r == L**2


@given(chars, chars)
def test_condition_bundle_is_the_twist(chi, src):
    bundle = R.cond_central(chi, src) and R.cond_ode(chi, src) and R.cond_diag(chi, src)
    assert bundle == R.cond_twist(chi, src)


def test_hom_dim_examples():
    chi = Character(0, 0)
    assert R.hom_dim("minus", "minus", eps_twist(chi, -1), chi) == 1
    assert R.hom_dim("plus", "minus", Character(1, 2), chi) == 0
    assert R.hom_dim("minus", "plus", Character(1, 2), chi) == 0
    assert R.hom_dim("full", "full", eps_twist(chi, 1), chi) == 1
    assert R.hom_dim("plus", "plus", eps_twist(chi, 1), chi) == 1
    with pytest.raises(DomainError):
        R.hom_dim("minus", "minus", chi, chi)
    with pytest.raises(DomainError):
        R.hom_dim("full", "minus", chi, eps_twist(chi, 1))


@given(chars)
def test_hom_dim_minus_fixes_m(chi):
    for k in range(1, 12):
        src = eps_twist(chi, -k)
        if R.hom_dim("minus", "minus", src, chi):
            assert (chi.c - src.c) // 2 == chi.c + 1


@pytest.mark.parametrize("c", [0, -1, -2, -3])
def test_intertwiner_residuals_vanish(c):
    rep = R.intertwiner_residuals(Character(1, 1 + c))
    assert rep.all_zero and rep.nonzero_map
    assert rep.chi_prime == eps_twist(Character(1, 1 + c), 1 - c)


def test_intertwiner_rejects_positive_c():
    with pytest.raises(DomainError):
        R.intertwiner_residuals(Character(0, 1))


def test_bruhat_pair():
    chi = Character(1, 3)
    N = 12
    zero = R.bruhat_split(TruncatedSeries.zero(P, N), TruncatedSeries.zero(P, N), chi)
    assert all(zero.act(x).is_zero() for x in GENERATORS)
    assert zero.chi_minus == weyl_twist(chi)
    Fp, Fm = _rand_series(5, N), _rand_series(6, N)
    x = R.bruhat_split(Fp, Fm, chi)
    from padicrep.uea import casimir
    y = x.act_element(casimir())
    sp, sm = x.casimir_scalars()
    assert sp == R.casimir_scalar(chi, "plus")
    assert sm == R.casimir_scalar(weyl_twist(chi), "minus")
    assert y.plus == Fp * sp and y.minus == Fm * sm
