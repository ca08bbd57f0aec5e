"""Named verification suites.

Each suite is a pure function of a :class:`RunConfig` returning a
:class:`Report`. Randomized cases draw from a generator seeded by
``(seed, suite name)``, so identical configs give byte-identical reports.
Every case records how many instances it checked, how many failed, and the
largest p-adic absolute value among its residuals (``0`` when all vanish).
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

import sympy

from . import reps as R
from . import series as S
from . import uea as U
from .errors import DomainError
from .newton import polygon
from .padic import PadicScalar, as_scalar
from .reps import Character, PolyFunction, c_coeff, eps_twist, weyl_twist
from .series import TruncatedSeries

DEFAULT_SEED = 1729
PRIMES = (2, 3, 5)


# -- configuration and reports -------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    p: int = 5
    backend: str = "exact"
    prec: int = S.DEFAULT_PREC
    trunc: int = 32
    seed: int = DEFAULT_SEED
    suite: str | None = None
    input: str | None = None
    output: str | None = None
    c: Fraction | None = None
    m: int | None = None
    chi: Character | None = None
    side: str = "minus"

    def __post_init__(self):
        if self.p < 2 or any(self.p % q == 0 for q in range(2, math.isqrt(self.p) + 1)):
            raise DomainError(f"p={self.p} is not prime")
        if self.backend not in S.BACKENDS:
            raise DomainError(f"unknown backend {self.backend!r}")
        if self.trunc < 8:
            raise DomainError("truncation order N must be >= 8")
        if self.backend == "approx" and self.prec < 4:
            raise DomainError("approximate backend needs precision M >= 4")
        if self.side not in R.SIDES:
            raise DomainError(f"side must be plus or minus, got {self.side!r}")

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def describe(self) -> dict:
        out = {"p": self.p, "backend": self.backend, "prec": self.prec,
               "trunc": self.trunc, "seed": self.seed}
        if self.c is not None:
            out["c"] = str(self.c)
        if self.m is not None:
            out["m"] = self.m
        if self.chi is not None:
            out["chi"] = str(self.chi)
        return out


@dataclass(frozen=True)
class Case:
    name: str
    count: int
    failures: int
    residual: Fraction

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.count > 0


@dataclass
class Report:
    suite: str
    config: dict
    cases: list[Case]
    constants: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.name)

    @property
    def passed(self) -> bool:
        return bool(self.cases) and all(c.passed for c in self.cases)

    def case(self, name: str) -> Case:
        return next(c for c in self.cases if c.name == name)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "constants": self.constants,
            "cases": [{"name": c.name, "count": c.count, "failures": c.failures,
                       "residual": str(c.residual), "passed": c.passed} for c in self.cases],
            "notes": self.notes,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items())
        lines = [f"suite {self.suite}", f"config {cfg}"]
        if self.constants:
            lines.append("constants " + " ".join(f"{k}={v:+d}" for k, v in self.constants.items()))
        for c in self.cases:
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  cases={c.count}  "
                         f"failures={c.failures}  residual={c.residual}")
        lines += [f"note {n}" for n in self.notes]
        ok = sum(c.passed for c in self.cases)
        lines.append(f"result {'PASS' if self.passed else 'FAIL'} {ok}/{len(self.cases)}")
        return "\n".join(lines) + "\n"


class _Tally:
    """Accumulates one named case."""

    def __init__(self, name: str, p: int):
        self.name, self.p = name, p
        self.count = self.failures = 0
        self.worst = Fraction(0)

    def residuals(self, values: Iterable) -> bool:
        norm = residual_norm(values, self.p)
        self.count += 1
        self.failures += norm != 0
        self.worst = max(self.worst, norm)
        return norm == 0

    def flag(self, ok: bool) -> bool:
        self.count += 1
        self.failures += not ok
        if not ok:
            self.worst = max(self.worst, Fraction(1))
        return ok

    def case(self) -> Case:
        return Case(self.name, self.count, self.failures, self.worst)


class _Cases(dict):
    def __init__(self, p: int):
        super().__init__()
        self.p = p

    def __missing__(self, name):
        self[name] = _Tally(name, self.p)
        return self[name]

    def done(self) -> list[Case]:
        return [t.case() for t in self.values()]


def residual_norm(values: Iterable, p: int) -> Fraction:
    """``max |x|_p`` over the entries not zero to their precision."""
    worst = Fraction(0)
    for x in values:
        x = x if isinstance(x, PadicScalar) else as_scalar(x, p)
        if not x.is_zero():
            worst = max(worst, Fraction(p) ** (-int(x.valuation())))
    return worst


def series_residual(A: TruncatedSeries, B: TruncatedSeries, upto: int | None = None) -> list:
    """Coefficient differences through the common reliable horizon."""
    if upto is None:
        upto = min(A.reliable, B.reliable)
    upto = min(upto, A.N, B.N)
    return [A[n] - B[n] for n in range(upto + 1)]


def _constants() -> dict[str, int]:
    return {"DUAL_UPLUS_SIGN": R.DUAL_UPLUS_SIGN,
            "LOWER_UNIPOTENT_SHIFT": R.LOWER_UNIPOTENT_SHIFT}


# -- random inputs ---------------------------------------------------------------------

def _unit_den(rng: random.Random, p: int) -> int:
    while True:
        d = rng.randint(1, 9)
        if d % p:
            return d


def random_rational(rng: random.Random, p: int, bound: int = 9) -> Fraction:
    """A random rational whose denominator is prime to ``p``."""
    return Fraction(rng.randint(-bound, bound), _unit_den(rng, p))


def random_series(rng: random.Random, cfg: RunConfig, N: int,
                  degree: int | None = None) -> TruncatedSeries:
    top = N if degree is None else min(degree, N)
    vals = [random_rational(rng, cfg.p) for _ in range(top + 1)]
    return TruncatedSeries.from_values(vals, cfg.p, N, cfg.backend, cfg.prec)


def random_unit(rng: random.Random, p: int) -> Fraction:
    while True:
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), _unit_den(rng, p))
        if b.numerator % p:
            return b


def stirling2(k: int, j: int) -> int:
    """Stirling numbers of the second kind."""
    return _stirling2(k, j)


@lru_cache(maxsize=None)
def _stirling2(k: int, j: int) -> int:
    if k == j:
        return 1
    if j == 0 or j > k:
        return 0
    return j * _stirling2(k - 1, j) + _stirling2(k - 1, j - 1)


def stirling_moment(F: TruncatedSeries, k: int) -> PadicScalar:
    """``lam(a^k)`` from ``a^k = sum_j S(k, j) j! binom(a, j)``; independent of Delta."""
    acc = F.zero_like()[0]
    for j in range(min(k, F.N) + 1):
        s = stirling2(k, j)
        if s:
            acc = acc + F[j] * (s * math.factorial(j))
    return acc


def _report(name: str, cfg: RunConfig, cases: _Cases, notes=(), constants=True) -> Report:
    return Report(name, cfg.describe(), cases.done(),
                  _constants() if constants else {}, list(notes))


# -- amice-ring --------------------------------------------------------------------------

def suite_amice_ring(cfg: RunConfig) -> Report:
    """Dirac measures multiply like group elements; ring axioms of the series ring."""
    cases = _Cases(cfg.p)
    N = cfg.trunc
    for p in sorted(set(PRIMES) | {cfg.p}):
        rng = cfg.rng(f"amice-ring:{p}")
        t = cases[f"dirac-product[p={p}]"]
        t.p = p
        for _ in range(50):
            a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
            lhs = S.mul(S.dirac(a, p, N, cfg.backend, cfg.prec), S.dirac(b, p, N, cfg.backend, cfg.prec))
            t.residuals(series_residual(lhs, S.dirac(a + b, p, N, cfg.backend, cfg.prec)))
    rng = cfg.rng("amice-ring:axioms")
    n_ax = min(N, 16)
    for _ in range(10):
        F, G, H = (random_series(rng, cfg, n_ax) for _ in range(3))
        one = F.one_like()
        cases["ring-commutative"].residuals(series_residual(S.mul(F, G), S.mul(G, F)))
        cases["ring-associative"].residuals(
            series_residual(S.mul(S.mul(F, G), H), S.mul(F, S.mul(G, H))))
        cases["ring-distributive"].residuals(
            series_residual(S.mul(F, G + H), S.mul(F, G) + S.mul(F, H)))
        cases["ring-unit"].residuals(series_residual(S.mul(one, F), F))
        cases["dirac-zero-is-unit"].residuals(
            series_residual(S.dirac(0, cfg.p, n_ax, cfg.backend, cfg.prec), one))
    return _report("amice-ring", cfg, cases, constants=False)


# -- lemma43 -------------------------------------------------------------------------------

def suite_lemma43(cfg: RunConfig) -> Report:
    """Moment-pairing oracle for the operator dictionary, ``k <= 20``."""
    K = 20
    N = max(cfg.trunc, K + 1)
    p = cfg.p
    rng = cfg.rng("lemma43")
    cases = _Cases(p)
    for _ in range(20):
        F = random_series(rng, cfg, N)
        mF = S.moments(F, K)
        cases["moment-stirling"].residuals(
            [mF[k] - stirling_moment(F, k) for k in range(K + 1)])

        b = rng.randint(-30, 30)
        mT = S.moments(S.translate(b, F), K)
        expect = [sum((mF[j] * (math.comb(k, j) * b ** (k - j)) for j in range(k + 1)),
                      F.zero_like()[0]) for k in range(K + 1)]
        cases["translate"].residuals([x - y for x, y in zip(mT, expect)])

        mD = S.moments(S.delta_op(F), K)
        mF1 = S.moments(F, K + 1)
        cases["delta"].residuals([mD[k] - mF1[k + 1] for k in range(K + 1)])

        u = random_unit(rng, p)
        mP = S.moments(S.pushforward(u, F), K)
        cases["pushforward"].residuals([mP[k] - mF[k] * u**k for k in range(K + 1)])

        mL = S.moments(S.lie_mult(F), K)
        cases["lie-mult"].residuals([mL[0]] + [mL[k] - mF[k - 1] * k for k in range(1, K + 1)])
    return _report("lemma43", cfg, cases)


# -- newton-log ----------------------------------------------------------------------------

def expected_log_segments(p: int) -> list[tuple[Fraction, int]]:
    return [(Fraction(-1, p - 1), p - 1), (Fraction(-1, p * p - p), p * p - p),
            (Fraction(-1, p**3 - p * p), p**3 - p * p)]


def suite_newton_log(cfg: RunConfig) -> Report:
    """Newton polygon of ``log(1+T)`` at ``N = p^3`` and stability under doubling."""
    cases = _Cases(cfg.p)
    notes = []
    for p in PRIMES:
        N = p**3
        pol = polygon(S.log1p(p, N, cfg.backend, cfg.prec))
        got = [(s.slope, s.length) for s in pol.segments]
        cases["segments"].flag(got == expected_log_segments(p))
        cases["t-adic-order"].flag(pol.t_adic_order == 1)
        cert = [s.certified for s in pol.segments]
        cases["first-two-certified"].flag(cert[:2] == [True, True])
        big = polygon(S.log1p(p, 2 * N, cfg.backend, 2 * cfg.prec))
        kept = [s for s in pol.segments if s.certified]
        cases["doubling-keeps-certified"].flag(list(big.segments[: len(kept)]) == kept)
        notes.append(f"p={p} N={N} segments="
                     + ",".join(f"({s.slope},{s.length},{'c' if s.certified else 'u'})"
                                for s in pol.segments)
                     + f" certified_through={pol.certified_through}")
    return _report("newton-log", cfg, cases, notes, constants=False)


# -- lemma53 --------------------------------------------------------------------------------

def _mono(k: int, p: int, N: int) -> PolyFunction:
    return PolyFunction.monomial(k, p, N)


def _iterate(op: Callable, f: PolyFunction, n: int) -> PolyFunction:
    for _ in range(n):
        f = op(f)
    return f


def _transpose_cases(cfg: RunConfig, cases: _Cases, rng: random.Random) -> None:
    """``<x.F, a^k> = -<F, rho(x) a^k>`` and ``<g.F, a^k> = <F, rho(g^-1) a^k>``."""
    p, K = cfg.p, 10
    N = max(cfg.trunc, K + 4)
    deg = K + 2
    for _ in range(4):
        F = random_series(rng, cfg, N)
        chi = Character(rng.randint(-4, 4), rng.randint(-4, 4))
        for side in R.SIDES:
            for x in U.GENERATORS:
                G = R.dual_action(x, chi, F, side)
                res = []
                for k in range(K + 1):
                    f = R.rho(x, chi, _mono(k, p, deg), side)
                    res.append(S.pair(G, [0] * k + [1]) + S.pair(F, f.lifts()))
                cases[f"transpose-{side}-{x}"].residuals(res)
            b = random_unit(rng, p)
            G = R.dual_diag(chi, b, F, side)
            res = [S.pair(G, [0] * k + [1]) - S.pair(F, R.rho_diag(chi, 1 / b, _mono(k, p, deg), side).lifts())
                   for k in range(K + 1)]
            cases[f"transpose-{side}-diag"].residuals(res)
        b = rng.randint(-20, 20)
        G = R.dual_lower_unip(b, F)
        res = [S.pair(G, [0] * k + [1]) - S.pair(F, R.rho_lower_unip(-b, _mono(k, p, deg)).lifts())
               for k in range(K + 1)]
        cases["transpose-minus-lower-unip"].residuals(res)


def _sign_constants(cfg: RunConfig) -> dict[str, int]:
    """Recover the two sign conventions from the pairing, trying both signs."""
    p, K = cfg.p, 8
    N = max(cfg.trunc, K + 4)
    F = random_series(cfg.rng("signs"), replace(cfg, backend="exact"), N)
    found = {}
    for s in (1, -1):
        G = S.lie_mult(F) * s
        if all(S.pair(G, [0] * k + [1]) == -S.pair(F, R.rho_uplus(_mono(k, p, K + 2)).lifts())
               for k in range(K + 1)):
            found["DUAL_UPLUS_SIGN"] = s
        b = 3
        G = S.translate(s * b, F)
        # rho((1 0; b 1)^-1) f = f(a + b) under the a -> a - b chart convention
        if all(S.pair(G, [0] * k + [1]) == S.pair(F, R.rho_lower_unip(-b, _mono(k, p, K + 2)).lifts())
               for k in range(K + 1)):
            found["LOWER_UNIPOTENT_SHIFT"] = s
    return found


def suite_lemma53(cfg: RunConfig) -> Report:
    """c_i recurrence, the operator identity for powers of u-, and transposes."""
    p = cfg.p
    rng = cfg.rng("lemma53")
    cases = _Cases(p)
    for _ in range(20):
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
        res = []
        for m in range(1, 13):
            for i in range(1, m + 1):
                res.append(c_coeff(i, m, c) * (c - m - i) + c_coeff(i - 1, m, c)
                           - c_coeff(i, m + 1, c))
        cases["c-recurrence"].residuals(res)
        cases["c-endpoints"].residuals(
            [c_coeff(m, m, c) - 1 for m in range(13)]
            + [c_coeff(0, m, c) - R.falling(c, m) for m in range(13)])

    deg, mmax = 8, 4
    budget = deg + 2 * mmax
    for c in (Fraction(0), Fraction(1), Fraction(2), Fraction(-3), Fraction(5, 2)):
        for m in range(1, mmax + 1):
            res = []
            for k in range(deg + 1):
                f = _mono(k, p, budget)
                lhs = _iterate(lambda g: R.rho_uminus_c(c, g), f, m)
                rhs = f * 0
                for i in range(m + 1):
                    term = _iterate(R.rho_theta, _iterate(R.rho_uplus, f, i), m + i)
                    rhs = rhs + term * (c_coeff(i, m, c) * (-1) ** m)
                res += (lhs - rhs).lifts()
            cases["uminus-power-identity"].residuals(res)
    for m in range(7):
        res = []
        for k in range(deg + 1):
            f = _mono(k, p, budget)
            lhs = R.rho_uplus(_iterate(R.rho_theta, f, m))
            rhs = _iterate(R.rho_theta, R.rho_uplus(f), m)
            if m:
                rhs = rhs - _iterate(R.rho_theta, f, m - 1) * m
            res += (lhs - rhs).lifts()
        cases["uplus-theta-identity"].residuals(res)

    N = max(cfg.trunc, 16)
    for _ in range(5):
        F = random_series(rng, cfg, N)
        chi = Character(rng.randint(-4, 4), rng.randint(-4, 4))
        for m in range(1, 4):
            closed = R.dual_uminus_power(chi, m, F)
            G = F
            for _ in range(m):
                G = R.dual_uminus(chi, G)
            cases["uminus-power-vs-iterate"].residuals(series_residual(closed, G))
    for a in (1, 2, 5, -3):
        chi = Character(0, 2)
        F = S.dirac(a, p, N, cfg.backend, cfg.prec)
        L = S.log1p(p, N, cfg.backend, cfg.prec)
        expect = F * (chi.c * a) - S.mul(L, F) * (a * a)
        cases["uminus-dirac"].residuals(series_residual(R.dual_uminus_power(chi, 1, F), expect))

    _transpose_cases(cfg, cases, rng)
    found = _sign_constants(cfg)
    cases["sign-constants"].flag(found == _constants())
    return _report("lemma53", cfg, cases)


# -- thm54-congruence ---------------------------------------------------------------------

def suite_thm54(cfg: RunConfig) -> Report:
    """``(u-)^m F - falling(c, m) Delta^m F`` is a multiple of ``log(1+T)``."""
    p, N = cfg.p, cfg.trunc
    rng = cfg.rng("thm54")
    cases = _Cases(p)
    L = S.log1p(p, N, cfg.backend, cfg.prec)
    inputs = [("one", S.TruncatedSeries.one(p, N, cfg.backend, cfg.prec)),
              ("dirac2", S.dirac(2, p, N, cfg.backend, cfg.prec)),
              ("poly", random_series(rng, cfg, N, degree=6))]
    for c in (2, 3):
        chi = Character(0, c)
        for label, F in inputs:
            for m in range(1, 5):
                lead = F
                for _ in range(m):
                    lead = S.delta_op(lead)
                Rm = R.dual_uminus_power(chi, m, F) - lead * R.falling(c, m)
                try:
                    Q = S.divide_by_log1p(Rm)
                except DomainError:
                    cases[f"divisible[{label}]"].flag(False)
                    continue
                cases[f"divisible[{label}]"].residuals(series_residual(S.mul(Q, L), Rm))
                # the quotient is sum_{i>=1} (-1)^i c_i log^(i-1) Delta^(m+i) F
                expect = F.zero_like()
                deltas = [F]
                for _ in range(2 * m):
                    deltas.append(S.delta_op(deltas[-1]))
                logp = F.one_like()
                for i in range(1, m + 1):
                    if i > 1:
                        logp = S.mul(logp, L)
                    expect = expect + S.mul(logp, deltas[m + i]) * (c_coeff(i, m, c) * (-1) ** i)
                cases[f"quotient[{label}]"].residuals(series_residual(Q, expect))
    notes = ["the congruence is attached to powers of u-; the u+/u- labeling in the "
             "source argument is left open"]
    return _report("thm54-congruence", cfg, cases, notes)


# -- prop55 ------------------------------------------------------------------------------------

def _random_pair(rng: random.Random) -> tuple[Character, Character]:
    chi = Character(rng.randint(-6, 6), rng.randint(-6, 6))
    mode = rng.randrange(3)
    if mode == 0:
        return chi, Character(rng.randint(-6, 6), rng.randint(-6, 6))
    src = eps_twist(chi, -rng.randint(0, 4))
    if mode == 2:
        src = Character(src.m1 + rng.choice([-1, 0, 1]), src.m2 + rng.choice([-1, 1]))
    return chi, src


def suite_prop55(cfg: RunConfig) -> Report:
    """The intertwiner ODE, its solutions, and the condition algebra."""
    p, N = cfg.p, cfg.trunc
    rng = cfg.rng("prop55")
    cases = _Cases(p)
    notes = []
    L = S.log1p(p, N, cfg.backend, cfg.prec)
    for c in (0, 1, 2, 3):
        sol = R.solve_ode_recursion(c, N, p, cfg.backend, cfg.prec)
        cases["ode-equals-log-power"].residuals(series_residual(sol.series, L**c))
        cases["ode-solvable"].flag(sol.solvable)
        # c_src - c_dst = 2c
        cases["ode-residual-zero"].residuals(
            list(R.ode_residual(2 * c, 0, sol.series).coeffs[: N]))
    for c in (Fraction(1, 2), Fraction(-1), Fraction(7, 3)):
        sol = R.solve_ode_recursion(c, N, p, cfg.backend, cfg.prec)
        cases["ode-no-solution"].flag(sol.no_solution and sol.series.is_zero())
    wrong = R.ode_residual(2, 0, L**2)
    cases["ode-residual-detects-wrong-power"].flag(not wrong.is_zero(wrong.reliable))

    if cfg.c is not None:
        sol = R.solve_ode_recursion(cfg.c, N, p, cfg.backend, cfg.prec)
        shown = ", ".join(str(x) for x in sol.series.coeffs[:8])
        notes.append(f"c={cfg.c} solvable={sol.solvable} coefficients=[{shown}, ...]")
        k = R._as_nonneg_int(Fraction(cfg.c))
        if k is not None:
            cases[f"ode-c={cfg.c}-matches-log1p"].residuals(series_residual(sol.series, L**k))

    for _ in range(100):
        chi, src = _random_pair(rng)
        bundle = R.cond_central(chi, src) and R.cond_ode(chi, src) and R.cond_diag(chi, src)
        cases["condition-bundle-equivalence"].flag(bundle == R.cond_twist(chi, src))

    for m1 in range(-5, 6):
        for m2 in range(-5, 6):
            chi = Character(m1, m2)
            for k in range(1, 8):
                src = eps_twist(chi, -k)
                if R.hom_dim("minus", "minus", src, chi):
                    cases["hom-dim-fixes-m"].flag((chi.c - src.c) // 2 == chi.c + 1)

    # derivative formula for the upper unipotent action at a = 0
    deg = 10
    for c in (-2, -1, 0, 1, 2, 3):
        chi = Character(0, c)
        for b in (p, 2 * p, Fraction(p * p, 3 if p != 3 else 2)):
            f = PolyFunction.from_values([random_rational(rng, p) for _ in range(7)], p, deg)
            gf = R.rho_upper_unip(chi, b, f)
            res = []
            for m in range(0, 6):
                lhs = gf.coeffs[m] * math.factorial(m)
                rhs = PadicScalar.exact_value(0, p)
                for i in range(m + 1):
                    di = f.coeffs[i] * math.factorial(i) if i <= f.N else 0
                    rhs = rhs + di * (c_coeff(i, m, c) * (-1) ** (m + i) * Fraction(b) ** (m - i))
                res.append(lhs - rhs)
            cases["upper-unip-derivative-formula"].residuals(res)
    for m in range(1, 8):
        cases["derivative-formula-collapses"].residuals(
            [c_coeff(i, m, m - 1) for i in range(m)])

    for k in range(4):
        F = L**k
        chi = Character(rng.randint(-3, 3), rng.randint(-3, 3))
        b = random_unit(rng, p)
        lhs = R.dual_diag(chi, b, F)
        cases["log-power-eigenfunction"].residuals(
            series_residual(lhs, F * (Fraction(b) ** (k - chi.m2))))
    return _report("prop55", cfg, cases, notes)


# -- casimir -------------------------------------------------------------------------------------

def suite_casimir(cfg: RunConfig) -> Report:
    """The Casimir acts by ``(c/2 + 1) c`` on the minus side and ``(c/2 - 1) c`` on plus."""
    p = cfg.p
    cases = _Cases(p)
    deg = 10
    budget = deg + 2
    cas = U.casimir()
    for c in range(-3, 4):
        chi = Character(0, c)
        for side in R.SIDES:
            res, meas = [], set()
            scalar = R.casimir_scalar(chi, side)
            for k in range(deg + 1):
                f = _mono(k, p, budget)
                h = R.rho_h(chi, R.rho_h(chi, f, side), side)
                up_um = R.rho_uplus(R.rho_uminus(chi, f, side), chi, side)
                um_up = R.rho_uminus(chi, R.rho_uplus(f, chi, side), side)
                out = h * Fraction(1, 2) + up_um + um_up
                res += (out - f * scalar).lifts()
                meas.add(out.lifts()[k])
                res += (R.rho_element(cas, chi, f, side) - f * scalar).lifts()
            cases[f"function-side-{side}"].residuals(res)
            cases["table-matches-measured"].flag(meas == {scalar})
            closed = (Fraction(c, 2) + (1 if side == "minus" else -1)) * c
            cases["table-formula"].flag(scalar == closed)
    rng = cfg.rng("casimir")
    N = max(cfg.trunc, 16)
    for _ in range(3):
        F = random_series(rng, cfg, N)
        chi = Character(rng.randint(-4, 4), rng.randint(-4, 4))
        for side in R.SIDES:
            G = R.dual_element(cas, chi, F, side)
            cases[f"dual-side-{side}"].residuals(
                series_residual(G, F * R.casimir_scalar(chi, side)))
    return _report("casimir", cfg, cases)


# -- pbw-ad -----------------------------------------------------------------------------------------

def suite_pbw_ad(cfg: RunConfig) -> Report:
    """PBW algebra checks and the representation property on both charts."""
    p = cfg.p
    cases = _Cases(p)
    ms = [cfg.m] if cfg.m is not None else [0, -1, -2, -3]
    for m in ms:
        cases["ad-identity"].residuals(U.ad_identity_check(m).terms.values())
    gens = [U.PBWElement.gen(g) for g in U.GENERATORS]
    for i, x in enumerate(gens):
        for j, y in enumerate(gens):
            lie = U.decompose(U.matrix_bracket(U._MATRICES[i], U._MATRICES[j]))
            expect = sum((U.PBWElement.gen(g) * q for g, q in lie.items()), U.PBWElement())
            cases["structure-constants"].residuals(
                (U.bracket(x, y) - expect).terms.values())
    for x in gens:
        for y in gens:
            for z in gens:
                jac = (U.bracket(x, U.bracket(y, z)) + U.bracket(y, U.bracket(z, x))
                       + U.bracket(z, U.bracket(x, y)))
                cases["jacobi"].residuals(jac.terms.values())
    cas = U.casimir()
    for x in gens:
        cases["casimir-central"].residuals(U.bracket(cas, x).terms.values())

    deg = 10
    budget = deg + 2
    for chi in (Character(0, 0), Character(1, 3), Character(2, -1), Character(-3, 1)):
        for side in R.SIDES:
            res = []
            for i, x in enumerate(U.GENERATORS):
                for j, y in enumerate(U.GENERATORS):
                    br = U.bracket(gens[i], gens[j])
                    for k in range(deg + 1):
                        f = _mono(k, p, budget)
                        lhs = (R.rho(x, chi, R.rho(y, chi, f, side), side)
                               - R.rho(y, chi, R.rho(x, chi, f, side), side))
                        res += (lhs - R.rho_element(br, chi, f, side)).lifts()
            cases[f"function-brackets-{side}"].residuals(res)

    rng = cfg.rng("pbw-ad")
    N = max(cfg.trunc, 16)
    F = random_series(rng, cfg, N)
    chi = Character(1, -2)
    for side in R.SIDES:
        for i, x in enumerate(U.GENERATORS):
            for j, y in enumerate(U.GENERATORS):
                br = U.bracket(gens[i], gens[j])
                lhs = (R.dual_action(x, chi, R.dual_action(y, chi, F, side), side)
                       - R.dual_action(y, chi, R.dual_action(x, chi, F, side), side))
                cases[f"dual-brackets-{side}"].residuals(
                    series_residual(lhs, R.dual_element(br, chi, F, side)))
    return _report("pbw-ad", cfg, cases)


# -- haar -----------------------------------------------------------------------------------------------

def haar_kernel(N: int, p: int = 5) -> list[list[Fraction]]:
    """Basis of the kernel of ``translate(1) - id`` on series of order ``N``.

    ``F -> (1+T)F - F`` is computed into order ``N + 1`` so the product is
    never cut: at order ``N`` the truncation alone would put ``T^N`` in the
    kernel.
    """
    cols = []
    for j in range(N + 1):
        e = S.TruncatedSeries.from_values([0] * j + [1], p, N + 1)
        cols.append((S.translate(1, e) - e).lifts())
    A = sympy.Matrix(N + 2, N + 1, lambda i, j: sympy.Rational(cols[j][i].numerator,
                                                                cols[j][i].denominator))
    return [[Fraction(int(x.p), int(x.q)) for x in v] for v in A.nullspace()]


def suite_haar(cfg: RunConfig) -> Report:
    """No nonzero distribution on Z_p is translation invariant."""
    cases = _Cases(cfg.p)
    ker = haar_kernel(cfg.trunc, cfg.p)
    cases["kernel-is-zero"].flag(not ker)
    # translating a nonzero series always changes it
    rng = cfg.rng("haar")
    for _ in range(10):
        F = random_series(rng, cfg, cfg.trunc)
        if F.is_zero():
            continue
        G = S.translate(1, F)
        cases["translate-moves-nonzero"].flag(not (G - F).is_zero())
    dim = len(ker)
    notes = [f"kernel of translate(1) - id at N={cfg.trunc}: "
             + ("{0}" if not dim else f"dimension {dim}")]
    return _report("haar", cfg, cases, notes, constants=False)


# -- homdims ------------------------------------------------------------------------------------------

def _grid(bound: int = 5) -> list[Character]:
    return [Character(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]


@lru_cache(maxsize=None)
def _log_power_killed(c: int, m: int) -> bool:
    """Whether ``u-`` on ``M^-`` with ``c(chi) = c`` kills ``log(1+T)^m``."""
    N = 2 * m + 8
    F = R.solve_ode_recursion(m, N, 5).series
    G = R.dual_uminus(Character(0, c), F)
    return not F.is_zero() and G.is_zero(G.reliable)


def _oracle_minus(src: Character, dst: Character) -> int:
    if not (R.cond_central(dst, src) and R.cond_ode(dst, src) and R.cond_diag(dst, src)):
        return 0
    m = (dst.c - src.c) // 2
    return int(m >= 1 and _log_power_killed(dst.c, m))


def _oracle_plus(src: Character, dst: Character) -> int:
    return _oracle_minus(weyl_twist(src), weyl_twist(dst))


@lru_cache(maxsize=None)
def _intertwiner_ok(chi: Character) -> tuple[bool, Character]:
    rep = R.intertwiner_residuals(chi, degree=6)
    return rep.all_zero and rep.nonzero_map, rep.chi_prime


def _oracle_full(src: Character, dst: Character) -> int:
    if not _oracle_plus(src, dst):
        return 0
    ok, target = _intertwiner_ok(dst)
    return int(ok and target == src)


def suite_homdims(cfg: RunConfig) -> Report:
    """``hom_dim`` against witness computations over ``|m1|, |m2| <= 5``."""
    cases = _Cases(cfg.p)
    grid = _grid(5)
    mixed_zero = not haar_kernel(16, cfg.p)
    for dst in grid:
        for src in grid:
            if src == dst:
                continue
            cases["minus-minus"].flag(R.hom_dim("minus", "minus", src, dst) == _oracle_minus(src, dst))
            cases["plus-plus"].flag(R.hom_dim("plus", "plus", src, dst) == _oracle_plus(src, dst))
            cases["full-full"].flag(R.hom_dim("full", "full", src, dst) == _oracle_full(src, dst))
            cases["plus-minus"].flag(R.hom_dim("plus", "minus", src, dst) == 0 and mixed_zero)
            cases["minus-plus"].flag(R.hom_dim("minus", "plus", src, dst) == 0 and mixed_zero)
    for c in (0, -1, -2):
        rep = R.intertwiner_residuals(Character(0, c))
        cases["intertwiner-residuals"].residuals(
            [q for r in rep.residuals.values() for q in r])
    nonzero = sum(R.hom_dim("minus", "minus", s, d) for d in grid for s in grid if s != d)
    return _report("homdims", cfg, cases,
                   [f"grid |m1|,|m2| <= 5: {len(grid)} characters, "
                    f"{nonzero} nonzero minus-minus pairs"], constants=False)


# -- intertwiner ------------------------------------------------------------------------------------

def _left_iterate_defect(chi: Character, degree: int = 6, p: int = 5) -> bool:
    """Whether iterating the left action of u- fails to commute with u+."""
    order = 1 - chi.c
    dst = eps_twist(chi, 1 - chi.c)
    N = degree + 2 * order + 2
    for k in range(degree + 1):
        f = _mono(k, p, N)
        lhs = _iterate(lambda g: R.rho_uminus(dst, g), R.rho_uplus(f), order)
        rhs = R.rho_uplus(_iterate(lambda g: R.rho_uminus(chi, g), f, order))
        if not (lhs - rhs).is_zero():
            return True
    return False


def suite_intertwiner(cfg: RunConfig) -> Report:
    """Equivariance of the right-derivative intertwiner for ``c(chi) <= 0``."""
    cases = _Cases(cfg.p)
    cs = [int(cfg.c)] if cfg.c is not None else [0, -1, -2]
    notes = []
    for c in cs:
        for base in (0, 2, -3):
            chi = Character(base, base + c)
            rep = R.intertwiner_residuals(chi, p=cfg.p)
            cases["residuals-zero"].residuals([q for r in rep.residuals.values() for q in r])
            cases["map-nonzero"].flag(rep.nonzero_map)
            cases["target-character"].flag(rep.chi_prime == eps_twist(chi, 1 - c))
        notes.append(f"c={c}: order {1 - c}, chi'=eps^{1 - c} chi; the left-action iterate "
                     f"{'is not' if _left_iterate_defect(Character(0, c)) else 'is'} u+-equivariant")
    return _report("intertwiner", cfg, cases, notes, constants=False)


# -- bruhat ---------------------------------------------------------------------------------------------

def suite_bruhat(cfg: RunConfig) -> Report:
    """Componentwise action on ``M^+_chi (+) M^-_{w chi}``."""
    p = cfg.p
    N = max(cfg.trunc, 16)
    rng = cfg.rng("bruhat")
    cases = _Cases(p)
    chis = [cfg.chi] if cfg.chi is not None else [Character(0, 0), Character(1, 3),
                                                   Character(2, -2), Character(-1, 4)]
    cas = U.casimir()
    for chi in chis:
        zero = R.bruhat_split(TruncatedSeries.zero(p, N, cfg.backend, cfg.prec),
                              TruncatedSeries.zero(p, N, cfg.backend, cfg.prec), chi)
        for x in U.GENERATORS:
            cases["zero-stays-zero"].flag(zero.act(x).is_zero())
        cases["zero-stays-zero"].flag(zero.act_diag(random_unit(rng, p)).is_zero())
        cases["weyl-negates-c"].flag(R.c_of(weyl_twist(chi)) == -R.c_of(chi))
        Fp, Fm = random_series(rng, cfg, N), random_series(rng, cfg, N)
        x = R.bruhat_split(Fp, Fm, chi)
        sp, sm = x.casimir_scalars()
        y = x.act_element(cas)
        cases["casimir-diagonal"].residuals(
            series_residual(y.plus, Fp * sp) + series_residual(y.minus, Fm * sm))
        cases["casimir-single-scalar"].flag(sp == sm)
        only_plus = R.bruhat_split(Fp, Fp.zero_like(), chi)
        for g in U.GENERATORS:
            z = only_plus.act(g)
            cases["componentwise"].flag(z.minus.is_zero()
                                        and z.plus == R.dual_action(g, chi, Fp, "plus"))
    return _report("bruhat", cfg, cases)


# -- precision soundness -----------------------------------------------------------------------------

def _pipelines(cfg: RunConfig):
    """Named computations run on either backend from the same exact inputs."""
    rng = cfg.rng("precision-inputs")
    p, N = cfg.p, cfg.trunc
    vals = [random_rational(rng, p) for _ in range(N + 1)]
    b = random_unit(rng, p)
    chi = Character(0, 3)

    def build(backend, prec):
        F = TruncatedSeries.from_values(vals, p, N, backend, prec)
        L = S.log1p(p, N, backend, prec)
        return {
            "dirac-product": S.mul(S.dirac(123457, p, N, backend, prec), S.dirac(-98, p, N, backend, prec)),
            "translate": S.translate(7, F),
            "pushforward": S.pushforward(b, F),
            "lie-mult": S.lie_mult(F),
            "delta": S.delta_op(F),
            "uminus-power": R.dual_uminus_power(chi, 2, F),
            "divide-log": S.divide_by_log1p(S.mul(L, F)),
            "log-cubed": L**3,
            "dual-diag": R.dual_diag(chi, b, F),
            "ode": R.solve_ode_recursion(2, N, p, backend, prec).series,
        }
    return build


def suite_precision(cfg: RunConfig) -> Report:
    """Approximate results agree with exact ones modulo their reported precision."""
    cfg_a = replace(cfg, backend="approx", prec=max(cfg.prec, 4))
    cases = _Cases(cfg.p)
    build = _pipelines(cfg)
    exact, approx = build("exact", cfg.prec), build("approx", cfg_a.prec)
    for name in exact:
        E, A = exact[name], approx[name]
        res = [a - e.lift() for a, e in zip(A.coeffs[: A.reliable + 1], E.coeffs)]
        cases[f"agree[{name}]"].residuals(res)
    for p in PRIMES:
        for N in (p**2, p**3):
            for M in (cfg_a.prec, 2 * cfg_a.prec):
                base = polygon(S.log1p(p, N, "approx", M))
                big = polygon(S.log1p(p, 2 * N, "approx", 2 * M))
                kept = [s for s in base.segments if s.certified]
                cases["doubling-N-M"].flag(list(big.segments[: len(kept)]) == kept)
                ex = polygon(S.log1p(p, N))
                cases["approx-polygon-matches-exact"].flag(
                    [s for s in ex.segments if s.certified] == kept)
    for name in APPROX_SUITES:
        rep = SUITES[name](cfg_a)
        cases[f"suite-approx[{name}]"].flag(rep.passed)
    return _report("precision", cfg_a, cases, constants=False)


SUITES: dict[str, Callable[[RunConfig], Report]] = {
    "amice-ring": suite_amice_ring,
    "lemma43": suite_lemma43,
    "newton-log": suite_newton_log,
    "lemma53": suite_lemma53,
    "thm54-congruence": suite_thm54,
    "prop55": suite_prop55,
    "casimir": suite_casimir,
    "pbw-ad": suite_pbw_ad,
    "haar": suite_haar,
    "homdims": suite_homdims,
    "intertwiner": suite_intertwiner,
    "bruhat": suite_bruhat,
    "precision": suite_precision,
}

# suites whose computations depend on the backend
APPROX_SUITES = ("amice-ring", "lemma43", "newton-log", "thm54-congruence",
                 "prop55", "casimir", "bruhat")


def run_suite(name: str, cfg: RunConfig) -> Report:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](replace(cfg, suite=name))
