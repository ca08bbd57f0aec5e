"""Iwahori principal series of GL_2(Q_p) at desk scale.

Function side: locally analytic functions on the chart ``a -> (1 0; a 1)``
are modelled by polynomials in ``a`` of degree <= N (:class:`PolyFunction`).
With ``D = d/da`` and ``Theta = a*``, the Lie algebra acts on the chart of
``Ind_{P^-}(chi)`` (the *minus* side) by::

    u+ -> -D        h -> -c + 2 Theta D        u- -> -c Theta + Theta^2 D
    e  -> m1 + m2

where ``c = c(chi) = m2 - m1``. The *plus* side (induction from the lower
Borel, chart ``a -> (1 a; 0 1)``) uses the same dictionary twisted by the
swap ``u+ <-> u-, h -> -h`` and ``c -> -c``.

Dual side: the module ``M^-_chi`` is ``D(Z_p, K)``; ``x.lam = -lam o rho(x)``
for Lie elements and ``g.lam = lam o rho(g^-1)`` for group elements, which
in the Fourier picture gives the Delta/log(1+T) formulas below. Two sign
constants are fixed by the moment-pairing checks in ``verify``:
``DUAL_UPLUS_SIGN`` (u+ acts by ``+log(1+T)``) and ``LOWER_UNIPOTENT_SHIFT``
(``(1 0; b 1)`` acts on the chart by ``a -> a - b``, on the dual by
``translate(+b)``).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import series as S
from .errors import DegreeOverflowError, DomainError, ParseError, PrecisionError
from .padic import PadicScalar, as_scalar
from .series import TruncatedSeries
from .uea import GENERATORS, PBWElement

DUAL_UPLUS_SIGN = 1
LOWER_UNIPOTENT_SHIFT = 1
SIDES = ("plus", "minus")


# -- characters ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Character:
    """Algebraic character ``diag(t1, t2) -> t1^m1 * t2^m2`` of the torus."""

    m1: int
    m2: int

    @property
    def c(self) -> int:
        return self.m2 - self.m1

    def __call__(self, t1, t2):
        return Fraction(t1) ** self.m1 * Fraction(t2) ** self.m2

    def __str__(self):
        return f"chi({self.m1},{self.m2})"


def c_of(chi: Character) -> int:
    return chi.c


def eps_twist(chi: Character, k: int) -> Character:
    """``eps^k * chi`` with ``eps(diag(t1, t2)) = t2/t1``; raises ``c`` by ``2k``."""
    return Character(chi.m1 - k, chi.m2 + k)


def weyl_twist(chi: Character) -> Character:
    return Character(chi.m2, chi.m1)


_CHI_RE = re.compile(r"^\s*(?:chi\()?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*$")


def parse_character(text: str) -> Character:
    m = _CHI_RE.match(text)
    if not m or (text.strip().startswith("chi(") != text.strip().endswith(")")):
        raise ParseError(f"bad character {text!r}; expected chi(m1,m2) or m1,m2")
    return Character(int(m.group(1)), int(m.group(2)))


# -- polynomial functions on the chart ------------------------------------------

@dataclass(frozen=True)
class PolyFunction:
    """Polynomial ``sum coeffs[j] a^j`` with degree budget ``N = len(coeffs) - 1``.

    ``truncated`` marks results of operators (like unipotent translations)
    whose exact value is a power series cut at degree ``N``.
    """

    coeffs: tuple[PadicScalar, ...]
    p: int
    truncated: bool = field(default=False, compare=False)

    @classmethod
    def from_values(cls, values: Iterable, p: int, N: int) -> PolyFunction:
        vals = list(values)
        if any(as_scalar(v, p) != 0 for v in vals[N + 1:]):
            raise DegreeOverflowError(f"polynomial of degree > {N}")
        vals = vals[: N + 1] + [0] * (N + 1 - len(vals))
        return cls(tuple(as_scalar(v, p) for v in vals), p)

    @classmethod
    def monomial(cls, k: int, p: int, N: int) -> PolyFunction:
        return cls.from_values([0] * k + [1], p, N)

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def degree(self) -> int:
        return max((j for j, c in enumerate(self.coeffs) if not c.is_zero()), default=-1)

    def like(self, values, truncated=None) -> PolyFunction:
        out = PolyFunction.from_values(values, self.p, self.N)
        if truncated or (truncated is None and self.truncated):
            object.__setattr__(out, "truncated", True)
        return out

    def lifts(self) -> list[Fraction]:
        return [c.lift() for c in self.coeffs]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: PolyFunction):
        return self.like([a + b for a, b in zip(self.coeffs, other.coeffs)],
                         self.truncated or other.truncated)

    def __neg__(self):
        return self.like([-c for c in self.coeffs])

    def __sub__(self, other: PolyFunction):
        return self + (-other)

    def __mul__(self, q):
        return self.like([c * q for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x):
        acc = PadicScalar.exact_value(0, self.p)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_D(f: PolyFunction) -> PolyFunction:
    return f.like([f.coeffs[j + 1] * (j + 1) for j in range(f.N)])


def rho_theta(f: PolyFunction) -> PolyFunction:
    """``Theta f = a * f``; raises the degree by one."""
    if not f.coeffs[-1].is_zero():
        raise DegreeOverflowError(f"Theta would exceed degree budget {f.N}")
    return f.like([0] + list(f.coeffs[:-1]))


def _chi(chi) -> Character:
    return chi if isinstance(chi, Character) else Character(*chi)


def rho_uplus(f: PolyFunction, chi: Character | None = None, side: str = "minus") -> PolyFunction:
    """Action of ``u+`` on the chart. Minus side: ``-df/da``."""
    if side == "minus":
        return -poly_D(f)
    chi = _chi(chi)
    return rho_theta(f) * chi.c + rho_theta(rho_theta(poly_D(f)))


def rho_uminus(chi: Character, f: PolyFunction, side: str = "minus") -> PolyFunction:
    """Action of ``u-``. Minus side: ``-c Theta f - Theta^2 (u+ f)``."""
    chi = _chi(chi)
    if side == "plus":
        return -poly_D(f)
    return rho_uminus_c(chi.c, f)


def rho_uminus_c(c, f: PolyFunction) -> PolyFunction:
    """Minus-chart ``u-`` for an arbitrary (possibly non-integral) ``c``."""
    return rho_theta(f) * (-Fraction(c)) - rho_theta(rho_theta(rho_uplus(f)))


def rho_h(chi: Character, f: PolyFunction, side: str = "minus") -> PolyFunction:
    """Action of ``h``. Minus side: ``-c f + 2 a f'``; plus side: ``-c f - 2 a f'``."""
    chi = _chi(chi)
    sign = 2 if side == "minus" else -2
    return f * (-chi.c) + rho_theta(poly_D(f)) * sign


def rho_e(chi: Character, f: PolyFunction, side: str = "minus") -> PolyFunction:
    chi = _chi(chi)
    return f * (chi.m1 + chi.m2)


def rho(x: str, chi: Character, f: PolyFunction, side: str = "minus") -> PolyFunction:
    """Action of the generator named ``x`` in ``('up', 'h', 'e', 'um')``."""
    _check_side(side)
    if x == "up":
        return rho_uplus(f, chi, side)
    if x == "h":
        return rho_h(chi, f, side)
    if x == "e":
        return rho_e(chi, f, side)
    if x == "um":
        return rho_uminus(chi, f, side)
    raise DomainError(f"unknown generator {x!r}")


def rho_element(z: PBWElement, chi: Character, f: PolyFunction,
                side: str = "minus") -> PolyFunction:
    """Action of an element of U(gl_2); rightmost factors act first."""
    acc = f.like([])
    for mono, q in z.terms.items():
        g = f
        for gen_index in reversed(range(4)):
            for _ in range(mono[gen_index]):
                g = rho(GENERATORS[gen_index], chi, g, side)
        acc = acc + g * q
    return acc


def _check_side(side: str):
    if side not in SIDES:
        raise DomainError(f"side must be 'plus' or 'minus', got {side!r}")


def _substitute_scaled(f: PolyFunction, s) -> PolyFunction:
    # f(s * a)
    return f.like([c * s**j for j, c in enumerate(f.coeffs)])


def _require_unit(b, p: int) -> PadicScalar:
    b = as_scalar(b, p)
    if b.is_zero() or b.valuation() != 0:
        raise DomainError(f"{b} is not a p-adic unit for p={p}")
    return b


def rho_diag(chi: Character, b, f: PolyFunction, side: str = "minus") -> PolyFunction:
    """Action of ``diag(1, b)`` for a unit ``b``.

    Minus side: ``b^m2 f(a/b)``. Plus side: ``b^m2 f(a*b)``.
    """
    chi = _chi(chi)
    _check_side(side)
    b = _require_unit(b, f.p)
    g = _substitute_scaled(f, 1 / b if side == "minus" else b)
    return g * b**chi.m2


def rho_lower_unip(b, f: PolyFunction) -> PolyFunction:
    """Action of ``(1 0; b 1)`` on the minus chart: ``f(a - b)``."""
    b = as_scalar(b, f.p)
    shift = -b * LOWER_UNIPOTENT_SHIFT
    out = [PadicScalar.exact_value(0, f.p)] * (f.N + 1)
    for j, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        for i in range(j + 1):
            out[i] = out[i] + c * math.comb(j, i) * shift ** (j - i)
    return f.like(out)


def _trunc_mul(x: list, y: list, N: int, zero) -> list:
    out = [zero] * (N + 1)
    for i, a in enumerate(x):
        if a.is_zero():
            continue
        for j in range(N + 1 - i):
            out[i + j] = out[i + j] + a * y[j]
    return out


def rho_upper_unip(chi: Character, b, f: PolyFunction) -> PolyFunction:
    """Action of ``(1 b; 0 1)``, ``v(b) >= 1``, on the minus chart.

    ``(1 - ab)^c f(a / (1 - ab))`` expanded as a power series in ``a`` and
    cut at the degree budget; the result is flagged ``truncated``.
    """
    chi = _chi(chi)
    p, N = f.p, f.N
    b = as_scalar(b, p)
    if not b.is_zero() and b.valuation() < 1:
        raise DomainError("upper unipotent parameter needs v(b) >= 1")
    zero = PadicScalar.exact_value(0, p)
    one = PadicScalar.exact_value(1, p)
    geom = [b**k for k in range(N + 1)]            # 1/(1 - ab)
    base = [one, -b] + [zero] * (N - 1)             # 1 - ab
    factor = [one] + [zero] * N
    step = base if chi.c >= 0 else geom
    for _ in range(abs(chi.c)):
        factor = _trunc_mul(factor, step, N, zero)
    arg = [zero] + geom[:N]                          # a/(1 - ab)
    comp = [zero] * (N + 1)
    power = [one] + [zero] * N
    for j, c in enumerate(f.coeffs):
        if j:
            power = _trunc_mul(power, arg, N, zero)
        if not c.is_zero():
            comp = [u + c * v for u, v in zip(comp, power)]
    return f.like(_trunc_mul(factor, comp, N, zero), truncated=True)


# -- the c_i coefficients -------------------------------------------------------

def gen_binom(x, k: int) -> Fraction:
    """``x(x-1)...(x-k+1)/k!`` for rational ``x``."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    num = Fraction(1)
    for j in range(k):
        num *= x - j
    return num / math.factorial(k)


def c_coeff(i: int, n: int, c) -> Fraction:
    """``(n!/i!) * binom(c - i, n - i)`` for ``0 <= i <= n``."""
    if not 0 <= i <= n:
        raise DomainError(f"c_coeff needs 0 <= i <= n, got i={i}, n={n}")
    return Fraction(math.factorial(n), math.factorial(i)) * gen_binom(Fraction(c) - i, n - i)


def falling(c, m: int) -> Fraction:
    """``c (c-1) ... (c-m+1)``."""
    out = Fraction(1)
    for i in range(m):
        out *= Fraction(c) - i
    return out


# -- dual (Fourier) side --------------------------------------------------------

def _log_like(F: TruncatedSeries) -> TruncatedSeries:
    return S.log1p(F.p, F.N, F.backend, F.prec)


def dual_uplus(F: TruncatedSeries, chi: Character | None = None,
               side: str = "minus") -> TruncatedSeries:
    """``u+`` on ``M^-``: multiplication by ``log(1+T)`` (sign ``DUAL_UPLUS_SIGN``)."""
    if side == "minus":
        return S.lie_mult(F) * DUAL_UPLUS_SIGN
    chi = _chi(chi)
    dF = S.delta_op(F)
    return -(dF * chi.c + S.mul(_log_like(F), S.delta_op(dF)))


def dual_h(chi: Character, F: TruncatedSeries, side: str = "minus") -> TruncatedSeries:
    """Minus side: ``c F - 2 log(1+T) Delta F``; plus side: ``c F + 2 log(1+T) Delta F``."""
    chi = _chi(chi)
    sign = -2 if side == "minus" else 2
    return F * chi.c + S.mul(_log_like(F), S.delta_op(F)) * sign


def dual_e(chi: Character, F: TruncatedSeries, side: str = "minus") -> TruncatedSeries:
    chi = _chi(chi)
    return F * (-(chi.m1 + chi.m2))


def dual_uminus_power(chi: Character, m: int, F: TruncatedSeries) -> TruncatedSeries:
    """``(u-)^m`` on ``M^-_chi``: ``sum_i (-1)^i c_i^(m) log(1+T)^i Delta^(m+i) F``.

    Costs ``2m`` orders of reliability.
    """
    chi = _chi(chi)
    if m < 0:
        raise DomainError("power must be nonnegative")
    if F.reliable < 2 * m:
        raise PrecisionError(f"(u-)^{m} needs reliable order >= {2 * m}, have {F.reliable}")
    L = _log_like(F)
    deltas = [F]
    for _ in range(2 * m):
        deltas.append(S.delta_op(deltas[-1]))
    acc = F.zero_like()
    logp = F.one_like()
    for i in range(m + 1):
        if i:
            logp = S.mul(logp, L)
        coef = c_coeff(i, m, chi.c) * (-1) ** i
        if coef:
            acc = acc + S.mul(logp, deltas[m + i]) * coef
    return TruncatedSeries(acc.coeffs, acc.p, acc.backend, acc.prec, F.reliable - 2 * m)


def dual_uminus(chi: Character, F: TruncatedSeries, side: str = "minus") -> TruncatedSeries:
    if side == "minus":
        return dual_uminus_power(chi, 1, F)
    return S.lie_mult(F)


def dual_diag(chi: Character, b, F: TruncatedSeries, side: str = "minus") -> TruncatedSeries:
    """``diag(1, b)`` on the dual: minus side ``b^-m2 F((1+T)^b - 1)``.

    On the plus side the pushforward is along ``1/b``.
    """
    chi = _chi(chi)
    _check_side(side)
    b = _require_unit(b, F.p)
    target = b if side == "minus" else 1 / b
    return S.pushforward(target, F) * b ** (-chi.m2)


def dual_lower_unip(b, F: TruncatedSeries) -> TruncatedSeries:
    """``(1 0; b 1)`` on ``M^-``: ``(1+T)^b F``."""
    return S.translate(as_scalar(b, F.p) * LOWER_UNIPOTENT_SHIFT, F)


def dual_action(x: str, chi: Character, F: TruncatedSeries, side: str = "minus") -> TruncatedSeries:
    _check_side(side)
    if x == "up":
        return dual_uplus(F, chi, side)
    if x == "h":
        return dual_h(chi, F, side)
    if x == "e":
        return dual_e(chi, F, side)
    if x == "um":
        return dual_uminus(chi, F, side)
    raise DomainError(f"unknown generator {x!r}")


def dual_element(z: PBWElement, chi: Character, F: TruncatedSeries,
                 side: str = "minus") -> TruncatedSeries:
    """Module action of ``z`` on the dual; rightmost factors act first."""
    acc = None
    for mono, q in z.terms.items():
        G = F
        for gen_index in reversed(range(4)):
            for _ in range(mono[gen_index]):
                G = dual_action(GENERATORS[gen_index], chi, G, side)
        acc = G * q if acc is None else acc + G * q
    return F.zero_like() if acc is None else acc


# -- Casimir ------------------------------------------------------------------------

def casimir_scalar(chi: Character, side: str) -> Fraction:
    """Scalar by which the Casimir acts: ``(c/2 - 1) c`` on plus, ``(c/2 + 1) c`` on minus."""
    _check_side(side)
    c = Fraction(_chi(chi).c)
    return (c / 2 - 1) * c if side == "plus" else (c / 2 + 1) * c


# -- the intertwiner ODE ------------------------------------------------------------

@dataclass(frozen=True)
class OdeSolution:
    series: TruncatedSeries
    solvable: bool

    @property
    def no_solution(self) -> bool:
        return not self.solvable


def _as_nonneg_int(c: Fraction) -> int | None:
    return int(c) if c.denominator == 1 and c >= 0 else None


def solve_ode_recursion(c, N: int, p: int = 2, backend: str = "exact",
                        prec: int = S.DEFAULT_PREC) -> OdeSolution:
    """Coefficients of a series solution of the intertwiner ODE.

    ``c a_0 = 0`` and ``(n - c) a_n = sum_{i=1}^{n-1} (-1)^i (n-i)/(i(i+1)) a_{n-i}``.
    For ``c`` not in N_0 every coefficient is forced to zero. Otherwise
    ``a_c = 1`` and the ``n = c`` step, which would divide by zero, is skipped.
    """
    c = Fraction(c)
    k = _as_nonneg_int(c)
    a: list[Fraction] = []
    for n in range(N + 1):
        if k is not None and n == k:
            a.append(Fraction(1))
            continue
        rhs = sum((Fraction((-1) ** i * (n - i), i * (i + 1)) * a[n - i]
                   for i in range(1, n)), Fraction(0))
        a.append(rhs / (n - c))
    F = TruncatedSeries.from_values(a, p, N, backend, prec)
    return OdeSolution(F, k is not None)


def ode_residual(c_src, c_dst, F: TruncatedSeries) -> TruncatedSeries:
    """``(c_dst - c_src)/2 * F + (1+T) log(1+T) dF/dT``."""
    half = (Fraction(c_dst) - Fraction(c_src)) / 2
    return F * half + S.mul(_log_like(F), S.delta_op(F))


# -- hom classification -------------------------------------------------------------

def cond_central(chi_dst: Character, chi_src: Character) -> bool:
    """Both characters agree on scalar matrices ``b * 1`` for units ``b``."""
    return chi_dst.m1 + chi_dst.m2 == chi_src.m1 + chi_src.m2


def cond_ode(chi_dst: Character, chi_src: Character) -> bool:
    """``c(chi) - c(chi') in 2 N_0`` (the ODE has a nonzero solution)."""
    d = chi_dst.c - chi_src.c
    return d >= 0 and d % 2 == 0


def cond_diag(chi_dst: Character, chi_src: Character) -> bool:
    """``chi'(diag(1,b)) = b^((c'-c)/2) chi(diag(1,b))`` for all units ``b``."""
    d = chi_src.c - chi_dst.c
    return d % 2 == 0 and chi_src.m2 == d // 2 + chi_dst.m2


def cond_twist(chi_dst: Character, chi_src: Character) -> bool:
    """``chi' = eps^(-m) chi`` for some ``m in N_0``."""
    m = chi_src.m1 - chi_dst.m1
    return m >= 0 and chi_src == eps_twist(chi_dst, -m)


def hom_dim(source_side: str, target_side: str, chi_src: Character, chi_dst: Character) -> int:
    """``dim Hom(M^source_{chi_src}, M^target_{chi_dst})`` for algebraic characters.

    Sides are ``plus``, ``minus`` or ``full`` (the GL_2(Q_p) module). Mixed
    plus/minus pairs are always 0. Equal characters are rejected for
    same-side pairs: the classification is stated for distinct characters.
    """
    chi_src, chi_dst = _chi(chi_src), _chi(chi_dst)
    sides = {source_side, target_side}
    if not sides <= {"plus", "minus", "full"}:
        raise DomainError(f"bad sides {source_side!r}, {target_side!r}")
    if "full" in sides and sides != {"full"}:
        raise DomainError("the full module is only compared with itself")
    if sides == {"plus", "minus"}:
        return 0
    if chi_src == chi_dst:
        raise DomainError("classification is stated for distinct characters")
    c = chi_dst.c
    if source_side == "minus":
        return int(c >= 0 and chi_src == eps_twist(chi_dst, -1 - c))
    return int(c <= 0 and chi_src == eps_twist(chi_dst, 1 - c))


# -- intertwiner equivariance -------------------------------------------------------

@dataclass
class IntertwinerReport:
    chi: Character
    chi_prime: Character
    order: int
    residuals: dict[str, list[Fraction]]
    nonzero_map: bool

    @property
    def all_zero(self) -> bool:
        return all(all(q == 0 for q in r) for r in self.residuals.values())


INTERTWINER_UNITS = (Fraction(2), Fraction(-1), Fraction(7, 3))


def intertwiner_op(f: PolyFunction, order: int, side: str) -> PolyFunction:
    """Right action of ``(u-)^order`` on a Bruhat chart.

    On the minus chart ``(1 0; a 1) w`` it is ``(-D)^order``, on the plus
    chart ``(1 a; 0 1)`` it is ``D^order``.
    """
    g = f
    for _ in range(order):
        g = poly_D(g)
    return g * (-1) ** order if side == "minus" else g


def intertwiner_residuals(chi: Character, degree: int = 10, p: int = 5,
                          units: Sequence = INTERTWINER_UNITS) -> IntertwinerReport:
    """Equivariance defects of ``I = (u-)^(1-c)`` from ``chi`` to ``eps^(1-c) chi``.

    ``I`` acts through right derivatives, so on each Bruhat summand it is a
    constant-coefficient operator (see :func:`intertwiner_op`). For the plus
    summand (character ``chi``) and the minus summand (character ``w chi``)
    we compute ``I o rho_src(x) - rho_dst(x) o I`` on ``a^k``, ``k <= degree``,
    for ``x`` in u+, h, e, u- and ``diag(1, b)``.
    """
    chi = _chi(chi)
    c = chi.c
    if c > 0:
        raise DomainError(f"intertwiner needs c(chi) <= 0, got {c}")
    order = 1 - c
    chi_prime = eps_twist(chi, 1 - c)
    N = max(degree, order) + 2
    residuals: dict[str, list[Fraction]] = {}
    nonzero = False
    for side, src, dst in (("plus", chi, chi_prime),
                           ("minus", weyl_twist(chi), weyl_twist(chi_prime))):
        for x in GENERATORS:
            defect = []
            for k in range(degree + 1):
                f = PolyFunction.monomial(k, p, N)
                lhs = intertwiner_op(rho(x, src, f, side), order, side)
                rhs = rho(x, dst, intertwiner_op(f, order, side), side)
                defect += (lhs - rhs).lifts()
            residuals[f"{side}:{x}"] = defect
        for b in units:
            defect = []
            for k in range(degree + 1):
                f = PolyFunction.monomial(k, p, N)
                lhs = intertwiner_op(rho_diag(src, b, f, side), order, side)
                rhs = rho_diag(dst, b, intertwiner_op(f, order, side), side)
                defect += (lhs - rhs).lifts()
            residuals[f"{side}:diag(1,{b})"] = defect
        nonzero = nonzero or not intertwiner_op(
            PolyFunction.monomial(order, p, N), order, side).is_zero()
    return IntertwinerReport(chi, chi_prime, order, residuals, nonzero)


# -- Bruhat decomposition -----------------------------------------------------------

@dataclass(frozen=True)
class BruhatElement:
    """Element of ``M_chi = M^+_chi (+) M^-_{w chi}`` as a pair of Fourier series."""

    plus: TruncatedSeries
    minus: TruncatedSeries
    chi: Character

    @property
    def chi_plus(self) -> Character:
        return self.chi

    @property
    def chi_minus(self) -> Character:
        return weyl_twist(self.chi)

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def act(self, x: str) -> BruhatElement:
        """Componentwise action of a Lie generator."""
        return BruhatElement(dual_action(x, self.chi_plus, self.plus, "plus"),
                             dual_action(x, self.chi_minus, self.minus, "minus"), self.chi)

    def act_element(self, z: PBWElement) -> BruhatElement:
        return BruhatElement(dual_element(z, self.chi_plus, self.plus, "plus"),
                             dual_element(z, self.chi_minus, self.minus, "minus"), self.chi)

    def act_diag(self, b) -> BruhatElement:
        return BruhatElement(dual_diag(self.chi_plus, b, self.plus, "plus"),
                             dual_diag(self.chi_minus, b, self.minus, "minus"), self.chi)

    def casimir_scalars(self) -> tuple[Fraction, Fraction]:
        return casimir_scalar(self.chi_plus, "plus"), casimir_scalar(self.chi_minus, "minus")


def bruhat_split(F_plus: TruncatedSeries, F_minus: TruncatedSeries, chi: Character) -> BruhatElement:
    return BruhatElement(F_plus, F_minus, _chi(chi))
