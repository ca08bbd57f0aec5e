"""Distributions on Z_p in their Fourier picture: power series in T.

A distribution ``lam`` is stored as ``F(T) = sum_n lam(binom(a, n)) T^n``
truncated at order ``N``. Dirac measures are ``(1+T)^a``, convolution is the
series product, and the module-level functions implement the operator
dictionary (translation, the Lie generator, pushforward along ``a -> b*a``,
and ``Delta = (1+T) d/dT``, the transpose of ``f(a) -> a*f(a)``).

Every series carries a ``reliable`` index: coefficients with index ``<=
reliable`` are exact (or correct to their stated precision); higher ones may
be contaminated by the truncation. Differentiation lowers it by one instead
of shrinking the vector.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, PrecisionError, ShapeError
from .padic import PadicScalar, as_scalar, binom

BACKENDS = ("exact", "approx")
DEFAULT_PREC = 20


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[PadicScalar, ...]
    p: int
    backend: str = "exact"
    prec: int = DEFAULT_PREC
    reliable: int | None = None

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise DomainError(f"unknown backend {self.backend!r}")
        if len(self.coeffs) < 1:
            raise ShapeError("a series needs at least one coefficient")
        for c in self.coeffs:
            if c.p != self.p:
                raise ShapeError("coefficient prime differs from series prime")
        if self.reliable is None or self.reliable > self.N:
            object.__setattr__(self, "reliable", self.N)
        elif self.reliable < -1:
            object.__setattr__(self, "reliable", -1)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_values(cls, values: Iterable, p: int, N: int, backend: str = "exact",
                    prec: int = DEFAULT_PREC) -> TruncatedSeries:
        """Build from ints/Fractions/scalars; missing entries are zero, extra ones dropped."""
        vals = list(values)[: N + 1]
        vals += [0] * (N + 1 - len(vals))
        return cls(tuple(_coef(v, p, backend, prec) for v in vals), p, backend, prec)

    @classmethod
    def zero(cls, p: int, N: int, backend: str = "exact", prec: int = DEFAULT_PREC):
        return cls.from_values([], p, N, backend, prec)

    @classmethod
    def one(cls, p: int, N: int, backend: str = "exact", prec: int = DEFAULT_PREC):
        return cls.from_values([1], p, N, backend, prec)

    def like(self, values: Iterable, reliable: int | None = None) -> TruncatedSeries:
        """A series with this one's shape holding ``values``."""
        out = TruncatedSeries.from_values(values, self.p, self.N, self.backend, self.prec)
        if reliable is not None:
            out = replace(out, reliable=reliable)
        return out

    # -- inspection ---------------------------------------------------------

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> PadicScalar:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self, upto: int | None = None) -> bool:
        upto = self.reliable if upto is None else upto
        return all(c.is_zero() for c in self.coeffs[: upto + 1])

    def t_adic_order(self) -> int | None:
        """Index of the first nonzero coefficient within the reliable range."""
        for n, c in enumerate(self.coeffs[: self.reliable + 1]):
            if not c.is_zero():
                return n
        return None

    def lifts(self) -> list[Fraction]:
        return [c.lift() for c in self.coeffs]

    def agrees(self, other: TruncatedSeries, upto: int | None = None) -> bool:
        """Coefficientwise equality (to precision) through index ``upto``.

        Defaults to the smaller of the two reliable horizons.
        """
        if upto is None:
            upto = min(self.reliable, other.reliable)
        upto = min(upto, self.N, other.N)
        return all(a == b for a, b in zip(self.coeffs[: upto + 1], other.coeffs[: upto + 1]))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.p == other.p and self.N == other.N and self.agrees(other)

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries(p={self.p}, N={self.N}, {self.backend}, [{terms}])"

    # -- ring structure ------------------------------------------------------

    def _check(self, other: TruncatedSeries):
        if (self.p, self.N, self.backend) != (other.p, other.N, other.backend):
            raise ShapeError(
                f"shape mismatch: (p={self.p}, N={self.N}, {self.backend}) vs "
                f"(p={other.p}, N={other.N}, {other.backend})")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return self.like([a + b for a, b in zip(self, other)],
                         min(self.reliable, other.reliable))

    def __neg__(self):
        return self.like([-c for c in self], self.reliable)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        other = as_scalar(other, self.p)
        return self.like([c * other for c in self], self.reliable)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative series power")
        out = self.one_like()
        for _ in range(k):
            out = out * self
        return out

    def one_like(self) -> TruncatedSeries:
        return self.like([1])

    def zero_like(self) -> TruncatedSeries:
        return self.like([])


def _coef(v, p: int, backend: str, prec: int) -> PadicScalar:
    if backend == "exact":
        x = as_scalar(v, p)
        if not x.is_exact:
            raise ShapeError("approximate coefficient in an exact-backend series")
        return x
    if isinstance(v, PadicScalar):
        if v.p != p:
            raise ShapeError("coefficient prime differs from series prime")
        return v.with_prec(prec)
    return PadicScalar.approx_value(Fraction(v), p, prec)


# -- the dictionary -------------------------------------------------------------

def mul(F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    """Convolution of distributions: Cauchy product truncated at ``N``."""
    F._check(G)
    N = F.N
    out = []
    zero = F.zero_like()[0]
    for n in range(N + 1):
        acc = zero
        for i in range(n + 1):
            a = F[i]
            if a.is_exact and a.exact == 0:
                continue
            b = G[n - i]
            if b.is_exact and b.exact == 0:
                continue
            acc = acc + a * b
        out.append(acc)
    return F.like(out, min(F.reliable, G.reliable))


def dirac(a, p: int, N: int, backend: str = "exact", prec: int = DEFAULT_PREC) -> TruncatedSeries:
    """Fourier transform of the Dirac measure at ``a``: ``(1+T)^a``."""
    a = _param(a, p, backend, prec) if not as_scalar(a, p).is_exact else as_scalar(a, p)
    if not a.is_zero() and a.valuation() < 0:
        raise DomainError("dirac needs a p-adic integer")
    if a.is_exact:
        # exact parameter: exact binomials, rounded once by the backend
        vals = [Fraction(1)]
        for n in range(1, N + 1):
            vals.append(vals[-1] * (a.exact - n + 1) / n)
        return TruncatedSeries.from_values(vals, p, N, backend, prec)
    return TruncatedSeries.from_values([binom(a, n) for n in range(N + 1)], p, N, backend, prec)


def log1p(p: int, N: int, backend: str = "exact", prec: int = DEFAULT_PREC) -> TruncatedSeries:
    """``log(1+T) = T - T^2/2 + T^3/3 - ...``, the Fourier image of the Lie generator."""
    vals = [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, N + 1)]
    return TruncatedSeries.from_values(vals, p, N, backend, prec)


def _param(a, p: int, backend: str, prec: int) -> PadicScalar:
    a = as_scalar(a, p)
    if backend == "approx" and a.is_exact:
        return a.with_prec(prec)
    return a


def _dirac_like(b, F: TruncatedSeries) -> TruncatedSeries:
    return dirac(b, F.p, F.N, F.backend, F.prec)


def translate(b, F: TruncatedSeries) -> TruncatedSeries:
    """Translation by ``b``: multiply by ``(1+T)^b``."""
    return mul(_dirac_like(b, F), F)


def lie_mult(F: TruncatedSeries) -> TruncatedSeries:
    """Action of the Lie generator of Z_p: multiply by ``log(1+T)``."""
    return mul(log1p(F.p, F.N, F.backend, F.prec), F)


def substitute(F: TruncatedSeries, S: TruncatedSeries) -> TruncatedSeries:
    """``F(S(T))`` for ``S`` with zero constant term, via ``S^{k+1} = S^k * S``."""
    F._check(S)
    if not S[0].is_zero():
        raise DomainError("substituted series must have zero constant term")
    acc = F.zero_like()
    power = F.one_like()
    for k in range(F.N + 1):
        if k:
            power = mul(power, S)
        if not F[k].is_zero() or not F[k].is_exact:
            acc = acc + power * F[k]
    return replace(acc, reliable=min(F.reliable, S.reliable))


def pushforward(b, F: TruncatedSeries) -> TruncatedSeries:
    """Pushforward along multiplication by ``b``: ``F((1+T)^b - 1)``."""
    S = _dirac_like(b, F) - F.one_like()
    return substitute(F, S)


def derivative(F: TruncatedSeries) -> TruncatedSeries:
    """``dF/dT``; the top slot would need ``c_{N+1}`` so it is zero and unreliable."""
    vals = [F[n + 1] * (n + 1) for n in range(F.N)] + [F.zero_like()[0]]
    return F.like(vals, F.reliable - 1)


def delta_op(F: TruncatedSeries) -> TruncatedSeries:
    """``Delta F = (1+T) dF/dT``; transpose of ``f(a) -> a f(a)``.

    Coefficient ``n`` is ``(n+1) c_{n+1} + n c_n``. The top coefficient keeps
    only its ``N c_N`` part, so the reliable order drops by one.
    """
    vals = [F[n + 1] * (n + 1) + F[n] * n for n in range(F.N)]
    vals.append(F[F.N] * F.N)
    return F.like(vals, F.reliable - 1)


def moments(F: TruncatedSeries, K: int) -> list[PadicScalar]:
    """``[lam(a^0), ..., lam(a^K)]``, each the constant term of ``Delta^k F``."""
    if K > F.reliable:
        raise PrecisionError(f"moment {K} needs reliable order >= {K}, have {F.reliable}")
    out = []
    G = F
    for k in range(K + 1):
        if k:
            G = delta_op(G)
        out.append(G[0])
    return out


def moment(F: TruncatedSeries, k: int) -> PadicScalar:
    """``lam(a^k)``."""
    if k < 0:
        raise DomainError("moment index must be nonnegative")
    return moments(F, k)[k]


def pair(F: TruncatedSeries, poly: Sequence) -> PadicScalar:
    """``lam(f)`` for the polynomial ``f(a) = sum poly[j] a^j``."""
    deg = max((j for j, c in enumerate(poly) if c != 0), default=0)
    ms = moments(F, deg)
    acc = F.zero_like()[0]
    for j in range(deg + 1):
        if poly[j] != 0:
            acc = acc + ms[j] * poly[j]
    return acc


def gauss_norm(F: TruncatedSeries, s) -> Fraction:
    """``log_p`` of the Gauss norm on the disk of radius ``p^(-s)``.

    Returns ``max_n (-v(c_n) - n*s)`` over nonzero coefficients, an exact rational.
    """
    s = Fraction(s)
    if s <= 0:
        raise DomainError("radius must satisfy r = p^(-s) < 1, i.e. s > 0")
    vals = [-Fraction(c.valuation()) - n * s for n, c in enumerate(F) if not c.is_zero()]
    if not vals:
        raise DomainError("Gauss norm of the zero series is -infinity")
    return max(vals)


def entire_series_apply(b: Sequence, F: TruncatedSeries) -> TruncatedSeries:
    """Apply ``sum_k b_k x^k`` (``x`` the Lie generator) to ``F``.

    ``log(1+T)^k`` has T-adic order ``k``, so terms with ``k > N`` vanish at
    this truncation and are skipped.
    """
    L = log1p(F.p, F.N, F.backend, F.prec)
    acc = F.zero_like()
    term = F
    for k, bk in enumerate(b):
        if k > F.N:
            break
        if k:
            term = mul(L, term)
        acc = acc + term * bk
    return replace(acc, reliable=F.reliable)


def inverse(F: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with unit constant term."""
    c0 = F[0]
    if c0.is_zero():
        raise DomainError("series with zero constant term is not invertible")
    inv = [F.one_like()[0] / c0]
    for n in range(1, F.N + 1):
        acc = F.zero_like()[0]
        for i in range(1, n + 1):
            acc = acc + F[i] * inv[n - i]
        inv.append(-acc / c0)
    return F.like(inv, F.reliable)


def divide_by_log1p(F: TruncatedSeries) -> TruncatedSeries:
    """T-adic quotient ``F / log(1+T)``.

    Raises :class:`DomainError` unless the constant term vanishes. The
    quotient loses one order of reliability (its top coefficient would need
    ``c_{N+1}``).
    """
    if not F[0].is_zero():
        raise DomainError("not divisible by log(1+T): nonzero constant term")
    shifted = F.like(list(F.coeffs[1:]), F.reliable - 1)
    L = log1p(F.p, F.N + 1, F.backend, F.prec)
    unit = F.like(list(L.coeffs[1:]))
    return replace(mul(shifted, inverse(unit)), reliable=F.reliable - 1)


def truncate(F: TruncatedSeries, N: int) -> TruncatedSeries:
    """Restrict to order ``N <= F.N``."""
    if N > F.N:
        raise DomainError("cannot truncate to a larger order")
    return TruncatedSeries(F.coeffs[: N + 1], F.p, F.backend, F.prec, min(F.reliable, N))


def extend(F: TruncatedSeries, N: int) -> TruncatedSeries:
    """Pad a polynomial with zeros to order ``N``; reliability is kept at ``F.reliable``.

    The padded coefficients are exact zeros only if ``F`` is known to be a
    polynomial; callers that know this can widen ``reliable`` themselves.
    """
    if N < F.N:
        raise DomainError("use truncate() to shrink a series")
    zero = F.zero_like()[0]
    return TruncatedSeries(F.coeffs + (zero,) * (N - F.N), F.p, F.backend, F.prec, F.reliable)
