"""Coefficient arithmetic over Q_p.

A :class:`PadicScalar` is either an exact rational (with its p-adic valuation
computed exactly) or a capped-precision approximation ``p^v * u mod p^M``.
Mixing the two is allowed; an exact operand never limits precision.

Precision rules (absolute precision ``M``)::

    a + b   ->  min(M_a, M_b)
    a * b   ->  min(M_a + v_b, M_b + v_a)
    a / b   ->  (v_a - v_b) + min(M_a - v_a, M_b - v_b)

so dividing by ``b`` costs ``v(b)`` digits of absolute precision.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

from .errors import DomainError, ParseError, PrecisionError, PrimeMismatchError

INF = math.inf

# Default target precision for plog on exact input.
DEFAULT_LOG_PREC = 20


def vp_int(n: int, p: int) -> float:
    """p-adic valuation of an integer (``inf`` for 0)."""
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(q, p: int) -> float:
    """p-adic valuation of an int or Fraction."""
    q = Fraction(q)
    if q == 0:
        return INF
    return vp_int(q.numerator, p) - vp_int(q.denominator, p)


def _strip(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


class PadicScalar:
    """An element of Q_p, exact or known modulo ``p^prec``.

    Construct with :meth:`exact_value` / :meth:`approx_value` / :meth:`from_parts`
    rather than calling the class directly. Instances are immutable.
    """

    __slots__ = ("p", "exact", "val", "unit", "prec")

    def __init__(self, p: int, exact: Fraction | None = None,
                 val: int = 0, unit: int = 0, prec: int | None = None):
        if p < 2:
            raise DomainError(f"prime must be >= 2, got {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "exact", exact)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("PadicScalar is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def exact_value(cls, q, p: int) -> PadicScalar:
        return cls(p, exact=Fraction(q))

    @classmethod
    def approx_value(cls, q, p: int, prec: int) -> PadicScalar:
        """Reduce the rational ``q`` modulo ``p^prec``."""
        return cls._normalize(Fraction(q), p, prec)

    @classmethod
    def from_parts(cls, p: int, val: int, unit: int, prec: int) -> PadicScalar:
        if val > prec:
            raise DomainError(f"valuation {val} exceeds precision {prec}")
        if unit % p**max(prec - val, 0) == 0:
            return cls(p, val=prec, unit=0, prec=prec)
        if unit % p == 0:
            raise DomainError("unit part must not be divisible by p")
        return cls(p, val=val, unit=unit % p ** (prec - val), prec=prec)

    @classmethod
    def zero(cls, p: int, prec: int | None = None) -> PadicScalar:
        if prec is None:
            return cls(p, exact=Fraction(0))
        return cls(p, val=prec, unit=0, prec=prec)

    @classmethod
    def _normalize(cls, r: Fraction, p: int, prec: float) -> PadicScalar:
        if prec == INF:
            return cls(p, exact=r)
        prec = int(prec)
        num, den = r.numerator, r.denominator
        if num == 0:
            return cls(p, val=prec, unit=0, prec=prec)
        vn, num = _strip(num, p)
        vd, den = _strip(den, p)
        v = vn - vd
        if v >= prec:
            return cls(p, val=prec, unit=0, prec=prec)
        mod = p ** (prec - v)
        return cls(p, val=v, unit=num * pow(den, -1, mod) % mod, prec=prec)

    # -- inspection ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def precision(self) -> float:
        """Absolute precision; ``inf`` for exact values."""
        return INF if self.exact is not None else self.prec

    def is_zero(self) -> bool:
        """True for exact zero, or zero to the available precision."""
        if self.exact is not None:
            return self.exact == 0
        return self.unit == 0

    def valuation(self) -> float:
        """Exact valuation, ``inf`` for exact zero.

        For an approximate zero this returns the precision ``M``, which is
        only a lower bound; check :meth:`is_zero` to tell the cases apart.
        """
        if self.exact is not None:
            return vp(self.exact, self.p)
        return self.val

    def lift(self) -> Fraction:
        """Canonical rational representative."""
        if self.exact is not None:
            return self.exact
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def with_prec(self, prec: int) -> PadicScalar:
        """Reduce to (at most) absolute precision ``prec``."""
        if self.exact is not None:
            return PadicScalar._normalize(self.exact, self.p, prec)
        if self.prec <= prec:
            return self
        if self.unit == 0:
            return PadicScalar.zero(self.p, prec)
        return PadicScalar._from_int(self.p, self.val, self.unit, prec)

    # -- arithmetic ---------------------------------------------------------
    # Approximate operands are combined on (val, unit) integers; exact
    # operands are first reduced to just enough precision.

    @classmethod
    def _from_int(cls, p: int, val: int, n: int, prec: int) -> PadicScalar:
        # p^val * n modulo p^prec, for an integer n
        if prec <= val:
            return cls(p, val=prec, unit=0, prec=prec)
        n %= p ** (prec - val)
        if n == 0:
            return cls(p, val=prec, unit=0, prec=prec)
        k, n = _strip(n, p)
        return cls(p, val=val + k, unit=n % p ** (prec - val - k), prec=prec)

    def _approx(self, prec: float) -> PadicScalar:
        if self.exact is None:
            return self
        return PadicScalar._normalize(self.exact, self.p, prec)


    def _coerce(self, other) -> PadicScalar:
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise PrimeMismatchError(f"prime mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, Rational)):
            return PadicScalar(self.p, exact=Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.exact is not None and other.exact is not None:
            return PadicScalar(self.p, exact=self.exact + other.exact)
        prec = min(self.precision, other.precision)
        a, b = self._approx(prec), other._approx(prec)
        v = min(a.val, b.val)
        p = self.p
        n = a.unit * p ** (a.val - v) + b.unit * p ** (b.val - v)
        return PadicScalar._from_int(p, v, n, prec)

    __radd__ = __add__

    def __neg__(self):
        if self.exact is not None:
            return PadicScalar(self.p, exact=-self.exact)
        if self.unit == 0:
            return self
        return PadicScalar(self.p, val=self.val, unit=-self.unit % self.p ** (self.prec - self.val),
                           prec=self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.exact is not None and other.exact is not None:
            return PadicScalar(self.p, exact=self.exact * other.exact)
        prec = min(self.precision + other.valuation(), other.precision + self.valuation())
        if prec == INF:
            # exact zero times anything
            return PadicScalar(self.p, exact=Fraction(0))
        prec = int(prec)
        a = self._approx(prec - other.valuation()) if self.exact is not None else self
        b = other._approx(prec - self.valuation()) if other.exact is not None else other
        if a.unit == 0 or b.unit == 0:
            return PadicScalar.zero(self.p, prec)
        return PadicScalar._from_int(self.p, a.val + b.val, a.unit * b.unit, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            if other.exact is not None:
                raise DomainError("division by exact zero")
            raise PrecisionError(
                f"division by a value that is zero modulo {self.p}^{other.prec}")
        if self.exact is not None and other.exact is not None:
            return PadicScalar(self.p, exact=self.exact / other.exact)
        va, vb = self.valuation(), other.valuation()
        prec = (va - vb) + min(self.precision - va, other.precision - vb)
        if self.exact is not None and self.exact == 0:
            return PadicScalar(self.p, exact=Fraction(0))
        if self.is_zero():
            return PadicScalar.zero(self.p, int(prec))
        prec = int(prec)
        val = int(va - vb)
        digits = prec - val
        a = self._approx(va + digits) if self.exact is not None else self
        b = other._approx(vb + digits) if other.exact is not None else other
        mod = self.p ** digits
        return PadicScalar._from_int(self.p, val, a.unit * pow(b.unit, -1, mod), prec)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return PadicScalar(self.p, exact=Fraction(1)) / (self ** -n)
        result = PadicScalar(self.p, exact=Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (PadicScalar, int, Rational)):
            return NotImplemented
        if isinstance(other, PadicScalar) and other.p != self.p:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        if self.exact is not None:
            return hash((self.p, self.exact))
        return hash((self.p, self.val, self.unit, self.prec))

    def __repr__(self):
        return f"PadicScalar(p={self.p}, {format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


# -- text format ------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")
_APPROX_RE = re.compile(r"^\s*(-?\d+);(\d+);(-?\d+)\s*$")


def format_scalar(x: PadicScalar) -> str:
    """``num/den`` for exact values, ``v;u;M`` for approximate ones."""
    if x.exact is not None:
        return f"{x.exact.numerator}/{x.exact.denominator}"
    return f"{x.val};{x.unit};{x.prec}"


def parse_scalar(text: str, p: int) -> PadicScalar:
    m = _APPROX_RE.match(text)
    if m:
        v, u, prec = (int(g) for g in m.groups())
        try:
            x = PadicScalar.from_parts(p, v, u, prec)
        except DomainError as exc:
            raise ParseError(f"bad approximate scalar {text!r}: {exc}") from None
        if format_scalar(x) != text.strip():
            raise ParseError(f"non-canonical approximate scalar {text!r}")
        return x
    m = _RATIONAL_RE.match(text)
    if m:
        den = int(m.group(2) or 1)
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return PadicScalar(p, exact=Fraction(int(m.group(1)), den))
    raise ParseError(f"cannot parse scalar {text!r}")


# -- special functions --------------------------------------------------------

def as_scalar(x, p: int) -> PadicScalar:
    if isinstance(x, PadicScalar):
        if x.p != p:
            raise PrimeMismatchError(f"prime mismatch: {x.p} vs {p}")
        return x
    return PadicScalar(p, exact=Fraction(x))


def binom(a, n: int, p: int | None = None) -> PadicScalar:
    """Binomial coefficient ``a(a-1)...(a-n+1)/n!`` for a p-adic integer ``a``.

    Approximate inputs lose ``v_p(n!)`` digits of absolute precision.
    """
    if p is None:
        if not isinstance(a, PadicScalar):
            raise TypeError("prime required for non-PadicScalar input")
        p = a.p
    a = as_scalar(a, p)
    if n < 0:
        raise DomainError("binomial index must be nonnegative")
    if not a.is_zero() and a.valuation() < 0:
        raise DomainError("binom needs a p-adic integer (valuation >= 0)")
    if a.exact is not None:
        num = Fraction(1)
        for j in range(n):
            num *= a.exact - j
        return PadicScalar(p, exact=num / math.factorial(n))
    num = PadicScalar(p, exact=Fraction(1))
    for j in range(n):
        num = num * (a - j)
    return num / math.factorial(n)


def plog(x, prec: int | None = None, p: int | None = None) -> PadicScalar:
    """p-adic logarithm ``log(1 + x)`` for ``v(x) >= 1``.

    Sums ``(-1)^(n+1) x^n / n`` and stops at the first ``n`` with
    ``n*v(x) - floor(log_p n) >= M``; that bound is nondecreasing in ``n``, so
    every dropped term vanishes modulo ``p^M``. ``M`` is ``prec`` if given,
    otherwise the precision of ``x`` (exact ``x`` falls back to
    ``DEFAULT_LOG_PREC``). The result is approximate with precision ``M``.
    """
    if p is None:
        if not isinstance(x, PadicScalar):
            raise TypeError("prime required for non-PadicScalar input")
        p = x.p
    x = as_scalar(x, p)
    target = prec
    if target is None:
        target = DEFAULT_LOG_PREC if x.is_exact else x.prec
    target = int(min(target, x.precision))
    if x.is_zero():
        return PadicScalar.zero(p, target)
    v = x.valuation()
    if v < 1:
        raise DomainError(f"plog needs v(x) >= 1, got {v}")
    total = PadicScalar(p, exact=Fraction(0))
    power = PadicScalar(p, exact=Fraction(1))
    n = 1
    while n * v - _floor_log(n, p) < target:
        power = power * x
        term = power / n
        total = total + (term if n % 2 else -term)
        n += 1
    return total.with_prec(target)


def _floor_log(n: int, p: int) -> int:
    k = 0
    while p ** (k + 1) <= n:
        k += 1
    return k
