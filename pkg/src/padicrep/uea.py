"""U(gl_2) in the PBW basis ordered (u+, h, e, u-).

Generators are the 2x2 matrices::

    u+ = E21 = [[0, 0], [1, 0]]     h = diag(1, -1)
    u- = E12 = [[0, 1], [0, 0]]     e = identity

and the structure constants are computed from their literal matrix
commutators (so, e.g., ``[u+, u-] = -h``) rather than copied from an sl_2
convention. Elements are dicts ``{(a, b, c, d): Fraction}`` standing for
``sum q * up^a h^b e^c um^d``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import DomainError, ParseError

GENERATORS = ("up", "h", "e", "um")
UP, H, E, UM = range(4)

_MATRICES = {
    UP: ((0, 0), (1, 0)),
    H: ((1, 0), (0, -1)),
    E: ((1, 0), (0, 1)),
    UM: ((0, 1), (0, 0)),
}


def _matmul(x, y):
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def matrix_bracket(x, y):
    xy, yx = _matmul(x, y), _matmul(y, x)
    return tuple(tuple(xy[i][j] - yx[i][j] for j in range(2)) for i in range(2))


def decompose(m) -> dict[int, Fraction]:
    """Coordinates of a 2x2 matrix in the basis (u+, h, e, u-)."""
    (a, b), (c, d) = m
    coords = {UP: Fraction(c), H: Fraction(a - d, 2), E: Fraction(a + d, 2), UM: Fraction(b)}
    return {g: q for g, q in coords.items() if q}


STRUCTURE = {(x, y): decompose(matrix_bracket(_MATRICES[x], _MATRICES[y]))
             for x, y in product(range(4), repeat=2)}


def _mono(g: int, k: int = 1) -> tuple[int, int, int, int]:
    e = [0, 0, 0, 0]
    e[g] = k
    return tuple(e)


def _word(mono) -> list[int]:
    out = []
    for g, k in enumerate(mono):
        out += [g] * k
    return out


@lru_cache(maxsize=None)
def _times_gen(mono: tuple[int, int, int, int], g: int) -> tuple[tuple[tuple, Fraction], ...]:
    # normal form of mono * g; mono = rest * x with x the last letter
    last = max((i for i, k in enumerate(mono) if k), default=-1)
    if last <= g:
        m = list(mono)
        m[g] += 1
        return ((tuple(m), Fraction(1)),)
    rest = list(mono)
    rest[last] -= 1
    rest = tuple(rest)
    # rest * x * g = (rest * g) * x + rest * [x, g]
    acc: dict[tuple, Fraction] = {}
    for m1, q1 in _times_gen(rest, g):
        for m2, q2 in _times_gen(m1, last):
            acc[m2] = acc.get(m2, 0) + q1 * q2
    for z, qz in STRUCTURE[(last, g)].items():
        for m1, q1 in _times_gen(rest, z):
            acc[m1] = acc.get(m1, 0) + qz * q1
    return tuple((m, q) for m, q in acc.items() if q)


class PBWElement:
    """A finite rational combination of PBW monomials, kept in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {tuple(m): Fraction(q) for m, q in (terms or {}).items() if q}

    @classmethod
    def scalar(cls, q) -> PBWElement:
        return cls({(0, 0, 0, 0): q})

    @classmethod
    def gen(cls, name: str | int, k: int = 1) -> PBWElement:
        g = GENERATORS.index(name) if isinstance(name, str) else name
        return cls({_mono(g, k): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, q in other.terms.items():
            out[m] = out.get(m, 0) + q
        return PBWElement(out)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement({m: -q for m, q in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        return pbw_mul(self, _lift(other))

    def __rmul__(self, other):
        return pbw_mul(_lift(other), self)

    def __pow__(self, k: int):
        out = PBWElement.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"PBWElement({format_pbw(self)!r})"

    def __str__(self):
        return format_pbw(self)


def _lift(x) -> PBWElement:
    if isinstance(x, PBWElement):
        return x
    if isinstance(x, (int, Fraction)):
        return PBWElement.scalar(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to PBWElement")


def pbw_mul(x: PBWElement, y: PBWElement) -> PBWElement:
    """Product in U(gl_2), straightened to (u+, h, e, u-) order."""
    acc: dict[tuple, Fraction] = {}
    for m1, q1 in x.terms.items():
        for m2, q2 in y.terms.items():
            partial = {m1: q1 * q2}
            for g in _word(m2):
                nxt: dict[tuple, Fraction] = {}
                for m, q in partial.items():
                    for mm, qq in _times_gen(m, g):
                        nxt[mm] = nxt.get(mm, 0) + q * qq
                partial = nxt
            for m, q in partial.items():
                acc[m] = acc.get(m, 0) + q
    return PBWElement(acc)


def bracket(x: PBWElement, y: PBWElement) -> PBWElement:
    return x * y - y * x


def casimir() -> PBWElement:
    """``1/2 h^2 + u+ u- + u- u+``; central in U(gl_2)."""
    h, up, um = PBWElement.gen("h"), PBWElement.gen("up"), PBWElement.gen("um")
    return Fraction(1, 2) * h * h + up * um + um * up


def principal_anti(x: PBWElement) -> PBWElement:
    """The anti-automorphism extending ``X -> -X`` on gl_2."""
    acc = PBWElement()
    for m, q in x.terms.items():
        term = PBWElement.scalar(q * (-1) ** sum(m))
        for g in reversed(_word(m)):
            term = term * PBWElement.gen(g)
        acc = acc + term
    return acc


def ad_identity_check(m: int) -> PBWElement:
    """``[u+, z] - (m-1) (u-)^(-m) (h - m)`` for ``z = (u-)^(1-m)``; zero for all ``m <= 0``."""
    if m > 0:
        raise DomainError("the ad-identity is stated for m <= 0")
    up, um, h = PBWElement.gen("up"), PBWElement.gen("um"), PBWElement.gen("h")
    z = um ** (1 - m)
    return bracket(up, z) - (m - 1) * (um ** (-m)) * (h - m)


def spanning_monomials(max_degree: int) -> list[PBWElement]:
    return [PBWElement({m: 1}) for m in product(range(max_degree + 1), repeat=4)
            if sum(m) <= max_degree]


# -- text format ------------------------------------------------------------

def format_pbw(x: PBWElement) -> str:
    """``q up^a h^b e^c um^d`` terms joined by `` + `` / `` - ``; ``0`` for zero."""
    if not x.terms:
        return "0"
    parts = []
    for m in sorted(x.terms, key=lambda m: (sum(m), m)):
        q = x.terms[m]
        factors = [f"{GENERATORS[g]}^{k}" if k > 1 else GENERATORS[g]
                   for g, k in enumerate(m) if k]
        body = " ".join([str(abs(q))] + factors)
        parts.append(("- " if q < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


_TERM_RE = re.compile(r"^(\d+(?:/\d+)?)((?:\s+(?:up|h|e|um)(?:\^\d+)?)*)$")


def parse_pbw(text: str) -> PBWElement:
    text = text.strip()
    if text == "0":
        return PBWElement()
    if not text:
        raise ParseError("empty PBW expression")
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    chunks = re.split(r"\s+([+-])\s+", text)
    signs = [sign] + [1 if s == "+" else -1 for s in chunks[1::2]]
    acc = PBWElement()
    for s, chunk in zip(signs, chunks[0::2]):
        m = _TERM_RE.match(chunk.strip())
        if not m:
            raise ParseError(f"bad PBW term {chunk!r}")
        term = PBWElement.scalar(s * Fraction(m.group(1)))
        for fac in m.group(2).split():
            name, _, k = fac.partition("^")
            term = term * PBWElement.gen(name, int(k or 1))
        acc = acc + term
    return acc
