"""Flat-file formats for series, characters and Bruhat pairs.

Series::

    PADIC-SERIES v1 p=<p> backend=<exact|approx> prec=<M> trunc=<N>
    <n>: <scalar>
    ...

Indices that are absent are zero (exact zero, or zero modulo ``p^M`` on the
approximate backend). Scalars use the ``num/den`` / ``v;u;M`` format.

A Bruhat pair is stored as ``<stem>.chi`` (one line ``chi(m1,m2)``) next to
``<stem>.plus.series`` and ``<stem>.minus.series``.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .padic import PadicScalar, format_scalar, parse_scalar
from .reps import BruhatElement, Character, parse_character
from .series import BACKENDS, TruncatedSeries

_HEADER_RE = re.compile(
    r"^PADIC-SERIES v1 p=(\d+) backend=(\w+) prec=(-?\d+) trunc=(\d+)$")
_LINE_RE = re.compile(r"^(\d+):\s*(\S+)$")


def _omit(c: PadicScalar, F: TruncatedSeries) -> bool:
    if c.is_exact:
        return c.exact == 0
    return c.is_zero() and c.prec == F.prec


def format_series(F: TruncatedSeries) -> str:
    lines = [f"PADIC-SERIES v1 p={F.p} backend={F.backend} prec={F.prec} trunc={F.N}"]
    for n, c in enumerate(F.coeffs):
        if not _omit(c, F):
            lines.append(f"{n}: {format_scalar(c)}")
    return "\n".join(lines) + "\n"


def parse_series(text: str) -> TruncatedSeries:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty series file")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise ParseError(f"bad series header {lines[0]!r}")
    p, backend, prec, N = int(m.group(1)), m.group(2), int(m.group(3)), int(m.group(4))
    if backend not in BACKENDS:
        raise ParseError(f"unknown backend {backend!r}")
    if p < 2:
        raise ParseError("prime must be >= 2")
    values: list = [0] * (N + 1)
    seen = set()
    for ln in lines[1:]:
        lm = _LINE_RE.match(ln)
        if not lm:
            raise ParseError(f"bad series line {ln!r}")
        n = int(lm.group(1))
        if n > N:
            raise ParseError(f"index {n} exceeds trunc={N}")
        if n in seen:
            raise ParseError(f"duplicate index {n}")
        seen.add(n)
        x = parse_scalar(lm.group(2), p)
        if backend == "exact" and not x.is_exact:
            raise ParseError(f"approximate scalar {lm.group(2)!r} in exact series")
        if backend == "approx" and x.is_exact:
            x = x.with_prec(prec)
        values[n] = x
    if backend == "approx":
        values = [v if isinstance(v, PadicScalar) else PadicScalar.zero(p, prec) for v in values]
        return TruncatedSeries(tuple(values), p, backend, prec)
    return TruncatedSeries.from_values(values, p, N, backend, prec)


def read_series(path) -> TruncatedSeries:
    return parse_series(Path(path).read_text())


def write_series(F: TruncatedSeries, path) -> None:
    Path(path).write_text(format_series(F))


def _bruhat_paths(stem) -> tuple[Path, Path, Path]:
    stem = Path(stem)
    return (stem.with_name(stem.name + ".chi"),
            stem.with_name(stem.name + ".plus.series"),
            stem.with_name(stem.name + ".minus.series"))


def write_bruhat(x: BruhatElement, stem) -> None:
    chi_path, plus_path, minus_path = _bruhat_paths(stem)
    chi_path.write_text(f"{x.chi}\n")
    write_series(x.plus, plus_path)
    write_series(x.minus, minus_path)


def read_bruhat(stem) -> BruhatElement:
    chi_path, plus_path, minus_path = _bruhat_paths(stem)
    chi: Character = parse_character(chi_path.read_text().strip())
    return BruhatElement(read_series(plus_path), read_series(minus_path), chi)
