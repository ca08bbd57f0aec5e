"""Newton polygons of truncated series and zero counts by valuation.

A segment of slope ``-s`` and horizontal length ``l`` on the lower convex hull
of ``{(n, v(c_n))}`` accounts for ``l`` zeros of valuation ``s``. Zeros at
``T = 0`` are reported separately as the T-adic order.

Certification. Coefficients past the reliable horizon are unknown; we assume
only that their valuations are ``>= tail_floor``. Approximate coefficients
that are zero to precision ``M`` are unknown points with valuation ``>= M``.
A segment is *certified* iff every unknown point lies strictly above the
extended line of that segment, so no completion of the data can move or
lengthen it. With ``tail_floor=None`` the input is treated as a polynomial
(the tail is exactly zero). The default ``"auto"`` floor is one below the
smallest known coefficient valuation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PrecisionError
from .series import TruncatedSeries


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    length: int
    certified: bool

    @property
    def zero_valuation(self) -> Fraction:
        return -self.slope


@dataclass(frozen=True)
class ZeroCount:
    valuation: Fraction
    multiplicity: int
    certified: bool


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, Fraction], ...]
    segments: tuple[Segment, ...]
    t_adic_order: int
    certified_through: Fraction | None
    tail_floor: Fraction | None
    horizon: int

    def zero_counts(self) -> list[ZeroCount]:
        return [ZeroCount(s.zero_valuation, s.length, s.certified) for s in self.segments]

    def as_dict(self) -> dict:
        return {
            "vertices": [[n, str(v)] for n, v in self.vertices],
            "segments": [{"slope": str(s.slope), "length": s.length,
                          "zero_valuation": str(s.zero_valuation), "count": s.length,
                          "certified": s.certified} for s in self.segments],
            "t_adic_order": self.t_adic_order,
            "certified_through": None if self.certified_through is None
            else str(self.certified_through),
            "tail_floor": None if self.tail_floor is None else str(self.tail_floor),
            "horizon": self.horizon,
        }


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: list[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Vertices of the lower convex hull, left to right (collinear points dropped)."""
    hull: list[tuple[int, Fraction]] = []
    for pt in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def polygon(F: TruncatedSeries, tail_floor="auto") -> NewtonPolygon:
    """Newton polygon of ``F`` with per-segment certification."""
    horizon = F.reliable
    known: list[tuple[int, Fraction]] = []
    unknown: list[tuple[int, Fraction]] = []
    for n in range(horizon + 1):
        c = F[n]
        if c.is_zero():
            if not c.is_exact:
                unknown.append((n, Fraction(c.prec)))
        else:
            known.append((n, Fraction(c.valuation())))
    if not known:
        raise DomainError("Newton polygon of a series that is zero to available precision")
    if tail_floor == "auto":
        tail_floor = min(v for _, v in known) - 1
    elif tail_floor is not None:
        tail_floor = Fraction(tail_floor)

    hull = lower_hull(known)
    segments = []
    for (n0, v0), (n1, v1) in zip(hull, hull[1:]):
        slope = (v1 - v0) / (n1 - n0)
        segments.append(Segment(slope, n1 - n0,
                                _certified(n0, v0, slope, unknown, tail_floor, horizon + 1)))

    through = None
    for seg in segments:
        if not seg.certified:
            break
        through = seg.zero_valuation
    return NewtonPolygon(tuple(hull), tuple(segments), hull[0][0], through,
                         tail_floor, horizon)


def _certified(n0, v0, slope, unknown, tail_floor, tail_start) -> bool:
    def line(n):
        return v0 + slope * (n - n0)

    if any(lb <= line(n) for n, lb in unknown):
        return False
    if tail_floor is None:
        return True
    if slope > 0:
        return False
    return tail_floor > line(tail_start)


def zero_counts(F: TruncatedSeries, tail_floor="auto") -> list[ZeroCount]:
    return polygon(F, tail_floor).zero_counts()


def common_zero_free(F: TruncatedSeries, G: TruncatedSeries, tail_floor="auto") -> bool:
    """Whether ``F`` and ``G`` provably share no zero in the open unit disk.

    Decided by valuation classes only: two zeros of equal valuation are
    treated as possibly equal. That makes ``True`` sound but ``False``
    inconclusive at the level of points.
    """
    pf, pg = polygon(F, tail_floor), polygon(G, tail_floor)
    classes = []
    for pol in (pf, pg):
        vals = set()
        for seg in pol.segments:
            if seg.zero_valuation > 0:
                if not seg.certified:
                    raise PrecisionError(
                        f"zeros of valuation {seg.zero_valuation} are not certified; "
                        "increase the truncation order")
                vals.add(seg.zero_valuation)
        classes.append(vals)
    if pf.t_adic_order > 0 and pg.t_adic_order > 0:
        return False
    return not (classes[0] & classes[1])
