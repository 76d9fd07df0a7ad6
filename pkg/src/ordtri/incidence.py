"""Determined-line enumeration, richness spectrum, degeneracy classification,
and the Sylvester-Gallai ordinary-line finder.

The pair loop runs over integer-scaled coordinates (clearing denominators
per axis preserves collinearity), so the O(n^2) kernel is pure machine-int
arithmetic even for rational inputs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import comb, gcd, isqrt, lcm
from typing import Iterable, Optional

from .geom import CanonicalLine, Point, incident, line_through, orientation


class UnderdeterminedError(ValueError):
    """Fewer than two points: no determined lines."""


class SylvesterGallaiError(ValueError):
    """Ordinary-line finder called on a collinear or too-small set."""


@dataclass(frozen=True)
class PointSet:
    """Ordered, pairwise-distinct points.  Index order is the canonical
    identity used in all reports."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            seen: dict[Point, int] = {}
            for i, p in enumerate(self.points):
                if p in seen:
                    raise ValueError(f"duplicate point at indices {seen[p]} and {i}: {p!r}")
                seen[p] = i

    @classmethod
    def of(cls, coords: Iterable) -> "PointSet":
        pts = []
        for xy in coords:
            if isinstance(xy, Point):
                pts.append(xy)
            else:
                x, y = xy
                pts.append(Point(Fraction(x), Fraction(y)))
        return cls(tuple(pts))

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def scaled_ints(self) -> tuple[list[tuple[int, int]], int, int]:
        """Integer coordinates (X, Y) = (sx*x, sy*y) with per-axis denominator
        clearing.  The axis scaling is a positive-determinant linear map, so
        collinearity and line multiplicities are preserved."""
        sx = lcm(*(p.x.denominator for p in self.points)) if self.points else 1
        sy = lcm(*(p.y.denominator for p in self.points)) if self.points else 1
        pts = [(int(p.x * sx), int(p.y * sy)) for p in self.points]
        return pts, sx, sy


def _scaled_line_key(x1: int, y1: int, x2: int, y2: int) -> tuple[int, int, int]:
    """Primitive sign-normalized triple of the line through two scaled points."""
    a = y1 - y2
    b = x2 - x1
    c = x1 * y2 - x2 * y1
    g = gcd(a, b, c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return (a, b, c)


def _unscale_line(key: tuple[int, int, int], sx: int, sy: int) -> CanonicalLine:
    """Map a line triple in scaled coordinates back to original coordinates."""
    a, b, c = key
    return CanonicalLine.of(a * sx, b * sy, c)


@dataclass(frozen=True)
class IncidenceProfile:
    """All determined lines with their multiplicities l_i = |L_i cap P|."""

    entries: dict[CanonicalLine, int]
    n: int

    @property
    def line_count(self) -> int:
        return len(self.entries)

    @property
    def max_multiplicity(self) -> int:
        return max(self.entries.values(), default=0)

    def multiplicity_histogram(self) -> dict[int, int]:
        return dict(Counter(self.entries.values()))


def _scaled_multiplicities(P: PointSet) -> dict[tuple[int, int, int], int]:
    """Multiplicity of every determined line, keyed by scaled-coordinate triple.

    Hashes the triple of each of the C(n,2) pair lines; a line with l points
    is hit C(l,2) times, from which l is recovered exactly.
    """
    n = len(P)
    pts, _, _ = P.scaled_ints
    pair_counts: Counter[tuple[int, int, int]] = Counter()
    for i in range(n - 1):
        x1, y1 = pts[i]
        for j in range(i + 1, n):
            pair_counts[_scaled_line_key(x1, y1, *pts[j])] += 1
    mult: dict[tuple[int, int, int], int] = {}
    for key, t in pair_counts.items():
        l = (1 + isqrt(1 + 8 * t)) // 2
        assert l * (l - 1) // 2 == t, "pair count is not triangular"
        mult[key] = l
    return mult


def enumerate_lines(P: PointSet) -> IncidenceProfile:
    """All lines with >= 2 points of P, each with its exact multiplicity."""
    n = len(P)
    if n < 2:
        raise UnderdeterminedError("underdetermined: need at least 2 points")
    _, sx, sy = P.scaled_ints
    entries = {_unscale_line(key, sx, sy): l
               for key, l in _scaled_multiplicities(P).items()}
    assert sum(comb(l, 2) for l in entries.values()) == comb(n, 2)
    return IncidenceProfile(entries=entries, n=n)


def spectrum_f(profile: IncidenceProfile, k: int) -> int:
    """f(k): number of determined lines containing at least k points."""
    if k < 2:
        raise ValueError("spectrum undefined for k < 2")
    return sum(1 for l in profile.entries.values() if l >= k)


def spectrum_table(profile: IncidenceProfile) -> list[tuple[int, int]]:
    """[(k, f(k))] for k = 2 .. max multiplicity."""
    return [(k, spectrum_f(profile, k)) for k in range(2, profile.max_multiplicity + 1)]


def points_on_line(P: PointSet, l: CanonicalLine) -> list[int]:
    """Indices of all points of P incident to l, ascending."""
    return [i for i, p in enumerate(P) if incident(l, p)]


def pair_line_multiplicity(profile: IncidenceProfile, P: PointSet, p: Point, q: Point) -> int:
    """Multiplicity of the line through p and q, looked up in the profile."""
    if p not in P.index or q not in P.index:
        raise ValueError("pair_line_multiplicity: point not in the point set")
    return profile.entries[line_through(p, q)]


class DegeneracyTag(Enum):
    TOO_SMALL = "TooSmall"
    ALL_COLLINEAR = "AllCollinear"
    TWO_LINE_UNION = "TwoLineUnion"
    NON_DEGENERATE = "NonDegenerate"


@dataclass(frozen=True)
class DegeneracyClass:
    tag: DegeneracyTag
    witness: tuple[CanonicalLine, ...] = ()


def _all_on(P: PointSet, l: CanonicalLine, skip: Optional[set[int]] = None) -> bool:
    return all(incident(l, p) for i, p in enumerate(P) if not skip or i not in skip)


def classify_degeneracy(P: PointSet) -> DegeneracyClass:
    """TooSmall / AllCollinear / TwoLineUnion / NonDegenerate with witnesses.

    Two-line containment reduces to three candidates: if P sits on two lines,
    two points of any non-collinear triple share a cover line, and those two
    points determine it.  Each candidate is checked by testing whether the
    points off it are collinear.
    """
    n = len(P)
    if n < 3:
        return DegeneracyClass(DegeneracyTag.TOO_SMALL)
    base = line_through(P[0], P[1])
    off = next((i for i in range(2, n) if not incident(base, P[i])), None)
    if off is None:
        return DegeneracyClass(DegeneracyTag.ALL_COLLINEAR, (base,))
    candidates = [base, line_through(P[0], P[off]), line_through(P[1], P[off])]
    for cand in candidates:
        rest = [i for i in range(n) if not incident(cand, P[i])]
        if not rest:  # cannot happen past the AllCollinear check
            continue
        if len(rest) == 1:
            anchor = next(i for i in range(n) if incident(cand, P[i]))
            second = line_through(P[rest[0]], P[anchor])
            return DegeneracyClass(DegeneracyTag.TWO_LINE_UNION, (cand, second))
        second = line_through(P[rest[0]], P[rest[1]])
        if all(incident(second, P[i]) for i in rest[2:]):
            return DegeneracyClass(DegeneracyTag.TWO_LINE_UNION, (cand, second))
    return DegeneracyClass(DegeneracyTag.NON_DEGENERATE)


def find_ordinary_line(P: PointSet, profile: Optional[IncidenceProfile] = None
                       ) -> tuple[CanonicalLine, Point, Point]:
    """An ordinary line of P (exactly two incident points) with its two points.

    Deterministic: the lexicographically smallest canonical triple among all
    ordinary lines; the two points come back in index order.  Existence for a
    non-collinear P is the Sylvester-Gallai theorem.
    """
    if len(P) < 3:
        raise SylvesterGallaiError("Sylvester-Gallai hypothesis violated: fewer than 3 points")
    if profile is None:
        profile = enumerate_lines(P)
    ordinary = [l for l, mult in profile.entries.items() if mult == 2]
    if not ordinary:
        raise SylvesterGallaiError("Sylvester-Gallai hypothesis violated: collinear input")
    best = min(ordinary, key=CanonicalLine.triple)
    idx = points_on_line(P, best)
    assert len(idx) == 2
    return best, P[idx[0]], P[idx[1]]


# --- memory-light census for large inputs -----------------------------------

@dataclass(frozen=True)
class LineCensus:
    """Multiplicity census of the determined lines, without materializing them.

    count_by_mult[l] = number of determined lines with exactly l points.
    rich holds the (few) lines with multiplicity > rich_threshold explicitly.
    """

    n: int
    count_by_mult: dict[int, int]
    rich_threshold: Optional[int]
    rich: tuple[tuple[CanonicalLine, int], ...] = ()

    @property
    def line_count(self) -> int:
        return sum(self.count_by_mult.values())

    @property
    def max_multiplicity(self) -> int:
        return max(self.count_by_mult, default=0)

    def f(self, k: int) -> int:
        if k < 2:
            raise ValueError("spectrum undefined for k < 2")
        return sum(c for l, c in self.count_by_mult.items() if l >= k)

    def spectrum_table(self) -> list[tuple[int, int]]:
        return [(k, self.f(k)) for k in range(2, self.max_multiplicity + 1)]


def line_census(P: PointSet, rich_threshold: Optional[int] = None) -> LineCensus:
    """O(n^2)-time, O(n)-memory census of determined-line multiplicities.

    For each point i, later points are grouped by primitive direction.  A line
    whose points have indices i1 < ... < il produces exactly one group of each
    size l-1, ..., 1, so the number of groups of size s equals f(s+1) and the
    full multiplicity histogram follows without storing any line.

    When rich_threshold is given, every line with multiplicity > threshold is
    also reported explicitly: its lowest-index point owns a group of size
    l-1 >= threshold, so collecting groups of size >= threshold and taking the
    max group size per deduplicated line recovers (line, multiplicity) pairs.
    """
    n = len(P)
    if n < 2:
        raise UnderdeterminedError("underdetermined: need at least 2 points")
    pts, sx, sy = P.scaled_ints
    group_size_hist: Counter[int] = Counter()
    rich_seen: dict[tuple[int, int, int], int] = {}
    collect_rich = rich_threshold is not None
    for i in range(n - 1):
        xi, yi = pts[i]
        groups: Counter[tuple[int, int]] = Counter()
        for j in range(i + 1, n):
            dx = pts[j][0] - xi
            dy = pts[j][1] - yi
            g = gcd(dx, dy)
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            groups[(dx, dy)] += 1
        group_size_hist.update(groups.values())
        if collect_rich:
            for (dx, dy), size in groups.items():
                if size >= rich_threshold:
                    key = _scaled_line_key(xi, yi, xi + dx, yi + dy)
                    if rich_seen.get(key, 0) < size:
                        rich_seen[key] = size
    assert sum(s * c for s, c in group_size_hist.items()) == comb(n, 2)
    count_by_mult = {
        l: group_size_hist.get(l - 1, 0) - group_size_hist.get(l, 0)
        for l in range(2, max(group_size_hist, default=1) + 2)
        if group_size_hist.get(l - 1, 0) - group_size_hist.get(l, 0) > 0
    }
    assert sum(comb(l, 2) * c for l, c in count_by_mult.items()) == comb(n, 2)
    rich = tuple(sorted(
        ((_unscale_line(key, sx, sy), size + 1) for key, size in rich_seen.items()),
        key=lambda pair: pair[0].triple(),
    ))
    return LineCensus(n=n, count_by_mult=count_by_mult,
                      rich_threshold=rich_threshold, rich=rich)
