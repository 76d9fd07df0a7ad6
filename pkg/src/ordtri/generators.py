"""Instance generators: grids, seeded random sets, degenerate two-line unions,
rich-line stress sets, cubic progressions, and the projection augmentation
that kills all 2-ordinary triangles.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Optional

from .geom import (
    PARALLEL,
    CanonicalLine,
    Point,
    incident,
    intersect,
    line_through,
    orientation,
    point,
)
from .incidence import PointSet, enumerate_lines


def gen_grid(g: int) -> PointSet:
    """The g x g integer grid {0..g-1}^2 in row-major order."""
    if g < 1:
        raise ValueError("grid size must be >= 1")
    return PointSet.of([(x, y) for y in range(g) for x in range(g)])


def gen_two_line_union(n1: int, n2: int) -> PointSet:
    """n1 points (1..n1, 0) on the x-axis and n2 points (0, 1..n2) on the y-axis."""
    if n1 < 1 or n2 < 1:
        raise ValueError("two-line union needs n1, n2 >= 1")
    return PointSet.of([(i, 0) for i in range(1, n1 + 1)]
                       + [(0, j) for j in range(1, n2 + 1)])


def gen_projection_augmented(P1: PointSet, ell: CanonicalLine) -> PointSet:
    """P1 plus, for each line determined by P1, its intersection with ell.

    All added points are collinear on ell, and every determined line of P1
    picks one up, which eliminates 2-ordinary triangles.  ell must be generic:
    it meets every determined line in a single point and avoids P1.
    """
    for i, p in enumerate(P1):
        if incident(ell, p):
            raise ValueError(f"point {i} of the base set lies on the augmentation line")
    profile = enumerate_lines(P1)
    if profile.line_count == 1:
        raise ValueError("base set is collinear")
    added: set[Point] = set()
    for l1 in profile.entries:
        u = intersect(ell, l1)
        if not isinstance(u, Point):
            kind = "parallel to" if u is PARALLEL else "identical to"
            raise ValueError(f"augmentation line not generic: {kind} a determined line")
        added.add(u)
    return PointSet(tuple(P1) + tuple(sorted(added)))


def gen_rich_line_plus(k: int, extras: Iterable) -> PointSet:
    """(0,0)..(k-1,0) on the x-axis plus off-axis extra points.

    Exercises the rich-line case: for suitable c the x-axis exceeds alpha*n
    while the extras form the non-collinear remainder.
    """
    if k < 2:
        raise ValueError("rich-line base needs k >= 2")
    extra_pts = [p if isinstance(p, Point) else point(*p) for p in extras]
    for p in extra_pts:
        if p.y == 0:
            raise ValueError(f"extra point {p!r} lies on the x-axis")
    if len(set(extra_pts)) != len(extra_pts):
        raise ValueError("duplicate extra point")
    if len(extra_pts) >= 3:
        a, b = extra_pts[0], extra_pts[1]
        if all(orientation(a, b, p) == 0 for p in extra_pts[2:]):
            raise ValueError("extra points are all collinear")
    return PointSet.of([(i, 0) for i in range(k)] + extra_pts)


#: Generator identity for reports: bump when the sampling scheme changes.
RANDOM_SCHEME = "mt19937-randrange-v1"


def gen_random(n: int, coordinate_bound: int, seed: int) -> PointSet:
    """n distinct integer points drawn uniformly from [0, bound]^2.

    Sampling scheme RANDOM_SCHEME: Mersenne Twister (random.Random(seed)),
    coordinates via two randrange(bound+1) draws, duplicates rejected.
    Identical seed and parameters reproduce the identical set.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if coordinate_bound < n:
        raise ValueError("coordinate bound must be >= n to keep distinctness feasible")
    rng = random.Random(seed)
    seen: set[tuple[int, int]] = set()
    pts: list[tuple[int, int]] = []
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 100 * n + 1000:
            raise ValueError(f"could not place {n} distinct points in [0,{coordinate_bound}]^2")
        xy = (rng.randrange(coordinate_bound + 1), rng.randrange(coordinate_bound + 1))
        if xy not in seen:
            seen.add(xy)
            pts.append(xy)
    return PointSet.of(pts)


def gen_cubic_progression(m: int) -> PointSet:
    """{(t, t^3) : t in [-m, m]}.

    Three points are collinear exactly when t1 + t2 + t3 = 0 and no four are
    ever collinear, giving a dense supply of 3-point lines.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    return PointSet.of([(t, t ** 3) for t in range(-m, m + 1)])
