"""Text point files: one "x y" pair per line, integer or exact "p/q" rational
coordinates.  Blank lines and '#' comments are ignored.  Floating-point
literals are rejected outright: silently rationalizing decimals would change
the collinearity structure.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import TextIO

from .geom import Point
from .incidence import PointSet

_COORD = re.compile(r"^[+-]?\d+(/\d+)?$")


class PointFileError(ValueError):
    """Parse failure; message carries the offending line numbers."""


def _parse_coord(tok: str, lineno: int) -> Fraction:
    if not _COORD.match(tok):
        raise PointFileError(
            f"line {lineno}: bad coordinate {tok!r} (integer or p/q rational required)")
    return Fraction(tok)


def parse_points(stream: TextIO) -> PointSet:
    pts: list[Point] = []
    seen: dict[Point, int] = {}
    duplicates: list[str] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise PointFileError(f"line {lineno}: expected 'x y', got {line!r}")
        p = Point(_parse_coord(toks[0], lineno), _parse_coord(toks[1], lineno))
        if p in seen:
            duplicates.append(f"line {lineno} repeats line {seen[p]}")
        else:
            seen[p] = lineno
            pts.append(p)
    if duplicates:
        raise PointFileError("duplicate points: " + "; ".join(duplicates))
    return PointSet(tuple(pts))


def format_coord(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def format_points(P: PointSet) -> str:
    return "".join(f"{format_coord(p.x)} {format_coord(p.y)}\n" for p in P)
