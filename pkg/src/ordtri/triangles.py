"""c-ordinary triangle validation, oracle enumeration, and the two-case finder.

A triple of points is c-ordinary when it is non-collinear and each of its
three connecting lines carries at most c points of the set.  Equivalently:
it is a non-collinear triangle of the "poor graph" G whose edges are the
point pairs lying on lines with at most c points, which is what the fast
paths exploit.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from .geom import CanonicalLine, Point, intersect, line_through, orientation
from .incidence import (
    DegeneracyClass,
    DegeneracyTag,
    IncidenceProfile,
    PointSet,
    SylvesterGallaiError,
    _scaled_line_key,
    _scaled_multiplicities,
    classify_degeneracy,
    enumerate_lines,
    find_ordinary_line,
    line_census,
    points_on_line,
)

logger = logging.getLogger(__name__)


class RichCasePreconditionError(RuntimeError):
    """Rich-line path invoked on an instance that does not satisfy its gate."""


@dataclass(frozen=True)
class Constants:
    """Richness threshold c with its companion ratio alpha = 4/(c+1).

    c_prime is the incidence-bound constant the default c is derived from;
    it is carried along for reporting only.
    """

    c: int
    alpha: Fraction
    c_prime: Optional[int] = None

    def __post_init__(self):
        if self.c < 3:
            raise ValueError("c must be an integer >= 3")
        if self.alpha != Fraction(4, self.c + 1):
            raise ValueError("alpha must equal 4/(c+1)")

    @classmethod
    def for_c(cls, c: int, c_prime: Optional[int] = None) -> "Constants":
        return cls(c=c, alpha=Fraction(4, c + 1), c_prime=c_prime)


DEFAULT_C_PRIME = 125
DEFAULT_CONSTANTS = Constants.for_c(96 * DEFAULT_C_PRIME, DEFAULT_C_PRIME)  # c = 12000


@dataclass(frozen=True)
class PoorGraph:
    """Graph on point indices; {i, j} is an edge iff their line has <= c points."""

    n: int
    adj: tuple[tuple[int, ...], ...]  # sorted neighbor lists

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)


class CaseTaken(Enum):
    RICH_LINE = "RichLine"
    POOR_GRAPH = "PoorGraph"
    BRUTE_FORCE_FALLBACK = "BruteForceFallback"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class RichCaseWitness:
    rich_line: CanonicalLine
    q: Point
    r: Point
    excluded: frozenset[int]   # indices on the rich line unusable as apex
    survivors: frozenset[int]  # indices on the rich line that yield triangles
    guarantee: int             # proven lower bound ceil(l/2) - 1


@dataclass(frozen=True)
class TriangleReport:
    classification: DegeneracyClass
    case_taken: CaseTaken
    triangles: tuple[tuple[int, int, int], ...]  # possibly truncated
    count: int
    count_is_exact: bool  # False: count is a proven lower bound
    constants: Constants
    rich_witness: Optional[RichCaseWitness] = None


def validate_c_ordinary(P: PointSet, profile: IncidenceProfile,
                        triple: tuple[int, int, int], c: int) -> bool:
    """True iff the indexed points are non-collinear and all three of their
    connecting lines have multiplicity <= c."""
    i, j, k = triple
    n = len(P)
    if len({i, j, k}) != 3 or not all(0 <= t < n for t in (i, j, k)):
        raise ValueError(f"bad triangle indices {triple} for n={n}")
    p, q, r = P[i], P[j], P[k]
    if orientation(p, q, r) == 0:
        return False
    return all(profile.entries[line_through(u, v)] <= c
               for u, v in ((p, q), (p, r), (q, r)))


def enumerate_all_c_ordinary(P: PointSet, c: int, limit: Optional[int] = None
                             ) -> tuple[int, list[tuple[int, int, int]]]:
    """Brute-force oracle: exact count of all c-ordinary triples, plus the
    triples themselves in ascending index order (list truncated at limit,
    count always exact).  O(n^3) with O(1) per-triple checks."""
    n = len(P)
    if n < 3:
        return 0, []
    pts, _, _ = P.scaled_ints
    mult = _scaled_multiplicities(P)
    poor = [bytearray(n) for _ in range(n)]
    for i in range(n - 1):
        x1, y1 = pts[i]
        row = poor[i]
        for j in range(i + 1, n):
            if mult[_scaled_line_key(x1, y1, *pts[j])] <= c:
                row[j] = 1
                poor[j][i] = 1
    count = 0
    out: list[tuple[int, int, int]] = []
    for i in range(n - 2):
        xi, yi = pts[i]
        pi = poor[i]
        for j in range(i + 1, n - 1):
            if not pi[j]:
                continue
            dxj = pts[j][0] - xi
            dyj = pts[j][1] - yi
            pj = poor[j]
            for k in range(j + 1, n):
                if pi[k] and pj[k]:
                    if dxj * (pts[k][1] - yi) != dyj * (pts[k][0] - xi):
                        count += 1
                        if limit is None or len(out) < limit:
                            out.append((i, j, k))
    return count, out


def build_poor_graph(P: PointSet, profile: IncidenceProfile, c: int) -> PoorGraph:
    """The graph G with an edge for every pair whose line has <= c points."""
    n = len(P)
    pts, _, _ = P.scaled_ints
    mult = _scaled_multiplicities(P)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n - 1):
        x1, y1 = pts[i]
        for j in range(i + 1, n):
            if mult[_scaled_line_key(x1, y1, *pts[j])] <= c:
                adj[i].append(j)
                adj[j].append(i)
    g = PoorGraph(n=n, adj=tuple(tuple(sorted(a)) for a in adj))
    expected = sum(comb(l, 2) for l in profile.entries.values() if l <= c)
    assert g.edge_count == expected, "poor-graph edge identity violated"
    return g


def find_case_poor_graph(P: PointSet, profile: IncidenceProfile, c: int,
                         limit: Optional[int] = None
                         ) -> tuple[list[tuple[int, int, int]], int]:
    """Enumerate poor-graph triangles by sorted-adjacency intersection and
    drop collinear triples.  The surviving count is exactly the number of
    c-ordinary triangles."""
    g = build_poor_graph(P, profile, c)
    pts, _, _ = P.scaled_ints
    n = g.n
    adj_sets = [set(a) for a in g.adj]
    count = 0
    out: list[tuple[int, int, int]] = []
    for i in range(n):
        xi, yi = pts[i]
        for j in g.adj[i]:
            if j <= i:
                continue
            dxj = pts[j][0] - xi
            dyj = pts[j][1] - yi
            for k in sorted(adj_sets[i] & adj_sets[j]):
                if k <= j:
                    continue
                if dxj * (pts[k][1] - yi) != dyj * (pts[k][0] - xi):
                    count += 1
                    if limit is None or len(out) < limit:
                        out.append((i, j, k))
    return out, count


def find_case_rich_line(P: PointSet, profile: IncidenceProfile,
                        rich_line: CanonicalLine, c: int
                        ) -> tuple[RichCaseWitness, list[tuple[int, int, int]]]:
    """Rich-line path: pick an ordinary line (q, r) of the points off the rich
    line, exclude the rich-line points whose connection to q or r is itself
    too rich, and pair every survivor with (q, r).

    Emits at least ceil(l/2) - 1 validated triangles, where l is the rich
    line's multiplicity; the exclusion sets are each strictly below l/4.
    """
    n = len(P)
    l_i = profile.entries.get(rich_line)
    if l_i is None:
        raise RichCasePreconditionError("rich_line is not a determined line of P")
    if (c + 1) * l_i <= 4 * n:  # l_i <= alpha*n with alpha = 4/(c+1)
        raise RichCasePreconditionError(f"line multiplicity {l_i} not above alpha*n")
    on_idx = points_on_line(P, rich_line)
    assert len(on_idx) == l_i
    on_set = set(on_idx)
    rest = PointSet(tuple(P[i] for i in range(n) if i not in on_set))
    try:
        ordinary, q, r = find_ordinary_line(rest)
    except SylvesterGallaiError as exc:
        raise RichCasePreconditionError(f"remainder off the rich line: {exc}") from exc
    qi, ri = P.index[q], P.index[r]
    # the ordinary line picks up at most the one point where it crosses the
    # rich line, so its multiplicity in P is <= 3 and the qr side is safe
    mult_qr = profile.entries[ordinary]
    assert mult_qr <= 3, "ordinary line of the remainder has extra points"
    too_rich_q = {i for i in on_idx if profile.entries[line_through(P[i], q)] > c}
    too_rich_r = {i for i in on_idx if profile.entries[line_through(P[i], r)] > c}
    crossing = {i for i in on_idx if orientation(P[i], q, r) == 0}
    assert len(crossing) <= 1
    if crossing - (too_rich_q | too_rich_r):
        logger.info("rich-line case: excluding crossing point %s of the ordinary line",
                    next(iter(crossing)))
    # exact counting inclusions behind the proof's lower bound
    assert 4 * len(too_rich_q) < l_i and 4 * len(too_rich_r) < l_i
    excluded = too_rich_q | too_rich_r | crossing
    survivors = [i for i in on_idx if i not in excluded]
    guarantee = (l_i + 1) // 2 - 1
    assert len(survivors) >= guarantee
    triangles = sorted(tuple(sorted((s, qi, ri))) for s in survivors)
    witness = RichCaseWitness(rich_line=rich_line, q=q, r=r,
                              excluded=frozenset(excluded),
                              survivors=frozenset(survivors),
                              guarantee=guarantee)
    return witness, triangles


def count_c_ordinary(P: PointSet, c: int) -> int:
    """Exact c-ordinary triangle count in O(n^2) time and O(n) memory.

    Works on the multiplicity census: a triple is c-ordinary iff none of its
    three pairs lies on a line with more than c points and the triple is not
    collinear.  Triples touching rich lines are removed by inclusion-exclusion
    over the (explicitly collected, few) rich lines; collinear triples on poor
    lines are subtracted via the census histogram.
    """
    n = len(P)
    if n < 3:
        return 0
    census = line_census(P, rich_threshold=c)
    total = comb(n, 3)
    collinear_poor = sum(cnt * comb(l, 3)
                         for l, cnt in census.count_by_mult.items() if l <= c)
    if not census.rich:
        return total - collinear_poor
    # H = graph of pairs on rich lines; rich lines induce vertex-disjoint-edge
    # cliques (two lines share at most one point).  Count triples with no
    # H-edge by inclusion-exclusion over edges, paths, and triangles of H.
    deg: Counter[int] = Counter()
    members: dict[CanonicalLine, set[Point]] = {}
    m_h = 0
    for line, mult in census.rich:
        idx = points_on_line(P, line)
        assert len(idx) == mult
        members[line] = {P[i] for i in idx}
        m_h += comb(mult, 2)
        for i in idx:
            deg[i] += mult - 1
    paths = sum(comb(d, 2) for d in deg.values())
    tri_h = sum(comb(mult, 3) for _, mult in census.rich)
    # cross-line triangles of H: three rich lines pairwise meeting at points of P
    rich_lines = [line for line, _ in census.rich]
    rr = len(rich_lines)
    meet: dict[tuple[int, int], Point] = {}
    for a in range(rr - 1):
        for b in range(a + 1, rr):
            u = intersect(rich_lines[a], rich_lines[b])
            if isinstance(u, Point) and u in members[rich_lines[a]] and u in members[rich_lines[b]]:
                meet[(a, b)] = u
    for a in range(rr - 2):
        for b in range(a + 1, rr - 1):
            uab = meet.get((a, b))
            if uab is None:
                continue
            for cc in range(b + 1, rr):
                uac = meet.get((a, cc))
                ubc = meet.get((b, cc))
                if uac is not None and ubc is not None and \
                        len({uab, uac, ubc}) == 3:
                    tri_h += 1
    no_rich_pair = total - m_h * (n - 2) + paths - tri_h
    return no_rich_pair - collinear_poor


def find_c_ordinary(P: PointSet, constants: Constants = DEFAULT_CONSTANTS,
                    mode: str = "fast", limit: Optional[int] = None) -> TriangleReport:
    """Dispatching finder.

    fast:       rich-line path when some line exceeds alpha*n (lower-bound
                count), else full poor-graph enumeration (exact); an empty
                fast result falls back to the brute-force oracle so that a
                non-empty report is equivalent to existence.
    exhaustive: full poor-graph enumeration with collinear filtering (exact,
                independently cross-checkable against the oracle).
    count:      exact count without materializing any triangle list.

    Degenerate inputs are classified and still searched exhaustively:
    triangles may exist below the theorem's regime.
    """
    if mode not in ("fast", "exhaustive", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    c = constants.c
    classification = classify_degeneracy(P)
    tag = classification.tag

    def report(case, triangles, count, exact, witness=None):
        return TriangleReport(classification=classification, case_taken=case,
                              triangles=tuple(tuple(t) for t in triangles),
                              count=count, count_is_exact=exact,
                              constants=constants, rich_witness=witness)

    if tag in (DegeneracyTag.TOO_SMALL, DegeneracyTag.ALL_COLLINEAR):
        return report(CaseTaken.DEGENERATE, (), 0, True)
    # TwoLineUnion inputs sit below the theorem's hypothesis but are still
    # searched exactly; the classification rides along in the report
    if mode == "count":
        return report(CaseTaken.POOR_GRAPH, (), count_c_ordinary(P, c), True)

    profile = enumerate_lines(P)
    if mode == "exhaustive":
        tris, count = find_case_poor_graph(P, profile, c, limit)
        return report(CaseTaken.POOR_GRAPH, tris, count, True)

    # fast mode: rich dispatch on l_i > alpha*n, max multiplicity first,
    # ties broken by canonical triple order
    n = len(P)
    rich = [(mult, line) for line, mult in profile.entries.items()
            if (c + 1) * mult > 4 * n]
    if rich:
        best_mult = max(mult for mult, _ in rich)
        best_line = min((line for mult, line in rich if mult == best_mult),
                        key=CanonicalLine.triple)
        rest = [P[i] for i in range(n) if i not in set(points_on_line(P, best_line))]
        remainder_ok = len(rest) >= 3 and any(
            orientation(rest[0], rest[1], p) != 0 for p in rest[2:])
        if not remainder_ok:
            rich = []  # rich-line case does not apply; use the poor graph
    if rich:
        try:
            witness, tris = find_case_rich_line(P, profile, best_line, c)
        except RichCasePreconditionError:
            logger.warning("rich-line path failed unexpectedly; brute-force fallback")
            count, tris = enumerate_all_c_ordinary(P, c, limit)
            return report(CaseTaken.BRUTE_FORCE_FALLBACK, tris, count, True)
        if tris:
            shown = tris if limit is None else tris[:limit]
            return report(CaseTaken.RICH_LINE, shown, len(tris), False, witness)
        count, tris = enumerate_all_c_ordinary(P, c, limit)
        return report(CaseTaken.BRUTE_FORCE_FALLBACK, tris, count, True)
    tris, count = find_case_poor_graph(P, profile, c, limit)
    if count == 0:
        # poor-path zero is already exact, but re-confirm through the oracle:
        # the non-empty-iff-exists contract must not rest on a single path
        count, tris = enumerate_all_c_ordinary(P, c, limit)
        return report(CaseTaken.BRUTE_FORCE_FALLBACK, tris, count, True)
    return report(CaseTaken.POOR_GRAPH, tris, count, True)
