"""Empirical verifiers for the incidence bounds, the triangle-count lower
bound, the medium-line summations, and the derivation of the constants.

All verdicts are exact: fractional-power comparisons are decided by cubing
both sides in integer arithmetic, never by floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .geom import CanonicalLine, incident
from .incidence import IncidenceProfile, PointSet, spectrum_f
from .triangles import Constants


@dataclass(frozen=True)
class BoundReport:
    name: str
    instance: str
    checked: Fraction        # the exact quantity on the constrained side
    threshold: Fraction      # the exact bound it must respect
    satisfied: bool
    vacuous: bool = False    # threshold direction trivially met (e.g. negative lower bound)
    details: dict = field(default_factory=dict)

    @property
    def ratio(self) -> Optional[Fraction]:
        """checked / threshold when meaningful; closeness-to-tight indicator."""
        if self.threshold == 0:
            return None
        return self.checked / self.threshold


def st_threshold(n: int, k: int, c_prime: int = 125) -> Fraction:
    """Upper bound on f(k): c'*n^2/k^3 for k <= sqrt(n), else c'*n/k.

    The branch test k <= sqrt(n) is evaluated as k*k <= n.
    """
    if n < 2 or k < 2:
        raise ValueError("st_threshold requires n, k >= 2")
    if k * k <= n:
        return Fraction(c_prime * n * n, k ** 3)
    return Fraction(c_prime * n, k)


def check_st(P: PointSet, profile: IncidenceProfile, c_prime: int = 125
             ) -> list[BoundReport]:
    """f(k) <= st_threshold(n, k, c') for every k up to the max multiplicity.

    Theorem-backed: a violation signals an implementation bug, never a
    property of the input.
    """
    n = len(P)
    if n < 2:
        raise ValueError("check_st requires at least 2 points")
    reports = []
    for k in range(2, profile.max_multiplicity + 1):
        fk = spectrum_f(profile, k)
        thr = st_threshold(n, k, c_prime)
        reports.append(BoundReport(
            name=f"line-richness f({k})",
            instance=f"n={n}",
            checked=Fraction(fk),
            threshold=thr,
            satisfied=fk <= thr,
        ))
    return reports


def count_incidences(P: PointSet, lines: list[CanonicalLine]) -> int:
    return sum(1 for l in lines for p in P if incident(l, p))


def check_incidence_bound(P: PointSet, lines: list[CanonicalLine]) -> BoundReport:
    """I <= 2.5*m^(2/3)*n^(2/3) + m + n, decided in exact integer arithmetic.

    With D = I - m - n, the verdict for D > 0 is 8*D^3 <= 125*(m*n)^2,
    the cube of 2D <= 5*(mn)^(2/3); no float enters the comparison.
    """
    if len(set(lines)) != len(lines):
        raise ValueError("duplicate lines")
    n = len(P)
    m = len(lines)
    inc = count_incidences(P, lines)
    excess = inc - m - n
    satisfied = excess <= 0 or 8 * excess ** 3 <= 125 * (m * n) ** 2
    # report threshold as the cubed comparison to stay exact
    return BoundReport(
        name="point-line incidences",
        instance=f"n={n} m={m}",
        checked=Fraction(8 * max(excess, 0) ** 3),
        threshold=Fraction(125 * (m * n) ** 2),
        satisfied=satisfied,
        details={"incidences": inc, "excess_over_m_plus_n": excess},
    )


def eg_lower_bound(n: int, m: int) -> Fraction:
    """Triangle-count lower bound m*(4m - n^2)/(3n); may be negative (vacuous)."""
    if n < 1:
        raise ValueError("eg_lower_bound requires n >= 1")
    return Fraction(m * (4 * m - n * n), 3 * n)


def count_triangles(g) -> int:
    """Exact triangle count of a simple undirected graph (n, sorted adj lists)
    by adjacency-set intersection over the edges."""
    adj_sets = [set(a) for a in g.adj]
    total = 0
    for u in range(g.n):
        for v in g.adj[u]:
            if v > u:
                total += sum(1 for w in adj_sets[u] & adj_sets[v] if w > v)
    return total


def check_eg(g, instance: str = "") -> BoundReport:
    """t3(G) >= m*(4m - n^2)/(3n); theorem-backed for every simple graph."""
    n = g.n
    m = g.edge_count
    t3 = count_triangles(g)
    lower = eg_lower_bound(n, m) if n >= 1 else Fraction(0)
    # checked <= threshold convention: the derived lower bound is the
    # constrained quantity, the observed triangle count the ceiling
    return BoundReport(
        name="triangle lower bound",
        instance=instance or f"n={n} m={m}",
        checked=lower,
        threshold=Fraction(t3),
        satisfied=lower <= t3,
        vacuous=lower <= 0,
        details={"triangles": t3},
    )


def derive_constants(c_prime: int) -> Constants:
    """c = 96*c' and alpha = 4/(c+1); c' = 125 gives the default c = 12000."""
    if c_prime < 1:
        raise ValueError("c_prime must be >= 1")
    return Constants.for_c(96 * c_prime, c_prime)


def check_medium_sum(profile: IncidenceProfile, constants: Constants
                     ) -> list[BoundReport]:
    """Sum of C(l_i, 2) over the medium lines (c < l_i <= alpha*n) against
    24*c'*n^2/(c+1), plus the two dyadic halves against 8 and 16 times
    c'*n^2/(c+1).

    Precondition (the poor-graph case hypothesis): no line exceeds alpha*n.
    """
    c = constants.c
    c_prime = constants.c_prime
    if c_prime is None:
        raise ValueError("check_medium_sum needs constants with c_prime bound")
    n = profile.n
    alpha_n = constants.alpha * n
    if any(l > alpha_n for l in profile.entries.values()):
        raise ValueError("case (ii) hypothesis fails: a line exceeds alpha*n")
    mults = list(profile.entries.values())
    unit = Fraction(c_prime * n * n, c + 1)
    # sqrt(n) split decided exactly via l*l <= n
    low = sum(comb(l, 2) for l in mults if c < l and l * l <= n)
    high = sum(comb(l, 2) for l in mults if l * l > n and l <= alpha_n)
    combined = sum(comb(l, 2) for l in mults if c < l <= alpha_n)
    assert combined == low + high
    instance = f"n={n} c={c} c'={c_prime}"
    reports = [
        BoundReport(name="medium-line pair sum", instance=instance,
                    checked=Fraction(combined), threshold=24 * unit,
                    satisfied=combined <= 24 * unit),
        BoundReport(name="medium-line pair sum (below sqrt n)", instance=instance,
                    checked=Fraction(low), threshold=8 * unit,
                    satisfied=low <= 8 * unit),
        BoundReport(name="medium-line pair sum (above sqrt n)", instance=instance,
                    checked=Fraction(high), threshold=16 * unit,
                    satisfied=high <= 16 * unit),
    ]
    # corollary on the poor-graph edge count
    poor_edges = sum(comb(l, 2) for l in mults if l <= c)
    floor_edges = Fraction(comb(n, 2)) - 24 * unit
    reports.append(BoundReport(
        name="poor-graph edge floor", instance=instance,
        checked=floor_edges, threshold=Fraction(poor_edges),
        satisfied=poor_edges >= floor_edges,
        vacuous=floor_edges <= 0,
        details={"poor_edges": poor_edges}))
    return reports
