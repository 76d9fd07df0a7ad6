"""Command-line surface: generate instances, analyze incidence structure,
find c-ordinary triangles, and verify the supporting bounds.

Reports are JSON on stdout; rationals are serialized as exact "p/q" strings.
Exit codes: 0 ok/found, 3 no triangle exists (find), 2 input error,
1 internal error or violated theorem-backed bound.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from math import comb

from . import bounds, generators, triangles
from .geom import CanonicalLine
from .incidence import (
    DegeneracyTag,
    PointSet,
    classify_degeneracy,
    enumerate_lines,
    line_census,
)
from .pointfile import PointFileError, format_points, parse_points
from .triangles import CaseTaken, Constants

REPORT_VERSION = "1"


def _frac_str(v) -> str:
    f = Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _read_points(path: str) -> PointSet:
    if path == "-":
        return parse_points(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh)


def _degeneracy_json(cls) -> dict:
    return {
        "tag": cls.tag.value,
        "witness": [list(l.triple()) for l in cls.witness],
    }


def _bound_json(r: bounds.BoundReport) -> dict:
    out = {
        "name": r.name,
        "instance": r.instance,
        "checked": _frac_str(r.checked),
        "threshold": _frac_str(r.threshold),
        "satisfied": r.satisfied,
        "vacuous": r.vacuous,
    }
    if r.details:
        out["details"] = {k: (v if isinstance(v, (int, bool)) else _frac_str(v))
                          for k, v in r.details.items()}
    return out


def _emit(report: dict, started: float) -> None:
    report["timing_seconds"] = round(time.perf_counter() - started, 6)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


# --- generate ---------------------------------------------------------------

def _parse_line_triple(text: str) -> CanonicalLine:
    try:
        a, b, c = (int(t) for t in text.split(","))
        return CanonicalLine.of(a, b, c)
    except ValueError as exc:
        raise ValueError(f"bad line triple {text!r}: {exc}") from exc


def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "grid":
        P = generators.gen_grid(_require(args, "size"))
    elif kind == "two-line":
        P = generators.gen_two_line_union(_require(args, "n1"), _require(args, "n2"))
    elif kind == "random":
        P = generators.gen_random(_require(args, "n"), _require(args, "bound"),
                                  args.seed if args.seed is not None else 0)
    elif kind == "rich-line":
        extras = [tuple(Fraction(t) for t in e.split(",")) for e in args.extra or []]
        P = generators.gen_rich_line_plus(_require(args, "k"), extras)
    elif kind == "projection":
        if not args.input:
            raise ValueError("--kind projection requires --input")
        base = _read_points(args.input)
        ell = _parse_line_triple(_require(args, "line"))
        P = generators.gen_projection_augmented(base, ell)
    elif kind == "cubic":
        P = generators.gen_cubic_progression(_require(args, "m"))
    else:  # argparse choices make this unreachable
        raise ValueError(f"unknown kind {kind!r}")
    sys.stdout.write(format_points(P))
    return 0


def _require(args, name):
    v = getattr(args, name.replace("-", "_"), None)
    if v is None:
        raise ValueError(f"--kind {args.kind} requires --{name}")
    return v


# --- analyze ----------------------------------------------------------------

def cmd_analyze(args) -> int:
    started = time.perf_counter()
    P = _read_points(args.input)
    if len(P) < 2:
        raise PointFileError("need at least 2 points to analyze")
    profile = enumerate_lines(P)
    n = len(P)
    pair_sum = sum(comb(l, 2) for l in profile.entries.values())
    report = {
        "version": REPORT_VERSION,
        "command": "analyze",
        "parameters": {"input": args.input},
        "n": n,
        "line_count": profile.line_count,
        "spectrum": [[k, f] for k, f in
                     ((k, sum(1 for l in profile.entries.values() if l >= k))
                      for k in range(2, profile.max_multiplicity + 1))],
        "degeneracy": _degeneracy_json(classify_degeneracy(P)),
        "pair_sum_identity": {
            "sum_pairs_on_lines": pair_sum,
            "choose_n_2": comb(n, 2),
            "holds": pair_sum == comb(n, 2),
        },
    }
    _emit(report, started)
    return 0


# --- find -------------------------------------------------------------------

def cmd_find(args) -> int:
    started = time.perf_counter()
    if args.c < 3 and not (args.allow_small_c and args.mode == "exhaustive"):
        raise PointFileError(
            "c must be >= 3 (use --allow-small-c with --mode exhaustive for research runs)")
    P = _read_points(args.input)
    n = len(P)
    if args.c < 3:
        # research escape hatch: oracle enumeration only
        count, tris = triangles.enumerate_all_c_ordinary(P, args.c, args.limit)
        classification = classify_degeneracy(P)
        case = "Oracle"
        count_kind = "exact"
        witness = None
        spectrum = line_census(P).spectrum_table() if n >= 2 else []
    else:
        constants = Constants.for_c(args.c, args.c_prime)
        rep = triangles.find_c_ordinary(P, constants, mode=args.mode, limit=args.limit)
        count, tris = rep.count, list(rep.triangles)
        classification = rep.classification
        case = rep.case_taken.value
        count_kind = "exact" if rep.count_is_exact else "lower_bound"
        witness = rep.rich_witness
        spectrum = line_census(P).spectrum_table() if n >= 2 else []
    report = {
        "version": REPORT_VERSION,
        "command": "find",
        "parameters": {"input": args.input, "c": args.c, "c_prime": args.c_prime,
                       "mode": args.mode, "limit": args.limit},
        "n": n,
        "degeneracy": _degeneracy_json(classification),
        "spectrum": [[k, f] for k, f in spectrum],
        "case_taken": case,
        "count": count,
        "count_kind": count_kind,
        "triangles": [list(t) for t in tris],
    }
    if witness is not None:
        report["rich_case"] = {
            "rich_line": list(witness.rich_line.triple()),
            "q": [_frac_str(witness.q.x), _frac_str(witness.q.y)],
            "r": [_frac_str(witness.r.x), _frac_str(witness.r.y)],
            "excluded": sorted(witness.excluded),
            "survivors": sorted(witness.survivors),
            "guaranteed_minimum": witness.guarantee,
        }
    _emit(report, started)
    return 0 if count > 0 else 3


# --- verify-bounds ----------------------------------------------------------

def cmd_verify_bounds(args) -> int:
    started = time.perf_counter()
    P = _read_points(args.input)
    if len(P) < 2:
        raise PointFileError("need at least 2 points to verify bounds")
    constants = Constants.for_c(args.c, args.c_prime)
    profile = enumerate_lines(P)
    reports = list(bounds.check_st(P, profile, args.c_prime))
    reports.append(bounds.check_incidence_bound(P, list(profile.entries)))
    poor = triangles.build_poor_graph(P, profile, args.c)
    reports.append(bounds.check_eg(poor, instance=f"poor graph n={poor.n} c={args.c}"))
    skipped = []
    alpha_n = constants.alpha * len(P)
    if any(l > alpha_n for l in profile.entries.values()):
        skipped.append({"name": "medium-line pair sum",
                        "reason": "skipped: rich line present (l_i > alpha*n)"})
    else:
        reports.extend(bounds.check_medium_sum(profile, constants))
    reports.sort(key=lambda r: r.name)
    all_ok = all(r.satisfied for r in reports)
    report = {
        "version": REPORT_VERSION,
        "command": "verify-bounds",
        "parameters": {"input": args.input, "c": args.c, "c_prime": args.c_prime},
        "n": len(P),
        "constants": {"c": constants.c, "c_prime": constants.c_prime,
                      "alpha": _frac_str(constants.alpha),
                      "dyadic_sum_constants": {
                          "below_sqrt_n": _frac_str(Fraction(8 * args.c_prime * len(P) ** 2,
                                                             args.c + 1)),
                          "above_sqrt_n": _frac_str(Fraction(16 * args.c_prime * len(P) ** 2,
                                                             args.c + 1)),
                      }},
        "bounds": [_bound_json(r) for r in reports],
        "skipped": skipped,
        "all_satisfied": all_ok,
    }
    _emit(report, started)
    return 0 if all_ok else 1


# --- entry ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ordtri",
                                 description="c-ordinary triangle toolkit (exact arithmetic)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("generate", help="emit a point file on stdout")
    gen.add_argument("--kind", required=True,
                     choices=["grid", "random", "two-line", "rich-line", "projection", "cubic"])
    gen.add_argument("--size", type=int, help="grid side length")
    gen.add_argument("--n", type=int, help="random: number of points")
    gen.add_argument("--bound", type=int, help="random: coordinate bound")
    gen.add_argument("--seed", type=int, help="random: RNG seed")
    gen.add_argument("--n1", type=int, help="two-line: points on y=0")
    gen.add_argument("--n2", type=int, help="two-line: points on x=0")
    gen.add_argument("--k", type=int, help="rich-line: points on the x-axis")
    gen.add_argument("--extra", action="append", metavar="X,Y",
                     help="rich-line: off-axis point (repeatable)")
    gen.add_argument("--m", type=int, help="cubic: parameter range [-m, m]")
    gen.add_argument("--input", help="projection: base point file")
    gen.add_argument("--line", metavar="A,B,C", help="projection: augmentation line a,b,c")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="incidence structure report")
    ana.add_argument("input", help="point file path, or - for stdin")
    ana.set_defaults(func=cmd_analyze)

    fnd = sub.add_parser("find", help="find/count c-ordinary triangles")
    fnd.add_argument("input", help="point file path, or - for stdin")
    fnd.add_argument("--c", type=int, default=triangles.DEFAULT_CONSTANTS.c)
    fnd.add_argument("--c-prime", type=int, default=triangles.DEFAULT_C_PRIME)
    fnd.add_argument("--mode", choices=["fast", "exhaustive", "count"], default="fast")
    fnd.add_argument("--limit", type=int, default=None,
                     help="cap on the listed (not counted) triangles")
    fnd.add_argument("--allow-small-c", action="store_true",
                     help="permit c < 3 with --mode exhaustive (research escape hatch)")
    fnd.set_defaults(func=cmd_find)

    ver = sub.add_parser("verify-bounds", help="check the supporting bounds")
    ver.add_argument("input", help="point file path, or - for stdin")
    ver.add_argument("--c", type=int, default=triangles.DEFAULT_CONSTANTS.c)
    ver.add_argument("--c-prime", type=int, default=triangles.DEFAULT_C_PRIME)
    ver.set_defaults(func=cmd_verify_bounds)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PointFileError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
