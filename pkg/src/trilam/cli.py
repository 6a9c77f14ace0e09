"""Command-line driver.

Exit codes: 0 success, 1 domain error (valid syntax, impossible request),
2 usage error (bad flags or malformed angle/chord syntax).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from . import core, lamination, lamsets, quadgap
from .chords import Chord, format_chord, parse_chord
from .render import RenderSpec, render as render_svg
from .circle import format_angle, parse_angle
from .lamsets import (
    classify_rotational,
    enumerate_rotational,
    format_lamset,
    parse_lamset,
)
from .quadgap import build_gap, classify_critical, vassal


class UsageError(Exception):
    pass


def _chord(text: str) -> Chord:
    try:
        return parse_chord(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _angle(text: str) -> Fraction:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _lamset(text: str, d: int = 3) -> lamsets.LamSet:
    try:
        return parse_lamset(text, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(lines) -> None:
    for ln in lines:
        print(ln)


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_classify_critical_leaf(args) -> int:
    c = _chord(args.chord)
    cls = classify_critical(c)
    if cls.tag == "PeriodicType":
        gap, _ = build_gap(c, depth=0)
        # major printed in scan order: hole end first (nearest fixed point
        # forward of the short side), then hole start
        major = f"{format_angle(gap.hole.end)}-{format_angle(gap.hole.start)}"
        print(f"PeriodicType n_c={cls.n_c} major={major}")
    else:
        print(f"{cls.tag} major={format_chord(cls.major)}")
    _emit(cls.lines())
    return 0


def cmd_build_gap(args) -> int:
    c = _chord(args.chord)
    gap, vertices = build_gap(c, depth=args.depth)
    print(gap.serialize())
    print(f"vertices: {len(vertices)}")
    for v in vertices:
        print(format_angle(v))
    return 0


def cmd_vassal(args) -> int:
    c = _chord(args.chord)
    gap, _ = build_gap(c, depth=0)
    V = vassal(gap)
    print(V.serialize())
    print(f"co_major: {format_chord(V.co_major)}")
    a0, a1 = V.arcs
    print(f"arcs: [{format_angle(a0.start)},{format_angle(a0.end)}] "
          f"[{format_angle(a1.start)},{format_angle(a1.end)}]")
    for v in V.vertices(args.depth):
        print(format_angle(v))
    return 0


def cmd_build_canonical(args) -> int:
    if args.variant == "quadratic-gap":
        if not args.critical:
            raise UsageError("variant quadratic-gap needs --critical CHORD")
        gap, _ = build_gap(_chord(args.critical), depth=0)
        L = lamination.canonical_of_quadratic_gap(gap, depth=args.depth)
    elif args.variant == "diameter":
        L = lamination.canonical_diameter(depth=args.depth)
    elif args.variant == "rotational":
        if not args.set:
            raise UsageError("variant rotational needs --set ANGLES")
        L = lamination.canonical_of_rotational(_lamset(args.set, 3), depth=args.depth)
    else:  # quadratic-d2
        if not args.set:
            raise UsageError("variant quadratic-d2 needs --set ANGLES")
        L = lamination.quadratic_canonical(_lamset(args.set, 2), depth=args.depth)
    text = lamination.dumps(L)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{len(L.leaves)} leaves -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_find_rotational(args) -> int:
    rho = _angle(args.rho)
    if rho == 0:
        raise UsageError("rotation number must be a fraction in (0, 1)")
    for G in enumerate_rotational(args.d, rho, args.orbits):
        rep = classify_rotational(G)
        print(f"{format_lamset(G)} type={rep.type_tag}")
    return 0


def cmd_check_invariance(args) -> int:
    L = lamination.read_lamination(args.infile)
    rep = lamination.check_invariance(L)
    _emit(rep.lines())
    return 0 if rep.ok else 1


def cmd_clean(args) -> int:
    L = lamination.read_lamination(args.infile)
    rep = lamination.clean(L)
    _emit(rep.lines())
    return 0


def cmd_classify_smp(args) -> int:
    L = lamination.read_lamination(args.infile)
    verdict = lamination.classify_smp(L, period_bound=args.period_bound)
    _emit(verdict.lines())
    return 0


def cmd_core_report(args) -> int:
    L = lamination.read_lamination(args.infile)
    rep = core.periodic_rotational_classes(L, period_bound=args.period_bound)
    _emit(rep.lines())
    return 0


def cmd_project(args) -> int:
    L = lamination.read_lamination(args.infile)
    gaps = [g for g in L.fatou_gaps if isinstance(g, quadgap.GapGen)]
    if args.critical:
        U, _ = build_gap(_chord(args.critical), depth=0)
    elif gaps:
        U = gaps[min(args.gap_index, len(gaps) - 1)]
    else:
        raise UsageError("no quadratic gap registered; supply --critical CHORD")
    P = lamination.project_through_gap(U, L)
    text = lamination.dumps(P)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{len(P.leaves)} leaves -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_render(args) -> int:
    if args.infile:
        obj = lamination.read_lamination(args.infile)
    elif args.set:
        obj = _lamset(args.set, args.d)
    elif args.chord:
        obj = _chord(args.chord)
    else:
        raise UsageError("render needs --in FILE, --set ANGLES, or --chord CHORD")
    spec = RenderSpec(width=args.size, height=args.size,
                      label_angles=args.labels)
    svg = render_svg(obj, spec)
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="trilam",
        description="exact-arithmetic toolkit for invariant laminations of "
                    "the tripling map",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify-critical-leaf",
                       help="orbit type of a critical chord")
    p.add_argument("chord")
    p.set_defaults(func=cmd_classify_critical_leaf)

    p = sub.add_parser("build-gap", help="invariant quadratic gap of a critical chord")
    p.add_argument("chord")
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(func=cmd_build_gap)

    p = sub.add_parser("vassal", help="vassal gap of a periodic-type critical chord")
    p.add_argument("chord")
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(func=cmd_vassal)

    p = sub.add_parser("build-canonical", help="canonical lamination constructions")
    p.add_argument("variant", choices=["quadratic-gap", "diameter",
                                       "rotational", "quadratic-d2"])
    p.add_argument("--critical", help="critical chord (quadratic-gap variant)")
    p.add_argument("--set", help="vertex set (rotational / quadratic-d2 variants)")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_canonical)

    p = sub.add_parser("find-rotational", help="enumerate invariant rotational sets")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--rho", required=True)
    p.add_argument("--orbits", type=int, default=2, choices=[1, 2])
    p.set_defaults(func=cmd_find_rotational)

    p = sub.add_parser("check-invariance", help="verify a stored lamination")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_check_invariance)

    p = sub.add_parser("clean", help="remove isolated leaves, report super-gaps")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_clean)

    p = sub.add_parser("classify-smp", help="simplest-core classification")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--period-bound", type=int, default=6)
    p.set_defaults(func=cmd_classify_smp)

    p = sub.add_parser("core-report", help="bounded-period rotational census")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--period-bound", type=int, default=6)
    p.set_defaults(func=cmd_core_report)

    p = sub.add_parser("project", help="collapse a lamination through a quadratic gap")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--critical", help="critical chord defining the gap")
    p.add_argument("--gap-index", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("render", help="SVG figure of a lamination or set")
    p.add_argument("--in", dest="infile")
    p.add_argument("--set")
    p.add_argument("--chord")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--out", required=True)
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_render)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, AssertionError,
            lamination.PullbackAmbiguityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
