"""Bounded-period dynamical-core reports.

Infinite invariants (limit sets, full cores) are out of reach for a finite
truncation; what IS finitely checkable is the census of periodic rotational
classes up to a period bound and the separation predicate for finite
classes.  That census is exactly what the SMP classifier consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .chords import Chord
from .circle import format_angle, sigma_iter
from .lamsets import LamSet, RotationalReport, classify_rotational, format_lamset


@dataclass
class CoreReport:
    period_bound: int
    rotational_classes: List[Tuple[LamSet, RotationalReport]]
    cut_classes: List[Tuple[Fraction, ...]]
    summary: str  # EmptyCore | SinglePoint | MultipleRotational

    def lines(self) -> List[str]:
        out = [f"period_bound: {self.period_bound}",
               f"summary: {self.summary}",
               f"cut_classes: {len(self.cut_classes)}",
               f"rotational_classes: {len(self.rotational_classes)}"]
        for G, rep in self.rotational_classes:
            out.append(
                f"  {format_lamset(G)} rho={format_angle(rep.rotation_number) if rep.rotation_number else '0'}"
                f" type={rep.type_tag}"
            )
        return out


def derive_classes(leaves: Sequence[Chord]) -> List[Tuple[Fraction, ...]]:
    """Connected components of leaves sharing endpoints: the finite classes
    of the equivalence relation the leaf set generates."""
    parent: Dict[Fraction, Fraction] = {}

    def find(x: Fraction) -> Fraction:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in leaves:
        for v in (c.a, c.b):
            parent.setdefault(v, v)
        ra, rb = find(c.a), find(c.b)
        if ra != rb:
            parent[ra] = rb
    groups: Dict[Fraction, List[Fraction]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def _class_period(d: int, cls: Tuple[Fraction, ...], bound: int) -> Optional[int]:
    """Minimal j <= bound with sigma_d^j(cls) = cls as a set."""
    cset = frozenset(cls)
    for j in range(1, bound + 1):
        if frozenset(sigma_iter(d, v, j) for v in cls) == cset:
            return j
    return None


def periodic_rotational_classes(L, period_bound: int = 6) -> CoreReport:
    """Census of periodic classes whose return map acts as a nontrivial
    rotation.  The return map of a period-j class is sigma_d^j = sigma_{d^j},
    so the rotational test reuses the plain classifier at degree d^j."""
    d = L.d
    classes = derive_classes(sorted(L.leaves))
    cut_classes = [c for c in classes if len(c) >= 2]
    rotational: List[Tuple[LamSet, RotationalReport]] = []
    for cls in classes:
        if len(cls) < 2:
            continue
        j = _class_period(d, cls, period_bound)
        if j is None:
            continue
        G = LamSet(cls, degree_d=d ** j)
        rep = classify_rotational(G)
        if rep.is_rotational:
            rotational.append((G, rep))
    if not rotational:
        summary = "EmptyCore"
    elif len(rotational) == 1:
        summary = "SinglePoint"
    else:
        summary = "MultipleRotational"
    return CoreReport(
        period_bound=period_bound,
        rotational_classes=rotational,
        cut_classes=cut_classes,
        summary=summary,
    )


def separates(L, g: Sequence[Fraction], A: Sequence[Fraction],
              B: Sequence[Fraction]) -> bool:
    """True iff the convex hull of class g separates point sets A and B in
    the disk: they fall into different complementary arcs of g's vertices."""
    gs = sorted(x % 1 for x in g)
    aset = {x % 1 for x in A}
    bset = {x % 1 for x in B}
    if (aset | bset) & set(gs):
        raise ValueError("A and B must be disjoint from g")
    if aset & bset:
        raise ValueError("A and B must be disjoint from each other")
    if len(gs) < 2:
        return False

    def arc_index(x: Fraction) -> int:
        # index i: x lies in the open arc (gs[i], gs[i+1])
        for i in range(len(gs)):
            lo, hi = gs[i], gs[(i + 1) % len(gs)]
            if 0 < (x - lo) % 1 < (hi - lo) % 1:
                return i
        raise ValueError(f"{format_angle(x)} not in any complementary arc")

    arcs_a = {arc_index(x) for x in aset}
    arcs_b = {arc_index(x) for x in bset}
    if len(arcs_a) > 1 or len(arcs_b) > 1:
        raise ValueError("each point set must lie in a single complementary arc")
    return arcs_a != arcs_b
