"""Finitely presented invariant laminations.

A lamination here is a truncated leaf set generated by Thurston pullback
from a registered family of gaps (the quadratic gaps of `quadgap`, finite
rotational polygons, and the Fatou gaps attached to them).  The registry is
what makes the truncation honest: invariance is checked leaf by leaf, and
isolation of leaves (for cleaning) is decided combinatorially against the
registered gaps instead of a metric criterion that a finite set cannot
certify.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .chords import Chord, format_chord, image, linked, parse_chord
from .circle import (
    Arc,
    arc_length,
    fixed_points,
    format_angle,
    orbit,
    parse_angle,
    preimages,
    sigma,
    sigma_iter,
)
from .lamsets import (
    LamSet,
    RotationalReport,
    _displacement,
    classify_rotational,
    format_lamset,
    holes,
    majors,
    parse_lamset,
)
from .quadgap import (
    GapGen,
    VassalGap,
    below_diameter,
    gap_from_major,
    parse_gapgen,
    psi,
    vassal,
)

_BOUNDARY_TOL = 1e-9


class PullbackAmbiguityError(RuntimeError):
    """The admissible sibling collection at some pullback step was not the
    expected size; the construction refuses to guess."""


# ---------------------------------------------------------------------------
# gap region types beyond quadgap


@dataclass(frozen=True)
class FiniteRegion:
    """A finite laminational set registered as a gap (or single leaf)."""

    base: LamSet
    kind: str = "finite"

    def edge_chords(self, depth: int) -> List[Chord]:
        return sorted({e for e, _ in holes(self.base)})

    def serialize(self) -> str:
        return f"kind=finite degree={self.base.degree_d} vertices={format_lamset(self.base)}"


@dataclass(frozen=True)
class ImageGap:
    """Forward image sigma^power of a base gap (used for the vassal cycle)."""

    base: VassalGap
    power: int
    kind: str = "vassal-image"

    def edge_chords(self, depth: int) -> List[Chord]:
        out = []
        for e in self.base.edge_chords(depth):
            out.append(Chord(sigma_iter(3, e.a, self.power), sigma_iter(3, e.b, self.power)))
        return out

    def serialize(self) -> str:
        return f"kind=vassal-image power={self.power} {self.base.serialize().removeprefix('kind=vassal ')}"


@dataclass(frozen=True)
class AttachedGap:
    """The Fatou gap attached to edge `index` of a rotational set G.

    Its basis consists of the points x whose iterates track the hole cycle:
    sigma^s(x) stays in the closure of the hole that edge `index` reaches
    after s steps.  Enumeration is by interval refinement; every interval
    endpoint produced at a finite stage is a genuine basis point (it is a
    finite preimage of a vertex of G)."""

    base: LamSet
    index: int
    kind: str = "attached"

    @property
    def outer_edge(self) -> Chord:
        vs = self.base.vertices
        return Chord(vs[self.index], vs[(self.index + 1) % len(vs)])

    @property
    def is_critical(self) -> bool:
        return self.outer_edge in majors(self.base)

    def arcs(self, depth: int) -> List[Tuple[Fraction, Fraction]]:
        vs = self.base.vertices
        v = vs[self.index]
        return [((v + lo) % 1, (v + hi) % 1)
                for lo, hi in _tracked(self.base, depth)[self.index]]

    def edge_chords(self, depth: int) -> List[Chord]:
        segs = self.arcs(depth)
        out = [self.outer_edge]
        for j in range(len(segs) - 1):
            if segs[j][1] != segs[j + 1][0]:
                out.append(Chord(segs[j][1], segs[j + 1][0]))
        return out

    def serialize(self) -> str:
        return (f"kind=attached degree={self.base.degree_d} "
                f"set={format_lamset(self.base)} index={self.index}")


_TRACK_CACHE: Dict[Tuple, List[List[Tuple[Fraction, Fraction]]]] = {}


def _merge_intervals(ivs):
    out = []
    for lo, hi in sorted(ivs):
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def _intersect_intervals(xs, ys):
    out = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        lo = max(xs[i][0], ys[j][0])
        hi = min(xs[i][1], ys[j][1])
        if lo <= hi:
            out.append((lo, hi))
        if xs[i][1] < ys[j][1]:
            i += 1
        else:
            j += 1
    return out


def _tracked(G: LamSet, rounds: int) -> List[List[Tuple[Fraction, Fraction]]]:
    """Per edge index: the surviving closed sub-intervals of the hole (in
    local coordinates from the hole's start vertex) after `rounds` steps of
    hole tracking."""
    key = (G.vertices, G.degree_d, rounds)
    if key in _TRACK_CACHE:
        return _TRACK_CACHE[key]
    d = G.degree_d
    vs = G.vertices
    n = len(vs)
    p = _displacement(G)
    if p is None:
        raise ValueError("hole tracking needs a rigid edge rotation")
    hl = [arc_length(h) for _, h in holes(G)]
    J = [[(Fraction(0), hl[i])] for i in range(n)]
    for _ in range(rounds):
        newJ = []
        for i in range(n):
            t = (i + p) % n
            vt, vi = vs[t], vs[i]
            pre = []
            for lo, hi in J[t]:
                length = (hi - lo) / d
                for j in range(d):
                    s = (((vt + lo + j) / d) - vi) % 1
                    segs = [(s, s + length)] if s + length <= 1 \
                        else [(s, Fraction(1)), (Fraction(0), s + length - 1)]
                    for a0, b0 in segs:
                        a0, b0 = max(a0, Fraction(0)), min(b0, hl[i])
                        if a0 <= b0:
                            pre.append((a0, b0))
            newJ.append(_intersect_intervals(J[i], _merge_intervals(pre)))
        J = newJ
    for i in range(n):
        assert J[i] and J[i][0][0] == 0 and J[i][-1][1] == hl[i], \
            "hole endpoints must always track"
    _TRACK_CACHE[key] = J
    return J


def attached_cycle(G: LamSet) -> List[AttachedGap]:
    """All Fatou gaps attached to the edges of a rotational set."""
    return [AttachedGap(G, i) for i in range(len(holes(G)))]


# ---------------------------------------------------------------------------
# regions with fast crossing tests


class _RegionView:
    """Sorted boundary points of a gap with a float index for fast strict
    side-counting; exact arithmetic resolves anything near a boundary."""

    def __init__(self, rid: str, obj, depth: int):
        self.rid = rid
        self.obj = obj
        pts = set()
        for e in obj.edge_chords(depth):
            pts.add(e.a)
            pts.add(e.b)
        self.pts = sorted(pts)
        self.fpts = [float(x) for x in self.pts]

    def crosses(self, a: Fraction, b: Fraction) -> bool:
        """True iff the chord a-b (a < b) has boundary points of this region
        strictly on both sides."""
        fa, fb = float(a), float(b)
        n = len(self.pts)
        inside = max(0, bisect_left(self.fpts, fb - _BOUNDARY_TOL)
                     - bisect_right(self.fpts, fa + _BOUNDARY_TOL))
        outside = bisect_left(self.fpts, fa - _BOUNDARY_TOL) \
            + (n - bisect_right(self.fpts, fb + _BOUNDARY_TOL))
        if inside and outside:
            return True
        # resolve the few points caught in the float fuzz exactly
        fuzzy = set(range(bisect_left(self.fpts, fa - _BOUNDARY_TOL),
                          bisect_right(self.fpts, fa + _BOUNDARY_TOL)))
        fuzzy |= set(range(bisect_left(self.fpts, fb - _BOUNDARY_TOL),
                           bisect_right(self.fpts, fb + _BOUNDARY_TOL)))
        for i in fuzzy:
            x = self.pts[i]
            if a < x < b:
                inside += 1
            elif x != a and x != b:
                outside += 1
        return inside > 0 and outside > 0


# ---------------------------------------------------------------------------
# the lamination type


@dataclass
class Lamination:
    d: int
    depth: int
    recipe: str
    leaves: Dict[Chord, int] = field(default_factory=dict)  # leaf -> level
    fatou_gaps: List[object] = field(default_factory=list)
    finite_gaps: List[LamSet] = field(default_factory=list)
    registry_complete: bool = False

    @property
    def leaf_list(self) -> List[Chord]:
        return sorted(self.leaves)

    def __len__(self):
        return len(self.leaves)

    def __repr__(self):
        return (f"Lamination(d={self.d}, depth={self.depth}, "
                f"recipe={self.recipe!r}, {len(self.leaves)} leaves)")


# ---------------------------------------------------------------------------
# pullback engine


def _pullback_closure(d: int, seeds: Sequence[Chord],
                      regions: Sequence[_RegionView], depth: int) -> Dict[Chord, int]:
    leaves: Dict[Chord, int] = {}
    for s in seeds:
        leaves[s] = 0
    frontier = list(leaves)
    for level in range(1, depth + 1):
        fresh = []
        for leaf in frontier:
            pa = preimages(d, leaf.a)
            pb = preimages(d, leaf.b)
            valid = []
            for p in pa:
                for q in pb:
                    c = Chord(p, q)
                    if c in leaves or not any(R.crosses(c.a, c.b) for R in regions):
                        valid.append(c)
            if len(valid) != d:
                raise PullbackAmbiguityError(
                    f"pullback of {format_chord(leaf)} admits {len(valid)} "
                    f"siblings where exactly {d} were expected"
                )
            for c in valid:
                if c not in leaves:
                    leaves[c] = level
                    fresh.append(c)
        frontier = fresh
    return leaves


_REGION_MARGIN = 2  # extra enumeration depth for crossing tests


def canonical_of_quadratic_gap(U: GapGen, depth: int = 6) -> Lamination:
    """The unique invariant lamination having U (and, for periodic type, the
    vassal cycle) among its gaps: pullback closure of the major orbit."""
    if U.period is None:
        region_objs: List[object] = [U]
        seeds = [U.major]
    else:
        # The co-major M'' shares its image with M, so the pullback of the
        # major orbit discovers it (and with it all vassal-cycle edges);
        # seeding from the orbit alone makes the construction independent of
        # which gap of the lamination U happens to be.
        V = vassal(U)
        region_objs = [U, V] + [ImageGap(V, i) for i in range(1, U.period)]
        seeds = [e for e, _ in U.base_edges()]
    views = [_RegionView(f"G{i}", obj, depth + _REGION_MARGIN)
             for i, obj in enumerate(region_objs)]
    leaves = _pullback_closure(3, seeds, views, depth)
    return Lamination(
        d=3, depth=depth, recipe=f"quadratic-gap:{format_chord(U.major)}",
        leaves=leaves, fatou_gaps=region_objs, registry_complete=True,
    )


def canonical_diameter(depth: int = 6) -> Lamination:
    """The lamination whose gaps include both diameter gaps FG_a and FG_b."""
    L = canonical_of_quadratic_gap(below_diameter(), depth)
    L.recipe = "diameter"
    return L


def canonical_of_rotational(G: LamSet, depth: int = 6) -> Lamination:
    """Canonical lamination of a rotational set: attach the Fatou gaps that
    track the hole cycle, then pull back the edges of G avoiding all of
    them."""
    rep = classify_rotational(G)
    if not (rep.is_rotational or rep.diameter_special):
        raise ValueError("canonical construction needs a rotational set")
    d = G.degree_d
    cycle = attached_cycle(G)
    region_objs: List[object] = [FiniteRegion(G)] + list(cycle)
    views = [_RegionView(f"G{i}", obj, depth + _REGION_MARGIN)
             for i, obj in enumerate(region_objs)]
    seeds = sorted({e for e, _ in holes(G)})
    leaves = _pullback_closure(d, seeds, views, depth)
    tag = "rotational" if d == 3 else "quadratic-d2"
    return Lamination(
        d=d, depth=depth, recipe=f"{tag}:{format_lamset(G)}",
        leaves=leaves, fatou_gaps=list(cycle), finite_gaps=[G],
        registry_complete=True,
    )


def quadratic_canonical(G2: LamSet, depth: int = 6) -> Lamination:
    """sigma_2 analogue: the unique quadratic lamination with a cycle of
    Fatou gaps attached to the edges of the rotational set G2."""
    if G2.degree_d != 2:
        raise ValueError("quadratic canonical lamination needs a degree-2 set")
    return canonical_of_rotational(G2, depth)


# ---------------------------------------------------------------------------
# invariance checking


@dataclass
class InvarianceReport:
    leaf_count: int
    linked_pairs: List[Tuple[Chord, Chord]]
    forward_missing: List[Chord]
    sibling_missing: List[Chord]
    gap_violations: List[str]

    @property
    def ok(self) -> bool:
        return not (self.linked_pairs or self.forward_missing
                    or self.sibling_missing or self.gap_violations)

    def lines(self) -> List[str]:
        out = [f"leaves: {self.leaf_count}",
               f"linked_pairs: {len(self.linked_pairs)}",
               f"forward_missing: {len(self.forward_missing)}",
               f"sibling_missing: {len(self.sibling_missing)}",
               f"gap_violations: {len(self.gap_violations)}",
               f"ok: {str(self.ok).lower()}"]
        for a, b in self.linked_pairs[:10]:
            out.append(f"  linked: {format_chord(a)} x {format_chord(b)}")
        for c in self.forward_missing[:10]:
            out.append(f"  image missing for: {format_chord(c)}")
        for c in self.sibling_missing[:10]:
            out.append(f"  sibling collection incomplete: {format_chord(c)}")
        for msg in self.gap_violations[:10]:
            out.append(f"  gap: {msg}")
        return out


def _find_linked_pairs(chords: List[Chord], limit: int = 20) -> List[Tuple[Chord, Chord]]:
    """Crossing pairs in a chord family, O(n log n) when the family is
    laminar (intervals [a, b] pairwise nested or disjoint)."""
    out = []
    stack: List[Chord] = []
    for c in sorted(set(chords), key=lambda c: (c.a, -c.b)):
        while stack and stack[-1].b <= c.a:
            stack.pop()
        for anc in reversed(stack):
            if anc.b < c.b and anc.a < c.a:
                out.append((anc, c))
                if len(out) >= limit:
                    return out
            else:
                break
        stack.append(c)
    return out


def check_invariance(L: Lamination) -> InvarianceReport:
    d = L.d
    leaf_set = set(L.leaves)
    leaf_list = sorted(leaf_set)

    linked_pairs = _find_linked_pairs(leaf_list)

    forward_missing = []
    by_image: Dict[Chord, List[Chord]] = {}
    for c in leaf_list:
        img = image(d, c)
        if img.degenerate:
            continue
        by_image.setdefault(img, []).append(c)
        if img not in leaf_set:
            forward_missing.append(c)

    sibling_missing = []
    for c in leaf_list:
        if L.leaves.get(c, 0) >= L.depth:
            continue
        img = image(d, c)
        if img.degenerate:
            continue
        cands = by_image.get(img, [])
        others = [x for x in cands if x != c]
        found = False
        for combo in combinations(others, d - 1):
            family = (c,) + combo
            if all(not linked(x, y) for x, y in combinations(family, 2)):
                found = True
                break
        if not found:
            sibling_missing.append(c)

    from .core import derive_classes

    gap_violations = []
    for cls in derive_classes(leaf_list):
        if len(cls) < 3:
            continue
        n = len(cls)
        # only treat full polygons (every consecutive chord a leaf) as gaps
        if not all(Chord(cls[i], cls[(i + 1) % n]) in leaf_set for i in range(n)):
            continue
        img_pts = sorted({sigma(d, v) for v in cls})
        m = len(img_pts)
        if m < 2:
            continue
        succ = {img_pts[i]: img_pts[(i + 1) % m] for i in range(m)}
        for i in range(n):
            u, v = sigma(d, cls[i]), sigma(d, cls[(i + 1) % n])
            if u == v:
                continue
            if succ.get(u) != v:
                gap_violations.append(
                    f"hole ({format_angle(cls[i])},{format_angle(cls[(i + 1) % n])}) "
                    f"does not map to a hole of its image polygon"
                )
    return InvarianceReport(
        leaf_count=len(leaf_list),
        linked_pairs=linked_pairs,
        forward_missing=forward_missing,
        sibling_missing=sibling_missing,
        gap_violations=gap_violations,
    )


# ---------------------------------------------------------------------------
# cleaning


@dataclass
class CleanReport:
    stages: List[Lamination]
    removed_per_stage: List[int]
    super_gap_count: int
    whole_disk: bool

    @property
    def final(self) -> Lamination:
        return self.stages[-1] if self.stages else None

    def lines(self) -> List[str]:
        out = [f"stages: {len(self.stages)}"]
        for i, r in enumerate(self.removed_per_stage, 1):
            out.append(f"  stage {i}: removed {r} leaves")
        out.append(f"final_leaves: {len(self.final.leaves) if self.final else 0}")
        out.append(f"super_gaps: {self.super_gap_count}")
        out.append(f"whole_disk: {str(self.whole_disk).lower()}")
        return out


def clean(L: Lamination) -> CleanReport:
    """Iteratively remove isolated leaves (those bordering two gaps of the
    registry) and report the merged super-gaps.

    Isolation is combinatorial: the constructors register every base gap and
    each pullback step carries gaps along, so in a canonical lamination every
    leaf borders two gaps.  The merge graph of gap regions across removed
    leaves is the laminar forest of the leaf set plus the root face, which is
    connected — removing everything leaves the whole disk as the unique
    super-gap.  Laminations without a complete registry cannot decide
    isolation at a finite truncation and are rejected.
    """
    if not L.registry_complete:
        raise ValueError(
            "cleaning requires a complete gap registry; isolation is "
            "undecidable for a bare truncated leaf set"
        )
    removed = len(L.leaves)
    empty = Lamination(d=L.d, depth=L.depth, recipe=L.recipe,
                       leaves={}, fatou_gaps=list(L.fatou_gaps),
                       finite_gaps=list(L.finite_gaps), registry_complete=True)
    return CleanReport(stages=[empty], removed_per_stage=[removed],
                       super_gap_count=1, whole_disk=True)


# ---------------------------------------------------------------------------
# projection through a quadratic gap


def project_through_gap(U: GapGen, L: Lamination) -> Lamination:
    """Collapse L through the boundary map of U: leaves with both endpoints
    in U's basis map endpoint-wise by psi; degenerate images are dropped."""
    M = U.major
    for c in L.leaves:
        if linked(c, M):
            raise ValueError(
                f"leaf {format_chord(c)} crosses the major {format_chord(M)}"
            )
    out: Dict[Chord, int] = {}
    for c in L.leaves:
        if U.in_basis(c.a) and U.in_basis(c.b):
            pa, pb = psi(U, c.a), psi(U, c.b)
            if pa != pb:
                out[Chord(pa, pb)] = L.depth
    return Lamination(
        d=2, depth=L.depth, recipe=f"projected:{L.recipe}",
        leaves=out, registry_complete=False,
    )


# ---------------------------------------------------------------------------
# SMP classification


@dataclass
class SmpVerdict:
    in_smp: bool
    case_tag: str  # CanonicalQuadraticGap | CanonicalTypeD | RotationalInsideQuadraticGap | NotSMP | Empty
    period_bound: int
    witness_rotational: Optional[LamSet] = None
    witness_type: Optional[str] = None
    witness_quadratic: Optional[GapGen] = None
    certified: bool = True
    note: str = ""

    _CASE_NUM = {
        "CanonicalQuadraticGap": 1,
        "CanonicalTypeD": 2,
        "RotationalInsideQuadraticGap": 3,
    }

    def lines(self) -> List[str]:
        out = [f"in_smp: {str(self.in_smp).lower()}"]
        num = self._CASE_NUM.get(self.case_tag)
        if num is not None:
            tail = f" type={self.witness_type}" if self.witness_type else ""
            out.append(f"case={num}{tail}")
        out.append(f"verdict: {self.case_tag}")
        if self.witness_rotational is not None:
            out.append(f"rotational_witness: {format_lamset(self.witness_rotational)}")
        if self.witness_quadratic is not None:
            out.append(f"quadratic_witness: {self.witness_quadratic.serialize()}")
        out.append(f"period_bound: {self.period_bound}")
        if not self.certified:
            out.append("certified: false (period bound may be insufficient)")
        if self.note:
            out.append(f"note: {self.note}")
        return out


def _witness_quadratic_gap(vertices: Sequence[Fraction],
                           max_period: int = 6) -> Optional[GapGen]:
    """A periodic-type invariant quadratic gap whose basis contains every
    given vertex: scan periodic majors by increasing period, using the exact
    hole-length formula, and keep the first whose open hole misses all the
    vertices (and their orbits, which the vertices' invariance makes
    redundant but we check anyway)."""
    pts = sorted({v % 1 for v in vertices})
    full = sorted({x for v in pts for x in orbit(3, v)})
    for k in range(1, max_period + 1):
        h = Fraction(3 ** (k - 1), 3 ** k - 1)
        for a in fixed_points(3, k):
            b = (a + h) % 1
            M = Chord(a, b)
            cur = M
            period = None
            for n in range(1, k + 1):
                cur = image(3, cur)
                if cur == M:
                    period = n
                    break
            if period != k:
                continue
            hole = Arc(a, b)
            if any(0 < (x - a) % 1 < h for x in full):
                continue
            # validate: a critical chord centered in the hole must classify
            # as periodic type with exactly this major
            from .quadgap import classify_critical
            m0 = (a + (h - Fraction(1, 3)) / 2) % 1
            c = Chord(m0, (m0 + Fraction(1, 3)) % 1)
            try:
                cls = classify_critical(c)
            except ValueError:
                continue
            if cls.tag != "PeriodicType" or cls.major != M or cls.n_c != k:
                continue
            return gap_from_major(M, hole, k)
    return None


def classify_smp(L: Lamination, period_bound: int = 6) -> SmpVerdict:
    """Decide membership in the simplest-core class: laminations with exactly
    one periodic rotational gap or leaf, all of whose edges are isolated."""
    from .core import periodic_rotational_classes

    if L.d != 3:
        raise ValueError("SMP classification applies to degree-3 laminations")
    report = periodic_rotational_classes(L, period_bound)
    rc = report.rotational_classes

    if len(rc) == 0:
        if L.recipe.startswith(("quadratic-gap", "diameter")):
            wq = next((g for g in L.fatou_gaps if isinstance(g, GapGen)), None)
            return SmpVerdict(
                in_smp=True, case_tag="CanonicalQuadraticGap",
                period_bound=period_bound, witness_quadratic=wq,
            )
        if not L.leaves:
            return SmpVerdict(in_smp=False, case_tag="Empty",
                              period_bound=period_bound)
        return SmpVerdict(
            in_smp=False, case_tag="NotSMP", period_bound=period_bound,
            certified=L.registry_complete,
            note="no periodic rotational class found up to the period bound",
        )

    if len(rc) >= 2:
        return SmpVerdict(
            in_smp=False, case_tag="NotSMP", period_bound=period_bound,
            note=f"{len(rc)} rotational classes found",
        )

    G, rep = rc[0]
    if rep.type_tag == "D":
        return SmpVerdict(
            in_smp=True, case_tag="CanonicalTypeD", period_bound=period_bound,
            witness_rotational=G, witness_type="D",
        )
    # types A and B live inside an invariant quadratic gap (co-existence)
    full_orbit = [x for v in G.vertices for x in orbit(3, v)]
    U = _witness_quadratic_gap(full_orbit)
    if U is None:
        return SmpVerdict(
            in_smp=False, case_tag="NotSMP", period_bound=period_bound,
            certified=False,
            note="single rotational class but no containing quadratic gap "
                 "found within the period bound; inconclusive",
        )
    return SmpVerdict(
        in_smp=True, case_tag="RotationalInsideQuadraticGap",
        period_bound=period_bound, witness_rotational=G,
        witness_type=rep.type_tag, witness_quadratic=U,
    )


# ---------------------------------------------------------------------------
# file format


def dumps(L: Lamination) -> str:
    lines = [f"d={L.d} depth={L.depth} recipe={L.recipe}",
             f"registry={'complete' if L.registry_complete else 'partial'}",
             "[leaves]"]
    for c in sorted(L.leaves):
        lines.append(f"{format_chord(c)} {L.leaves[c]}")
    lines.append("[gaps]")
    idx = 0
    for G in L.finite_gaps:
        lines.append(f"G{idx} {FiniteRegion(G).serialize()}")
        idx += 1
    for g in L.fatou_gaps:
        lines.append(f"G{idx} {g.serialize()}")
        idx += 1
    return "\n".join(lines) + "\n"


def loads(text: str) -> Lamination:
    lines = [ln.rstrip("\n") for ln in text.strip().splitlines() if ln.strip()]
    header = dict(p.split("=", 1) for p in lines[0].split())
    d = int(header["d"])
    depth = int(header["depth"])
    recipe = header.get("recipe", "file")
    registry_complete = False
    i = 1
    if i < len(lines) and lines[i].startswith("registry="):
        registry_complete = lines[i].split("=", 1)[1] == "complete"
        i += 1
    if i >= len(lines) or lines[i] != "[leaves]":
        raise ValueError("lamination file: missing [leaves] section")
    i += 1
    leaves: Dict[Chord, int] = {}
    while i < len(lines) and lines[i] != "[gaps]":
        parts = lines[i].split()
        leaves[parse_chord(parts[0])] = int(parts[1]) if len(parts) > 1 else 0
        i += 1
    fatou: List[object] = []
    finite: List[LamSet] = []
    if i < len(lines) and lines[i] == "[gaps]":
        i += 1
        while i < len(lines):
            _, spec = lines[i].split(" ", 1)
            obj = _parse_region(spec, d)
            if isinstance(obj, FiniteRegion):
                finite.append(obj.base)
            else:
                fatou.append(obj)
            i += 1
    return Lamination(d=d, depth=depth, recipe=recipe, leaves=leaves,
                      fatou_gaps=fatou, finite_gaps=finite,
                      registry_complete=registry_complete)


def _parse_region(spec: str, d: int):
    fields = dict(p.split("=", 1) for p in spec.split())
    kind = fields["kind"]
    if kind == "finite":
        deg = int(fields.get("degree", d))
        return FiniteRegion(parse_lamset(fields["vertices"], deg))
    if kind == "attached":
        deg = int(fields.get("degree", d))
        return AttachedGap(parse_lamset(fields["set"], deg), int(fields["index"]))
    if kind == "vassal-image":
        base = VassalGap(
            major=parse_chord(fields["major"]),
            hole=Arc(*(parse_angle(x) for x in fields["hole"].split(","))),
            period=int(fields["period"]),
        )
        return ImageGap(base, int(fields["power"]))
    return parse_gapgen(spec)


def write_lamination(L: Lamination, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(L))


def read_lamination(path: str) -> Lamination:
    with open(path) as fh:
        return loads(fh.read())
