"""Invariant quadratic gaps of the tripling map.

A critical chord c determines an open arc L(c) of length 2/3 (the side away
from the short side of c).  The points whose whole forward orbit stays in
the closure of L(c) span a stand-alone invariant quadratic gap.  The orbit
of c sorts these gaps into three kinds:

* regular critical  -- the orbit of sigma(c) stays in the open arc; c itself
  is the major and its hole has length exactly 1/3;
* caterpillar       -- the orbit stays in the closed arc and hits an endpoint
  of c (which is then periodic); the associated chain gap is built by
  `build_caterpillar`;
* periodic type     -- the orbit escapes the closed arc after n_c steps; the
  major is a periodic leaf joining two sigma^{n_c}-fixed points, with hole
  length 3^(k-1)/(3^k-1) for k = n_c.

All enumeration here is exact; depth bounds the number of pullback levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .chords import Chord, format_chord, image, is_critical, parse_chord
from .circle import (
    Arc,
    arc_length,
    contains,
    fixed_points,
    format_angle,
    orbit,
    orbit_preperiod_period,
    parse_angle,
    preimages,
    sigma,
)

THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class CriticalClass:
    tag: str  # RegularCritical | Caterpillar | PeriodicType
    major: Chord
    n_c: Optional[int] = None
    major_period: Optional[int] = None
    periodic_endpoint: Optional[Fraction] = None
    image_in_pi: bool = False  # orbit of sigma(c) never leaves closure L(c)

    def lines(self) -> List[str]:
        out = [f"tag: {self.tag}", f"major: {format_chord(self.major)}"]
        if self.n_c is not None:
            out.append(f"n_c: {self.n_c}")
        if self.major_period is not None:
            out.append(f"major_period: {self.major_period}")
        if self.periodic_endpoint is not None:
            out.append(f"periodic_endpoint: {format_angle(self.periodic_endpoint)}")
        out.append(f"image_in_basis: {str(self.image_in_pi).lower()}")
        return out


def _short_side(c: Chord) -> Tuple[Fraction, Fraction]:
    """Endpoints (s, t) of the critical chord with (s, t) the positively
    oriented arc of length 1/3."""
    if (c.b - c.a) % 1 == THIRD:
        return c.a, c.b
    return c.b, c.a


def big_arc(c: Chord) -> Arc:
    """L(c): the open arc of length 2/3 on the far side of c."""
    s, t = _short_side(c)
    return Arc(t, s)


def _in_closure(A: Arc, x: Fraction) -> bool:
    t = (x - A.start) % 1
    return t <= arc_length(A)


def _nearest_fixed(point: Fraction, n: int, direction: int) -> Fraction:
    """The sigma_3^n-fixed point closest to `point` in the given direction
    (+1 positive, -1 negative), excluding `point` itself."""
    best = None
    best_dist = None
    for f in fixed_points(3, n):
        dist = ((f - point) * direction) % 1
        if dist == 0:
            continue
        if best_dist is None or dist < best_dist:
            best, best_dist = f, dist
    return best


def _leaf_period(d: int, c: Chord) -> Optional[int]:
    cur = c
    for n in range(1, 1 + 2 * max(c.a.denominator, c.b.denominator, 2) ** 2):
        cur = image(d, cur)
        if cur == c:
            return n
    return None


def _point_period(d: int, x: Fraction) -> Optional[int]:
    pre, per = orbit_preperiod_period(d, x)
    return per if pre == 0 else None


def caterpillar_head(c: Chord) -> Tuple[Chord, Fraction, int, int]:
    """For a critical chord with a periodic endpoint y, the head of its
    canonical chain gap: Chord(y, z) with z the sigma^k-fixed accumulation
    point of the chain (k = period of y).

    Returns (head, periodic_endpoint, period, direction) where direction is
    +1 if the chain walks positively from the non-periodic endpoint.
    """
    s, t = _short_side(c)
    k_s = _point_period(3, s)
    k_t = _point_period(3, t)
    if k_s is None and k_t is None:
        raise ValueError("caterpillar construction needs a periodic endpoint")
    if k_s is not None:
        y, y_other, k, direction = s, t, k_s, +1
    else:
        y, y_other, k, direction = t, s, k_t, -1
    # The chain hole behind the m-th leaf has length 3^(-mk-1); summing the
    # geometric series locates the sigma^k-fixed accumulation point.
    z = (y_other + direction * Fraction(1, 3 * (3 ** k - 1))) % 1
    return Chord(y, z), y, k, direction


def classify_critical(c: Chord) -> CriticalClass:
    if not is_critical(3, c):
        raise ValueError(f"{c} is not a critical chord of the tripling map")
    s, t = _short_side(c)
    L = big_arc(c)
    orb = orbit(3, sigma(3, c.a))

    escape = None
    hits_boundary = False
    for i, x in enumerate(orb):
        if not _in_closure(L, x):
            escape = i
            break
        if x == s or x == t:
            hits_boundary = True

    if escape is not None:
        n_c = escape + 1  # sigma^n(c) = orb[n-1]
        y = _nearest_fixed(t, n_c, +1)
        z = _nearest_fixed(s, n_c, -1)
        if not (contains(L, y) and contains(L, z)):
            raise AssertionError("major endpoints escaped L(c)")
        major = Chord(y, z)
        assert _leaf_period(3, major) == n_c
        return CriticalClass(
            tag="PeriodicType", major=major, n_c=n_c, major_period=n_c,
            image_in_pi=False,
        )

    if hits_boundary:
        head, y, k, _ = caterpillar_head(c)
        return CriticalClass(
            tag="Caterpillar", major=head, major_period=k,
            periodic_endpoint=y, image_in_pi=True,
        )

    return CriticalClass(tag="RegularCritical", major=c, image_in_pi=True)


# ---------------------------------------------------------------------------
# gap generators


@dataclass(frozen=True)
class GapGen:
    """Symbolic recipe for an invariant quadratic gap: the major chord and
    the positively oriented hole (a, b) behind it.  Basis points are exactly
    the angles whose forward orbit avoids the open hole."""

    kind: str  # regular-critical | periodic-type | above-diameter | below-diameter
    major: Chord
    hole: Arc
    period: Optional[int] = None  # leaf period of the major; None if critical
    critical: Optional[Chord] = None
    degree: int = 3

    @property
    def hole_length(self) -> Fraction:
        return arc_length(self.hole)

    def in_basis(self, x: Fraction) -> bool:
        return all(not contains(self.hole, p) for p in orbit(self.degree, x))

    def base_edges(self) -> List[Tuple[Chord, Arc]]:
        """The major orbit with its holes (a single critical edge for a
        regular-critical gap)."""
        if self.period is None:
            return [(self.major, self.hole)]
        out = [(self.major, self.hole)]
        a, b = self.hole.start, self.hole.end
        h = self.hole_length
        for i in range(1, self.period):
            a, b = sigma(3, a), sigma(3, b)
            h = 3 * h - 1 if i == 1 else 3 * h
            edge_hole = Arc(a, b)
            assert arc_length(edge_hole) == h
            out.append((Chord(a, b), edge_hole))
        return out

    def edge_holes(self, depth: int) -> List[Tuple[Chord, Arc]]:
        """All edges up to `depth` pullback levels of the major orbit, with
        their holes.  Every edge is an iterated preimage of the major."""
        frontier = self.base_edges()
        seen = {e for e, _ in frontier}
        out = list(frontier)
        for _ in range(depth):
            nxt = []
            for _, hole in frontier:
                hlen = arc_length(hole) / 3
                for p in preimages(3, hole.start):
                    q = (p + hlen) % 1
                    if contains(self.hole, p) or contains(self.hole, q):
                        continue
                    e = Chord(p, q)
                    if e in seen:
                        continue
                    seen.add(e)
                    nxt.append((e, Arc(p, q)))
            out.extend(nxt)
            frontier = nxt
        return out

    def edge_chords(self, depth: int) -> List[Chord]:
        return [e for e, _ in self.edge_holes(depth)]

    def vertices(self, depth: int) -> List[Fraction]:
        """Edge endpoints plus every periodic basis point of period <= depth
        (the gap basis is a Cantor set; periodic points fill it in)."""
        pts = set()
        for e, _ in self.edge_holes(depth):
            pts.add(e.a)
            pts.add(e.b)
        if self.critical is not None:
            for x in orbit(3, sigma(3, self.critical.a)):
                if self.in_basis(x):
                    pts.add(x)
        for p in range(1, depth + 1):
            q = 3 ** p - 1
            for i in range(q):
                x = Fraction(i, q)
                if x not in pts and self.in_basis(x):
                    pts.add(x)
        return sorted(pts)

    def serialize(self) -> str:
        parts = [
            f"kind={self.kind}",
            f"major={format_chord(self.major)}",
            f"hole={format_angle(self.hole.start)},{format_angle(self.hole.end)}",
            f"period={self.period if self.period is not None else '-'}",
            f"critical={format_chord(self.critical) if self.critical else '-'}",
        ]
        return " ".join(parts)

    def __repr__(self):
        return f"GapGen<{self.serialize()}>"


def parse_gapgen(text: str) -> "GapGen":
    fields = dict(p.split("=", 1) for p in text.split())
    kind = fields["kind"]
    if kind == "vassal":
        return VassalGap(
            major=parse_chord(fields["major"]),
            hole=_parse_arc(fields["hole"]),
            period=int(fields["period"]),
        )
    hs, he = fields["hole"].split(",")
    return GapGen(
        kind=kind,
        major=parse_chord(fields["major"]),
        hole=Arc(parse_angle(hs), parse_angle(he)),
        period=None if fields["period"] == "-" else int(fields["period"]),
        critical=None if fields["critical"] == "-" else parse_chord(fields["critical"]),
    )


def _parse_arc(text: str) -> Arc:
    hs, he = text.split(",")
    return Arc(parse_angle(hs), parse_angle(he))


def build_gap(c: Chord, depth: int = 6) -> Tuple[GapGen, List[Fraction]]:
    """The invariant quadratic gap spanned by orbits avoiding the major hole
    of the critical chord `c`, together with its enumerated vertices."""
    cls = classify_critical(c)
    if cls.tag == "Caterpillar":
        raise ValueError(
            "caterpillar critical chords do not span a plain quadratic gap; "
            "use build_caterpillar"
        )
    s, t = _short_side(c)
    if cls.tag == "RegularCritical":
        gap = GapGen(kind="regular-critical", major=c, hole=Arc(s, t), critical=c)
    else:
        y, z = None, None
        # hole runs from z (scan backward from s) to y (scan forward from t)
        for u, v in ((cls.major.a, cls.major.b), (cls.major.b, cls.major.a)):
            if ((u - t) % 1) < ((v - t) % 1):
                y, z = u, v
        gap = GapGen(
            kind="periodic-type", major=cls.major, hole=Arc(z, y),
            period=cls.n_c, critical=c,
        )
    return gap, gap.vertices(depth)


def gap_from_major(major: Chord, hole: Arc, period: int) -> GapGen:
    """Recipe for a periodic-type gap given its periodic major directly."""
    return GapGen(kind="periodic-type", major=major, hole=hole, period=period)


def below_diameter() -> GapGen:
    """The invariant quadratic gap of orbits below the diameter 0-1/2."""
    gap, _ = build_gap(Chord(Fraction(1, 12), Fraction(5, 12)), depth=0)
    return GapGen(kind="below-diameter", major=gap.major, hole=gap.hole,
                  period=gap.period, critical=gap.critical)


def above_diameter() -> GapGen:
    """The invariant quadratic gap of orbits above the diameter 0-1/2."""
    gap, _ = build_gap(Chord(Fraction(7, 12), Fraction(11, 12)), depth=0)
    return GapGen(kind="above-diameter", major=gap.major, hole=gap.hole,
                  period=gap.period, critical=gap.critical)


# ---------------------------------------------------------------------------
# vassal


@dataclass(frozen=True)
class VassalGap:
    """The period-k quadratic gap spanned by the two-arc horseshoe
    [a, b - 1/3] u [a + 1/3, b] inside the major hole (a, b)."""

    major: Chord
    hole: Arc  # the parent's major hole (a, b); the vassal lives inside it
    period: int
    kind: str = "vassal"
    degree: int = 3

    @property
    def a(self) -> Fraction:
        return self.hole.start

    @property
    def b(self) -> Fraction:
        return self.hole.end

    @property
    def arcs(self) -> Tuple[Arc, Arc]:
        return (
            Arc(self.a, (self.b - THIRD) % 1),
            Arc((self.a + THIRD) % 1, self.b),
        )

    @property
    def co_major(self) -> Chord:
        """M''(U): the critical edge of the vassal, sharing its image with
        the major."""
        return Chord((self.b - THIRD) % 1, (self.a + THIRD) % 1)

    def _h(self) -> Fraction:
        return arc_length(self.hole)

    def _g0(self, u: Fraction) -> Fraction:
        return u / 3 ** self.period

    def _g1(self, u: Fraction) -> Fraction:
        h = self._h()
        return h - (h - u) / 3 ** self.period

    def _words(self, depth: int):
        level = [()]
        for _ in range(depth):
            level = [w + (bit,) for w in level for bit in (0, 1)]
            yield from level

    def _apply(self, w, u: Fraction) -> Fraction:
        for bit in reversed(w):
            u = self._g0(u) if bit == 0 else self._g1(u)
        return u

    def vertices(self, depth: int) -> List[Fraction]:
        h = self._h()
        pts = {self.a, self.b}
        level = [()]
        for _ in range(depth):
            level = [w + (bit,) for w in level for bit in (0, 1)]
        for w in level:
            pts.add((self.a + self._apply(w, Fraction(0))) % 1)
            pts.add((self.a + self._apply(w, h)) % 1)
        return sorted(pts)

    def edge_chords(self, depth: int) -> List[Chord]:
        h = self._h()
        u0, u1 = h - THIRD, THIRD  # parameters of the co-major endpoints
        out = [self.major, self.co_major]
        level = [()]
        for _ in range(depth):
            level = [w + (bit,) for w in level for bit in (0, 1)]
            for w in level:
                out.append(Chord(
                    (self.a + self._apply(w, u0)) % 1,
                    (self.a + self._apply(w, u1)) % 1,
                ))
        return out

    def in_basis(self, x: Fraction) -> bool:
        """Every sigma^k-iterate stays in the closed two-arc horseshoe."""
        h = self._h()
        pre, per = orbit_preperiod_period(3 ** self.period, x)
        cur = x % 1
        for _ in range(pre + per):
            u = (cur - self.a) % 1
            if not (u <= h - THIRD or THIRD <= u <= h):
                return False
            cur = sigma(3 ** self.period, cur)
        return True

    def serialize(self) -> str:
        return (
            f"kind=vassal major={format_chord(self.major)} "
            f"hole={format_angle(self.hole.start)},{format_angle(self.hole.end)} "
            f"period={self.period} critical={format_chord(self.co_major)}"
        )

    def __repr__(self):
        return f"VassalGap<{self.serialize()}>"


def vassal(U: GapGen) -> VassalGap:
    if U.period is None:
        raise ValueError("only periodic-type gaps have a vassal")
    return VassalGap(major=U.major, hole=U.hole, period=U.period)


# ---------------------------------------------------------------------------
# caterpillar gaps


@dataclass(frozen=True)
class CaterpillarGap:
    """Chain gap: a periodic head leaf, a critical leaf hanging off its
    periodic endpoint, and a chain of preimage leaves accumulating on the
    other endpoint of the head.  Never part of an invariant lamination."""

    head: Chord
    critical: Chord
    periodic_endpoint: Fraction
    period: int
    direction: int
    kind: str = "caterpillar"
    degree: int = 3

    def chain(self, depth: int) -> List[Fraction]:
        """Chain vertices p_1, p_2, ... (p_1 is the non-periodic endpoint of
        the critical leaf); hole lengths shrink by 3^-period per step."""
        p = self.critical.other_endpoint(self.periodic_endpoint)
        out = [p]
        for m in range(1, depth):
            p = (p + self.direction * Fraction(1, 3 ** (m * self.period + 1))) % 1
            out.append(p)
        return out

    def vertices(self, depth: int) -> List[Fraction]:
        pts = {self.head.a, self.head.b, *self.chain(depth)}
        return sorted(pts)

    def edge_chords(self, depth: int) -> List[Chord]:
        ch = self.chain(depth)
        out = [self.head, self.critical]
        out.extend(Chord(ch[i], ch[i + 1]) for i in range(len(ch) - 1))
        return out

    def serialize(self) -> str:
        return (
            f"kind=caterpillar head={format_chord(self.head)} "
            f"critical={format_chord(self.critical)} period={self.period} "
            f"direction={self.direction}"
        )


def build_caterpillar(c: Chord, side: Optional[Fraction] = None) -> CaterpillarGap:
    """The canonical chain gap of a critical chord with a periodic endpoint."""
    head, y, k, direction = caterpillar_head(c)
    if side is not None and (side % 1) != y:
        raise ValueError(
            f"{format_angle(side)} is not the periodic endpoint of {c}"
        )
    return CaterpillarGap(
        head=head, critical=c, periodic_endpoint=y, period=k, direction=direction
    )


# ---------------------------------------------------------------------------
# boundary collapse onto the doubling map


def _binary_value(bits: List[int], preperiod: int) -> Fraction:
    """Exact value of the binary expansion 0.b0 b1 ... with the tail from
    `preperiod` on repeating."""
    head = bits[:preperiod]
    tail = bits[preperiod:]
    val = Fraction(0)
    for j, b in enumerate(head):
        val += Fraction(b, 2 ** (j + 1))
    if tail:
        tail_int = 0
        for b in tail:
            tail_int = 2 * tail_int + b
        val += Fraction(tail_int, (2 ** len(tail) - 1) * 2 ** preperiod)
    return val % 1


def psi(U, x: Fraction) -> Fraction:
    """Collapse a basis point of a quadratic gap to its doubling-map angle.

    Itinerary coding: the basis splits into two arcs by the fiber of the
    gap's critical chord; the itinerary of x (under sigma for an invariant
    gap, under sigma^k for a vassal) read as a binary expansion is the
    image angle.  The labels are chosen so the hole-start side reads 0; for
    the diameter gaps this sends both major endpoints to 0.
    """
    x = x % 1
    if not U.in_basis(x):
        raise ValueError(f"{format_angle(x)} is not in the basis of {U}")
    if isinstance(U, VassalGap):
        return _psi_vassal(U, x)
    b = U.hole.end
    step = 1

    def bit(p: Fraction) -> int:
        return 0 if (p - b) % 1 < THIRD else 1

    pre, per = orbit_preperiod_period(3 ** step, x)
    pts = []
    cur = x
    for _ in range(pre + per):
        pts.append(cur)
        cur = sigma(3 ** step, cur)
    bits = [bit(p) for p in pts]
    return _binary_value(bits, pre)


def _psi_vassal(V: VassalGap, x: Fraction) -> Fraction:
    h = V._h()
    k = V.period

    def bit(p: Fraction) -> int:
        return 0 if (p - V.a) % 1 <= h - THIRD else 1

    pre, per = orbit_preperiod_period(3 ** k, x)
    pts = []
    cur = x
    for _ in range(pre + per):
        pts.append(cur)
        cur = sigma(3 ** k, cur)
    bits = [bit(p) for p in pts]
    return _binary_value(bits, pre)
