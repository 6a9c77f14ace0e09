from fractions import Fraction as F

import pytest

from trilam.chords import Chord
from trilam.lamination import (
    AttachedGap,
    Lamination,
    PullbackAmbiguityError,
    attached_cycle,
    canonical_diameter,
    canonical_of_quadratic_gap,
    canonical_of_rotational,
    check_invariance,
    clean,
    dumps,
    loads,
    project_through_gap,
    quadratic_canonical,
    read_lamination,
    write_lamination,
)
from trilam.lamsets import LamSet, parse_lamset
from trilam.quadgap import above_diameter, below_diameter, build_gap

FINGAP1 = parse_lamset("7/26,4/13,11/26,10/13,21/26,12/13")
FINGAP3 = parse_lamset("1/26,3/26,9/26")
PERIOD3_CRITICAL = Chord(F(145, 156), F(41, 156))


def _gap(c, kind=None):
    g, _ = build_gap(c, depth=0)
    return g


# ---------------------------------------------------------------------------
# canonical constructions


def test_canonical_diameter():
    L = canonical_diameter(depth=4)
    assert Chord(F(0), F(1, 2)) in L.leaves
    assert L.leaves[Chord(F(0), F(1, 2))] == 0
    # the sibling pair of the diameter shows up at level 1
    assert L.leaves[Chord(F(1, 6), F(1, 3))] == 1
    assert L.leaves[Chord(F(2, 3), F(5, 6))] == 1
    assert len(L.leaves) == 3 ** 4
    assert check_invariance(L).ok


def test_canonical_same_from_both_diameter_gaps():
    La = canonical_of_quadratic_gap(above_diameter(), depth=4)
    Lb = canonical_of_quadratic_gap(below_diameter(), depth=4)
    assert La.leaves == Lb.leaves


def test_canonical_of_period3_gap():
    U = _gap(PERIOD3_CRITICAL)
    L = canonical_of_quadratic_gap(U, depth=4)
    rep = check_invariance(L)
    assert rep.ok
    # the major orbit seeds the lamination; the co-major of the vassal is
    # discovered as a preimage
    assert Chord(F(7, 26), F(12, 13)) in L.leaves
    assert Chord(F(10, 39), F(73, 78)) in L.leaves


def test_canonical_of_regular_critical_gap():
    U = _gap(Chord(F(1, 3), F(2, 3)))
    L = canonical_of_quadratic_gap(U, depth=4)
    assert Chord(F(1, 3), F(2, 3)) in L.leaves
    assert check_invariance(L).ok


def test_canonical_depth_monotone():
    U = _gap(PERIOD3_CRITICAL)
    small = canonical_of_quadratic_gap(U, depth=3)
    big = canonical_of_quadratic_gap(U, depth=4)
    assert set(small.leaves) <= set(big.leaves)
    for c, lvl in small.leaves.items():
        assert big.leaves[c] == lvl


def test_canonical_of_rotational_fingap1():
    L = canonical_of_rotational(FINGAP1, depth=4)
    for v in FINGAP1.vertices:
        assert any(c.has_endpoint(v) for c in L.leaves)
    assert check_invariance(L).ok
    assert L.finite_gaps == [FINGAP1]


def test_canonical_of_rotational_fingap3():
    L = canonical_of_rotational(FINGAP3, depth=4)
    assert Chord(F(1, 26), F(3, 26)) in L.leaves
    assert check_invariance(L).ok


def test_canonical_of_rotational_rejects_non_rotational():
    with pytest.raises(ValueError):
        canonical_of_rotational(LamSet([F(0), F(1, 8), F(3, 8)]), depth=2)


def test_attached_cycle_of_fingap1():
    cycle = attached_cycle(FINGAP1)
    assert len(cycle) == 6
    crit = [i for i, g in enumerate(cycle) if g.is_critical]
    assert len(crit) == 2
    for g in cycle:
        assert isinstance(g, AttachedGap)
        assert g.outer_edge in {c for c in g.edge_chords(2)}


def test_quadratic_canonical_basilica():
    G = LamSet([F(1, 3), F(2, 3)], degree_d=2)
    L = quadratic_canonical(G, depth=4)
    assert L.d == 2
    assert Chord(F(1, 3), F(2, 3)) in L.leaves
    assert Chord(F(1, 6), F(5, 6)) in L.leaves
    assert check_invariance(L).ok


def test_quadratic_canonical_rabbit():
    G = LamSet([F(1, 7), F(2, 7), F(4, 7)], degree_d=2)
    L = quadratic_canonical(G, depth=4)
    assert check_invariance(L).ok
    with pytest.raises(ValueError):
        quadratic_canonical(LamSet([F(1, 3), F(2, 3)], degree_d=3), depth=2)


# ---------------------------------------------------------------------------
# invariance checking


def test_check_invariance_flags_foreign_leaf():
    L = canonical_diameter(depth=3)
    L.leaves[Chord(F(0), F(1, 4))] = 0
    rep = check_invariance(L)
    assert not rep.ok
    assert rep.linked_pairs or rep.forward_missing or rep.sibling_missing


def test_check_invariance_flags_missing_image():
    L = Lamination(d=3, depth=1, recipe="manual",
                   leaves={Chord(F(1, 26), F(3, 26)): 0})
    rep = check_invariance(L)
    assert Chord(F(1, 26), F(3, 26)) in rep.forward_missing
    assert not rep.ok


def test_check_invariance_report_lines():
    rep = check_invariance(canonical_diameter(depth=3))
    text = "\n".join(rep.lines())
    assert "ok: true" in text
    assert f"leaves: {3 ** 3}" in text


# ---------------------------------------------------------------------------
# cleaning


def test_clean_canonical_to_whole_disk():
    L = canonical_diameter(depth=4)
    rep = clean(L)
    assert rep.whole_disk
    assert rep.super_gap_count == 1
    assert len(rep.final.leaves) == 0
    assert rep.removed_per_stage[0] == 3 ** 4
    # idempotent: cleaning the cleaned lamination removes nothing
    rep2 = clean(rep.final)
    assert rep2.whole_disk and rep2.removed_per_stage == [0]


def test_clean_rejects_bare_leaf_sets():
    L = Lamination(d=3, depth=0, recipe="manual",
                   leaves={Chord(F(0), F(1, 2)): 0})
    with pytest.raises(ValueError):
        clean(L)


def test_clean_rotational_canonical():
    rep = clean(canonical_of_rotational(FINGAP3, depth=4))
    assert rep.whole_disk and rep.super_gap_count == 1


# ---------------------------------------------------------------------------
# projection


def test_project_triangle_to_quadratic_rotational_set():
    M = Lamination(d=3, depth=0, recipe="manual", leaves={
        Chord(F(1, 26), F(3, 26)): 0,
        Chord(F(3, 26), F(9, 26)): 0,
        Chord(F(9, 26), F(1, 26)): 0,
    })
    P = project_through_gap(above_diameter(), M)
    assert P.d == 2
    assert sorted(P.leaves) == [
        Chord(F(1, 7), F(2, 7)),
        Chord(F(1, 7), F(4, 7)),
        Chord(F(2, 7), F(4, 7)),
    ]


def test_project_collapses_major_fiber():
    # every leaf of the diameter lamination either leaves the basis or
    # collapses to a point, so the projection is empty
    P = project_through_gap(above_diameter(), canonical_diameter(depth=4))
    assert len(P.leaves) == 0
    assert not P.registry_complete


def test_project_rejects_crossing_leaves():
    L = canonical_of_rotational(FINGAP3, depth=3)
    with pytest.raises(ValueError):
        project_through_gap(above_diameter(), L)


# ---------------------------------------------------------------------------
# file format


@pytest.mark.parametrize("make", [
    lambda: canonical_diameter(depth=3),
    lambda: canonical_of_quadratic_gap(_gap(PERIOD3_CRITICAL), depth=3),
    lambda: canonical_of_rotational(FINGAP1, depth=3),
    lambda: quadratic_canonical(LamSet([F(1, 3), F(2, 3)], degree_d=2), depth=3),
])
def test_dumps_loads_roundtrip(make):
    L = make()
    M = loads(dumps(L))
    assert M.leaves == L.leaves
    assert M.d == L.d and M.depth == L.depth and M.recipe == L.recipe
    assert M.registry_complete == L.registry_complete
    assert dumps(M) == dumps(L)


def test_write_read_roundtrip(tmp_path):
    L = canonical_of_rotational(FINGAP3, depth=3)
    path = str(tmp_path / "fingap3.lam")
    write_lamination(L, path)
    M = read_lamination(path)
    assert M.leaves == L.leaves
    assert dumps(M) == dumps(L)
    # the reloaded registry still supports cleaning
    assert clean(M).whole_disk


def test_loads_rejects_malformed():
    with pytest.raises(ValueError):
        loads("d=3 depth=1 recipe=x\nregistry=partial\n1/2 0\n")
