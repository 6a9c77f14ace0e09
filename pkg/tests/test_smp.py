from fractions import Fraction as F

import pytest

from trilam.chords import Chord
from trilam.lamination import (
    Lamination,
    canonical_diameter,
    canonical_of_quadratic_gap,
    canonical_of_rotational,
    classify_smp,
)
from trilam.lamsets import parse_lamset
from trilam.quadgap import build_gap

FINGAP1 = parse_lamset("7/26,4/13,11/26,10/13,21/26,12/13")
FINGAP2 = parse_lamset("7/26,11/26,21/26")
FINGAP3 = parse_lamset("1/26,3/26,9/26")


def test_quadratic_gap_canonical_is_case_one():
    U, _ = build_gap(Chord(F(145, 156), F(41, 156)), depth=0)
    v = classify_smp(canonical_of_quadratic_gap(U, depth=4))
    assert v.in_smp and v.case_tag == "CanonicalQuadraticGap"
    assert "case=1" in "\n".join(v.lines())


def test_diameter_canonical_is_case_one():
    v = classify_smp(canonical_diameter(depth=4))
    assert v.in_smp and v.case_tag == "CanonicalQuadraticGap"


def test_type_d_canonical_is_case_two():
    v = classify_smp(canonical_of_rotational(FINGAP1, depth=4))
    assert v.in_smp and v.case_tag == "CanonicalTypeD"
    assert v.witness_type == "D"
    assert v.witness_rotational.vertices == FINGAP1.vertices
    assert "case=2 type=D" in "\n".join(v.lines())


def test_type_b_canonical_is_case_three():
    v = classify_smp(canonical_of_rotational(FINGAP2, depth=4))
    assert v.in_smp and v.case_tag == "RotationalInsideQuadraticGap"
    assert v.witness_type == "B"
    # the containing quadratic gap has a genuinely periodic major
    assert v.witness_quadratic is not None
    U = v.witness_quadratic
    for x in FINGAP2.vertices:
        assert U.in_basis(x)


def test_type_a_canonical_is_case_three_with_diameter_gap():
    v = classify_smp(canonical_of_rotational(FINGAP3, depth=4))
    assert v.in_smp and v.case_tag == "RotationalInsideQuadraticGap"
    assert v.witness_type == "A"
    # the triangle sits in the half-disk gap with major 0-1/2
    assert v.witness_quadratic.major == Chord(F(0), F(1, 2))


def test_two_rotational_classes_are_not_smp():
    # two unlinked rotational triangles with different rotation numbers
    leaves = {}
    for tri in ([F(1, 26), F(3, 26), F(9, 26)],
                [F(17, 26), F(23, 26), F(25, 26)]):
        for i in range(3):
            leaves[Chord(tri[i], tri[(i + 1) % 3])] = 0
    L = Lamination(d=3, depth=0, recipe="manual", leaves=leaves)
    v = classify_smp(L)
    assert not v.in_smp and v.case_tag == "NotSMP"


def test_empty_lamination_verdict():
    v = classify_smp(Lamination(d=3, depth=0, recipe="manual", leaves={}))
    assert not v.in_smp and v.case_tag == "Empty"


def test_non_rotational_leaf_set_is_not_smp():
    L = Lamination(d=3, depth=0, recipe="manual",
                   leaves={Chord(F(0), F(1, 8)): 0})
    v = classify_smp(L)
    assert not v.in_smp and v.case_tag == "NotSMP"


def test_rejects_degree_two():
    L = Lamination(d=2, depth=0, recipe="manual", leaves={})
    with pytest.raises(ValueError):
        classify_smp(L)
