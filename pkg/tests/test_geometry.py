"""Substrate tests: exact rationals, metric, boxes, regions, addresses."""

import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primchaos.errors import InputError
from primchaos.geometry import (
    Address,
    Box,
    box1,
    box2,
    box_disjoint,
    box_in_boxes,
    closed_difference,
    cylinder,
    decimal_str,
    diameter,
    distance,
    eval_ternary_address,
    lexmax_point,
    lexmin_point,
    parse_rational,
    rat,
    rational_str,
    region,
    region_equal,
    region_intersect,
    region_subset,
    regions_disjoint,
)

A = Address.from_string


def corner_pair_diameter(boxes):
    """Independent diameter oracle: max Chebyshev distance over all pairs of
    box corners (attained there for any finite box union)."""
    corners = []
    for b in boxes:
        axes = [(b.lo[i], b.hi[i]) for i in range(b.dim)]
        corners.extend(product(*axes))
    return max(max(abs(p[i] - q[i]) for i in range(len(p)))
               for p in corners for q in corners)


def rand_fraction(rng, max_den=1000):
    den = rng.randint(1, max_den)
    return F(rng.randint(-max_den, max_den), den)


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------


def test_rational_round_trips_10k_pairs():
    rng = random.Random(20240817)
    for _ in range(10_000):
        a, b = rand_fraction(rng), rand_fraction(rng)
        assert (a + b) - b == a


def test_rational_normalization_idempotent():
    rng = random.Random(99)
    for _ in range(1000):
        a = rand_fraction(rng)
        again = F(a.numerator, a.denominator)
        assert again.numerator == a.numerator
        assert again.denominator == a.denominator
        assert a.denominator > 0


def test_rational_serialization():
    assert rational_str(F(3, 8)) == "3/8"
    assert rational_str(F(0)) == "0/1"
    assert rational_str(F(-2, 6)) == "-1/3"
    assert parse_rational("3/8") == F(3, 8)
    assert parse_rational("-7") == F(-7)
    with pytest.raises(InputError):
        parse_rational("x/y")
    with pytest.raises(InputError):
        parse_rational("1/0")


def test_decimal_str_truncates():
    assert decimal_str(F(1, 3), 4) == "0.3333"
    assert decimal_str(F(2, 3), 4) == "0.6666"  # truncated, not rounded
    assert decimal_str(F(-1, 8), 2) == "-0.12"
    assert decimal_str(F(5), 0) == "5"


@given(st.fractions(), st.fractions())
def test_rational_addition_exact(a, b):
    assert (a + b) - b == a


# ---------------------------------------------------------------------------
# metric
# ---------------------------------------------------------------------------


def test_distance_examples():
    assert distance((F(0), F(0)), (F(1), F(1))) == 1
    assert distance((F(1, 3),), (F(2, 3),)) == F(1, 3)
    # hand oracle: max(|3/4-1/4|, |1/8-0|) = max(1/2, 1/8)
    assert distance((F(1, 4), F(0)), (F(3, 4), F(1, 8))) == F(1, 2)


def test_distance_dimension_mismatch():
    with pytest.raises(InputError):
        distance((F(0),), (F(0), F(0)))


def test_metric_axioms_random_triples():
    rng = random.Random(7)
    for _ in range(1000):
        p, q, r = (tuple(F(rng.randint(0, 64), 64) for _ in range(2))
                   for _ in range(3))
        assert distance(p, q) == distance(q, p)
        assert (distance(p, q) == 0) == (p == q)
        assert distance(p, r) <= distance(p, q) + distance(q, r)


# ---------------------------------------------------------------------------
# diameter
# ---------------------------------------------------------------------------


def test_diameter_examples_against_corner_oracle():
    cases = [
        region(box1(0, F(1, 4))),
        region([box1(0, F(1, 16)), box1(F(3, 16), F(1, 4))]),
        region(box2(0, 1, 0, 1)),
    ]
    expected = [F(1, 4), F(1, 4), F(1)]
    for r, want in zip(cases, expected):
        assert diameter(r) == want
        assert diameter(r) == corner_pair_diameter(r.boxes)


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, 32), st.integers(0, 32),
                          st.integers(0, 32), st.integers(0, 32)),
                min_size=1, max_size=5))
def test_diameter_matches_corner_oracle(raw):
    boxes = [box2(F(min(a, b), 32), F(max(a, b), 32),
                  F(min(c, d), 32), F(max(c, d), 32))
             for a, b, c, d in raw]
    r = region(boxes)
    assert diameter(r) == corner_pair_diameter(boxes)


# ---------------------------------------------------------------------------
# cylinders and ternary evaluation
# ---------------------------------------------------------------------------


def cyl_oracle(bits):
    """Independent middle-third oracle: left endpoint as a ternary digit sum."""
    lo = sum(2 * int(b) * F(1, 3 ** (i + 1)) for i, b in enumerate(bits))
    return lo, lo + F(1, 3 ** len(bits))


def test_cylinder_examples():
    assert cylinder(A("")).boxes == (box1(0, 1),)
    assert cylinder(A("0")).boxes == (box1(0, F(1, 3)),)
    assert cylinder(A("01")).boxes == (box1(F(2, 9), F(1, 3)),)


def test_cylinder_matches_oracle_exhaustive_depth_8():
    for n in range(9):
        for bits in product("01", repeat=n):
            word = "".join(bits)
            b = cylinder(A(word)).boxes[0]
            lo, hi = cyl_oracle(word)
            assert (b.lo[0], b.hi[0]) == (lo, hi)


def test_cylinder_diameter_is_3_pow_minus_n_exhaustive_depth_12():
    for n in range(13):
        width = F(1, 3 ** n)
        for i in range(2 ** n):
            word = format(i, f"0{n}b") if n else ""
            assert diameter(cylinder(A(word))) == width


def test_cylinder_children_nest_and_are_disjoint_depth_10():
    for n in range(11):
        for i in range(2 ** n):
            word = format(i, f"0{n}b") if n else ""
            parent = cylinder(A(word))
            c0 = cylinder(A(word + "0"))
            c1 = cylinder(A(word + "1"))
            assert region_subset(c0, parent) and region_subset(c1, parent)
            assert c0.boxes[0].hi[0] < c1.boxes[0].lo[0]  # disjoint with a gap


def test_cylinder_requires_binary():
    with pytest.raises(InputError):
        cylinder(Address((0, 2), alphabet=3))


def test_eval_ternary_address():
    assert eval_ternary_address(A(""), "zeros") == 0
    assert eval_ternary_address(A(""), "ones") == 1
    # geometric series oracle: 2*(1/3)/(1 - 1/9) = 3/4
    assert eval_ternary_address(A("10"), "repeat") == F(3, 4)
    assert eval_ternary_address(A("10"), "zeros") == F(2, 3)
    assert eval_ternary_address(A("1"), "repeat") == 1
    with pytest.raises(InputError):
        eval_ternary_address(A(""), "repeat")
    with pytest.raises(InputError):
        eval_ternary_address(A("0"), "fives")
    # every finite evaluation lands inside its cylinder
    for i in range(64):
        word = format(i, "06b")
        b = cylinder(A(word)).boxes[0]
        for ext in ("zeros", "ones", "repeat"):
            x = eval_ternary_address(A(word), ext)
            assert b.lo[0] <= x <= b.hi[0]


def test_address_parsing_and_str():
    a = A("0101")
    assert str(a) == "0101" and len(a) == 4
    assert a.prefix(2) == A("01")
    assert A("01").is_prefix_of(a)
    with pytest.raises(InputError):
        A("0x1")
    with pytest.raises(InputError):
        Address((0, 1), alphabet=1)


# ---------------------------------------------------------------------------
# region canonicalization
# ---------------------------------------------------------------------------


def grid_membership(boxes, p):
    return any(all(l <= c <= h for l, c, h in zip(b.lo, p, b.hi))
               for b in boxes)


frac32 = st.integers(0, 32).map(lambda n: F(n, 32))
boxes_1d = st.lists(
    st.tuples(frac32, frac32).map(lambda t: box1(min(t), max(t))),
    min_size=1, max_size=6)
boxes_2d = st.lists(
    st.tuples(frac32, frac32, frac32, frac32).map(
        lambda t: box2(min(t[0], t[1]), max(t[0], t[1]),
                       min(t[2], t[3]), max(t[2], t[3]))),
    min_size=1, max_size=5)


@settings(max_examples=300)
@given(boxes_1d)
def test_canonical_idempotent_and_pointwise_1d(boxes):
    r = region(boxes)
    assert region(list(r.boxes)) == r  # idempotent
    for i in range(33):
        p = (F(i, 32),)
        assert r.contains_point(p) == grid_membership(boxes, p)


@settings(max_examples=200, deadline=None)
@given(boxes_2d)
def test_canonical_idempotent_and_pointwise_2d(boxes):
    r = region(boxes)
    assert region(list(r.boxes)) == r
    for i in range(0, 33, 4):
        for j in range(0, 33, 4):
            p = (F(i, 32), F(j, 32))
            assert r.contains_point(p) == grid_membership(boxes, p)


@settings(max_examples=200, deadline=None)
@given(boxes_2d)
def test_canonical_route_independent_2d(boxes):
    # shuffled and duplicated box lists describe the same set
    doubled = boxes + boxes[::-1]
    assert region(boxes) == region(doubled)


@settings(max_examples=200, deadline=None)
@given(boxes_2d, st.randoms(use_true_random=False))
def test_canonical_survives_box_splitting(boxes, rng):
    # cutting boxes in two along random axes never changes the canonical form
    pieces = []
    for b in boxes:
        axis = rng.choice([0, 1])
        if b.lo[axis] < b.hi[axis]:
            mid = (b.lo[axis] + b.hi[axis]) / 2
            lo2 = list(b.lo)
            hi1 = list(b.hi)
            hi1[axis] = mid
            lo2[axis] = mid
            pieces.append(Box(b.lo, tuple(hi1)))
            pieces.append(Box(tuple(lo2), b.hi))
        else:
            pieces.append(b)
    rng.shuffle(pieces)
    assert region(pieces) == region(boxes)


def test_canonical_merges_and_absorbs():
    assert region([box1(0, F(1, 2)), box1(F(1, 2), 1)]) == region(box1(0, 1))
    assert region([box2(0, 1, 0, 1), box2(1, 2, 0, 1)]) == region(box2(0, 2, 0, 1))
    # degenerate edge absorbed by a full box
    assert region([box2(0, 1, 0, 1), box2(1, 1, 0, 1)]) == region(box2(0, 1, 0, 1))
    # protruding degenerate content survives
    r = region([box2(0, 1, 0, 1), box2(F(1, 2), F(1, 2), 0, 2)])
    assert r.contains_point((F(1, 2), F(3, 2)))
    assert not r.contains_point((F(1, 4), F(3, 2)))


def test_region_equality_is_point_set_equality():
    a = region([box1(0, F(1, 3)), box1(F(1, 3), F(2, 3))])
    b = region(box1(0, F(2, 3)))
    assert region_equal(a, b) and a == b


def test_region_subset_and_intersect():
    big = region(box2(0, 1, 0, 1))
    small = region(box2(F(1, 4), F(1, 2), F(1, 4), F(1, 2)))
    assert region_subset(small, big) and not region_subset(big, small)
    assert region_intersect(small, big) == small
    left = region(box1(0, F(1, 3)))
    right = region(box1(F(2, 3), 1))
    assert region_intersect(left, right) is None
    # subset of a split cover needs the refinement argument
    cover = region([box1(0, F(1, 2)), box1(F(1, 2), 1)])
    assert region_subset(region(box1(F(1, 4), F(3, 4))), cover)
    assert box_in_boxes(box1(0, 1), [box1(0, F(1, 2)), box1(F(5, 8), 1)]) is False


def test_disjointness_is_closed_semantics():
    assert not box_disjoint(box1(0, F(1, 2)), box1(F(1, 2), 1))  # touch
    assert box_disjoint(box1(0, F(1, 3)), box1(F(2, 3), 1))
    assert not box_disjoint(box2(0, 1, 0, 1), box2(1, 2, 1, 2))  # corner
    assert regions_disjoint(region(box1(0, F(1, 4))),
                            region(box1(F(1, 2), 1)))


def test_closed_difference():
    # closure of ([0,1] minus [1/3,2/3]) = two closed thirds
    diff = closed_difference([box1(0, 1)], [box1(F(1, 3), F(2, 3))])
    assert region(diff) == region([box1(0, F(1, 3)), box1(F(2, 3), 1)])
    # subtracting a separated box passes others through untouched
    diff = closed_difference([box1(0, F(1, 4)), box1(F(3, 4), 1)],
                             [box1(F(3, 4), 1)])
    assert diff == [box1(0, F(1, 4))]
    # full subtraction empties
    assert closed_difference([box1(0, 1)], [box1(0, 1)]) == []


def test_lex_extremes():
    r = region([box2(F(1, 2), F(1, 2), 0, F(1, 2)), box2(0, 1, F(1, 2), F(1, 2))])
    assert lexmin_point(r) == (F(0), F(1, 2))
    assert lexmax_point(r) == (F(1), F(1, 2))


def test_box_validation():
    with pytest.raises(InputError):
        Box((F(1),), (F(0),))
    with pytest.raises(InputError):
        region([])
