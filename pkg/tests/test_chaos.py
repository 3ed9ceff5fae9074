"""Primitive-chaos systems: witness realization, periodic orbits, and the
chaos-property certificates, cross-checked against plain-lambda oracles."""

from fractions import Fraction as F
from itertools import product

import pytest

from primchaos.chaos import (
    dense_orbit_word,
    make_system,
    periodic_point,
    realize_witness,
    sensitivity_check,
    transitivity_check,
    verify_dense_orbit,
    word_enclosure,
)
from primchaos.errors import InputError
from primchaos.geometry import box1, region, region_subset

HALF = F(1, 2)


# independent plain-function oracles for the three 1-d maps; branch choice
# at the shared boundary point matches the systems' first-event convention
def doubling_oracle(x):
    return 2 * x if x <= HALF else 2 * x - 1


def tent_oracle(x):
    return 2 * x if x <= HALF else 2 - 2 * x


def shift_oracle(x):
    return 3 * x if x <= F(1, 3) else 3 * x - 2


ORACLES = {"doubling": doubling_oracle, "tent": tent_oracle,
           "shift_cantor": shift_oracle}


def baker_oracle(p):
    x, y = p
    if x <= HALF:
        return (2 * x, y / 2)
    return (2 * x - 1, (y + 1) / 2)


# ---------------------------------------------------------------------------
# systems
# ---------------------------------------------------------------------------


def test_make_system_examples():
    d = make_system("doubling")
    assert d.events[0] == region(box1(0, HALF))
    assert d.events[1] == region(box1(HALF, 1))
    t = make_system("tent")
    assert t.step((F(3, 4),)) == (HALF,)
    sc = make_system("shift_cantor")
    p = sc.step((F(2, 9),))  # a point of cylinder "01"
    assert sc.events[1].contains_point(p)
    with pytest.raises(InputError):
        make_system("lorenz")


def test_total_map_matches_oracles():
    for kind, oracle in ORACLES.items():
        s = make_system(kind)
        for i in range(1, 27):
            x = F(i, 27)
            if not s.space.contains_point((x,)):
                continue
            assert s.step((x,)) == (oracle(x),), (kind, x)
    b = make_system("baker")
    for i in range(5):
        for j in range(5):
            p = (F(i, 4), F(j, 4))
            assert b.step(p) == baker_oracle(p)


# ---------------------------------------------------------------------------
# witness realization
# ---------------------------------------------------------------------------


def test_realize_witness_examples():
    d = make_system("doubling")
    res = realize_witness(d, "01")
    # hand oracle: f^-1([1/2,1]) = [1/4,1/2], intersect [0,1/2]
    assert res.enclosure == region(box1(F(1, 4), HALF))
    assert res.witness == (F(3, 8),)
    assert res.orbit == ((F(3, 8),), (F(3, 4),))
    res = realize_witness(d, "0")
    assert res.enclosure == region(box1(0, HALF)) and res.witness == (F(1, 4),)


def test_realize_tent_word_01():
    t = make_system("tent")
    res = realize_witness(t, "01")
    assert region_subset(res.enclosure, region(box1(0, HALF)))
    # brute-force oracle: grid points satisfying the itinerary lie inside
    # the enclosure, grid points violating it lie outside
    for i in range(0, 129):
        x = F(i, 128)
        follows = x <= HALF and tent_oracle(x) >= HALF
        inside = any(bb.lo[0] <= x <= bb.hi[0] for bb in res.enclosure.boxes)
        assert follows == inside, x


def test_realized_orbits_follow_words_and_match_oracles():
    for kind, oracle in ORACLES.items():
        s = make_system(kind)
        for n in range(1, 7):
            for bits in product("01", repeat=n):
                word = "".join(bits)
                res = realize_witness(s, word)
                for p, sym in zip(res.orbit, word):
                    assert s.events[int(sym)].contains_point(p)
                # forward orbit agrees with the plain-lambda oracle except
                # possibly at shared event boundaries, which the witness
                # midpoint avoids for positive-width enclosures
                for p, q in zip(res.orbit, res.orbit[1:]):
                    assert q == (oracle(p[0]),) or \
                        s.events[0].contains_point(p) == s.events[1].contains_point(p)


def test_realize_witness_baker():
    b = make_system("baker")
    res = realize_witness(b, "0110")
    assert len(res.orbit) == 4
    for p, sym in zip(res.orbit, "0110"):
        assert b.events[int(sym)].contains_point(p)
    for p, q in zip(res.orbit, res.orbit[1:]):
        assert q == baker_oracle(p)


def test_realize_rejects_bad_words():
    d = make_system("doubling")
    with pytest.raises(InputError):
        realize_witness(d, "2")
    with pytest.raises(InputError):
        realize_witness(d, "")
    with pytest.raises(InputError):
        realize_witness(d, "0x")


def test_enclosures_nest_under_extension():
    for kind in ("shift_cantor", "doubling", "tent", "baker"):
        s = make_system(kind)
        for n in range(1, 8):
            for bits in product("01", repeat=n):
                w = "".join(bits)
                assert region_subset(word_enclosure(s, w),
                                     word_enclosure(s, w[:-1]) if n > 1
                                     else s.space)


# ---------------------------------------------------------------------------
# periodic points
# ---------------------------------------------------------------------------


def test_periodic_point_examples():
    d = make_system("doubling")
    orb = periodic_point(d, "01")
    # oracle: 0.010101... in binary = 1/3
    assert sum(F(1, 2 ** (2 * k)) for k in range(1, 12)) < F(1, 3)
    assert orb.point == (F(1, 3),) and orb.prime_period == 2
    assert orb.orbit == ((F(1, 3),), (F(2, 3),))
    t = make_system("tent")
    orb = periodic_point(t, "01")
    # oracle: solve tent(tent(x)) = x on the 0-then-1 branch: 2-4x = x
    assert orb.point == (F(2, 5),) and orb.prime_period == 2
    orb = periodic_point(d, "0")
    assert orb.point == (F(0),) and orb.prime_period == 1


def test_periodic_point_orbit_matches_oracle():
    for kind, oracle in ORACLES.items():
        s = make_system(kind)
        for word in ("0", "1", "01", "001", "011", "0001", "00101"):
            orb = periodic_point(s, word)
            x = orb.point[0]
            for sym in word:
                x = oracle(x)
            assert x == orb.point[0], (kind, word)


def test_periodic_point_power_word_reduced():
    d = make_system("doubling")
    orb = periodic_point(d, "0101")
    assert orb.prime_period == 2 and orb.word == "01"
    assert orb.reduced_from == "0101"
    point, period = orb  # tuple protocol
    assert point == (F(1, 3),) and period == 2


def test_periodic_point_baker_2d():
    b = make_system("baker")
    orb = periodic_point(b, "01")
    assert orb.point == (F(1, 3), F(2, 3))
    p = orb.point
    for _ in range(2):
        p = baker_oracle(p)
    assert p == orb.point


def test_prime_period_divisor_minimality():
    d = make_system("doubling")
    for n in range(1, 11):
        word = "0" * (n - 1) + "1"
        orb = periodic_point(d, word)
        assert orb.prime_period == n
        # fixed point of the composed branch: 1/(2^n - 1)
        assert orb.point == (F(1, 2 ** n - 1),)


def test_periodic_point_in_realized_enclosure():
    # realizing a word's repetition must enclose the exact periodic point,
    # exhaustively for every word up to length 8
    for kind in ("doubling", "tent"):
        s = make_system(kind)
        for n in range(1, 9):
            for bits in product("01", repeat=n):
                word = "".join(bits)
                orb = periodic_point(s, word)
                enc = word_enclosure(s, word * 2)
                assert enc.contains_point(orb.point), (kind, word)


# ---------------------------------------------------------------------------
# chaos certificates
# ---------------------------------------------------------------------------


def test_dense_orbit_word_examples():
    assert str(dense_orbit_word(1)) == "01"
    # enumeration oracle: "01" + "00" + "01" + "10" + "11"
    expected = "01" + "".join("".join(b) for b in product("01", repeat=2))
    assert str(dense_orbit_word(2)) == expected == "0100011011"
    with pytest.raises(InputError):
        dense_orbit_word(0)


def test_dense_orbit_visits_all_cells():
    for kind in ("doubling", "tent", "shift_cantor"):
        rep = verify_dense_orbit(make_system(kind), 2)
        assert rep.all_passed, (kind, rep.to_document())
    rep = verify_dense_orbit(make_system("doubling"), 3)
    assert rep.all_passed


def test_sensitivity_doubling_third():
    # hand-derived: difference doubles per step until >= 1/4, so 18 steps
    # from 2^-20; boundary straddles only separate faster
    rep = sensitivity_check(make_system("doubling"), F(1, 2 ** 20), 1,
                            points=[(F(1, 3),)])
    assert rep.all_passed
    n = int(rep.checks[0].witness.split("n = ")[1].split(" ")[0])
    assert n <= 21


def test_sensitivity_tent_many_samples():
    rep = sensitivity_check(make_system("tent"), F(1, 2 ** 10), 100)
    assert rep.all_passed
    n = int(rep.checks[0].witness.split("n = ")[1].split(" ")[0])
    assert n <= 12


def test_sensitivity_shift_cantor():
    rep = sensitivity_check(make_system("shift_cantor"), F(1, 2 ** 10), 25)
    assert rep.all_passed


def test_sensitivity_rejects_bad_inputs():
    with pytest.raises(InputError):
        sensitivity_check(make_system("baker"), F(1, 4), 5)
    with pytest.raises(InputError):
        sensitivity_check(make_system("tent"), F(0), 5)


def test_transitivity_examples():
    d = make_system("doubling")
    rep = transitivity_check(d, 2)
    assert rep.all_passed
    # u = "00", v = "11": witness in [0,1/4] reaching [3/4,1] in 2 steps
    res = realize_witness(d, "0011")
    assert word_enclosure(d, "00").contains_point(res.witness)
    assert word_enclosure(d, "11").contains_point(res.orbit[2])
    # fixed point connects a cell to itself
    res = realize_witness(d, "00")
    assert word_enclosure(d, "0").contains_point(res.witness)
    assert transitivity_check(make_system("shift_cantor"), 3).all_passed


def test_transitivity_depth_bounds():
    with pytest.raises(InputError):
        transitivity_check(make_system("doubling"), 0)
    with pytest.raises(InputError):
        transitivity_check(make_system("doubling"), 13)


def test_witness_document_shape():
    res = realize_witness(make_system("doubling"), "01")
    doc = res.to_document()
    assert doc == {
        "system": "doubling",
        "word": "01",
        "enclosure": [[["1/4", "1/2"]]],
        "witness": "3/8",
        "orbit": ["3/8", "3/4"],
    }
