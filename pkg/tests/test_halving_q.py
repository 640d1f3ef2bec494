import random
from fractions import Fraction

import pytest

from halfpoint.curves import INFINITY, Curve, Point, SingularCurveError
from halfpoint.exact import rational_sqrt
from halfpoint.halving_q import (
    SplitCurveQ,
    congruent_curve,
    is_halvable_q,
    rational_halves,
)

SPLIT36 = SplitCurveQ(0, 6, -6)
P36 = Point(Fraction(25, 4), Fraction(-35, 8))


def test_split_curve_from_roots():
    assert SPLIT36.curve == Curve(0, -36, 0)
    with pytest.raises(SingularCurveError):
        SplitCurveQ(1, 1, 5)


def test_split_curve_from_coefficients():
    split = SplitCurveQ.from_coefficients(0, -36, 0)
    assert {split.e0, split.e1, split.e2} == {0, 6, -6}
    for coeffs in [(0, 17, 71), (0, 1, 0)]:  # not fully split over Q
        with pytest.raises(ValueError):
            SplitCurveQ.from_coefficients(*coeffs)


def test_halvable_reference_point():
    res = is_halvable_q(SPLIT36, P36)
    assert res.halvable and bool(res)
    assert (res.witness.gamma, res.witness.alpha, res.witness.beta) == (
        Fraction(5, 2), Fraction(1, 2), Fraction(7, 2))
    assert res.failing is None


def test_unhalvable_reference_points():
    res = is_halvable_q(SPLIT36, Point(-3, 9))
    assert not res.halvable and not bool(res)
    root, diff = res.failing
    assert (root, diff) == (0, -3)  # first difference is negative, so no
    res = is_halvable_q(SPLIT36, Point(12, 36))
    assert res.failing == (0, 12)  # 12 is not a rational square


def test_infinity_is_halvable():
    assert is_halvable_q(SPLIT36, INFINITY).halvable


def test_rational_halves_reference():
    halves = rational_halves(SPLIT36, P36)
    assert halves == [Point(18, -72), Point(-2, -8), Point(-3, 9), Point(12, 36)]
    assert rational_halves(SPLIT36, Point(-3, 9)) == []


def test_halves_of_infinity_are_the_two_torsion():
    halves = rational_halves(SPLIT36, INFINITY)
    assert halves[0] is INFINITY
    assert halves[1:] == [Point(-6, 0), Point(0, 0), Point(6, 0)]


def _fractions(rng, denom=6, mag=12):
    return Fraction(rng.randint(-mag, mag), rng.randint(1, denom))


def _curve_through(e0, e1, xq, yq):
    # third root forced so that (xq, yq) lies on the curve
    e2 = xq - yq * yq / ((xq - e0) * (xq - e1))
    if len({e0, e1, e2}) < 3:
        return None
    return SplitCurveQ(e0, e1, e2)


def test_fuzz_doubles_are_halvable_with_all_four_halves():
    rng = random.Random(20260814)
    done = 0
    while done < 120:
        e0, e1 = _fractions(rng), _fractions(rng)
        xq, yq = _fractions(rng), _fractions(rng)
        if yq == 0 or xq in (e0, e1) or e0 == e1:
            continue
        split = _curve_through(e0, e1, xq, yq)
        if split is None:
            continue
        Q = Point(xq, yq)
        P = split.curve.double(Q)
        if P is INFINITY:
            continue
        assert is_halvable_q(split, P)
        halves = rational_halves(split, P)
        # full rational 2-torsion: the four translates of Q are all rational
        assert len(halves) == 4
        assert Q in halves
        for H in halves:
            assert split.curve.double(H) == P
        done += 1


def test_fuzz_failing_square_test_means_no_halves():
    rng = random.Random(918273645)
    done = 0
    while done < 120:
        x0, y0 = _fractions(rng), _fractions(rng)
        g = _fractions(rng)
        e1 = _fractions(rng)
        if y0 == 0 or g == 0:
            continue
        e0 = x0 - 2 * g * g  # 2g^2 is never a rational square
        if e1 in (e0, x0) or x0 == e0:
            continue
        split = _curve_through(e0, e1, x0, y0)
        if split is None:
            continue
        P = Point(x0, y0)
        res = is_halvable_q(split, P)
        assert not res.halvable
        assert rational_sqrt(res.failing[1]) is None
        assert rational_halves(split, P) == []
        done += 1


def test_congruent_curve_basics():
    assert congruent_curve(6).curve == Curve(0, -36, 0)
    for bad in (0, -3):
        with pytest.raises(SingularCurveError):
            congruent_curve(bad)


def test_congruent_five_classic_point():
    split = congruent_curve(5)
    Q = Point(-4, 6)
    assert split.curve.contains(Q)
    P = split.curve.double(Q)
    halves = rational_halves(split, P)
    assert Q in halves and len(halves) == 4
    # Q itself is not halvable: its first difference is negative
    assert not is_halvable_q(split, Q)
