import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from halfpoint.curves import Curve, Point
from halfpoint.exact import rational_sqrt
from halfpoint.halving import (
    candidate_xs,
    candidate_xs_products,
    meeting_x,
    recover_y,
    root_triple_a24,
    root_triple_a46,
    root_triple_from_roots,
    sqrt_triple,
)

ROOTS36 = root_triple_from_roots(Fraction(0), Fraction(6), Fraction(-6))
X0 = Fraction(25, 4)


def test_root_triple_from_roots_vieta():
    assert (ROOTS36.e0, ROOTS36.e1, ROOTS36.e2) == (0, 6, -6)
    assert ROOTS36.k == 36  # -(a4 + 3 e0^2) with a4 = -36
    assert ROOTS36.d == ROOTS36.e0
    assert ROOTS36.differences(X0) == (Fraction(25, 4), Fraction(1, 4), Fraction(49, 4))


def test_root_triple_a46_recovers_the_pair():
    roots = root_triple_a46(Fraction(0), Fraction(-36), rational_sqrt)
    assert (roots.e0, roots.e1, roots.e2, roots.k) == (0, 6, -6, 36)


def test_root_triple_a46_unsplit_quadratic():
    with pytest.raises(ValueError):
        root_triple_a46(Fraction(0), Fraction(1), rational_sqrt)


def test_root_triple_a24():
    # y^2 = x^3 - x^2 - 6x has roots 0, 3, -2
    roots = root_triple_a24(Fraction(-1), Fraction(-6), rational_sqrt)
    assert (roots.e0, roots.e1, roots.e2) == (0, 3, -2)
    assert roots.k == 6  # -a4


def test_sqrt_triple_reference_values():
    sq = sqrt_triple(X0, ROOTS36, rational_sqrt)
    assert (sq.gamma, sq.alpha, sq.beta) == (Fraction(5, 2), Fraction(1, 2), Fraction(7, 2))


def test_sqrt_triple_missing_root():
    assert sqrt_triple(Fraction(-3), ROOTS36, rational_sqrt) is None


def test_candidate_xs_reference_values():
    sq = sqrt_triple(X0, ROOTS36, rational_sqrt)
    assert candidate_xs(X0, sq) == (18, -2, -3, 12)


def test_candidate_xs_products_reference_values():
    cands, data = candidate_xs_products(X0, ROOTS36, rational_sqrt)
    assert (data.t, data.w, data.w1, data.w2) == (
        Fraction(49, 16), Fraction(7, 4), 10, Fraction(15, 2))
    assert set(cands) == {18, -2, -3, 12}
    # the product route preserves the chord pairing, not just the set
    sq = sqrt_triple(X0, ROOTS36, rational_sqrt)
    direct = candidate_xs(X0, sq)
    assert {frozenset(cands[:2]), frozenset(cands[2:])} == {
        frozenset(direct[:2]), frozenset(direct[2:])}


def test_sign_flips_leave_candidate_set_invariant():
    sq = sqrt_triple(X0, ROOTS36, rational_sqrt)
    want_set = frozenset(candidate_xs(X0, sq))
    want_pairs = {frozenset(candidate_xs(X0, sq)[:2]), frozenset(candidate_xs(X0, sq)[2:])}
    for signs in itertools.product((1, -1), repeat=3):
        cands = candidate_xs(X0, sq.flipped(*signs))
        assert frozenset(cands) == want_set
        assert {frozenset(cands[:2]), frozenset(cands[2:])} == want_pairs


def test_meeting_x_reference_value():
    assert meeting_x(X0, ROOTS36) == Fraction(-144, 25)


def test_meeting_x_equals_chord_sums():
    curve = Curve(0, -36, 0)
    pairs = [(Point(18, -72), Point(-2, -8)), (Point(-3, 9), Point(12, 36))]
    for A, B in pairs:
        assert curve.add(A, B).x == meeting_x(X0, ROOTS36)


def test_meeting_x_pole():
    with pytest.raises(ValueError):
        meeting_x(Fraction(0), ROOTS36)


def test_recover_y_reference():
    curve = Curve(0, -36, 0)
    P = Point(X0, Fraction(-35, 8))
    assert recover_y(curve, Fraction(18), P, rational_sqrt) == [Point(18, -72)]
    assert recover_y(curve, Fraction(-3), P, rational_sqrt) == [Point(-3, 9)]
    # x-value whose rhs is not a rational square
    assert recover_y(curve, Fraction(2), P, rational_sqrt) == []


@given(st.fractions(max_denominator=6), st.fractions(max_denominator=6),
       st.fractions(max_denominator=6), st.fractions(max_denominator=6))
def test_candidates_double_back_exactly(x0, g, a, b):
    # build a split curve on which every difference is a square by design:
    # e_i = x0 - (square), so P = (x0, g*a*b) is on the curve and halvable
    e = (x0 - g * g, x0 - a * a, x0 - b * b)
    if len({*e}) < 3:
        return
    roots = root_triple_from_roots(*e)
    curve = Curve(-(e[0] + e[1] + e[2]),
                  e[0] * e[1] + e[1] * e[2] + e[2] * e[0],
                  -e[0] * e[1] * e[2])
    P = Point(x0, g * a * b)
    assert curve.contains(P)
    sq = sqrt_triple(x0, roots, rational_sqrt)
    assert sq is not None
    doubled_back = 0
    for xc in candidate_xs(x0, sq):
        for Q in recover_y(curve, xc, P, rational_sqrt):
            assert curve.double(Q) == P
            doubled_back += 1
    if P.y != 0:
        assert doubled_back >= 1


@given(st.fractions(max_denominator=8), st.fractions(max_denominator=8),
       st.fractions(max_denominator=8), st.fractions(max_denominator=8))
def test_product_route_matches_direct_route(x0, g, a, b):
    # same construction, restricted to a2 = 0 by recentering the roots
    e = (x0 - g * g, x0 - a * a, x0 - b * b)
    if len({*e}) < 3:
        return
    shift = (e[0] + e[1] + e[2]) / 3
    e = tuple(ei - shift for ei in e)
    x0 = x0 - shift
    roots = root_triple_from_roots(*e)
    sq = sqrt_triple(x0, roots, rational_sqrt)
    assert sq is not None  # differences are shift-invariant, so still squares
    direct = candidate_xs(x0, sq)
    out = candidate_xs_products(x0, roots, rational_sqrt)
    assert out is not None
    cands, data = out
    assert data.t == (x0 - roots.e1) * (x0 - roots.e2)
    assert set(cands) == set(direct)
