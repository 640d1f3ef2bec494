import math
import random
from fractions import Fraction

import pytest

from halfpoint.curves import INFINITY, Curve, Point
from halfpoint.extfield import ext_sqrt
from halfpoint.halving import candidate_xs_products
from halfpoint.halving_fp import (
    BRUTE_FORCE_LIMIT,
    FpHalvingField,
    brute_force_halves,
    enumerate_points,
    group_order_bf,
    halve_over_fp,
    halve_via_order,
)
from halfpoint.primefield import PrimeField


def test_coerce_rejects_bad_curves():
    with pytest.raises(ValueError):
        FpHalvingField(11, Curve(0, Fraction(1, 2), 1))
    fp13 = PrimeField(13)
    with pytest.raises(ValueError):
        FpHalvingField(11, Curve(fp13(0), fp13(1), fp13(1)))


def test_fully_split_fixture():
    # x^3 + x + 2 = (x-1)(x-3)(x-7)... fully split mod 11
    ctx = FpHalvingField(11, Curve(0, 1, 2))
    assert ctx.factor_degrees == (1, 1, 1) and ctx.extension_degree == 1
    halves, info = ctx.halve_with_info(Point(8, 4))
    assert {(int(Q.x), int(Q.y)) for Q in halves} == {(9, 5), (2, 1), (6, 2), (4, 2)}
    assert info["candidates_in_base"] == 4 and not info["tower_used"]
    # a point whose differences are non-residues: candidates live upstairs
    halves, info = ctx.halve_with_info(Point(1, 2))
    assert halves == [] and info["tower_used"]


def test_one_root_fixture():
    # x^3 + 1 = (x+1)(x^2 - x + 1) with the quadratic irreducible mod 11
    ctx = FpHalvingField(11, Curve(0, 0, 1))
    assert ctx.factor_degrees == (1, 2) and ctx.extension_degree == 2
    halves, info = ctx.halve_with_info(Point(0, 1))
    assert {(int(Q.x), int(Q.y)) for Q in halves} == {(2, 3), (0, 10)}
    assert info["candidates_in_base"] == 2 and not info["tower_used"]
    halves, info = ctx.halve_with_info(Point(5, 4))
    assert halves == [] and info["tower_used"]


def test_irreducible_fixture_unique_half():
    # x^3 + x + 4 is irreducible mod 11: odd group order, halving is unique
    ctx = FpHalvingField(11, Curve(0, 1, 4))
    assert ctx.factor_degrees == (3,) and ctx.extension_degree == 3
    halves = ctx.halve(Point(0, 2))
    assert [(int(Q.x), int(Q.y)) for Q in halves] == [(2, 5)]


def test_irreducible_cubic_never_needs_the_tower():
    # the three differences are Frobenius conjugates, so they share their
    # quadratic character, and their product is y0^2; hence all are squares
    ctx = FpHalvingField(11, Curve(0, 1, 4))
    for P in enumerate_points(11, Curve(0, 1, 4)):
        if P is INFINITY:
            continue
        halves, info = ctx.halve_with_info(P)
        assert not info["tower_used"]
        assert len(halves) == 1


def test_halve_of_infinity_lists_two_torsion():
    ctx = FpHalvingField(11, Curve(0, 1, 2))
    halves = ctx.halve(INFINITY)
    assert halves[0] is INFINITY
    assert sorted(int(T.x) for T in halves[1:]) == sorted(
        int(T.x) for T in ctx.two_torsion())
    assert set(halves) == set(brute_force_halves(11, Curve(0, 1, 2), INFINITY))


def test_oracle_equivalence_random_curves():
    rng = random.Random(7)
    for p in (7, 11, 13):
        built = 0
        while built < 4:
            a2, a4, a6 = rng.randrange(p), rng.randrange(p), rng.randrange(p)
            curve = Curve(a2, a4, a6)
            fp = PrimeField(p)
            if not Curve(fp(a2), fp(a4), fp(a6)).discriminant():
                continue
            built += 1
            ctx = FpHalvingField(p, curve)
            for P in enumerate_points(p, curve):
                want = set(brute_force_halves(p, curve, P))
                got = ctx.halve(P)
                assert len(got) == len(set(got))  # no duplicates
                assert set(got) == want
                assert len(want) in (0, 1, 2, 4)
                for Q in got:
                    if Q is not INFINITY:
                        doubled = ctx.curve.double(Q)
                        assert doubled == P or (doubled is INFINITY and P is INFINITY)


def test_seed_independence():
    curve = Curve(0, -36, 0)  # fully split mod 31 as well
    P = Point(8, 10)
    want = {(24, 8), (14, 16), (15, 13), (10, 12)}
    for seed in range(4):
        got = {(int(Q.x), int(Q.y)) for Q in halve_over_fp(31, curve, P, seed=seed)}
        assert got == want


def test_reference_curve_big_prime():
    p = 17000000000000071
    ctx = FpHalvingField(p, Curve(0, 17, 71))
    assert ctx.factor_degrees == (3,)
    P = Point(17071, 4145148307074498)
    halves, info = ctx.halve_with_info(P)
    assert [(int(Q.x), int(Q.y)) for Q in halves] == [
        (4631223433830370, 13664114850453464)]
    assert info["candidates_in_base"] == 1
    assert not info["tower_used"]
    assert ctx.curve.double(halves[0]) == ctx.curve._norm(P)


def test_reference_curve_product_route_values():
    # canonical square roots of the product intermediates, frozen: ascending
    # coefficient tuples in F_p[X]/(X^3 + 17X + 71)
    p = 17000000000000071
    ctx = FpHalvingField(p, Curve(0, 17, 71))
    x0 = ctx.lift(ctx.fp(17071))
    cands, data = candidate_xs_products(x0, ctx.roots, ext_sqrt)
    assert data.t.coeffs == (291419058, 17071, 1)
    assert data.w.coeffs == (7788921359847751, 6554553633085449, 14551045313109763)
    assert data.w1.coeffs == (3157697926034452, 6554553633085449, 14551045313109763)
    assert data.w2.coeffs == (400519205575709, 13847596327312889, 5535339929903762)
    retracted = [ctx.retract(c) for c in cands]
    assert [x for x in retracted if x is not None] == [ctx.fp(4631223433830370)]


def test_halve_via_order_routes():
    curve = Curve(0, 1, 4)
    fp = PrimeField(11)
    m = group_order_bf(11, curve)
    assert m % 2 == 1  # no 2-torsion, odd order
    ctx = FpHalvingField(11, curve)
    for P in enumerate_points(11, curve):
        if P is INFINITY:
            continue
        assert halve_via_order(ctx.curve, P, m) == ctx.halve(P)[0]
    with pytest.raises(ValueError):
        halve_via_order(ctx.curve, Point(0, 2), 2 * m)
    with pytest.raises(ValueError):
        halve_via_order(ctx.curve, Point(0, 2), m + 2)


def test_group_order_matches_enumeration_and_hasse():
    for p, a4, a6 in [(101, 3, 7), (103, 1, 1), (97, 5, 0)]:
        curve = Curve(0, a4, a6)
        m = group_order_bf(p, curve)
        assert m == len(enumerate_points(p, curve))
        assert abs(m - p - 1) <= 2 * math.isqrt(p) + 1


def test_budget_guards():
    assert BRUTE_FORCE_LIMIT == 10**4
    big = Curve(0, 1, 1)
    with pytest.raises(ValueError):
        enumerate_points(10007, big)
    with pytest.raises(ValueError):
        group_order_bf(10007, big)
