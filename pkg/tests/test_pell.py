"""Pell-type equations x^2 - D*y^2 = k: box enumeration and orbit splitting."""

from __future__ import annotations

import math

import pytest

from thue1728.arith import is_square, is_squarefree
from thue1728.pell import (
    enumerate_pell,
    fundamental_bounds,
    orbit_count_bound,
    orbits,
    same_orbit,
    unit_apply,
)
from thue1728.quadratic import fundamental_unit, plus_one_unit


def brute_pell(D: int, k: int, y_max: int) -> list[tuple[int, int]]:
    out = []
    for y in range(1, y_max + 1):
        v = D * y * y + k
        if v >= 0 and is_square(v):
            x = math.isqrt(v)
            if x > 0:
                out.append((-x, y))
            out.append((x, y))
    return sorted(out, key=lambda s: (s[1], s[0]))


GRID = [(D, k) for D in (2, 3, 5, 6, 7, 10, 13, 17, 19, 23, 29)
        for k in range(-25, 0)
        if is_squarefree(D) and is_squarefree(k) and math.gcd(D, k) == 1]


class TestEnumeratePell:
    def test_worked_example(self):
        sols = enumerate_pell(2, -1, 1)
        assert [(s.x, s.y) for s in sols] == [(-1, 1), (1, 1)]

    def test_matches_brute_force(self):
        for D, k in GRID:
            got = [(s.x, s.y) for s in enumerate_pell(D, k, 200)]
            assert got == brute_pell(D, k, 200), (D, k)

    def test_all_are_solutions(self):
        for D, k in ((2, -1), (3, -2), (13, -1), (29, -5)):
            for s in enumerate_pell(D, k, 500):
                assert s.x * s.x - D * s.y * s.y == k

    def test_validates_input(self):
        with pytest.raises(ValueError):
            enumerate_pell(4, -1, 10)  # square D
        with pytest.raises(ValueError):
            enumerate_pell(2, 0, 10)  # k = 0
        # gcd(D, k) > 1 is legal at this layer (coprimality is a
        # reduction-level constraint, not a Pell one)
        sols = enumerate_pell(2, -2, 10)
        assert (0, 1) in [(s.x, s.y) for s in sols]


class TestFundamentalBounds:
    def test_fundamental_box_contains_orbit_fundamentals(self):
        # every orbit must have a representative with y inside the box
        for D, k in GRID:
            y_box, (tp, up) = fundamental_bounds(D, k)
            assert tp * tp - D * up * up == 1
            orbs = orbits(D, k)
            for o in orbs:
                assert 0 <= o.fundamental.y <= y_box, (D, k, o.fundamental)

    def test_negative_pell_box_is_exactly_u(self):
        # k = -1 with a norm -1 unit: the minimal solution is (T, U) itself
        for D in (2, 5, 10, 13, 277):
            u = fundamental_unit(D)
            assert u.norm == -1
            y_box, _ = fundamental_bounds(D, -1)
            assert y_box == u.U, D


class TestOrbits:
    def test_worked_example(self):
        orbs = orbits(2, -1)
        assert len(orbs) == 1
        o = orbs[0]
        assert (o.fundamental.x, o.fundamental.y) == (1, 1)
        assert o.coprime

    def test_members_solve_equation(self):
        for D, k in ((2, -1), (2, -7), (3, -2), (7, -3), (13, -1)):
            for o in orbits(D, k):
                assert o.members_found, (D, k)
                for s in o.members_found:
                    assert s.x * s.x - D * s.y * s.y == k

    def test_orbit_partition_is_consistent(self):
        # members of the same orbit are pairwise related, fundamentals of
        # distinct orbits are not
        for D, k in ((2, -7), (3, -2), (6, -5), (7, -3), (29, -5)):
            orbs = orbits(D, k)
            for o in orbs:
                for s in o.members_found:
                    assert same_orbit(D, k, o.fundamental, s), (D, k, s)
            for i in range(len(orbs)):
                for j in range(i + 1, len(orbs)):
                    assert not same_orbit(D, k, orbs[i].fundamental, orbs[j].fundamental)

    def test_coprime_orbit_count_bound(self):
        for D, k in GRID:
            orbs = orbits(D, k)
            coprime = sum(1 for o in orbs if o.coprime)
            assert coprime <= orbit_count_bound(k), (D, k)

    def test_unit_apply_maps_solutions_to_solutions(self):
        D, k = 3, -2
        tp, up = plus_one_unit(D)
        for o in orbits(D, k):
            s = o.fundamental
            for _ in range(4):
                s = unit_apply(s, tp, up, D)
                assert s.x * s.x - D * s.y * s.y == k

    def test_boundary_flag_on_negative_pell(self):
        # k = -1, norm -1 unit: the only fundamental sits exactly on the box edge
        orbs = orbits(277, -1)
        assert len(orbs) == 1
        o = orbs[0]
        assert (o.fundamental.x, o.fundamental.y) == (8920484118, 535979945)
        assert o.y_at_boundary

    def test_orbit_count_bound_validates(self):
        with pytest.raises(ValueError):
            orbit_count_bound(-4)
        assert orbit_count_bound(-1) == 1
        assert orbit_count_bound(-6) == 4
