"""Curve-level enumeration, point decomposition, and end-to-end verification."""

from __future__ import annotations

import math

import pytest

from thue1728.arith import is_square, is_squarefree
from thue1728.curves import (
    CurvePoint,
    decompose_point,
    enumerate_curve_points,
    verify_theorems,
)


def brute_points(N: int, x_max: int) -> list[tuple[int, int]]:
    out = []
    for X in range(-math.isqrt(N), x_max + 1):
        v = X**3 - N * X
        if v >= 0 and is_square(v):
            out.append((X, math.isqrt(v)))
    return out


class TestEnumerateCurvePoints:
    def test_n2(self):
        pts = enumerate_curve_points(2, 10**6)
        assert [(p.X, p.Y) for p in pts] == [(-1, 1), (0, 0), (2, 2), (338, 6214)]

    def test_matches_brute_force(self):
        for N in (1, 2, 3, 5, 6, 15, 30, 65, 210):
            got = [(p.X, p.Y) for p in enumerate_curve_points(N, 2000)]
            assert got == brute_points(N, 2000), N

    def test_x_range_includes_negative_lobes(self):
        # points with -sqrt(N) <= X < 0 belong to the bounded real component
        pts = [(p.X, p.Y) for p in enumerate_curve_points(65, 100)]
        assert (-1, 8) in pts  # -1 + 65 = 64
        assert (-4, 14) in pts  # -64 + 260 = 196

    def test_n53_large_generic_point(self):
        pts = [(p.X, p.Y) for p in enumerate_curve_points(53, 10**4)]
        assert (1325, 48230) in pts


class TestDecomposePoint:
    def test_generic_worked(self):
        d = decompose_point(CurvePoint(338, 6214), 2)
        assert d["generic"]
        assert (d["D"], d["y"], d["x"], d["k"]) == (2, 13, 239, -1)

    def test_generic_small(self):
        d = decompose_point(CurvePoint(2, 2), 2)
        assert d["generic"]
        assert (d["D"], d["y"], d["x"], d["k"]) == (2, 1, 1, -1)

    def test_torsion(self):
        d = decompose_point(CurvePoint(0, 0), 2)
        assert not d["generic"]
        assert "2-torsion" in d["reason"]

    def test_bounded_lobe(self):
        d = decompose_point(CurvePoint(-1, 1), 2)
        assert not d["generic"]
        assert "X <= 0" in d["reason"]

    def test_square_x(self):
        # (4, 6) lies on Y^2 = X^3 - 7X and X = 4 is a perfect square
        assert 4**3 - 7 * 4 == 36
        d = decompose_point(CurvePoint(4, 6), 7)
        assert not d["generic"]
        assert "perfect square" in d["reason"]

    def test_decomposition_identity_on_matches(self):
        for N in (2, 5, 6, 30, 53, 65):
            for p in enumerate_curve_points(N, 5000):
                d = decompose_point(p, N)
                if d["generic"]:
                    D, y, x, k = d["D"], d["y"], d["x"], d["k"]
                    assert D > 1 and N % D == 0
                    assert p.X == D * y * y
                    assert x * x - D * y**4 == k
                    assert k == -(N // D)
                    assert p.Y in (D * x * y, -D * x * y)


class TestVerifyTheorems:
    def test_n2_report(self):
        rep = verify_theorems(2, x_max=10**6, y_max=10**4)
        assert rep.ok
        assert rep.violations == []
        assert [(p.X, p.Y) for p in rep.points] == [(-1, 1), (0, 0), (2, 2), (338, 6214)]
        assert rep.generic_count_both_signs == 4
        rows = {r["D"]: r for r in rep.per_divisor}
        assert rows[2]["solutions"] == [(1, 1), (239, 13)]
        assert rows[2]["count_both_signs"] == 4
        assert rows[2]["roundtrip_misses"] == []

    def test_n30_multiple_divisors(self):
        rep = verify_theorems(30, x_max=10**5, y_max=10**3)
        assert rep.ok
        divisors_seen = {r["D"] for r in rep.per_divisor}
        assert divisors_seen == {2, 3, 5, 6, 10, 15, 30}

    def test_n277_boundary_unit(self):
        # the D = 277 negative-Pell unit sits exactly on the fundamental-box edge;
        # the verification must stay exact through the overflow-safe path
        rep = verify_theorems(277, x_max=10**4, y_max=10**3)
        assert rep.ok

    def test_report_dict_shape(self):
        rep = verify_theorems(5, x_max=10**4, y_max=10**3)
        d = rep.as_dict()
        for key in ("N", "points", "per_divisor", "violations", "ok",
                    "curve_bound_log10", "generic_count_both_signs"):
            assert key in d, key

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            verify_theorems(12)
