"""Closed-form count bounds: frozen reference values and dual-evaluation
consistency (direct high-precision vs float log10 computation)."""

from __future__ import annotations

import math

import pytest

from thue1728.arith import is_squarefree
from thue1728.bounds import (
    curve_count_bound,
    quartic_count_bound,
    small_k_count_bound,
    t_bound_check,
    walsh_comparison,
)

CONSISTENCY_TOL = 1e-6


class TestQuarticCountBound:
    def test_frozen_d2(self):
        rep = quartic_count_bound(2, -1)
        assert rep.applicable
        assert float(rep.value) == pytest.approx(720.21930258540619, rel=1e-15)
        assert rep.log10_value == pytest.approx(2.8574647567103444, rel=1e-12)
        assert rep.consistency <= CONSISTENCY_TOL

    def test_frozen_huge_unit(self):
        # D = 9949: the bound only exists in log space (unit^1.5 ~ 10^159)
        rep = quartic_count_bound(9949, -2)
        assert rep.log10_value == pytest.approx(159.64125128696833, rel=1e-12)
        assert rep.consistency <= CONSISTENCY_TOL

    def test_consistency_grid(self):
        for D in (2, 3, 5, 13, 46, 94, 97, 277):
            for k in (-1, -3, -5):
                if math.gcd(D, k) != 1:
                    continue
                rep = quartic_count_bound(D, k)
                assert rep.consistency <= CONSISTENCY_TOL, (D, k)
                assert rep.log10_value >= 0

    def test_scales_with_omega(self):
        # doubling the number of prime factors of k doubles the 2^omega factor
        r1 = quartic_count_bound(7, -1)
        r2 = quartic_count_bound(7, -2)
        # k=-2: omega=1 doubles the count factor, and |k|^(1/2) adds sqrt(2)
        assert float(r2.value) == pytest.approx(float(r1.value) * 2 * math.sqrt(2), rel=1e-12)

    def test_validates(self):
        with pytest.raises(ValueError):
            quartic_count_bound(4, -1)
        with pytest.raises(ValueError):
            quartic_count_bound(2, 3)


class TestSmallKCountBound:
    def test_frozen_thresholds_d2(self):
        rep = small_k_count_bound(2, -1)
        assert not rep.applicable  # |k| = 1 is far above the D = 2 threshold
        joined = " ".join(rep.notes)
        assert "0.0603845241338" in joined
        assert "0.000197322352567" in joined

    def test_applicable_for_large_unit(self):
        # D = 46 has a huge fundamental unit, so the threshold clears |k| = 1
        rep = small_k_count_bound(46, -1)
        assert rep.applicable
        assert float(rep.value) == 40.0

    def test_value_is_flat_40_times_power(self):
        rep = small_k_count_bound(46, -21)
        assert float(rep.value) == 40.0 * 2 ** 2  # omega(21) = 2

    def test_consistency(self):
        for D in (2, 46, 94, 277):
            rep = small_k_count_bound(D, -1)
            assert rep.consistency <= CONSISTENCY_TOL, D


class TestCurveCountBound:
    def test_frozen_values(self):
        r2 = curve_count_bound(2)
        assert float(r2.value) == pytest.approx(720.21930258540619, rel=1e-14)
        r30 = curve_count_bound(30)
        assert float(r30.value) == pytest.approx(65297.499532102964, rel=1e-12)

    def test_n1_not_applicable(self):
        rep = curve_count_bound(1)
        assert not rep.applicable
        assert float(rep.value) == 0

    def test_consistency_all_small_n(self):
        for N in range(2, 80):
            if not is_squarefree(N):
                continue
            rep = curve_count_bound(N)
            assert rep.consistency <= CONSISTENCY_TOL, N

    def test_divisor_sum_dominates_single_term(self):
        # the N-term for D = N alone is a lower bound for the full sum
        import mpmath

        from thue1728.quadratic import fundamental_unit, plus_one_unit

        N = 30
        rep = curve_count_bound(N)
        tp, up = plus_one_unit(N)
        with mpmath.workprec(128):
            unit = mpmath.mpf(tp) + mpmath.mpf(up) * mpmath.sqrt(N)
            term = 384 * mpmath.sqrt(mpmath.mpf(N) / 2) * unit ** mpmath.mpf("1.5") / N
        assert float(rep.value) > float(term)

    def test_non_squarefree_soft_rejects(self):
        rep = curve_count_bound(12)
        assert rep.applicable is False
        assert float(rep.value) == 0.0
        assert any("squarefree" in n for n in rep.notes)

    def test_validates(self):
        with pytest.raises(ValueError):
            curve_count_bound(0)
        with pytest.raises(ValueError):
            curve_count_bound(-6)


class TestWalshComparison:
    def test_frozen_d2(self):
        rep = walsh_comparison(2, -1)
        assert float(rep["flat_bound"]) == 48.0
        assert float(rep["flat_applies_above_y"]) == pytest.approx(
            5060.1858600897458, rel=1e-12
        )
        assert rep["threshold_consistency"] <= CONSISTENCY_TOL

    def test_flat_bound_scales_with_omega(self):
        r1 = walsh_comparison(3, -1)
        r2 = walsh_comparison(3, -10)
        assert float(r2["flat_bound"]) == float(r1["flat_bound"]) * 4  # omega(10) = 2

    def test_threshold_positive_and_finite(self):
        for D, k in ((2, -1), (13, -5), (97, -3)):
            rep = walsh_comparison(D, k)
            assert rep["threshold_log10"] > 0 or rep["flat_applies_above_y"] >= 0


class TestTBoundCheck:
    def test_multiplier_growth_bound_holds_on_grid(self):
        for D in (2, 3, 5, 7, 13, 29):
            for k in (-1, -2, -3, -5, -7, -11):
                if math.gcd(D, k) != 1 or not is_squarefree(k):
                    continue
                rep = t_bound_check(D, k)
                assert rep["all_within"], (D, k, rep)
                for row in rep["orbits"]:
                    assert row["within"]
