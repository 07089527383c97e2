"""Explicit solution-count bounds, each evaluated two independent ways.

Every bound here is a closed-form expression in a fundamental unit
epsilon_D, the number of prime factors of k or N, and algebraic data of the
equation.  Units grow like exp(sqrt(D)), so expressions like epsilon^12
overflow doubles early; each report therefore carries the value computed
directly in arbitrary precision and the base-10 logarithm accumulated in
float log-space, with the relative disagreement recorded.  A disagreement
above 1e-6 means a typo in one of the two evaluations, and the test suite
treats it as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .arith import is_squarefree, omega, squarefree_part
from .quadratic import fundamental_unit


@dataclass
class BoundReport:
    """One evaluated bound: exact inputs, dual-computed value, applicability.

    ``value`` is a decimal string (the direct arbitrary-precision result),
    ``log10_value`` the float log-space evaluation, ``consistency`` the
    relative deviation between the two.
    """

    name: str
    inputs: dict
    value: str
    log10_value: float
    applicable: bool
    consistency: float
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "value": self.value,
            "log10_value": self.log10_value,
            "applicable": self.applicable,
            "consistency": self.consistency,
            "notes": self.notes,
        }


def _report(name, inputs, direct, float_log10, applicable, notes, prec):
    """Package a bound value with its dual-evaluation consistency."""
    with mpmath.workprec(prec):
        direct = mpmath.mpf(direct)
        if direct > 0:
            direct_log10 = mpmath.log10(direct)
            consistency = float(abs(mpmath.expm1(
                mpmath.log(10) * (mpmath.mpf(float_log10) - direct_log10))))
            log10_value = float(direct_log10)
        else:
            consistency = 0.0
            log10_value = float("-inf")
        return BoundReport(
            name=name,
            inputs=inputs,
            value=mpmath.nstr(direct, 17),
            log10_value=log10_value,
            applicable=applicable,
            consistency=consistency,
            notes=list(notes),
        )


def _validate_pair(D: int, k: int) -> None:
    if D < 2 or not is_squarefree(D):
        raise ValueError(f"D must be squarefree and >= 2, got {D}")
    if k >= 0 or not is_squarefree(k):
        raise ValueError(f"k must be negative and squarefree, got {k}")
    if math.gcd(D, k) != 1:
        raise ValueError(f"D and k must be coprime, got gcd {math.gcd(D, k)}")


def quartic_count_bound(D: int, k: int, prec: int = 256) -> BoundReport:
    """384 * 2^omega(k) * epsilon_D^(3/2) * sqrt(|k| / (2*D)).

    Bounds the integral solutions (x, y) of x^2 - D*y^4 = k with y > 0.
    """
    _validate_pair(D, k)
    unit = fundamental_unit(D)
    w = omega(k)
    log_eps = unit.log_value()  # float, natural log
    float_log10 = (
        math.log10(384)
        + w * math.log10(2)
        + 1.5 * log_eps / math.log(10)
        + 0.5 * (math.log10(abs(k)) - math.log10(2 * D))
    )
    with mpmath.workprec(prec):
        eps = unit.T + unit.U * mpmath.sqrt(D)
        direct = 384 * mpmath.mpf(2) ** w * eps ** mpmath.mpf("1.5") * mpmath.sqrt(
            mpmath.mpf(abs(k)) / (2 * D)
        )
        return _report(
            "quartic_count_bound",
            {"D": D, "k": k, "omega_k": w, "unit": (unit.T, unit.U), "unit_norm": unit.norm},
            direct,
            float_log10,
            True,
            [],
            prec,
        )


def small_k_count_bound(D: int, k: int, prec: int = 256) -> BoundReport:
    """40 * 2^omega(k), valid when |k| is below an explicit threshold.

    The admissibility threshold is pi^6 / (2^14 * 3^(11/2)) * epsilon_D^12
    / D^(13/2).  A variant reading with a bare pi in place of pi^6
    circulates; both are evaluated and reported, the pi^6 reading decides
    ``applicable``.
    """
    _validate_pair(D, k)
    unit = fundamental_unit(D)
    w = omega(k)
    log_eps = unit.log_value()
    with mpmath.workprec(prec):
        eps = unit.T + unit.U * mpmath.sqrt(D)
        denom = mpmath.mpf(2) ** 14 * mpmath.mpf(3) ** (mpmath.mpf(11) / 2)
        threshold6 = mpmath.pi**6 / denom * eps**12 / mpmath.mpf(D) ** (mpmath.mpf(13) / 2)
        threshold1 = mpmath.pi / denom * eps**12 / mpmath.mpf(D) ** (mpmath.mpf(13) / 2)
        applicable = bool(abs(k) <= threshold6)
        float_log10 = math.log10(40) + w * math.log10(2)
        notes = [
            f"threshold (pi^6 reading): {mpmath.nstr(threshold6, 12)}",
            f"threshold (pi reading): {mpmath.nstr(threshold1, 12)}",
            f"|k| = {abs(k)} is {'within' if applicable else 'beyond'} the pi^6 threshold",
        ]
        # the bound itself never overflows; the thresholds carry the unit
        # power, so cross-check the threshold in log space instead
        thr_log10 = (
            6 * math.log10(math.pi)
            - 14 * math.log10(2)
            - 5.5 * math.log10(3)
            + 12 * log_eps / math.log(10)
            - 6.5 * math.log10(D)
        )
        consistency = float(abs(mpmath.expm1(
            mpmath.log(10) * (mpmath.mpf(thr_log10) - mpmath.log10(threshold6)))))
        rep = _report(
            "small_k_count_bound",
            {"D": D, "k": k, "omega_k": w, "unit": (unit.T, unit.U)},
            mpmath.mpf(40) * 2**w,
            float_log10,
            applicable,
            notes,
            prec,
        )
        rep.consistency = max(rep.consistency, consistency)
        return rep


def curve_count_bound(N: int, prec: int = 256) -> BoundReport:
    """384 * sqrt(N/2) * sum over divisors D > 1 of N of
    2^omega(N/D) * epsilon_D^(3/2) / D.

    Bounds the integral points (X, Y) with Y != 0 and X nonsquare on
    Y^2 = X^3 - N*X for squarefree N.  N = 1 has no admissible divisor;
    the sum is empty and the bound degenerates to 0 (noted).  A
    non-squarefree N is outside the theorem's hypotheses: the report
    comes back with ``applicable`` False instead of raising.
    """
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    from .arith import divisors as _divisors

    if not is_squarefree(N):
        with mpmath.workprec(prec):
            return _report(
                "curve_count_bound",
                {"N": N, "divisor_terms": []},
                mpmath.mpf(0),
                float("-inf"),
                False,
                ["N is not squarefree: the divisor-sum bound presupposes squarefree N"],
                prec,
            )

    terms = []
    float_sum_log10 = None
    with mpmath.workprec(prec):
        total = mpmath.mpf(0)
        for D in _divisors(N):
            if D == 1:
                continue
            unit = fundamental_unit(D)
            eps = unit.T + unit.U * mpmath.sqrt(D)
            w = omega(N // D) if N // D > 1 else 0
            term = mpmath.mpf(2) ** w * eps ** mpmath.mpf("1.5") / D
            total += term
            term_log10 = (
                w * math.log10(2) + 1.5 * unit.log_value() / math.log(10) - math.log10(D)
            )
            terms.append((D, w, (unit.T, unit.U), term_log10))
        direct = 384 * mpmath.sqrt(mpmath.mpf(N) / 2) * total
        if terms:
            # accumulate the float evaluation in log space term by term
            m = max(t[3] for t in terms)
            s = sum(10.0 ** (t[3] - m) for t in terms)
            float_sum_log10 = (
                math.log10(384) + 0.5 * (math.log10(N) - math.log10(2)) + m + math.log10(s)
            )
        notes = []
        if not terms:
            notes.append("no divisor D > 1: empty sum, bound degenerates to 0")
        return _report(
            "curve_count_bound",
            {"N": N, "divisor_terms": [(d, w, u) for d, w, u, _ in terms]},
            direct,
            float_sum_log10 if float_sum_log10 is not None else float("-inf"),
            bool(terms),
            notes,
            prec,
        )


def walsh_comparison(D: int, k: int, prec: int = 256) -> dict:
    """Compare the unit-power bound with the flat 48 * 2^omega(k) bound.

    The flat bound applies only to solutions with y above an explicit
    height threshold 2^(5/4) * |k|^(39/4) * epsilon_D^(45/4) / D^(13/4);
    the comparison reports both bounds, the threshold, and their ratio.
    """
    _validate_pair(D, k)
    unit = fundamental_unit(D)
    w = omega(k)
    ours = quartic_count_bound(D, k, prec=prec)
    with mpmath.workprec(prec):
        eps = unit.T + unit.U * mpmath.sqrt(D)
        flat = mpmath.mpf(48) * 2**w
        threshold = (
            mpmath.mpf(2) ** (mpmath.mpf(5) / 4)
            * mpmath.mpf(abs(k)) ** (mpmath.mpf(39) / 4)
            * eps ** (mpmath.mpf(45) / 4)
            / mpmath.mpf(D) ** (mpmath.mpf(13) / 4)
        )
        thr_log10 = (
            1.25 * math.log10(2)
            + 9.75 * math.log10(abs(k))
            + 11.25 * unit.log_value() / math.log(10)
            - 3.25 * math.log10(D)
        )
        consistency = float(abs(mpmath.expm1(
            mpmath.log(10) * (mpmath.mpf(thr_log10) - mpmath.log10(threshold)))))
        return {
            "D": D,
            "k": k,
            "unit_power_bound": ours.value,
            "unit_power_log10": ours.log10_value,
            "flat_bound": mpmath.nstr(flat, 17),
            "flat_applies_above_y": mpmath.nstr(threshold, 17),
            "threshold_log10": float(mpmath.log10(threshold)),
            "threshold_consistency": consistency,
            "ratio_log10": ours.log10_value - float(mpmath.log10(flat)),
            "notes": [
                "the flat bound counts only solutions with y above the threshold",
                "below the threshold the unit-power bound is the operative one",
            ],
        }


def t_bound_check(D: int, k: int, prec: int = 256) -> dict:
    """Check every orbit fundamental against t <= epsilon^(3/2) * sqrt(|k|/(2D)).

    Returns per-orbit booleans; a violation is reported, not raised, since
    the bound constrains the multiplier size used in the reduction and a
    failure would indicate an orbit-normalization bug.
    """
    from .pell import orbits as _orbits

    _validate_pair(D, k)
    unit = fundamental_unit(D)
    with mpmath.workprec(prec):
        eps = unit.T + unit.U * mpmath.sqrt(D)
        limit = eps ** mpmath.mpf("1.5") * mpmath.sqrt(mpmath.mpf(abs(k)) / (2 * D))
        rows = []
        ok = True
        for orb in _orbits(D, k):
            t = abs(orb.fundamental.y)
            good = bool(mpmath.mpf(t) <= limit)
            ok = ok and good
            rows.append({"fundamental": (orb.fundamental.x, orb.fundamental.y),
                         "t": t, "within": good})
        return {
            "D": D,
            "k": k,
            "limit": mpmath.nstr(limit, 17),
            "orbits": rows,
            "all_within": ok,
        }
