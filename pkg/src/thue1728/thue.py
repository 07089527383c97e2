"""Quartic Thue equations |F(x, y)| = h: enumeration, classification, counts.

A quartic form with J = 0, I > 0 and four real roots splits every solution
of |F(x, y)| = h by the nearest fourth root of unity to eta/xi, where
(xi, eta) is the resolvent pair of the form (see quartic.resolvent_pair).
Solutions related to the same root form a gap chain: each is roughly the
cube of the previous in |xi|, which is what makes the counting bounds of
this module finite.  Enumeration itself is a box scan over primitive
lattice points (exact integer evaluation); the analytic machinery is used
only to classify and to report gaps, never to decide membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import kernels
from .arith import omega
from .quartic import QuarticForm, ResolventPair, hessian, invariants, resolvent_pair


@dataclass(frozen=True, order=True)
class ThueSolution:
    """A primitive lattice point with F(x, y) on target.

    Canonical representative of the pair {(x, y), (-x, -y)}: y >= 1, or
    (1, 0).  ``value`` is the exact form value F(x, y).
    """

    x: int
    y: int
    value: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.x, self.y)


def enumerate_thue(
    F: QuarticForm,
    h: int,
    box: int,
    mode: str = "exact",
    backend: str | None = None,
) -> list[ThueSolution]:
    """All canonical primitive solutions of |F(x, y)| = h (or <= h) in a box.

    mode "exact" keeps |F| == h; mode "leq" keeps 0 < |F| <= h.  The scan is
    exhaustive over primitive (x, y) with max(|x|, |y|) <= box, so the output
    is exactly the truth restricted to the box -- callers decide whether the
    box was large enough (see bounds and gap reports).
    """
    if h < 0:
        raise ValueError(f"target must be >= 0, got {h}")
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}")
    if mode not in ("exact", "leq"):
        raise ValueError(f"mode must be 'exact' or 'leq', got {mode!r}")
    rows = kernels.thue_scan(F.coeffs, h, box, exact_mode=(mode == "exact"),
                             backend=backend)
    return [ThueSolution(x=u, y=v, value=val) for u, v, val in rows]


# ---------------------------------------------------------------------------
# classification by related root
# ---------------------------------------------------------------------------

_FOURTH_ROOTS = ("1", "i", "-1", "-i")


@dataclass(frozen=True)
class ClassifiedSolution:
    """A Thue solution with its resolvent data.

    ``related_root`` is the fourth root of unity nearest to eta/xi;
    ``large`` says |xi|^4 >= h^3 * scale / 2, the regime where the gap
    principle applies; ``z`` is 1 - (eta/xi)^4, always on the circle
    |1 - z| = 1, with |z| < 2 strictly for irreducible forms.
    """

    solution: ThueSolution
    xi_abs: str
    related_root: str
    large: bool
    z_abs: float
    circle_deviation: float


def classify_solutions(
    F: QuarticForm,
    solutions: list[ThueSolution],
    h: int,
    prec: int = 256,
    tol: float = 1e-9,
    rp: ResolventPair | None = None,
) -> list[ClassifiedSolution]:
    """Attach resolvent invariants to each solution.

    Gates (raise AssertionError, since a violation means the resolvent
    construction itself is wrong, not the data): the resolvent residual is
    checked by resolvent_pair, and every solution must land on the circle
    |1 - z| = 1 within tol.  Everything else is reported, not enforced.
    """
    if rp is None:
        rp = resolvent_pair(F, prec=prec, tol=tol)
    out = []
    with mpmath.workprec(prec):
        for sol in solutions:
            xi = rp.xi(sol.x, sol.y)
            eta = rp.eta(sol.x, sol.y)
            if xi == 0:
                raise AssertionError(
                    f"xi vanishes at {sol.pair}; form is degenerate there"
                )
            w = eta / xi
            z = 1 - w**4
            dev = abs(abs(1 - z) - 1)
            if dev > tol:
                raise AssertionError(
                    f"|1 - z| = {mpmath.nstr(abs(1 - z), 20)} is off the unit "
                    f"circle at {sol.pair} (deviation {mpmath.nstr(dev, 6)})"
                )
            idx = int(mpmath.nint(4 * mpmath.arg(w) / (2 * mpmath.pi))) % 4
            threshold = mpmath.mpf(h) ** 3 * rp.scale / 2
            out.append(
                ClassifiedSolution(
                    solution=sol,
                    xi_abs=mpmath.nstr(abs(xi), 17),
                    related_root=_FOURTH_ROOTS[idx],
                    large=bool(abs(xi) ** 4 >= threshold),
                    z_abs=float(abs(z)),
                    circle_deviation=float(dev),
                )
            )
    return out


def gap_chain_report(
    F: QuarticForm,
    solutions: list[ThueSolution],
    h: int,
    prec: int = 256,
    tol: float = 1e-9,
) -> dict:
    """Group solutions by related root and measure the cubic gaps.

    For solutions s_1, s_2, ... related to the same root, sorted by |xi|,
    the chain ratios |xi_{i+1}| / |xi_i|^3 are compared against the
    reference constant sqrt(3) / (2*pi*h*|A4|^(1/4)) (A4 = trailing Hessian
    coefficient).  The report is diagnostic: it records the observed
    minimum and whether every ratio clears the reference, plus any
    degenerate pair (proportional solutions, which the theory forbids).
    """
    rp = resolvent_pair(F, prec=prec, tol=tol)
    classified = classify_solutions(F, solutions, h, prec=prec, tol=tol, rp=rp)
    A4 = hessian(F).coeffs[4]
    with mpmath.workprec(prec):
        const = mpmath.sqrt(3) / (2 * mpmath.pi * max(h, 1) * abs(A4) ** mpmath.mpf("0.25"))
        groups = {}
        for c in classified:
            groups.setdefault(c.related_root, []).append(c)
        report_groups = []
        degenerate = []
        for root in _FOURTH_ROOTS:
            members = groups.get(root)
            if not members:
                continue
            members.sort(key=lambda c: mpmath.mpf(c.xi_abs))
            for a, b in zip(members, members[1:]):
                sa, sb = a.solution, b.solution
                if sa.x * sb.y == sb.x * sa.y:
                    degenerate.append((sa.pair, sb.pair))
            ratios = []
            for a, b in zip(members, members[1:]):
                xa, xb = mpmath.mpf(a.xi_abs), mpmath.mpf(b.xi_abs)
                if xa > 0:
                    ratios.append(xb / xa**3)
            report_groups.append(
                {
                    "root": root,
                    "solutions": [c.solution.pair for c in members],
                    "xi_abs": [c.xi_abs for c in members],
                    "large_flags": [c.large for c in members],
                    "ratios": [mpmath.nstr(r, 12) for r in ratios],
                    "min_ratio": mpmath.nstr(min(ratios), 12) if ratios else None,
                    "all_above_reference": (
                        all(r >= const for r in ratios) if ratios else True
                    ),
                }
            )
        return {
            "reference_constant": mpmath.nstr(const, 12),
            "scale": mpmath.nstr(rp.scale, 12),
            "groups": report_groups,
            "degenerate_pairs": degenerate,
            "solution_count": len(solutions),
        }


# ---------------------------------------------------------------------------
# counting bounds
# ---------------------------------------------------------------------------


def inequality_count_bound(eps: Fraction) -> int:
    """Bound on primitive solutions of the unit-circle inequality family,
    parametrized by eps in (0, 1/2): 4*floor(log_3((1-eps)/(2*eps))) + 16.

    Exact rational arithmetic throughout; eps at the interval endpoints is
    rejected rather than rounded.
    """
    eps = Fraction(eps)
    if not (0 < eps < Fraction(1, 2)):
        raise ValueError(f"eps must lie in (0, 1/2), got {eps}")
    q = (1 - eps) / (2 * eps)
    # annulus count floor(log_3(q)), clamped at zero: for eps >= 1/4 the
    # ratio q drops below 3 and no annulus contributes, leaving the flat 16
    j = 0
    power = 3
    while power <= q:
        j += 1
        power *= 3
    return 4 * j + 16


def equation_count_bound(h: int) -> int:
    """Bound 12 * 4^omega(h) on primitive solutions of |F(x, y)| = h for a
    quartic with J = 0, I > 0 in the applicable range."""
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    return 12 * 4 ** omega(h)


def applicable_epsilon(I, h: int):
    """Largest eps with h <= sqrt(3) * I^(1/2 - eps) / pi, or None.

    This is the admissibility condition for inequality_count_bound applied
    to a concrete equation; None means no eps in (0, 1/2) works.
    """
    if h < 1 or I <= 1:
        return None
    with mpmath.workprec(96):
        val = mpmath.mpf("0.5") - mpmath.log(h * mpmath.pi / mpmath.sqrt(3)) / mpmath.log(int(I))
        if val <= 0:
            return None
        return float(min(val, mpmath.mpf("0.5") - mpmath.mpf("1e-12")))
