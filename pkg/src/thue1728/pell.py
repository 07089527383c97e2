"""Solutions of x^2 - D*y^2 = k and their partition into unit orbits.

Two solutions are in the same orbit when (x1*x2 - y1*y2*D)/k and
(y1*x2 - y2*x1)/k are both integers; that detects multiplication by +-(unit
of norm +1).  Each orbit has a unique fundamental solution with least
positive y, and the fundamental sits inside explicit bounds in terms of the
least norm-(+1) unit (T', U'):

    2*(T'-1)*y*^2 <= U'^2*|k|      and      2*x*^2 <= (T'-1)*|k|

(stated strictly in the classical lemma; equality happens, e.g. D=2, k=-1,
so comparisons here are exact in integers and boundary hits are flagged).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .arith import is_squarefree, omega
from .quadratic import fundamental_unit, plus_one_unit


@dataclass(frozen=True, order=True)
class PellSolution:
    x: int
    y: int


@dataclass
class PellOrbit:
    D: int
    k: int
    fundamental: PellSolution
    members_found: list[PellSolution]
    coprime: bool
    plus_unit: tuple[int, int]
    unit_norm: int
    y_at_boundary: bool = False
    x_at_boundary: bool = False
    notes: list[str] = field(default_factory=list)


def _check_dk(D: int, k: int) -> None:
    if D < 2 or math.isqrt(D) ** 2 == D:
        raise ValueError(f"D must be a nonsquare >= 2, got {D}")
    if k == 0:
        raise ValueError("k must be nonzero")


def enumerate_pell(D: int, k: int, y_max: int, backend: str | None = None) -> list[PellSolution]:
    """All solutions with 0 <= y <= y_max, both signs of x, (y, x) ascending."""
    _check_dk(D, k)
    out: list[PellSolution] = []
    for x, y in kernels.pell_scan(D, k, y_max, backend=backend):
        if x == 0:
            out.append(PellSolution(0, y))
        else:
            out.append(PellSolution(-x, y))
            out.append(PellSolution(x, y))
    out.sort(key=lambda s: (s.y, s.x))
    return out


def _is_solution(D: int, k: int, s: PellSolution) -> bool:
    return s.x * s.x - D * s.y * s.y == k


def same_orbit(D: int, k: int, s1: PellSolution, s2: PellSolution) -> bool:
    """Exact integrality test for unit-orbit equivalence."""
    _check_dk(D, k)
    for s in (s1, s2):
        if not _is_solution(D, k, s):
            raise ValueError(f"{s} does not solve x^2 - {D}*y^2 = {k}")
    t1 = s1.x * s2.x - s1.y * s2.y * D
    t2 = s1.y * s2.x - s2.y * s1.x
    return t1 % k == 0 and t2 % k == 0


def unit_apply(s: PellSolution, T: int, U: int, D: int) -> PellSolution:
    """Multiply x + y*sqrt(D) by T + U*sqrt(D)."""
    return PellSolution(s.x * T + s.y * U * D, s.x * U + s.y * T)


def fundamental_bounds(D: int, k: int) -> tuple[int, tuple[int, int]]:
    """(largest admissible y for a fundamental, the (T',U') used)."""
    tp, up = plus_one_unit(D)
    y_box = math.isqrt(up * up * abs(k) // (2 * (tp - 1)))
    return y_box, (tp, up)


def orbits(D: int, k: int, backend: str | None = None) -> list[PellOrbit]:
    """Partition all solutions into unit orbits; one fundamental each.

    Fundamental = least positive y in the orbit; when both signs of x occur
    at that y the positive one is chosen.
    """
    _check_dk(D, k)
    y_box, (tp, up) = fundamental_bounds(D, k)
    unorm = fundamental_unit(D).norm
    sols = enumerate_pell(D, k, y_box, backend=backend)
    groups: list[list[PellSolution]] = []
    for s in sols:
        for g in groups:
            if same_orbit(D, k, g[0], s):
                g.append(s)
                break
        else:
            groups.append([s])
    out: list[PellOrbit] = []
    for g in groups:
        g.sort(key=lambda s: (s.y, -s.x))  # prefer positive x at minimal y
        fund = g[0]
        g.sort(key=lambda s: (s.y, s.x))
        orb = PellOrbit(
            D=D,
            k=k,
            fundamental=fund,
            members_found=g,
            coprime=math.gcd(fund.x, fund.y) == 1,
            plus_unit=(tp, up),
            unit_norm=unorm,
            y_at_boundary=2 * (tp - 1) * fund.y**2 == up * up * abs(k),
            x_at_boundary=2 * fund.x**2 == (tp - 1) * abs(k),
        )
        if 2 * fund.x**2 > (tp - 1) * abs(k):
            orb.notes.append("fundamental x exceeds classical bound")
        if unorm == -1:
            orb.notes.append("minimal unit has norm -1; orbit action uses its square")
        out.append(orb)
    out.sort(key=lambda o: (o.fundamental.y, o.fundamental.x))
    return out


def orbit_count_bound(k: int) -> int:
    """Upper bound 2^omega(k) for the number of coprime-solution orbits; k squarefree."""
    if not is_squarefree(k):
        raise ValueError(f"bound requires squarefree k, got {k}")
    return 2 ** omega(k)
