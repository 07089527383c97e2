"""Backend dispatch for the hot scan loops.

Three interchangeable implementations: numba (JIT, default when importable),
numpy (vectorized fallback), exact (pure Python, arbitrary precision).
Selection: THUE1728_BACKEND environment variable, or the `backend=` keyword
on any scan (tests and benchmarks use that).  Results are identical across
backends; the variable affects speed only.

int64 safety: every dispatch computes an exact Python-int bound on the
largest intermediate the kernel can see.  For the square-detection scans
(pell, quartic, curve) a beyond-int64 range switches to a two-pass scheme:
a float prefilter in the fast backend flags every value within a few ulp
of a square (no false negatives by construction), and the rare candidates
are confirmed with exact big-int arithmetic.  The remaining kernels fall
back to the exact implementation wholesale.
"""

from __future__ import annotations

import math
import os

from . import exact_impl

# conservative ceiling: fixup loops square (isqrt+1), so stay under 2^62
_INT64_SAFE = 4_600_000_000_000_000_000

_HAVE_NUMBA = False
try:  # pragma: no cover - exercised via backend tests
    from . import numba_impl

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba_impl = None

from . import numpy_impl


def default_backend() -> str:
    env = os.environ.get("THUE1728_BACKEND", "").strip().lower()
    if env in ("numba", "numpy", "exact"):
        return env
    if env:
        raise ValueError(f"THUE1728_BACKEND must be numba|numpy|exact, got {env!r}")
    return "numba" if _HAVE_NUMBA else "numpy"


def _module(name: str):
    if name == "numba":
        return numba_impl if _HAVE_NUMBA else numpy_impl
    if name == "numpy":
        return numpy_impl
    if name == "exact":
        return exact_impl
    raise ValueError(f"unknown backend {name!r}")


def _impl(backend: str | None, bound: int):
    name = backend if backend is not None else default_backend()
    if bound > _INT64_SAFE:
        return exact_impl
    return _module(name)


def _pairs(rows) -> list[tuple[int, int]]:
    return [(int(a), int(b)) for a, b in rows]


def _triples(rows) -> list[tuple[int, int, int]]:
    return [(int(a), int(b), int(c)) for a, b, c in rows]


def pell_scan(D: int, k: int, y_max: int, backend: str | None = None) -> list[tuple[int, int]]:
    """(x, y) with x^2 - D*y^2 = k, x >= 0, 0 <= y <= y_max, y ascending."""
    name = backend if backend is not None else default_backend()
    bound = D * y_max * y_max + abs(k) + 1
    if bound > _INT64_SAFE and name != "exact":
        out = []
        for y in _module(name).pell_prefilter(D, k, y_max):
            y = int(y)
            v = D * y * y + k
            if v >= 0:
                r = math.isqrt(v)
                if r * r == v:
                    out.append((r, y))
        return out
    return _pairs(_impl(name, bound).pell_scan(D, k, y_max))


def quartic_scan(D: int, k: int, y_max: int, backend: str | None = None) -> list[tuple[int, int]]:
    """(x, y) with x^2 - D*y^4 = k, x >= 0, 1 <= y <= y_max, y ascending."""
    name = backend if backend is not None else default_backend()
    bound = D * y_max**4 + abs(k) + 1
    if bound > _INT64_SAFE and name != "exact":
        out = []
        for y in _module(name).quartic_prefilter(D, k, y_max):
            y = int(y)
            v = D * y**4 + k
            if v >= 0:
                r = math.isqrt(v)
                if r * r == v:
                    out.append((r, y))
        return out
    return _pairs(_impl(name, bound).quartic_scan(D, k, y_max))


def curve_scan(N: int, x_min: int, x_max: int, backend: str | None = None) -> list[tuple[int, int]]:
    """(X, Y>=0) with Y^2 = X^3 - N*X, x_min <= X <= x_max, X ascending."""
    name = backend if backend is not None else default_backend()
    m = max(abs(x_min), abs(x_max))
    bound = m**3 + N * m + 1
    if bound > _INT64_SAFE and name != "exact":
        out = []
        for X in _module(name).curve_prefilter(N, x_min, x_max):
            X = int(X)
            v = X**3 - N * X
            if v >= 0:
                r = math.isqrt(v)
                if r * r == v:
                    out.append((X, r))
        return out
    return _pairs(_impl(name, bound).curve_scan(N, x_min, x_max))


def unit_scan(D: int, u_cap: int, backend: str | None = None) -> tuple[int, int, int] | None:
    """Least-U unit of Z[sqrt(D)]: (T, U, norm) with T^2 - D*U^2 = norm, or None."""
    bound = D * u_cap * u_cap + 1
    t, u, s = _impl(backend, bound).unit_scan(D, u_cap)
    if s == 0:
        return None
    return int(t), int(u), int(s)


def thue_scan(
    coeffs: tuple[int, int, int, int, int],
    h: int,
    box: int,
    exact_mode: bool = True,
    backend: str | None = None,
) -> list[tuple[int, int, int]]:
    """Canonical primitive (u, v, F(u,v)) with |F| = h (or <= h), box-bounded.

    Canonical: v >= 1 with gcd(u,v) = 1, plus the single v = 0 representative
    (1,0).  Order: (1,0) first, then v ascending, u ascending.
    """
    c0, c1, c2, c3, c4 = (int(c) for c in coeffs)
    bound = sum(abs(c) for c in coeffs) * (box**4 if box else 1) + 1
    rows = _impl(backend, bound).thue_scan(c0, c1, c2, c3, c4, h, box, exact_mode)
    return _triples(rows)


def ternary_negx_scan(
    b: int, c: int, y_lim: int, z_lim: int, backend: str | None = None
) -> list[tuple[int, int, int]]:
    """Nonnegative (x,y,z) != (0,0,0) with x^2 = b*y^2 + c*z^2, y <= y_lim, z <= z_lim."""
    bound = abs(b) * y_lim * y_lim + abs(c) * z_lim * z_lim + 1
    return _triples(_impl(backend, bound).ternary_negx_scan(b, c, y_lim, z_lim))
