"""numba @njit scan kernels.

All kernels assume the caller has verified that every intermediate fits in
int64 (the dispatch layer guards this); math.isqrt is unsupported under
numba, so roots are seeded with float sqrt and fixed up exactly.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _isqrt(v):
    r = np.int64(math.sqrt(v))
    while r * r > v:
        r -= 1
    while (r + 1) * (r + 1) <= v:
        r += 1
    return r


@njit(cache=True)
def pell_scan(D, k, y_max):
    cap = 16
    out = np.empty((cap, 2), np.int64)
    n = 0
    for y in range(y_max + 1):
        v = D * y * y + k
        if v < 0:
            continue
        r = _isqrt(v)
        if r * r == v:
            if n == cap:
                cap *= 2
                tmp = np.empty((cap, 2), np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n, 0] = r
            out[n, 1] = y
            n += 1
    return out[:n].copy()


@njit(cache=True)
def quartic_scan(D, k, y_max):
    cap = 16
    out = np.empty((cap, 2), np.int64)
    n = 0
    for y in range(1, y_max + 1):
        y2 = y * y
        v = D * y2 * y2 + k
        if v < 0:
            continue
        r = _isqrt(v)
        if r * r == v:
            if n == cap:
                cap *= 2
                tmp = np.empty((cap, 2), np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n, 0] = r
            out[n, 1] = y
            n += 1
    return out[:n].copy()


@njit(cache=True)
def curve_scan(N, x_min, x_max):
    cap = 16
    out = np.empty((cap, 2), np.int64)
    n = 0
    for X in range(x_min, x_max + 1):
        v = X * X * X - N * X
        if v < 0:
            continue
        r = _isqrt(v)
        if r * r == v:
            if n == cap:
                cap *= 2
                tmp = np.empty((cap, 2), np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n, 0] = X
            out[n, 1] = r
            n += 1
    return out[:n].copy()


@njit(cache=True)
def unit_scan(D, u_cap):
    """First (T, U, sign) with T^2 - D*U^2 = sign in {+1,-1}, U ascending."""
    for u in range(1, u_cap + 1):
        w = D * u * u
        r = _isqrt(w - 1)
        if r * r == w - 1:
            return r, u, -1
        r = _isqrt(w + 1)
        if r * r == w + 1:
            return r, u, 1
    return 0, 0, 0


@njit(cache=True)
def thue_scan(c0, c1, c2, c3, c4, h, box, exact_mode):
    """Canonical primitive (u,v) with |F(u,v)| = h (exact) or <= h."""
    cap = 16
    out = np.empty((cap, 3), np.int64)
    n = 0
    # v = 0 representative
    if (exact_mode and abs(c0) == h) or (not exact_mode and abs(c0) <= h):
        out[n, 0] = 1
        out[n, 1] = 0
        out[n, 2] = c0
        n += 1
    for v in range(1, box + 1):
        v2 = v * v
        v3 = v2 * v
        v4 = v3 * v
        for u in range(-box, box + 1):
            val = (((c0 * u + c1 * v) * u + c2 * v2) * u + c3 * v3) * u + c4 * v4
            a = -val if val < 0 else val
            if (exact_mode and a == h) or (not exact_mode and a <= h):
                # coprimality
                g0 = -u if u < 0 else u
                g1 = v
                while g1:
                    g0, g1 = g1, g0 % g1
                if g0 != 1:
                    continue
                if n == cap:
                    cap *= 2
                    tmp = np.empty((cap, 3), np.int64)
                    tmp[:n] = out[:n]
                    out = tmp
                out[n, 0] = u
                out[n, 1] = v
                out[n, 2] = val
                n += 1
    return out[:n].copy()


@njit(cache=True)
def ternary_negx_scan(b, c, y_lim, z_lim):
    """Nonnegative (x,y,z) != 0 with x^2 = b*y^2 + c*z^2, y <= y_lim, z <= z_lim."""
    cap = 16
    out = np.empty((cap, 3), np.int64)
    n = 0
    for z in range(z_lim + 1):
        cz = c * z * z
        for y in range(y_lim + 1):
            if y == 0 and z == 0:
                continue
            w = b * y * y + cz
            if w < 0:
                continue
            r = _isqrt(w)
            if r * r == w:
                if n == cap:
                    cap *= 2
                    tmp = np.empty((cap, 3), np.int64)
                    tmp[:n] = out[:n]
                    out = tmp
                out[n, 0] = r
                out[n, 1] = y
                out[n, 2] = z
                n += 1
    return out[:n].copy()


@njit(cache=True, inline="always")
def _near_square(v, vmag):
    """Float test: v is within slack of a perfect square.

    slack covers the worst accumulated rounding of the caller's float
    evaluation (a few ulp of the magnitude sum vmag), so a true square is
    never rejected; false positives are weeded out by the exact confirm
    pass in the dispatcher.
    """
    slack = 1e-14 * vmag + 8.0
    if v < -slack:
        return False
    vv = v if v > 0.0 else 0.0
    # keep r in float64: numba's math.floor yields int64, and r*r would
    # overflow int64 exactly in the beyond-int64 regime this filter serves
    r = math.floor(math.sqrt(vv) + 0.5) * 1.0
    return abs(r * r - v) <= slack


@njit(cache=True)
def pell_prefilter(D, k, y_max):
    """Candidate y where D*y^2 + k could be square; beyond-int64 ranges."""
    cap = 16
    out = np.empty(cap, np.int64)
    n = 0
    kf = k * 1.0
    ka = abs(kf)
    for y in range(y_max + 1):
        yf = y * 1.0
        t = D * yf * yf
        if _near_square(t + kf, t + ka):
            if n == cap:
                cap *= 2
                tmp = np.empty(cap, np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n] = y
            n += 1
    return out[:n].copy()


@njit(cache=True)
def quartic_prefilter(D, k, y_max):
    """Candidate y where D*y^4 + k could be square; beyond-int64 ranges."""
    cap = 16
    out = np.empty(cap, np.int64)
    n = 0
    kf = k * 1.0
    ka = abs(kf)
    for y in range(1, y_max + 1):
        y2 = (y * 1.0) * (y * 1.0)
        t = D * y2 * y2
        if _near_square(t + kf, t + ka):
            if n == cap:
                cap *= 2
                tmp = np.empty(cap, np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n] = y
            n += 1
    return out[:n].copy()


@njit(cache=True)
def curve_prefilter(N, x_min, x_max):
    """Candidate X where X^3 - N*X could be square; beyond-int64 ranges."""
    cap = 16
    out = np.empty(cap, np.int64)
    n = 0
    for X in range(x_min, x_max + 1):
        xf = X * 1.0
        cube = xf * xf * xf
        lin = N * xf
        mag = abs(cube) + abs(lin)
        if _near_square(cube - lin, mag):
            if n == cap:
                cap *= 2
                tmp = np.empty(cap, np.int64)
                tmp[:n] = out[:n]
                out = tmp
            out[n] = X
            n += 1
    return out[:n].copy()
