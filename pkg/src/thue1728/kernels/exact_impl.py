"""Pure-Python exact kernels: arbitrary precision, no overflow ceiling.

Slow path; the dispatcher uses it whenever an int64 intermediate could
overflow, or when THUE1728_BACKEND=exact.
"""

import math


def pell_scan(D, k, y_max):
    out = []
    for y in range(y_max + 1):
        v = D * y * y + k
        if v < 0:
            continue
        r = math.isqrt(v)
        if r * r == v:
            out.append((r, y))
    return out


def quartic_scan(D, k, y_max):
    out = []
    for y in range(1, y_max + 1):
        v = D * y**4 + k
        if v < 0:
            continue
        r = math.isqrt(v)
        if r * r == v:
            out.append((r, y))
    return out


def curve_scan(N, x_min, x_max):
    out = []
    for X in range(x_min, x_max + 1):
        v = X**3 - N * X
        if v < 0:
            continue
        r = math.isqrt(v)
        if r * r == v:
            out.append((X, r))
    return out


def unit_scan(D, u_cap):
    for u in range(1, u_cap + 1):
        w = D * u * u
        r = math.isqrt(w - 1)
        if r * r == w - 1:
            return r, u, -1
        r = math.isqrt(w + 1)
        if r * r == w + 1:
            return r, u, 1
    return 0, 0, 0


def thue_scan(c0, c1, c2, c3, c4, h, box, exact_mode):
    out = []
    if (exact_mode and abs(c0) == h) or (not exact_mode and abs(c0) <= h):
        out.append((1, 0, c0))
    for v in range(1, box + 1):
        v2, v3, v4 = v * v, v**3, v**4
        for u in range(-box, box + 1):
            val = (((c0 * u + c1 * v) * u + c2 * v2) * u + c3 * v3) * u + c4 * v4
            a = abs(val)
            if ((exact_mode and a == h) or (not exact_mode and a <= h)) and math.gcd(u, v) == 1:
                out.append((u, v, val))
    return out


def ternary_negx_scan(b, c, y_lim, z_lim):
    out = []
    for z in range(z_lim + 1):
        cz = c * z * z
        for y in range(y_lim + 1):
            if y == 0 and z == 0:
                continue
            w = b * y * y + cz
            if w < 0:
                continue
            r = math.isqrt(w)
            if r * r == w:
                out.append((r, y, z))
    return out
