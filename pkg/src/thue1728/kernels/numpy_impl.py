"""Vectorized numpy fallbacks for the scan kernels.

Output arrays and their ordering match numba_impl exactly; the dispatch
layer's tests assert element-for-element agreement.
"""

import numpy as np

_CHUNK = 1 << 20


def _isqrt_arr(v):
    # float sqrt seed, then exact integer fixup (|error| <= 2 at int64 scale)
    r = np.sqrt(v.astype(np.float64)).astype(np.int64)
    for _ in range(2):
        r = np.where(r * r > v, r - 1, r)
    for _ in range(2):
        r = np.where((r + 1) * (r + 1) <= v, r + 1, r)
    return r


def _square_filter(v):
    ok = v >= 0
    vv = np.where(ok, v, 0)
    r = _isqrt_arr(vv)
    return ok & (r * r == vv), r


def pell_scan(D, k, y_max):
    y = np.arange(0, y_max + 1, dtype=np.int64)
    mask, r = _square_filter(D * y * y + k)
    return np.column_stack((r[mask], y[mask]))


def quartic_scan(D, k, y_max):
    y = np.arange(1, y_max + 1, dtype=np.int64)
    y2 = y * y
    mask, r = _square_filter(D * y2 * y2 + k)
    return np.column_stack((r[mask], y[mask]))


def curve_scan(N, x_min, x_max):
    outs = []
    for lo in range(x_min, x_max + 1, _CHUNK):
        X = np.arange(lo, min(lo + _CHUNK, x_max + 1), dtype=np.int64)
        mask, r = _square_filter(X * X * X - N * X)
        outs.append(np.column_stack((X[mask], r[mask])))
    return np.concatenate(outs) if outs else np.empty((0, 2), np.int64)


def unit_scan(D, u_cap):
    for lo in range(1, u_cap + 1, _CHUNK):
        u = np.arange(lo, min(lo + _CHUNK, u_cap + 1), dtype=np.int64)
        w = D * u * u
        m_minus, r_minus = _square_filter(w - 1)
        m_plus, r_plus = _square_filter(w + 1)
        hit = m_minus | m_plus
        if hit.any():
            i = int(np.argmax(hit))
            if m_minus[i]:
                return int(r_minus[i]), int(u[i]), -1
            return int(r_plus[i]), int(u[i]), 1
    return 0, 0, 0


def thue_scan(c0, c1, c2, c3, c4, h, box, exact_mode):
    rows = []
    if (exact_mode and abs(c0) == h) or (not exact_mode and abs(c0) <= h):
        rows.append(np.array([[1, 0, c0]], dtype=np.int64))
    u = np.arange(-box, box + 1, dtype=np.int64)
    au = np.abs(u)
    for v in range(1, box + 1):
        v2 = v * v
        vals = (((c0 * u + c1 * v) * u + c2 * v2) * u + c3 * v2 * v) * u + c4 * v2 * v2
        a = np.abs(vals)
        mask = (a == h) if exact_mode else (a <= h)
        mask &= np.gcd(au, v) == 1
        if mask.any():
            rows.append(np.column_stack((u[mask], np.full(int(mask.sum()), v, np.int64), vals[mask])))
    return np.concatenate(rows) if rows else np.empty((0, 3), np.int64)


def ternary_negx_scan(b, c, y_lim, z_lim):
    rows = []
    y = np.arange(0, y_lim + 1, dtype=np.int64)
    by2 = b * y * y
    for z in range(z_lim + 1):
        w = by2 + c * z * z
        mask, r = _square_filter(w)
        if z == 0:
            mask[0] = False  # (0,0) excluded
        if mask.any():
            rows.append(np.column_stack((r[mask], y[mask], np.full(int(mask.sum()), z, np.int64))))
    return np.concatenate(rows) if rows else np.empty((0, 3), np.int64)


def _near_square_mask(v, vmag):
    # mirror of the numba prefilter: generous ulp-proportional slack, so a
    # true square never fails; the dispatcher confirms candidates exactly
    slack = 1e-14 * vmag + 8.0
    vv = np.maximum(v, 0.0)
    r = np.floor(np.sqrt(vv) + 0.5)
    return (v >= -slack) & (np.abs(r * r - v) <= slack)


def pell_prefilter(D, k, y_max):
    chunks = []
    for lo in range(0, y_max + 1, _CHUNK):
        y = np.arange(lo, min(lo + _CHUNK, y_max + 1), dtype=np.int64)
        yf = y.astype(np.float64)
        t = D * yf * yf
        sel = _near_square_mask(t + k, t + abs(k))
        chunks.append(y[sel])
    return np.concatenate(chunks) if chunks else np.empty(0, np.int64)


def quartic_prefilter(D, k, y_max):
    chunks = []
    for lo in range(1, y_max + 1, _CHUNK):
        y = np.arange(lo, min(lo + _CHUNK, y_max + 1), dtype=np.int64)
        yf = y.astype(np.float64)
        y2 = yf * yf
        t = D * y2 * y2
        sel = _near_square_mask(t + k, t + abs(k))
        chunks.append(y[sel])
    return np.concatenate(chunks) if chunks else np.empty(0, np.int64)


def curve_prefilter(N, x_min, x_max):
    chunks = []
    for lo in range(x_min, x_max + 1, _CHUNK):
        X = np.arange(lo, min(lo + _CHUNK, x_max + 1), dtype=np.int64)
        xf = X.astype(np.float64)
        cube = xf * xf * xf
        lin = N * xf
        sel = _near_square_mask(cube - lin, np.abs(cube) + np.abs(lin))
        chunks.append(X[sel])
    return np.concatenate(chunks) if chunks else np.empty(0, np.int64)
