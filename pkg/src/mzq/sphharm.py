"""Real spherical harmonics on S^2, orthonormal under normalized surface measure.

Uses fully normalized associated Legendre recurrences (stable to high degree);
with this scaling the degree-n harmonics satisfy sum_k Y_nk(x)^2 = 2n+1.
"""

from __future__ import annotations

import numpy as np


def _alf_block(nmax: int, m: int, t: np.ndarray, sin_theta_m: np.ndarray) -> np.ndarray:
    """Normalized associated Legendre values for order m, degrees m..nmax.

    sin_theta_m is (1-t^2)^(m/2), maintained by the caller as a running product.
    Returns shape (nmax - m + 1, len(t)).
    """
    out = np.empty((nmax - m + 1, t.shape[0]))
    # diagonal start: prod_{i<=m} sqrt((2i+1)/(2i)) * (1-t^2)^(m/2)
    diag = 1.0
    for i in range(1, m + 1):
        diag *= np.sqrt((2.0 * i + 1.0) / (2.0 * i))
    out[0] = diag * sin_theta_m
    if nmax == m:
        return out
    out[1] = np.sqrt(2.0 * m + 3.0) * t * out[0]
    for n in range(m + 2, nmax + 1):
        a = np.sqrt((n * n - m * m) / ((2.0 * n - 1.0) * (2.0 * n + 1.0)))
        b = np.sqrt(((n - 1.0) ** 2 - m * m) / ((2.0 * n - 3.0) * (2.0 * n - 1.0)))
        out[n - m] = (t * out[n - m - 1] - b * out[n - m - 2]) / a
    return out


def sphere_block(nmax: int, points: np.ndarray) -> np.ndarray:
    """Evaluate all real harmonics of degree <= nmax at unit vectors (k, 3).

    Column layout per degree n: m=0, then (cos, sin) pairs for m = 1..n,
    giving 2n+1 columns; degree blocks are stored consecutively.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    norms = np.linalg.norm(pts, axis=1)
    pts = pts / norms[:, None]
    t = pts[:, 2]
    phi = np.arctan2(pts[:, 1], pts[:, 0])
    sin_theta = np.sqrt(np.clip(1.0 - t * t, 0.0, None))

    k = pts.shape[0]
    out = np.empty((k, (nmax + 1) ** 2))
    sin_theta_m = np.ones(k)
    root2 = np.sqrt(2.0)
    for m in range(nmax + 1):
        if m > 0:
            sin_theta_m = sin_theta_m * sin_theta
        block = _alf_block(nmax, m, t, sin_theta_m)
        if m == 0:
            for n in range(nmax + 1):
                out[:, n * n] = block[n]
        else:
            c = root2 * np.cos(m * phi)
            s = root2 * np.sin(m * phi)
            for n in range(m, nmax + 1):
                base = n * n
                out[:, base + 2 * m - 1] = block[n - m] * c
                out[:, base + 2 * m] = block[n - m] * s
    return out


def sphere_basis(n: int, k: int, x) -> float:
    """Single real harmonic Y_nk at a unit vector x; k runs 1..2n+1."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not 1 <= k <= 2 * n + 1:
        raise ValueError(f"within-index {k} out of range for degree {n}")
    pt = np.asarray(x, dtype=float).reshape(1, 3)
    if abs(np.linalg.norm(pt) - 1.0) > 1e-12:
        raise ValueError("point not on the unit sphere within tolerance")
    block = sphere_block(n, pt)
    return float(block[0, n * n + (k - 1)])
