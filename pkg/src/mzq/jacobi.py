"""Orthonormal Jacobi polynomials via three-term recurrences.

Normalization is against the *probability* Jacobi measure on [-1, 1]
proportional to (1-s)^alpha (1+s)^beta, so p_0 = 1 identically.
"""

from __future__ import annotations

from math import lgamma

import numpy as np
from scipy.special import roots_jacobi


def recurrence_coefficients(alpha: float, beta: float, jmax: int):
    """Diagonal b_j and off-diagonal a_j of the Jacobi matrix, j = 0..jmax.

    The orthonormal family satisfies s p_j = a_{j+1} p_{j+1} + b_j p_j + a_j p_{j-1};
    a[0] is unused and set to 0.
    """
    if alpha <= -1 or beta <= -1:
        raise ValueError("Jacobi parameters must exceed -1")
    s = alpha + beta
    b = np.zeros(jmax + 1)
    a = np.zeros(jmax + 1)
    b[0] = (beta - alpha) / (s + 2.0)
    for j in range(1, jmax + 1):
        denom = (2.0 * j + s) * (2.0 * j + s + 2.0)
        b[j] = (beta * beta - alpha * alpha) / denom
        if j == 1:
            a2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) ** 2 * (3.0 + s))
        else:
            a2 = (
                4.0 * j * (j + alpha) * (j + beta) * (j + s)
                / ((2.0 * j + s) ** 2 * (2.0 * j + s + 1.0) * (2.0 * j + s - 1.0))
            )
        a[j] = np.sqrt(a2)
    return a, b


def orthonormal_jacobi(alpha: float, beta: float, jmax: int, s: np.ndarray) -> np.ndarray:
    """Evaluate p_0..p_jmax at the points s; returns shape (jmax+1,) + s.shape."""
    s = np.asarray(s, dtype=float)
    out = np.empty((jmax + 1,) + s.shape)
    out[0] = 1.0
    if jmax == 0:
        return out
    a, b = recurrence_coefficients(alpha, beta, jmax)
    out[1] = (s - b[0]) / a[1]
    for j in range(1, jmax):
        out[j + 1] = ((s - b[j]) * out[j] - a[j] * out[j - 1]) / a[j + 1]
    return out


def gauss_jacobi(order: int, alpha: float, beta: float):
    """Nodes and weights for integrating f(s)(1-s)^alpha (1+s)^beta ds over [-1, 1]."""
    if order < 1:
        raise ValueError("quadrature order must be >= 1")
    return roots_jacobi(order, alpha, beta)


def jacobi_mass(alpha: float, beta: float) -> float:
    """Total mass of (1-s)^alpha (1+s)^beta on [-1, 1] (log-gamma evaluation)."""
    return float(
        np.exp(
            (alpha + beta + 1.0) * np.log(2.0)
            + lgamma(alpha + 1.0)
            + lgamma(beta + 1.0)
            - lgamma(alpha + beta + 2.0)
        )
    )


def disk_angular_norm(mu: float, m: int) -> float:
    """Normalizing constant for the disk block with angular order m.

    Makes c * p_j(2r^2-1) * r^m * {cos, sin}(m theta) a unit vector under the
    probability measure with density b_2^mu (1-r^2)^(mu-1/2).
    """
    if m == 0:
        return 1.0
    return float(np.sqrt(2.0 * np.exp(lgamma(mu + m + 1.5) - lgamma(mu + 1.5) - lgamma(m + 1.0))))
