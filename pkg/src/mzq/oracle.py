"""Reference tensor quadrature grids, exact on polynomials up to a stated degree.

These grids are the independent integration route used to validate basis
orthonormality, projections, and error norms: Gauss-Jacobi radially on the
ball (in s = 2r^2 - 1), Gauss-Legendre in the polar angle on the sphere, and
equispaced trapezoid in the periodic angle (exact for trigonometric
polynomials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .basis import CoefficientVector, degree_offsets, eval_basis_block
from .domains import Domain, weight_normalization


@dataclass(frozen=True)
class OracleGrid:
    domain: Domain
    points: np.ndarray
    weights: np.ndarray
    exact_degree: int

    def integrate(self, values: np.ndarray) -> float:
        values = np.asarray(values, dtype=float)
        if values.shape != self.weights.shape:
            raise ValueError("value array does not match the grid")
        return float(np.dot(self.weights, values))

    def integrate_function(self, f) -> float:
        return self.integrate(f(self.points))


def _interval_grid(domain: Domain, exact_degree: int) -> OracleGrid:
    order = max(1, (exact_degree + 2) // 2)
    a = domain.mu - 0.5
    s, v = roots_jacobi(order, a, a)
    w = v * weight_normalization(domain)
    return OracleGrid(domain, s[:, None], w, 2 * order - 1)


def _disk_grid(domain: Domain, exact_degree: int, n_radial: int | None = None,
               n_angular: int | None = None) -> OracleGrid:
    nr = n_radial if n_radial is not None else exact_degree // 4 + 2
    na = n_angular if n_angular is not None else exact_degree + 1
    s, v = roots_jacobi(nr, domain.mu - 0.5, 0.0)
    r = np.sqrt((1.0 + s) / 2.0)
    theta = 2.0 * np.pi * np.arange(na) / na
    scale = weight_normalization(domain) * (2.0 * np.pi / na) * 2.0 ** (-domain.mu - 1.5)
    pts = np.empty((nr * na, 2))
    pts[:, 0] = np.outer(r, np.cos(theta)).ravel()
    pts[:, 1] = np.outer(r, np.sin(theta)).ravel()
    w = np.repeat(scale * v, na)
    exact = min(4 * nr - 2, na - 1)
    return OracleGrid(domain, pts, w, exact)


def _sphere_grid(domain: Domain, exact_degree: int, n_polar: int | None = None,
                 n_angular: int | None = None) -> OracleGrid:
    nl = n_polar if n_polar is not None else (exact_degree + 2) // 2 + 1
    na = n_angular if n_angular is not None else exact_degree + 1
    t, v = roots_legendre(nl)
    sin_theta = np.sqrt(np.clip(1.0 - t * t, 0.0, None))
    phi = 2.0 * np.pi * np.arange(na) / na
    pts = np.empty((nl * na, 3))
    pts[:, 0] = np.outer(sin_theta, np.cos(phi)).ravel()
    pts[:, 1] = np.outer(sin_theta, np.sin(phi)).ravel()
    pts[:, 2] = np.repeat(t, na)
    w = np.repeat(v / (2.0 * na), na)
    exact = min(2 * nl - 1, na - 1)
    return OracleGrid(domain, pts, w, exact)


def oracle_grid(domain: Domain, exact_degree: int) -> OracleGrid:
    """Grid integrating all polynomials of total degree <= exact_degree against
    the domain's reference probability measure."""
    if exact_degree < 0:
        raise ValueError("exact_degree must be >= 0")
    if domain.kind == "interval":
        return _interval_grid(domain, exact_degree)
    if domain.kind == "disk":
        return _disk_grid(domain, exact_degree)
    return _sphere_grid(domain, exact_degree)


def oracle_grid_by_size(domain: Domain, min_nodes: int) -> OracleGrid:
    """Dense weighted grid with at least min_nodes nodes, for measure estimation."""
    if domain.kind == "interval":
        return _interval_grid(domain, 2 * min_nodes)
    if domain.kind == "disk":
        na = max(8, math.ceil(2.0 * math.sqrt(min_nodes)))
        nr = max(4, -(-min_nodes // na))
        return _disk_grid(domain, 4 * nr - 2, n_radial=nr, n_angular=na)
    na = max(8, math.ceil(math.sqrt(2.0 * min_nodes)))
    nl = max(4, -(-min_nodes // na))
    return _sphere_grid(domain, 2 * nl - 1, n_polar=nl, n_angular=na)


def default_exact_degree(max_degree: int) -> int:
    """Default oracle exactness for tests touching polynomials of a given degree."""
    return 2 * max_degree + 8


def gram_matrix(domain: Domain, max_degree: int, grid: OracleGrid | None = None) -> np.ndarray:
    """Gram matrix of the basis under oracle quadrature; identity when the basis
    is orthonormal and the grid is exact."""
    if grid is None:
        grid = oracle_grid(domain, default_exact_degree(max_degree))
    block = eval_basis_block(domain, max_degree, grid.points)
    return block.T @ (grid.weights[:, None] * block)


def project(domain: Domain, max_degree: int, f, grid: OracleGrid | None = None) -> CoefficientVector:
    """Expansion coefficients of a function by oracle quadrature of f * phi_nk."""
    if grid is None:
        grid = oracle_grid(domain, default_exact_degree(max_degree))
    values = np.asarray(f(grid.points), dtype=float)
    block = eval_basis_block(domain, max_degree, grid.points)
    coeffs = block.T @ (grid.weights * values)
    return CoefficientVector(domain, max_degree, coeffs)


def lq_norm(domain: Domain, f, q: float, grid: OracleGrid) -> float:
    """Weighted Lq norm of a callable on the grid."""
    vals = np.abs(np.asarray(f(grid.points), dtype=float))
    return float(np.dot(grid.weights, vals**q) ** (1.0 / q))
